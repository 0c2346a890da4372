#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "quiverhh/corpus.hpp"
#include "quiverhh/cycles.hpp"
#include "quiverhh/error.hpp"
#include "support.hpp"

using namespace quiverhh;

namespace {

OrientedCycle cycle_of(const Algebra& a, std::initializer_list<const char*> names)
{
    std::vector<std::size_t> ids;
    for (const char* n : names)
        ids.push_back(arrow(a, n));
    return OrientedCycle(a.quiver(), ids);
}

std::vector<std::size_t> brute_least_rotation(const std::vector<std::size_t>& w)
{
    auto best = w;
    for (std::size_t r = 1; r < w.size(); ++r) {
        std::vector<std::size_t> rot(w.begin() + r, w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + r);
        best = std::min(best, rot);
    }
    return best;
}

} // namespace

TEST_CASE("least rotation matches brute force")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<std::size_t> w(1 + rng() % 9);
        for (auto& x : w)
            x = rng() % 3;
        CHECK(least_rotation(w) == brute_least_rotation(w));
        auto off = least_rotation_offset(w);
        CHECK(off < w.size());
    }
}

TEST_CASE("oriented cycle basics")
{
    auto cc = load("cubic_cycle.quiver");
    auto c = cycle_of(cc, {"a2", "a1"});
    CHECK(c.canonical_rotation() == std::vector<std::size_t>{0, 1});
    CHECK(c.is_aperiodic());
    CHECK_FALSE(c.repeated(2).is_aperiodic());
    CHECK(c.rotated(1).arrows() == std::vector<std::size_t>{0, 1});
    CHECK(c.window(1, 3) == path(cc, {"a1", "a2", "a1"}));
    CHECK(c.to_string(cc.quiver()) == "(a2,a1)");
    CHECK_THROWS_AS(OrientedCycle(cc.quiver(), {0}), Error);
    CHECK_THROWS_AS(OrientedCycle(cc.quiver(), {0, 0}), Error);
}

TEST_CASE("window graphs")
{
    auto dual = build_window_graph(load("dual.quiver"), 2);
    CHECK(dual.nodes.size() == 1);
    CHECK(dual.edge_count() == 1);
    auto two = build_window_graph(load("cycle2.quiver"), 2);
    CHECK(two.nodes.size() == 2);
    CHECK(two.edge_count() == 2);
    auto cc = build_window_graph(load("cubic_cycle.quiver"), 2);
    CHECK(cc.nodes.size() == 2);
    CHECK(cc.edge_count() == 0);
}

TEST_CASE("truncation checks")
{
    auto dual = load("dual.quiver");
    CHECK(is_m_truncated(cycle_of(dual, {"a"}), 2, dual).truncated);
    auto cc = load("cubic_cycle.quiver");
    auto c = cycle_of(cc, {"a1", "a2"});
    auto m3 = is_m_truncated(c, 3, cc);
    CHECK_FALSE(m3.truncated);
    REQUIRE(m3.failing_window);
    CHECK(*m3.failing_window == path(cc, {"a2", "a1", "a2"}));
    auto m2 = is_m_truncated(c, 2, cc);
    CHECK_FALSE(m2.truncated);
    CHECK(*m2.failing_window == path(cc, {"a1", "a2"}));
}

TEST_CASE("truncated cycle search on the bundled algebras")
{
    auto cc = load("cubic_cycle.quiver");
    for (std::size_t m = 2; m <= 4; ++m)
        CHECK(find_truncated_cycles(cc, m, 8).empty());
    CHECK_FALSE(minimal_two_truncated(cc));

    auto dual = load("dual.quiver");
    auto w = find_truncated_cycles(dual, 2, 4);
    REQUIRE(w.size() == 1);
    CHECK(w[0].cycle.length() == 1);
    CHECK(minimal_two_truncated(dual)->length() == 1);

    auto two = load("cycle2.quiver");
    auto w2 = find_truncated_cycles(two, 2, 4);
    REQUIRE(w2.size() == 1);
    CHECK(w2[0].cycle.arrows() == std::vector<std::size_t>{0, 1});
    CHECK(w2[0].zero_windows.size() == 2);
    CHECK(w2[0].nonzero_windows.size() == 2);
    CHECK(minimal_two_truncated(two)->length() == 2);
}

TEST_CASE("truncated cycles agree with exhaustive closed-word search")
{
    for (auto& p : monomial_corpus(300, 60)) {
        Algebra a(p);
        for (std::size_t m = 2; m <= 4; ++m) {
            std::set<std::vector<std::size_t>> found;
            for (const auto& w : find_truncated_cycles(a, m, 6)) {
                CHECK(is_m_truncated(w.cycle, m, a).truncated);
                CHECK(w.cycle.is_aperiodic());
                found.insert(w.cycle.canonical_rotation());
            }
            CHECK(found == oracle::truncated_cycles(p, m, 6));
        }
    }
}
