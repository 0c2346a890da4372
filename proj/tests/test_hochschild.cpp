#include <doctest.h>

#include "oracles.hpp"
#include "quiverhh/corpus.hpp"
#include "quiverhh/cycles.hpp"
#include "quiverhh/error.hpp"
#include "quiverhh/hochschild.hpp"
#include "support.hpp"

using namespace quiverhh;

namespace {

std::vector<std::string> tuple_names(const Algebra& a, std::size_t q)
{
    std::vector<std::string> out;
    for (const auto& t : chain_basis(a, q))
        out.push_back(tuple_to_string(a, t));
    return out;
}

OrientedCycle cycle_of(const Algebra& a, std::initializer_list<const char*> names)
{
    std::vector<std::size_t> ids;
    for (const char* n : names)
        ids.push_back(arrow(a, n));
    return OrientedCycle(a.quiver(), ids);
}

} // namespace

TEST_CASE("chain bases")
{
    auto dual = load("dual.quiver");
    CHECK(tuple_names(dual, 2) == std::vector<std::string>{"(e1; a, a)", "(a; a, a)"});
    CHECK(tuple_names(load("cycle2.quiver"), 1) == std::vector<std::string>{"(a; b)", "(b; a)"});
    CHECK(chain_basis(load("hereditary_a2.quiver"), 1).empty());
    CHECK(chain_dimension(dual, 7) == 2);
    HochschildOptions tiny;
    tiny.chain_cap = 1;
    CHECK_THROWS_AS(ChainBasis(dual, 2, tiny), Error);
}

TEST_CASE("boundary matrices")
{
    auto dual = load("dual.quiver");
    CHECK(boundary_matrix(dual, 1).matrix.is_zero());
    auto b2 = boundary_matrix(dual, 2).matrix;
    CHECK(rank(b2) == 1);
    auto e_aa = apply_boundary(dual, ChainTuple{0, 1, 1});
    REQUIRE(e_aa.terms.size() == 1);
    CHECK(e_aa.terms.begin()->first == ChainTuple{1, 1});
    CHECK(e_aa.terms.begin()->second == 2);
    CHECK(apply_boundary(dual, ChainTuple{1, 1, 1}).is_zero());

    auto two = load("cycle2.quiver");
    auto x = apply_boundary(two, ChainTuple{0, 2, 3});
    auto y = apply_boundary(two, ChainTuple{1, 3, 2});
    CHECK(x.terms == y.terms);
    CHECK(x.terms.size() == 2);
    CHECK(rank(boundary_matrix(two, 2).matrix) == 1);
}

TEST_CASE("Hochschild dimensions of the bundled algebras")
{
    CHECK(hh_dimensions(load("dual.quiver"), 4) == std::vector<std::size_t>{2, 1, 1, 1, 1});
    CHECK(hh_dimensions(load("cycle2.quiver"), 3) == std::vector<std::size_t>{2, 1, 1, 1});
    CHECK(hh_dimensions(load("hereditary_a2.quiver"), 3) == std::vector<std::size_t>{2, 0, 0, 0});
    CHECK(hh0_direct(load("dual.quiver")) == 2);
    CHECK(hh0_direct(load("hereditary_a2.quiver")) == 2);
    auto cc = load("cubic_cycle.quiver");
    CHECK(hh0_direct(cc) == hh_dimensions(cc, 0)[0]);
}

TEST_CASE("characteristic two changes the dual numbers")
{
    auto p = load_presentation(bundled("dual.quiver"), Field::prime(2));
    // b(e1; a, a) = 2(a; a) vanishes, so every degree has dimension 2
    CHECK(hh_dimensions(Algebra(p), 3) == std::vector<std::size_t>{2, 2, 2, 2});
}

TEST_CASE("partial results at the chain cap")
{
    HochschildOptions opts;
    opts.chain_cap = 2;
    auto d = hh_dimensions_partial(load("cycle3.quiver"), 6, opts);
    CHECK_FALSE(d.complete);
    CHECK_FALSE(d.limit_message.empty());
    CHECK(d.hh.size() < 7);
    CHECK_THROWS_AS(hh_dimensions(load("cycle3.quiver"), 6, opts), Error);
}

TEST_CASE("xi chains")
{
    auto dual = load("dual.quiver");
    auto xi = xi_chain(dual, cycle_of(dual, {"a"}), 3);
    CHECK(xi.degree == 2);
    CHECK(chain_to_string(dual, xi) == "(a; a, a)");
    auto two = load("cycle2.quiver");
    CHECK(tuple_to_string(two, xi_chain(two, cycle_of(two, {"a", "b"}), 1).terms.begin()->first) == "(a; b)");
    auto x3 = xi_chain(two, cycle_of(two, {"a", "b"}), 3);
    CHECK(x3.degree == 5);
    CHECK(tuple_to_string(two, x3.terms.begin()->first) == "(a; b, a, b, a, b)");
}

TEST_CASE("certificates")
{
    auto dual = load("dual.quiver");
    auto c = certify_nonvanishing(dual, cycle_of(dual, {"a"}), 3);
    CHECK(c.is_cycle);
    CHECK(c.boundary_status == BoundaryStatus::not_in_image);
    CHECK(c.hh_lower_bound);
    CHECK(c.degree == 2);

    auto two = load("cycle2.quiver");
    auto c1 = certify_nonvanishing(two, cycle_of(two, {"a", "b"}), 1);
    CHECK(c1.is_cycle);
    CHECK(c1.hh_lower_bound);

    // xi for (a) with m = 2 is (a; a) = b(e1; a, a) / 2
    auto c2 = certify_nonvanishing(dual, cycle_of(dual, {"a"}), 2);
    CHECK(c2.is_cycle);
    CHECK(c2.boundary_status == BoundaryStatus::in_image);
    CHECK_FALSE(c2.hh_lower_bound);
    REQUIRE(c2.preimage);
    CHECK(apply_boundary(dual, *c2.preimage).terms == c2.xi.terms);

    auto cc = load("cubic_cycle.quiver");
    for (std::size_t m = 1; m <= 3; ++m) {
        try {
            certify_nonvanishing(cc, cycle_of(cc, {"a1", "a2"}), m);
            FAIL("expected NotTwoTruncated");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::not_two_truncated);
        }
    }
}

TEST_CASE("truncated cycle algebras")
{
    auto d = Algebra(truncated_cycle_algebra(1, 2));
    CHECK(d.dimension() == 2);
    auto two = Algebra(truncated_cycle_algebra(2, 2));
    CHECK(two.dimension() == 4);
    auto three = Algebra(truncated_cycle_algebra(3, 2));
    CHECK(three.dimension() == 6);
    auto w = find_truncated_cycles(three, 2, 3);
    REQUIRE(w.size() == 1);
    CHECK(w[0].cycle.length() == 3);
    CHECK(Algebra(truncated_cycle_algebra(2, 3)).dimension() == 6);
}

TEST_CASE("summand comparison")
{
    auto two = load("cycle2.quiver");
    auto w = find_truncated_cycles(two, 2, 4);
    auto cmp = hh_compare_summand(two, w.at(0), 3);
    CHECK(cmp.holds);
    CHECK(cmp.hh_algebra == cmp.hh_cycle_algebra);

    auto ext = parse("vertices: 1 2\narrow a: 1 -> 1\narrow c: 1 -> 2\nrelation a*a\n");
    auto we = find_truncated_cycles(ext, 2, 4);
    REQUIRE(we.size() == 1);
    auto ce = hh_compare_summand(ext, we[0], 3);
    CHECK(ce.holds);
    for (std::size_t i = 1; i <= 3; ++i)
        CHECK(ce.hh_algebra[i] >= ce.hh_cycle_algebra[i]);

    auto cc = load("cubic_cycle.quiver");
    OrientedCycle fake(cc.quiver(), {0, 1});
    TruncationWitness bogus{fake, 2, {}, {}};
    CHECK_THROWS_AS(hh_compare_summand(cc, bogus, 3), Error);
}

TEST_CASE("boundary matrices and dimensions agree with a dense oracle")
{
    std::vector<AlgebraPresentation> ps;
    for (const char* f : {"dual.quiver", "cycle2.quiver", "cycle3.quiver", "cubic_cycle.quiver", "linear_ab.quiver"})
        ps.push_back(load_presentation(bundled(f)));
    for (auto& p : monomial_corpus(500, 25))
        ps.push_back(p);
    for (const auto& p : ps) {
        Algebra a(p);
        const std::size_t q = std::min<std::size_t>(4, default_max_degree(a, {20000}));
        CHECK(hh_dimensions(a, q) == oracle::hh(p, q));
    }
}

TEST_CASE("boundary squares to zero")
{
    for (auto& p : monomial_corpus(700, 25)) {
        Algebra a(p);
        const std::size_t top = std::min<std::size_t>(5, default_max_degree(a, {20000}));
        for (std::size_t q = 2; q <= top; ++q) {
            auto b1 = boundary_matrix(a, q - 1).matrix;
            auto b2 = boundary_matrix(a, q).matrix;
            CHECK((b1 * b2).is_zero());
        }
    }
    auto sq = load("square.quiver");
    for (std::size_t q = 2; q <= 4; ++q)
        CHECK((boundary_matrix(sq, q - 1).matrix * boundary_matrix(sq, q).matrix).is_zero());
}
