// Acceptance checks: one PASS/FAIL line per criterion. All comparisons are
// exact; each criterion also has a wall-clock limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "oracles.hpp"
#include "quiverhh/corpus.hpp"
#include "quiverhh/cycles.hpp"
#include "quiverhh/hochschild.hpp"
#include "quiverhh/resolutions.hpp"
#include "support.hpp"

using namespace quiverhh;

namespace {

using Sizes = std::vector<std::size_t>;

const std::vector<const char*> bundled_files{"dual.quiver",    "cycle2.quiver",        "cycle3.quiver",
                                             "cubic_cycle.quiver", "hereditary_a2.quiver", "linear_ab.quiver",
                                             "square.quiver"};

constexpr std::uint64_t corpus_seed = 1;
constexpr std::size_t corpus_count = 50;
constexpr std::uint64_t chain_cap = 20000;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            if (detail.size() < 400)
                detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

std::string show(const Sizes& v)
{
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        out << (i ? "," : "") << v[i];
    out << "]";
    return out.str();
}

std::size_t degree_for(const Algebra& a, std::size_t ceiling)
{
    return std::min(ceiling, default_max_degree(a, {chain_cap}));
}

std::size_t max_relation_length(const AlgebraPresentation& p)
{
    std::size_t n = 0;
    for (const auto& r : p.relations)
        for (const auto& [path, c] : r)
            n = std::max(n, path.length());
    return n;
}

Outcome truncated_cycle_certificates()
{
    Outcome out;
    for (std::size_t l = 1; l <= 3; ++l) {
        Algebra a(truncated_cycle_algebra(l, 2));
        std::vector<std::size_t> arrows;
        for (std::size_t i = 0; i < l; ++i)
            arrows.push_back(i);
        OrientedCycle cycle(a.quiver(), arrows);
        for (std::size_t m = 1; l * m - 1 <= 9; ++m) {
            if (m % 2 == 0 && l % 2 == 1)
                continue;
            const std::size_t q = l * m - 1;
            const std::string tag = "l=" + std::to_string(l) + " m=" + std::to_string(m);
            auto cert = certify_nonvanishing(a, cycle, m);
            out.require(cert.degree == q, tag + " degree");
            out.require(cert.is_cycle && cert.hh_lower_bound, tag + " certificate rejected");
            auto hh = hh_dimensions(a, q);
            out.require(hh[q] >= 1, tag + " HH_" + std::to_string(q) + " = 0");
        }
    }
    return out;
}

Outcome dual_numbers()
{
    Outcome out;
    auto p = load_presentation(bundled("dual.quiver"));
    const Sizes expected{2, 1, 1, 1, 1, 1, 1};
    auto got = hh_dimensions(Algebra(p), 6);
    auto dense = oracle::hh(p, 6);
    out.require(dense == expected, "dense oracle gives " + show(dense));
    out.require(got == expected, "got " + show(got));
    return out;
}

Outcome two_cycle()
{
    Outcome out;
    auto p = truncated_cycle_algebra(2, 2);
    const Sizes expected{2, 1, 1, 1, 1, 1};
    auto got = hh_dimensions(Algebra(p), 5);
    auto dense = oracle::hh(p, 5);
    out.require(dense == expected, "dense oracle gives " + show(dense));
    out.require(got == expected, "got " + show(got));
    out.require(got == hh_dimensions(load("cycle2.quiver"), 5), "bundled cycle2 differs");
    return out;
}

Outcome boundary_squared()
{
    Outcome out;
    std::vector<AlgebraPresentation> ps;
    for (const char* f : bundled_files)
        ps.push_back(load_presentation(bundled(f)));
    for (auto& p : monomial_corpus(corpus_seed, corpus_count))
        ps.push_back(p);
    std::size_t index = 0;
    for (const auto& p : ps) {
        Algebra a(p);
        const std::size_t top = degree_for(a, 6);
        const std::string tag = "algebra " + std::to_string(index++);
        for (std::size_t q = 2; q <= top; ++q) {
            auto prod = boundary_matrix(a, q - 1).matrix * boundary_matrix(a, q).matrix;
            out.require(prod.is_zero(), tag + " b_" + std::to_string(q - 1) + " b_" + std::to_string(q) + " != 0");
        }
        out.require(hh_dimensions(a, 0)[0] == hh0_direct(a), tag + " HH_0 mismatch");
    }
    return out;
}

Outcome cubic_two_cycle()
{
    Outcome out;
    auto a = load("cubic_cycle.quiver");
    for (std::size_t m = 2; m <= 4; ++m)
        out.require(find_truncated_cycles(a, m, 8).empty(), "truncated cycle for m=" + std::to_string(m));
    auto g = gldim_monomial(a);
    out.require(g.is_infinite(), "gldim finite");
    const Path a2a1 = path(a, {"a2", "a1"});
    out.require(g.witness.size() == 1 && a.basis().path(g.witness[0]) == a2a1, "witness is not [a2a1]");
    auto graph = build_successor_graph(a);
    out.require(graph.successors_of(*a.basis().index_of(a2a1)) == std::vector<std::size_t>{*a.basis().index_of(a2a1)},
                "a2a1 is not a self-loop");
    auto cut = pd_simple_cutoff(a, 0, 6);
    out.require(!cut.value && cut.at_least == 7, "pd_cutoff(1, 6) is not at-least 7");
    return out;
}

Outcome finite_gldim_excludes_cycles()
{
    Outcome out;
    std::size_t checked = 0;
    for (auto& p : monomial_corpus(corpus_seed, corpus_count)) {
        Algebra a(p);
        if (gldim_monomial(a).is_infinite()) {
            ++checked;
            continue;
        }
        for (std::size_t m = 2; m <= max_relation_length(p); ++m)
            out.require(find_truncated_cycles(a, m).empty(),
                        "finite gldim with an " + std::to_string(m) + "-truncated cycle");
        ++checked;
    }
    out.require(checked >= 50, "only " + std::to_string(checked) + " algebras");
    return out;
}

Outcome summand_inequality()
{
    Outcome out;
    std::size_t with_witness = 0;
    std::size_t comparisons = 0;
    std::uint64_t seed = corpus_seed;
    for (; seed < corpus_seed + 400 && (with_witness < 10 || seed < corpus_seed + corpus_count); ++seed) {
        auto p = random_monomial_algebra(seed);
        Algebra a(p);
        bool any = false;
        for (std::size_t m = 2; m <= max_relation_length(p); ++m) {
            for (const auto& w : find_truncated_cycles(a, m)) {
                any = true;
                const std::size_t q = std::min<std::size_t>(6, degree_for(a, 6));
                auto cmp = hh_compare_summand(a, w, q, {chain_cap});
                ++comparisons;
                for (std::size_t i = 1; i <= q && i < cmp.hh_cycle_algebra.size(); ++i)
                    out.require(cmp.hh_algebra[i] >= cmp.hh_cycle_algebra[i],
                                "seed " + std::to_string(seed) + " degree " + std::to_string(i));
            }
        }
        with_witness += any;
    }
    out.require(with_witness >= 10, "only " + std::to_string(with_witness) + " algebras with witnesses");
    out.detail += (out.detail.empty() ? "" : "; ") + std::to_string(with_witness) + " algebras, " +
                  std::to_string(comparisons) + " witnesses";
    return out;
}

Outcome cutoff_agreement()
{
    Outcome out;
    for (auto& p : monomial_corpus(corpus_seed, corpus_count)) {
        Algebra a(p);
        auto g = build_successor_graph(a);
        const std::size_t cutoff = a.dimension() - a.quiver().vertex_count();
        for (std::size_t v = 0; v < a.quiver().vertex_count(); ++v) {
            auto exact = pd_simple_monomial(a, g, v);
            auto cut = pd_simple_cutoff(a, v, cutoff);
            if (exact.is_infinite())
                out.require(!cut.value && cut.at_least == cutoff + 1, "infinite case disagrees");
            else
                out.require(cut.value == exact.value, "finite case disagrees");
        }
    }
    return out;
}

Outcome finite_gldim_vanishing()
{
    Outcome out;
    auto her = load("hereditary_a2.quiver");
    out.require(gldim_monomial(her).value == std::size_t{1}, "hereditary gldim");
    out.require(hh_dimensions(her, 3) == Sizes{2, 0, 0, 0}, "hereditary HH");
    auto lin = load("linear_ab.quiver");
    out.require(gldim_monomial(lin).value == std::size_t{2}, "linear_ab gldim");
    auto hh = hh_dimensions(lin, 4);
    for (std::size_t i = 3; i <= 4; ++i)
        out.require(hh[i] == 0, "linear_ab HH_" + std::to_string(i));
    return out;
}

} // namespace

int main()
{
    struct Criterion {
        int number;
        const char* name;
        double limit_seconds;
        std::function<Outcome()> check;
    };
    const std::vector<Criterion> criteria{
        {1, "certificates for truncated cycle algebras", 60, truncated_cycle_certificates},
        {2, "dual numbers HH up to degree 6", 5, dual_numbers},
        {3, "two-cycle algebra HH up to degree 5", 10, two_cycle},
        {4, "boundary squares to zero and HH_0 matches commutators", 300, boundary_squared},
        {5, "two-cycle with one cubic relation", 5, cubic_two_cycle},
        {6, "finite global dimension excludes truncated cycles", 300, finite_gldim_excludes_cycles},
        {7, "direct-summand inequality", 600, summand_inequality},
        {8, "cutoff and monomial projective dimensions agree", 300, cutoff_agreement},
        {9, "finite global dimension spot checks", 5, finite_gldim_vanishing},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit_seconds)
            o.require(false, "time limit exceeded");
        failures += !o.ok;
        std::printf("%s criterion %d: %s (%.2fs, limit %.0fs)%s%s\n", o.ok ? "PASS" : "FAIL", c.number, c.name, secs,
                    c.limit_seconds, o.detail.empty() ? "" : " ", o.detail.c_str());
    }
    return failures == 0 ? 0 : 1;
}
