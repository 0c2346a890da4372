#include "quiverhh/corpus.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "quiverhh/algebra.hpp"
#include "quiverhh/cycles.hpp"
#include "quiverhh/error.hpp"
#include "quiverhh/hochschild.hpp"
#include "quiverhh/resolutions.hpp"

namespace quiverhh {

namespace {

/// Uniform draw in [0, n) that does not depend on the standard library's
/// distribution implementation.
std::size_t draw(std::mt19937_64& rng, std::size_t n)
{
    return static_cast<std::size_t>(rng() % n);
}

std::optional<AlgebraPresentation> draw_presentation(std::mt19937_64& rng, const CorpusParams& params)
{
    AlgebraPresentation p;
    std::size_t nv = 1 + draw(rng, params.max_vertices);
    std::size_t na = 1 + draw(rng, params.max_arrows);
    for (std::size_t v = 1; v <= nv; ++v)
        p.quiver.add_vertex(std::to_string(v));
    for (std::size_t a = 1; a <= na; ++a)
        p.quiver.add_arrow("a" + std::to_string(a), draw(rng, nv), draw(rng, nv));

    std::set<std::vector<std::size_t>> words;
    std::size_t nrels = draw(rng, params.max_rels + 1);
    for (std::size_t r = 0; r < nrels; ++r) {
        std::size_t len = 2 + draw(rng, params.max_rel_len - 1);
        std::vector<std::size_t> word{draw(rng, na)};
        while (word.size() < len) {
            auto out = p.quiver.arrows_from(p.quiver.arrow(word.back()).target);
            if (out.empty())
                break;
            word.push_back(out[draw(rng, out.size())]);
        }
        if (word.size() == len)
            words.insert(word);
    }
    for (const auto& w : words)
        p.relations.push_back({{Path::of_arrows(p.quiver, w), Rational(1)}});
    p.monomial = true;
    return p;
}

std::size_t max_relation_length(const AlgebraPresentation& p)
{
    std::size_t n = 0;
    for (const auto& rel : p.relations)
        for (const auto& [path, c] : rel)
            n = std::max(n, path.length());
    return n;
}

} // namespace

AlgebraPresentation random_monomial_algebra(std::uint64_t seed, const CorpusParams& params)
{
    if (params.max_vertices == 0 || params.max_arrows == 0 || params.max_rel_len < 2)
        throw Error(ErrorCode::invalid_argument, "corpus parameters must be positive with max_rel_len >= 2");
    std::mt19937_64 rng(seed);
    for (std::size_t attempt = 0; attempt < params.max_retries; ++attempt) {
        auto p = draw_presentation(rng, params);
        if (!p)
            continue;
        try {
            Algebra a(*p);
            if (a.dimension() <= params.max_dimension)
                return *p;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::infinite_dimensional)
                throw;
        }
    }
    throw Error(ErrorCode::generation_exhausted,
                "no finite-dimensional algebra after " + std::to_string(params.max_retries) + " draws");
}

std::vector<AlgebraPresentation> monomial_corpus(std::uint64_t first_seed, std::size_t count,
                                                 const CorpusParams& params)
{
    std::vector<AlgebraPresentation> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(random_monomial_algebra(first_seed + i, params));
    return out;
}

// ---------------------------------------------------------------------------
// Cross-module properties

std::vector<std::string> corpus_property_names()
{
    return {"boundary_squared_zero", "hh0_matches_commutators", "witness_soundness",
            "minimal_cycle_is_shortest", "truncated_cycles_force_infinite_gldim",
            "summand_inequality", "pd_cutoff_agreement", "certificate_soundness",
            "finite_gldim_hh_vanishing", "syzygy_sum_law", "syzygy_top_follows_cycle"};
}

namespace {

struct Context {
    std::uint64_t seed;
    const Algebra& algebra;
    std::size_t max_degree; // within the chain cap
    HochschildOptions hoch;
    const PdResult& gldim;
    const std::vector<std::size_t>& hh;
    std::size_t max_rel_len;
};

using Check = std::function<std::optional<std::string>(const Context&)>;

std::string join(const std::vector<std::size_t>& v)
{
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        out << (i ? "," : "") << v[i];
    out << "]";
    return out.str();
}

/// All closed arrow words of the given length (brute force).
std::vector<std::vector<std::size_t>> closed_words(const Quiver& q, std::size_t len)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> word;
    std::function<void(std::size_t)> grow = [&](std::size_t at) {
        if (word.size() == len) {
            if (at == q.arrow(word.front()).source)
                out.push_back(word);
            return;
        }
        for (std::size_t c : q.arrows_from(at)) {
            word.push_back(c);
            grow(q.arrow(c).target);
            word.pop_back();
        }
    };
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        word = {a};
        grow(q.arrow(a).target);
    }
    return out;
}

std::map<std::string, Check> property_checks()
{
    std::map<std::string, Check> checks;

    checks["boundary_squared_zero"] = [](const Context& c) -> std::optional<std::string> {
        for (std::size_t q = 2; q <= c.max_degree + 1; ++q) {
            auto lower = boundary_matrix(c.algebra, q - 1, c.hoch).matrix;
            auto upper = boundary_matrix(c.algebra, q, c.hoch).matrix;
            if (!(lower * upper).is_zero())
                return "b_" + std::to_string(q - 1) + " b_" + std::to_string(q) + " != 0";
        }
        return std::nullopt;
    };

    checks["hh0_matches_commutators"] = [](const Context& c) -> std::optional<std::string> {
        std::size_t direct = hh0_direct(c.algebra);
        if (direct != c.hh[0])
            return "HH_0 = " + std::to_string(c.hh[0]) + " but dim A/[A,A] = " + std::to_string(direct);
        return std::nullopt;
    };

    checks["witness_soundness"] = [](const Context& c) -> std::optional<std::string> {
        for (std::size_t m = 2; m <= std::max<std::size_t>(2, c.max_rel_len); ++m) {
            for (const auto& w : find_truncated_cycles(c.algebra, m)) {
                if (!is_m_truncated(w.cycle, m, c.algebra).truncated)
                    return "witness " + w.cycle.to_string(c.algebra.quiver()) + " fails re-verification";
                if (!w.cycle.is_aperiodic())
                    return "witness " + w.cycle.to_string(c.algebra.quiver()) + " is periodic";
                for (std::size_t k = 0; k < w.cycle.length(); ++k)
                    if (w.cycle.rotated(k).canonical_rotation() != w.cycle.arrows())
                        return "rotation changes the canonical form";
                if (!is_m_truncated(w.cycle.repeated(2), m, c.algebra).truncated)
                    return "doubled witness is not truncated";
            }
        }
        return std::nullopt;
    };

    checks["minimal_cycle_is_shortest"] = [](const Context& c) -> std::optional<std::string> {
        auto minimal = minimal_two_truncated(c.algebra);
        if (!minimal) {
            for (std::size_t len = 1; len <= c.algebra.quiver().arrow_count(); ++len)
                for (const auto& word : closed_words(c.algebra.quiver(), len))
                    if (is_m_truncated(OrientedCycle(c.algebra.quiver(), word), 2, c.algebra).truncated)
                        return "missed a 2-truncated cycle of length " + std::to_string(len);
            return std::nullopt;
        }
        if (!minimal->is_aperiodic())
            return "minimal cycle is periodic";
        if (!is_m_truncated(*minimal, 2, c.algebra).truncated)
            return "minimal cycle is not 2-truncated";
        for (std::size_t len = 1; len < minimal->length(); ++len)
            for (const auto& word : closed_words(c.algebra.quiver(), len))
                if (is_m_truncated(OrientedCycle(c.algebra.quiver(), word), 2, c.algebra).truncated)
                    return "found a shorter 2-truncated cycle of length " + std::to_string(len);
        return std::nullopt;
    };

    checks["truncated_cycles_force_infinite_gldim"] = [](const Context& c) -> std::optional<std::string> {
        if (c.gldim.is_infinite())
            return std::nullopt;
        for (std::size_t m = 2; m <= std::max<std::size_t>(2, c.max_rel_len); ++m) {
            auto witnesses = find_truncated_cycles(c.algebra, m);
            if (!witnesses.empty())
                return "gldim " + std::to_string(*c.gldim.value) + " is finite but " +
                       witnesses.front().cycle.to_string(c.algebra.quiver()) + " is " + std::to_string(m) +
                       "-truncated";
        }
        return std::nullopt;
    };

    checks["summand_inequality"] = [](const Context& c) -> std::optional<std::string> {
        std::size_t degree = std::min<std::size_t>(c.max_degree, 6);
        for (std::size_t m = 2; m <= std::max<std::size_t>(2, c.max_rel_len); ++m) {
            auto witnesses = find_truncated_cycles(c.algebra, m);
            if (witnesses.empty())
                continue;
            Algebra cycle_algebra(truncated_cycle_algebra(witnesses.front().cycle.length(), m));
            if (degree > default_max_degree(cycle_algebra, c.hoch))
                continue;
            auto cmp = hh_compare_summand(c.algebra, witnesses.front(), degree, c.hoch);
            if (!cmp.holds)
                return "HH(A) = " + join(cmp.hh_algebra) + " below HH(A') = " + join(cmp.hh_cycle_algebra);
        }
        return std::nullopt;
    };

    checks["pd_cutoff_agreement"] = [](const Context& c) -> std::optional<std::string> {
        // A finite pd is at most the number of radical basis paths.
        std::size_t cutoff = std::max<std::size_t>(1, c.algebra.dimension() - c.algebra.quiver().vertex_count());
        auto graph = build_successor_graph(c.algebra);
        for (std::size_t v = 0; v < c.algebra.quiver().vertex_count(); ++v) {
            PdResult exact = pd_simple_monomial(c.algebra, graph, v);
            CutoffPd general = pd_simple_cutoff(c.algebra, v, cutoff);
            bool agree = exact.is_infinite() ? (!general.value && general.at_least == cutoff + 1)
                                             : (general.value == exact.value);
            if (!agree)
                return "vertex " + c.algebra.quiver().vertex_label(v) + ": monomial " +
                       (exact.value ? std::to_string(*exact.value) : std::string("infinite")) + ", cutoff " +
                       (general.value ? std::to_string(*general.value)
                                      : ">= " + std::to_string(general.at_least));
        }
        return std::nullopt;
    };

    checks["certificate_soundness"] = [](const Context& c) -> std::optional<std::string> {
        auto cycle = minimal_two_truncated(c.algebra);
        if (!cycle)
            return std::nullopt;
        const std::size_t l = cycle->length();
        for (std::size_t m = 1; l * m - 1 <= c.max_degree; ++m) {
            if (m % 2 == 0 && l % 2 == 1)
                continue;
            Certificate cert = certify_nonvanishing(c.algebra, *cycle, m, c.hoch);
            if (!cert.hh_lower_bound)
                return "no certificate for " + cycle->to_string(c.algebra.quiver()) + " at m = " + std::to_string(m);
            if (c.hh[cert.degree] == 0)
                return "certificate in degree " + std::to_string(cert.degree) + " but HH vanishes there";
        }
        return std::nullopt;
    };

    checks["finite_gldim_hh_vanishing"] = [](const Context& c) -> std::optional<std::string> {
        if (c.gldim.is_infinite())
            return std::nullopt;
        for (std::size_t i = *c.gldim.value + 1; i <= c.max_degree; ++i)
            if (c.hh[i] != 0)
                return "gldim " + std::to_string(*c.gldim.value) + " but HH_" + std::to_string(i) + " = " +
                       std::to_string(c.hh[i]);
        return std::nullopt;
    };

    checks["syzygy_sum_law"] = [](const Context& c) -> std::optional<std::string> {
        const Algebra& a = c.algebra;
        std::size_t cutoff = std::max<std::size_t>(1, a.dimension() - a.quiver().vertex_count());
        auto graph = build_successor_graph(a);
        auto module_dim = [&](std::size_t q) {
            // dim qA = number of basis paths with prefix q
            const auto& qp = a.basis().path(q).arrows;
            std::size_t n = 0;
            for (const Path& p : a.basis().paths())
                if (p.length() >= qp.size() && std::equal(qp.begin(), qp.end(), p.arrows.begin()))
                    ++n;
            return n;
        };
        for (std::size_t v = 0; v < a.quiver().vertex_count(); ++v) {
            CutoffPd run = pd_simple_cutoff(a, v, cutoff);
            std::map<std::size_t, std::uint64_t> current;
            for (std::size_t arrow : a.quiver().arrows_from(v))
                ++current[*a.basis().index_of(Path::of_arrow(a.quiver(), arrow))];
            for (std::size_t k = 0; k < run.syzygy_dimensions.size(); ++k) {
                std::uint64_t predicted = 0;
                for (const auto& [q, mult] : current)
                    predicted += mult * module_dim(q);
                if (predicted != run.syzygy_dimensions[k])
                    return "vertex " + a.quiver().vertex_label(v) + " step " + std::to_string(k + 1) +
                           ": predicted " + std::to_string(predicted) + ", computed " +
                           std::to_string(run.syzygy_dimensions[k]);
                std::map<std::size_t, std::uint64_t> next;
                for (const auto& [q, mult] : current)
                    for (std::size_t r : graph.successors_of(q))
                        next[r] += mult;
                current = std::move(next);
            }
        }
        return std::nullopt;
    };

    checks["syzygy_top_follows_cycle"] = [](const Context& c) -> std::optional<std::string> {
        auto cycle = minimal_two_truncated(c.algebra);
        if (!cycle)
            return std::nullopt;
        const Quiver& q = c.algebra.quiver();
        const auto& arrows = cycle->arrows();
        const std::size_t l = arrows.size();
        auto graph = build_successor_graph(c.algebra);
        for (std::size_t i = 0; i < l; ++i) {
            std::size_t from = *c.algebra.basis().index_of(Path::of_arrow(q, arrows[i]));
            std::size_t to = *c.algebra.basis().index_of(Path::of_arrow(q, arrows[(i + 1) % l]));
            const auto& succ = graph.successors_of(from);
            if (std::find(succ.begin(), succ.end(), to) == succ.end())
                return "successor graph lacks the cycle edge " + q.arrow(arrows[i]).name + " -> " +
                       q.arrow(arrows[(i + 1) % l]).name;
        }
        // Step k of the resolution of S_{s(a_1)} has a generator at s(a_{k+1}).
        std::size_t steps = 2 * l + 1;
        CutoffPd run = pd_simple_cutoff(c.algebra, q.arrow(arrows[0]).source, steps);
        if (run.value)
            return "simple on the cycle has finite pd";
        for (std::size_t k = 1; k <= steps; ++k) {
            std::size_t v = q.arrow(arrows[k % l]).source;
            if (run.cover_multiplicities[k][v] == 0)
                return "syzygy " + std::to_string(k) + " has no top at vertex " + q.vertex_label(v);
        }
        return std::nullopt;
    };
    return checks;
}

} // namespace

PropertyReport check_corpus_properties(std::uint64_t first_seed, std::size_t count,
                                       const std::vector<std::string>& properties,
                                       const CorpusParams& params, const PropertyOptions& options)
{
    auto checks = property_checks();
    std::vector<std::string> selected;
    for (const auto& name : properties) {
        if (name == "all") {
            selected = corpus_property_names();
            break;
        }
        if (!checks.count(name))
            throw Error(ErrorCode::invalid_argument, "unknown property '" + name + "'");
        selected.push_back(name);
    }

    PropertyReport report;
    for (const auto& name : selected)
        report.properties[name];
    HochschildOptions hoch;
    hoch.chain_cap = options.chain_cap;
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t seed = first_seed + i;
        Algebra algebra(random_monomial_algebra(seed, params));
        std::size_t degree = std::min(options.max_degree, default_max_degree(algebra, hoch));
        std::vector<std::size_t> hh = hh_dimensions(algebra, degree, hoch);
        PdResult gldim = gldim_monomial(algebra);
        Context ctx{seed, algebra, degree, hoch, gldim, hh, max_relation_length(algebra.presentation())};
        ++report.algebras;
        for (const auto& name : selected) {
            auto& outcome = report.properties[name];
            ++outcome.checked;
            std::optional<std::string> failure;
            try {
                failure = checks.at(name)(ctx);
            } catch (const Error& e) {
                failure = std::string("error: ") + e.what();
            }
            if (failure) {
                ++outcome.violations;
                report.violations.push_back({name, seed, *failure});
            }
        }
    }
    return report;
}

} // namespace quiverhh
