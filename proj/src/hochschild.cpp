#include "quiverhh/hochschild.hpp"

#include <algorithm>
#include <limits>

namespace quiverhh {

std::size_t ChainTupleHash::operator()(const ChainTuple& t) const noexcept
{
    std::size_t h = t.size();
    for (std::size_t x : t)
        h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

std::string tuple_to_string(const Algebra& a, const ChainTuple& t)
{
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i == 1)
            out += "; ";
        else if (i > 1)
            out += ", ";
        out += path_to_string(a.quiver(), a.basis().path(t[i]));
    }
    return out + ")";
}

std::string chain_to_string(const Algebra& a, const ChainVector& v)
{
    if (v.terms.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [t, c] : v.terms) {
        Rational mag = abs(c);
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (mag != 1)
            out += mag.get_str() + "*";
        out += tuple_to_string(a, t);
        first = false;
    }
    return out;
}

namespace {

using CountMatrix = std::vector<std::vector<std::uint64_t>>;

std::uint64_t sat_add(std::uint64_t x, std::uint64_t y)
{
    std::uint64_t r;
    return __builtin_add_overflow(x, y, &r) ? std::numeric_limits<std::uint64_t>::max() : r;
}

std::uint64_t sat_mul(std::uint64_t x, std::uint64_t y)
{
    std::uint64_t r;
    return __builtin_mul_overflow(x, y, &r) ? std::numeric_limits<std::uint64_t>::max() : r;
}

CountMatrix sat_product(const CountMatrix& x, const CountMatrix& y)
{
    const std::size_t n = x.size();
    CountMatrix out(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (x[i][k] != 0)
                for (std::size_t j = 0; j < n; ++j)
                    out[i][j] = sat_add(out[i][j], sat_mul(x[i][k], y[k][j]));
    return out;
}

/// counts[k][u][v] = number of k-tuples of radical basis paths chaining u -> v.
std::vector<CountMatrix> radical_walk_counts(const Algebra& a, std::size_t q)
{
    const std::size_t n = a.quiver().vertex_count();
    CountMatrix radical(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = n; i < a.dimension(); ++i)
        ++radical[a.basis().source(i)][a.basis().target(i)];
    CountMatrix identity(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t v = 0; v < n; ++v)
        identity[v][v] = 1;
    std::vector<CountMatrix> counts{identity};
    for (std::size_t k = 1; k <= q; ++k)
        counts.push_back(sat_product(counts.back(), radical));
    return counts;
}

[[noreturn]] void over_cap(std::size_t q, std::uint64_t dim, std::uint64_t cap)
{
    throw Error(ErrorCode::resource_limit, "chain space C_" + std::to_string(q) + " has " +
                                               (dim == std::numeric_limits<std::uint64_t>::max()
                                                    ? std::string("more than 2^64")
                                                    : std::to_string(dim)) +
                                               " tuples, above the cap of " + std::to_string(cap));
}

} // namespace

std::uint64_t chain_dimension(const Algebra& a, std::size_t q)
{
    auto counts = radical_walk_counts(a, q);
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < a.dimension(); ++i)
        total = sat_add(total, counts[q][a.basis().target(i)][a.basis().source(i)]);
    return total;
}

// ---------------------------------------------------------------------------

ChainBasis::ChainBasis(const Algebra& a, std::size_t q, const HochschildOptions& options) : degree_(q)
{
    std::uint64_t dim = chain_dimension(a, q);
    if (dim > options.chain_cap)
        over_cap(q, dim, options.chain_cap);

    const AlgebraBasis& basis = a.basis();
    auto counts = radical_walk_counts(a, q);
    tuples_.reserve(dim);
    ChainTuple current(q + 1);
    // Depth-first in basis order gives lexicographic order of tuples.
    auto extend = [&](auto&& self, std::size_t slot, std::size_t at, std::size_t home) -> void {
        if (slot > q) {
            if (at == home)
                tuples_.push_back(current);
            return;
        }
        for (std::size_t x : basis.radical_from(at)) {
            if (counts[q - slot][basis.target(x)][home] == 0)
                continue;
            current[slot] = x;
            self(self, slot + 1, basis.target(x), home);
        }
    };
    for (std::size_t x0 = 0; x0 < basis.dimension(); ++x0) {
        if (counts[q][basis.target(x0)][basis.source(x0)] == 0)
            continue;
        current[0] = x0;
        extend(extend, 1, basis.target(x0), basis.source(x0));
    }
    index_.reserve(tuples_.size());
    for (std::size_t i = 0; i < tuples_.size(); ++i)
        index_.emplace(tuples_[i], i);
}

std::optional<std::size_t> ChainBasis::index_of(const ChainTuple& t) const
{
    auto it = index_.find(t);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

SparseVector ChainBasis::coordinates(const ChainVector& v) const
{
    SparseVector out;
    for (const auto& [t, c] : v.terms) {
        auto i = index_of(t);
        if (!i)
            throw Error(ErrorCode::invalid_argument, "chain tuple outside the chain basis");
        out.emplace_back(*i, c);
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

ChainVector ChainBasis::chain(const SparseVector& coords) const
{
    ChainVector v;
    v.degree = degree_;
    for (const auto& [i, c] : coords)
        v.terms.emplace(tuples_.at(i), c);
    return v;
}

std::vector<ChainTuple> chain_basis(const Algebra& a, std::size_t q, const HochschildOptions& options)
{
    return ChainBasis(a, q, options).tuples();
}

// ---------------------------------------------------------------------------

ChainVector apply_boundary(const Algebra& a, const ChainTuple& t)
{
    const Field& field = a.field();
    ChainVector out;
    if (t.empty())
        throw Error(ErrorCode::invalid_argument, "empty chain tuple");
    const std::size_t q = t.size() - 1;
    out.degree = q == 0 ? 0 : q - 1;
    if (q == 0)
        return out;

    auto accumulate = [&](ChainTuple tuple, const Rational& c) {
        auto [it, inserted] = out.terms.emplace(std::move(tuple), c);
        if (!inserted) {
            it->second = field.add(it->second, c);
            if (it->second == 0)
                out.terms.erase(it);
        }
    };

    for (std::size_t i = 0; i < q; ++i) {
        const Rational sign = (i % 2 == 0) ? 1 : -1;
        for (const auto& [k, c] : a.product(t[i], t[i + 1])) {
            if (i > 0 && !a.basis().is_radical(k))
                throw Error(ErrorCode::invalid_argument, "radical product left the radical");
            ChainTuple face;
            face.reserve(q);
            face.insert(face.end(), t.begin(), t.begin() + i);
            face.push_back(k);
            face.insert(face.end(), t.begin() + i + 2, t.end());
            accumulate(std::move(face), field.mul(sign, c));
        }
    }
    const Rational sign = (q % 2 == 0) ? 1 : -1;
    for (const auto& [k, c] : a.product(t[q], t[0])) {
        ChainTuple face;
        face.reserve(q);
        face.push_back(k);
        face.insert(face.end(), t.begin() + 1, t.begin() + q);
        accumulate(std::move(face), field.mul(sign, c));
    }
    return out;
}

ChainVector apply_boundary(const Algebra& a, const ChainVector& v)
{
    const Field& field = a.field();
    ChainVector out;
    out.degree = v.degree == 0 ? 0 : v.degree - 1;
    for (const auto& [t, c] : v.terms) {
        for (const auto& [face, d] : apply_boundary(a, t).terms) {
            Rational x = field.mul(c, d);
            auto [it, inserted] = out.terms.emplace(face, x);
            if (!inserted) {
                it->second = field.add(it->second, x);
                if (it->second == 0)
                    out.terms.erase(it);
            }
        }
    }
    return out;
}

BoundaryMatrix boundary_matrix(const Algebra& a, const ChainBasis& domain, const ChainBasis& codomain)
{
    if (domain.degree() == 0 || codomain.degree() + 1 != domain.degree())
        throw Error(ErrorCode::invalid_argument, "boundary needs chain bases of degrees q and q-1");
    std::vector<SparseVector> columns;
    columns.reserve(domain.size());
    for (const ChainTuple& t : domain.tuples())
        columns.push_back(codomain.coordinates(apply_boundary(a, t)));
    return BoundaryMatrix{domain.degree(), SparseMatrix::from_columns(codomain.size(), std::move(columns), a.field())};
}

BoundaryMatrix boundary_matrix(const Algebra& a, std::size_t q, const HochschildOptions& options)
{
    if (q == 0)
        throw Error(ErrorCode::invalid_argument, "boundary matrices start in degree 1");
    return boundary_matrix(a, ChainBasis(a, q, options), ChainBasis(a, q - 1, options));
}

// ---------------------------------------------------------------------------

HochschildDimensions hh_dimensions_partial(const Algebra& a, std::size_t max_degree,
                                           const HochschildOptions& options)
{
    HochschildDimensions out;
    out.complete = false;
    try {
        std::optional<ChainBasis> lower(std::in_place, a, 0, options);
        out.chain_dims.push_back(lower->size());
        for (std::size_t q = 1; q <= max_degree + 1; ++q) {
            ChainBasis upper(a, q, options);
            out.chain_dims.push_back(upper.size());
            out.boundary_ranks.push_back(rank(boundary_matrix(a, upper, *lower).matrix));
            // HH_{q-1} = dim C_{q-1} - rank b_{q-1} - rank b_q
            std::size_t below = q >= 2 ? out.boundary_ranks[q - 2] : 0;
            out.hh.push_back(out.chain_dims[q - 1] - below - out.boundary_ranks[q - 1]);
            lower.emplace(std::move(upper));
        }
        out.complete = true;
    } catch (const Error& e) {
        if (!e.is_resource_limit())
            throw;
        out.limit_message = e.what();
    }
    return out;
}

std::vector<std::size_t> hh_dimensions(const Algebra& a, std::size_t max_degree, const HochschildOptions& options)
{
    HochschildDimensions d = hh_dimensions_partial(a, max_degree, options);
    if (!d.complete)
        throw Error(ErrorCode::resource_limit, d.limit_message);
    return d.hh;
}

std::size_t default_max_degree(const Algebra& a, const HochschildOptions& options, std::size_t ceiling)
{
    std::size_t q = 0;
    while (q < ceiling && chain_dimension(a, q + 2) <= options.chain_cap)
        ++q;
    return q;
}

std::size_t hh0_direct(const Algebra& a)
{
    std::vector<SparseVector> commutators;
    const std::size_t dim = a.dimension();
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            AlgebraElement uv = a.product(i, j);
            const AlgebraElement& vu = a.product(j, i);
            commutators.push_back(axpy(uv, Rational(-1), vu, a.field()));
        }
    return dim - rank_of(commutators, a.field());
}

// ---------------------------------------------------------------------------

ChainVector xi_chain(const Algebra& a, const OrientedCycle& cycle, std::size_t m)
{
    if (m == 0)
        throw Error(ErrorCode::invalid_argument, "repetition count must be positive");
    ChainTuple slots;
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t arrow : cycle.arrows()) {
            auto i = a.basis().index_of(Path::of_arrow(a.quiver(), arrow));
            if (!i)
                throw Error(ErrorCode::invalid_argument, "cycle arrow is not a basis element");
            slots.push_back(*i);
        }
    ChainVector xi;
    xi.degree = slots.size() - 1;
    xi.terms.emplace(std::move(slots), Rational(1));
    return xi;
}

Certificate certify_nonvanishing(const Algebra& a, const OrientedCycle& cycle, std::size_t m,
                                 const HochschildOptions& options)
{
    TruncationCheck check = is_m_truncated(cycle, 2, a);
    if (!check.truncated)
        throw Error(ErrorCode::not_two_truncated,
                    cycle.to_string(a.quiver()) + " is not 2-truncated: window " +
                        path_to_string(a.quiver(), *check.failing_window) + " breaks the condition");
    Certificate cert{cycle, m, cycle.length() * m - 1, xi_chain(a, cycle, m), {}, false,
                     BoundaryStatus::not_in_image, std::nullopt, false};
    cert.boundary_of_xi = apply_boundary(a, cert.xi);
    cert.is_cycle = cert.boundary_of_xi.is_zero();

    ChainBasis target(a, cert.degree, options);
    ChainBasis source(a, cert.degree + 1, options);
    BoundaryMatrix b = boundary_matrix(a, source, target);
    if (auto x = solve_in_image(b.matrix, target.coordinates(cert.xi))) {
        cert.boundary_status = BoundaryStatus::in_image;
        cert.preimage = source.chain(*x);
    }
    cert.hh_lower_bound = cert.is_cycle && cert.boundary_status == BoundaryStatus::not_in_image;
    return cert;
}

AlgebraPresentation truncated_cycle_algebra(std::size_t l, std::size_t trunc, Field field)
{
    if (l == 0 || trunc < 2)
        throw Error(ErrorCode::invalid_argument, "need l >= 1 and trunc >= 2");
    AlgebraPresentation p;
    p.field = field;
    for (std::size_t v = 1; v <= l; ++v)
        p.quiver.add_vertex(std::to_string(v));
    for (std::size_t i = 0; i < l; ++i)
        p.quiver.add_arrow("x" + std::to_string(i + 1), i, (i + 1) % l);
    for (std::size_t start = 0; start < l; ++start) {
        std::vector<std::size_t> word;
        for (std::size_t k = 0; k < trunc; ++k)
            word.push_back((start + k) % l);
        p.relations.push_back({{Path::of_arrows(p.quiver, std::move(word)), Rational(1)}});
    }
    p.monomial = true;
    return p;
}

SummandComparison hh_compare_summand(const Algebra& a, const TruncationWitness& witness,
                                     std::size_t max_degree, const HochschildOptions& options)
{
    if (!a.is_monomial())
        throw Error(ErrorCode::not_monomial, "the direct-summand comparison needs a monomial algebra");
    TruncationCheck check = is_m_truncated(witness.cycle, witness.m, a);
    if (!check.truncated || check.zero_windows != witness.zero_windows ||
        check.nonzero_windows != witness.nonzero_windows)
        throw Error(ErrorCode::invalid_witness,
                    witness.cycle.to_string(a.quiver()) + " is not a valid " + std::to_string(witness.m) +
                        "-truncated witness");

    Algebra cycle_algebra(truncated_cycle_algebra(witness.cycle.length(), witness.m, a.field()));
    SummandComparison out{witness.cycle.length(), witness.m, hh_dimensions(a, max_degree, options),
                          hh_dimensions(cycle_algebra, max_degree, options), true};
    for (std::size_t i = 1; i <= max_degree; ++i)
        if (out.hh_algebra[i] < out.hh_cycle_algebra[i])
            out.holds = false;
    return out;
}

} // namespace quiverhh
