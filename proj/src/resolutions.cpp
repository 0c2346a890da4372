#include "quiverhh/resolutions.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace quiverhh {

const std::vector<std::size_t>& SuccessorGraph::successors_of(std::size_t path) const
{
    static const std::vector<std::size_t> none;
    auto it = successors.find(path);
    return it == successors.end() ? none : it->second;
}

std::size_t SuccessorGraph::edge_count() const
{
    std::size_t n = 0;
    for (const auto& [p, out] : successors)
        n += out.size();
    return n;
}

namespace {

void require_monomial(const Algebra& a)
{
    if (!a.is_monomial())
        throw Error(ErrorCode::not_monomial, "this computation needs a monomial algebra");
}

std::size_t arrow_index(const Algebra& a, std::size_t arrow)
{
    return *a.basis().index_of(Path::of_arrow(a.quiver(), arrow));
}

} // namespace

std::vector<std::size_t> minimal_successors(const Algebra& a, std::size_t p)
{
    require_monomial(a);
    const AlgebraBasis& basis = a.basis();
    std::vector<std::size_t> out;
    for (std::size_t q : basis.radical_from(basis.target(p))) {
        if (!a.product(p, q).empty())
            continue;
        const Path& qp = basis.path(q);
        bool minimal = true;
        for (std::size_t len = 1; len < qp.length() && minimal; ++len) {
            Path prefix = Path{qp.source, a.quiver().arrow(qp.arrows[len - 1]).target,
                               std::vector<std::size_t>(qp.arrows.begin(), qp.arrows.begin() + len)};
            auto idx = basis.index_of(prefix);
            if (!idx)
                throw Error(ErrorCode::invalid_argument, "prefix of a nonzero path vanished");
            if (a.product(p, *idx).empty())
                minimal = false;
        }
        if (minimal)
            out.push_back(q);
    }
    // Minimal annihilators of a monomial ideal form a prefix-free set.
    for (std::size_t x : out)
        for (std::size_t y : out) {
            const auto& px = basis.path(x).arrows;
            const auto& py = basis.path(y).arrows;
            if (x != y && px.size() < py.size() && std::equal(px.begin(), px.end(), py.begin()))
                throw Error(ErrorCode::invalid_argument, "successor set is not prefix-free");
        }
    return out;
}

SuccessorGraph build_successor_graph(const Algebra& a)
{
    require_monomial(a);
    SuccessorGraph g;
    std::set<std::size_t> seen;
    std::deque<std::size_t> queue;
    for (std::size_t arrow = 0; arrow < a.quiver().arrow_count(); ++arrow) {
        std::size_t p = arrow_index(a, arrow);
        if (seen.insert(p).second)
            queue.push_back(p);
    }
    while (!queue.empty()) {
        std::size_t p = queue.front();
        queue.pop_front();
        g.nodes.push_back(p);
        auto succ = minimal_successors(a, p);
        for (std::size_t q : succ)
            if (seen.insert(q).second)
                queue.push_back(q);
        g.successors.emplace(p, std::move(succ));
    }
    return g;
}

PdResult pd_simple_monomial(const Algebra& a, const SuccessorGraph& g, std::size_t vertex)
{
    require_monomial(a);
    std::vector<std::size_t> starts;
    for (std::size_t arrow : a.quiver().arrows_from(vertex))
        starts.push_back(arrow_index(a, arrow));
    if (starts.empty())
        return PdResult{0, {}};

    enum Colour : char { white, grey, black };
    std::map<std::size_t, Colour> colour;
    std::map<std::size_t, std::size_t> longest; // edges on the longest chain from a node
    std::map<std::size_t, std::size_t> next;
    auto colour_of = [&](std::size_t p) {
        auto it = colour.find(p);
        return it == colour.end() ? white : it->second;
    };

    for (std::size_t root : starts) {
        if (colour_of(root) != white)
            continue;
        std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
        colour[root] = grey;
        while (!stack.empty()) {
            auto& [node, edge] = stack.back();
            const auto& succ = g.successors_of(node);
            if (edge < succ.size()) {
                std::size_t child = succ[edge++];
                Colour c = colour_of(child);
                if (c == grey) {
                    std::vector<std::size_t> cycle;
                    auto it = std::find_if(stack.begin(), stack.end(),
                                           [&](const auto& e) { return e.first == child; });
                    for (; it != stack.end(); ++it)
                        cycle.push_back(it->first);
                    return PdResult{std::nullopt, std::move(cycle)};
                }
                if (c == white) {
                    colour[child] = grey;
                    stack.emplace_back(child, 0);
                }
                continue;
            }
            std::size_t best = 0;
            for (std::size_t s : succ)
                if (longest[s] + 1 > best) {
                    best = longest[s] + 1;
                    next[node] = s;
                }
            longest[node] = best;
            colour[node] = black;
            stack.pop_back();
        }
    }

    std::size_t best_root = starts.front();
    for (std::size_t r : starts)
        if (longest[r] > longest[best_root])
            best_root = r;
    PdResult result{1 + longest[best_root], {best_root}};
    for (std::size_t p = best_root; next.count(p);) {
        p = next[p];
        result.witness.push_back(p);
    }
    return result;
}

PdResult pd_simple_monomial(const Algebra& a, std::size_t vertex)
{
    return pd_simple_monomial(a, build_successor_graph(a), vertex);
}

PdResult gldim_monomial(const Algebra& a)
{
    SuccessorGraph g = build_successor_graph(a);
    PdResult best{0, {}};
    for (std::size_t v = 0; v < a.quiver().vertex_count(); ++v) {
        PdResult r = pd_simple_monomial(a, g, v);
        if (r.is_infinite())
            return r;
        if (*r.value > *best.value)
            best = std::move(r);
    }
    return best;
}

// ---------------------------------------------------------------------------
// Representations

std::size_t Representation::total_dimension() const
{
    std::size_t n = 0;
    for (std::size_t d : dims)
        n += d;
    return n;
}

Representation simple_representation(const Algebra& a, std::size_t vertex)
{
    const Quiver& q = a.quiver();
    Representation m;
    m.dims.assign(q.vertex_count(), 0);
    m.dims.at(vertex) = 1;
    for (const Arrow& arrow : q.arrows())
        m.maps.emplace_back(m.dims[arrow.target], m.dims[arrow.source], a.field());
    return m;
}

Representation projective_representation(const Algebra& a, std::size_t vertex)
{
    const Quiver& q = a.quiver();
    const AlgebraBasis& basis = a.basis();
    Representation m;
    std::vector<std::size_t> local(basis.dimension(), 0);
    for (std::size_t u = 0; u < q.vertex_count(); ++u) {
        const auto& paths = basis.between(vertex, u);
        m.dims.push_back(paths.size());
        for (std::size_t j = 0; j < paths.size(); ++j)
            local[paths[j]] = j;
    }
    for (std::size_t arrow = 0; arrow < q.arrow_count(); ++arrow) {
        const Arrow& ar = q.arrow(arrow);
        std::size_t ai = arrow_index(a, arrow);
        SparseMatrix map(m.dims[ar.target], m.dims[ar.source], a.field());
        const auto& paths = basis.between(vertex, ar.source);
        for (std::size_t j = 0; j < paths.size(); ++j) {
            SparseVector col;
            for (const auto& [k, c] : a.product(paths[j], ai))
                col.emplace_back(local[k], c);
            map.set_column(j, std::move(col));
        }
        m.maps.push_back(std::move(map));
    }
    return m;
}

SparseVector act(const Representation& m, const Path& p, SparseVector x)
{
    for (std::size_t arrow : p.arrows)
        x = m.maps.at(arrow).apply(x);
    return x;
}

void check_representation(const Algebra& a, const Representation& m)
{
    const Quiver& q = a.quiver();
    if (m.dims.size() != q.vertex_count() || m.maps.size() != q.arrow_count())
        throw Error(ErrorCode::relation_violation, "representation does not match the quiver");
    for (std::size_t arrow = 0; arrow < q.arrow_count(); ++arrow) {
        const Arrow& ar = q.arrow(arrow);
        if (m.maps[arrow].rows() != m.dims[ar.target] || m.maps[arrow].cols() != m.dims[ar.source])
            throw Error(ErrorCode::relation_violation, "matrix of '" + ar.name + "' has the wrong shape");
    }
    for (const FreeElement& rel : a.presentation().relations) {
        if (rel.empty())
            continue;
        std::size_t s = rel.begin()->first.source;
        for (std::size_t j = 0; j < m.dims[s]; ++j) {
            SparseVector total;
            for (const auto& [path, c] : rel)
                total = axpy(total, c, act(m, path, {{j, Rational(1)}}), a.field());
            if (!total.empty())
                throw Error(ErrorCode::relation_violation, "a relation does not act as zero");
        }
    }
}

CoverAndSyzygy projective_cover_and_syzygy(const Algebra& a, const Representation& m,
                                           const ResolutionOptions& options)
{
    check_representation(a, m);
    const Quiver& q = a.quiver();
    const AlgebraBasis& basis = a.basis();
    const Field& field = a.field();
    const std::size_t n = q.vertex_count();

    // top(M) = M / MJ: complete the image of the incoming arrows by unit vectors.
    struct Generator {
        std::size_t vertex;
        std::size_t coordinate;
    };
    std::vector<Generator> generators;
    CoverAndSyzygy out;
    out.multiplicities.assign(n, 0);
    for (std::size_t w = 0; w < n; ++w) {
        std::vector<SparseVector> image;
        for (std::size_t arrow = 0; arrow < q.arrow_count(); ++arrow)
            if (q.arrow(arrow).target == w)
                for (std::size_t c = 0; c < m.maps[arrow].cols(); ++c)
                    if (!m.maps[arrow].column(c).empty())
                        image.push_back(m.maps[arrow].column(c));
        SparseMatrix rows(image.size(), m.dims[w], field);
        {
            std::vector<SparseVector> cols(m.dims[w]);
            for (std::size_t r = 0; r < image.size(); ++r)
                for (const auto& [c, v] : image[r])
                    cols[c].emplace_back(r, v);
            for (std::size_t c = 0; c < m.dims[w]; ++c)
                rows.set_column(c, std::move(cols[c]));
        }
        EchelonForm form = rref(rows);
        std::vector<bool> pivot(m.dims[w], false);
        for (std::size_t c : form.pivot_columns)
            pivot[c] = true;
        for (std::size_t c = 0; c < m.dims[w]; ++c)
            if (!pivot[c]) {
                generators.push_back({w, c});
                ++out.multiplicities[w];
            }
    }

    // Basis of the cover at each vertex u: (generator, basis path from its vertex to u).
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> cover_basis(n);
    std::vector<std::map<std::pair<std::size_t, std::size_t>, std::size_t>> cover_index(n);
    std::size_t cover_dim = 0;
    for (std::size_t g = 0; g < generators.size(); ++g)
        for (std::size_t p : basis.from(generators[g].vertex)) {
            std::size_t u = basis.target(p);
            cover_index[u].emplace(std::pair{g, p}, cover_basis[u].size());
            cover_basis[u].emplace_back(g, p);
            ++cover_dim;
        }
    if (cover_dim > options.dimension_cap)
        throw Error(ErrorCode::resource_limit, "projective cover of dimension " + std::to_string(cover_dim) +
                                                   " exceeds the cap of " + std::to_string(options.dimension_cap));

    // Kernel of the cover map at each vertex.
    std::vector<KernelBasis> kernels;
    for (std::size_t u = 0; u < n; ++u) {
        SparseMatrix phi(m.dims[u], cover_basis[u].size(), field);
        for (std::size_t j = 0; j < cover_basis[u].size(); ++j) {
            auto [g, p] = cover_basis[u][j];
            phi.set_column(j, act(m, basis.path(p), {{generators[g].coordinate, Rational(1)}}));
        }
        kernels.push_back(kernel(phi));
    }

    Representation& syz = out.syzygy;
    for (std::size_t u = 0; u < n; ++u)
        syz.dims.push_back(kernels[u].vectors.size());
    for (std::size_t arrow = 0; arrow < q.arrow_count(); ++arrow) {
        const Arrow& ar = q.arrow(arrow);
        std::size_t ai = arrow_index(a, arrow);
        const KernelBasis& from = kernels[ar.source];
        const KernelBasis& to = kernels[ar.target];
        std::vector<std::size_t> free_slot(cover_basis[ar.target].size(), SIZE_MAX);
        for (std::size_t j = 0; j < to.free_columns.size(); ++j)
            free_slot[to.free_columns[j]] = j;
        SparseMatrix map(syz.dims[ar.target], syz.dims[ar.source], field);
        for (std::size_t j = 0; j < from.vectors.size(); ++j) {
            // (sum c (g, p)) * arrow = sum c (g, p * arrow), read off at free columns.
            SparseVector image;
            for (const auto& [idx, c] : from.vectors[j]) {
                auto [g, p] = cover_basis[ar.source][idx];
                for (const auto& [k, d] : a.product(p, ai))
                    image.emplace_back(cover_index[ar.target].at({g, k}), c * d);
            }
            image = normalize(std::move(image), field);
            SparseVector coords;
            for (const auto& [idx, c] : image)
                if (free_slot[idx] != SIZE_MAX)
                    coords.emplace_back(free_slot[idx], c);
            map.set_column(j, std::move(coords));
        }
        syz.maps.push_back(std::move(map));
    }
    return out;
}

CutoffPd pd_simple_cutoff(const Algebra& a, std::size_t vertex, std::size_t cutoff,
                          const ResolutionOptions& options)
{
    CutoffPd out;
    Representation m = simple_representation(a, vertex);
    for (std::size_t k = 0; k <= cutoff; ++k) {
        CoverAndSyzygy step = projective_cover_and_syzygy(a, m, options);
        out.cover_multiplicities.push_back(step.multiplicities);
        out.syzygy_dimensions.push_back(step.syzygy.total_dimension());
        if (step.syzygy.is_zero()) {
            out.value = k;
            return out;
        }
        m = std::move(step.syzygy);
    }
    out.at_least = cutoff + 1;
    return out;
}

GldimCutoff gldim_cutoff(const Algebra& a, std::size_t cutoff, const ResolutionOptions& options)
{
    GldimCutoff out;
    std::size_t max_finite = 0;
    bool all_finite = true;
    for (std::size_t v = 0; v < a.quiver().vertex_count(); ++v) {
        out.per_vertex.push_back(pd_simple_cutoff(a, v, cutoff, options));
        const CutoffPd& r = out.per_vertex.back();
        if (r.value)
            max_finite = std::max(max_finite, *r.value);
        else
            all_finite = false;
    }
    if (all_finite)
        out.exact = max_finite;
    out.at_least = all_finite ? max_finite : cutoff + 1;
    return out;
}

std::size_t default_cutoff(const Algebra& a)
{
    return 2 * a.dimension();
}

} // namespace quiverhh
