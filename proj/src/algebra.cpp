#include "quiverhh/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace quiverhh {

AlgebraBasis::AlgebraBasis(std::size_t vertex_count, std::vector<Path> paths)
    : vertex_count_(vertex_count), paths_(std::move(paths)),
      between_(vertex_count * vertex_count), from_(vertex_count), radical_from_(vertex_count)
{
    for (std::size_t i = 0; i < paths_.size(); ++i) {
        const Path& p = paths_[i];
        index_.emplace(p, i);
        between_[p.source * vertex_count_ + p.target].push_back(i);
        from_[p.source].push_back(i);
        if (!p.is_trivial())
            radical_from_[p.source].push_back(i);
    }
}

std::optional<std::size_t> AlgebraBasis::index_of(const Path& p) const
{
    auto it = index_.find(p);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

const std::vector<std::size_t>& AlgebraBasis::between(std::size_t s, std::size_t t) const
{
    return between_.at(s * vertex_count_ + t);
}

std::size_t AlgebraBasis::max_length() const
{
    return paths_.empty() ? 0 : paths_.back().length();
}

namespace {

/// Extends each path of `level` by every arrow leaving its target, keeping
/// length-lex order.
template <class Keep>
std::vector<Path> extend_level(const Quiver& q, const std::vector<Path>& level, Keep keep)
{
    std::vector<Path> next;
    for (const Path& p : level) {
        for (std::size_t a : q.arrows_from(p.target)) {
            Path ext{p.source, q.arrow(a).target, p.arrows};
            ext.arrows.push_back(a);
            if (keep(ext))
                next.push_back(std::move(ext));
        }
    }
    return next;
}

std::vector<Path> trivial_paths(const Quiver& q)
{
    std::vector<Path> out;
    for (std::size_t v = 0; v < q.vertex_count(); ++v)
        out.push_back(Path::trivial(v));
    return out;
}

bool contains_word(const std::vector<std::size_t>& hay, const std::vector<std::size_t>& needle)
{
    return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

bool has_cycle(const std::vector<std::vector<std::size_t>>& adj)
{
    enum Colour : char { white, grey, black };
    std::vector<Colour> colour(adj.size(), white);
    for (std::size_t root = 0; root < adj.size(); ++root) {
        if (colour[root] != white)
            continue;
        std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
        colour[root] = grey;
        while (!stack.empty()) {
            auto& [node, next] = stack.back();
            if (next < adj[node].size()) {
                std::size_t child = adj[node][next++];
                if (colour[child] == grey)
                    return true;
                if (colour[child] == white) {
                    colour[child] = grey;
                    stack.emplace_back(child, 0);
                }
            } else {
                colour[node] = black;
                stack.pop_back();
            }
        }
    }
    return false;
}

struct GaussianData {
    std::vector<Path> basis;
    std::map<Path, AlgebraElement> rewrite; // keyed by pivot path, coordinates over `basis`
    std::vector<Path> all_paths;
};

GaussianData gaussian_reduction(const AlgebraPresentation& pres, std::size_t nilbound)
{
    const Quiver& q = pres.quiver;
    const Field& field = pres.field;
    GaussianData data;

    // All paths of length < nilbound in basis order.
    std::vector<Path> level = trivial_paths(q);
    for (std::size_t len = 0; len < nilbound && !level.empty(); ++len) {
        data.all_paths.insert(data.all_paths.end(), level.begin(), level.end());
        level = extend_level(q, level, [](const Path&) { return true; });
    }
    const std::size_t total = data.all_paths.size();
    std::map<Path, std::size_t> position;
    std::vector<std::vector<std::size_t>> ending_at(q.vertex_count()), starting_at(q.vertex_count());
    for (std::size_t i = 0; i < total; ++i) {
        const Path& p = data.all_paths[i];
        position.emplace(p, i);
        ending_at[p.target].push_back(i);
        starting_at[p.source].push_back(i);
    }
    // Column order is reversed so that each row's pivot is its largest path.
    auto column_of = [&](const Path& p) { return total - 1 - position.at(p); };

    std::vector<SparseVector> rows;
    for (const FreeElement& rel : pres.relations) {
        if (rel.empty())
            continue;
        std::size_t min_len = rel.begin()->first.length();
        for (const auto& [path, c] : rel)
            min_len = std::min(min_len, path.length());
        if (min_len >= nilbound)
            continue;
        std::size_t s = rel.begin()->first.source;
        std::size_t t = rel.begin()->first.target;
        for (std::size_t pi : ending_at[s]) {
            const Path& p = data.all_paths[pi];
            if (p.length() + min_len > nilbound - 1)
                continue;
            for (std::size_t qi : starting_at[t]) {
                const Path& r = data.all_paths[qi];
                if (p.length() + min_len + r.length() > nilbound - 1)
                    continue;
                SparseVector row;
                for (const auto& [term, c] : rel) {
                    if (p.length() + term.length() + r.length() >= nilbound)
                        continue;
                    Path full = *compose_paths(*compose_paths(p, term), r);
                    row.emplace_back(column_of(full), c);
                }
                row = normalize(std::move(row), field);
                if (!row.empty())
                    rows.push_back(std::move(row));
            }
        }
    }

    EchelonForm form = [&] {
        // rows -> matrix with `total` columns
        SparseMatrix rm(rows.size(), total, field);
        std::vector<SparseVector> cols(total);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (const auto& [c, v] : rows[r])
                cols[c].emplace_back(r, v);
        for (std::size_t c = 0; c < total; ++c)
            rm.set_column(c, std::move(cols[c]));
        return rref(rm);
    }();

    std::vector<bool> is_pivot(total, false);
    for (std::size_t c : form.pivot_columns)
        is_pivot[c] = true;
    std::vector<std::size_t> basis_index_of_column(total, 0);
    for (std::size_t i = 0; i < total; ++i) {
        std::size_t c = total - 1 - i;
        if (!is_pivot[c]) {
            basis_index_of_column[c] = data.basis.size();
            data.basis.push_back(data.all_paths[i]);
        }
    }
    for (std::size_t r = 0; r < form.rank; ++r) {
        std::size_t pc = form.pivot_columns[r];
        AlgebraElement nf;
        for (const auto& [c, v] : form.reduced_rows[r])
            if (c != pc)
                nf.emplace_back(basis_index_of_column[c], field.neg(v));
        data.rewrite.emplace(data.all_paths[total - 1 - pc], normalize(std::move(nf), field));
    }
    return data;
}

} // namespace

Algebra::Algebra(AlgebraPresentation presentation, BasisMethod method, std::optional<std::size_t> nilbound)
    : presentation_(std::move(presentation))
{
    check_relations(presentation_);
    if (method == BasisMethod::automatic && presentation_.monomial) {
        build_monomial();
    } else {
        std::optional<std::size_t> n = nilbound ? nilbound : presentation_.nilbound;
        if (!n)
            throw Error(ErrorCode::missing_nilbound,
                        "relations with several terms need a 'nilbound:' line");
        if (*n == 0)
            throw Error(ErrorCode::invalid_argument, "nilbound must be positive");
        build_gaussian(*n);
    }

    const std::size_t dim = basis_.dimension();
    table_.assign(dim * dim, {});
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            if (auto p = compose_paths(basis_.path(i), basis_.path(j)))
                table_[i * dim + j] = normal_form(*p);
}

void Algebra::build_monomial()
{
    const Quiver& q = presentation_.quiver;
    std::vector<std::vector<std::size_t>> words;
    for (const FreeElement& rel : presentation_.relations)
        if (!rel.empty())
            words.push_back(rel.begin()->first.arrows);
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    for (const auto& w : words) {
        bool minimal = std::none_of(words.begin(), words.end(), [&](const auto& other) {
            return other != w && contains_word(w, other);
        });
        if (minimal)
            forbidden_.push_back(w);
    }

    auto avoids = [&](const Path& p) {
        // p's proper prefix already avoids every forbidden word, so only suffixes matter.
        for (const auto& f : forbidden_)
            if (f.size() <= p.arrows.size() &&
                std::equal(f.rbegin(), f.rend(), p.arrows.rbegin()))
                return false;
        return true;
    };

    std::size_t window = 0;
    for (const auto& f : forbidden_)
        window = std::max(window, f.size() - 1);

    std::vector<Path> all;
    std::vector<Path> level = trivial_paths(q);
    for (std::size_t len = 0; len < window && !level.empty(); ++len) {
        all.insert(all.end(), level.begin(), level.end());
        level = extend_level(q, level, avoids);
    }

    // Nonzero paths of length `window` form the states of the forbidden-word
    // automaton; a cycle among them yields arbitrarily long nonzero paths.
    {
        std::map<Path, std::size_t> state;
        for (std::size_t i = 0; i < level.size(); ++i)
            state.emplace(level[i], i);
        std::vector<std::vector<std::size_t>> adj(level.size());
        for (std::size_t i = 0; i < level.size(); ++i) {
            for (const Path& ext : extend_level(q, {level[i]}, avoids)) {
                Path tail;
                if (window == 0) {
                    tail = Path::trivial(ext.target);
                } else {
                    tail = Path{q.arrow(ext.arrows[1]).source, ext.target,
                                std::vector<std::size_t>(ext.arrows.begin() + 1, ext.arrows.end())};
                }
                adj[i].push_back(state.at(tail));
            }
        }
        if (has_cycle(adj))
            throw Error(ErrorCode::infinite_dimensional,
                        "the relations leave an oriented cycle of nonzero paths; the algebra is infinite dimensional");
    }

    while (!level.empty()) {
        all.insert(all.end(), level.begin(), level.end());
        level = extend_level(q, level, avoids);
    }
    basis_ = AlgebraBasis(q.vertex_count(), std::move(all));
    nilpotency_ = basis_.max_length() + 1;
}

void Algebra::build_gaussian(std::size_t nilbound)
{
    gaussian_ = true;
    nilbound_ = nilbound;
    GaussianData data = gaussian_reduction(presentation_, nilbound);
    GaussianData check = gaussian_reduction(presentation_, nilbound + 1);
    if (check.basis.size() != data.basis.size())
        throw Error(ErrorCode::nilbound_violated,
                    "basis dimension changes from " + std::to_string(data.basis.size()) + " to " +
                        std::to_string(check.basis.size()) + " when the nilbound grows from " +
                        std::to_string(nilbound) + "; increase the nilbound");
    basis_ = AlgebraBasis(presentation_.quiver.vertex_count(), std::move(data.basis));
    rewrite_ = std::move(data.rewrite);

    nilpotency_ = nilbound;
    for (std::size_t k = 1; k < nilbound; ++k) {
        bool all_zero = true;
        for (const Path& p : data.all_paths)
            if (p.length() == k && !normal_form(p).empty()) {
                all_zero = false;
                break;
            }
        if (all_zero) {
            nilpotency_ = k;
            break;
        }
    }
}

AlgebraElement Algebra::normal_form(const Path& p) const
{
    if (auto i = basis_.index_of(p))
        return basis_element(*i);
    if (!gaussian_ || p.length() >= nilbound_)
        return {};
    auto it = rewrite_.find(p);
    return it == rewrite_.end() ? AlgebraElement{} : it->second;
}

AlgebraElement Algebra::normal_form(const FreeElement& x) const
{
    AlgebraElement terms;
    for (const auto& [path, c] : x)
        for (const auto& [i, v] : normal_form(path))
            terms.emplace_back(i, c * v);
    return normalize(std::move(terms), field());
}

AlgebraElement Algebra::multiply(const AlgebraElement& u, const AlgebraElement& v) const
{
    AlgebraElement terms;
    for (const auto& [i, x] : u)
        for (const auto& [j, y] : v)
            for (const auto& [k, z] : product(i, j))
                terms.emplace_back(k, x * y * z);
    return normalize(std::move(terms), field());
}

std::string Algebra::element_to_string(const AlgebraElement& x) const
{
    if (x.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [i, c] : x) {
        Rational mag = abs(c);
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        if (mag != 1)
            out << mag.get_str() << " ";
        out << path_to_string(quiver(), basis_.path(i));
        first = false;
    }
    return out.str();
}

AlgebraBasis compute_basis(const AlgebraPresentation& p)
{
    return Algebra(p).basis();
}

ValidationReport validate_presentation(const AlgebraPresentation& p)
{
    ValidationReport report;
    report.monomial = p.monomial;
    try {
        Algebra a(p);
        report.ok = true;
        report.dimension = a.dimension();
        report.nilpotency_index = a.nilpotency_index();
        report.monomial = a.is_monomial();
    } catch (const Error& e) {
        report.error = e.code();
        report.message = e.what();
    }
    return report;
}

} // namespace quiverhh
