#pragma once

// Brute-force reference computations for monomial algebras. Nothing here
// calls into the library beyond reading the presentation.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "quiverhh/presentation.hpp"

namespace oracle {

struct Word {
    std::size_t source;
    std::size_t target;
    std::vector<std::size_t> arrows;
    bool operator<(const Word& o) const
    {
        return std::tie(source, target, arrows) < std::tie(o.source, o.target, o.arrows);
    }
    bool operator==(const Word& o) const = default;
};

struct Monomial {
    const quiverhh::AlgebraPresentation& p;
    std::vector<std::vector<std::size_t>> forbidden;

    explicit Monomial(const quiverhh::AlgebraPresentation& pres) : p(pres)
    {
        for (const auto& rel : p.relations)
            forbidden.push_back(rel.begin()->first.arrows);
    }

    bool vanishes(const std::vector<std::size_t>& w) const
    {
        for (const auto& f : forbidden)
            if (std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end())
                return true;
        return false;
    }

    // All nonzero paths up to the given length, trivial ones included.
    std::vector<Word> paths(std::size_t max_len) const
    {
        std::vector<Word> out;
        std::vector<Word> layer;
        for (std::size_t v = 0; v < p.quiver.vertex_count(); ++v)
            layer.push_back({v, v, {}});
        for (std::size_t len = 0; len <= max_len && !layer.empty(); ++len) {
            out.insert(out.end(), layer.begin(), layer.end());
            std::vector<Word> next;
            for (const Word& w : layer)
                for (std::size_t a = 0; a < p.quiver.arrow_count(); ++a) {
                    if (p.quiver.arrow(a).source != w.target)
                        continue;
                    Word x = w;
                    x.arrows.push_back(a);
                    x.target = p.quiver.arrow(a).target;
                    if (!vanishes(x.arrows))
                        next.push_back(x);
                }
            layer = std::move(next);
        }
        return out;
    }

    // Product of two basis words, nullopt when zero or not composable.
    std::optional<Word> product(const Word& x, const Word& y) const
    {
        if (x.target != y.source)
            return std::nullopt;
        Word z{x.source, y.target, x.arrows};
        z.arrows.insert(z.arrows.end(), y.arrows.begin(), y.arrows.end());
        if (vanishes(z.arrows))
            return std::nullopt;
        return z;
    }
};

inline std::size_t dense_rank(std::vector<std::vector<mpq_class>> m)
{
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][c] == 0)
            ++pivot;
        if (pivot == m.size())
            continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0)
                continue;
            mpq_class f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k)
                m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

using Tuple = std::vector<Word>;

// Degree-q tuples of the normalized complex by exhaustive product search.
inline std::vector<Tuple> tuples(const std::vector<Word>& basis, std::size_t q)
{
    std::vector<Tuple> out;
    std::vector<Tuple> partial;
    for (const Word& w : basis)
        partial.push_back({w});
    for (std::size_t i = 0; i < q; ++i) {
        std::vector<Tuple> next;
        for (const Tuple& t : partial)
            for (const Word& w : basis)
                if (!w.arrows.empty() && w.source == t.back().target) {
                    Tuple u = t;
                    u.push_back(w);
                    next.push_back(u);
                }
        partial = std::move(next);
    }
    for (const Tuple& t : partial)
        if (t.back().target == t.front().source)
            out.push_back(t);
    std::sort(out.begin(), out.end());
    return out;
}

// Dense matrix of b_q: C_q -> C_{q-1}, rows indexed by the codomain tuples.
inline std::vector<std::vector<mpq_class>> boundary(const Monomial& alg, const std::vector<Tuple>& dom,
                                                    const std::vector<Tuple>& cod)
{
    std::map<Tuple, std::size_t> row;
    for (std::size_t i = 0; i < cod.size(); ++i)
        row[cod[i]] = i;
    std::vector<std::vector<mpq_class>> m(cod.size(), std::vector<mpq_class>(dom.size()));
    for (std::size_t c = 0; c < dom.size(); ++c) {
        const Tuple& t = dom[c];
        const std::size_t q = t.size() - 1;
        for (std::size_t i = 0; i < q; ++i) {
            auto prod = alg.product(t[i], t[i + 1]);
            if (!prod)
                continue;
            Tuple u(t.begin(), t.begin() + i);
            u.push_back(*prod);
            u.insert(u.end(), t.begin() + i + 2, t.end());
            m[row.at(u)][c] += (i % 2 == 0) ? 1 : -1;
        }
        auto prod = alg.product(t[q], t[0]);
        if (prod) {
            Tuple u{*prod};
            u.insert(u.end(), t.begin() + 1, t.begin() + q);
            m[row.at(u)][c] += (q % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

inline std::vector<std::size_t> hh(const quiverhh::AlgebraPresentation& p, std::size_t max_degree,
                                   std::size_t max_path_len = 32)
{
    Monomial alg(p);
    auto basis = alg.paths(max_path_len);
    std::vector<std::vector<Tuple>> chains;
    for (std::size_t q = 0; q <= max_degree + 1; ++q)
        chains.push_back(tuples(basis, q));
    std::vector<std::size_t> ranks(max_degree + 2, 0);
    for (std::size_t q = 1; q <= max_degree + 1; ++q)
        ranks[q] = dense_rank(boundary(alg, chains[q], chains[q - 1]));
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q <= max_degree; ++q)
        out.push_back(chains[q].size() - ranks[q] - ranks[q + 1]);
    return out;
}

// Closed arrow words of length l whose cyclic m-windows are zero and whose
// cyclic (m-1)-windows are nonzero and pairwise distinct, so each word is an
// elementary closed walk on (m-1)-windows. Deduplicated up to rotation.
inline std::set<std::vector<std::size_t>> truncated_cycles(const quiverhh::AlgebraPresentation& p,
                                                           std::size_t m, std::size_t max_len)
{
    Monomial alg(p);
    const auto& q = p.quiver;
    std::set<std::vector<std::size_t>> out;
    std::vector<std::vector<std::size_t>> words{{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& w : words)
            for (std::size_t a = 0; a < q.arrow_count(); ++a)
                if (w.empty() || q.arrow(w.back()).target == q.arrow(a).source) {
                    auto x = w;
                    x.push_back(a);
                    next.push_back(x);
                }
        words = std::move(next);
        for (const auto& w : words) {
            if (q.arrow(w.back()).target != q.arrow(w.front()).source)
                continue;
            bool periodic = false;
            for (std::size_t d = 1; d < len && !periodic; ++d)
                if (len % d == 0 && std::equal(w.begin() + d, w.end(), w.begin()))
                    periodic = true;
            if (periodic)
                continue;
            bool ok = true;
            std::set<std::vector<std::size_t>> nodes;
            for (std::size_t i = 0; i < len && ok; ++i) {
                std::vector<std::size_t> win;
                for (std::size_t k = 0; k < m; ++k)
                    win.push_back(w[(i + k) % len]);
                std::vector<std::size_t> shorter(win.begin(), win.end() - 1);
                ok = alg.vanishes(win) && !alg.vanishes(shorter) && nodes.insert(shorter).second;
            }
            if (!ok)
                continue;
            auto best = w;
            for (std::size_t r = 1; r < len; ++r) {
                std::vector<std::size_t> rot(w.begin() + r, w.end());
                rot.insert(rot.end(), w.begin(), w.begin() + r);
                best = std::min(best, rot);
            }
            out.insert(best);
        }
    }
    return out;
}

} // namespace oracle
