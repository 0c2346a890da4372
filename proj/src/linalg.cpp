#include "quiverhh/linalg.hpp"

#include <algorithm>
#include <unordered_map>

#include "quiverhh/error.hpp"

namespace quiverhh {

SparseVector normalize(SparseVector terms, const Field& field)
{
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVector out;
    out.reserve(terms.size());
    for (auto& [index, value] : terms) {
        if (!out.empty() && out.back().first == index)
            out.back().second += value;
        else
            out.emplace_back(index, std::move(value));
    }
    SparseVector result;
    result.reserve(out.size());
    for (auto& [index, value] : out) {
        Rational r = field.reduce(value);
        if (r != 0)
            result.emplace_back(index, std::move(r));
    }
    return result;
}

SparseVector axpy(const SparseVector& x, const Rational& factor, const SparseVector& y,
                  const Field& field)
{
    SparseVector out;
    out.reserve(x.size() + y.size());
    auto i = x.begin();
    auto j = y.begin();
    while (i != x.end() || j != y.end()) {
        if (j == y.end() || (i != x.end() && i->first < j->first)) {
            out.push_back(*i++);
        } else if (i == x.end() || j->first < i->first) {
            Rational v = field.mul(factor, j->second);
            if (v != 0)
                out.emplace_back(j->first, std::move(v));
            ++j;
        } else {
            Rational v = field.reduce(i->second + factor * j->second);
            if (v != 0)
                out.emplace_back(i->first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// SparseMatrix

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), columns_(cols)
{
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Rational>>& rows, Field field)
{
    std::size_t n_rows = rows.size();
    std::size_t n_cols = n_rows == 0 ? 0 : rows.front().size();
    SparseMatrix m(n_rows, n_cols, field);
    for (std::size_t c = 0; c < n_cols; ++c) {
        SparseVector col;
        for (std::size_t r = 0; r < n_rows; ++r) {
            if (rows[r].size() != n_cols)
                throw Error(ErrorCode::invalid_argument, "ragged dense matrix");
            col.emplace_back(r, rows[r][c]);
        }
        m.set_column(c, std::move(col));
    }
    return m;
}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, std::vector<SparseVector> columns,
                                        Field field)
{
    SparseMatrix m(rows, columns.size(), field);
    for (std::size_t c = 0; c < columns.size(); ++c)
        m.set_column(c, std::move(columns[c]));
    return m;
}

void SparseMatrix::set_column(std::size_t c, SparseVector entries)
{
    if (c >= cols_)
        throw Error(ErrorCode::invalid_argument, "column index out of range");
    auto col = normalize(std::move(entries), field_);
    if (!col.empty() && col.back().first >= rows_)
        throw Error(ErrorCode::invalid_argument, "row index out of range");
    columns_[c] = std::move(col);
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const
{
    const auto& col = columns_.at(c);
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const auto& e, std::size_t key) { return e.first < key; });
    if (it != col.end() && it->first == r)
        return it->second;
    return 0;
}

void SparseMatrix::set(std::size_t r, std::size_t c, const Rational& value)
{
    if (r >= rows_ || c >= cols_)
        throw Error(ErrorCode::invalid_argument, "matrix index out of range");
    auto& col = columns_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const auto& e, std::size_t key) { return e.first < key; });
    Rational v = field_.reduce(value);
    if (it != col.end() && it->first == r) {
        if (v == 0)
            col.erase(it);
        else
            it->second = v;
    } else if (v != 0) {
        col.insert(it, {r, v});
    }
}

std::size_t SparseMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& col : columns_)
        n += col.size();
    return n;
}

std::vector<SparseVector> SparseMatrix::row_vectors() const
{
    std::vector<SparseVector> rows(rows_);
    for (std::size_t c = 0; c < cols_; ++c)
        for (const auto& [r, v] : columns_[c])
            rows[r].emplace_back(c, v);
    return rows;
}

SparseMatrix SparseMatrix::transpose() const
{
    SparseMatrix t(cols_, rows_, field_);
    t.columns_ = row_vectors();
    return t;
}

SparseVector SparseMatrix::apply(const SparseVector& x) const
{
    SparseVector terms;
    for (const auto& [c, xv] : x) {
        if (c >= cols_)
            throw Error(ErrorCode::invalid_argument, "vector longer than matrix width");
        for (const auto& [r, v] : columns_[c])
            terms.emplace_back(r, xv * v);
    }
    return normalize(std::move(terms), field_);
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw Error(ErrorCode::invalid_argument, "matrix shapes do not compose");
    SparseMatrix out(rows_, rhs.cols_, field_);
    for (std::size_t c = 0; c < rhs.cols_; ++c)
        out.columns_[c] = apply(rhs.columns_[c]);
    return out;
}

// ---------------------------------------------------------------------------
// Elimination engine, instantiated for exact rationals and for word-sized
// residues mod p.

namespace {

struct RationalOps {
    using value_type = Rational;
    bool is_zero(const Rational& a) const { return a == 0; }
    Rational mul(const Rational& a, const Rational& b) const { return a * b; }
    Rational fma(const Rational& a, const Rational& f, const Rational& b) const { return a + f * b; }
    Rational neg(const Rational& a) const { return -a; }
    Rational inv(const Rational& a) const { return 1 / a; }
    Rational from(const Rational& a) const { return a; }
    Rational to(const Rational& a) const { return a; }
};

struct ModOps {
    using value_type = std::uint64_t;
    std::uint64_t p;
    bool is_zero(std::uint64_t a) const { return a == 0; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const
    {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
    }
    std::uint64_t fma(std::uint64_t a, std::uint64_t f, std::uint64_t b) const
    {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(f) * b + a) % p);
    }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
    std::uint64_t inv(std::uint64_t a) const
    {
        // Fermat: a^(p-2)
        std::uint64_t result = 1, base = a, e = p - 2;
        while (e > 0) {
            if (e & 1)
                result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }
    std::uint64_t from(const Rational& a) const { return a.get_num().get_ui(); }
    Rational to(std::uint64_t a) const { return Rational(mpz_class(static_cast<unsigned long>(a))); }
};

template <class Ops>
class Echelon {
public:
    using T = typename Ops::value_type;
    using Vec = std::vector<std::pair<std::size_t, T>>;

    explicit Echelon(Ops ops) : ops_(ops) {}

    static Vec convert(const SparseVector& v, const Ops& ops)
    {
        Vec out;
        out.reserve(v.size());
        for (const auto& [i, x] : v)
            out.emplace_back(i, ops.from(x));
        return out;
    }

    /// Adds v to the row space; returns false if it was already dependent.
    bool insert(Vec v)
    {
        reduce_leading(v);
        if (v.empty())
            return false;
        T scale = ops_.inv(v.front().second);
        for (auto& e : v)
            e.second = ops_.mul(e.second, scale);
        pivot_row_.emplace(v.front().first, rows_.size());
        rows_.push_back(std::move(v));
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

    EchelonForm finish()
    {
        std::vector<std::size_t> order(rows_.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return rows_[a].front().first > rows_[b].front().first;
        });
        // Back substitution from the rightmost pivot leftwards.
        for (std::size_t r : order) {
            Vec& v = rows_[r];
            std::size_t pos = 1;
            while (pos < v.size()) {
                auto it = pivot_row_.find(v[pos].first);
                if (it == pivot_row_.end()) {
                    ++pos;
                    continue;
                }
                T factor = ops_.neg(v[pos].second);
                v = combine(v, factor, rows_[it->second]);
            }
        }
        EchelonForm form;
        form.rank = rows_.size();
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const Vec& v = rows_[*it];
            form.pivot_columns.push_back(v.front().first);
            SparseVector row;
            row.reserve(v.size());
            for (const auto& [i, x] : v)
                row.emplace_back(i, ops_.to(x));
            form.reduced_rows.push_back(std::move(row));
        }
        return form;
    }

private:
    void reduce_leading(Vec& v) const
    {
        while (!v.empty()) {
            auto it = pivot_row_.find(v.front().first);
            if (it == pivot_row_.end())
                return;
            T factor = ops_.neg(v.front().second);
            v = combine(v, factor, rows_[it->second]);
        }
    }

    Vec combine(const Vec& x, const T& factor, const Vec& y) const
    {
        Vec out;
        out.reserve(x.size() + y.size());
        auto i = x.begin();
        auto j = y.begin();
        while (i != x.end() || j != y.end()) {
            if (j == y.end() || (i != x.end() && i->first < j->first)) {
                out.push_back(*i++);
            } else if (i == x.end() || j->first < i->first) {
                T v = ops_.mul(factor, j->second);
                if (!ops_.is_zero(v))
                    out.emplace_back(j->first, std::move(v));
                ++j;
            } else {
                T v = ops_.fma(i->second, factor, j->second);
                if (!ops_.is_zero(v))
                    out.emplace_back(i->first, std::move(v));
                ++i;
                ++j;
            }
        }
        return out;
    }

    Ops ops_;
    std::vector<Vec> rows_;
    std::unordered_map<std::size_t, std::size_t> pivot_row_;
};

template <class Fn>
auto with_engine(const Field& field, Fn&& fn)
{
    if (field.is_prime())
        return fn(Echelon<ModOps>(ModOps{field.characteristic()}), ModOps{field.characteristic()});
    return fn(Echelon<RationalOps>(RationalOps{}), RationalOps{});
}

EchelonForm rref_of_rows(const std::vector<SparseVector>& rows, const Field& field)
{
    return with_engine(field, [&](auto engine, auto ops) {
        for (const auto& row : rows)
            engine.insert(decltype(engine)::convert(row, ops));
        return engine.finish();
    });
}

} // namespace

EchelonForm rref(const SparseMatrix& m)
{
    return rref_of_rows(m.row_vectors(), m.field());
}

std::size_t rank_of(const std::vector<SparseVector>& vectors, const Field& field)
{
    return with_engine(field, [&](auto engine, auto ops) {
        for (const auto& v : vectors)
            engine.insert(decltype(engine)::convert(normalize(v, field), ops));
        return engine.rank();
    });
}

std::size_t rank(const SparseMatrix& m)
{
    // Column rank; the columns are already stored contiguously.
    return with_engine(m.field(), [&](auto engine, auto ops) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            engine.insert(decltype(engine)::convert(m.column(c), ops));
        return engine.rank();
    });
}

KernelBasis kernel(const SparseMatrix& m)
{
    EchelonForm form = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : form.pivot_columns)
        is_pivot[c] = true;

    KernelBasis out;
    std::vector<std::size_t> slot(m.cols(), 0);
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c])
            continue;
        slot[c] = out.free_columns.size();
        out.free_columns.push_back(c);
        out.vectors.push_back({{c, Rational(1)}});
    }
    const Field& field = m.field();
    for (std::size_t r = 0; r < form.rank; ++r) {
        std::size_t pivot = form.pivot_columns[r];
        for (const auto& [c, v] : form.reduced_rows[r])
            if (c != pivot)
                out.vectors[slot[c]].emplace_back(pivot, field.neg(v));
    }
    for (auto& v : out.vectors)
        v = normalize(std::move(v), field);
    return out;
}

std::vector<SparseVector> kernel_basis(const SparseMatrix& m)
{
    return kernel(m).vectors;
}

std::optional<SparseVector> solve_in_image(const SparseMatrix& m, const SparseVector& v)
{
    if (!v.empty() && v.back().first >= m.rows())
        throw Error(ErrorCode::invalid_argument, "right-hand side longer than matrix height");
    // RREF of the augmented matrix [m | v]: v lies in the column span iff the
    // augmented column carries no pivot.
    std::vector<SparseVector> rows = m.row_vectors();
    for (const auto& [r, x] : normalize(v, m.field()))
        rows[r].emplace_back(m.cols(), x);
    EchelonForm form = rref_of_rows(rows, m.field());
    SparseVector x;
    for (std::size_t r = 0; r < form.rank; ++r) {
        if (form.pivot_columns[r] == m.cols())
            return std::nullopt;
        const auto& row = form.reduced_rows[r];
        if (row.back().first == m.cols())
            x.emplace_back(form.pivot_columns[r], row.back().second);
    }
    return normalize(std::move(x), m.field());
}

} // namespace quiverhh
