#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quiverhh/error.hpp"
#include "quiverhh/linalg.hpp"
#include "quiverhh/presentation.hpp"

namespace quiverhh {

/// Element of A = KQ/I as coordinates over the path basis.
using AlgebraElement = SparseVector;

/// Path basis of A. Trivial paths e_1..e_n come first (index == vertex), so
/// S = span(e_i) and J = span of the remaining paths.
class AlgebraBasis {
public:
    AlgebraBasis() = default;
    AlgebraBasis(std::size_t vertex_count, std::vector<Path> paths);

    std::size_t dimension() const noexcept { return paths_.size(); }
    std::size_t vertex_count() const noexcept { return vertex_count_; }
    const Path& path(std::size_t i) const { return paths_.at(i); }
    const std::vector<Path>& paths() const noexcept { return paths_; }
    std::optional<std::size_t> index_of(const Path& p) const;

    bool is_radical(std::size_t i) const { return i >= vertex_count_; }
    std::size_t source(std::size_t i) const { return paths_[i].source; }
    std::size_t target(std::size_t i) const { return paths_[i].target; }

    /// All basis indices with the given endpoints, in basis order.
    const std::vector<std::size_t>& between(std::size_t s, std::size_t t) const;
    /// Basis indices starting at v, including e_v.
    const std::vector<std::size_t>& from(std::size_t v) const { return from_.at(v); }
    /// Radical basis indices (length >= 1) starting at v.
    const std::vector<std::size_t>& radical_from(std::size_t v) const { return radical_from_.at(v); }
    std::size_t max_length() const;

private:
    std::size_t vertex_count_ = 0;
    std::vector<Path> paths_;
    std::map<Path, std::size_t> index_;
    std::vector<std::vector<std::size_t>> between_;
    std::vector<std::vector<std::size_t>> from_;
    std::vector<std::vector<std::size_t>> radical_from_;
};

enum class BasisMethod {
    /// Subword avoidance for monomial presentations, Gaussian reduction otherwise.
    automatic,
    /// Always use the truncated Gaussian reduction (needs a nil-bound).
    gaussian,
};

/// A finite-dimensional bounded quiver algebra with its path basis and
/// multiplication table. Immutable once built.
class Algebra {
public:
    /// Throws InfiniteDimensional, MissingNilbound or NilboundViolated.
    explicit Algebra(AlgebraPresentation presentation, BasisMethod method = BasisMethod::automatic,
                     std::optional<std::size_t> nilbound = std::nullopt);

    const AlgebraPresentation& presentation() const noexcept { return presentation_; }
    const Quiver& quiver() const noexcept { return presentation_.quiver; }
    const Field& field() const noexcept { return presentation_.field; }
    const AlgebraBasis& basis() const noexcept { return basis_; }
    std::size_t dimension() const noexcept { return basis_.dimension(); }
    bool is_monomial() const noexcept { return presentation_.monomial; }

    /// Smallest N with J^N = 0.
    std::size_t nilpotency_index() const noexcept { return nilpotency_; }

    AlgebraElement normal_form(const Path& p) const;
    AlgebraElement normal_form(const FreeElement& x) const;
    bool is_zero(const Path& p) const { return normal_form(p).empty(); }

    /// Product of two basis elements (empty when not composable or zero).
    const AlgebraElement& product(std::size_t i, std::size_t j) const
    {
        return table_[i * basis_.dimension() + j];
    }
    AlgebraElement multiply(const AlgebraElement& u, const AlgebraElement& v) const;

    AlgebraElement basis_element(std::size_t i) const { return {{i, Rational(1)}}; }
    std::string element_to_string(const AlgebraElement& x) const;

private:
    void build_monomial();
    void build_gaussian(std::size_t nilbound);

    AlgebraPresentation presentation_;
    AlgebraBasis basis_;
    std::size_t nilpotency_ = 1;
    bool gaussian_ = false;
    std::size_t nilbound_ = 0;
    // monomial: minimal forbidden arrow words
    std::vector<std::vector<std::size_t>> forbidden_;
    // gaussian: normal forms of the leading (pivot) paths of the truncated ideal
    std::map<Path, AlgebraElement> rewrite_;
    std::vector<AlgebraElement> table_;
};

AlgebraBasis compute_basis(const AlgebraPresentation& p);

struct ValidationReport {
    bool ok = false;
    std::size_t dimension = 0;
    std::size_t nilpotency_index = 0;
    bool monomial = false;
    std::optional<ErrorCode> error;
    std::string message;
};

ValidationReport validate_presentation(const AlgebraPresentation& p);

} // namespace quiverhh
