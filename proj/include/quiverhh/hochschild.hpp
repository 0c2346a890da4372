#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "quiverhh/algebra.hpp"
#include "quiverhh/cycles.hpp"

namespace quiverhh {

/// Basis tuple (x_0; x_1, ..., x_q) of A (x)_{S^e} J^{(x)_S q}: slot 0 is any
/// basis path of A, slots 1..q are radical basis paths, and consecutive
/// slots match endpoints cyclically (t(x_q) = s(x_0)).
using ChainTuple = std::vector<std::size_t>;

struct ChainTupleHash {
    std::size_t operator()(const ChainTuple& t) const noexcept;
};

struct ChainVector {
    std::size_t degree = 0;
    std::map<ChainTuple, Rational> terms;

    bool is_zero() const { return terms.empty(); }
};

std::string tuple_to_string(const Algebra& a, const ChainTuple& t);
std::string chain_to_string(const Algebra& a, const ChainVector& v);

struct HochschildOptions {
    /// Largest chain space (in tuples) any computation may build.
    std::uint64_t chain_cap = 200000;
};

/// dim C_q, saturating at UINT64_MAX. Counts without enumerating.
std::uint64_t chain_dimension(const Algebra& a, std::size_t q);

/// Tuples of degree q in lexicographic order of basis indices.
class ChainBasis {
public:
    ChainBasis(const Algebra& a, std::size_t q, const HochschildOptions& options = {});

    std::size_t degree() const noexcept { return degree_; }
    std::size_t size() const noexcept { return tuples_.size(); }
    const ChainTuple& tuple(std::size_t i) const { return tuples_.at(i); }
    const std::vector<ChainTuple>& tuples() const noexcept { return tuples_; }
    std::optional<std::size_t> index_of(const ChainTuple& t) const;

    SparseVector coordinates(const ChainVector& v) const;
    ChainVector chain(const SparseVector& coords) const;

private:
    std::size_t degree_;
    std::vector<ChainTuple> tuples_;
    std::unordered_map<ChainTuple, std::size_t, ChainTupleHash> index_;
};

std::vector<ChainTuple> chain_basis(const Algebra& a, std::size_t q, const HochschildOptions& options = {});

/// b(x_0, ..., x_q) = sum_{i<q} (-1)^i (..., x_i x_{i+1}, ...) + (-1)^q (x_q x_0, x_1, ..., x_{q-1}),
/// expanded directly on one tuple. b is zero on degree 0.
ChainVector apply_boundary(const Algebra& a, const ChainTuple& t);
ChainVector apply_boundary(const Algebra& a, const ChainVector& v);

struct BoundaryMatrix {
    std::size_t degree;
    SparseMatrix matrix; // rows: C_{q-1}, columns: C_q
};

BoundaryMatrix boundary_matrix(const Algebra& a, const ChainBasis& domain, const ChainBasis& codomain);
BoundaryMatrix boundary_matrix(const Algebra& a, std::size_t q, const HochschildOptions& options = {});

struct HochschildDimensions {
    std::vector<std::size_t> chain_dims;     // dim C_0 .. dim C_{Q+1}
    std::vector<std::size_t> boundary_ranks; // rank b_1 .. rank b_{Q+1}
    std::vector<std::size_t> hh;             // dim HH_0 .. dim HH_Q (possibly fewer if capped)
    bool complete = true;
    std::string limit_message;
};

/// Computes as many degrees as the cap allows; never throws on the cap.
HochschildDimensions hh_dimensions_partial(const Algebra& a, std::size_t max_degree,
                                           const HochschildOptions& options = {});

/// [dim HH_0, ..., dim HH_Q]; throws ResourceLimit if a chain space exceeds the cap.
std::vector<std::size_t> hh_dimensions(const Algebra& a, std::size_t max_degree,
                                       const HochschildOptions& options = {});

/// Largest Q <= ceiling whose computation stays within the chain cap.
std::size_t default_max_degree(const Algebra& a, const HochschildOptions& options = {},
                               std::size_t ceiling = 10);

/// dim A / [A, A], from commutators of basis pairs only.
std::size_t hh0_direct(const Algebra& a);

/// (a_1; a_2, ..., a_l, a_1, ..., a_l) with the cycle read m times; degree lm - 1.
ChainVector xi_chain(const Algebra& a, const OrientedCycle& cycle, std::size_t m);

enum class BoundaryStatus { not_in_image, in_image };

struct Certificate {
    OrientedCycle cycle;
    std::size_t repetitions;
    std::size_t degree;
    ChainVector xi;
    ChainVector boundary_of_xi;
    bool is_cycle = false;
    BoundaryStatus boundary_status = BoundaryStatus::not_in_image;
    /// Present when xi = b(preimage).
    std::optional<ChainVector> preimage;
    bool hh_lower_bound = false;
};

/// Throws NotTwoTruncated if `cycle` is not 2-truncated in A.
Certificate certify_nonvanishing(const Algebra& a, const OrientedCycle& cycle, std::size_t m,
                                 const HochschildOptions& options = {});

/// Cyclic quiver 1 -> 2 -> ... -> l -> 1 with arrows x1..xl and every path
/// of length `trunc` as a monomial relation.
AlgebraPresentation truncated_cycle_algebra(std::size_t l, std::size_t trunc,
                                            Field field = Field::rationals());

struct SummandComparison {
    std::size_t cycle_length;
    std::size_t truncation;
    std::vector<std::size_t> hh_algebra;     // degrees 0..Q
    std::vector<std::size_t> hh_cycle_algebra; // degrees 0..Q
    bool holds = true;                       // dim HH_i(A) >= dim HH_i(A') for 1 <= i <= Q
};

/// Throws NotMonomial or InvalidWitness.
SummandComparison hh_compare_summand(const Algebra& a, const TruncationWitness& witness,
                                     std::size_t max_degree, const HochschildOptions& options = {});

} // namespace quiverhh
