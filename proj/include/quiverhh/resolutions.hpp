#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "quiverhh/algebra.hpp"

namespace quiverhh {

/// Successor graph of a monomial algebra. Nodes are the radical basis paths
/// reachable from the arrows; p -> q for every minimal q with p*q = 0, which
/// says Omega(pA) = sum of qA over the successors q.
struct SuccessorGraph {
    std::vector<std::size_t> nodes; // basis indices, in discovery order
    std::map<std::size_t, std::vector<std::size_t>> successors;

    const std::vector<std::size_t>& successors_of(std::size_t path) const;
    std::size_t edge_count() const;
};

/// Minimal right annihilating paths q of the radical basis path p: p*q = 0
/// and p*q' != 0 for every proper nontrivial prefix q'. Monomial only.
std::vector<std::size_t> minimal_successors(const Algebra& a, std::size_t path);

/// Throws NotMonomial.
SuccessorGraph build_successor_graph(const Algebra& a);

struct PdResult {
    /// nullopt means infinite.
    std::optional<std::size_t> value;
    /// Infinite: a cycle of the successor graph. Finite: a longest successor chain.
    std::vector<std::size_t> witness;

    bool is_infinite() const { return !value.has_value(); }
};

PdResult pd_simple_monomial(const Algebra& a, const SuccessorGraph& g, std::size_t vertex);
PdResult pd_simple_monomial(const Algebra& a, std::size_t vertex);
/// Maximum over the simples; the witness comes from the first vertex attaining it.
PdResult gldim_monomial(const Algebra& a);

/// Right A-module given by one matrix per arrow: x * a = maps[a] * x, so a
/// path acts by the product of its arrow matrices in reverse order.
struct Representation {
    std::vector<std::size_t> dims;
    std::vector<SparseMatrix> maps; // maps[a]: dims[t(a)] x dims[s(a)]

    std::size_t total_dimension() const;
    bool is_zero() const { return total_dimension() == 0; }
};

Representation simple_representation(const Algebra& a, std::size_t vertex);
/// P_v = e_v A on the basis paths starting at v.
Representation projective_representation(const Algebra& a, std::size_t vertex);

/// Action of a path on a vector at its source vertex.
SparseVector act(const Representation& m, const Path& p, SparseVector x);

/// Throws RelationViolation if some relation of A does not act as zero.
void check_representation(const Algebra& a, const Representation& m);

struct CoverAndSyzygy {
    /// multiplicity of P_v in the projective cover = dim of top(M) at v
    std::vector<std::size_t> multiplicities;
    Representation syzygy;
};

struct ResolutionOptions {
    /// Largest total dimension a projective cover may reach.
    std::size_t dimension_cap = 20000;
};

CoverAndSyzygy projective_cover_and_syzygy(const Algebra& a, const Representation& m,
                                           const ResolutionOptions& options = {});

struct CutoffPd {
    /// Exact pd when a zero syzygy appeared within the cutoff.
    std::optional<std::size_t> value;
    /// cutoff + 1 when value is absent.
    std::size_t at_least = 0;
    /// step k: cover multiplicities of Omega^k(S)
    std::vector<std::vector<std::size_t>> cover_multiplicities;
    /// dim Omega^1, dim Omega^2, ...
    std::vector<std::size_t> syzygy_dimensions;
};

CutoffPd pd_simple_cutoff(const Algebra& a, std::size_t vertex, std::size_t cutoff,
                          const ResolutionOptions& options = {});

struct GldimCutoff {
    std::vector<CutoffPd> per_vertex;
    /// Exact when every simple has finite pd within the cutoff.
    std::optional<std::size_t> exact;
    std::size_t at_least = 0;
};

GldimCutoff gldim_cutoff(const Algebra& a, std::size_t cutoff, const ResolutionOptions& options = {});

/// 2 * dim A
std::size_t default_cutoff(const Algebra& a);

} // namespace quiverhh
