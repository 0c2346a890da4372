#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quiverhh/presentation.hpp"

namespace quiverhh {

struct CorpusParams {
    std::size_t max_vertices = 4;
    std::size_t max_arrows = 5;
    std::size_t max_rel_len = 3;
    std::size_t max_rels = 5;
    /// Generated algebras above this dimension are rejected and redrawn.
    std::size_t max_dimension = 20;
    std::size_t max_retries = 500;
};

/// Deterministic in (seed, params). Redraws until the algebra is finite
/// dimensional and small enough; throws GenerationExhausted otherwise.
AlgebraPresentation random_monomial_algebra(std::uint64_t seed, const CorpusParams& params = {});

/// Seeds first_seed, first_seed + 1, ...
std::vector<AlgebraPresentation> monomial_corpus(std::uint64_t first_seed, std::size_t count,
                                                 const CorpusParams& params = {});

struct PropertyViolation {
    std::string property;
    std::uint64_t seed;
    std::string detail;
};

struct PropertyOutcome {
    std::size_t checked = 0;
    std::size_t violations = 0;
};

struct PropertyReport {
    std::size_t algebras = 0;
    std::map<std::string, PropertyOutcome> properties;
    std::vector<PropertyViolation> violations;
};

struct PropertyOptions {
    std::size_t max_degree = 4;
    std::uint64_t chain_cap = 20000;
};

/// Property names accepted by `check_corpus_properties`.
std::vector<std::string> corpus_property_names();

/// Runs the named cross-module properties ("all" for every one) over the
/// seeded corpus.
PropertyReport check_corpus_properties(std::uint64_t first_seed, std::size_t count,
                                       const std::vector<std::string>& properties,
                                       const CorpusParams& params = {},
                                       const PropertyOptions& options = {});

} // namespace quiverhh
