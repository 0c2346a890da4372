#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quiverhh/algebra.hpp"

namespace quiverhh {

/// Index of the lexicographically least rotation of `word` (Booth).
std::size_t least_rotation_offset(const std::vector<std::size_t>& word);
std::vector<std::size_t> least_rotation(const std::vector<std::size_t>& word);

/// Closed arrow word a_1 ... a_l with t(a_i) = s(a_{i+1}) cyclically.
class OrientedCycle {
public:
    /// Throws EndpointMismatch if the arrows do not chain cyclically.
    OrientedCycle(const Quiver& q, std::vector<std::size_t> arrows);

    const std::vector<std::size_t>& arrows() const noexcept { return arrows_; }
    std::size_t length() const noexcept { return arrows_.size(); }
    std::vector<std::size_t> canonical_rotation() const { return least_rotation(arrows_); }
    bool is_aperiodic() const;

    /// (a_{k+1}, ..., a_l, a_1, ..., a_k)
    OrientedCycle rotated(std::size_t k) const;
    /// The word repeated `times` times.
    OrientedCycle repeated(std::size_t times) const;

    /// Cyclic window a_i ... a_{i+len-1} (0-based i, indices mod l).
    Path window(std::size_t i, std::size_t len) const;

    std::string to_string(const Quiver& q) const;

    friend bool operator==(const OrientedCycle&, const OrientedCycle&) = default;

private:
    OrientedCycle(std::vector<std::size_t> arrows, std::vector<std::size_t> sources,
                  std::vector<std::size_t> targets)
        : arrows_(std::move(arrows)), sources_(std::move(sources)), targets_(std::move(targets)) {}

    std::vector<std::size_t> arrows_;
    std::vector<std::size_t> sources_;
    std::vector<std::size_t> targets_;
};

struct TruncationWitness {
    OrientedCycle cycle;
    std::size_t m;
    std::vector<Path> zero_windows;    // a_i ... a_{i+m-1}
    std::vector<Path> nonzero_windows; // a_i ... a_{i+m-2}
};

struct TruncationCheck {
    bool truncated = false;
    std::vector<Path> zero_windows;
    std::vector<Path> nonzero_windows;
    /// First window that breaks the definition, when `truncated` is false.
    std::optional<Path> failing_window;
};

/// All l cyclic windows of length m vanish and all of length m-1 do not.
TruncationCheck is_m_truncated(const OrientedCycle& cycle, std::size_t m, const Algebra& a);

/// Nodes are the nonzero arrow words of length m-1; w -> w' when w' is w
/// shifted by one arrow c and the length-m word w*c is zero in A. Closed
/// walks of length l are exactly the m-truncated cycles of length l.
struct WindowGraph {
    std::size_t m = 2;
    std::vector<Path> nodes;
    /// adjacency[u] = (v, c) pairs, sorted by v
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency;

    std::size_t edge_count() const;
};

WindowGraph build_window_graph(const Algebra& a, std::size_t m);

/// 2 * #arrows for m = 2, 2 * #nodes of the window graph otherwise.
std::size_t default_max_length(const Algebra& a, std::size_t m);

/// Elementary cycles of the window graph of length <= max_len, one witness
/// per rotation class, sorted by (length, canonical word).
std::vector<TruncationWitness> find_truncated_cycles(const Algebra& a, std::size_t m,
                                                     std::optional<std::size_t> max_len = std::nullopt);

/// A shortest 2-truncated cycle in canonical rotation (least canonical word
/// among the shortest), or nullopt.
std::optional<OrientedCycle> minimal_two_truncated(const Algebra& a);

} // namespace quiverhh
