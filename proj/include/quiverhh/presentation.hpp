#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quiverhh/field.hpp"

namespace quiverhh {

struct Arrow {
    std::string name;
    std::size_t source;
    std::size_t target;
};

/// Finite quiver. Vertices are stored by index 0..n-1 and keep the label
/// they were declared with.
class Quiver {
public:
    std::size_t add_vertex(std::string label);
    /// Throws on duplicate names and undeclared endpoints.
    std::size_t add_arrow(std::string name, std::size_t source, std::size_t target);

    std::size_t vertex_count() const noexcept { return vertex_labels_.size(); }
    std::size_t arrow_count() const noexcept { return arrows_.size(); }
    const std::string& vertex_label(std::size_t v) const { return vertex_labels_.at(v); }
    const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

    std::optional<std::size_t> find_vertex(std::string_view label) const;
    std::optional<std::size_t> find_arrow(std::string_view name) const;

    /// Arrows leaving v, in declaration order.
    std::vector<std::size_t> arrows_from(std::size_t v) const;

private:
    std::vector<std::string> vertex_labels_;
    std::vector<Arrow> arrows_;
};

/// A path read left to right: pq means "p, then q". A trivial path e_v has
/// no arrows and source == target == v.
struct Path {
    std::size_t source = 0;
    std::size_t target = 0;
    std::vector<std::size_t> arrows;

    static Path trivial(std::size_t vertex) { return Path{vertex, vertex, {}}; }
    static Path of_arrow(const Quiver& q, std::size_t arrow);
    /// Throws NonComposablePath if consecutive arrows do not chain.
    static Path of_arrows(const Quiver& q, std::vector<std::size_t> arrows);

    bool is_trivial() const noexcept { return arrows.empty(); }
    std::size_t length() const noexcept { return arrows.size(); }

    friend bool operator==(const Path&, const Path&) = default;
};

/// Basis order: trivial paths by vertex, then by length, then lexicographic
/// in arrow declaration order.
bool operator<(const Path& a, const Path& b);

std::optional<Path> compose_paths(const Path& p, const Path& q);

/// "e1" for trivial paths (vertex label appended), "a1*a2" otherwise.
std::string path_to_string(const Quiver& q, const Path& p);

/// Element of the free path algebra KQ.
using FreeElement = std::map<Path, Rational>;

struct AlgebraPresentation {
    Quiver quiver;
    std::vector<FreeElement> relations;
    Field field = Field::rationals();
    std::optional<std::size_t> nilbound;
    bool monomial = true;
};

/// Reads the `.quiver` text format. A field override replaces the file's
/// `field:` line before any coefficient is reduced.
AlgebraPresentation parse_presentation(std::string_view text,
                                       std::optional<Field> field_override = std::nullopt);
AlgebraPresentation load_presentation(const std::string& file,
                                      std::optional<Field> field_override = std::nullopt);

/// Checks parallelism and admissibility of every relation and recomputes
/// the monomial flag. parse_presentation calls this.
void check_relations(AlgebraPresentation& p);

/// Writes a presentation back out in `.quiver` syntax.
std::string format_presentation(const AlgebraPresentation& p);

/// Content digest of a `.quiver` source with comments and blank lines removed
/// and whitespace collapsed (FNV-1a, 64 bit, hex).
std::string input_digest(std::string_view text);

} // namespace quiverhh
