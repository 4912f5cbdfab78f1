#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace stellar {

/// Vertex labels are opaque positive integers. Fresh labels are always
/// allocated as max_label + 1, + 2, ... so traces stay reproducible.
using Vertex = int;

/// A simplex is a set of distinct vertex labels kept in strictly increasing
/// order; that sorted sequence is the canonical form used for equality and
/// ordering. The empty simplex is not a representable value.
class Simplex {
public:
    Simplex(std::initializer_list<Vertex> labels);
    explicit Simplex(std::vector<Vertex> labels);

    int dim() const { return static_cast<int>(v_.size()) - 1; }
    std::size_t vertex_count() const { return v_.size(); }
    std::span<const Vertex> vertices() const { return v_; }
    Vertex vertex(std::size_t i) const { return v_[i]; }

    bool contains(Vertex v) const;
    bool contains_all(const Simplex& other) const;
    bool disjoint_from(const Simplex& other) const;

    /// Set union; requires disjoint vertex sets.
    Simplex union_with(const Simplex& other) const;
    /// Set difference; the result must stay nonempty.
    Simplex minus(const Simplex& other) const;
    /// The facet omitting vertices()[i].
    Simplex facet_omitting(std::size_t i) const;
    /// All facets, in the order induced by the omitted vertex. Empty for a
    /// 0-simplex (its boundary is the zero chain).
    std::vector<Simplex> facets() const;

    std::string to_string() const;  // "(1 2 3)"

    auto operator<=>(const Simplex&) const = default;

private:
    struct unchecked_tag {};
    Simplex(unchecked_tag, std::vector<Vertex> sorted) : v_(std::move(sorted)) {}

    std::vector<Vertex> v_;
};

}  // namespace stellar
