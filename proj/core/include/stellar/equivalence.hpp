#pragma once

#include <map>
#include <vector>

#include "stellar/simplex.hpp"

namespace stellar {

/// A partition of vertex labels with union-find semantics. The canonical
/// representative of a class is its smallest label. Classes are only ever
/// merged, never split; construction is single-writer and all queries after
/// that are pure.
class VertexEquivalence {
public:
    VertexEquivalence() = default;

    /// Declares i and j equivalent (transitive closure is automatic).
    void merge(Vertex i, Vertex j);

    Vertex representative(Vertex v) const;
    bool same(Vertex i, Vertex j) const { return representative(i) == representative(j); }
    bool is_identity() const;

    /// Classes with at least two members, keyed by representative,
    /// members sorted ascending.
    std::map<Vertex, std::vector<Vertex>> nontrivial_classes() const;

    /// Image of a simplex under the representative map. The image may have
    /// fewer vertices if two of them share a class; callers that require
    /// regularity check that first.
    std::vector<Vertex> image_labels(const Simplex& s) const;

    bool operator==(const VertexEquivalence& other) const;

private:
    Vertex find(Vertex v) const;

    // Parent pointers for mentioned labels only; absent labels are their own
    // singleton class.
    mutable std::map<Vertex, Vertex> parent_;
};

}  // namespace stellar
