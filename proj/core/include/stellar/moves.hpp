#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "stellar/complex.hpp"

namespace stellar {

/// Replace the star of `at` with the cone over its boundary from a fresh
/// vertex. The inverse weld removes the fresh vertex again.
struct SubdivideMove {
    Simplex at;
    Vertex fresh;

    auto operator<=>(const SubdivideMove&) const = default;
};

struct WeldMove {
    Simplex at;     // the simplex reinstated by the weld
    Vertex vertex;  // the vertex removed by the weld

    auto operator<=>(const WeldMove&) const = default;
};

struct RelabelMove {
    std::map<Vertex, Vertex> mapping;  // partial; identity off-domain

    auto operator<=>(const RelabelMove&) const = default;
};

using MoveRecord = std::variant<SubdivideMove, WeldMove, RelabelMove>;

std::string move_to_string(const MoveRecord& move);

/// A replayable sequence of stellar moves from a fixed initial complex.
struct MoveTrace {
    Complex initial;
    std::vector<MoveRecord> moves;
};

/// Starring at `a`: the star of `at` becomes a * boundary(at) * link(at, k)
/// while the residual is untouched. Starring a single vertex degenerates to
/// relabeling that vertex to `a`, which keeps the move set invertible.
Complex subdivide(const Complex& k, const Simplex& at, Vertex a);

/// Inverse of subdivision: requires link(a, k) = boundary(at) * B for some
/// cofactor B and that `at` is not a face of any generator. A 0-dimensional
/// `at` renames `a` back to that vertex.
Complex weld(const Complex& k, const Simplex& at, Vertex a);

Complex relabel(const Complex& k, const std::map<Vertex, Vertex>& mapping);

/// One factorization of a vertex link as boundary(a_simplex) * cofactor.
/// An empty cofactor stands for the join unit: the link is exactly the
/// boundary of a_simplex and the weld reinstates the bare simplex.
struct LinkFactor {
    Simplex a_simplex;
    Complex cofactor;

    auto operator<=>(const LinkFactor&) const = default;
};

/// All factorizations boundary(A) * B of the uniform complex `l`, with A not
/// a face of any generator of `exclude`. Candidate A's range over simplexes
/// on the vertex labels of `l` up to dimension(l) + 2, pruned by requiring
/// every facet of A to be a face of `l`. Sorted lexicographically by A.
std::vector<LinkFactor> factor_link(const Complex& l, const Complex& exclude);

/// All valid moves on a uniform complex: one subdivision per face of
/// positive dimension plus vertex stars (fresh label = max_label + 1), and
/// one weld per link factorization at each vertex. Deterministic order:
/// subdivisions sorted by target simplex, then welds by (simplex, vertex).
std::vector<MoveRecord> enumerate_moves(const Complex& k);

Complex apply_move(const Complex& k, const MoveRecord& move);

/// Applies the trace moves in order; wraps a failure at index i into
/// ReplayError(i, cause).
Complex replay(const MoveTrace& trace);

}  // namespace stellar
