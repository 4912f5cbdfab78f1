#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stellar/complex.hpp"
#include "stellar/equivalence.hpp"
#include "stellar/moves.hpp"
#include "stellar/quotient.hpp"

namespace stellar {

/// Per-iteration record of the normalization loop. Branch 1 absorbs a
/// generator whose off-facet vertex is not yet in the apex link; branch 2
/// first swaps the generator for a copy on a fresh vertex and merges that
/// vertex with the off-facet one.
struct NormalizeStep {
    std::size_t index;
    Simplex absorbed;                    // the generator p removed from the residual
    Simplex shared_facet;                // least 2-simplex shared with the apex link
    std::size_t shared_count;            // >1 flags multi-facet cancellation
    int branch;                          // 1 or 2
    Vertex off_vertex;                   // vertex of p outside the shared facet
    Vertex fresh_d;                      // branch 2 replacement vertex (0 otherwise)
    std::optional<Simplex> substituted;  // branch 2: shared_facet + fresh_d
    Vertex composite_b;                  // transient vertex of the two-move form
};

/// Result of rewriting a finite connected uniform 3-complex into a cone
/// apex * S over a 2-complex S with a vertex equivalence: the normal form
/// together with a full audit trail. Replaying the trace (interleaved with
/// the branch-2 substitutions recorded in the steps) from the input
/// reproduces the final complex, whose every generator contains the apex.
struct ConeTriangulation {
    Vertex apex = 0;
    Complex sphere;           // S = link(apex, final); uniform 2-dimensional
    VertexEquivalence eq;
    RegularityReport report;  // of eq on S
    MoveTrace trace;          // initial star plus one subdivide/weld pair per step
    std::vector<NormalizeStep> steps;
    Complex final_complex;    // apex * S
};

struct NormalizeOptions {
    /// Rebuild every iteration through the subdivide/weld composite and
    /// require exact agreement with the chain formula.
    bool validate = false;
};

/// The constructive loop: star the least generator at a fresh apex, then
/// repeatedly absorb a residual generator sharing a 2-simplex with the apex
/// link until the residual is empty. Requires a nonempty, uniform,
/// 3-dimensional, facet-connected input.
ConeTriangulation normalize(const Complex& m, const NormalizeOptions& options = {});

/// Independent re-check of a normalization result against its input:
/// structural invariants, replay, regularity, the closedness/matching
/// correspondence, generator conservation, and equality of the homology of
/// the input with the glued cone carrier.
struct VerifyResult {
    bool ok = true;
    std::vector<std::string> diagnostics;
};

VerifyResult verify_cone(const ConeTriangulation& ct, const Complex& m);

}  // namespace stellar
