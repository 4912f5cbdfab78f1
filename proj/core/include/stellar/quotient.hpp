#pragma once

#include <utility>
#include <vector>

#include "stellar/complex.hpp"
#include "stellar/equivalence.hpp"

namespace stellar {

/// Outcome of checking the two regularity rules for a vertex equivalence on
/// a complex:
///   (i)  no generator holds two distinct vertices of one class;
///   (ii) each generator has at most one classwise-matching partner.
/// The relation is regular iff both violation lists are empty. Unmatched
/// generators are not violations; together with the matched pairs they cover
/// every generator exactly once when the relation is regular.
struct RegularityReport {
    struct ConditionI {
        Simplex generator;
        Vertex first;
        Vertex second;
    };
    struct ConditionII {
        Simplex generator;
        std::vector<Simplex> partners;
    };

    std::vector<ConditionI> condition_i_violations;
    std::vector<ConditionII> condition_ii_violations;
    std::vector<std::pair<Simplex, Simplex>> matched_pairs;  // lexicographic, first < second
    std::vector<Simplex> unmatched;

    bool regular() const {
        return condition_i_violations.empty() && condition_ii_violations.empty();
    }
};

RegularityReport check_regular(const Complex& m, const VertexEquivalence& eq);

/// Maps every generator to its class-representative image and reduces mod 2;
/// matched pairs share an image and cancel. Returns the reduced chain and the
/// sorted list of cancelled images. Throws Errc::not_regular when the
/// relation fails check_regular. The geometric gluing data lives in the
/// regularity report's matched pairs; this chain is what boundary
/// computations consume.
std::pair<Complex, std::vector<Simplex>> quotient(const Complex& s,
                                                  const VertexEquivalence& eq);

/// True iff the chain a * (S/eq) + (S/eq) has zero boundary, which holds
/// exactly when the reduced quotient chain is empty, i.e. every generator of
/// S is matched. Requires a to be no vertex of S and eq regular on S.
bool cone_boundary_check(Vertex a, const Complex& s, const VertexEquivalence& eq);

}  // namespace stellar
