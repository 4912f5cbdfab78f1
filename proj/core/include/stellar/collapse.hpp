#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "stellar/complex.hpp"

namespace stellar {

/// Result of greedy free-face collapsing. A face is free when it lies in
/// exactly one maximal face, one dimension up; removing the pair is an
/// elementary collapse. `collapsed` is true when a single vertex remains.
/// When stuck, `core` holds the maximal faces of the irreducible remainder
/// and `free_faces_at_stop` is 0 (or the budget was exhausted).
struct CollapseResult {
    bool collapsed = false;
    Complex core;
    std::vector<std::pair<Simplex, Simplex>> elimination_log;  // (free face, coface)
    std::size_t free_faces_at_stop = 0;
    bool budget_exhausted = false;
};

/// Greedy collapsing over the face lattice with a deterministic choice: the
/// pair whose free face is least in (dimension descending, lexicographic)
/// order goes first. `budget` caps the number of elementary collapses.
CollapseResult collapse(const Complex& k, std::size_t budget = 1u << 20);

}  // namespace stellar
