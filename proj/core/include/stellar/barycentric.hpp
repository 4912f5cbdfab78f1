#pragma once

#include "stellar/complex.hpp"

namespace stellar {

/// Barycentric subdivision as the flag complex of the face poset: one fresh
/// vertex per face, allocated max_label + 1, +2, ... over faces ordered by
/// decreasing dimension then lexicographically; generators are the maximal
/// chains of faces. With `validate` set, the same complex is rebuilt as the
/// sequence of starrings at every face in that order and both results are
/// checked for exact equality.
Complex barycentric(const Complex& k, bool validate = false);

}  // namespace stellar
