#pragma once

#include <utility>
#include <vector>

#include "stellar/complex.hpp"
#include "stellar/equivalence.hpp"
#include "stellar/homology.hpp"

namespace stellar {

/// The carrier of a complex whose matched generator pairs are glued facewise.
///
/// Gluing a pair (g, p) identifies every face of g with the corresponding
/// face of p under the vertex bijection induced by the equivalence classes;
/// the identifications generate an equivalence on the face set whose classes
/// become the cells here. This keeps one cell per glued family instead of
/// cancelling mod 2, which is what homology of the glued space needs.
class IdentificationComplex {
public:
    struct Cell {
        int dim;
        Simplex representative;           // least original face of the class
        std::vector<std::size_t> facets;  // cell ids one dimension down, with multiplicity
    };

    IdentificationComplex(const Complex& k,
                          const std::vector<std::pair<Simplex, Simplex>>& glued_pairs,
                          const VertexEquivalence& eq);

    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t cell_count(int dim) const;
    int max_dim() const;

    BettiVector homology() const;
    bool connected() const;

    /// The flag complex of the cell poset: one fresh vertex per cell
    /// (labels 1.. in cell order), generators the maximal chains. For a
    /// complex without gluing this is its barycentric subdivision up to
    /// relabeling.
    Complex order_complex() const;

private:
    std::vector<Cell> cells_;  // sorted by (dim, representative)
};

}  // namespace stellar
