#include "stellar/homology.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace stellar {

std::string BettiVector::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i > 0) os << ',';
        os << b[i];
    }
    os << ')';
    return os.str();
}

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_per_col_((rows + 63) / 64),
      bits_(words_per_col_ * cols, 0) {}

void Gf2Matrix::set(std::size_t row, std::size_t col) {
    bits_[col * words_per_col_ + row / 64] |= std::uint64_t(1) << (row % 64);
}

void Gf2Matrix::flip(std::size_t row, std::size_t col) {
    bits_[col * words_per_col_ + row / 64] ^= std::uint64_t(1) << (row % 64);
}

std::size_t Gf2Matrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    std::vector<std::uint64_t> work = bits_;
    std::vector<std::size_t> pivot_of_col;  // columns already reduced
    std::vector<std::size_t> pivot_row;
    auto column = [&](std::size_t c) { return work.data() + c * words_per_col_; };
    auto lowest_bit = [&](const std::uint64_t* col) -> std::ptrdiff_t {
        for (std::size_t w = 0; w < words_per_col_; ++w) {
            if (col[w] != 0) {
                return static_cast<std::ptrdiff_t>(w * 64 +
                                                   std::countr_zero(col[w]));
            }
        }
        return -1;
    };

    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
        std::uint64_t* col = column(c);
        // Reduce against the established pivots until stable.
        bool changed = true;
        while (changed) {
            changed = false;
            const std::ptrdiff_t low = lowest_bit(col);
            if (low < 0) break;
            for (std::size_t k = 0; k < pivot_of_col.size(); ++k) {
                if (pivot_row[k] == static_cast<std::size_t>(low)) {
                    const std::uint64_t* other = column(pivot_of_col[k]);
                    for (std::size_t w = 0; w < words_per_col_; ++w) col[w] ^= other[w];
                    changed = true;
                    break;
                }
            }
        }
        const std::ptrdiff_t low = lowest_bit(col);
        if (low >= 0) {
            pivot_of_col.push_back(c);
            pivot_row.push_back(static_cast<std::size_t>(low));
            ++rank;
        }
    }
    return rank;
}

BettiVector homology_z2(const Complex& k) {
    BettiVector betti;
    if (k.empty()) return betti;

    const FaceLattice lattice(k);
    const int top = lattice.max_dim();

    // rank of the boundary map C_d -> C_{d-1} for each d >= 1
    std::vector<std::size_t> boundary_rank(static_cast<std::size_t>(top) + 2, 0);
    for (int d = 1; d <= top; ++d) {
        const auto& rows = lattice.faces(d - 1);
        const auto& cols = lattice.faces(d);
        Gf2Matrix m(rows.size(), cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            for (const Simplex& facet : cols[c].facets()) {
                const auto it = std::lower_bound(rows.begin(), rows.end(), facet);
                m.set(static_cast<std::size_t>(it - rows.begin()), c);
            }
        }
        boundary_rank[static_cast<std::size_t>(d)] = m.rank();
    }

    betti.b.resize(static_cast<std::size_t>(top) + 1);
    int chi = 0;
    for (int d = 0; d <= top; ++d) {
        const auto count = static_cast<int>(lattice.count(d));
        const auto rank_d = static_cast<int>(boundary_rank[static_cast<std::size_t>(d)]);
        const auto rank_up = static_cast<int>(boundary_rank[static_cast<std::size_t>(d) + 1]);
        betti.b[static_cast<std::size_t>(d)] = count - rank_d - rank_up;
        chi += (d % 2 == 0 ? 1 : -1) * count;
    }

    int alternating = 0;
    for (std::size_t i = 0; i < betti.b.size(); ++i) {
        alternating += (i % 2 == 0 ? 1 : -1) * betti.b[i];
    }
    assert(alternating == chi);
    (void)chi;
    (void)alternating;
    return betti;
}

}  // namespace stellar
