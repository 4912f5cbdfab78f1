#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stellar/complex.hpp"

namespace stellar {

/// Ranks of homology over the two-element field, b[0]..b[n]. The alternating
/// sum always equals the Euler characteristic; the moves of the stellar
/// calculus leave the whole vector unchanged, which is what makes it a
/// usable negative certificate.
struct BettiVector {
    std::vector<int> b;

    int operator[](std::size_t i) const { return i < b.size() ? b[i] : 0; }
    std::size_t size() const { return b.size(); }
    std::string to_string() const;  // "(1,0,0,1)"

    bool operator==(const BettiVector&) const = default;
};

/// Rank of a matrix over the two-element field; columns are bit-packed.
class Gf2Matrix {
public:
    Gf2Matrix(std::size_t rows, std::size_t cols);

    void set(std::size_t row, std::size_t col);
    void flip(std::size_t row, std::size_t col);
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t rank() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::size_t words_per_col_;
    std::vector<std::uint64_t> bits_;  // column-major
};

/// Betti numbers from boundary-matrix ranks over the face lattice.
BettiVector homology_z2(const Complex& k);

}  // namespace stellar
