#pragma once

#include <map>
#include <vector>

#include "stellar/simplex.hpp"

namespace stellar {

/// A formal sum of generator simplexes with coefficients in the two-element
/// field: a simplex is either present or absent, and adding a simplex twice
/// removes it. Generators are stored sorted, so two complexes are equal iff
/// they hold the same generator set. The default-constructed value is the
/// zero chain.
///
/// All values are immutable once built; every operation below is a pure
/// function returning a fresh value, so complexes are safe to share across
/// concurrent readers.
class Complex {
public:
    Complex() = default;
    explicit Complex(std::vector<Simplex> generators);
    Complex(std::initializer_list<Simplex> generators);

    const std::vector<Simplex>& generators() const { return gens_; }
    bool empty() const { return gens_.empty(); }
    std::size_t size() const { return gens_.size(); }
    bool contains(const Simplex& s) const;

    /// Chain addition over the two-element field (symmetric difference).
    Complex add(const Complex& other) const;

    /// Largest generator dimension, or -1 for the zero chain.
    int dimension() const;
    bool is_uniform() const;

    std::vector<Vertex> vertices() const;  // sorted, deduplicated
    Vertex max_label() const;              // 0 for the zero chain

    std::string to_string() const;  // "(1 2 3)+(2 3 4)"

    auto operator<=>(const Complex&) const = default;

private:
    std::vector<Simplex> gens_;
};

inline Complex operator+(const Complex& a, const Complex& b) { return a.add(b); }

/// Every face of every generator, deduplicated and grouped by dimension.
class FaceLattice {
public:
    FaceLattice() = default;
    explicit FaceLattice(const Complex& k);

    int max_dim() const { return static_cast<int>(by_dim_.size()) - 1; }
    const std::vector<Simplex>& faces(int dim) const;
    std::size_t count(int dim) const;
    std::size_t total() const;
    bool contains(const Simplex& s) const;
    std::map<int, std::size_t> counts() const;

private:
    std::vector<std::vector<Simplex>> by_dim_;  // sorted per dimension
};

Complex boundary(const Complex& k);
Complex boundary(const Simplex& s);
bool is_closed(const Complex& k);

/// Join of vertex-disjoint complexes: generators are pairwise unions. The
/// zero chain annihilates (join with it is the zero chain). Throws
/// Errc::shared_vertex when the operands share a vertex label.
Complex join(const Complex& k, const Complex& l);
Complex join(const Simplex& s, const Complex& l);

/// Faces B of strictly positive vertex count with A * B in K. When A is
/// itself a generator the link additionally contains the empty face; that
/// flag is exactly k.contains(a) and is reported through the star instead.
Complex link(const Simplex& a, const Complex& k);
/// Generators of K containing A.
Complex star(const Simplex& a, const Complex& k);
/// Generators of K not containing A; star + residual = K as chains.
Complex residual(const Simplex& a, const Complex& k);

FaceLattice face_lattice(const Complex& k);
int euler_characteristic(const Complex& k);

}  // namespace stellar
