#include "stellar/barycentric.hpp"

#include <map>

#include "stellar/error.hpp"
#include "stellar/moves.hpp"

namespace stellar {

Complex barycentric(const Complex& k, bool validate) {
    if (k.empty()) return Complex();

    const FaceLattice lattice(k);
    std::map<Simplex, Vertex> barycenter;
    Vertex next = k.max_label() + 1;
    for (int d = lattice.max_dim(); d >= 0; --d) {
        for (const Simplex& f : lattice.faces(d)) {
            barycenter.emplace(f, next++);
        }
    }

    // Maximal chains of the face poset, one generator per chain.
    std::vector<Simplex> gens;
    std::vector<Vertex> chain;
    auto descend = [&](auto&& self, const Simplex& face) -> void {
        chain.push_back(barycenter.at(face));
        if (face.dim() == 0) {
            gens.push_back(Simplex(chain));
        } else {
            for (const Simplex& facet : face.facets()) self(self, facet);
        }
        chain.pop_back();
    };
    for (const Simplex& g : k.generators()) descend(descend, g);
    Complex flag(std::move(gens));

    if (validate) {
        Complex starred = k;
        for (int d = lattice.max_dim(); d >= 0; --d) {
            for (const Simplex& f : lattice.faces(d)) {
                starred = subdivide(starred, f, barycenter.at(f));
            }
        }
        if (starred != flag) {
            throw Error(Errc::validation_failed,
                        "flag construction and starring sequence disagree");
        }
    }
    return flag;
}

}  // namespace stellar
