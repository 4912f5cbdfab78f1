#include "stellar/identification.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace stellar {

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
    while (parent[i] != i) {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    return i;
}

void unite(std::vector<std::size_t>& parent, std::size_t a, std::size_t b) {
    a = find_root(parent, a);
    b = find_root(parent, b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
}

}  // namespace

IdentificationComplex::IdentificationComplex(
    const Complex& k, const std::vector<std::pair<Simplex, Simplex>>& glued_pairs,
    const VertexEquivalence& eq) {
    // All faces of the complex, indexed in canonical order.
    std::vector<Simplex> faces;
    {
        const FaceLattice lattice(k);
        for (int d = 0; d <= lattice.max_dim(); ++d) {
            const auto& level = lattice.faces(d);
            faces.insert(faces.end(), level.begin(), level.end());
        }
    }
    std::map<Simplex, std::size_t> index;
    for (std::size_t i = 0; i < faces.size(); ++i) index.emplace(faces[i], i);

    std::vector<std::size_t> parent(faces.size());
    std::iota(parent.begin(), parent.end(), 0);

    for (const auto& [g, p] : glued_pairs) {
        // Class bijection: the vertex of g and the vertex of p in the same
        // class correspond. Regularity rule (i) makes this well defined.
        std::map<Vertex, Vertex> to_partner;
        for (Vertex v : g.vertices()) {
            bool found = false;
            for (Vertex w : p.vertices()) {
                if (eq.same(v, w)) {
                    to_partner[v] = w;
                    found = true;
                    break;
                }
            }
            if (!found) {
                throw std::invalid_argument(
                    "glued pair without a classwise vertex bijection");
            }
        }
        const auto gv = g.vertices();
        const std::size_t n = gv.size();
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<Vertex> sub, img;
            for (std::size_t b = 0; b < n; ++b) {
                if (mask & (1u << b)) {
                    sub.push_back(gv[b]);
                    img.push_back(to_partner[gv[b]]);
                }
            }
            unite(parent, index.at(Simplex(std::move(sub))), index.at(Simplex(std::move(img))));
        }
    }

    // Collect classes; the cell representative is the least member, and the
    // cell order is (dimension, representative).
    std::map<std::size_t, std::size_t> root_to_cell;
    std::vector<std::size_t> face_cell(faces.size());
    for (std::size_t i = 0; i < faces.size(); ++i) {
        const std::size_t root = find_root(parent, i);
        auto [it, inserted] = root_to_cell.try_emplace(root, cells_.size());
        if (inserted) {
            cells_.push_back(Cell{faces[root].dim(), faces[root], {}});
        }
        face_cell[i] = it->second;
    }
    // faces are sorted by (dim, lex) already, and roots are least members,
    // so cells_ is sorted by (dim, representative) as required.

    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (cells_[i].dim == 0) continue;
        for (const Simplex& facet : cells_[i].representative.facets()) {
            cells_[i].facets.push_back(face_cell[index.at(facet)]);
        }
        std::sort(cells_[i].facets.begin(), cells_[i].facets.end());
    }
}

std::size_t IdentificationComplex::cell_count(int dim) const {
    std::size_t n = 0;
    for (const Cell& c : cells_) {
        if (c.dim == dim) ++n;
    }
    return n;
}

int IdentificationComplex::max_dim() const {
    int d = -1;
    for (const Cell& c : cells_) d = std::max(d, c.dim);
    return d;
}

BettiVector IdentificationComplex::homology() const {
    BettiVector betti;
    const int top = max_dim();
    if (top < 0) return betti;

    // Contiguous ids per dimension.
    std::vector<std::size_t> local_id(cells_.size(), 0);
    std::vector<std::vector<std::size_t>> by_dim(static_cast<std::size_t>(top) + 1);
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        local_id[i] = by_dim[static_cast<std::size_t>(cells_[i].dim)].size();
        by_dim[static_cast<std::size_t>(cells_[i].dim)].push_back(i);
    }

    std::vector<std::size_t> boundary_rank(static_cast<std::size_t>(top) + 2, 0);
    for (int d = 1; d <= top; ++d) {
        const auto& cols = by_dim[static_cast<std::size_t>(d)];
        Gf2Matrix m(by_dim[static_cast<std::size_t>(d) - 1].size(), cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            // A facet class appearing an even number of times cancels.
            for (std::size_t f : cells_[cols[c]].facets) {
                m.flip(local_id[f], c);
            }
        }
        boundary_rank[static_cast<std::size_t>(d)] = m.rank();
    }

    betti.b.resize(static_cast<std::size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) {
        betti.b[static_cast<std::size_t>(d)] =
            static_cast<int>(by_dim[static_cast<std::size_t>(d)].size()) -
            static_cast<int>(boundary_rank[static_cast<std::size_t>(d)]) -
            static_cast<int>(boundary_rank[static_cast<std::size_t>(d) + 1]);
    }
    return betti;
}

bool IdentificationComplex::connected() const {
    if (cells_.empty()) return false;
    const BettiVector betti = homology();
    return betti[0] == 1;
}

Complex IdentificationComplex::order_complex() const {
    // Covering lists without multiplicity: chains are sets of cells.
    std::vector<std::vector<std::size_t>> covers(cells_.size());
    std::vector<bool> has_coface(cells_.size(), false);
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        auto list = cells_[i].facets;
        list.erase(std::unique(list.begin(), list.end()), list.end());
        for (std::size_t f : list) has_coface[f] = true;
        covers[i] = std::move(list);
    }

    std::vector<Simplex> gens;
    std::vector<Vertex> chain;
    auto descend = [&](auto&& self, std::size_t cell) -> void {
        chain.push_back(static_cast<Vertex>(cell) + 1);
        if (cells_[cell].dim == 0) {
            gens.push_back(Simplex(chain));
        } else {
            for (std::size_t f : covers[cell]) self(self, f);
        }
        chain.pop_back();
    };
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (!has_coface[i]) descend(descend, i);
    }
    return Complex(std::move(gens));
}

}  // namespace stellar
