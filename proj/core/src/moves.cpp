#include "stellar/moves.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "stellar/error.hpp"

namespace stellar {

namespace {

Complex relabel_unchecked(const Complex& k, const std::map<Vertex, Vertex>& mapping) {
    std::vector<Simplex> out;
    out.reserve(k.size());
    for (const Simplex& g : k.generators()) {
        std::vector<Vertex> labels;
        labels.reserve(g.vertex_count());
        for (Vertex v : g.vertices()) {
            auto it = mapping.find(v);
            labels.push_back(it == mapping.end() ? v : it->second);
        }
        out.push_back(Simplex(std::move(labels)));
    }
    return Complex(std::move(out));
}

bool is_face_of_any(const Simplex& a, const Complex& k) {
    for (const Simplex& g : k.generators()) {
        if (g.contains_all(a)) return true;
    }
    return false;
}

}  // namespace

Complex subdivide(const Complex& k, const Simplex& at, Vertex a) {
    if (!is_face_of_any(at, k)) {
        throw Error(Errc::absent_simplex,
                    "subdivision target " + at.to_string() + " is not a face of the complex");
    }
    {
        const auto verts = k.vertices();
        if (std::binary_search(verts.begin(), verts.end(), a)) {
            throw Error(Errc::vertex_collision,
                        "vertex " + std::to_string(a) + " already occurs in the complex");
        }
    }
    if (at.dim() == 0) {
        // Starring a vertex renames it: its boundary is the zero chain, so
        // the cone formula degenerates.
        return relabel_unchecked(k, {{at.vertex(0), a}});
    }

    const Complex cone = join(Simplex{a}, boundary(at));
    Complex result = residual(at, k);
    if (k.contains(at)) {
        result = result + cone;
    }
    const Complex lk = link(at, k);
    if (!lk.empty()) {
        result = result + join(cone, lk);
    }
    return result;
}

Complex weld(const Complex& k, const Simplex& at, Vertex a) {
    {
        const auto verts = k.vertices();
        if (!std::binary_search(verts.begin(), verts.end(), a)) {
            throw Error(Errc::absent_vertex,
                        "weld vertex " + std::to_string(a) + " does not occur in the complex");
        }
    }
    if (is_face_of_any(at, k)) {
        throw Error(Errc::simplex_present,
                    "weld simplex " + at.to_string() + " is already a face of the complex");
    }
    if (at.dim() == 0) {
        // The link factors with the unit boundary, so the weld renames a.
        return relabel_unchecked(k, {{a, at.vertex(0)}});
    }

    const Complex lk = link(Simplex{a}, k);
    const Simplex base_facet = at.facet_omitting(at.vertex_count() - 1);
    std::vector<Simplex> carrying;  // generators of the link containing the base facet
    for (const Simplex& g : lk.generators()) {
        if (g.contains_all(base_facet)) carrying.push_back(g);
    }
    if (carrying.empty()) {
        throw Error(Errc::not_factorable,
                    "link of vertex " + std::to_string(a) + " does not factor through " +
                        at.to_string());
    }

    const Complex q = residual(Simplex{a}, k);
    const bool unit_cofactor =
        carrying.size() == 1 && carrying.front() == base_facet;
    if (unit_cofactor) {
        if (lk != boundary(at)) {
            throw Error(Errc::not_factorable,
                        "link of vertex " + std::to_string(a) + " is not the boundary of " +
                            at.to_string());
        }
        return Complex{at} + q;
    }

    std::vector<Simplex> cofactor_gens;
    cofactor_gens.reserve(carrying.size());
    for (const Simplex& g : carrying) {
        if (g == base_facet || !g.contains_all(base_facet)) {
            throw Error(Errc::not_factorable, "mixed link factorization at vertex " +
                                                  std::to_string(a));
        }
        const Simplex b = g.minus(base_facet);
        if (!b.disjoint_from(at)) {
            throw Error(Errc::not_factorable,
                        "link cofactor at vertex " + std::to_string(a) +
                            " meets the weld simplex");
        }
        cofactor_gens.push_back(b);
    }
    const Complex cofactor(std::move(cofactor_gens));
    if (join(boundary(at), cofactor) != lk) {
        throw Error(Errc::not_factorable,
                    "link of vertex " + std::to_string(a) + " does not factor as boundary(" +
                        at.to_string() + ") * B");
    }
    return join(Complex{at}, cofactor) + q;
}

Complex relabel(const Complex& k, const std::map<Vertex, Vertex>& mapping) {
    const auto verts = k.vertices();
    std::set<Vertex> image;
    for (Vertex v : verts) {
        auto it = mapping.find(v);
        const Vertex w = it == mapping.end() ? v : it->second;
        if (!image.insert(w).second) {
            throw Error(Errc::not_injective,
                        "relabel map collides on label " + std::to_string(w));
        }
    }
    return relabel_unchecked(k, mapping);
}

std::vector<LinkFactor> factor_link(const Complex& l, const Complex& exclude) {
    std::vector<LinkFactor> out;
    if (l.empty()) return out;

    const FaceLattice lattice(l);
    const auto verts = l.vertices();
    const int max_candidate_dim = l.dimension() + 2;

    // Candidate simplexes are a lattice face plus one more vertex; any A
    // whose facets all lie in the lattice arises this way.
    std::set<Simplex> candidates;
    for (int d = 0; d <= lattice.max_dim(); ++d) {
        for (const Simplex& f : lattice.faces(d)) {
            for (Vertex v : verts) {
                if (f.contains(v)) continue;
                const Simplex a = f.union_with(Simplex{v});
                if (a.dim() <= max_candidate_dim) candidates.insert(a);
            }
        }
    }

    for (const Simplex& a : candidates) {
        bool facets_present = true;
        for (const Simplex& f : a.facets()) {
            if (!lattice.contains(f)) {
                facets_present = false;
                break;
            }
        }
        if (!facets_present) continue;

        bool excluded = false;
        for (const Simplex& g : exclude.generators()) {
            if (g.contains_all(a)) {
                excluded = true;
                break;
            }
        }
        if (excluded) continue;

        const Simplex base_facet = a.facet_omitting(a.vertex_count() - 1);
        std::vector<Simplex> carrying;
        for (const Simplex& g : l.generators()) {
            if (g.contains_all(base_facet)) carrying.push_back(g);
        }
        if (carrying.empty()) continue;

        if (carrying.size() == 1 && carrying.front() == base_facet) {
            if (l == boundary(a)) out.push_back({a, Complex()});
            continue;
        }

        std::vector<Simplex> cofactor_gens;
        bool valid = true;
        for (const Simplex& g : carrying) {
            if (g == base_facet) {
                valid = false;
                break;
            }
            const Simplex b = g.minus(base_facet);
            if (!b.disjoint_from(a)) {
                valid = false;
                break;
            }
            cofactor_gens.push_back(b);
        }
        if (!valid) continue;

        const Complex cofactor(std::move(cofactor_gens));
        if (join(boundary(a), cofactor) == l) {
            out.push_back({a, cofactor});
        }
    }
    return out;  // candidates iterate in lexicographic order already
}

std::vector<MoveRecord> enumerate_moves(const Complex& k) {
    std::vector<MoveRecord> out;
    if (k.empty()) return out;

    const Vertex fresh = k.max_label() + 1;
    const FaceLattice lattice(k);
    std::vector<Simplex> faces;
    faces.reserve(lattice.total());
    for (int d = 0; d <= lattice.max_dim(); ++d) {
        const auto& level = lattice.faces(d);
        faces.insert(faces.end(), level.begin(), level.end());
    }
    std::sort(faces.begin(), faces.end());
    for (const Simplex& a : faces) {
        out.push_back(SubdivideMove{a, fresh});
    }

    std::vector<WeldMove> welds;
    for (Vertex v : k.vertices()) {
        for (const LinkFactor& factor : factor_link(link(Simplex{v}, k), k)) {
            welds.push_back(WeldMove{factor.a_simplex, v});
        }
    }
    std::sort(welds.begin(), welds.end());
    for (WeldMove& w : welds) out.push_back(std::move(w));
    return out;
}

Complex apply_move(const Complex& k, const MoveRecord& move) {
    return std::visit(
        [&](const auto& m) -> Complex {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, SubdivideMove>) {
                return subdivide(k, m.at, m.fresh);
            } else if constexpr (std::is_same_v<T, WeldMove>) {
                return weld(k, m.at, m.vertex);
            } else {
                return relabel(k, m.mapping);
            }
        },
        move);
}

Complex replay(const MoveTrace& trace) {
    Complex current = trace.initial;
    for (std::size_t i = 0; i < trace.moves.size(); ++i) {
        try {
            current = apply_move(current, trace.moves[i]);
        } catch (const Error& e) {
            std::ostringstream os;
            os << "move " << i << " failed: " << e.what();
            throw ReplayError(i, e.code(), os.str());
        }
    }
    return current;
}

std::string move_to_string(const MoveRecord& move) {
    std::ostringstream os;
    if (const auto* s = std::get_if<SubdivideMove>(&move)) {
        os << "S " << s->fresh << " ;";
        for (Vertex v : s->at.vertices()) os << ' ' << v;
    } else if (const auto* w = std::get_if<WeldMove>(&move)) {
        os << "W " << w->vertex << " ;";
        for (Vertex v : w->at.vertices()) os << ' ' << v;
    } else {
        const auto& mapping = std::get<RelabelMove>(move).mapping;
        os << "R ";
        bool first = true;
        for (const auto& [from, to] : mapping) {
            if (!first) os << ',';
            os << from << "->" << to;
            first = false;
        }
    }
    return os.str();
}

}  // namespace stellar
