#include "stellar/quotient.hpp"

#include <algorithm>
#include <map>

#include "stellar/error.hpp"

namespace stellar {

RegularityReport check_regular(const Complex& m, const VertexEquivalence& eq) {
    RegularityReport report;

    for (const Simplex& g : m.generators()) {
        const auto verts = g.vertices();
        bool flagged = false;
        for (std::size_t i = 0; i < verts.size() && !flagged; ++i) {
            for (std::size_t j = i + 1; j < verts.size() && !flagged; ++j) {
                if (eq.same(verts[i], verts[j])) {
                    report.condition_i_violations.push_back({g, verts[i], verts[j]});
                    flagged = true;
                }
            }
        }
    }

    // Group generators by the sorted multiset of class representatives; two
    // generators match iff every vertex of one is equal or equivalent to some
    // vertex of the other, bijectively.
    std::map<std::vector<Vertex>, std::vector<Simplex>> groups;
    for (const Simplex& g : m.generators()) {
        groups[eq.image_labels(g)].push_back(g);
    }
    for (const auto& [key, members] : groups) {
        if (members.size() == 1) {
            report.unmatched.push_back(members.front());
        } else if (members.size() == 2) {
            report.matched_pairs.emplace_back(members[0], members[1]);
        } else {
            for (const Simplex& g : members) {
                std::vector<Simplex> partners;
                for (const Simplex& p : members) {
                    if (p != g) partners.push_back(p);
                }
                report.condition_ii_violations.push_back({g, std::move(partners)});
            }
        }
    }
    std::sort(report.unmatched.begin(), report.unmatched.end());
    std::sort(report.matched_pairs.begin(), report.matched_pairs.end());
    return report;
}

std::pair<Complex, std::vector<Simplex>> quotient(const Complex& s,
                                                  const VertexEquivalence& eq) {
    const RegularityReport report = check_regular(s, eq);
    if (!report.regular()) {
        throw Error(Errc::not_regular, "vertex equivalence is not regular on the complex");
    }

    std::map<Simplex, std::size_t> multiplicity;
    for (const Simplex& g : s.generators()) {
        multiplicity[Simplex(eq.image_labels(g))] += 1;
    }
    std::vector<Simplex> reduced;
    std::vector<Simplex> cancelled;
    for (const auto& [image, count] : multiplicity) {
        if (count % 2 == 1) {
            reduced.push_back(image);
        }
        if (count >= 2) {
            cancelled.push_back(image);
        }
    }
    return {Complex(std::move(reduced)), std::move(cancelled)};
}

bool cone_boundary_check(Vertex a, const Complex& s, const VertexEquivalence& eq) {
    {
        const auto verts = s.vertices();
        if (std::binary_search(verts.begin(), verts.end(), a)) {
            throw Error(Errc::vertex_collision,
                        "apex " + std::to_string(a) + " occurs in the sphere complex");
        }
    }
    const Complex reduced = quotient(s, eq).first;
    if (reduced.empty()) return true;
    return boundary(join(Simplex{a}, reduced) + reduced).empty();
}

}  // namespace stellar
