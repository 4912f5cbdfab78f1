#include "stellar/normalize.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "stellar/error.hpp"
#include "stellar/homology.hpp"
#include "stellar/identification.hpp"

namespace stellar {

namespace {

void require_connected(const Complex& m) {
    const auto& gens = m.generators();
    std::vector<std::size_t> parent(gens.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    };
    std::map<Simplex, std::size_t> first_with_facet;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (const Simplex& f : gens[i].facets()) {
            auto [it, inserted] = first_with_facet.try_emplace(f, i);
            if (!inserted) {
                const std::size_t a = find(i);
                const std::size_t b = find(it->second);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (find(i) != find(0)) {
            throw Error(Errc::disconnected,
                        "generators do not share facets across one component");
        }
    }
}

// Quick regularity probe for the faces a branch-2 merge could break: only
// faces containing the fresh vertex can newly violate rule (i).
void check_fresh_faces(const Simplex& substituted, Vertex fresh_d,
                       const VertexEquivalence& eq, std::size_t step) {
    for (const Simplex& f : substituted.facets()) {
        if (!f.contains(fresh_d)) continue;
        const auto verts = f.vertices();
        for (std::size_t i = 0; i < verts.size(); ++i) {
            for (std::size_t j = i + 1; j < verts.size(); ++j) {
                if (eq.same(verts[i], verts[j])) {
                    std::ostringstream os;
                    os << "step " << step << ": merge makes " << f.to_string()
                       << " hold two equivalent vertices";
                    throw Error(Errc::regularity_broken, os.str());
                }
            }
        }
    }
}

}  // namespace

ConeTriangulation normalize(const Complex& m, const NormalizeOptions& options) {
    if (m.empty()) {
        throw Error(Errc::empty_input, "cannot normalize the zero chain");
    }
    if (!m.is_uniform() || m.dimension() != 3) {
        throw Error(Errc::not_uniform, "input must be uniform of dimension 3");
    }
    require_connected(m);

    const Simplex g0 = m.generators().front();
    const Vertex apex = m.max_label() + 1;
    const Simplex apex_simplex{apex};

    ConeTriangulation ct{.apex = apex,
                         .sphere = Complex(),
                         .eq = VertexEquivalence(),
                         .report = RegularityReport(),
                         .trace = MoveTrace{m, {SubdivideMove{g0, apex}}},
                         .steps = {},
                         .final_complex = Complex()};

    Complex current = subdivide(m, g0, apex);

    for (std::size_t step = 0;; ++step) {
        const Complex apex_link = link(apex_simplex, current);
        const Complex residue = residual(apex_simplex, current);
        if (residue.empty()) break;

        // Least residual generator sharing a 2-simplex with the apex link,
        // then its least shared facet.
        const Simplex* chosen = nullptr;
        std::vector<Simplex> shared;
        for (const Simplex& p : residue.generators()) {
            std::vector<Simplex> hits;
            for (const Simplex& f : p.facets()) {
                if (apex_link.contains(f)) hits.push_back(f);
            }
            if (!hits.empty()) {
                std::sort(hits.begin(), hits.end());
                chosen = &p;
                shared = std::move(hits);
                break;
            }
        }
        if (chosen == nullptr) {
            std::ostringstream os;
            os << "no residual generator shares a 2-simplex with the apex link at step "
               << step << "; residual " << residue.to_string() << "; link "
               << apex_link.to_string();
            throw Error(Errc::stalled, os.str());
        }

        const Simplex p = *chosen;
        const Simplex facet = shared.front();
        const Vertex off = p.minus(facet).vertex(0);
        const auto link_vertices = apex_link.vertices();
        const bool off_in_link =
            std::binary_search(link_vertices.begin(), link_vertices.end(), off);

        Complex working = current;
        Simplex target = p;
        Vertex fresh_d = 0;
        std::optional<Simplex> substituted;
        if (off_in_link) {
            fresh_d = current.max_label() + 1;
            target = facet.union_with(Simplex{fresh_d});
            substituted = target;
            working = current + Complex{p} + Complex{target};
            ct.eq.merge(fresh_d, off);
            check_fresh_faces(target, fresh_d, ct.eq, step);
        }

        // Chain form of the absorption.
        const Vertex target_off = off_in_link ? fresh_d : off;
        const Complex next = join(apex_simplex, apex_link + boundary(target)) +
                             (residual(apex_simplex, working) + Complex{target});

        const Vertex b = working.max_label() + 1;
        const Simplex weld_edge = Simplex{apex, target_off};
        if (options.validate) {
            const Complex via_moves = weld(subdivide(working, facet, b), weld_edge, b);
            if (via_moves != next) {
                std::ostringstream os;
                os << "step " << step
                   << ": chain formula and composite moves disagree";
                throw Error(Errc::validation_failed, os.str());
            }
        }
        ct.trace.moves.push_back(SubdivideMove{facet, b});
        ct.trace.moves.push_back(WeldMove{weld_edge, b});
        ct.steps.push_back(NormalizeStep{step, p, facet, shared.size(),
                                         off_in_link ? 2 : 1, off, fresh_d,
                                         substituted, b});
        current = std::move(next);
    }

    ct.final_complex = current;
    ct.sphere = link(apex_simplex, current);
    ct.report = check_regular(ct.sphere, ct.eq);
    if (!ct.report.regular()) {
        std::ostringstream os;
        os << "relation is not regular on the final link:"
           << " rule-one violations " << ct.report.condition_i_violations.size()
           << ", rule-two violations " << ct.report.condition_ii_violations.size();
        throw Error(Errc::regularity_broken, os.str());
    }
    return ct;
}

VerifyResult verify_cone(const ConeTriangulation& ct, const Complex& m) {
    VerifyResult result;
    auto fail = [&](const std::string& message) {
        result.ok = false;
        result.diagnostics.push_back(message);
    };
    auto info = [&](const std::string& message) {
        result.diagnostics.push_back(message);
    };

    const Simplex apex_simplex{ct.apex};
    {
        const auto verts = ct.sphere.vertices();
        if (std::binary_search(verts.begin(), verts.end(), ct.apex)) {
            fail("apex occurs in the sphere complex");
        }
    }
    if (!residual(apex_simplex, ct.final_complex).empty()) {
        fail("final complex has generators missing the apex");
    }
    if (link(apex_simplex, ct.final_complex) != ct.sphere) {
        fail("sphere complex is not the apex link of the final complex");
    }
    if (!ct.sphere.empty() && !(ct.sphere.is_uniform() && ct.sphere.dimension() == 2)) {
        fail("apex link is not uniform 2-dimensional");
    }

    // Replay the recorded moves, interleaving branch-2 substitutions.
    if (ct.trace.moves.size() != 1 + 2 * ct.steps.size()) {
        fail("trace length does not match the step log");
    } else {
        try {
            Complex current = apply_move(ct.trace.initial, ct.trace.moves[0]);
            VertexEquivalence eq;
            for (std::size_t i = 0; i < ct.steps.size(); ++i) {
                const NormalizeStep& step = ct.steps[i];
                if (step.branch == 2) {
                    current = current + Complex{step.absorbed} + Complex{*step.substituted};
                    eq.merge(step.fresh_d, step.off_vertex);
                }
                current = apply_move(current, ct.trace.moves[1 + 2 * i]);
                current = apply_move(current, ct.trace.moves[2 + 2 * i]);
            }
            if (current != ct.final_complex) {
                fail("replaying the trace does not reproduce the final complex");
            }
            if (!(eq == ct.eq)) {
                fail("replaying the merges does not reproduce the equivalence");
            }
        } catch (const Error& e) {
            fail(std::string("trace replay failed: ") + e.what());
        }
    }

    const RegularityReport report = check_regular(ct.sphere, ct.eq);
    if (!report.regular()) {
        fail("equivalence is not regular on the sphere complex");
    }

    // Closedness must correspond to a perfect matching of the sphere's
    // generators.
    try {
        const bool matched_all = cone_boundary_check(ct.apex, ct.sphere, ct.eq);
        const bool closed = is_closed(m);
        if (closed && !matched_all) {
            fail("unmatched generators on a closed input");
        } else if (!closed && matched_all) {
            fail("perfect matching on a non-closed input");
        } else if (!closed) {
            info("open cone / ball: input is not closed, " +
                 std::to_string(report.unmatched.size()) + " generators unmatched");
        }
    } catch (const Error& e) {
        fail(std::string("cone boundary check failed: ") + e.what());
    }

    // Conservation: the starred generator plus the absorbed ones are exactly
    // the input generators.
    {
        std::vector<Simplex> seen;
        if (!ct.trace.moves.empty()) {
            if (const auto* star0 = std::get_if<SubdivideMove>(&ct.trace.moves[0])) {
                seen.push_back(star0->at);
            }
        }
        for (const NormalizeStep& step : ct.steps) seen.push_back(step.absorbed);
        std::sort(seen.begin(), seen.end());
        if (seen != m.generators()) {
            fail("absorbed generators do not account for the input generators");
        }
    }

    // The glued cone carrier must not change homology.
    try {
        const IdentificationComplex carrier(ct.final_complex, report.matched_pairs, ct.eq);
        const BettiVector lhs = homology_z2(m);
        const BettiVector rhs = carrier.homology();
        if (!(lhs == rhs)) {
            fail("homology of input " + lhs.to_string() +
                 " differs from glued cone carrier " + rhs.to_string());
        }
    } catch (const std::exception& e) {
        fail(std::string("carrier construction failed: ") + e.what());
    }

    return result;
}

}  // namespace stellar
