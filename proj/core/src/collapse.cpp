#include "stellar/collapse.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace stellar {

namespace {

// Order free-face candidates: higher dimension first, then lexicographic.
struct FaceKey {
    int dim;
    std::size_t index;

    bool operator<(const FaceKey& other) const {
        if (dim != other.dim) return dim > other.dim;
        return index < other.index;
    }
};

}  // namespace

CollapseResult collapse(const Complex& k, std::size_t budget) {
    CollapseResult result;
    if (k.empty()) {
        result.collapsed = false;
        return result;
    }

    // Flatten the lattice; indices within one dimension follow lex order.
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

    // Immediate coface lists (supersets one dimension up).
    std::vector<std::vector<std::size_t>> up(faces.size());
    std::vector<std::vector<std::size_t>> down(faces.size());
    for (std::size_t i = 0; i < faces.size(); ++i) {
        if (faces[i].dim() == 0) continue;
        for (const Simplex& facet : faces[i].facets()) {
            const std::size_t f = index.at(facet);
            up[f].push_back(i);
            down[i].push_back(f);
        }
    }

    std::vector<bool> alive(faces.size(), true);
    std::vector<std::size_t> up_alive(faces.size());
    for (std::size_t i = 0; i < faces.size(); ++i) up_alive[i] = up[i].size();

    auto sole_up = [&](std::size_t f) -> std::ptrdiff_t {
        std::ptrdiff_t found = -1;
        for (std::size_t g : up[f]) {
            if (!alive[g]) continue;
            if (found >= 0) return -1;
            found = static_cast<std::ptrdiff_t>(g);
        }
        return found;
    };
    auto is_free = [&](std::size_t f) {
        if (!alive[f] || up_alive[f] != 1) return false;
        const std::ptrdiff_t g = sole_up(f);
        return g >= 0 && up_alive[static_cast<std::size_t>(g)] == 0;
    };

    std::set<FaceKey> candidates;
    auto recheck = [&](std::size_t f) {
        const FaceKey key{faces[f].dim(), f};
        if (is_free(f)) {
            candidates.insert(key);
        } else {
            candidates.erase(key);
        }
    };
    for (std::size_t i = 0; i < faces.size(); ++i) recheck(i);

    std::size_t alive_count = faces.size();
    while (!candidates.empty() && result.elimination_log.size() < budget) {
        const FaceKey key = *candidates.begin();
        candidates.erase(candidates.begin());
        if (!is_free(key.index)) continue;
        const std::size_t f = key.index;
        const auto g = static_cast<std::size_t>(sole_up(f));

        alive[g] = false;
        alive[f] = false;
        alive_count -= 2;
        result.elimination_log.emplace_back(faces[f], faces[g]);
        candidates.erase(FaceKey{faces[g].dim(), g});

        for (std::size_t x : down[g]) {
            if (!alive[x]) continue;
            --up_alive[x];
            recheck(x);
            // x may have just become maximal; its facets can turn free.
            if (up_alive[x] == 0) {
                for (std::size_t y : down[x]) {
                    if (alive[y]) recheck(y);
                }
            }
        }
        for (std::size_t x : down[f]) {
            if (!alive[x]) continue;
            --up_alive[x];
            recheck(x);
            if (up_alive[x] == 0) {
                for (std::size_t y : down[x]) {
                    if (alive[y]) recheck(y);
                }
            }
        }
    }

    result.budget_exhausted = !candidates.empty() &&
                              result.elimination_log.size() >= budget;
    result.collapsed = alive_count == 1;
    if (!result.collapsed) {
        std::vector<Simplex> core_gens;
        for (std::size_t i = 0; i < faces.size(); ++i) {
            if (alive[i] && up_alive[i] == 0) core_gens.push_back(faces[i]);
        }
        result.core = Complex(std::move(core_gens));
        std::size_t free_now = 0;
        for (std::size_t i = 0; i < faces.size(); ++i) {
            if (is_free(i)) ++free_now;
        }
        result.free_faces_at_stop = free_now;
    }
    return result;
}

}  // namespace stellar
