#include "stellar/equivalence.hpp"

#include <algorithm>

namespace stellar {

Vertex VertexEquivalence::find(Vertex v) const {
    auto it = parent_.find(v);
    if (it == parent_.end()) return v;
    if (it->second == v) return v;
    const Vertex root = find(it->second);
    it->second = root;  // path compression; observable state is unchanged
    return root;
}

void VertexEquivalence::merge(Vertex i, Vertex j) {
    const Vertex ri = find(i);
    const Vertex rj = find(j);
    if (ri == rj) return;
    // Attach the larger root under the smaller so the representative is
    // always the least label of its class.
    const Vertex lo = std::min(ri, rj);
    const Vertex hi = std::max(ri, rj);
    parent_.try_emplace(lo, lo);
    parent_[hi] = lo;
}

Vertex VertexEquivalence::representative(Vertex v) const { return find(v); }

bool VertexEquivalence::is_identity() const {
    for (const auto& [v, p] : parent_) {
        if (find(v) != v) return false;
    }
    return true;
}

std::map<Vertex, std::vector<Vertex>> VertexEquivalence::nontrivial_classes() const {
    std::map<Vertex, std::vector<Vertex>> classes;
    for (const auto& [v, p] : parent_) {
        classes[find(v)].push_back(v);
    }
    for (auto it = classes.begin(); it != classes.end();) {
        if (it->second.size() < 2) {
            it = classes.erase(it);
        } else {
            std::sort(it->second.begin(), it->second.end());
            ++it;
        }
    }
    return classes;
}

std::vector<Vertex> VertexEquivalence::image_labels(const Simplex& s) const {
    std::vector<Vertex> out;
    out.reserve(s.vertex_count());
    for (Vertex v : s.vertices()) out.push_back(find(v));
    std::sort(out.begin(), out.end());
    return out;
}

bool VertexEquivalence::operator==(const VertexEquivalence& other) const {
    // Same partition iff both refine each other on the mentioned labels.
    for (const auto& [v, p] : parent_) {
        if (other.find(v) != other.find(find(v))) return false;
    }
    for (const auto& [v, p] : other.parent_) {
        if (find(v) != find(other.find(v))) return false;
    }
    return true;
}

}  // namespace stellar
