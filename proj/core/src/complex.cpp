#include "stellar/complex.hpp"

#include <algorithm>
#include <sstream>

#include "stellar/error.hpp"

namespace stellar {

namespace {

// Sort and cancel duplicate generators mod 2.
std::vector<Simplex> reduce(std::vector<Simplex> gens) {
    std::sort(gens.begin(), gens.end());
    std::vector<Simplex> out;
    out.reserve(gens.size());
    std::size_t i = 0;
    while (i < gens.size()) {
        std::size_t j = i;
        while (j < gens.size() && gens[j] == gens[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(gens[i]);
        i = j;
    }
    return out;
}

}  // namespace

Complex::Complex(std::vector<Simplex> generators) : gens_(reduce(std::move(generators))) {}

Complex::Complex(std::initializer_list<Simplex> generators)
    : gens_(reduce(std::vector<Simplex>(generators))) {}

bool Complex::contains(const Simplex& s) const {
    return std::binary_search(gens_.begin(), gens_.end(), s);
}

Complex Complex::add(const Complex& other) const {
    std::vector<Simplex> out;
    out.reserve(gens_.size() + other.gens_.size());
    std::set_symmetric_difference(gens_.begin(), gens_.end(), other.gens_.begin(),
                                  other.gens_.end(), std::back_inserter(out));
    Complex result;
    result.gens_ = std::move(out);
    return result;
}

int Complex::dimension() const {
    int d = -1;
    for (const Simplex& g : gens_) d = std::max(d, g.dim());
    return d;
}

bool Complex::is_uniform() const {
    for (const Simplex& g : gens_) {
        if (g.dim() != gens_.front().dim()) return false;
    }
    return true;
}

std::vector<Vertex> Complex::vertices() const {
    std::vector<Vertex> out;
    for (const Simplex& g : gens_) {
        out.insert(out.end(), g.vertices().begin(), g.vertices().end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Vertex Complex::max_label() const {
    Vertex best = 0;
    for (const Simplex& g : gens_) {
        best = std::max(best, g.vertices().back());
    }
    return best;
}

std::string Complex::to_string() const {
    if (gens_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i > 0) os << '+';
        os << gens_[i].to_string();
    }
    return os.str();
}

FaceLattice::FaceLattice(const Complex& k) {
    if (k.empty()) return;
    by_dim_.resize(static_cast<std::size_t>(k.dimension()) + 1);
    for (const Simplex& g : k.generators()) {
        const auto verts = g.vertices();
        const std::size_t n = verts.size();
        // Every nonempty subset of the generator's vertex set.
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<Vertex> sub;
            for (std::size_t b = 0; b < n; ++b) {
                if (mask & (1u << b)) sub.push_back(verts[b]);
            }
            by_dim_[sub.size() - 1].push_back(Simplex(std::move(sub)));
        }
    }
    for (auto& faces : by_dim_) {
        std::sort(faces.begin(), faces.end());
        faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    }
}

const std::vector<Simplex>& FaceLattice::faces(int dim) const {
    static const std::vector<Simplex> none;
    if (dim < 0 || dim > max_dim()) return none;
    return by_dim_[static_cast<std::size_t>(dim)];
}

std::size_t FaceLattice::count(int dim) const { return faces(dim).size(); }

std::size_t FaceLattice::total() const {
    std::size_t n = 0;
    for (const auto& faces : by_dim_) n += faces.size();
    return n;
}

bool FaceLattice::contains(const Simplex& s) const {
    const auto& level = faces(s.dim());
    return std::binary_search(level.begin(), level.end(), s);
}

std::map<int, std::size_t> FaceLattice::counts() const {
    std::map<int, std::size_t> out;
    for (int d = 0; d <= max_dim(); ++d) {
        if (count(d) > 0) out[d] = count(d);
    }
    return out;
}

Complex boundary(const Simplex& s) { return Complex(s.facets()); }

Complex boundary(const Complex& k) {
    std::vector<Simplex> parts;
    for (const Simplex& g : k.generators()) {
        auto fs = g.facets();
        parts.insert(parts.end(), fs.begin(), fs.end());
    }
    return Complex(std::move(parts));
}

bool is_closed(const Complex& k) { return boundary(k).empty(); }

Complex join(const Complex& k, const Complex& l) {
    if (k.empty() || l.empty()) return Complex();
    {
        const auto kv = k.vertices();
        const auto lv = l.vertices();
        std::vector<Vertex> common;
        std::set_intersection(kv.begin(), kv.end(), lv.begin(), lv.end(),
                              std::back_inserter(common));
        if (!common.empty()) {
            throw Error(Errc::shared_vertex,
                        "join operands share vertex " + std::to_string(common.front()));
        }
    }
    std::vector<Simplex> out;
    out.reserve(k.size() * l.size());
    for (const Simplex& q : k.generators()) {
        for (const Simplex& p : l.generators()) {
            out.push_back(q.union_with(p));
        }
    }
    return Complex(std::move(out));
}

Complex join(const Simplex& s, const Complex& l) { return join(Complex{s}, l); }

Complex link(const Simplex& a, const Complex& k) {
    std::vector<Simplex> out;
    for (const Simplex& g : k.generators()) {
        if (g != a && g.contains_all(a)) out.push_back(g.minus(a));
    }
    return Complex(std::move(out));
}

Complex star(const Simplex& a, const Complex& k) {
    std::vector<Simplex> out;
    for (const Simplex& g : k.generators()) {
        if (g.contains_all(a)) out.push_back(g);
    }
    return Complex(std::move(out));
}

Complex residual(const Simplex& a, const Complex& k) {
    std::vector<Simplex> out;
    for (const Simplex& g : k.generators()) {
        if (!g.contains_all(a)) out.push_back(g);
    }
    return Complex(std::move(out));
}

FaceLattice face_lattice(const Complex& k) { return FaceLattice(k); }

int euler_characteristic(const Complex& k) {
    const FaceLattice lattice(k);
    int chi = 0;
    for (int d = 0; d <= lattice.max_dim(); ++d) {
        const int sign = (d % 2 == 0) ? 1 : -1;
        chi += sign * static_cast<int>(lattice.count(d));
    }
    return chi;
}

}  // namespace stellar
