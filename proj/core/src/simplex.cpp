#include "stellar/simplex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stellar {

namespace {

std::vector<Vertex> canonicalize(std::vector<Vertex> labels) {
    if (labels.empty()) {
        throw std::invalid_argument("simplex needs at least one vertex");
    }
    std::sort(labels.begin(), labels.end());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] < 1) {
            throw std::invalid_argument("vertex labels must be positive");
        }
        if (i > 0 && labels[i] == labels[i - 1]) {
            throw std::invalid_argument("vertex labels must be distinct");
        }
    }
    return labels;
}

}  // namespace

Simplex::Simplex(std::initializer_list<Vertex> labels)
    : v_(canonicalize(std::vector<Vertex>(labels))) {}

Simplex::Simplex(std::vector<Vertex> labels) : v_(canonicalize(std::move(labels))) {}

bool Simplex::contains(Vertex v) const {
    return std::binary_search(v_.begin(), v_.end(), v);
}

bool Simplex::contains_all(const Simplex& other) const {
    return std::includes(v_.begin(), v_.end(), other.v_.begin(), other.v_.end());
}

bool Simplex::disjoint_from(const Simplex& other) const {
    std::size_t i = 0, j = 0;
    while (i < v_.size() && j < other.v_.size()) {
        if (v_[i] < other.v_[j]) {
            ++i;
        } else if (v_[i] > other.v_[j]) {
            ++j;
        } else {
            return false;
        }
    }
    return true;
}

Simplex Simplex::union_with(const Simplex& other) const {
    std::vector<Vertex> merged;
    merged.reserve(v_.size() + other.v_.size());
    std::merge(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
               std::back_inserter(merged));
    for (std::size_t i = 1; i < merged.size(); ++i) {
        if (merged[i] == merged[i - 1]) {
            throw std::invalid_argument("union of non-disjoint simplexes");
        }
    }
    return Simplex(unchecked_tag{}, std::move(merged));
}

Simplex Simplex::minus(const Simplex& other) const {
    std::vector<Vertex> rest;
    rest.reserve(v_.size());
    std::set_difference(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                        std::back_inserter(rest));
    if (rest.empty()) {
        throw std::invalid_argument("simplex difference must stay nonempty");
    }
    return Simplex(unchecked_tag{}, std::move(rest));
}

Simplex Simplex::facet_omitting(std::size_t i) const {
    std::vector<Vertex> rest;
    rest.reserve(v_.size() - 1);
    for (std::size_t j = 0; j < v_.size(); ++j) {
        if (j != i) rest.push_back(v_[j]);
    }
    if (rest.empty()) {
        throw std::invalid_argument("0-simplex has no facets");
    }
    return Simplex(unchecked_tag{}, std::move(rest));
}

std::vector<Simplex> Simplex::facets() const {
    std::vector<Simplex> out;
    if (dim() < 1) return out;
    out.reserve(v_.size());
    for (std::size_t i = 0; i < v_.size(); ++i) {
        out.push_back(facet_omitting(i));
    }
    return out;
}

std::string Simplex::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (i > 0) os << ' ';
        os << v_[i];
    }
    os << ')';
    return os.str();
}

}  // namespace stellar
