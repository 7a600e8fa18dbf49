#pragma once

// The ambient variety: a product of projective spaces P^{n_1} x ... x P^{n_k}.
// Homogeneous coordinates are X[j][r] with 0 <= r <= n_j; a flat coordinate
// index enumerates them factor by factor. A Multidegree assigns one integer
// per factor (degrees of line bundles, curves, and polynomials all live here).

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace conifold {

using Multidegree = std::vector<int>;

class AmbientSpace {
public:
    explicit AmbientSpace(std::vector<int> factor_dims) : n_(std::move(factor_dims)) {
        if (n_.empty()) throw std::invalid_argument("AmbientSpace: no factors");
        for (int nj : n_)
            if (nj < 1) throw std::invalid_argument("AmbientSpace: factor dimensions must be >= 1");
        offsets_.reserve(n_.size() + 1);
        offsets_.push_back(0);
        for (int nj : n_) offsets_.push_back(offsets_.back() + nj + 1);
    }

    int k() const { return static_cast<int>(n_.size()); }
    int n(int j) const { return n_.at(static_cast<std::size_t>(j)); }
    const std::vector<int>& dims() const { return n_; }

    // Sum of the factor dimensions: dim X.
    int total_dim() const { return std::accumulate(n_.begin(), n_.end(), 0); }

    // Number of homogeneous coordinates, sum of (n_j + 1).
    int coord_count() const { return offsets_.back(); }

    int coord_index(int j, int r) const {
        if (j < 0 || j >= k() || r < 0 || r > n(j))
            throw std::out_of_range("AmbientSpace: coordinate (" + std::to_string(j) + "," +
                                    std::to_string(r) + ") out of range");
        return offsets_[static_cast<std::size_t>(j)] + r;
    }

    int factor_of(int coord) const {
        if (coord < 0 || coord >= coord_count())
            throw std::out_of_range("AmbientSpace: flat coordinate out of range");
        int j = 0;
        while (offsets_[static_cast<std::size_t>(j) + 1] <= coord) ++j;
        return j;
    }

    int index_in_factor(int coord) const {
        return coord - offsets_[static_cast<std::size_t>(factor_of(coord))];
    }

    friend bool operator==(const AmbientSpace& a, const AmbientSpace& b) { return a.n_ == b.n_; }
    friend bool operator!=(const AmbientSpace& a, const AmbientSpace& b) { return !(a == b); }

private:
    std::vector<int> n_;
    std::vector<int> offsets_;
};

inline Multidegree unit_degree(int k, int j) {
    Multidegree d(static_cast<std::size_t>(k), 0);
    d.at(static_cast<std::size_t>(j)) = 1;
    return d;
}

inline Multidegree ones_degree(int k) { return Multidegree(static_cast<std::size_t>(k), 1); }

inline long long dot(const Multidegree& a, const Multidegree& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: multidegree length mismatch");
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
    return s;
}

}  // namespace conifold
