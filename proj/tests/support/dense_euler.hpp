#pragma once

// Independent Euler characteristic oracle.  Same integral, different machine:
// classes live in a flat dense array indexed mixed-radix by exponents, and
// 1/(1 + l) is summed as a geometric series instead of going through
// inverse_unit.  Degree bookkeeping is implicit: only the unique top monomial
// is read off at the end, so off-degree terms cancel themselves.

#include <cstddef>
#include <vector>

#include <conifold/config.hpp>

namespace testsupport {

struct DenseRing {
    std::vector<int> dims;     // n_j per factor
    std::vector<int> strides;  // mixed-radix strides
    std::size_t size = 1;

    explicit DenseRing(const conifold::AmbientSpace& X) {
        for (int j = 0; j < X.k(); ++j) dims.push_back(X.n(j));
        strides.resize(dims.size());
        for (std::size_t j = 0; j < dims.size(); ++j) {
            strides[j] = static_cast<int>(size);
            size *= static_cast<std::size_t>(dims[j] + 1);
        }
    }

    std::vector<long long> one() const {
        std::vector<long long> v(size, 0);
        v[0] = 1;
        return v;
    }

    std::vector<long long> mul(const std::vector<long long>& a,
                               const std::vector<long long>& b) const {
        std::vector<long long> out(size, 0);
        std::vector<int> ea(dims.size()), eb(dims.size());
        for (std::size_t ia = 0; ia < size; ++ia) {
            if (a[ia] == 0) continue;
            decode(ia, ea);
            for (std::size_t ib = 0; ib < size; ++ib) {
                if (b[ib] == 0) continue;
                decode(ib, eb);
                bool in_box = true;
                std::size_t idx = 0;
                for (std::size_t j = 0; j < dims.size(); ++j) {
                    const int e = ea[j] + eb[j];
                    if (e > dims[j]) {
                        in_box = false;
                        break;
                    }
                    idx += static_cast<std::size_t>(e * strides[j]);
                }
                if (in_box) out[idx] += a[ia] * b[ib];
            }
        }
        return out;
    }

    void decode(std::size_t idx, std::vector<int>& e) const {
        for (std::size_t j = 0; j < dims.size(); ++j) {
            e[j] = static_cast<int>(idx % static_cast<std::size_t>(dims[j] + 1));
            idx /= static_cast<std::size_t>(dims[j] + 1);
        }
    }
};

inline long long euler_oracle(const conifold::ConfigMatrix& cfg) {
    const conifold::AmbientSpace& X = cfg.ambient();
    DenseRing R(X);

    auto acc = R.one();
    for (int j = 0; j < X.k(); ++j) {
        auto f = R.one();
        f[static_cast<std::size_t>(R.strides[static_cast<std::size_t>(j)])] += 1;
        for (int rep = 0; rep < X.n(j) + 1; ++rep) acc = R.mul(acc, f);
    }

    const int top_degree = X.total_dim();
    for (int i = 0; i < cfg.num_equations(); ++i) {
        auto l = R.one();
        l[0] = 0;
        for (int j = 0; j < X.k(); ++j)
            l[static_cast<std::size_t>(R.strides[static_cast<std::size_t>(j)])] +=
                cfg.row(i)[static_cast<std::size_t>(j)];
        // geometric series for 1/(1+l), exact inside the truncated box
        auto series = R.one();
        auto pw = R.one();
        long long sign = 1;
        for (int d = 1; d <= top_degree; ++d) {
            pw = R.mul(pw, l);
            sign = -sign;
            for (std::size_t idx = 0; idx < R.size; ++idx) series[idx] += sign * pw[idx];
        }
        acc = R.mul(acc, series);
        acc = R.mul(acc, l);
    }

    std::size_t top = 0;
    for (std::size_t j = 0; j < R.dims.size(); ++j)
        top += static_cast<std::size_t>(R.dims[j] * R.strides[j]);
    return acc[top];
}

}  // namespace testsupport
