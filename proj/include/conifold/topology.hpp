#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <conifold/cohomology.hpp>
#include <conifold/config.hpp>

namespace conifold {

// chi(Y) for the threefold Y cut out by the configuration, by integrating the
// degree-3 part of c(TX) / prod(1 + l_i) against prod l_i over the ambient X,
// where l_i is the hyperplane class combination given by row i.
inline long long euler_characteristic(const ConfigMatrix& cfg) {
    {
        auto bad = validate(cfg, true);
        if (!bad.empty())
            throw std::invalid_argument("euler_characteristic needs a strictly valid config: " +
                                        bad.front());
    }
    const AmbientSpace& X = cfg.ambient();

    CohomologyClass tangent = CohomologyClass::one(X);
    for (int j = 0; j < X.k(); ++j) {
        CohomologyClass f = CohomologyClass::one(X) + CohomologyClass::hyperplane(X, j);
        tangent = tangent * f.pow(X.n(j) + 1);
    }

    CohomologyClass bundle_inv = CohomologyClass::one(X);
    CohomologyClass top = CohomologyClass::one(X);
    for (int i = 0; i < cfg.num_equations(); ++i) {
        CohomologyClass li = CohomologyClass::line_class(X, cfg.row(i));
        bundle_inv = bundle_inv * (CohomologyClass::one(X) + li).inverse_unit();
        top = top * li;
    }

    CohomologyClass c3 = (tangent * bundle_inv).degree_part(3);
    return (c3 * top).integrate();
}

struct TopologyReport {
    long long euler = 0;
    int b2 = 0;
    long long b3 = 0;
    int node_count = 0;
    long long summand_count = 0;
};

// Betti data of the threefold and the connected-sum count of the smoothing:
// contracting the k + 1 standard lines and smoothing the resulting nodes
// yields #_N (S^3 x S^3) with N = b3/2 + node_count - b2 = b3/2 + 1.
inline TopologyReport topology_report(const ConfigMatrix& cfg) {
    TopologyReport rep;
    rep.euler = euler_characteristic(cfg);
    const int k = cfg.ambient().k();
    rep.b2 = k;
    rep.b3 = 2 + 2 * static_cast<long long>(k) - rep.euler;
    rep.node_count = k + 1;
    if (rep.b3 < 0 || rep.b3 % 2 != 0)
        throw std::logic_error("third Betti number came out " + std::to_string(rep.b3) +
                               "; it must be even and nonnegative for a valid config");
    rep.summand_count = rep.b3 / 2 + rep.node_count - rep.b2;
    return rep;
}

}  // namespace conifold
