#pragma once

#include <optional>
#include <vector>

#include "equiflow/complex.hpp"
#include "equiflow/rational_linalg.hpp"
#include "equiflow/stratify.hpp"

namespace equiflow {

/// Alternating count of simplices of L.
long long chi_subcomplex(const Subcomplex& L);

/// Alternating count of the component's open simplices (compactly supported
/// Euler characteristic). For an open manifold component this agrees with the
/// ordinary Euler characteristic up to sign, which is all the decision
/// procedures consume.
long long chi_c(const GComplex& K, const Component& c);

/// |chi|(M_H): sum over components of M_H of |chi_c|.
/// Throws Error{UnknownIsotropy} when H is not realized.
long long abs_chi(const Stratification& strat, const Subgroup& H);

/// Rational Betti numbers b_0..b_dim of L (empty for the empty subcomplex).
std::vector<long long> betti(const Subcomplex& L);

/// Simplices of a subcomplex indexed per dimension, for building boundary matrices.
struct ChainBasis {
    explicit ChainBasis(const Subcomplex& L);

    const GComplex* complex;
    std::vector<std::vector<SimplexId>> cells;  // cells[d] sorted
    std::vector<int> local;                     // SimplexId -> position within its dimension, or -1

    /// Columns of the boundary map C_d -> C_{d-1} with the alternating-sign convention.
    std::vector<linalg::Column> boundary(int d) const;
};

struct ComponentEuler {
    int id = 0;
    long long chi_c = 0;
    int dim = -1;
    std::size_t open_simplices = 0;
    /// Closed in M^H: the closure adds no simplices.
    bool closed = false;
    std::optional<std::vector<long long>> closure_betti;
};

struct OrbitTypeEuler {
    int orbit_type = 0;
    Subgroup representative;
    long long chi_fixed = 0;
    int fixed_dim = -1;
    std::vector<ComponentEuler> components;
    long long abs_chi = 0;
    /// Sum of chi_c over every open stratum inside M^H.
    long long strata_sum = 0;
    bool additive() const { return strata_sum == chi_fixed; }
};

struct EulerReport {
    long long chi_total = 0;
    std::vector<OrbitTypeEuler> types;
};

EulerReport euler_report(const Stratification& strat, bool with_betti = true);

}  // namespace equiflow
