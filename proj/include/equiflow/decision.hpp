#pragma once

#include <vector>

#include "equiflow/complex.hpp"
#include "equiflow/stratify.hpp"

namespace equiflow {

enum class Verdict { Yes, No };

inline const char* to_string(Verdict v) { return v == Verdict::Yes ? "YES" : "NO"; }

/// A stratum component cited as evidence for a verdict.
struct ComponentWitness {
    int orbit_type = 0;
    Subgroup isotropy;
    int component = 0;
    long long chi_c = 0;
    int dim = -1;
    std::size_t open_simplices = 0;
    SimplexId least_simplex = 0;
};

struct OrbitTypeAbsChi {
    int orbit_type = 0;
    Subgroup representative;
    long long abs_chi = 0;
};

/// Existence of a non-singular equivariant path field: YES iff |chi|(M_H) = 0
/// for every realized isotropy subgroup H. A NO lists every component with
/// nonzero chi_c.
struct PathFieldDecision {
    Verdict verdict = Verdict::Yes;
    std::vector<OrbitTypeAbsChi> abs_chi;
    std::vector<ComponentWitness> witnesses;
};

struct DimensionWarning {
    int orbit_type = 0;
    Subgroup representative;
    int fixed_dim = -1;
};

/// Whether A can be the exact fixed set of an equivariant deformation:
/// NO iff some component C with chi_c(C) != 0 has closure disjoint from A.
/// Orbit types whose fixed set has dimension below 2 fall outside the
/// criterion's hypothesis and are reported as warnings.
struct CipdDecision {
    Verdict verdict = Verdict::Yes;
    std::vector<ComponentWitness> violations;
    std::vector<DimensionWarning> warnings;
    Subcomplex fixed_set;
};

PathFieldDecision decide_path_field(const Stratification& strat);

/// Throws EmptyFixedSet, NotInvariant, or SchemaError if A lives in another complex.
CipdDecision decide_cipd(const Stratification& strat, const Subcomplex& A);

}  // namespace equiflow
