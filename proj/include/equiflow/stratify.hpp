#pragma once

#include <vector>

#include "equiflow/complex.hpp"
#include "equiflow/group.hpp"

namespace equiflow {

/// A connected component C of the open stratum M_H, with its closure in M^H.
struct Component {
    int id = 0;
    /// Position of the orbit type in Stratification::orbit_types.
    int orbit_type = 0;
    Subgroup isotropy;
    /// Open simplices, i.e. those whose pointwise stabilizer is exactly `isotropy`.
    std::vector<SimplexId> open_simplices;
    Subcomplex closure;
    /// Compactly supported Euler characteristic: alternating count of open simplices.
    long long chi_c = 0;
    int dim = -1;
};

/// Orbit-type stratification of a regular G-complex.
///
/// `orbit_types` lists only realized orbit types, in filtration order: if
/// (H_i) is subconjugate to (H_j) then j <= i. Per orbit type the data is
/// stored for its representative subgroup; strata of conjugates are obtained
/// by translating with the action.
class Stratification {
public:
    const GComplex& complex() const { return *complex_; }
    const SubgroupLattice& lattice() const { return lattice_; }

    const std::vector<OrbitType>& orbit_types() const { return orbit_types_; }
    /// Index into lattice().subgroups of the pointwise stabilizer of each simplex.
    int isotropy_index(SimplexId id) const { return isotropy_[static_cast<std::size_t>(id)]; }
    const Subgroup& isotropy(SimplexId id) const;
    /// Position in orbit_types() of the simplex's orbit type.
    int orbit_type_of(SimplexId id) const;

    const Subcomplex& fixed(int type) const { return fixed_[static_cast<std::size_t>(type)]; }
    const std::vector<SimplexId>& stratum(int type) const { return strata_[static_cast<std::size_t>(type)]; }
    const std::vector<Component>& components(int type) const { return components_[static_cast<std::size_t>(type)]; }
    /// M_i: simplices whose orbit type is among the first i+1.
    const Subcomplex& filtration(int i) const { return filtration_[static_cast<std::size_t>(i)]; }

    /// Index of the orbit type whose representative is H, or -1.
    int type_of_representative(const Subgroup& H) const;
    /// Index of the orbit type containing H (any conjugate), or -1.
    int type_of(const Subgroup& H) const;
    /// Simplex ids with pointwise stabilizer exactly H.
    std::vector<SimplexId> exact_stratum(const Subgroup& H) const;

private:
    friend Stratification strata(const GComplex&, int);

    const GComplex* complex_ = nullptr;
    SubgroupLattice lattice_;
    std::vector<int> isotropy_;
    std::vector<OrbitType> orbit_types_;
    std::vector<int> class_to_type_;
    std::vector<Subcomplex> fixed_;
    std::vector<std::vector<SimplexId>> strata_;
    std::vector<std::vector<Component>> components_;
    std::vector<Subcomplex> filtration_;
};

/// M^H: simplices fixed pointwise by every element of H.
/// Throws Error{IrregularAction} when K is not regular.
Subcomplex fixed_subcomplex(const GComplex& K, const Subgroup& H);

/// Builds the stratification; K must outlive the result.
/// Throws IrregularAction or GroupTooLarge.
Stratification strata(const GComplex& K, int max_group_order = kDefaultMaxGroupOrder);

/// Components of the open stratum of any realized isotropy subgroup H (not
/// only representatives), ordered by least simplex id.
/// Throws Error{UnknownIsotropy} if no simplex has isotropy exactly H.
std::vector<Component> components(const Stratification& strat, const Subgroup& H);

/// Whether the closure of c shares a simplex with A.
/// Throws Error{NotInvariant} when A is not G-invariant.
bool closure_meets(const Component& c, const Subcomplex& A);

}  // namespace equiflow
