#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equiflow/complex.hpp"
#include "equiflow/stratify.hpp"

namespace equiflow {

/**
 * A simplex-to-simplex assignment F, read as the vertex map of the barycentric
 * subdivision sending the barycenter of s to the barycenter of F(s).
 *
 * Simplices with F(s) = s are singular: the induced map fixes their barycenter.
 */
struct DisplacementMap {
    const GComplex* complex = nullptr;
    std::vector<SimplexId> image;
    /// One entry per G-orbit of connected pieces: which construction was used there.
    std::vector<std::string> strategies;

    static DisplacementMap identity(const GComplex& K);

    SimplexId operator()(SimplexId id) const { return image[static_cast<std::size_t>(id)]; }
    std::vector<SimplexId> singular() const;
};

/// Singular simplices inside one stratum component, grouped into G-orbits.
struct SingularOrbitGroup {
    int orbit_type = 0;
    int component = 0;
    /// Least simplex of each singular orbit meeting the component.
    std::vector<SimplexId> orbits;
};

struct DisplacementCertificate {
    bool total = true;
    bool monotone = true;
    bool equivariant = true;
    /// F maps every fixed subcomplex M^H into itself and induces the identity
    /// on its rational homology, a necessary condition for F to be
    /// equivariantly homotopic to the identity.
    bool homology_identity = true;
    std::vector<std::string> violations;

    std::vector<SimplexId> singular;
    std::size_t chains_checked = 0;
    /// Subdivision simplices (chains) whose simplex set meets its image's.
    std::size_t flagged_chains = 0;
    std::vector<std::vector<SimplexId>> flagged_examples;
    std::vector<SingularOrbitGroup> singular_orbits;

    bool pass() const { return total && monotone && equivariant && homology_identity; }
    /// The combinatorial "no fixed orbits" certificate.
    bool fixed_point_free() const { return pass() && singular.empty() && flagged_chains == 0; }
};

DisplacementCertificate verify_displacement(const GComplex& K, const DisplacementMap& F);

/**
 * Builds an equivariant displacement map holding A fixed.
 *
 * Works on G-orbits of connected pieces of K. A piece orbit that meets A is
 * held fixed. Elsewhere the first strategy the verifier certifies free of
 * singular simplices is used:
 *   s1  a group element moving every simplex of the piece orbit and commuting
 *       with the action there;
 *   s2  a rotation of each circle (1-dimensional cyclic piece), oriented
 *       compatibly with the action;
 *   s3  a simplicial automorphism commuting with the action and moving every
 *       simplex, found by bounded backtracking search;
 *   s4  the identity (all simplices singular).
 * Throws Error{NotInvariant} if A is not invariant.
 */
DisplacementMap build_displacement(const GComplex& K, const std::optional<Subcomplex>& A = std::nullopt,
                                   long search_budget = 200000);

}  // namespace equiflow
