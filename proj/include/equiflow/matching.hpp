#pragma once

#include <string>
#include <utility>
#include <vector>

#include "equiflow/complex.hpp"
#include "equiflow/stratify.hpp"

namespace equiflow {

/**
 * A partial pairing of simplices with codimension-one cofaces.
 *
 * Unpaired simplices are critical; they are the combinatorial singularities
 * of the path field the matching describes.
 */
class Matching {
public:
    Matching() = default;
    /// No pairs: every simplex critical.
    explicit Matching(const GComplex& K);
    /// Throws SchemaError when a pair is not (facet, coface) or a simplex is paired twice.
    static Matching from_pairs(const GComplex& K, const std::vector<std::pair<SimplexId, SimplexId>>& pairs);

    const GComplex& complex() const { return *complex_; }
    /// -1 for critical simplices.
    SimplexId partner(SimplexId id) const { return partner_[static_cast<std::size_t>(id)]; }
    bool is_critical(SimplexId id) const { return partner(id) < 0; }
    /// (lower, upper) pairs sorted by lower.
    std::vector<std::pair<SimplexId, SimplexId>> pairs() const;
    std::vector<SimplexId> critical() const;

    void pair(SimplexId lower, SimplexId upper);
    void unpair(SimplexId id);

    friend bool operator==(const Matching& a, const Matching& b) { return a.partner_ == b.partner_; }

private:
    const GComplex* complex_ = nullptr;
    std::vector<SimplexId> partner_;
};

struct ComponentCriticals {
    int orbit_type = 0;
    int component = 0;
    long long chi_c = 0;
    std::size_t critical_cells = 0;
    std::size_t critical_orbits = 0;
    long long critical_alternating_sum = 0;
    /// Only for components closed in M^H, where the Morse inequality applies.
    bool closed = false;
    long long betti_sum = 0;
};

struct MatchingCheck {
    bool single_pairing = true;
    bool stratum_preserving = true;
    bool equivariant = true;
    bool acyclic = true;
    bool euler_identity = true;
    std::vector<std::string> violations;
    std::vector<ComponentCriticals> components;

    bool ok() const { return single_pairing && stratum_preserving && equivariant && acyclic && euler_identity; }
};

/// Checks the five matching invariants and tabulates critical cells per
/// stratum component (with Betti sums of closed components for the Morse
/// inequality comparison).
MatchingCheck check_matching(const Stratification& strat, const Matching& m, bool with_betti = true);

/// Equivariant acyclic matching built stratum by stratum in filtration
/// order. Within an orbit type, orbits are added as elementary expansions:
/// scanning in (dim, lex) order, a simplex whose faces are all present is
/// paired with its least absent coface of equal isotropy whose other faces
/// are present. When no expansion applies, the least addable orbit becomes
/// critical. Deterministic.
Matching build_matching(const Stratification& strat);

/// Reverses unique gradient paths between critical pairs of adjacent
/// dimension inside one stratum, a whole G-orbit at a time; orbits whose
/// translated paths overlap or stop being unique are skipped.
Matching cancel(const Stratification& strat, const Matching& m);

/// Whether the modified Hasse diagram (matched arrows reversed) has no cycle.
bool is_acyclic(const Matching& m);

}  // namespace equiflow
