#include "equiflow/decision.hpp"

#include <cstdlib>

#include "equiflow/error.hpp"
#include "equiflow/invariants.hpp"

namespace equiflow {

namespace {

ComponentWitness witness_for(const GComplex& K, const Component& c)
{
    ComponentWitness w;
    w.orbit_type = c.orbit_type;
    w.isotropy = c.isotropy;
    w.component = c.id;
    w.chi_c = chi_c(K, c);
    w.dim = c.dim;
    w.open_simplices = c.open_simplices.size();
    w.least_simplex = c.open_simplices.front();
    return w;
}

}  // namespace

PathFieldDecision decide_path_field(const Stratification& strat)
{
    PathFieldDecision d;
    for (std::size_t t = 0; t < strat.orbit_types().size(); ++t) {
        OrbitTypeAbsChi entry{static_cast<int>(t), strat.orbit_types()[t].representative, 0};
        for (const auto& c : strat.components(static_cast<int>(t))) {
            long long chi = chi_c(strat.complex(), c);
            entry.abs_chi += std::llabs(chi);
            if (chi != 0)
                d.witnesses.push_back(witness_for(strat.complex(), c));
        }
        if (entry.abs_chi != 0)
            d.verdict = Verdict::No;
        d.abs_chi.push_back(std::move(entry));
    }
    return d;
}

CipdDecision decide_cipd(const Stratification& strat, const Subcomplex& A)
{
    if (&A.parent() != &strat.complex())
        throw Error(ErrorKind::SchemaError, "fixed set belongs to a different complex");
    if (A.empty())
        throw Error(ErrorKind::EmptyFixedSet, "the prescribed fixed set must be nonempty");
    if (!A.is_invariant())
        throw Error(ErrorKind::NotInvariant, "the prescribed fixed set is not G-invariant");

    CipdDecision d;
    d.fixed_set = A;
    for (std::size_t t = 0; t < strat.orbit_types().size(); ++t) {
        int fixed_dim = strat.fixed(static_cast<int>(t)).dimension();
        if (fixed_dim < 2)
            d.warnings.push_back({static_cast<int>(t), strat.orbit_types()[t].representative, fixed_dim});
        for (const auto& c : strat.components(static_cast<int>(t))) {
            if (chi_c(strat.complex(), c) != 0 && !closure_meets(c, A))
                d.violations.push_back(witness_for(strat.complex(), c));
        }
    }
    d.verdict = d.violations.empty() ? Verdict::Yes : Verdict::No;
    return d;
}

}  // namespace equiflow
