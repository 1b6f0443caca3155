#include "equiflow/invariants.hpp"

#include <cstdlib>
#include <set>

#include "equiflow/error.hpp"

namespace equiflow {

long long chi_subcomplex(const Subcomplex& L)
{
    long long chi = 0;
    auto counts = L.count_by_dim();
    for (std::size_t d = 0; d < counts.size(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(counts[d]);
    return chi;
}

long long chi_c(const GComplex& K, const Component& c)
{
    long long chi = 0;
    for (SimplexId s : c.open_simplices)
        chi += K.dim(s) % 2 == 0 ? 1 : -1;
    return chi;
}

long long abs_chi(const Stratification& strat, const Subgroup& H)
{
    long long total = 0;
    for (const auto& c : components(strat, H))
        total += std::llabs(chi_c(strat.complex(), c));
    return total;
}

ChainBasis::ChainBasis(const Subcomplex& L) : complex(&L.parent()), local(L.parent().num_simplices(), -1)
{
    for (SimplexId id : L.ids()) {
        auto d = static_cast<std::size_t>(complex->dim(id));
        if (cells.size() <= d)
            cells.resize(d + 1);
        local[static_cast<std::size_t>(id)] = static_cast<int>(cells[d].size());
        cells[d].push_back(id);
    }
}

std::vector<linalg::Column> ChainBasis::boundary(int d) const
{
    std::vector<linalg::Column> cols;
    if (d <= 0 || d >= static_cast<int>(cells.size()))
        return cols;
    for (SimplexId id : cells[static_cast<std::size_t>(d)]) {
        const Simplex& s = complex->simplex(id);
        linalg::Column col;
        for (std::size_t skip = 0; skip < s.size(); ++skip) {
            Simplex f;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != skip)
                    f.push_back(s[i]);
            col.emplace(local[static_cast<std::size_t>(complex->id_of(f))], skip % 2 == 0 ? 1 : -1);
        }
        cols.push_back(std::move(col));
    }
    return cols;
}

std::vector<long long> betti(const Subcomplex& L)
{
    ChainBasis basis(L);
    const int top = static_cast<int>(basis.cells.size()) - 1;
    std::vector<long long> ranks(basis.cells.size() + 1, 0);  // ranks[d] = rank of boundary C_d -> C_{d-1}
    for (int d = 1; d <= top; ++d)
        ranks[static_cast<std::size_t>(d)] = linalg::ReducedMatrix(basis.boundary(d), false).rank();
    std::vector<long long> b;
    for (int d = 0; d <= top; ++d)
        b.push_back(static_cast<long long>(basis.cells[static_cast<std::size_t>(d)].size()) -
                    ranks[static_cast<std::size_t>(d)] - ranks[static_cast<std::size_t>(d + 1)]);
    return b;
}

EulerReport euler_report(const Stratification& strat, bool with_betti)
{
    const GComplex& K = strat.complex();
    EulerReport report;
    report.chi_total = K.euler_characteristic();
    std::set<int> realized;
    for (SimplexId id = 0; id < static_cast<SimplexId>(K.num_simplices()); ++id)
        realized.insert(strat.isotropy_index(id));
    for (std::size_t t = 0; t < strat.orbit_types().size(); ++t) {
        OrbitTypeEuler entry;
        entry.orbit_type = static_cast<int>(t);
        entry.representative = strat.orbit_types()[t].representative;
        const Subcomplex& fixed = strat.fixed(static_cast<int>(t));
        entry.chi_fixed = chi_subcomplex(fixed);
        entry.fixed_dim = fixed.dimension();
        for (const auto& c : strat.components(static_cast<int>(t))) {
            ComponentEuler ce;
            ce.id = c.id;
            ce.chi_c = chi_c(K, c);
            ce.dim = c.dim;
            ce.open_simplices = c.open_simplices.size();
            ce.closed = c.closure.size() == c.open_simplices.size();
            if (with_betti)
                ce.closure_betti = betti(c.closure);
            entry.abs_chi += std::llabs(ce.chi_c);
            entry.components.push_back(std::move(ce));
        }
        // M^H is the disjoint union of the open strata M_K over realized K containing H.
        for (int idx : realized) {
            const Subgroup& sub = strat.lattice().subgroups[static_cast<std::size_t>(idx)];
            if (!entry.representative.is_subset_of(sub))
                continue;
            for (const auto& c : components(strat, sub))
                entry.strata_sum += chi_c(K, c);
        }
        report.types.push_back(std::move(entry));
    }
    return report;
}

}  // namespace equiflow
