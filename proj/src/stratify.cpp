#include "equiflow/stratify.hpp"

#include <algorithm>
#include <deque>

#include "equiflow/error.hpp"

namespace equiflow {

namespace {

void require_regular(const GComplex& K)
{
    if (!K.regular())
        throw Error(ErrorKind::IrregularAction, "fixed sets are only subcomplexes for regular actions; subdivide first");
}

std::vector<Component> components_of(const GComplex& K, const std::vector<SimplexId>& stratum, const Subgroup& H,
                                     int orbit_type)
{
    std::vector<char> in(K.num_simplices(), 0), seen(K.num_simplices(), 0);
    for (SimplexId id : stratum)
        in[static_cast<std::size_t>(id)] = 1;

    std::vector<Component> out;
    for (SimplexId start : stratum) {  // stratum is sorted, so ids come out ordered by least simplex
        if (seen[static_cast<std::size_t>(start)])
            continue;
        Component c;
        c.id = static_cast<int>(out.size());
        c.orbit_type = orbit_type;
        c.isotropy = H;
        std::deque<SimplexId> queue{start};
        seen[static_cast<std::size_t>(start)] = 1;
        while (!queue.empty()) {
            SimplexId s = queue.front();
            queue.pop_front();
            c.open_simplices.push_back(s);
            auto visit = [&](SimplexId t) {
                if (in[static_cast<std::size_t>(t)] && !seen[static_cast<std::size_t>(t)]) {
                    seen[static_cast<std::size_t>(t)] = 1;
                    queue.push_back(t);
                }
            };
            for (SimplexId t : K.facets(s))
                visit(t);
            for (SimplexId t : K.cofacets(s))
                visit(t);
        }
        std::sort(c.open_simplices.begin(), c.open_simplices.end());
        for (SimplexId s : c.open_simplices) {
            c.chi_c += K.dim(s) % 2 == 0 ? 1 : -1;
            c.dim = std::max(c.dim, K.dim(s));
        }
        c.closure = Subcomplex::closure_of(K, c.open_simplices);
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace

const Subgroup& Stratification::isotropy(SimplexId id) const
{
    return lattice_.subgroups[static_cast<std::size_t>(isotropy_index(id))];
}

int Stratification::orbit_type_of(SimplexId id) const
{
    return class_to_type_[static_cast<std::size_t>(lattice_.class_of[static_cast<std::size_t>(isotropy_index(id))])];
}

int Stratification::type_of_representative(const Subgroup& H) const
{
    for (std::size_t t = 0; t < orbit_types_.size(); ++t)
        if (orbit_types_[t].representative == H)
            return static_cast<int>(t);
    return -1;
}

int Stratification::type_of(const Subgroup& H) const
{
    int idx = lattice_.index_of(H);
    if (idx < 0)
        return -1;
    return class_to_type_[static_cast<std::size_t>(lattice_.class_of[static_cast<std::size_t>(idx)])];
}

std::vector<SimplexId> Stratification::exact_stratum(const Subgroup& H) const
{
    std::vector<SimplexId> out;
    int idx = lattice_.index_of(H);
    for (SimplexId id = 0; id < static_cast<SimplexId>(isotropy_.size()); ++id)
        if (isotropy_[static_cast<std::size_t>(id)] == idx)
            out.push_back(id);
    return out;
}

Subcomplex fixed_subcomplex(const GComplex& K, const Subgroup& H)
{
    require_regular(K);
    std::vector<SimplexId> ids;
    for (SimplexId id = 0; id < static_cast<SimplexId>(K.num_simplices()); ++id) {
        const Simplex& s = K.simplex(id);
        bool fixed = true;
        for (Element h : H.elements) {
            const auto& perm = K.vertex_perm(h);
            for (Vertex v : s)
                fixed = fixed && perm[static_cast<std::size_t>(v)] == v;
            if (!fixed)
                break;
        }
        if (fixed)
            ids.push_back(id);
    }
    return Subcomplex::from_ids(K, ids);
}

Stratification strata(const GComplex& K, int max_group_order)
{
    require_regular(K);
    Stratification S;
    S.complex_ = &K;
    S.lattice_ = subgroup_lattice(K.group(), max_group_order);

    S.isotropy_.resize(K.num_simplices());
    std::vector<char> class_realized(S.lattice_.classes.size(), 0);
    for (SimplexId id = 0; id < static_cast<SimplexId>(K.num_simplices()); ++id) {
        int idx = S.lattice_.index_of(K.pointwise_stabilizer(id));
        S.isotropy_[static_cast<std::size_t>(id)] = idx;
        class_realized[static_cast<std::size_t>(S.lattice_.class_of[static_cast<std::size_t>(idx)])] = 1;
    }

    S.class_to_type_.assign(S.lattice_.classes.size(), -1);
    for (const auto& cls : S.lattice_.classes) {
        if (!class_realized[static_cast<std::size_t>(cls.id)])
            continue;
        S.class_to_type_[static_cast<std::size_t>(cls.id)] = static_cast<int>(S.orbit_types_.size());
        S.orbit_types_.push_back(cls);
    }

    for (std::size_t t = 0; t < S.orbit_types_.size(); ++t) {
        const Subgroup& H = S.orbit_types_[t].representative;
        S.fixed_.push_back(fixed_subcomplex(K, H));
        S.strata_.push_back(S.exact_stratum(H));
        S.components_.push_back(components_of(K, S.strata_.back(), H, static_cast<int>(t)));
    }

    for (std::size_t i = 0; i < S.orbit_types_.size(); ++i) {
        std::vector<SimplexId> ids;
        for (SimplexId id = 0; id < static_cast<SimplexId>(K.num_simplices()); ++id)
            if (S.orbit_type_of(id) <= static_cast<int>(i))
                ids.push_back(id);
        S.filtration_.push_back(Subcomplex::from_ids(K, ids));
    }
    return S;
}

std::vector<Component> components(const Stratification& strat, const Subgroup& H)
{
    auto stratum = strat.exact_stratum(H);
    if (stratum.empty())
        throw Error(ErrorKind::UnknownIsotropy, "no simplex has isotropy exactly " +
                                                    subgroup_label(strat.complex().group(), H));
    return components_of(strat.complex(), stratum, H, strat.type_of(H));
}

bool closure_meets(const Component& c, const Subcomplex& A)
{
    if (!A.is_invariant())
        throw Error(ErrorKind::NotInvariant, "subcomplex is not invariant under the group action");
    return c.closure.intersects(A);
}

}  // namespace equiflow
