#include "equiflow/matching.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "equiflow/error.hpp"
#include "equiflow/invariants.hpp"

namespace equiflow {

namespace {

bool is_facet(const GComplex& K, SimplexId lower, SimplexId upper)
{
    const auto& f = K.facets(upper);
    return std::binary_search(f.begin(), f.end(), lower);
}

}  // namespace

Matching::Matching(const GComplex& K) : complex_(&K), partner_(K.num_simplices(), -1) {}

Matching Matching::from_pairs(const GComplex& K, const std::vector<std::pair<SimplexId, SimplexId>>& pairs)
{
    Matching m(K);
    for (auto [lower, upper] : pairs) {
        if (lower < 0 || upper < 0 || lower >= static_cast<SimplexId>(K.num_simplices()) ||
            upper >= static_cast<SimplexId>(K.num_simplices()))
            throw Error(ErrorKind::SimplexNotInComplex, "pair (" + std::to_string(lower) + "," + std::to_string(upper) + ")");
        if (!is_facet(K, lower, upper))
            throw Error(ErrorKind::SchemaError, "pair (" + std::to_string(lower) + "," + std::to_string(upper) +
                                                    ") is not a facet/coface pair");
        if (!m.is_critical(lower) || !m.is_critical(upper))
            throw Error(ErrorKind::SchemaError, "simplex paired twice in (" + std::to_string(lower) + "," +
                                                    std::to_string(upper) + ")");
        m.pair(lower, upper);
    }
    return m;
}

std::vector<std::pair<SimplexId, SimplexId>> Matching::pairs() const
{
    std::vector<std::pair<SimplexId, SimplexId>> out;
    for (SimplexId id = 0; id < static_cast<SimplexId>(partner_.size()); ++id)
        if (partner(id) > id)
            out.emplace_back(id, partner(id));
    return out;
}

std::vector<SimplexId> Matching::critical() const
{
    std::vector<SimplexId> out;
    for (SimplexId id = 0; id < static_cast<SimplexId>(partner_.size()); ++id)
        if (is_critical(id))
            out.push_back(id);
    return out;
}

void Matching::pair(SimplexId lower, SimplexId upper)
{
    partner_[static_cast<std::size_t>(lower)] = upper;
    partner_[static_cast<std::size_t>(upper)] = lower;
}

void Matching::unpair(SimplexId id)
{
    SimplexId p = partner(id);
    partner_[static_cast<std::size_t>(id)] = -1;
    if (p >= 0)
        partner_[static_cast<std::size_t>(p)] = -1;
}

bool is_acyclic(const Matching& m)
{
    const GComplex& K = m.complex();
    const std::size_t n = K.num_simplices();
    std::vector<std::vector<SimplexId>> out(n);
    std::vector<int> indegree(n, 0);
    for (SimplexId t = 0; t < static_cast<SimplexId>(n); ++t)
        for (SimplexId s : K.facets(t)) {
            SimplexId from = t, to = s;
            if (m.partner(s) == t)
                std::swap(from, to);
            out[static_cast<std::size_t>(from)].push_back(to);
            ++indegree[static_cast<std::size_t>(to)];
        }
    std::vector<SimplexId> ready;
    for (SimplexId id = 0; id < static_cast<SimplexId>(n); ++id)
        if (indegree[static_cast<std::size_t>(id)] == 0)
            ready.push_back(id);
    std::size_t visited = 0;
    while (!ready.empty()) {
        SimplexId x = ready.back();
        ready.pop_back();
        ++visited;
        for (SimplexId y : out[static_cast<std::size_t>(x)])
            if (--indegree[static_cast<std::size_t>(y)] == 0)
                ready.push_back(y);
    }
    return visited == n;
}

MatchingCheck check_matching(const Stratification& strat, const Matching& m, bool with_betti)
{
    const GComplex& K = strat.complex();
    MatchingCheck check;
    auto note = [&check](bool& flag, std::string msg) {
        flag = false;
        if (check.violations.size() < 20)
            check.violations.push_back(std::move(msg));
    };

    for (SimplexId id = 0; id < static_cast<SimplexId>(K.num_simplices()); ++id) {
        SimplexId p = m.partner(id);
        if (p < 0)
            continue;
        if (m.partner(p) != id)
            note(check.single_pairing, "asymmetric pairing at simplex " + std::to_string(id));
        SimplexId lower = std::min(id, p), upper = std::max(id, p);
        if (!is_facet(K, lower, upper))
            note(check.single_pairing, "pair (" + std::to_string(lower) + "," + std::to_string(upper) + ") is not a facet pair");
        if (id != lower)
            continue;
        if (strat.isotropy_index(lower) != strat.isotropy_index(upper))
            note(check.stratum_preserving,
                 "pair (" + std::to_string(lower) + "," + std::to_string(upper) + ") crosses isotropy strata");
        for (Element g = 0; g < K.group().order(); ++g)
            if (m.partner(K.act(g, lower)) != K.act(g, upper))
                note(check.equivariant, "element " + std::to_string(g) + " does not preserve pair (" +
                                            std::to_string(lower) + "," + std::to_string(upper) + ")");
    }
    if (!is_acyclic(m))
        note(check.acyclic, "gradient digraph has a directed cycle");

    std::set<int> realized;
    for (SimplexId id = 0; id < static_cast<SimplexId>(K.num_simplices()); ++id)
        realized.insert(strat.isotropy_index(id));
    for (int idx : realized) {
        const Subgroup& H = strat.lattice().subgroups[static_cast<std::size_t>(idx)];
        const int type = strat.type_of(H);
        const bool representative = strat.orbit_types()[static_cast<std::size_t>(type)].representative == H;
        for (const auto& c : components(strat, H)) {
            ComponentCriticals row;
            row.orbit_type = type;
            row.component = c.id;
            row.chi_c = chi_c(K, c);
            std::set<SimplexId> orbit_reps;
            for (SimplexId s : c.open_simplices)
                if (m.is_critical(s)) {
                    ++row.critical_cells;
                    row.critical_alternating_sum += K.dim(s) % 2 == 0 ? 1 : -1;
                    orbit_reps.insert(K.orbit(s).front());
                }
            row.critical_orbits = orbit_reps.size();
            if (row.critical_alternating_sum != row.chi_c)
                note(check.euler_identity, "component " + std::to_string(c.id) + " of isotropy " +
                                               subgroup_label(K.group(), H) + ": critical sum " +
                                               std::to_string(row.critical_alternating_sum) + " != chi_c " +
                                               std::to_string(row.chi_c));
            row.closed = c.closure.size() == c.open_simplices.size();
            if (row.closed && with_betti)
                for (long long b : betti(c.closure))
                    row.betti_sum += b;
            if (representative)
                check.components.push_back(row);
        }
    }
    return check;
}

Matching build_matching(const Stratification& strat)
{
    const GComplex& K = strat.complex();
    const std::size_t n = K.num_simplices();
    Matching m(K);
    std::vector<char> present(n, 0);

    auto faces_present = [&](SimplexId id, SimplexId except) {
        for (SimplexId f : K.facets(id))
            if (f != except && !present[static_cast<std::size_t>(f)])
                return false;
        return true;
    };
    auto add_orbit = [&](SimplexId lower, SimplexId upper) {
        for (Element g = 0; g < K.group().order(); ++g) {
            SimplexId gl = K.act(g, lower);
            present[static_cast<std::size_t>(gl)] = 1;
            if (upper >= 0) {
                SimplexId gu = K.act(g, upper);
                present[static_cast<std::size_t>(gu)] = 1;
                m.pair(gl, gu);
            }
        }
    };

    for (std::size_t t = 0; t < strat.orbit_types().size(); ++t) {
        std::vector<SimplexId> cells;
        for (SimplexId id = 0; id < static_cast<SimplexId>(n); ++id)
            if (strat.orbit_type_of(id) == static_cast<int>(t))
                cells.push_back(id);
        std::size_t remaining = cells.size();
        auto count_remaining = [&] {
            remaining = static_cast<std::size_t>(
                std::count_if(cells.begin(), cells.end(), [&](SimplexId id) { return !present[static_cast<std::size_t>(id)]; }));
        };

        while (remaining > 0) {
            bool progress = false;
            for (SimplexId s : cells) {
                if (present[static_cast<std::size_t>(s)] || !faces_present(s, -1))
                    continue;
                for (SimplexId c : K.cofacets(s)) {
                    if (present[static_cast<std::size_t>(c)] || strat.isotropy_index(c) != strat.isotropy_index(s) ||
                        !faces_present(c, s))
                        continue;
                    add_orbit(s, c);
                    progress = true;
                    break;
                }
            }
            if (!progress) {
                for (SimplexId s : cells)
                    if (!present[static_cast<std::size_t>(s)] && faces_present(s, -1)) {
                        add_orbit(s, -1);
                        break;
                    }
            }
            count_remaining();
        }
    }
    return m;
}

namespace {

using PathCounts = std::map<SimplexId, int>;

/// Counts (capped at 2) of gradient paths from upper cell `u` to each critical
/// facet-dimension cell, staying inside u's stratum.
class GradientPaths {
public:
    GradientPaths(const Stratification& strat, const Matching& m) : strat_(strat), m_(m) {}

    const PathCounts& from(SimplexId u)
    {
        if (auto it = memo_.find(u); it != memo_.end())
            return it->second;
        PathCounts counts;
        for (SimplexId f : next_facets(u)) {
            if (m_.is_critical(f)) {
                bump(counts, f, 1);
            } else {
                SimplexId up = m_.partner(f);
                for (const auto& [target, k] : from(up))
                    bump(counts, target, k);
            }
        }
        return memo_.emplace(u, std::move(counts)).first->second;
    }

    /// The unique path u = t0 > s1 < t1 > ... > target, as the cell sequence.
    std::vector<SimplexId> path(SimplexId u, SimplexId target)
    {
        std::vector<SimplexId> cells{u};
        while (true) {
            SimplexId step = -1;
            for (SimplexId f : next_facets(u)) {
                if (f == target) {
                    step = f;
                    break;
                }
                if (!m_.is_critical(f)) {
                    const auto& counts = from(m_.partner(f));
                    if (auto it = counts.find(target); it != counts.end() && it->second > 0) {
                        step = f;
                        break;
                    }
                }
            }
            cells.push_back(step);
            if (step == target)
                return cells;
            u = m_.partner(step);
            cells.push_back(u);
        }
    }

private:
    static void bump(PathCounts& c, SimplexId id, int k) { c[id] = std::min(2, c[id] + k); }

    /// Facets continuing a gradient path out of u: not u's own partner, same
    /// isotropy, and either critical or matched upward to another cell.
    std::vector<SimplexId> next_facets(SimplexId u) const
    {
        std::vector<SimplexId> out;
        for (SimplexId f : m_.complex().facets(u)) {
            if (m_.partner(u) == f || strat_.isotropy_index(f) != strat_.isotropy_index(u))
                continue;
            if (m_.is_critical(f) || m_.partner(f) > f)
                out.push_back(f);
        }
        return out;
    }

    const Stratification& strat_;
    const Matching& m_;
    std::map<SimplexId, PathCounts> memo_;
};

void reverse_path(Matching& m, const std::vector<SimplexId>& cells)
{
    // cells = t0, s1, t1, s2, ..., tk, s; new pairs (s_{i+1}, t_i).
    for (std::size_t i = 1; i + 1 < cells.size(); i += 2)
        m.unpair(cells[i]);
    for (std::size_t i = 0; i + 1 < cells.size(); i += 2)
        m.pair(cells[i + 1], cells[i]);
}

bool cancel_orbit(const Stratification& strat, Matching& m, SimplexId tau, const std::vector<SimplexId>& base_path)
{
    const GComplex& K = strat.complex();
    std::map<SimplexId, std::vector<SimplexId>> translates;  // g.tau -> g.path
    for (Element g = 0; g < K.group().order(); ++g) {
        SimplexId gt = K.act(g, tau);
        if (translates.count(gt))
            continue;
        std::vector<SimplexId> p;
        for (SimplexId c : base_path)
            p.push_back(K.act(g, c));
        translates.emplace(gt, std::move(p));
    }
    std::set<SimplexId> used;
    for (const auto& [gt, p] : translates)
        for (SimplexId c : p)
            if (!used.insert(c).second)
                return false;

    Matching snapshot = m;
    for (const auto& [gt, p] : translates) {
        GradientPaths paths(strat, m);
        const auto& counts = paths.from(gt);
        auto it = counts.find(p.back());
        if (it == counts.end() || it->second != 1 || paths.path(gt, p.back()) != p) {
            m = snapshot;
            return false;
        }
        reverse_path(m, p);
    }
    return true;
}

}  // namespace

Matching cancel(const Stratification& strat, const Matching& input)
{
    const GComplex& K = strat.complex();
    Matching m = input;
    if (!is_acyclic(m))
        return m;
    std::set<std::pair<SimplexId, SimplexId>> failed;
    bool changed = true;
    while (changed) {
        changed = false;
        for (SimplexId tau : m.critical()) {
            if (K.dim(tau) == 0)
                continue;
            GradientPaths paths(strat, m);
            PathCounts counts = paths.from(tau);
            for (const auto& [sigma, k] : counts) {
                if (k != 1 || failed.count({tau, sigma}))
                    continue;
                auto base = paths.path(tau, sigma);
                if (cancel_orbit(strat, m, tau, base)) {
                    changed = true;
                    break;
                }
                failed.insert({tau, sigma});
            }
            if (changed)
                break;
        }
    }
    return m;
}

}  // namespace equiflow
