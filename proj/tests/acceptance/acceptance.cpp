// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "equiflow/catalog.hpp"
#include "equiflow/decision.hpp"
#include "equiflow/displacement.hpp"
#include "equiflow/invariants.hpp"
#include "equiflow/matching.hpp"
#include "equiflow/stratify.hpp"
#include "oracle/brute_force.hpp"

using namespace equiflow;

namespace {

// Fixed seed: the random samples are part of the criterion definition.
constexpr unsigned kSeed = 20240917;
// Per-criterion wall-clock budget in seconds.
constexpr double kBudgetSeconds = 10.0;

struct Outcome {
    bool ok = true;
    std::ostringstream detail;
    void fail(const std::string& why)
    {
        if (ok)
            detail << why << "; ";
        ok = false;
    }
};

const std::set<std::string> kYes{"circle3", "circle3-rot", "circle4-anti", "torus7", "torus7-rot"};

// Witness chi_c values, sorted, for the NO entries.
const std::map<std::string, std::multiset<long long>> kWitnesses{
    {"circle6-refl", {1, 1, -1, -1}},
    {"sphere-oct", {2}},
    {"sphere-oct-anti", {2}},
    {"sphere-oct-refl", {1, 1}},
    {"two-spheres", {2, 2}},
};

Subcomplex random_subcomplex(const GComplex& K, std::mt19937& rng, bool invariant)
{
    std::uniform_int_distribution<int> pick(0, static_cast<int>(K.num_simplices()) - 1);
    int n = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<SimplexId> seeds;
    for (int i = 0; i < n; ++i) {
        SimplexId s = pick(rng);
        if (invariant)
            for (SimplexId t : K.orbit(s))
                seeds.push_back(t);
        else
            seeds.push_back(s);
    }
    return Subcomplex::closure_of(K, seeds);
}

std::set<oracle::Simplex> as_set(const Subcomplex& A)
{
    std::set<oracle::Simplex> out;
    for (SimplexId id : A.ids())
        out.insert(A.parent().simplex(id));
    return out;
}

void criterion1(Outcome& out)
{
    for (const auto& name : catalog_names()) {
        GComplex K = catalog(name);
        auto d = decide_path_field(strata(K));
        bool yes = d.verdict == Verdict::Yes;
        if (yes != (kYes.count(name) > 0)) {
            out.fail(name + " verdict " + to_string(d.verdict));
            continue;
        }
        std::multiset<long long> got;
        for (const auto& w : d.witnesses)
            got.insert(w.chi_c);
        std::multiset<long long> want;
        if (auto it = kWitnesses.find(name); it != kWitnesses.end())
            want = it->second;
        if (got != want)
            out.fail(name + " witness chi_c values differ");
    }
    out.detail << "10 catalog verdicts and witness chi_c values";
}

void criterion2(Outcome& out)
{
    int checks = 0;
    for (const auto& name : catalog_names()) {
        GComplex K = catalog(name);
        Stratification strat = strata(K);
        std::set<Subgroup> realized;
        for (std::size_t s = 0; s < K.num_simplices(); ++s)
            realized.insert(strat.isotropy(static_cast<SimplexId>(s)));
        for (const auto& H : realized) {
            long long sum = 0;
            for (const auto& L : realized)
                if (H.is_subset_of(L))
                    for (const auto& c : components(strat, L))
                        sum += chi_c(K, c);
            long long chi = chi_subcomplex(fixed_subcomplex(K, H));
            ++checks;
            if (sum != chi)
                out.fail(name + ": chi(M^H) " + std::to_string(chi) + " vs strata sum " + std::to_string(sum));
        }
        for (const auto& e : euler_report(strat, false).types)
            if (!e.additive())
                out.fail(name + ": euler report not additive");
    }
    out.detail << checks << " (entry, H) pairs";
}

long long alternating(const std::vector<long long>& b)
{
    long long s = 0;
    for (std::size_t i = 0; i < b.size(); ++i)
        s += i % 2 == 0 ? b[i] : -b[i];
    return s;
}

void criterion3(Outcome& out)
{
    std::mt19937 rng(kSeed);
    int checks = 0;
    std::vector<GComplex> entries;
    for (const auto& name : catalog_names())
        entries.push_back(catalog(name));
    auto check = [&](const Subcomplex& L, const std::string& what) {
        ++checks;
        if (chi_subcomplex(L) != alternating(betti(L)))
            out.fail(what + ": chi != alternating Betti sum");
    };
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const GComplex& K = entries[i];
        Stratification strat = strata(K);
        check(Subcomplex::whole(K), catalog_names()[i]);
        for (std::size_t t = 0; t < strat.orbit_types().size(); ++t) {
            check(strat.fixed(static_cast<int>(t)), catalog_names()[i] + " fixed set");
            check(strat.filtration(static_cast<int>(t)), catalog_names()[i] + " filtration");
            for (const auto& c : strat.components(static_cast<int>(t)))
                check(c.closure, catalog_names()[i] + " component closure");
        }
    }
    for (int k = 0; k < 100; ++k) {
        std::size_t e = std::uniform_int_distribution<std::size_t>(0, entries.size() - 1)(rng);
        check(random_subcomplex(entries[e], rng, false), "random subcomplex of " + catalog_names()[e]);
    }
    out.detail << checks << " subcomplexes (100 random)";
}

void criterion4(Outcome& out)
{
    int comps = 0;
    for (const auto& name : catalog_names()) {
        GComplex K = catalog(name);
        Stratification strat = strata(K);
        Matching base = build_matching(strat);
        for (const Matching& m : {base, cancel(strat, base)}) {
            auto check = check_matching(strat, m, false);
            if (!check.ok())
                out.fail(name + ": matching invariants fail");
            for (std::size_t t = 0; t < strat.orbit_types().size(); ++t)
                for (const auto& c : strat.components(static_cast<int>(t))) {
                    long long sum = 0;
                    for (SimplexId s : c.open_simplices)
                        if (m.is_critical(s))
                            sum += K.dim(s) % 2 == 0 ? 1 : -1;
                    ++comps;
                    if (sum != c.chi_c)
                        out.fail(name + ": critical alternating sum != chi_c");
                }
        }
    }
    out.detail << comps << " component checks (with and without cancel)";
}

void criterion5(Outcome& out)
{
    long long checked = 0;
    for (const auto& name : catalog_names()) {
        GComplex K = catalog(name);
        const FiniteGroup& G = K.group();
        if (G.order() == 1)
            continue;
        GComplex sd = barycentric_subdivision(K);
        Stratification strat = strata(K);
        Matching m = cancel(strat, build_matching(strat));
        DisplacementMap F = build_displacement(K);
        for (Element g = 0; g < G.order(); ++g) {
            for (SimplexId s = 0; s < static_cast<SimplexId>(K.num_simplices()); ++s) {
                ++checked;
                if (sd.vertex_perm(g)[static_cast<std::size_t>(s)] != K.act(g, s))
                    out.fail(name + ": subdivision vertex action differs");
                if (strat.isotropy(K.act(g, s)) != conjugate(G, g, strat.isotropy(s)))
                    out.fail(name + ": isotropy not conjugated");
                SimplexId p = m.partner(s);
                if ((p < 0 ? -1 : K.act(g, p)) != m.partner(K.act(g, s)))
                    out.fail(name + ": matching not orbit-closed");
                if (F(K.act(g, s)) != K.act(g, F(s)))
                    out.fail(name + ": displacement not equivariant");
            }
            for (SimplexId c = 0; c < static_cast<SimplexId>(sd.num_simplices()); ++c) {
                Simplex image;
                for (Vertex v : sd.simplex(c))
                    image.push_back(K.act(g, v));
                std::sort(image.begin(), image.end());
                if (sd.find(image) != sd.act(g, c))
                    out.fail(name + ": subdivision does not commute with the action");
            }
            for (std::size_t t = 0; t < strat.orbit_types().size(); ++t)
                for (const auto& c : strat.components(static_cast<int>(t))) {
                    std::vector<SimplexId> moved;
                    for (SimplexId s : c.open_simplices)
                        moved.push_back(K.act(g, s));
                    std::sort(moved.begin(), moved.end());
                    bool found = false;
                    for (const auto& d : components(strat, conjugate(G, g, c.isotropy)))
                        found = found || d.open_simplices == moved;
                    if (!found)
                        out.fail(name + ": translated component is not a component");
                }
        }
    }
    out.detail << checked << " (g, simplex) checks";
}

void criterion6(Outcome& out)
{
    for (const std::string name : {"circle3", "circle3-rot", "circle4-anti", "torus7"}) {
        GComplex K = catalog(name);
        auto cert = verify_displacement(K, build_displacement(K));
        if (!cert.fixed_point_free())
            out.fail(name + ": " + std::to_string(cert.singular.size()) + " singular, " +
                     std::to_string(cert.flagged_chains) + " flagged chains");
    }
    out.detail << "4 entries certified with zero singular simplices and zero flagged chains";
}

void criterion7(Outcome& out)
{
    std::mt19937 rng(kSeed + 7);
    int tested = 0;
    for (const auto& name : kYes) {
        GComplex K = catalog(name);
        Stratification strat = strata(K);
        auto o = oracle::analyze(K);
        for (int k = 0; k < 50; ++k) {
            Subcomplex A = random_subcomplex(K, rng, true);
            auto d = decide_cipd(strat, A);
            ++tested;
            if (d.verdict != Verdict::Yes || !oracle::cipd_yes(o, as_set(A)))
                out.fail(name + ": CIPD NO for an invariant A");
        }
    }
    GComplex two = catalog("two-spheres");
    Stratification strat = strata(two);
    SimplexId v0 = 0;
    auto d = decide_cipd(strat, Subcomplex::closure_of(two, std::span<const SimplexId>(&v0, 1)));
    if (d.verdict != Verdict::No || d.violations.size() != 1)
        out.fail("two-spheres with one vertex: expected NO with exactly one violation");
    out.detail << tested << " random invariant A on YES entries; two-spheres NO with "
               << d.violations.size() << " violation";
}

struct Signature {
    bool yes;
    std::vector<long long> abs_chi;
    bool operator==(const Signature&) const = default;
};

Signature signature(const GComplex& K)
{
    auto d = decide_path_field(strata(K));
    Signature s{d.verdict == Verdict::Yes, {}};
    for (const auto& a : d.abs_chi)
        s.abs_chi.push_back(a.abs_chi);
    return s;
}

void criterion8(Outcome& out)
{
    for (const auto& name : catalog_names()) {
        GComplex K = catalog(name);
        GComplex sd1 = barycentric_subdivision(K);
        GComplex sd2 = barycentric_subdivision(sd1);
        Signature base = signature(K);
        if (!(signature(sd1) == base) || !(signature(sd2) == base))
            out.fail(name + ": verdict or abs_chi changed under subdivision");
    }
    out.detail << "10 entries, 1 and 2 subdivisions";
}

bool agrees(const GComplex& input, std::string& why)
{
    auto oin = oracle::analyze(input);
    if (oin.regular != input.regular()) {
        why = "regularity flag";
        return false;
    }
    GComplex K = ensure_regular(input);
    auto o = oracle::analyze(K);
    Stratification strat = strata(K);
    if (static_cast<int>(strat.orbit_types().size()) != o.orbit_types) {
        why = "orbit type count";
        return false;
    }
    for (SimplexId s = 0; s < static_cast<SimplexId>(K.num_simplices()); ++s)
        if (strat.isotropy(s).elements != o.stabilizer.at(K.simplex(s))) {
            why = "isotropy of a simplex";
            return false;
        }
    for (const auto& H : o.realized) {
        Subgroup sub{H};
        auto comps = components(strat, sub);
        const auto& want = o.components.at(H);
        if (comps.size() != want.size()) {
            why = "component count";
            return false;
        }
        for (std::size_t i = 0; i < comps.size(); ++i) {
            std::set<oracle::Simplex> open;
            for (SimplexId s : comps[i].open_simplices)
                open.insert(K.simplex(s));
            if (open != want[i].open || chi_c(K, comps[i]) != want[i].chi_c) {
                why = "component contents or chi_c";
                return false;
            }
        }
        if (abs_chi(strat, sub) != o.abs_chi.at(H) ||
            chi_subcomplex(fixed_subcomplex(K, sub)) != o.chi_fixed.at(H)) {
            why = "abs_chi or chi(M^H)";
            return false;
        }
    }
    if ((decide_path_field(strat).verdict == Verdict::Yes) != o.path_field_yes) {
        why = "path field verdict";
        return false;
    }
    return true;
}

void criterion9(Outcome& out)
{
    int n = 0;
    for (const auto& name : catalog_names()) {
        std::string why;
        ++n;
        if (!agrees(catalog(name), why))
            out.fail(name + ": " + why);
    }
    std::mt19937 rng(kSeed + 9);
    std::size_t largest = 0;
    int nontrivial = 0;
    for (int k = 0; k < 25; ++k) {
        GComplex K = oracle::random_gcomplex(rng, 200);
        largest = std::max(largest, K.num_simplices());
        nontrivial += K.group().order() > 1;
        std::string why;
        ++n;
        if (!agrees(K, why))
            out.fail("random complex " + std::to_string(k) + ": " + why);
    }
    if (largest > 200)
        out.fail("generator exceeded 200 simplices");
    out.detail << n << " complexes (25 random, " << nontrivial << " with nontrivial group, largest " << largest
               << " simplices)";
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"decision correctness on the catalog", criterion1},
        {"|chi| additivity", criterion2},
        {"Euler-Poincare", criterion3},
        {"matching Euler identity", criterion4},
        {"equivariance suite", criterion5},
        {"displacement witnesses", criterion6},
        {"CIPD cross-implication", criterion7},
        {"subdivision invariance", criterion8},
        {"oracle equivalence", criterion9},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome out;
        auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(out);
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > kBudgetSeconds)
            out.fail("exceeded the time budget");
        failures += !out.ok;
        std::printf("%s criterion %zu: %s [%.2fs] %s\n", out.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    secs, out.detail.str().c_str());
    }
    return failures == 0 ? 0 : 1;
}
