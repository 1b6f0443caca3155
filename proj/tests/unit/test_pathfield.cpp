#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equiflow/catalog.hpp"
#include "equiflow/decision.hpp"
#include "equiflow/displacement.hpp"
#include "equiflow/error.hpp"
#include "equiflow/matching.hpp"

using namespace equiflow;

namespace {

Subcomplex closure(const GComplex& K, std::vector<SimplexId> ids)
{
    return Subcomplex::closure_of(K, ids);
}

std::size_t critical_in_dim(const Matching& m, int d)
{
    std::size_t n = 0;
    for (SimplexId s : m.critical())
        n += m.complex().dim(s) == d;
    return n;
}

}  // namespace

TEST_CASE("path field decisions")
{
    GComplex rot = catalog("circle3-rot");
    CHECK(decide_path_field(strata(rot)).verdict == Verdict::Yes);

    GComplex oct = catalog("sphere-oct");
    auto d = decide_path_field(strata(oct));
    CHECK(d.verdict == Verdict::No);
    REQUIRE(d.witnesses.size() == 1);
    CHECK(d.witnesses[0].chi_c == 2);

    GComplex hex = catalog("circle6-refl");
    auto h = decide_path_field(strata(hex));
    CHECK(h.verdict == Verdict::No);
    REQUIRE(h.witnesses.size() == 4);
    CHECK(h.witnesses[0].chi_c == 1);
    CHECK(h.witnesses[1].chi_c == 1);
    CHECK(h.witnesses[2].chi_c == -1);
    CHECK(h.witnesses[3].chi_c == -1);
}

TEST_CASE("cipd decisions")
{
    GComplex oct = catalog("sphere-oct");
    Stratification so = strata(oct);
    for (SimplexId v = 0; v < 6; ++v)
        CHECK(decide_cipd(so, closure(oct, {v})).verdict == Verdict::Yes);

    GComplex two = catalog("two-spheres");
    Stratification st = strata(two);
    auto d = decide_cipd(st, closure(two, {0}));
    CHECK(d.verdict == Verdict::No);
    REQUIRE(d.violations.size() == 1);
    CHECK(d.violations[0].chi_c == 2);
    CHECK(d.violations[0].least_simplex == 6);

    GComplex refl = catalog("sphere-oct-refl");
    Stratification sr = strata(refl);
    auto r = decide_cipd(sr, sr.fixed(0));
    CHECK(r.verdict == Verdict::Yes);
    CHECK(r.violations.empty());
    REQUIRE(r.warnings.size() == 1);
    CHECK(r.warnings[0].fixed_dim == 1);
}

TEST_CASE("cipd input errors")
{
    GComplex hex = catalog("circle6-refl");
    Stratification s = strata(hex);
    auto kind = [&](const Subcomplex& A) {
        try {
            decide_cipd(s, A);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::ParseError;
    };
    CHECK(kind(Subcomplex(hex)) == ErrorKind::EmptyFixedSet);
    CHECK(kind(closure(hex, {1})) == ErrorKind::NotInvariant);
    GComplex other = catalog("circle6-refl");
    CHECK(kind(Subcomplex::whole(other)) == ErrorKind::SchemaError);
}

TEST_CASE("matching on a point and on circles")
{
    GComplex point = build_trivial_complex(1, {{0}});
    Stratification sp = strata(point);
    Matching mp = build_matching(sp);
    CHECK(mp.pairs().empty());
    CHECK(mp.critical().size() == 1);
    CHECK(check_matching(sp, mp).ok());

    GComplex c3 = catalog("circle3");
    Stratification s3 = strata(c3);
    Matching m3 = build_matching(s3);
    CHECK(check_matching(s3, m3).ok());
    CHECK(critical_in_dim(m3, 0) == 1);
    CHECK(critical_in_dim(m3, 1) == 1);
}

TEST_CASE("free matchings are orbit-closed")
{
    GComplex K = catalog("circle4-anti");
    Stratification s = strata(K);
    Matching m = build_matching(s);
    auto check = check_matching(s, m);
    CHECK(check.ok());
    for (SimplexId x : m.critical())
        for (Element g = 0; g < K.group().order(); ++g)
            CHECK(m.is_critical(K.act(g, x)));
    REQUIRE(check.components.size() == 1);
    CHECK(check.components[0].critical_alternating_sum == 0);
    CHECK(check.components[0].critical_cells % 2 == 0);
}

TEST_CASE("cancel reduces a wasteful matching")
{
    GComplex K = catalog("circle3");
    Stratification s = strata(K);
    // Pair vertex 0 with edge {0,1}; vertices 1, 2 and edges {0,2}, {1,2} stay critical.
    Matching wasteful = Matching::from_pairs(K, {{K.id_of({0}), K.id_of({0, 1})}});
    REQUIRE(check_matching(s, wasteful).ok());
    CHECK(wasteful.critical().size() == 4);
    Matching reduced = cancel(s, wasteful);
    CHECK(reduced.critical().size() == 2);
    CHECK(check_matching(s, reduced).ok());

    Matching minimal = build_matching(s);
    CHECK(cancel(s, minimal) == minimal);
}

TEST_CASE("torus matching reaches the Betti bound")
{
    GComplex K = catalog("torus7");
    Stratification s = strata(K);
    Matching m = cancel(s, build_matching(s));
    auto check = check_matching(s, m);
    CHECK(check.ok());
    REQUIRE(check.components.size() == 1);
    CHECK(check.components[0].closed);
    CHECK(check.components[0].betti_sum == 4);
    CHECK(check.components[0].critical_cells >= 4);
    CHECK(m.critical().size() == 4);
}

TEST_CASE("matching invariant violations are reported")
{
    GComplex K = catalog("circle4-anti");
    Stratification s = strata(K);
    // Pairs one vertex with an edge but not its translate.
    Matching m = Matching::from_pairs(K, {{K.id_of({0}), K.id_of({0, 1})}});
    auto check = check_matching(s, m);
    CHECK_FALSE(check.equivariant);
    CHECK_FALSE(check.violations.empty());

    CHECK_THROWS_AS(Matching::from_pairs(K, {{K.id_of({0}), K.id_of({1, 2})}}), Error);
}

TEST_CASE("matching Euler identity on the catalog")
{
    for (const auto& n : catalog_names()) {
        GComplex K = catalog(n);
        Stratification s = strata(K);
        Matching m = build_matching(s);
        CHECK_MESSAGE(check_matching(s, m).ok(), n);
        CHECK_MESSAGE(check_matching(s, cancel(s, m)).ok(), n);
        CHECK(is_acyclic(m));
    }
}

TEST_CASE("displacement verifier")
{
    GComplex K = catalog("circle3");
    auto id = verify_displacement(K, DisplacementMap::identity(K));
    CHECK(id.pass());
    CHECK(id.singular.size() == K.num_simplices());

    DisplacementMap F = build_displacement(K);
    auto cert = verify_displacement(K, F);
    CHECK(cert.pass());
    CHECK(cert.fixed_point_free());
    CHECK(cert.singular.empty());
    CHECK(cert.flagged_chains == 0);
    CHECK(cert.chains_checked == 12);
}

TEST_CASE("verifier catches equivariance and monotonicity violations")
{
    GComplex K = catalog("circle3-rot");
    DisplacementMap F = build_displacement(K);
    REQUIRE(verify_displacement(K, F).pass());
    // Redirect a single vertex: breaks F(g s) = g F(s) on that orbit.
    DisplacementMap bad = F;
    SimplexId v = 0;
    bad.image[static_cast<std::size_t>(v)] = v;
    auto cert = verify_displacement(K, bad);
    CHECK_FALSE(cert.equivariant);
    CHECK_FALSE(cert.pass());
    bool named = false;
    for (const auto& msg : cert.violations)
        named = named || msg.find("equivar") != std::string::npos;
    CHECK(named);

    DisplacementMap partial = F;
    partial.image[1] = -1;
    CHECK_FALSE(verify_displacement(K, partial).total);
}

TEST_CASE("verifier rejects maps not homotopic to the identity")
{
    // Antipodal map of the octahedron: free, monotone, but degree -1 on H_2.
    GComplex K = catalog("sphere-oct");
    DisplacementMap F = DisplacementMap::identity(K);
    std::vector<Vertex> anti{1, 0, 3, 2, 5, 4};
    for (SimplexId s = 0; s < static_cast<SimplexId>(K.num_simplices()); ++s) {
        Simplex t;
        for (Vertex v : K.simplex(s))
            t.push_back(anti[static_cast<std::size_t>(v)]);
        std::sort(t.begin(), t.end());
        F.image[static_cast<std::size_t>(s)] = K.id_of(t);
    }
    auto cert = verify_displacement(K, F);
    CHECK(cert.total);
    CHECK(cert.monotone);
    CHECK_FALSE(cert.homology_identity);
}

TEST_CASE("displacement constructions on the catalog")
{
    for (const std::string n : {"circle3", "circle3-rot", "circle4-anti", "torus7", "torus7-rot"}) {
        GComplex K = catalog(n);
        auto cert = verify_displacement(K, build_displacement(K));
        CHECK_MESSAGE(cert.fixed_point_free(), n);
    }
    for (const std::string n : {"sphere-oct", "two-spheres", "circle6-refl"}) {
        GComplex K = catalog(n);
        auto cert = verify_displacement(K, build_displacement(K));
        CHECK_MESSAGE(cert.pass(), n);
        CHECK_MESSAGE(!cert.singular.empty(), n);
    }
}

TEST_CASE("displacement holds a prescribed fixed set")
{
    GComplex K = catalog("two-spheres");
    Subcomplex A = Subcomplex::whole(K);
    DisplacementMap F = build_displacement(K, A);
    for (SimplexId s = 0; s < static_cast<SimplexId>(K.num_simplices()); ++s)
        CHECK(F(s) == s);

    GComplex rot = catalog("torus7");
    DisplacementMap G = build_displacement(rot, closure(rot, {0}));
    CHECK(verify_displacement(rot, G).pass());
    CHECK(G(0) == 0);

    GComplex hex = catalog("circle6-refl");
    CHECK_THROWS_AS(build_displacement(hex, closure(hex, {1})), Error);
}
