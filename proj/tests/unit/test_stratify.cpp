#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equiflow/catalog.hpp"
#include "equiflow/error.hpp"
#include "equiflow/stratify.hpp"

using namespace equiflow;

TEST_CASE("fixed subcomplexes")
{
    GComplex hex = catalog("circle6-refl");
    CHECK(fixed_subcomplex(hex, trivial_subgroup(hex.group())).size() == hex.num_simplices());
    Subcomplex F = fixed_subcomplex(hex, whole_group(hex.group()));
    CHECK(F.ids() == std::vector<SimplexId>{0, 3});

    GComplex anti = catalog("sphere-oct-anti");
    CHECK(fixed_subcomplex(anti, whole_group(anti.group())).empty());
}

TEST_CASE("fixed_subcomplex needs a regular action")
{
    GComplex K = build_complex({"0", "1", "2", "3"}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, cyclic_group(2),
                               {{0, 1, 2, 3}, {1, 0, 3, 2}});
    try {
        fixed_subcomplex(K, whole_group(K.group()));
        FAIL("expected IrregularAction");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::IrregularAction);
    }
}

TEST_CASE("strata of trivial actions")
{
    GComplex K = catalog("torus7");
    Stratification s = strata(K);
    REQUIRE(s.orbit_types().size() == 1);
    CHECK(s.stratum(0).size() == K.num_simplices());
    CHECK(s.components(0).size() == 1);
}

TEST_CASE("circle6-refl stratification")
{
    GComplex K = catalog("circle6-refl");
    Stratification s = strata(K);
    REQUIRE(s.orbit_types().size() == 2);
    CHECK(s.orbit_types()[0].representative.size() == 2);
    CHECK(s.stratum(0) == std::vector<SimplexId>{0, 3});
    CHECK(s.stratum(1).size() == 10);

    auto fixed = components(s, whole_group(K.group()));
    REQUIRE(fixed.size() == 2);
    for (const auto& c : fixed) {
        CHECK(c.open_simplices.size() == 1);
        CHECK(c.chi_c == 1);
    }
    auto free = components(s, trivial_subgroup(K.group()));
    REQUIRE(free.size() == 2);
    for (const auto& c : free) {
        CHECK(c.open_simplices.size() == 5);
        CHECK(c.chi_c == -1);
        CHECK(c.dim == 1);
    }
}

TEST_CASE("sphere-oct-refl stratification")
{
    GComplex K = catalog("sphere-oct-refl");
    Stratification s = strata(K);
    REQUIRE(s.orbit_types().size() == 2);
    CHECK(s.fixed(0).dimension() == 1);
    CHECK(s.fixed(0).count_by_dim() == std::vector<std::size_t>{4, 4});
    REQUIRE(s.components(1).size() == 2);
    for (const auto& c : s.components(1)) {
        CHECK(c.chi_c == 1);
        CHECK(c.open_simplices.size() == 9);
    }
}

TEST_CASE("circle3 has one component of six open simplices")
{
    GComplex K = catalog("circle3");
    Stratification s = strata(K);
    auto comps = components(s, trivial_subgroup(K.group()));
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].open_simplices.size() == 6);
}

TEST_CASE("filtration is increasing and ends with everything")
{
    for (const auto& n : catalog_names()) {
        GComplex K = catalog(n);
        Stratification s = strata(K);
        std::size_t prev = 0;
        for (std::size_t i = 0; i < s.orbit_types().size(); ++i) {
            const Subcomplex& M = s.filtration(static_cast<int>(i));
            CHECK(M.is_face_closed());
            CHECK(M.is_invariant());
            CHECK(M.size() > prev);
            prev = M.size();
        }
        CHECK(prev == K.num_simplices());
    }
}

TEST_CASE("closure_meets")
{
    GComplex K = catalog("sphere-oct-refl");
    Stratification s = strata(K);
    for (const auto& c : s.components(1))
        CHECK(closure_meets(c, s.fixed(0)));
    for (const auto& c : s.components(0))
        CHECK(closure_meets(c, Subcomplex::whole(K)));

    GComplex two = catalog("two-spheres");
    Stratification t = strata(two);
    SimplexId v0 = 0;
    Subcomplex A = Subcomplex::closure_of(two, std::span<const SimplexId>(&v0, 1));
    REQUIRE(t.components(0).size() == 2);
    CHECK(closure_meets(t.components(0)[0], A));
    CHECK_FALSE(closure_meets(t.components(0)[1], A));

    GComplex hex = catalog("circle6-refl");
    Stratification h = strata(hex);
    SimplexId v1 = 1;
    Subcomplex B = Subcomplex::closure_of(hex, std::span<const SimplexId>(&v1, 1));
    CHECK_THROWS_AS(closure_meets(h.components(0)[0], B), Error);
}

TEST_CASE("unknown isotropy")
{
    GComplex K = catalog("sphere-oct-anti");
    Stratification s = strata(K);
    try {
        components(s, whole_group(K.group()));
        FAIL("expected UnknownIsotropy");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownIsotropy);
    }
}

TEST_CASE("D4 acting on a square by symmetries")
{
    // Square 0-1-2-3 subdivided once so the action is regular.
    FiniteGroup d4 = dihedral_group(4);
    std::vector<std::vector<Vertex>> perms;
    for (int k = 0; k < 4; ++k)
        perms.push_back({k % 4, (k + 1) % 4, (k + 2) % 4, (k + 3) % 4});  // r^k: v -> v + k
    // Elements n+k act as s r^k: v -> -(v + k).
    for (int k = 0; k < 4; ++k) {
        std::vector<Vertex> p;
        for (int v = 0; v < 4; ++v)
            p.push_back(((-(v + k)) % 4 + 4) % 4);
        perms.push_back(p);
    }
    GComplex K = ensure_regular(
        build_complex({"0", "1", "2", "3"}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, d4, perms));
    Stratification s = strata(K);
    // Vertex stabilizers (two classes of reflections) and free edges.
    CHECK(s.orbit_types().size() == 3);
    // Components are stored for representatives; conjugate strata are disjoint copies.
    long long total = 0;
    for (std::size_t t = 0; t < s.orbit_types().size(); ++t)
        for (const auto& c : s.components(static_cast<int>(t)))
            total += c.chi_c * static_cast<long long>(s.orbit_types()[t].conjugates.size());
    CHECK(total == K.euler_characteristic());
}
