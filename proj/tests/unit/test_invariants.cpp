#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equiflow/catalog.hpp"
#include "equiflow/error.hpp"
#include "equiflow/invariants.hpp"

using namespace equiflow;

namespace {

long long alternating(const std::vector<long long>& b)
{
    long long s = 0;
    for (std::size_t i = 0; i < b.size(); ++i)
        s += i % 2 == 0 ? b[i] : -b[i];
    return s;
}

}  // namespace

TEST_CASE("chi_subcomplex")
{
    GComplex oct = catalog("sphere-oct");
    CHECK(chi_subcomplex(Subcomplex(oct)) == 0);
    CHECK(chi_subcomplex(Subcomplex::whole(oct)) == 2);
    CHECK(chi_subcomplex(Subcomplex::whole(catalog("torus7"))) == 0);
}

TEST_CASE("chi_c of stratum components")
{
    GComplex hex = catalog("circle6-refl");
    Stratification s = strata(hex);
    for (const auto& c : s.components(0))
        CHECK(chi_c(hex, c) == 1);
    for (const auto& c : s.components(1))
        CHECK(chi_c(hex, c) == -1);

    GComplex refl = catalog("sphere-oct-refl");
    Stratification r = strata(refl);
    for (const auto& c : r.components(1)) {
        std::vector<int> by_dim(3, 0);
        for (SimplexId id : c.open_simplices)
            ++by_dim[static_cast<std::size_t>(refl.dim(id))];
        CHECK(by_dim == std::vector<int>{1, 4, 4});
        CHECK(chi_c(refl, c) == 1);
    }
}

TEST_CASE("abs_chi")
{
    GComplex rot = catalog("circle3-rot");
    CHECK(abs_chi(strata(rot), trivial_subgroup(rot.group())) == 0);

    GComplex hex = catalog("circle6-refl");
    Stratification s = strata(hex);
    CHECK(abs_chi(s, whole_group(hex.group())) == 2);
    CHECK(abs_chi(s, trivial_subgroup(hex.group())) == 2);

    GComplex anti = catalog("sphere-oct-anti");
    Stratification a = strata(anti);
    CHECK(abs_chi(a, trivial_subgroup(anti.group())) == 2);
    CHECK_THROWS_AS(abs_chi(a, whole_group(anti.group())), Error);
}

TEST_CASE("betti numbers")
{
    GComplex point = build_trivial_complex(1, {{0}});
    CHECK(betti(Subcomplex::whole(point)) == std::vector<long long>{1});
    CHECK(betti(Subcomplex::whole(catalog("circle3"))) == std::vector<long long>{1, 1});
    CHECK(betti(Subcomplex::whole(catalog("torus7"))) == std::vector<long long>{1, 2, 1});
    CHECK(betti(Subcomplex::whole(catalog("sphere-oct"))) == std::vector<long long>{1, 0, 1});
    CHECK(betti(Subcomplex::whole(catalog("two-spheres"))) == std::vector<long long>{2, 0, 2});
    CHECK(betti(Subcomplex(catalog("circle3"))).empty());
}

TEST_CASE("boundary of a boundary vanishes")
{
    GComplex K = catalog("torus7");
    ChainBasis basis(Subcomplex::whole(K));
    auto d2 = basis.boundary(2);
    auto d1 = basis.boundary(1);
    for (const auto& col : d2) {
        linalg::Column image;
        for (const auto& [row, coeff] : col)
            for (const auto& [r2, c2] : d1[static_cast<std::size_t>(row)])
                image[r2] += coeff * c2;
        for (const auto& [row, value] : image)
            CHECK(value == 0);
    }
}

TEST_CASE("Euler-Poincare on fixed sets and closures")
{
    for (const auto& n : catalog_names()) {
        GComplex K = catalog(n);
        Stratification s = strata(K);
        for (std::size_t t = 0; t < s.orbit_types().size(); ++t) {
            const Subcomplex& F = s.fixed(static_cast<int>(t));
            CHECK(chi_subcomplex(F) == alternating(betti(F)));
        }
    }
}

TEST_CASE("euler report")
{
    GComplex hex = catalog("circle6-refl");
    Stratification s = strata(hex);
    EulerReport r = euler_report(s);
    CHECK(r.chi_total == 0);
    REQUIRE(r.types.size() == 2);
    CHECK(r.types[0].chi_fixed == 2);
    CHECK(r.types[0].abs_chi == 2);
    CHECK(r.types[1].chi_fixed == 0);
    CHECK(r.types[1].abs_chi == 2);
    for (const auto& t : r.types)
        CHECK(t.additive());
    // Fixed vertices are closed in M^G; open arcs are not closed in M.
    CHECK(r.types[0].components[0].closed);
    REQUIRE(r.types[0].components[0].closure_betti);
    CHECK(*r.types[0].components[0].closure_betti == std::vector<long long>{1});
    CHECK_FALSE(r.types[1].components[0].closed);
}

TEST_CASE("rational reduction")
{
    // Columns (1,1,0), (0,1,1), (1,2,1): rank 2, one kernel vector.
    std::vector<linalg::Column> cols(3);
    cols[0] = {{0, 1}, {1, 1}};
    cols[1] = {{1, 1}, {2, 1}};
    cols[2] = {{0, 1}, {1, 2}, {2, 1}};
    linalg::ReducedMatrix m(cols, true);
    CHECK(m.rank() == 2);
    CHECK(m.kernel().size() == 1);
    CHECK(m.spans({{0, 2}, {1, 3}, {2, 1}}));
    CHECK_FALSE(m.spans({{0, 1}}));
}
