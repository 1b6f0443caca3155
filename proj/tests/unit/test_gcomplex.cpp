#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equiflow/catalog.hpp"
#include "equiflow/complex.hpp"
#include "equiflow/error.hpp"
#include "equiflow/io.hpp"

using namespace equiflow;

namespace {

std::vector<std::string> names(int n)
{
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i)
        out.push_back(std::to_string(i));
    return out;
}

std::vector<Simplex> octahedron()
{
    std::vector<Simplex> out;
    for (int a : {0, 1})
        for (int b : {2, 3})
            for (int c : {4, 5})
                out.push_back({a, b, c});
    return out;
}

// Square 0-1-2-3 with the reflection swapping 0<->1 and 2<->3.
GComplex square_reflection()
{
    return build_complex(names(4), {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, cyclic_group(2), {{0, 1, 2, 3}, {1, 0, 3, 2}});
}

ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("build_complex basics")
{
    GComplex K = build_trivial_complex(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(K.count_by_dim() == std::vector<std::size_t>{3, 3});
    CHECK(K.dimension() == 1);
    CHECK(K.regular());
    CHECK(K.euler_characteristic() == 0);
    CHECK(K.find({0, 2}) >= 0);
    CHECK(K.find({0, 1, 2}) == -1);
}

TEST_CASE("antipodal octahedron is regular")
{
    GComplex K = build_complex(names(6), octahedron(), cyclic_group(2), {{0, 1, 2, 3, 4, 5}, {1, 0, 3, 2, 5, 4}});
    CHECK(K.num_simplices() == 26);
    CHECK(K.regular());
    for (SimplexId v = 0; v < 6; ++v)
        CHECK(K.pointwise_stabilizer(v).size() == 1);
}

TEST_CASE("vertex-swapping reflection is irregular until subdivided")
{
    GComplex K = square_reflection();
    CHECK_FALSE(K.regular());
    GComplex sd = barycentric_subdivision(K);
    CHECK(sd.regular());
    int applied = -1;
    GComplex R = ensure_regular(K, &applied);
    CHECK(applied == 1);
    CHECK(R.count_by_dim() == sd.count_by_dim());
}

TEST_CASE("ensure_regular leaves regular complexes alone")
{
    int applied = -1;
    GComplex oct = catalog("sphere-oct-anti");
    GComplex R = ensure_regular(oct, &applied);
    CHECK(applied == 0);
    CHECK(R.simplices() == oct.simplices());
    GComplex t = catalog("torus7");
    ensure_regular(t, &applied);
    CHECK(applied == 0);
}

TEST_CASE("build_complex validation errors")
{
    CHECK(kind_of([] { build_trivial_complex(0, {}); }) == ErrorKind::EmptyComplex);
    CHECK(kind_of([] { build_trivial_complex(3, {{0, 0, 1}}); }) == ErrorKind::DuplicateVertexInSimplex);
    // Permutation sends edge {0,1} to the non-edge {0,2}.
    CHECK(kind_of([] {
              build_complex(names(3), {{0, 1}, {1, 2}}, cyclic_group(2), {{0, 1, 2}, {0, 2, 1}});
          }) == ErrorKind::NotSimplicial);
    // Order-3 vertex cycle assigned to an element of order 2.
    CHECK(kind_of([] {
              build_complex(names(3), {{0, 1}, {1, 2}, {0, 2}}, cyclic_group(2), {{0, 1, 2}, {1, 2, 0}});
          }) == ErrorKind::NotHomomorphism);
    CHECK(kind_of([] {
              build_complex(names(3), {{0, 1}, {1, 2}, {0, 2}}, cyclic_group(2), {{1, 0, 2}, {1, 0, 2}});
          }) == ErrorKind::NotHomomorphism);
    CHECK(kind_of([] { build_trivial_complex(2, {{0, 5}}); }) == ErrorKind::SchemaError);
}

TEST_CASE("barycentric subdivision counts")
{
    GComplex edge = build_trivial_complex(2, {{0, 1}});
    CHECK(barycentric_subdivision(edge).count_by_dim() == std::vector<std::size_t>{3, 2});

    GComplex tri = catalog("circle3");
    GComplex hex = barycentric_subdivision(tri);
    CHECK(hex.count_by_dim() == std::vector<std::size_t>{6, 6});
    CHECK(hex.euler_characteristic() == 0);

    GComplex oct = catalog("sphere-oct");
    GComplex sd = barycentric_subdivision(oct);
    CHECK(sd.count_by_dim() == std::vector<std::size_t>{26, 72, 48});
    CHECK(sd.euler_characteristic() == 2);
}

TEST_CASE("subdivision is equivariant")
{
    GComplex K = catalog("torus7-rot");
    GComplex sd = barycentric_subdivision(K);
    for (Element g = 0; g < K.group().order(); ++g)
        for (SimplexId s = 0; s < static_cast<SimplexId>(K.num_simplices()); ++s)
            CHECK(sd.vertex_perm(g)[static_cast<std::size_t>(s)] == K.act(g, s));
}

TEST_CASE("subdivided subcomplexes")
{
    GComplex K = catalog("circle3");
    SimplexId e = K.id_of({0, 1});
    Subcomplex A = Subcomplex::closure_of(K, std::span<const SimplexId>(&e, 1));
    CHECK(A.size() == 3);
    GComplex sd = barycentric_subdivision(K);
    Subcomplex sdA = subdivide_subcomplex(sd, A);
    CHECK(sdA.count_by_dim() == std::vector<std::size_t>{3, 2});
    CHECK(sdA.is_face_closed());
}

TEST_CASE("pointwise stabilizers")
{
    GComplex triv = catalog("torus7");
    for (SimplexId s = 0; s < static_cast<SimplexId>(triv.num_simplices()); ++s)
        CHECK(triv.pointwise_stabilizer(s).size() == 1);

    GComplex hex = catalog("circle6-refl");
    CHECK(hex.pointwise_stabilizer(0).size() == 2);
    CHECK(hex.pointwise_stabilizer(3).size() == 2);
    CHECK(hex.pointwise_stabilizer(1).size() == 1);
}

TEST_CASE("catalog entries")
{
    CHECK(catalog_names().size() == 10);
    CHECK(catalog("circle3").count_by_dim() == std::vector<std::size_t>{3, 3});
    CHECK(catalog("sphere-oct").count_by_dim() == std::vector<std::size_t>{6, 12, 8});
    CHECK(catalog("sphere-oct").euler_characteristic() == 2);
    CHECK(catalog("torus7").count_by_dim() == std::vector<std::size_t>{7, 21, 14});
    CHECK(catalog("torus7").euler_characteristic() == 0);
    for (const auto& n : catalog_names()) {
        GComplex K = catalog(n);
        CHECK_MESSAGE(K.regular(), n);
        CHECK_MESSAGE(manifold_warnings(K).empty(), n);
    }
    CHECK(kind_of([] { catalog("klein"); }) == ErrorKind::UnknownCatalogName);
}

TEST_CASE("catalog JSON round-trip")
{
    for (const auto& n : catalog_names()) {
        GComplex K = catalog(n);
        json j = complex_to_json(K);
        GComplex back = complex_from_json(json::parse(j.dump())).complex;
        CHECK(back.simplices() == K.simplices());
        CHECK(back.group() == K.group());
        for (Element g = 0; g < K.group().order(); ++g)
            CHECK(back.vertex_perm(g) == K.vertex_perm(g));
    }
}

TEST_CASE("complex JSON schema errors")
{
    CHECK(kind_of([] { complex_from_json(json::parse(R"({"vertices": 3})")); }) == ErrorKind::SchemaError);
    CHECK(kind_of([] {
              complex_from_json(json::parse(
                  R"({"vertices": 2, "maximal_simplices": [[0,1]], "group": {"table": [[0,1],[1,0]]}})"));
          }) == ErrorKind::SchemaError);
    auto doc = complex_from_json(json::parse(
        R"({"vertices": ["a","b","c"], "maximal_simplices": [[0,1],[1,2],[0,2]], "fixed_set": [[1]]})"));
    CHECK(doc.complex.group().order() == 1);
    REQUIRE(doc.fixed_set);
    CHECK(doc.fixed_set->size() == 1);
}

TEST_CASE("manifold warnings flag non-manifold input")
{
    // Three triangles sharing the edge {0,1}.
    GComplex book = build_trivial_complex(5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
    CHECK_FALSE(manifold_warnings(book).empty());
}
