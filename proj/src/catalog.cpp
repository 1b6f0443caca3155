#include "equiflow/catalog.hpp"

#include <algorithm>

#include "equiflow/error.hpp"

namespace equiflow {

namespace {

std::vector<std::string> numbered(int n, int offset = 0)
{
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        names.push_back(std::to_string(i + offset));
    return names;
}

/// Action of Z/n generated by one vertex permutation.
std::vector<std::vector<Vertex>> cyclic_action(const std::vector<Vertex>& generator, int n)
{
    std::vector<Vertex> current(generator.size());
    for (std::size_t v = 0; v < current.size(); ++v)
        current[v] = static_cast<Vertex>(v);
    std::vector<std::vector<Vertex>> action;
    for (int k = 0; k < n; ++k) {
        action.push_back(current);
        for (auto& v : current)
            v = generator[static_cast<std::size_t>(v)];
    }
    return action;
}

std::vector<Simplex> circle(int n)
{
    std::vector<Simplex> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back({i, (i + 1) % n});
    return edges;
}

// Opposite pairs (0,1), (2,3), (4,5); one triangle per choice of side.
std::vector<Simplex> octahedron(int offset = 0)
{
    std::vector<Simplex> tris;
    for (int a : {0, 1})
        for (int b : {2, 3})
            for (int c : {4, 5})
                tris.push_back({a + offset, b + offset, c + offset});
    return tris;
}

// Minimal 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
std::vector<Simplex> torus7()
{
    std::vector<Simplex> tris;
    for (int i = 0; i < 7; ++i) {
        tris.push_back({i, (i + 1) % 7, (i + 3) % 7});
        tris.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return tris;
}

}  // namespace

const std::vector<std::string>& catalog_names()
{
    static const std::vector<std::string> names{
        "circle3",         "circle3-rot",      "circle6-refl", "circle4-anti", "sphere-oct",
        "sphere-oct-anti", "sphere-oct-refl", "torus7",       "torus7-rot",   "two-spheres",
    };
    return names;
}

GComplex catalog(const std::string& name)
{
    if (name == "circle3")
        return build_complex(numbered(3), circle(3), cyclic_group(1), cyclic_action({0, 1, 2}, 1));
    if (name == "circle3-rot")
        return build_complex(numbered(3), circle(3), cyclic_group(3), cyclic_action({1, 2, 0}, 3));
    if (name == "circle6-refl")
        return build_complex(numbered(6), circle(6), cyclic_group(2), cyclic_action({0, 5, 4, 3, 2, 1}, 2));
    if (name == "circle4-anti")
        return build_complex(numbered(4), circle(4), cyclic_group(2), cyclic_action({2, 3, 0, 1}, 2));
    if (name == "sphere-oct")
        return build_complex(numbered(6), octahedron(), cyclic_group(1), cyclic_action({0, 1, 2, 3, 4, 5}, 1));
    if (name == "sphere-oct-anti")
        return build_complex(numbered(6), octahedron(), cyclic_group(2), cyclic_action({1, 0, 3, 2, 5, 4}, 2));
    if (name == "sphere-oct-refl")
        return ensure_regular(
            build_complex(numbered(6), octahedron(), cyclic_group(2), cyclic_action({1, 0, 2, 3, 4, 5}, 2)));
    if (name == "torus7")
        return build_complex(numbered(7), torus7(), cyclic_group(1), cyclic_action({0, 1, 2, 3, 4, 5, 6}, 1));
    if (name == "torus7-rot")
        return build_complex(numbered(7), torus7(), cyclic_group(7), cyclic_action({1, 2, 3, 4, 5, 6, 0}, 7));
    if (name == "two-spheres") {
        auto tris = octahedron(0);
        auto second = octahedron(6);
        tris.insert(tris.end(), second.begin(), second.end());
        std::vector<Vertex> id(12);
        for (int i = 0; i < 12; ++i)
            id[static_cast<std::size_t>(i)] = i;
        return build_complex(numbered(12), tris, cyclic_group(1), cyclic_action(id, 1));
    }
    throw Error(ErrorKind::UnknownCatalogName, "'" + name + "'");
}

}  // namespace equiflow
