#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "equiflow/group.hpp"

namespace equiflow {

using Vertex = int;
using SimplexId = int;
/// Sorted, duplicate-free vertex list.
using Simplex = std::vector<Vertex>;

inline int simplex_dim(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

/// (dimension, lexicographic) order on simplices; GComplex stores simplices in this order.
bool simplex_less(const Simplex& a, const Simplex& b);

/**
 * A finite simplicial complex with a simplicial action of a FiniteGroup.
 *
 * Simplices are stored face-closed and sorted by (dimension, vertex list), so
 * SimplexId order agrees with dimension. The action is stored per element on
 * vertices and, derived from it, on simplices.
 *
 * The action is regular when every element mapping a simplex to itself fixes
 * it pointwise. Under a regular action the points of an open simplex all have
 * the simplex's pointwise stabilizer as isotropy, so fixed sets are subcomplexes.
 */
class GComplex {
public:
    std::size_t num_vertices() const { return vertex_names_.size(); }
    std::size_t num_simplices() const { return simplices_.size(); }
    int dimension() const { return dimension_; }
    bool regular() const { return regular_; }

    const FiniteGroup& group() const { return group_; }
    const std::vector<std::string>& vertex_names() const { return vertex_names_; }
    const std::vector<Simplex>& simplices() const { return simplices_; }
    const Simplex& simplex(SimplexId id) const { return simplices_[static_cast<std::size_t>(id)]; }
    int dim(SimplexId id) const { return simplex_dim(simplex(id)); }
    /// Ids of the simplices of dimension d.
    std::span<const SimplexId> of_dim(int d) const;
    std::vector<std::size_t> count_by_dim() const;

    /// -1 when the vertex set is not a simplex of the complex.
    SimplexId find(const Simplex& s) const;
    SimplexId id_of(const Simplex& s) const;  // throws SimplexNotInComplex

    /// Codimension-one faces / cofaces.
    const std::vector<SimplexId>& facets(SimplexId id) const { return facets_[static_cast<std::size_t>(id)]; }
    const std::vector<SimplexId>& cofacets(SimplexId id) const { return cofacets_[static_cast<std::size_t>(id)]; }
    /// All faces including the simplex itself.
    std::vector<SimplexId> faces(SimplexId id) const;
    std::vector<SimplexId> maximal_simplices() const;

    const std::vector<Vertex>& vertex_perm(Element g) const { return vertex_action_[static_cast<std::size_t>(g)]; }
    SimplexId act(Element g, SimplexId id) const
    {
        return simplex_action_[static_cast<std::size_t>(g)][static_cast<std::size_t>(id)];
    }
    /// Orbit of a simplex, sorted.
    std::vector<SimplexId> orbit(SimplexId id) const;

    Subgroup pointwise_stabilizer(SimplexId id) const;
    Subgroup setwise_stabilizer(SimplexId id) const;

    long long euler_characteristic() const;

private:
    friend GComplex build_complex(std::vector<std::string>, const std::vector<Simplex>&, FiniteGroup,
                                  std::vector<std::vector<Vertex>>);

    std::vector<std::string> vertex_names_;
    std::vector<Simplex> simplices_;
    std::map<Simplex, SimplexId> index_;
    std::vector<std::vector<SimplexId>> by_dim_;
    std::vector<std::vector<SimplexId>> facets_;
    std::vector<std::vector<SimplexId>> cofacets_;
    FiniteGroup group_;
    std::vector<std::vector<Vertex>> vertex_action_;
    std::vector<std::vector<SimplexId>> simplex_action_;
    int dimension_ = -1;
    bool regular_ = false;
};

/// Builds and validates a G-complex from its maximal simplices (any generating
/// set of simplices works; faces are added). `action[g]` is the vertex
/// permutation of element g. Throws EmptyComplex, DuplicateVertexInSimplex,
/// NotSimplicial or NotHomomorphism; SchemaError for out-of-range indices.
GComplex build_complex(std::vector<std::string> vertex_names, const std::vector<Simplex>& maximal_simplices,
                       FiniteGroup group, std::vector<std::vector<Vertex>> action);

/// Convenience: the trivial group acting on a complex.
GComplex build_trivial_complex(std::size_t num_vertices, const std::vector<Simplex>& maximal_simplices);

/**
 * A face-closed set of simplices of a parent GComplex.
 *
 * Holds a non-owning pointer to the parent, which must outlive it.
 */
class Subcomplex {
public:
    Subcomplex() = default;
    /// Empty subcomplex.
    explicit Subcomplex(const GComplex& parent);

    /// Face closure of the given simplices.
    static Subcomplex closure_of(const GComplex& parent, std::span<const SimplexId> ids);
    /// Validates face-closure; throws SchemaError otherwise.
    static Subcomplex from_ids(const GComplex& parent, std::span<const SimplexId> ids);
    static Subcomplex whole(const GComplex& parent);

    const GComplex& parent() const { return *parent_; }
    bool contains(SimplexId id) const { return mask_[static_cast<std::size_t>(id)] != 0; }
    bool empty() const { return count_ == 0; }
    std::size_t size() const { return count_; }
    std::vector<SimplexId> ids() const;
    std::vector<std::size_t> count_by_dim() const;
    int dimension() const;

    bool is_face_closed() const;
    bool is_invariant() const;
    bool intersects(const Subcomplex& other) const;

    friend bool operator==(const Subcomplex& a, const Subcomplex& b) { return a.mask_ == b.mask_; }

private:
    const GComplex* parent_ = nullptr;
    std::vector<char> mask_;
    std::size_t count_ = 0;
};

/// Equivariant barycentric subdivision: vertices are the simplices of K,
/// simplices are chains of simplices under inclusion. The new vertex for
/// SimplexId s of K is vertex s of the result.
GComplex barycentric_subdivision(const GComplex& K);

/// The subdivision of a subcomplex of K, as a subcomplex of `sd`
/// (which must be barycentric_subdivision(K)).
Subcomplex subdivide_subcomplex(const GComplex& sd, const Subcomplex& A);

/// Returns K when regular, else subdivides up to twice.
/// Throws RegularizationFailed when that is not enough.
GComplex ensure_regular(const GComplex& K, int* subdivisions_applied = nullptr);

/// Heuristic manifold sanity check; returns human-readable warnings only.
std::vector<std::string> manifold_warnings(const GComplex& K);

/// Connected components of the underlying complex, as lists of SimplexIds.
std::vector<std::vector<SimplexId>> connected_pieces(const GComplex& K);

}  // namespace equiflow
