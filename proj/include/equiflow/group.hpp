#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace equiflow {

using Element = int;

/// Default ceiling on group order for subgroup enumeration.
inline constexpr int kDefaultMaxGroupOrder = 48;

/// Reads EQUIFLOW_MAX_GROUP, falling back to kDefaultMaxGroupOrder when the
/// variable is unset or not a positive integer.
int max_group_order_from_env();

/**
 * A finite group given by its full multiplication table.
 *
 * Elements are the indices 0..order-1 and `mul(a, b)` is `table[a][b]`.
 * Instances are only produced by build_group, which validates the group
 * axioms, so every FiniteGroup in circulation is a genuine group.
 */
class FiniteGroup {
public:
    int order() const { return order_; }
    Element identity() const { return identity_; }
    Element mul(Element a, Element b) const { return table_[static_cast<std::size_t>(a * order_ + b)]; }
    Element inv(Element a) const { return inverses_[static_cast<std::size_t>(a)]; }
    /// g h g^-1
    Element conj(Element g, Element h) const { return mul(mul(g, h), inv(g)); }

    const std::vector<Element>& inverses() const { return inverses_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(Element a) const { return names_[static_cast<std::size_t>(a)]; }
    std::vector<std::vector<Element>> table() const;

    friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

private:
    friend FiniteGroup build_group(const std::vector<std::vector<int>>&, std::optional<std::vector<std::string>>);

    int order_ = 0;
    std::vector<Element> table_;
    std::vector<std::string> names_;
    Element identity_ = 0;
    std::vector<Element> inverses_;
};

/// Validates a square multiplication table and returns the group it defines.
/// Throws Error{MalformedTable | NoIdentity | NoInverse | NotAssociative},
/// naming the first offending entry or triple.
FiniteGroup build_group(const std::vector<std::vector<int>>& table,
                        std::optional<std::vector<std::string>> names = std::nullopt);

FiniteGroup cyclic_group(int n);
/// Dihedral group of order 2n: elements r^k (k < n) then s r^k.
FiniteGroup dihedral_group(int n);
FiniteGroup symmetric_group_3();
FiniteGroup quaternion_group();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// A subgroup as the sorted list of its elements.
struct Subgroup {
    std::vector<Element> elements;

    std::size_t size() const { return elements.size(); }
    bool contains(Element g) const;
    bool is_subset_of(const Subgroup& other) const;

    friend auto operator<=>(const Subgroup&, const Subgroup&) = default;
};

/// Sort order used everywhere subgroups are listed: by size, then lexicographic.
bool subgroup_less(const Subgroup& a, const Subgroup& b);

Subgroup trivial_subgroup(const FiniteGroup& G);
Subgroup whole_group(const FiniteGroup& G);
/// Smallest subgroup containing `generators`.
Subgroup generate(const FiniteGroup& G, const std::vector<Element>& generators);
/// Checks identity membership, closure and Lagrange.
bool is_subgroup(const FiniteGroup& G, const std::vector<Element>& elements);
Subgroup conjugate(const FiniteGroup& G, Element g, const Subgroup& H);
Subgroup normalizer(const FiniteGroup& G, const Subgroup& H);
Subgroup intersect(const Subgroup& a, const Subgroup& b);

/// All subgroups, each exactly once, sorted by subgroup_less.
/// Throws Error{GroupTooLarge} when G.order() exceeds `max_order`.
std::vector<Subgroup> subgroups(const FiniteGroup& G, int max_order = kDefaultMaxGroupOrder);

/// A conjugacy class of subgroups. `id` is the position in the class
/// ordering, where larger isotropy comes first.
struct OrbitType {
    int id = 0;
    Subgroup representative;
    std::vector<Subgroup> conjugates;
    /// Indices into the SubgroupLattice subgroup list.
    std::vector<int> members;
};

/**
 * Subgroups of G partitioned into conjugacy classes.
 *
 * Classes are ordered by decreasing subgroup size and then by representative,
 * which guarantees that whenever (H_i) is subconjugate to (H_j) we have j <= i.
 * `subconjugate[i][j]` is true when some conjugate of class i's representative
 * lies inside class j's representative.
 */
struct SubgroupLattice {
    std::vector<Subgroup> subgroups;
    std::vector<OrbitType> classes;
    std::vector<int> class_of;
    std::vector<std::vector<bool>> subconjugate;

    /// Index of `H` in `subgroups`, or -1.
    int index_of(const Subgroup& H) const;

private:
    friend SubgroupLattice conjugacy_classes(const FiniteGroup&, std::vector<Subgroup>);
    std::map<std::vector<Element>, int> lookup_;
};

SubgroupLattice conjugacy_classes(const FiniteGroup& G, std::vector<Subgroup> subs);

inline SubgroupLattice subgroup_lattice(const FiniteGroup& G, int max_order = kDefaultMaxGroupOrder)
{
    return conjugacy_classes(G, subgroups(G, max_order));
}

/// Compact label: "e", "Z/n" (with a generator for proper cyclic subgroups),
/// "G" for a non-cyclic whole group, else the element list.
std::string subgroup_label(const FiniteGroup& G, const Subgroup& H);

}  // namespace equiflow
