#include "equiflow/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "equiflow/error.hpp"

namespace equiflow {

namespace {

std::string simplex_str(const Simplex& s)
{
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(s[i]);
    }
    return out + "]";
}

Simplex apply_perm(const std::vector<Vertex>& perm, const Simplex& s)
{
    Simplex t;
    t.reserve(s.size());
    for (Vertex v : s)
        t.push_back(perm[static_cast<std::size_t>(v)]);
    std::sort(t.begin(), t.end());
    return t;
}

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    }
    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

}  // namespace

bool simplex_less(const Simplex& a, const Simplex& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b;
}

std::span<const SimplexId> GComplex::of_dim(int d) const
{
    if (d < 0 || d >= static_cast<int>(by_dim_.size()))
        return {};
    return by_dim_[static_cast<std::size_t>(d)];
}

std::vector<std::size_t> GComplex::count_by_dim() const
{
    std::vector<std::size_t> counts;
    for (const auto& ids : by_dim_)
        counts.push_back(ids.size());
    return counts;
}

SimplexId GComplex::find(const Simplex& s) const
{
    auto it = index_.find(s);
    return it == index_.end() ? -1 : it->second;
}

SimplexId GComplex::id_of(const Simplex& s) const
{
    SimplexId id = find(s);
    if (id < 0)
        throw Error(ErrorKind::SimplexNotInComplex, simplex_str(s));
    return id;
}

std::vector<SimplexId> GComplex::faces(SimplexId id) const
{
    const Simplex& s = simplex(id);
    const std::size_t n = s.size();
    std::vector<SimplexId> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        Simplex f;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i))
                f.push_back(s[i]);
        out.push_back(index_.at(f));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SimplexId> GComplex::maximal_simplices() const
{
    std::vector<SimplexId> out;
    for (SimplexId id = 0; id < static_cast<SimplexId>(simplices_.size()); ++id)
        if (cofacets(id).empty())
            out.push_back(id);
    return out;
}

std::vector<SimplexId> GComplex::orbit(SimplexId id) const
{
    std::set<SimplexId> orb;
    for (Element g = 0; g < group_.order(); ++g)
        orb.insert(act(g, id));
    return {orb.begin(), orb.end()};
}

Subgroup GComplex::pointwise_stabilizer(SimplexId id) const
{
    const Simplex& s = simplex(id);
    Subgroup H;
    for (Element g = 0; g < group_.order(); ++g) {
        const auto& perm = vertex_perm(g);
        if (std::all_of(s.begin(), s.end(), [&](Vertex v) { return perm[static_cast<std::size_t>(v)] == v; }))
            H.elements.push_back(g);
    }
    return H;
}

Subgroup GComplex::setwise_stabilizer(SimplexId id) const
{
    Subgroup H;
    for (Element g = 0; g < group_.order(); ++g)
        if (act(g, id) == id)
            H.elements.push_back(g);
    return H;
}

long long GComplex::euler_characteristic() const
{
    long long chi = 0;
    for (std::size_t d = 0; d < by_dim_.size(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(by_dim_[d].size());
    return chi;
}

GComplex build_complex(std::vector<std::string> vertex_names, const std::vector<Simplex>& maximal_simplices,
                       FiniteGroup group, std::vector<std::vector<Vertex>> action)
{
    const std::size_t V = vertex_names.size();
    if (V == 0)
        throw Error(ErrorKind::EmptyComplex, "no vertices");

    std::set<Simplex, decltype(&simplex_less)> all(&simplex_less);
    for (Vertex v = 0; v < static_cast<Vertex>(V); ++v)
        all.insert(Simplex{v});
    for (const auto& raw : maximal_simplices) {
        if (raw.empty())
            throw Error(ErrorKind::SchemaError, "empty simplex in maximal_simplices");
        if (raw.size() > 24)
            throw Error(ErrorKind::SchemaError, "simplex dimension too large: " + simplex_str(raw));
        Simplex s = raw;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw Error(ErrorKind::DuplicateVertexInSimplex, simplex_str(raw));
        for (Vertex v : s)
            if (v < 0 || v >= static_cast<Vertex>(V))
                throw Error(ErrorKind::SchemaError, "vertex " + std::to_string(v) + " out of range in " + simplex_str(raw));
        if (all.count(s))
            continue;
        const std::size_t n = s.size();
        for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
            Simplex f;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1ul << i))
                    f.push_back(s[i]);
            all.insert(std::move(f));
        }
    }

    GComplex K;
    K.vertex_names_ = std::move(vertex_names);
    K.simplices_.assign(all.begin(), all.end());
    K.dimension_ = simplex_dim(K.simplices_.back());
    K.by_dim_.resize(static_cast<std::size_t>(K.dimension_ + 1));
    for (SimplexId id = 0; id < static_cast<SimplexId>(K.simplices_.size()); ++id) {
        K.index_.emplace(K.simplices_[static_cast<std::size_t>(id)], id);
        K.by_dim_[static_cast<std::size_t>(K.dim(id))].push_back(id);
    }
    K.facets_.resize(K.simplices_.size());
    K.cofacets_.resize(K.simplices_.size());
    for (SimplexId id = 0; id < static_cast<SimplexId>(K.simplices_.size()); ++id) {
        const Simplex& s = K.simplex(id);
        if (s.size() < 2)
            continue;
        for (std::size_t skip = 0; skip < s.size(); ++skip) {
            Simplex f;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != skip)
                    f.push_back(s[i]);
            SimplexId fid = K.index_.at(f);
            K.facets_[static_cast<std::size_t>(id)].push_back(fid);
            K.cofacets_[static_cast<std::size_t>(fid)].push_back(id);
        }
        std::sort(K.facets_[static_cast<std::size_t>(id)].begin(), K.facets_[static_cast<std::size_t>(id)].end());
    }
    for (auto& c : K.cofacets_)
        std::sort(c.begin(), c.end());

    // Action: permutations, homomorphism, simplicial.
    const int order = group.order();
    if (static_cast<int>(action.size()) != order)
        throw Error(ErrorKind::SchemaError, "action has " + std::to_string(action.size()) + " permutations, group order is " +
                                                std::to_string(order));
    for (Element g = 0; g < order; ++g) {
        const auto& perm = action[static_cast<std::size_t>(g)];
        if (perm.size() != V)
            throw Error(ErrorKind::SchemaError, "permutation for element " + std::to_string(g) + " has wrong length");
        std::vector<char> hit(V, 0);
        for (Vertex v : perm) {
            if (v < 0 || v >= static_cast<Vertex>(V) || hit[static_cast<std::size_t>(v)])
                throw Error(ErrorKind::SchemaError, "action of element " + std::to_string(g) + " is not a permutation");
            hit[static_cast<std::size_t>(v)] = 1;
        }
    }
    for (Vertex v = 0; v < static_cast<Vertex>(V); ++v)
        if (action[static_cast<std::size_t>(group.identity())][static_cast<std::size_t>(v)] != v)
            throw Error(ErrorKind::NotHomomorphism, "identity element moves vertex " + std::to_string(v));
    for (Element a = 0; a < order; ++a)
        for (Element b = 0; b < order; ++b) {
            const auto& pa = action[static_cast<std::size_t>(a)];
            const auto& pb = action[static_cast<std::size_t>(b)];
            const auto& pab = action[static_cast<std::size_t>(group.mul(a, b))];
            for (Vertex v = 0; v < static_cast<Vertex>(V); ++v)
                if (pa[static_cast<std::size_t>(pb[static_cast<std::size_t>(v)])] != pab[static_cast<std::size_t>(v)])
                    throw Error(ErrorKind::NotHomomorphism, "perm(" + std::to_string(a) + ") o perm(" + std::to_string(b) +
                                                                ") != perm(" + std::to_string(group.mul(a, b)) +
                                                                ") at vertex " + std::to_string(v));
        }

    K.simplex_action_.assign(static_cast<std::size_t>(order), std::vector<SimplexId>(K.simplices_.size()));
    for (Element g = 0; g < order; ++g)
        for (SimplexId id = 0; id < static_cast<SimplexId>(K.simplices_.size()); ++id) {
            Simplex image = apply_perm(action[static_cast<std::size_t>(g)], K.simplex(id));
            SimplexId target = K.find(image);
            if (target < 0)
                throw Error(ErrorKind::NotSimplicial, "element " + std::to_string(g) + " maps " + simplex_str(K.simplex(id)) +
                                                          " to non-simplex " + simplex_str(image));
            K.simplex_action_[static_cast<std::size_t>(g)][static_cast<std::size_t>(id)] = target;
        }

    K.group_ = std::move(group);
    K.vertex_action_ = std::move(action);

    K.regular_ = true;
    for (Element g = 0; g < order && K.regular_; ++g)
        for (SimplexId id = 0; id < static_cast<SimplexId>(K.simplices_.size()) && K.regular_; ++id)
            if (K.act(g, id) == id) {
                for (Vertex v : K.simplex(id))
                    if (K.vertex_perm(g)[static_cast<std::size_t>(v)] != v)
                        K.regular_ = false;
            }
    return K;
}

GComplex build_trivial_complex(std::size_t num_vertices, const std::vector<Simplex>& maximal_simplices)
{
    std::vector<std::string> names;
    std::vector<Vertex> id_perm;
    for (std::size_t v = 0; v < num_vertices; ++v) {
        names.push_back(std::to_string(v));
        id_perm.push_back(static_cast<Vertex>(v));
    }
    return build_complex(std::move(names), maximal_simplices, cyclic_group(1), {id_perm});
}

Subcomplex::Subcomplex(const GComplex& parent) : parent_(&parent), mask_(parent.num_simplices(), 0) {}

Subcomplex Subcomplex::closure_of(const GComplex& parent, std::span<const SimplexId> ids)
{
    Subcomplex L(parent);
    std::vector<SimplexId> stack(ids.begin(), ids.end());
    while (!stack.empty()) {
        SimplexId id = stack.back();
        stack.pop_back();
        if (id < 0 || id >= static_cast<SimplexId>(parent.num_simplices()))
            throw Error(ErrorKind::SimplexNotInComplex, "simplex id " + std::to_string(id));
        if (L.mask_[static_cast<std::size_t>(id)])
            continue;
        L.mask_[static_cast<std::size_t>(id)] = 1;
        ++L.count_;
        for (SimplexId f : parent.facets(id))
            stack.push_back(f);
    }
    return L;
}

Subcomplex Subcomplex::from_ids(const GComplex& parent, std::span<const SimplexId> ids)
{
    Subcomplex L(parent);
    for (SimplexId id : ids) {
        if (id < 0 || id >= static_cast<SimplexId>(parent.num_simplices()))
            throw Error(ErrorKind::SimplexNotInComplex, "simplex id " + std::to_string(id));
        if (!L.mask_[static_cast<std::size_t>(id)]) {
            L.mask_[static_cast<std::size_t>(id)] = 1;
            ++L.count_;
        }
    }
    if (!L.is_face_closed())
        throw Error(ErrorKind::SchemaError, "simplex set is not closed under faces");
    return L;
}

Subcomplex Subcomplex::whole(const GComplex& parent)
{
    Subcomplex L(parent);
    std::fill(L.mask_.begin(), L.mask_.end(), 1);
    L.count_ = parent.num_simplices();
    return L;
}

std::vector<SimplexId> Subcomplex::ids() const
{
    std::vector<SimplexId> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < mask_.size(); ++i)
        if (mask_[i])
            out.push_back(static_cast<SimplexId>(i));
    return out;
}

std::vector<std::size_t> Subcomplex::count_by_dim() const
{
    std::vector<std::size_t> counts;
    for (SimplexId id : ids()) {
        auto d = static_cast<std::size_t>(parent_->dim(id));
        if (counts.size() <= d)
            counts.resize(d + 1, 0);
        ++counts[d];
    }
    return counts;
}

int Subcomplex::dimension() const
{
    int d = -1;
    for (SimplexId id : ids())
        d = std::max(d, parent_->dim(id));
    return d;
}

bool Subcomplex::is_face_closed() const
{
    for (SimplexId id : ids())
        for (SimplexId f : parent_->facets(id))
            if (!contains(f))
                return false;
    return true;
}

bool Subcomplex::is_invariant() const
{
    for (SimplexId id : ids())
        for (Element g = 0; g < parent_->group().order(); ++g)
            if (!contains(parent_->act(g, id)))
                return false;
    return true;
}

bool Subcomplex::intersects(const Subcomplex& other) const
{
    for (std::size_t i = 0; i < mask_.size(); ++i)
        if (mask_[i] && other.mask_[i])
            return true;
    return false;
}

GComplex barycentric_subdivision(const GComplex& K)
{
    std::vector<std::string> names;
    names.reserve(K.num_simplices());
    for (const auto& s : K.simplices()) {
        if (s.size() == 1) {
            names.push_back(K.vertex_names()[static_cast<std::size_t>(s[0])]);
            continue;
        }
        std::string n = "b(";
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i)
                n += ",";
            n += K.vertex_names()[static_cast<std::size_t>(s[i])];
        }
        names.push_back(n + ")");
    }

    // Maximal chains: full flags of the maximal simplices.
    std::vector<Simplex> flags;
    for (SimplexId top : K.maximal_simplices()) {
        Simplex verts = K.simplex(top);
        std::sort(verts.begin(), verts.end());
        do {
            Simplex chain;
            Simplex prefix;
            for (Vertex v : verts) {
                prefix.push_back(v);
                Simplex sorted = prefix;
                std::sort(sorted.begin(), sorted.end());
                chain.push_back(K.id_of(sorted));
            }
            std::sort(chain.begin(), chain.end());
            flags.push_back(std::move(chain));
        } while (std::next_permutation(verts.begin(), verts.end()));
    }

    std::vector<std::vector<Vertex>> action;
    for (Element g = 0; g < K.group().order(); ++g) {
        std::vector<Vertex> perm(K.num_simplices());
        for (SimplexId id = 0; id < static_cast<SimplexId>(K.num_simplices()); ++id)
            perm[static_cast<std::size_t>(id)] = K.act(g, id);
        action.push_back(std::move(perm));
    }
    return build_complex(std::move(names), flags, K.group(), std::move(action));
}

Subcomplex subdivide_subcomplex(const GComplex& sd, const Subcomplex& A)
{
    // A chain lies in sd(A) exactly when its top element lies in A.
    std::vector<SimplexId> ids;
    for (SimplexId c = 0; c < static_cast<SimplexId>(sd.num_simplices()); ++c) {
        const Simplex& chain = sd.simplex(c);
        if (A.contains(chain.back()))
            ids.push_back(c);
    }
    return Subcomplex::from_ids(sd, ids);
}

GComplex ensure_regular(const GComplex& K, int* subdivisions_applied)
{
    if (subdivisions_applied)
        *subdivisions_applied = 0;
    if (K.regular())
        return K;
    GComplex current = K;
    for (int round = 1; round <= 2; ++round) {
        current = barycentric_subdivision(current);
        if (subdivisions_applied)
            *subdivisions_applied = round;
        if (current.regular())
            return current;
    }
    throw Error(ErrorKind::RegularizationFailed, "action still irregular after 2 barycentric subdivisions");
}

std::vector<std::string> manifold_warnings(const GComplex& K)
{
    std::vector<std::string> warnings;
    const int d = K.dimension();
    for (SimplexId id : K.maximal_simplices())
        if (K.dim(id) != d) {
            warnings.push_back("complex is not pure: maximal simplex of dimension " + std::to_string(K.dim(id)) +
                               " below top dimension " + std::to_string(d));
            break;
        }
    if (d >= 1) {
        for (SimplexId id : K.of_dim(d - 1))
            if (K.cofacets(id).size() > 2) {
                warnings.push_back("codimension-one simplex " + simplex_str(K.simplex(id)) + " has " +
                                   std::to_string(K.cofacets(id).size()) + " cofaces");
                break;
            }
    }
    if (d >= 2) {
        for (Vertex v = 0; v < static_cast<Vertex>(K.num_vertices()); ++v) {
            // Link vertices joined by link edges must form one connected piece.
            std::vector<Vertex> link_vertices;
            for (SimplexId e : K.cofacets(v))
                for (Vertex w : K.simplex(e))
                    if (w != v)
                        link_vertices.push_back(w);
            if (link_vertices.empty())
                continue;
            std::sort(link_vertices.begin(), link_vertices.end());
            DisjointSets ds(link_vertices.size());
            auto pos = [&](Vertex w) {
                return static_cast<int>(std::lower_bound(link_vertices.begin(), link_vertices.end(), w) - link_vertices.begin());
            };
            for (SimplexId e : K.cofacets(v))
                for (SimplexId t : K.cofacets(e)) {
                    Simplex rest;
                    for (Vertex w : K.simplex(t))
                        if (w != v)
                            rest.push_back(w);
                    ds.unite(pos(rest[0]), pos(rest[1]));
                }
            int root = ds.find(0);
            for (std::size_t i = 1; i < link_vertices.size(); ++i)
                if (ds.find(static_cast<int>(i)) != root) {
                    warnings.push_back("link of vertex " + std::to_string(v) + " is disconnected");
                    return warnings;
                }
        }
    }
    return warnings;
}

std::vector<std::vector<SimplexId>> connected_pieces(const GComplex& K)
{
    DisjointSets ds(K.num_vertices());
    for (SimplexId e : K.of_dim(1))
        ds.unite(K.simplex(e)[0], K.simplex(e)[1]);
    std::map<int, std::vector<SimplexId>> groups;
    for (SimplexId id = 0; id < static_cast<SimplexId>(K.num_simplices()); ++id)
        groups[ds.find(K.simplex(id)[0])].push_back(id);
    std::vector<std::vector<SimplexId>> out;
    for (auto& [root, ids] : groups)
        out.push_back(std::move(ids));
    return out;
}

}  // namespace equiflow
