#include "equiflow/displacement.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "equiflow/error.hpp"
#include "equiflow/invariants.hpp"
#include "equiflow/rational_linalg.hpp"

namespace equiflow {

namespace {

std::string text(const Simplex& s)
{
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + std::to_string(s[i]);
    return out + "]";
}

bool is_subset(const Simplex& a, const Simplex& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// All chains s0 < s1 < ... < sk of simplices in L, each sorted by id.
std::vector<std::vector<SimplexId>> enumerate_chains(const GComplex& K, const std::vector<char>& in)
{
    std::vector<std::vector<std::vector<SimplexId>>> ending_at(K.num_simplices());
    std::vector<std::vector<SimplexId>> all;
    for (SimplexId s = 0; s < static_cast<SimplexId>(K.num_simplices()); ++s) {
        if (!in[static_cast<std::size_t>(s)])
            continue;
        auto& mine = ending_at[static_cast<std::size_t>(s)];
        mine.push_back({s});
        for (SimplexId f : K.faces(s)) {
            if (f == s)
                continue;
            for (const auto& c : ending_at[static_cast<std::size_t>(f)]) {
                auto ext = c;
                ext.push_back(s);
                mine.push_back(std::move(ext));
            }
        }
        all.insert(all.end(), mine.begin(), mine.end());
    }
    return all;
}

/// Whether F restricted to the subdivision of L induces the identity on H_*(sd L; Q).
bool induces_identity(const GComplex& K, const DisplacementMap& F, const std::vector<char>& in)
{
    auto chains = enumerate_chains(K, in);
    std::vector<std::map<std::vector<SimplexId>, int>> index;
    for (const auto& c : chains) {
        std::size_t d = c.size() - 1;
        if (index.size() <= d)
            index.resize(d + 1);
        index[d].emplace(c, 0);
    }
    for (auto& level : index) {
        int i = 0;
        for (auto& [c, pos] : level)
            pos = i++;
    }
    auto boundary = [&](std::size_t d) {
        std::vector<linalg::Column> cols;
        if (d == 0 || d >= index.size())
            return cols;
        for (const auto& [c, pos] : index[d]) {
            linalg::Column col;
            for (std::size_t skip = 0; skip < c.size(); ++skip) {
                std::vector<SimplexId> f;
                for (std::size_t i = 0; i < c.size(); ++i)
                    if (i != skip)
                        f.push_back(c[i]);
                col.emplace(index[d - 1].at(f), skip % 2 == 0 ? 1 : -1);
            }
            cols.push_back(std::move(col));
        }
        return cols;
    };
    auto push_forward = [&](std::size_t d, const linalg::Column& z) {
        std::vector<const std::vector<SimplexId>*> by_pos(index[d].size());
        for (const auto& [c, pos] : index[d])
            by_pos[static_cast<std::size_t>(pos)] = &c;
        linalg::Column out;
        for (const auto& [pos, coeff] : z) {
            const auto& c = *by_pos[static_cast<std::size_t>(pos)];
            std::vector<SimplexId> img;
            for (SimplexId s : c)
                img.push_back(F(s));
            // parity of the sorting permutation; duplicates mean a degenerate simplex.
            int sign = 1;
            for (std::size_t i = 0; i < img.size(); ++i)
                for (std::size_t j = i + 1; j < img.size(); ++j) {
                    if (img[i] == img[j])
                        sign = 0;
                    else if (img[i] > img[j])
                        sign = -sign;
                }
            if (sign == 0)
                continue;
            std::sort(img.begin(), img.end());
            linalg::Column term{{index[d].at(img), coeff * sign}};
            linalg::axpy(out, -1, term);
        }
        return out;
    };

    for (std::size_t d = 0; d < index.size(); ++d) {
        linalg::ReducedMatrix cycles(boundary(d), true);
        std::vector<linalg::Column> cycle_basis = cycles.kernel();
        if (d == 0) {
            cycle_basis.clear();
            for (std::size_t i = 0; i < index[0].size(); ++i)
                cycle_basis.push_back({{static_cast<int>(i), 1}});
        }
        linalg::ReducedMatrix boundaries(boundary(d + 1), false);
        for (const auto& z : cycle_basis) {
            linalg::Column diff = push_forward(d, z);
            linalg::axpy(diff, 1, z);
            if (!boundaries.spans(diff))
                return false;
        }
    }
    return true;
}

DisplacementCertificate verify_impl(const GComplex& K, const DisplacementMap& F, const std::vector<char>* focus)
{
    DisplacementCertificate cert;
    const auto n = static_cast<SimplexId>(K.num_simplices());
    auto note = [&cert](bool& flag, std::string msg) {
        flag = false;
        if (cert.violations.size() < 20)
            cert.violations.push_back(std::move(msg));
    };
    auto focused = [&](SimplexId s) { return !focus || (*focus)[static_cast<std::size_t>(s)]; };

    if (static_cast<SimplexId>(F.image.size()) != n) {
        note(cert.total, "map has " + std::to_string(F.image.size()) + " entries, complex has " + std::to_string(n) +
                             " simplices");
        return cert;
    }
    for (SimplexId s = 0; s < n; ++s)
        if (F(s) < 0 || F(s) >= n)
            note(cert.total, "no image assigned to simplex " + text(K.simplex(s)));
    if (!cert.total)
        return cert;

    for (SimplexId t = 0; t < n; ++t)
        for (SimplexId s : K.faces(t)) {
            if (s == t)
                continue;
            const Simplex& a = K.simplex(F(s));
            const Simplex& b = K.simplex(F(t));
            if (!is_subset(a, b) && !is_subset(b, a))
                note(cert.monotone, "chain monotonicity: F" + text(K.simplex(s)) + " and F" + text(K.simplex(t)) +
                                        " are not nested");
        }

    for (Element g = 0; g < K.group().order(); ++g)
        for (SimplexId s = 0; s < n; ++s)
            if (F(K.act(g, s)) != K.act(g, F(s)))
                note(cert.equivariant, "equivariance: F(g.s) != g.F(s) for g = " + K.group().name(g) +
                                           ", s = " + text(K.simplex(s)));

    for (SimplexId s = 0; s < n; ++s)
        if (F(s) == s && focused(s))
            cert.singular.push_back(s);

    std::vector<char> everything(K.num_simplices(), 1);
    for (const auto& chain : enumerate_chains(K, focus ? *focus : everything)) {
        ++cert.chains_checked;
        bool hit = false;
        for (SimplexId s : chain)
            hit = hit || std::binary_search(chain.begin(), chain.end(), F(s));
        if (hit) {
            ++cert.flagged_chains;
            if (cert.flagged_examples.size() < 10)
                cert.flagged_examples.push_back(chain);
        }
    }

    if (!cert.monotone)
        return cert;

    std::optional<Stratification> strat;
    if (K.regular())
        strat.emplace(strata(K, std::max(K.group().order(), kDefaultMaxGroupOrder)));
    std::vector<std::vector<char>> fixed_sets;
    if (strat) {
        for (std::size_t t = 0; t < strat->orbit_types().size(); ++t) {
            std::vector<char> in(K.num_simplices(), 0);
            for (SimplexId s : strat->fixed(static_cast<int>(t)).ids())
                in[static_cast<std::size_t>(s)] = 1;
            fixed_sets.push_back(std::move(in));
        }
    } else {
        fixed_sets.push_back(everything);
    }
    for (std::size_t t = 0; t < fixed_sets.size(); ++t) {
        const auto& in = fixed_sets[t];
        bool maps_into = true;
        for (SimplexId s = 0; s < n; ++s)
            if (in[static_cast<std::size_t>(s)] && !in[static_cast<std::size_t>(F(s))])
                maps_into = false;
        if (!maps_into)
            note(cert.homology_identity, "F does not map the fixed set of orbit type (H" + std::to_string(t + 1) + ") into itself");
        else if (!induces_identity(K, F, in))
            note(cert.homology_identity,
                 "F is not the identity on rational homology of the fixed set of orbit type (H" +
                     std::to_string(t + 1) + ")");
    }

    if (strat) {
        // Component lookup for representative strata; other simplices are moved there by the action.
        std::map<SimplexId, std::pair<int, int>> where;
        for (std::size_t t = 0; t < strat->orbit_types().size(); ++t)
            for (const auto& c : strat->components(static_cast<int>(t)))
                for (SimplexId s : c.open_simplices)
                    where[s] = {static_cast<int>(t), c.id};
        std::map<std::pair<int, int>, std::set<SimplexId>> groups;
        for (SimplexId s : cert.singular) {
            int type = strat->orbit_type_of(s);
            const Subgroup& rep = strat->orbit_types()[static_cast<std::size_t>(type)].representative;
            for (Element g = 0; g < K.group().order(); ++g)
                if (conjugate(K.group(), g, strat->isotropy(s)) == rep) {
                    groups[where.at(K.act(g, s))].insert(K.orbit(s).front());
                    break;
                }
        }
        for (const auto& [key, orbits] : groups)
            cert.singular_orbits.push_back({key.first, key.second, {orbits.begin(), orbits.end()}});
    }
    return cert;
}

/// Backtracking search for vertex automorphisms of a piece orbit that commute
/// with the group action and move every vertex.
class AutomorphismSearch {
public:
    AutomorphismSearch(const GComplex& K, const std::vector<SimplexId>& piece, long budget)
        : K_(K), budget_(budget), phi_(K.num_vertices(), -1), used_(K.num_vertices(), 0)
    {
        std::set<Vertex> verts;
        in_piece_.assign(K.num_simplices(), 0);
        for (SimplexId s : piece) {
            in_piece_[static_cast<std::size_t>(s)] = 1;
            if (K.dim(s) == 0)
                verts.insert(K.simplex(s)[0]);
        }
        // BFS order so each new vertex has assigned neighbours.
        std::set<Vertex> seen;
        for (Vertex root : verts) {
            if (seen.count(root))
                continue;
            std::deque<Vertex> q{root};
            seen.insert(root);
            while (!q.empty()) {
                Vertex v = q.front();
                q.pop_front();
                order_.push_back(v);
                for (SimplexId e : K.cofacets(v))
                    for (Vertex w : K.simplex(e))
                        if (seen.insert(w).second)
                            q.push_back(w);
            }
        }
        candidates_.assign(verts.begin(), verts.end());
        for (Vertex v : candidates_) {
            std::vector<std::size_t> sig(static_cast<std::size_t>(K.dimension() + 1), 0);
            for (SimplexId s = 0; s < static_cast<SimplexId>(K.num_simplices()); ++s)
                if (std::binary_search(K.simplex(s).begin(), K.simplex(s).end(), v))
                    ++sig[static_cast<std::size_t>(K.dim(s))];
            signature_[v] = std::move(sig);
        }
    }

    /// Calls `accept` on each automorphism found until it returns true or the
    /// budget runs out. Returns whether some automorphism was accepted.
    bool run(const std::function<bool(const std::vector<Vertex>&)>& accept)
    {
        accept_ = &accept;
        return descend(0);
    }

private:
    bool adjacent(Vertex a, Vertex b) const { return a != b && K_.find(a < b ? Simplex{a, b} : Simplex{b, a}) >= 0; }

    bool assign(Vertex v, Vertex w, std::vector<Vertex>& trail)
    {
        for (Element g = 0; g < K_.group().order(); ++g) {
            Vertex gv = K_.vertex_perm(g)[static_cast<std::size_t>(v)];
            Vertex gw = K_.vertex_perm(g)[static_cast<std::size_t>(w)];
            Vertex cur = phi_[static_cast<std::size_t>(gv)];
            if (cur >= 0) {
                if (cur != gw)
                    return false;
                continue;
            }
            if (used_[static_cast<std::size_t>(gw)] || gw == gv)
                return false;
            for (Vertex x : assigned_)
                if (adjacent(x, gv) != adjacent(phi_[static_cast<std::size_t>(x)], gw))
                    return false;
            phi_[static_cast<std::size_t>(gv)] = gw;
            used_[static_cast<std::size_t>(gw)] = 1;
            assigned_.push_back(gv);
            trail.push_back(gv);
        }
        return true;
    }

    void undo(const std::vector<Vertex>& trail)
    {
        for (Vertex x : trail) {
            used_[static_cast<std::size_t>(phi_[static_cast<std::size_t>(x)])] = 0;
            phi_[static_cast<std::size_t>(x)] = -1;
            assigned_.pop_back();
        }
    }

    bool complete() const
    {
        for (SimplexId s = 0; s < static_cast<SimplexId>(K_.num_simplices()); ++s) {
            if (!in_piece_[static_cast<std::size_t>(s)])
                continue;
            Simplex img;
            for (Vertex v : K_.simplex(s))
                img.push_back(phi_[static_cast<std::size_t>(v)]);
            std::sort(img.begin(), img.end());
            SimplexId t = K_.find(img);
            if (t < 0 || t == s)
                return false;
        }
        return true;
    }

    bool descend(std::size_t depth)
    {
        if (--budget_ < 0)
            return false;
        while (depth < order_.size() && phi_[static_cast<std::size_t>(order_[depth])] >= 0)
            ++depth;
        if (depth == order_.size())
            return complete() && (*accept_)(phi_);
        Vertex v = order_[depth];
        for (Vertex w : candidates_) {
            if (used_[static_cast<std::size_t>(w)] || w == v || signature_.at(w) != signature_.at(v))
                continue;
            std::vector<Vertex> trail;
            if (assign(v, w, trail) && descend(depth + 1))
                return true;
            undo(trail);
            if (budget_ < 0)
                return false;
        }
        return false;
    }

    const GComplex& K_;
    long budget_;
    std::vector<Vertex> phi_;
    std::vector<char> used_;
    std::vector<Vertex> assigned_;
    std::vector<Vertex> order_;
    std::vector<Vertex> candidates_;
    std::vector<char> in_piece_;
    std::map<Vertex, std::vector<std::size_t>> signature_;
    const std::function<bool(const std::vector<Vertex>&)>* accept_ = nullptr;
};

std::optional<std::vector<SimplexId>> circle_rotation(const GComplex& K, const std::vector<SimplexId>& piece)
{
    std::vector<Vertex> verts;
    for (SimplexId s : piece) {
        if (K.dim(s) > 1)
            return std::nullopt;
        if (K.dim(s) == 0) {
            if (K.cofacets(s).size() != 2)
                return std::nullopt;
            verts.push_back(K.simplex(s)[0]);
        }
    }
    std::map<Vertex, Vertex> succ;
    auto neighbours = [&](Vertex v) {
        std::vector<Vertex> out;
        for (SimplexId e : K.cofacets(v))
            for (Vertex w : K.simplex(e))
                if (w != v)
                    out.push_back(w);
        std::sort(out.begin(), out.end());
        return out;
    };
    for (Vertex v0 : verts) {
        if (succ.count(v0))
            continue;
        // Orient this circle from its least vertex towards the smaller neighbour.
        std::map<Vertex, Vertex> local;
        Vertex prev = v0, cur = neighbours(v0)[0];
        local[v0] = cur;
        while (cur != v0) {
            auto nb = neighbours(cur);
            Vertex next = nb[0] == prev ? nb[1] : nb[0];
            local[cur] = next;
            prev = cur;
            cur = next;
        }
        for (Element g = 0; g < K.group().order(); ++g) {
            const auto& perm = K.vertex_perm(g);
            for (const auto& [a, b] : local) {
                Vertex ga = perm[static_cast<std::size_t>(a)], gb = perm[static_cast<std::size_t>(b)];
                auto it = succ.find(ga);
                if (it != succ.end() && it->second != gb)
                    return std::nullopt;  // some element reverses a circle
                succ[ga] = gb;
            }
        }
    }
    std::vector<SimplexId> image(K.num_simplices());
    for (SimplexId s = 0; s < static_cast<SimplexId>(K.num_simplices()); ++s)
        image[static_cast<std::size_t>(s)] = s;
    for (SimplexId s : piece) {
        const Simplex& sx = K.simplex(s);
        if (sx.size() == 1) {
            image[static_cast<std::size_t>(s)] = K.id_of({succ.at(sx[0])});
        } else {
            Vertex tail = succ.at(sx[0]) == sx[1] ? sx[0] : sx[1];
            Vertex a = succ.at(tail), b = succ.at(a);
            image[static_cast<std::size_t>(s)] = K.id_of(a < b ? Simplex{a, b} : Simplex{b, a});
        }
    }
    return image;
}

}  // namespace

DisplacementMap DisplacementMap::identity(const GComplex& K)
{
    DisplacementMap F;
    F.complex = &K;
    F.image.resize(K.num_simplices());
    for (SimplexId s = 0; s < static_cast<SimplexId>(K.num_simplices()); ++s)
        F.image[static_cast<std::size_t>(s)] = s;
    return F;
}

std::vector<SimplexId> DisplacementMap::singular() const
{
    std::vector<SimplexId> out;
    for (SimplexId s = 0; s < static_cast<SimplexId>(image.size()); ++s)
        if (image[static_cast<std::size_t>(s)] == s)
            out.push_back(s);
    return out;
}

DisplacementCertificate verify_displacement(const GComplex& K, const DisplacementMap& F)
{
    return verify_impl(K, F, nullptr);
}

DisplacementMap build_displacement(const GComplex& K, const std::optional<Subcomplex>& A, long search_budget)
{
    if (A && !A->is_invariant())
        throw Error(ErrorKind::NotInvariant, "the prescribed fixed set is not G-invariant");
    if (!K.regular())
        throw Error(ErrorKind::IrregularAction, "displacement maps require a regular action");

    DisplacementMap F = DisplacementMap::identity(K);

    const auto pieces = connected_pieces(K);
    std::vector<int> piece_of(K.num_simplices());
    for (std::size_t p = 0; p < pieces.size(); ++p)
        for (SimplexId s : pieces[p])
            piece_of[static_cast<std::size_t>(s)] = static_cast<int>(p);
    std::vector<char> done(pieces.size(), 0);

    for (std::size_t p = 0; p < pieces.size(); ++p) {
        if (done[p])
            continue;
        std::set<int> orbit;
        for (Element g = 0; g < K.group().order(); ++g)
            orbit.insert(piece_of[static_cast<std::size_t>(K.act(g, pieces[p].front()))]);
        std::vector<SimplexId> Q;
        for (int q : orbit) {
            done[static_cast<std::size_t>(q)] = 1;
            Q.insert(Q.end(), pieces[static_cast<std::size_t>(q)].begin(), pieces[static_cast<std::size_t>(q)].end());
        }
        std::sort(Q.begin(), Q.end());
        std::vector<char> focus(K.num_simplices(), 0);
        for (SimplexId s : Q)
            focus[static_cast<std::size_t>(s)] = 1;
        const std::string label = "piece orbit " + std::to_string(F.strategies.size()) + " (" + std::to_string(Q.size()) +
                                  " simplices): ";

        if (A && std::any_of(Q.begin(), Q.end(), [&](SimplexId s) { return A->contains(s); })) {
            F.strategies.push_back(label + "held fixed (meets the prescribed fixed set)");
            continue;
        }

        auto try_candidate = [&](const std::vector<SimplexId>& image) {
            DisplacementMap trial = F;
            for (SimplexId s : Q)
                trial.image[static_cast<std::size_t>(s)] = image[static_cast<std::size_t>(s)];
            auto cert = verify_impl(K, trial, &focus);
            if (cert.fixed_point_free()) {
                F = std::move(trial);
                return true;
            }
            return false;
        };

        bool found = false;
        for (Element g = 0; g < K.group().order() && !found; ++g) {
            if (g == K.group().identity())
                continue;
            if (std::any_of(Q.begin(), Q.end(), [&](SimplexId s) { return K.act(g, s) == s; }))
                continue;
            std::vector<SimplexId> image(K.num_simplices());
            for (SimplexId s = 0; s < static_cast<SimplexId>(K.num_simplices()); ++s)
                image[static_cast<std::size_t>(s)] = K.act(g, s);
            if (try_candidate(image)) {
                F.strategies.push_back(label + "s1 translate by group element " + K.group().name(g));
                found = true;
            }
        }
        if (!found) {
            if (auto image = circle_rotation(K, Q); image && try_candidate(*image)) {
                F.strategies.push_back(label + "s2 circle rotation");
                found = true;
            }
        }
        if (!found) {
            AutomorphismSearch search(K, Q, search_budget);
            int tried = 0;
            found = search.run([&](const std::vector<Vertex>& phi) {
                if (++tried > 64)
                    return true;  // stop searching; reported as not found below
                std::vector<SimplexId> image(K.num_simplices());
                for (SimplexId s = 0; s < static_cast<SimplexId>(K.num_simplices()); ++s) {
                    if (!focus[static_cast<std::size_t>(s)])
                        continue;
                    Simplex img;
                    for (Vertex v : K.simplex(s))
                        img.push_back(phi[static_cast<std::size_t>(v)]);
                    std::sort(img.begin(), img.end());
                    image[static_cast<std::size_t>(s)] = K.id_of(img);
                }
                return try_candidate(image);
            });
            found = found && tried <= 64;
            if (found)
                F.strategies.push_back(label + "s3 commuting automorphism");
        }
        if (!found)
            F.strategies.push_back(label + "s4 identity (no certified displacement found)");
    }
    return F;
}

}  // namespace equiflow
