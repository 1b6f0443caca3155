#include "equiflow/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>

#include "equiflow/error.hpp"

namespace equiflow {

namespace {

std::string triple(int a, int b, int c)
{
    std::ostringstream os;
    os << "(" << a << "," << b << "," << c << ")";
    return os.str();
}

}  // namespace

int max_group_order_from_env()
{
    if (const char* env = std::getenv("EQUIFLOW_MAX_GROUP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v < 100000)
            return static_cast<int>(v);
    }
    return kDefaultMaxGroupOrder;
}

std::vector<std::vector<Element>> FiniteGroup::table() const
{
    std::vector<std::vector<Element>> rows(static_cast<std::size_t>(order_));
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
            rows[static_cast<std::size_t>(a)].push_back(mul(a, b));
    return rows;
}

FiniteGroup build_group(const std::vector<std::vector<int>>& table, std::optional<std::vector<std::string>> names)
{
    const int n = static_cast<int>(table.size());
    if (n == 0)
        throw Error(ErrorKind::MalformedTable, "table is empty");
    for (int a = 0; a < n; ++a) {
        const auto& row = table[static_cast<std::size_t>(a)];
        if (static_cast<int>(row.size()) != n)
            throw Error(ErrorKind::MalformedTable, "row " + std::to_string(a) + " has length " +
                                                       std::to_string(row.size()) + ", expected " + std::to_string(n));
        for (int b = 0; b < n; ++b) {
            int v = row[static_cast<std::size_t>(b)];
            if (v < 0 || v >= n)
                throw Error(ErrorKind::MalformedTable, "entry (" + std::to_string(a) + "," + std::to_string(b) +
                                                           ") = " + std::to_string(v) + " out of range");
        }
    }
    if (names && static_cast<int>(names->size()) != n)
        throw Error(ErrorKind::MalformedTable, "names has " + std::to_string(names->size()) + " entries, expected " +
                                                   std::to_string(n));

    FiniteGroup G;
    G.order_ = n;
    G.table_.reserve(static_cast<std::size_t>(n * n));
    for (const auto& row : table)
        G.table_.insert(G.table_.end(), row.begin(), row.end());

    int identity = -1;
    for (int e = 0; e < n && identity < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            ok = G.mul(e, a) == a && G.mul(a, e) == a;
        if (ok)
            identity = e;
    }
    if (identity < 0)
        throw Error(ErrorKind::NoIdentity, "no element e with e*a = a*e = a for all a");
    G.identity_ = identity;

    G.inverses_.assign(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (G.mul(a, b) == identity && G.mul(b, a) == identity) {
                G.inverses_[static_cast<std::size_t>(a)] = b;
                break;
            }
        }
        if (G.inverses_[static_cast<std::size_t>(a)] < 0)
            throw Error(ErrorKind::NoInverse, "element " + std::to_string(a) + " has no two-sided inverse");
    }

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c)))
                    throw Error(ErrorKind::NotAssociative, "(a*b)*c != a*(b*c) at " + triple(a, b, c));

    if (names) {
        G.names_ = std::move(*names);
    } else {
        for (int a = 0; a < n; ++a)
            G.names_.push_back(std::to_string(a));
    }
    return G;
}

FiniteGroup cyclic_group(int n)
{
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    std::vector<std::string> names;
    for (int a = 0; a < n; ++a) {
        names.push_back(a == 0 ? "e" : (a == 1 ? "r" : "r^" + std::to_string(a)));
        for (int b = 0; b < n; ++b)
            t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
    }
    return build_group(t, names);
}

FiniteGroup dihedral_group(int n)
{
    // element k < n is r^k, element n + k is s r^k; s r = r^-1 s.
    const int N = 2 * n;
    auto decode = [n](int x) { return std::pair{x / n, x % n}; };
    auto encode = [n](int refl, int rot) { return refl * n + ((rot % n) + n) % n; };
    std::vector<std::vector<int>> t(static_cast<std::size_t>(N), std::vector<int>(static_cast<std::size_t>(N)));
    std::vector<std::string> names;
    for (int a = 0; a < N; ++a) {
        auto [sa, ra] = decode(a);
        std::string rot = ra == 0 ? "" : (ra == 1 ? "r" : "r^" + std::to_string(ra));
        names.push_back(sa ? "s" + rot : (ra == 0 ? "e" : rot));
        for (int b = 0; b < N; ++b) {
            auto [sb, rb] = decode(b);
            // (s^sa r^ra)(s^sb r^rb) = s^(sa+sb) r^(±ra + rb)
            int rot_part = sb ? -ra + rb : ra + rb;
            t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = encode((sa + sb) % 2, rot_part);
        }
    }
    return build_group(t, names);
}

FiniteGroup symmetric_group_3()
{
    auto G = dihedral_group(3);
    return G;
}

FiniteGroup quaternion_group()
{
    // Elements: 1, -1, i, -i, j, -j, k, -k encoded as (unit, sign).
    const std::vector<std::string> names{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    // unit product table for 1,i,j,k: value = unit index, sign
    const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    const int unit_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a) {
        for (int b = 0; b < 8; ++b) {
            int ua = a / 2, ub = b / 2;
            int sign = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1) * unit_sign[ua][ub];
            t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = unit_mul[ua][ub] * 2 + (sign < 0 ? 1 : 0);
        }
    }
    return build_group(t, names);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b)
{
    const int na = a.order(), nb = b.order(), N = na * nb;
    std::vector<std::vector<int>> t(static_cast<std::size_t>(N), std::vector<int>(static_cast<std::size_t>(N)));
    std::vector<std::string> names;
    for (int x = 0; x < N; ++x) {
        names.push_back("(" + a.name(x / nb) + "," + b.name(x % nb) + ")");
        for (int y = 0; y < N; ++y)
            t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
                a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    }
    return build_group(t, names);
}

bool Subgroup::contains(Element g) const
{
    return std::binary_search(elements.begin(), elements.end(), g);
}

bool Subgroup::is_subset_of(const Subgroup& other) const
{
    return std::includes(other.elements.begin(), other.elements.end(), elements.begin(), elements.end());
}

bool subgroup_less(const Subgroup& a, const Subgroup& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return a.elements < b.elements;
}

Subgroup trivial_subgroup(const FiniteGroup& G)
{
    return Subgroup{{G.identity()}};
}

Subgroup whole_group(const FiniteGroup& G)
{
    Subgroup H;
    for (int g = 0; g < G.order(); ++g)
        H.elements.push_back(g);
    return H;
}

Subgroup generate(const FiniteGroup& G, const std::vector<Element>& generators)
{
    std::vector<char> in(static_cast<std::size_t>(G.order()), 0);
    std::deque<Element> queue{G.identity()};
    in[static_cast<std::size_t>(G.identity())] = 1;
    while (!queue.empty()) {
        Element x = queue.front();
        queue.pop_front();
        for (Element s : generators) {
            Element y = G.mul(x, s);
            if (!in[static_cast<std::size_t>(y)]) {
                in[static_cast<std::size_t>(y)] = 1;
                queue.push_back(y);
            }
        }
    }
    // Finite group: closure under right multiplication by generators is closed under inverses too.
    Subgroup H;
    for (int g = 0; g < G.order(); ++g)
        if (in[static_cast<std::size_t>(g)])
            H.elements.push_back(g);
    return H;
}

bool is_subgroup(const FiniteGroup& G, const std::vector<Element>& elements)
{
    std::vector<char> in(static_cast<std::size_t>(G.order()), 0);
    for (Element g : elements) {
        if (g < 0 || g >= G.order() || in[static_cast<std::size_t>(g)])
            return false;
        in[static_cast<std::size_t>(g)] = 1;
    }
    if (!in[static_cast<std::size_t>(G.identity())] || G.order() % static_cast<int>(elements.size()) != 0)
        return false;
    for (Element a : elements) {
        if (!in[static_cast<std::size_t>(G.inv(a))])
            return false;
        for (Element b : elements)
            if (!in[static_cast<std::size_t>(G.mul(a, b))])
                return false;
    }
    return true;
}

Subgroup conjugate(const FiniteGroup& G, Element g, const Subgroup& H)
{
    Subgroup K;
    K.elements.reserve(H.size());
    for (Element h : H.elements)
        K.elements.push_back(G.conj(g, h));
    std::sort(K.elements.begin(), K.elements.end());
    return K;
}

Subgroup normalizer(const FiniteGroup& G, const Subgroup& H)
{
    Subgroup N;
    for (int g = 0; g < G.order(); ++g)
        if (conjugate(G, g, H) == H)
            N.elements.push_back(g);
    return N;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b)
{
    Subgroup c;
    std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(),
                          std::back_inserter(c.elements));
    return c;
}

std::vector<Subgroup> subgroups(const FiniteGroup& G, int max_order)
{
    if (G.order() > max_order)
        throw Error(ErrorKind::GroupTooLarge, "group order " + std::to_string(G.order()) +
                                                  " exceeds enumeration bound " + std::to_string(max_order));

    // Every subgroup is the join of the cyclic subgroups it contains, so closing
    // the set {trivial} under "join with a cyclic subgroup" reaches all of them.
    std::set<std::vector<Element>> cyclic_sets;
    std::vector<Element> cyclic_gens;
    for (int g = 0; g < G.order(); ++g) {
        if (cyclic_sets.insert(generate(G, {g}).elements).second)
            cyclic_gens.push_back(g);
    }

    std::set<std::vector<Element>> seen{trivial_subgroup(G).elements};
    std::deque<std::vector<Element>> frontier{trivial_subgroup(G).elements};
    while (!frontier.empty()) {
        std::vector<Element> cur = std::move(frontier.front());
        frontier.pop_front();
        for (Element g : cyclic_gens) {
            if (std::binary_search(cur.begin(), cur.end(), g))
                continue;
            std::vector<Element> gens = cur;
            gens.push_back(g);
            auto joined = generate(G, gens).elements;
            if (seen.insert(joined).second)
                frontier.push_back(std::move(joined));
        }
    }

    std::vector<Subgroup> out;
    out.reserve(seen.size());
    for (const auto& s : seen)
        out.push_back(Subgroup{s});
    std::sort(out.begin(), out.end(), subgroup_less);
    return out;
}

int SubgroupLattice::index_of(const Subgroup& H) const
{
    auto it = lookup_.find(H.elements);
    return it == lookup_.end() ? -1 : it->second;
}

SubgroupLattice conjugacy_classes(const FiniteGroup& G, std::vector<Subgroup> subs)
{
    SubgroupLattice L;
    L.subgroups = std::move(subs);
    for (int i = 0; i < static_cast<int>(L.subgroups.size()); ++i)
        L.lookup_[L.subgroups[static_cast<std::size_t>(i)].elements] = i;

    const int n = static_cast<int>(L.subgroups.size());
    std::vector<int> class_of(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> raw_classes;
    for (int i = 0; i < n; ++i) {
        if (class_of[static_cast<std::size_t>(i)] >= 0)
            continue;
        std::set<int> members;
        for (int g = 0; g < G.order(); ++g) {
            int j = L.index_of(conjugate(G, g, L.subgroups[static_cast<std::size_t>(i)]));
            if (j < 0)
                throw Error(ErrorKind::SchemaError, "subgroup list is not closed under conjugation");
            members.insert(j);
        }
        for (int j : members)
            class_of[static_cast<std::size_t>(j)] = static_cast<int>(raw_classes.size());
        raw_classes.emplace_back(members.begin(), members.end());
    }

    // Members are sorted by subgroup_less, and all members have equal size, so the
    // lexicographically least element set is the first member.
    std::vector<int> order(raw_classes.size());
    for (std::size_t c = 0; c < order.size(); ++c)
        order[c] = static_cast<int>(c);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& ra = L.subgroups[static_cast<std::size_t>(raw_classes[static_cast<std::size_t>(a)].front())];
        const auto& rb = L.subgroups[static_cast<std::size_t>(raw_classes[static_cast<std::size_t>(b)].front())];
        if (ra.size() != rb.size())
            return ra.size() > rb.size();
        return ra.elements < rb.elements;
    });

    L.class_of.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const auto& members = raw_classes[static_cast<std::size_t>(order[pos])];
        OrbitType t;
        t.id = static_cast<int>(pos);
        t.representative = L.subgroups[static_cast<std::size_t>(members.front())];
        t.members = members;
        for (int m : members) {
            t.conjugates.push_back(L.subgroups[static_cast<std::size_t>(m)]);
            L.class_of[static_cast<std::size_t>(m)] = t.id;
        }
        L.classes.push_back(std::move(t));
    }

    const std::size_t k = L.classes.size();
    L.subconjugate.assign(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (const auto& c : L.classes[i].conjugates)
                if (c.is_subset_of(L.classes[j].representative)) {
                    L.subconjugate[i][j] = true;
                    break;
                }
    return L;
}

std::string subgroup_label(const FiniteGroup& G, const Subgroup& H)
{
    if (H.size() == 1)
        return "e";
    bool whole = static_cast<int>(H.size()) == G.order();
    for (Element g : H.elements) {
        if (generate(G, {g}).size() != H.size())
            continue;
        std::string z = "Z/" + std::to_string(H.size());
        return whole ? z : z + "<" + G.name(g) + ">";
    }
    if (whole)
        return "G";
    std::string s = "{";
    for (std::size_t i = 0; i < H.size(); ++i) {
        if (i)
            s += ",";
        s += G.name(H.elements[i]);
    }
    return s + "}";
}

}  // namespace equiflow
