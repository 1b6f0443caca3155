#include "equiflow/io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "equiflow/catalog.hpp"
#include "equiflow/error.hpp"

namespace equiflow {

namespace {

[[noreturn]] void schema(const std::string& msg)
{
    throw Error(ErrorKind::SchemaError, msg);
}

std::vector<std::vector<int>> int_matrix(const json& j, const std::string& what)
{
    if (!j.is_array())
        schema(what + " must be an array of arrays");
    std::vector<std::vector<int>> out;
    for (const auto& row : j) {
        if (!row.is_array())
            schema(what + " must be an array of arrays");
        std::vector<int> r;
        for (const auto& v : row) {
            if (!v.is_number_integer())
                schema(what + " entries must be integers");
            r.push_back(v.get<int>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

Simplex sorted_simplex(std::vector<int> s)
{
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace

FiniteGroup group_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("table"))
        schema("group must be an object with a \"table\"");
    auto table = int_matrix(j.at("table"), "group.table");
    if (j.contains("order")) {
        if (!j.at("order").is_number_integer() || j.at("order").get<long long>() != static_cast<long long>(table.size()))
            schema("group.order does not match the table size");
    }
    std::optional<std::vector<std::string>> names;
    if (j.contains("names")) {
        if (!j.at("names").is_array())
            schema("group.names must be an array of strings");
        names.emplace();
        for (const auto& n : j.at("names")) {
            if (!n.is_string())
                schema("group.names must be an array of strings");
            names->push_back(n.get<std::string>());
        }
    }
    return build_group(table, names);
}

json group_to_json(const FiniteGroup& G)
{
    return json{{"order", G.order()}, {"table", G.table()}, {"names", G.names()}};
}

ComplexDocument complex_from_json(const json& j)
{
    if (!j.is_object())
        schema("complex document must be a JSON object");
    if (!j.contains("vertices") || !j.contains("maximal_simplices"))
        schema("complex document needs \"vertices\" and \"maximal_simplices\"");

    std::vector<std::string> names;
    const json& jv = j.at("vertices");
    if (jv.is_number_integer()) {
        for (int v = 0; v < jv.get<int>(); ++v)
            names.push_back(std::to_string(v));
    } else if (jv.is_array()) {
        for (const auto& n : jv) {
            if (n.is_string())
                names.push_back(n.get<std::string>());
            else if (n.is_number_integer())
                names.push_back(std::to_string(n.get<long long>()));
            else
                schema("vertex names must be strings");
        }
    } else {
        schema("\"vertices\" must be an array of names or a count");
    }

    auto maximal = int_matrix(j.at("maximal_simplices"), "maximal_simplices");

    FiniteGroup G = j.contains("group") ? group_from_json(j.at("group")) : cyclic_group(1);
    std::vector<std::vector<Vertex>> action(static_cast<std::size_t>(G.order()));
    std::vector<Vertex> identity(names.size());
    for (std::size_t v = 0; v < names.size(); ++v)
        identity[v] = static_cast<Vertex>(v);
    if (j.contains("action")) {
        const json& ja = j.at("action");
        if (!ja.is_object())
            schema("\"action\" must map element indices to permutations");
        for (auto it = ja.begin(); it != ja.end(); ++it) {
            int g = -1;
            try {
                std::size_t used = 0;
                g = std::stoi(it.key(), &used);
                if (used != it.key().size())
                    g = -1;
            } catch (const std::exception&) {
                g = -1;
            }
            if (g < 0 || g >= G.order())
                schema("action key '" + it.key() + "' is not a group element index");
            std::vector<Vertex> perm;
            if (!it.value().is_array())
                schema("action permutations must be integer arrays");
            for (const auto& v : it.value()) {
                if (!v.is_number_integer())
                    schema("action permutations must be integer arrays");
                perm.push_back(v.get<int>());
            }
            action[static_cast<std::size_t>(g)] = std::move(perm);
        }
    }
    for (Element g = 0; g < G.order(); ++g) {
        if (!action[static_cast<std::size_t>(g)].empty())
            continue;
        if (g == G.identity())
            action[static_cast<std::size_t>(g)] = identity;
        else
            schema("no permutation given for group element " + std::to_string(g));
    }

    ComplexDocument doc{build_complex(std::move(names), maximal, std::move(G), std::move(action)), std::nullopt};
    if (j.contains("fixed_set") && !j.at("fixed_set").is_null()) {
        doc.fixed_set.emplace();
        for (auto& s : int_matrix(j.at("fixed_set"), "fixed_set"))
            doc.fixed_set->push_back(sorted_simplex(std::move(s)));
    }
    return doc;
}

json simplex_json(const GComplex& K, SimplexId id)
{
    return json(K.simplex(id));
}

json complex_to_json(const GComplex& K, const std::optional<Subcomplex>& fixed_set)
{
    json maximal = json::array();
    for (SimplexId id : K.maximal_simplices())
        maximal.push_back(K.simplex(id));
    json action = json::object();
    for (Element g = 0; g < K.group().order(); ++g)
        action[std::to_string(g)] = K.vertex_perm(g);
    json j{{"vertices", K.vertex_names()},
           {"maximal_simplices", maximal},
           {"group", group_to_json(K.group())},
           {"action", action}};
    if (fixed_set) {
        json fs = json::array();
        for (SimplexId id : fixed_set->ids()) {
            bool maximal_in_A = true;
            for (SimplexId c : K.cofacets(id))
                maximal_in_A = maximal_in_A && !fixed_set->contains(c);
            if (maximal_in_A)
                fs.push_back(K.simplex(id));
        }
        j["fixed_set"] = fs;
    }
    return j;
}

json displacement_to_json(const DisplacementMap& F)
{
    json assignment = json::array();
    for (SimplexId s = 0; s < static_cast<SimplexId>(F.image.size()); ++s)
        assignment.push_back({{"simplex", F.complex->simplex(s)}, {"image", F.complex->simplex(F(s))}});
    return json{{"assignment", assignment}};
}

DisplacementMap displacement_from_json(const GComplex& K, const json& j)
{
    if (!j.is_object() || !j.contains("assignment") || !j.at("assignment").is_array())
        schema("displacement map needs an \"assignment\" array");
    DisplacementMap F;
    F.complex = &K;
    F.image.assign(K.num_simplices(), -1);
    for (const auto& entry : j.at("assignment")) {
        if (!entry.is_object() || !entry.contains("simplex") || !entry.contains("image"))
            schema("assignment entries need \"simplex\" and \"image\"");
        auto s = sorted_simplex(entry.at("simplex").get<std::vector<int>>());
        auto t = sorted_simplex(entry.at("image").get<std::vector<int>>());
        SimplexId sid = K.id_of(s);
        SimplexId tid = K.find(t);
        F.image[static_cast<std::size_t>(sid)] = tid;  // -1 is reported by the verifier
    }
    return F;
}

std::string sha256_hex(const std::string& bytes)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i)
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return os.str();
}

json read_json_file(const std::string& path, std::string* raw)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw Error(ErrorKind::ParseError, "'" + path + "' is not valid JSON");
    if (raw)
        *raw = std::move(text);
    return j;
}

ComplexDocument load_document(const std::string& source, std::string* raw)
{
    const std::string prefix = "catalog:";
    if (source.rfind(prefix, 0) == 0) {
        GComplex K = catalog(source.substr(prefix.size()));
        if (raw)
            *raw = complex_to_json(K).dump();
        return ComplexDocument{std::move(K), std::nullopt};
    }
    return complex_from_json(read_json_file(source, raw));
}

RegularizedInput::RegularizedInput(ComplexDocument doc, bool regularize) : fixed_set_(std::move(doc.fixed_set))
{
    stages_.push_back(std::move(doc.complex));
    if (!regularize || stages_.back().regular())
        return;
    for (int round = 0; round < 2 && !stages_.back().regular(); ++round)
        stages_.push_back(barycentric_subdivision(stages_.back()));
    if (!stages_.back().regular())
        throw Error(ErrorKind::RegularizationFailed, "action still irregular after 2 barycentric subdivisions");
}

Subcomplex RegularizedInput::transport(const Subcomplex& A) const
{
    Subcomplex current = A;
    for (std::size_t i = 1; i < stages_.size(); ++i)
        current = subdivide_subcomplex(stages_[i], current);
    return current;
}

Subcomplex RegularizedInput::select(const std::string& selector, const Stratification* strat) const
{
    const GComplex& K0 = input();
    auto colon = selector.find(':');
    const std::string kind = selector.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : selector.substr(colon + 1);

    auto closure_of_simplices = [&](const std::vector<Simplex>& simplices) {
        std::vector<SimplexId> ids;
        for (const auto& s : simplices)
            ids.push_back(K0.id_of(sorted_simplex(s)));
        return transport(Subcomplex::closure_of(K0, ids));
    };
    auto parse_vertex = [&](const std::string& text) {
        try {
            std::size_t used = 0;
            int v = std::stoi(text, &used);
            if (used == text.size() && v >= 0 && v < static_cast<int>(K0.num_vertices()))
                return v;
        } catch (const std::exception&) {
        }
        throw Error(ErrorKind::SchemaError, "'" + text + "' is not a vertex of the input complex");
    };

    if (kind == "input") {
        if (!fixed_set_)
            throw Error(ErrorKind::SchemaError, "input document has no \"fixed_set\"");
        return closure_of_simplices(*fixed_set_);
    }
    if (kind == "all")
        return Subcomplex::whole(complex());
    if (kind == "vertex") {
        std::vector<Simplex> simplices;
        std::stringstream ss(arg);
        std::string item;
        while (std::getline(ss, item, ','))
            simplices.push_back({parse_vertex(item)});
        if (simplices.empty())
            throw Error(ErrorKind::SchemaError, "vertex: selector needs at least one vertex");
        return closure_of_simplices(simplices);
    }
    if (kind == "vertex-orbit") {
        Vertex v = parse_vertex(arg);
        std::set<Vertex> orbit;
        for (Element g = 0; g < K0.group().order(); ++g)
            orbit.insert(K0.vertex_perm(g)[static_cast<std::size_t>(v)]);
        std::vector<Simplex> simplices;
        for (Vertex w : orbit)
            simplices.push_back({w});
        return closure_of_simplices(simplices);
    }
    if (kind == "simplices") {
        json j = json::parse(arg, nullptr, false);
        if (j.is_discarded())
            throw Error(ErrorKind::ParseError, "simplices: selector is not valid JSON");
        return closure_of_simplices(int_matrix(j, "simplices selector"));
    }
    if (kind == "fixed") {
        if (!strat)
            throw Error(ErrorKind::SchemaError, "fixed: selector needs a stratification");
        int k = 0;
        try {
            k = std::stoi(arg);
        } catch (const std::exception&) {
            k = 0;
        }
        if (k < 1 || k > static_cast<int>(strat->orbit_types().size()))
            throw Error(ErrorKind::SchemaError, "fixed:" + arg + " names no orbit type (have " +
                                                    std::to_string(strat->orbit_types().size()) + ")");
        return strat->fixed(k - 1);
    }
    throw Error(ErrorKind::SchemaError, "unknown fixed-set selector '" + selector + "'");
}

}  // namespace equiflow
