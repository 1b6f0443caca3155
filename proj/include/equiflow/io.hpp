#pragma once

#include <deque>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "equiflow/complex.hpp"
#include "equiflow/displacement.hpp"
#include "equiflow/group.hpp"
#include "equiflow/stratify.hpp"

namespace equiflow {

using json = nlohmann::json;

/// { "order": n, "table": [[...]], "names": [...] }
FiniteGroup group_from_json(const json& j);
json group_to_json(const FiniteGroup& G);

struct ComplexDocument {
    GComplex complex;
    /// Optional "fixed_set" entry: simplices (vertex lists) whose closure is A.
    std::optional<std::vector<Simplex>> fixed_set;
};

/// { "vertices": [...], "maximal_simplices": [[...]], "group": {...},
///   "action": { "<element>": [perm...] }, "fixed_set": [[...]] }
/// Missing "group"/"action" means the trivial group. Throws SchemaError.
ComplexDocument complex_from_json(const json& j);
json complex_to_json(const GComplex& K, const std::optional<Subcomplex>& fixed_set = std::nullopt);

json simplex_json(const GComplex& K, SimplexId id);

/// { "assignment": [ { "simplex": [...], "image": [...] }, ... ] }
json displacement_to_json(const DisplacementMap& F);
DisplacementMap displacement_from_json(const GComplex& K, const json& j);

/// Reads a file or a "catalog:<name>" reference. Throws ParseError on I/O or
/// JSON syntax problems. `raw` receives the bytes that were parsed.
ComplexDocument load_document(const std::string& source, std::string* raw = nullptr);
json read_json_file(const std::string& path, std::string* raw = nullptr);

/// Hex SHA-256 of the given bytes.
std::string sha256_hex(const std::string& bytes);

/**
 * An input complex carried through regularization.
 *
 * Keeps every intermediate subdivision alive (Subcomplex and Stratification
 * refer to complexes by address) and can transport subcomplexes of the input
 * to the final regular complex.
 */
class RegularizedInput {
public:
    explicit RegularizedInput(ComplexDocument doc, bool regularize = true);
    RegularizedInput(const RegularizedInput&) = delete;
    RegularizedInput& operator=(const RegularizedInput&) = delete;
    RegularizedInput(RegularizedInput&&) = default;

    const GComplex& input() const { return stages_.front(); }
    const GComplex& complex() const { return stages_.back(); }
    int subdivisions() const { return static_cast<int>(stages_.size()) - 1; }
    const std::optional<std::vector<Simplex>>& document_fixed_set() const { return fixed_set_; }

    /// Image in complex() of a subcomplex of input().
    Subcomplex transport(const Subcomplex& A) const;

    /// Resolves a fixed-set selector:
    ///   input            the document's "fixed_set"
    ///   all              the whole complex
    ///   vertex:i[,j..]   closure of the given input vertices
    ///   vertex-orbit:i   closure of the orbit of input vertex i
    ///   simplices:[[..]] closure of inline input simplices
    ///   fixed:k          M^H for the k-th orbit type (1-based, filtration order)
    Subcomplex select(const std::string& selector, const Stratification* strat) const;

private:
    std::deque<GComplex> stages_;
    std::optional<std::vector<Simplex>> fixed_set_;
};

}  // namespace equiflow
