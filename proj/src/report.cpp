#include "equiflow/report.hpp"

#include <fmt/format.h>

#include <cstdlib>
#include <fstream>

#include "equiflow/catalog.hpp"
#include "equiflow/error.hpp"

namespace equiflow {

namespace {

std::string type_label(const Stratification& strat, int type)
{
    const auto& rep = strat.orbit_types()[static_cast<std::size_t>(type)].representative;
    return fmt::format("(H{}) {}", type + 1, subgroup_label(strat.complex().group(), rep));
}

json witness_json(const Stratification& strat, const ComponentWitness& w)
{
    return json{{"orbit_type", w.orbit_type + 1},
                {"isotropy", w.isotropy.elements},
                {"component", w.component},
                {"chi_c", w.chi_c},
                {"dim", w.dim},
                {"open_simplices", w.open_simplices},
                {"least_simplex", simplex_json(strat.complex(), w.least_simplex)}};
}

std::string simplex_text(const GComplex& K, SimplexId id)
{
    return simplex_json(K, id).dump();
}

}  // namespace

std::string command_name(Command c)
{
    switch (c) {
    case Command::Validate: return "validate";
    case Command::Subdivide: return "subdivide";
    case Command::Stratify: return "stratify";
    case Command::Euler: return "euler";
    case Command::DecidePathField: return "decide path-field";
    case Command::DecideCipd: return "decide cipd";
    case Command::ConstructMatching: return "construct matching";
    case Command::ConstructDisplacement: return "construct displacement";
    case Command::VerifyDisplacement: return "verify displacement";
    case Command::Catalog: return "catalog";
    }
    return "unknown";
}

json Report::to_json() const
{
    json j{{"tool", "equiflow"}, {"version", kVersion}, {"command", command}, {"input", input}};
    if (!input_digest.empty())
        j["input_digest"] = input_digest;
    json st = json::object();
    for (const auto& s : stages)
        st[s.name] = s.data;
    j["stages"] = st;
    j["warnings"] = warnings;
    if (verdict) {
        bool decision = command.rfind("decide", 0) == 0;
        j["verdict"] = decision ? (*verdict ? "YES" : "NO") : (*verdict ? "PASS" : "FAIL");
    }
    if (error)
        j["error"] = *error;
    if (artifact)
        j["artifact"] = *artifact;
    return j;
}

json validation_json(const GComplex& input, const GComplex& regular, int subdivisions)
{
    return json{{"vertices", regular.num_vertices()},
                {"simplices_by_dim", regular.count_by_dim()},
                {"dimension", regular.dimension()},
                {"group_order", regular.group().order()},
                {"input_regular", input.regular()},
                {"input_simplices_by_dim", input.count_by_dim()},
                {"subdivisions_applied", subdivisions},
                {"euler_characteristic", regular.euler_characteristic()}};
}

json stratification_json(const Stratification& strat)
{
    const GComplex& K = strat.complex();
    json types = json::array();
    for (std::size_t t = 0; t < strat.orbit_types().size(); ++t) {
        const auto& ot = strat.orbit_types()[t];
        Subgroup N = normalizer(K.group(), ot.representative);
        json comps = json::array();
        for (const auto& c : strat.components(static_cast<int>(t)))
            comps.push_back({{"id", c.id},
                             {"dim", c.dim},
                             {"chi_c", c.chi_c},
                             {"open_simplices", c.open_simplices.size()},
                             {"closure_simplices", c.closure.size()},
                             {"least_simplex", simplex_json(K, c.open_simplices.front())}});
        types.push_back({{"index", t + 1},
                         {"representative", ot.representative.elements},
                         {"label", subgroup_label(K.group(), ot.representative)},
                         {"conjugates", ot.conjugates.size()},
                         {"normalizer_order", N.size()},
                         {"weyl_order", N.size() / ot.representative.size()},
                         {"fixed_dim", strat.fixed(static_cast<int>(t)).dimension()},
                         {"fixed_simplices", strat.fixed(static_cast<int>(t)).size()},
                         {"stratum_simplices", strat.stratum(static_cast<int>(t)).size()},
                         {"components", comps}});
    }
    json filtration = json::array();
    for (std::size_t i = 0; i < strat.orbit_types().size(); ++i)
        filtration.push_back(strat.filtration(static_cast<int>(i)).size());
    return json{{"orbit_types", types}, {"filtration_sizes", filtration}};
}

std::string stratification_table(const Stratification& strat)
{
    std::string out = "orbit types (larger isotropy first)\n";
    out += fmt::format("  {:<24} {:>6} {:>9} {:>10} {:>10}  {}\n", "type", "|WH|", "dim M^H", "#stratum", "#comps",
                       "chi_c per component");
    const GComplex& K = strat.complex();
    for (std::size_t t = 0; t < strat.orbit_types().size(); ++t) {
        const auto& ot = strat.orbit_types()[t];
        std::string chis;
        for (const auto& c : strat.components(static_cast<int>(t)))
            chis += (chis.empty() ? "" : " ") + std::to_string(c.chi_c);
        out += fmt::format("  {:<24} {:>6} {:>9} {:>10} {:>10}  {}\n", type_label(strat, static_cast<int>(t)),
                           normalizer(K.group(), ot.representative).size() / ot.representative.size(),
                           strat.fixed(static_cast<int>(t)).dimension(), strat.stratum(static_cast<int>(t)).size(),
                           strat.components(static_cast<int>(t)).size(), chis);
    }
    return out;
}

json euler_json(const Stratification& strat, const EulerReport& report)
{
    json types = json::array();
    for (const auto& e : report.types) {
        json comps = json::array();
        for (const auto& c : e.components) {
            json jc{{"id", c.id}, {"chi_c", c.chi_c}, {"dim", c.dim}, {"open_simplices", c.open_simplices},
                    {"closed_in_fixed_set", c.closed}};
            if (c.closure_betti)
                jc["closure_betti"] = *c.closure_betti;
            comps.push_back(jc);
        }
        types.push_back({{"index", e.orbit_type + 1},
                         {"label", subgroup_label(strat.complex().group(), e.representative)},
                         {"representative", e.representative.elements},
                         {"chi_fixed", e.chi_fixed},
                         {"fixed_dim", e.fixed_dim},
                         {"abs_chi", e.abs_chi},
                         {"strata_sum", e.strata_sum},
                         {"additive", e.additive()},
                         {"components", comps}});
    }
    return json{{"chi_total", report.chi_total}, {"orbit_types", types}};
}

std::string euler_table(const Stratification& strat, const EulerReport& report)
{
    std::string out = fmt::format("Euler characteristics (chi(M) = {})\n", report.chi_total);
    out += fmt::format("  {:<24} {:>9} {:>8}  {}\n", "type", "chi(M^H)", "abs_chi", "chi_c per component");
    for (const auto& e : report.types) {
        std::string chis;
        for (const auto& c : e.components)
            chis += (chis.empty() ? "" : " ") + std::to_string(c.chi_c);
        out += fmt::format("  {:<24} {:>9} {:>8}  {}\n", type_label(strat, e.orbit_type), e.chi_fixed, e.abs_chi, chis);
    }
    return out;
}

json path_field_json(const Stratification& strat, const PathFieldDecision& d)
{
    json abs = json::array();
    for (const auto& a : d.abs_chi)
        abs.push_back({{"index", a.orbit_type + 1},
                       {"label", subgroup_label(strat.complex().group(), a.representative)},
                       {"abs_chi", a.abs_chi}});
    json wit = json::array();
    for (const auto& w : d.witnesses)
        wit.push_back(witness_json(strat, w));
    return json{{"verdict", to_string(d.verdict)}, {"abs_chi", abs}, {"witnesses", wit}};
}

std::string path_field_table(const Stratification& strat, const PathFieldDecision& d)
{
    std::string out = fmt::format("non-singular equivariant path field: {}\n", to_string(d.verdict));
    for (const auto& a : d.abs_chi)
        out += fmt::format("  {:<24} abs_chi {}\n", type_label(strat, a.orbit_type), a.abs_chi);
    for (const auto& w : d.witnesses)
        out += fmt::format("  witness: {} component {} chi_c {} (least simplex {})\n", type_label(strat, w.orbit_type),
                           w.component, w.chi_c, simplex_text(strat.complex(), w.least_simplex));
    return out;
}

json cipd_json(const Stratification& strat, const CipdDecision& d)
{
    json viol = json::array();
    for (const auto& w : d.violations)
        viol.push_back(witness_json(strat, w));
    json warn = json::array();
    for (const auto& w : d.warnings)
        warn.push_back({{"index", w.orbit_type + 1},
                        {"label", subgroup_label(strat.complex().group(), w.representative)},
                        {"fixed_dim", w.fixed_dim}});
    return json{{"verdict", to_string(d.verdict)},
                {"fixed_set_simplices", d.fixed_set.size()},
                {"violations", viol},
                {"dimension_warnings", warn}};
}

std::string cipd_table(const Stratification& strat, const CipdDecision& d)
{
    std::string out = fmt::format("prescribed fixed set ({} simplices) realizable: {}\n", d.fixed_set.size(),
                                  to_string(d.verdict));
    for (const auto& w : d.violations)
        out += fmt::format("  violation: {} component {} chi_c {} has closure disjoint from A (least simplex {})\n",
                           type_label(strat, w.orbit_type), w.component, w.chi_c,
                           simplex_text(strat.complex(), w.least_simplex));
    return out;
}

json matching_json(const Stratification& strat, const Matching& m, const MatchingCheck& check)
{
    const GComplex& K = strat.complex();
    json pairs = json::array();
    for (auto [lo, hi] : m.pairs())
        pairs.push_back(json::array({K.simplex(lo), K.simplex(hi)}));
    json critical = json::array();
    for (SimplexId s : m.critical())
        critical.push_back(K.simplex(s));
    json comps = json::array();
    for (const auto& c : check.components) {
        json jc{{"orbit_type", c.orbit_type + 1},
                {"component", c.component},
                {"chi_c", c.chi_c},
                {"critical_cells", c.critical_cells},
                {"critical_orbits", c.critical_orbits},
                {"critical_alternating_sum", c.critical_alternating_sum},
                {"closed_in_fixed_set", c.closed}};
        if (c.closed) {
            jc["betti_sum"] = c.betti_sum;
            jc["morse_gap"] = static_cast<long long>(c.critical_cells) - c.betti_sum;
        }
        comps.push_back(jc);
    }
    return json{{"pairs", pairs},
                {"critical", critical},
                {"checks",
                 {{"single_pairing", check.single_pairing},
                  {"stratum_preserving", check.stratum_preserving},
                  {"equivariant", check.equivariant},
                  {"acyclic", check.acyclic},
                  {"euler_identity", check.euler_identity}}},
                {"violations", check.violations},
                {"components", comps},
                {"valid", check.ok()}};
}

std::string matching_table(const Stratification& strat, const Matching& m, const MatchingCheck& check)
{
    std::string out = fmt::format("equivariant matching: {} pairs, {} critical cells, invariants {}\n", m.pairs().size(),
                                  m.critical().size(), check.ok() ? "PASS" : "FAIL");
    out += fmt::format("  {:<24} {:>5} {:>6} {:>9} {:>8} {:>10}\n", "type", "comp", "chi_c", "critical", "orbits",
                       "betti_sum");
    for (const auto& c : check.components)
        out += fmt::format("  {:<24} {:>5} {:>6} {:>9} {:>8} {:>10}\n", type_label(strat, c.orbit_type), c.component,
                           c.chi_c, c.critical_cells, c.critical_orbits, c.closed ? std::to_string(c.betti_sum) : "-");
    for (const auto& v : check.violations)
        out += "  violation: " + v + "\n";
    return out;
}

json certificate_json(const GComplex& K, const DisplacementCertificate& cert)
{
    json singular = json::array();
    for (SimplexId s : cert.singular)
        singular.push_back(K.simplex(s));
    json flagged = json::array();
    for (const auto& chain : cert.flagged_examples) {
        json c = json::array();
        for (SimplexId s : chain)
            c.push_back(K.simplex(s));
        flagged.push_back(c);
    }
    json groups = json::array();
    for (const auto& g : cert.singular_orbits) {
        json orbits = json::array();
        for (SimplexId s : g.orbits)
            orbits.push_back(K.simplex(s));
        groups.push_back({{"orbit_type", g.orbit_type + 1}, {"component", g.component}, {"singular_orbits", orbits}});
    }
    return json{{"result", cert.pass() ? "PASS" : "FAIL"},
                {"checks",
                 {{"total", cert.total},
                  {"chain_monotone", cert.monotone},
                  {"equivariant", cert.equivariant},
                  {"homology_identity", cert.homology_identity}}},
                {"violations", cert.violations},
                {"singular", singular},
                {"chains_checked", cert.chains_checked},
                {"flagged_chains", cert.flagged_chains},
                {"flagged_examples", flagged},
                {"singular_orbits_by_component", groups},
                {"fixed_point_free", cert.fixed_point_free()}};
}

std::string certificate_table(const GComplex& K, const DisplacementCertificate& cert)
{
    std::string out = fmt::format("displacement certificate: {}\n", cert.pass() ? "PASS" : "FAIL");
    out += fmt::format("  singular simplices {}, flagged chains {} of {}\n", cert.singular.size(), cert.flagged_chains,
                       cert.chains_checked);
    for (const auto& g : cert.singular_orbits)
        out += fmt::format("  (H{}) component {}: {} singular orbit(s)\n", g.orbit_type + 1, g.component, g.orbits.size());
    for (const auto& v : cert.violations)
        out += "  violation: " + v + "\n";
    (void)K;
    return out;
}

namespace {

void run_pipeline(const RunConfig& config, Report& report)
{
    if (config.command == Command::Catalog) {
        if (config.input.empty()) {
            report.stages.push_back({"catalog", json{{"names", catalog_names()}}, [] {
                                         std::string t = "catalog entries\n";
                                         for (const auto& n : catalog_names())
                                             t += "  " + n + "\n";
                                         return t;
                                     }()});
            return;
        }
        GComplex K = catalog(config.input);
        report.artifact = complex_to_json(K);
        report.input_digest = sha256_hex(report.artifact->dump());
        report.stages.push_back({"catalog",
                                 json{{"name", config.input},
                                      {"simplices_by_dim", K.count_by_dim()},
                                      {"group_order", K.group().order()},
                                      {"euler_characteristic", K.euler_characteristic()},
                                      {"regular", K.regular()}},
                                 fmt::format("catalog {}: simplices by dim {}, |G| = {}, chi = {}\n", config.input,
                                             json(K.count_by_dim()).dump(), K.group().order(),
                                             K.euler_characteristic())});
        return;
    }

    std::string raw;
    ComplexDocument doc = load_document(config.input, &raw);
    report.input_digest = sha256_hex(raw);

    if (config.command == Command::Subdivide) {
        if (config.times < 0)
            throw Error(ErrorKind::SchemaError, "--times must be nonnegative");
        std::deque<GComplex> rounds;
        rounds.push_back(std::move(doc.complex));
        for (int i = 0; i < config.times; ++i)
            rounds.push_back(barycentric_subdivision(rounds.back()));
        const GComplex& out = rounds.back();
        std::optional<Subcomplex> A;
        if (doc.fixed_set) {
            std::vector<SimplexId> ids;
            for (const auto& s : *doc.fixed_set)
                ids.push_back(rounds.front().id_of(s));
            Subcomplex cur = Subcomplex::closure_of(rounds.front(), ids);
            for (std::size_t i = 1; i < rounds.size(); ++i)
                cur = subdivide_subcomplex(rounds[i], cur);
            A = cur;
        }
        report.artifact = complex_to_json(out, A);
        report.stages.push_back({"subdivision",
                                 json{{"times", config.times},
                                      {"input_simplices_by_dim", rounds.front().count_by_dim()},
                                      {"simplices_by_dim", out.count_by_dim()},
                                      {"euler_characteristic", out.euler_characteristic()},
                                      {"regular", out.regular()}},
                                 fmt::format("subdivided {} time(s): simplices by dim {} -> {}, chi = {}, regular = {}\n",
                                             config.times, json(rounds.front().count_by_dim()).dump(),
                                             json(out.count_by_dim()).dump(), out.euler_characteristic(),
                                             out.regular() ? "yes" : "no")});
        return;
    }

    RegularizedInput input(std::move(doc));
    const GComplex& K = input.complex();
    report.stages.push_back({"validation", validation_json(input.input(), K, input.subdivisions()),
                             fmt::format("complex: {} vertices, simplices by dim {}, dim {}, |G| = {}, chi = {}{}\n",
                                         K.num_vertices(), json(K.count_by_dim()).dump(), K.dimension(),
                                         K.group().order(), K.euler_characteristic(),
                                         input.subdivisions() ? fmt::format(" (regularized by {} subdivision(s))",
                                                                            input.subdivisions())
                                                              : "")});
    if (input.subdivisions() > 0)
        report.warnings.push_back(fmt::format("input action was not regular; applied {} barycentric subdivision(s)",
                                              input.subdivisions()));
    for (auto& w : manifold_warnings(K))
        report.warnings.push_back("manifold check: " + w);
    if (config.command == Command::Validate)
        return;

    if (config.command == Command::VerifyDisplacement) {
        if (!config.map_file)
            throw Error(ErrorKind::SchemaError, "verify displacement needs a map file");
        DisplacementMap F = displacement_from_json(K, read_json_file(*config.map_file));
        auto cert = verify_displacement(K, F);
        report.stages.push_back({"certificate", certificate_json(K, cert), certificate_table(K, cert)});
        report.verdict = cert.pass();
        return;
    }

    Stratification strat = strata(K, config.max_group_order);
    report.stages.push_back({"stratification", stratification_json(strat), stratification_table(strat)});
    if (config.command == Command::Stratify)
        return;

    switch (config.command) {
    case Command::Euler:
    case Command::DecidePathField: {
        auto er = euler_report(strat);
        report.stages.push_back({"euler", euler_json(strat, er), euler_table(strat, er)});
        if (config.command == Command::Euler)
            return;
        auto d = decide_path_field(strat);
        report.stages.push_back({"decision", path_field_json(strat, d), path_field_table(strat, d)});
        report.verdict = d.verdict == Verdict::Yes;
        return;
    }
    case Command::DecideCipd: {
        if (!config.fixed_set)
            throw Error(ErrorKind::SchemaError, "decide cipd needs --fixed-set");
        Subcomplex A = input.select(*config.fixed_set, &strat);
        auto d = decide_cipd(strat, A);
        for (const auto& w : d.warnings)
            report.warnings.push_back(fmt::format(
                "{}: fixed set has dimension {} < 2, outside the criterion's hypothesis; verdict is advisory there",
                type_label(strat, w.orbit_type), w.fixed_dim));
        report.stages.push_back({"decision", cipd_json(strat, d), cipd_table(strat, d)});
        report.verdict = d.verdict == Verdict::Yes;
        return;
    }
    case Command::ConstructMatching: {
        Matching m = build_matching(strat);
        if (config.cancel)
            m = cancel(strat, m);
        auto check = check_matching(strat, m);
        report.stages.push_back({"matching", matching_json(strat, m, check), matching_table(strat, m, check)});
        report.verdict = check.ok();
        return;
    }
    case Command::ConstructDisplacement: {
        std::optional<Subcomplex> A;
        if (config.fixed_set)
            A = input.select(*config.fixed_set, &strat);
        DisplacementMap F = build_displacement(K, A);
        auto cert = verify_displacement(K, F);
        bool holds_A = true;
        if (A)
            for (SimplexId s : A->ids())
                holds_A = holds_A && F(s) == s;
        json data{{"strategies", F.strategies}, {"fixed_set_held", holds_A}, {"certificate", certificate_json(K, cert)}};
        if (!holds_A)
            data["violations"] = json::array({"map moves a simplex of the prescribed fixed set"});
        std::string table;
        for (const auto& s : F.strategies)
            table += "  " + s + "\n";
        report.stages.push_back({"displacement", data, "displacement construction\n" + table + certificate_table(K, cert)});
        report.artifact = displacement_to_json(F);
        report.verdict = cert.pass() && holds_A;
        return;
    }
    default:
        return;
    }
}

}  // namespace

RunResult run(const RunConfig& config)
{
    RunResult result;
    Report& report = result.report;
    report.command = command_name(config.command);
    report.input = config.input;
    try {
        run_pipeline(config, report);
    } catch (const Error& e) {
        report.error = json{{"kind", std::string(to_string(e.kind()))}, {"message", e.message()}};
        report.verdict.reset();
        result.exit_code = 2;
        return result;
    } catch (const json::exception& e) {
        report.error = json{{"kind", "SchemaError"}, {"message", e.what()}};
        report.verdict.reset();
        result.exit_code = 2;
        return result;
    } catch (const std::exception& e) {
        report.error = json{{"kind", "InternalError"}, {"message", e.what()}};
        report.verdict.reset();
        result.exit_code = 2;
        return result;
    }
    result.exit_code = report.verdict.has_value() && !*report.verdict ? 1 : 0;
    return result;
}

std::string render(const Report& report, OutputFormat format)
{
    std::string out;
    if (format == OutputFormat::Table || format == OutputFormat::Both) {
        for (const auto& s : report.stages)
            out += s.table;
        if (!report.warnings.empty()) {
            out += "warnings\n";
            for (const auto& w : report.warnings)
                out += "  - " + w + "\n";
        }
        if (report.verdict) {
            bool decision = report.command.rfind("decide", 0) == 0;
            out += fmt::format("verdict: {}\n", decision ? (*report.verdict ? "YES" : "NO")
                                                         : (*report.verdict ? "PASS" : "FAIL"));
        }
        if (report.error)
            out += fmt::format("error: {}: {}\n", report.error->at("kind").get<std::string>(),
                               report.error->at("message").get<std::string>());
    }
    if (format == OutputFormat::Json || format == OutputFormat::Both)
        out += report.to_json().dump(2) + "\n";
    return out;
}

}  // namespace equiflow
