#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "equiflow/report.hpp"

using namespace equiflow;

namespace {

int emit(RunResult result, OutputFormat format, const std::optional<std::string>& out)
{
    if (out && result.report.artifact && !result.report.error) {
        std::ofstream f(*out, std::ios::binary);
        if (!f) {
            std::cerr << "equiflow: cannot write '" << *out << "'\n";
            return 2;
        }
        f << result.report.artifact->dump(2) << "\n";
        result.report.artifact.reset();
    }
    std::cout << render(result.report, format);
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Equivariant path fields and fixed-point-free deformations on finite G-complexes"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig config;
    config.max_group_order = max_group_order_from_env();
    std::string format = "both";
    std::optional<std::string> out;

    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "table", "both"}))
        ->capture_default_str();
    app.add_option("--max-group", config.max_group_order, "Largest group order for subgroup enumeration")
        ->check(CLI::Range(1, 1 << 20));

    auto* validate = app.add_subcommand("validate", "Parse, check and regularize a G-complex");
    validate->add_option("file", config.input, "Complex JSON or catalog:<name>")->required();

    auto* subdivide = app.add_subcommand("subdivide", "Barycentric subdivision");
    subdivide->add_option("file", config.input)->required();
    subdivide->add_option("--times", config.times, "Number of subdivisions")->check(CLI::NonNegativeNumber);
    subdivide->add_option("--out", out, "Write the subdivided complex here");

    auto* stratify = app.add_subcommand("stratify", "Orbit-type stratification");
    stratify->add_option("file", config.input)->required();

    auto* euler = app.add_subcommand("euler", "Euler characteristics per orbit type");
    euler->add_option("file", config.input)->required();

    auto* decide = app.add_subcommand("decide", "Decision procedures");
    decide->require_subcommand(1);
    auto* path_field = decide->add_subcommand("path-field", "Non-singular equivariant path field");
    path_field->add_option("file", config.input)->required();
    auto* cipd = decide->add_subcommand("cipd", "Prescribed invariant fixed set");
    cipd->add_option("file", config.input)->required();
    cipd->add_option("--fixed-set", config.fixed_set,
                     "input | all | vertex:i[,j] | vertex-orbit:i | simplices:[[..]] | fixed:k")
        ->required();

    auto* construct = app.add_subcommand("construct", "Combinatorial witnesses");
    construct->require_subcommand(1);
    auto* matching = construct->add_subcommand("matching", "Equivariant acyclic matching");
    matching->add_option("file", config.input)->required();
    matching->add_flag("--cancel", config.cancel, "Cancel critical pairs along unique gradient paths");
    auto* displacement = construct->add_subcommand("displacement", "Equivariant displacement map");
    displacement->add_option("file", config.input)->required();
    displacement->add_option("--fixed-set", config.fixed_set, "Invariant subcomplex held fixed");
    displacement->add_option("--out", out, "Write the map here");

    auto* verify = app.add_subcommand("verify", "Certificate checks");
    verify->require_subcommand(1);
    auto* verify_displacement = verify->add_subcommand("displacement", "Verify a displacement map");
    verify_displacement->add_option("file", config.input)->required();
    verify_displacement->add_option("map-file", config.map_file)->required();

    auto* catalog_cmd = app.add_subcommand("catalog", "Built-in examples");
    catalog_cmd->add_option("name", config.input, "Entry name (omit to list)");
    catalog_cmd->add_option("--out", out, "Write the complex here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*validate)
        config.command = Command::Validate;
    else if (*subdivide)
        config.command = Command::Subdivide;
    else if (*stratify)
        config.command = Command::Stratify;
    else if (*euler)
        config.command = Command::Euler;
    else if (*path_field)
        config.command = Command::DecidePathField;
    else if (*cipd)
        config.command = Command::DecideCipd;
    else if (*matching)
        config.command = Command::ConstructMatching;
    else if (*displacement)
        config.command = Command::ConstructDisplacement;
    else if (*verify_displacement)
        config.command = Command::VerifyDisplacement;
    else
        config.command = Command::Catalog;

    config.format = format == "json" ? OutputFormat::Json : format == "table" ? OutputFormat::Table : OutputFormat::Both;
    return emit(run(config), config.format, out);
}
