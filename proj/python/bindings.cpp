#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "equiflow/catalog.hpp"
#include "equiflow/error.hpp"
#include "equiflow/invariants.hpp"
#include "equiflow/io.hpp"
#include "equiflow/report.hpp"

namespace py = pybind11;
using namespace equiflow;

namespace {

Command parse_command(const std::string& name)
{
    static const std::map<std::string, Command> commands{
        {"validate", Command::Validate},
        {"subdivide", Command::Subdivide},
        {"stratify", Command::Stratify},
        {"euler", Command::Euler},
        {"decide path-field", Command::DecidePathField},
        {"decide cipd", Command::DecideCipd},
        {"construct matching", Command::ConstructMatching},
        {"construct displacement", Command::ConstructDisplacement},
        {"verify displacement", Command::VerifyDisplacement},
        {"catalog", Command::Catalog},
    };
    auto it = commands.find(name);
    if (it == commands.end())
        throw py::value_error("unknown command '" + name + "'");
    return it->second;
}

GComplex complex_from_text(const std::string& text)
{
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw Error(ErrorKind::ParseError, "not valid JSON");
    return complex_from_json(j).complex;
}

}  // namespace

PYBIND11_MODULE(_equiflow, m)
{
    m.doc() = "Equivariant path fields and fixed-point-free deformations on finite G-complexes";
    m.attr("__version__") = kVersion;

    static py::exception<Error> error(m, "EquiflowError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = error;
            py::object instance = exc(std::string(e.what()));
            instance.attr("kind") = std::string(to_string(e.kind()));
            PyErr_SetObject(error.ptr(), instance.ptr());
        }
    });

    py::class_<GComplex>(m, "GComplex")
        .def_property_readonly("num_vertices", &GComplex::num_vertices)
        .def_property_readonly("num_simplices", &GComplex::num_simplices)
        .def_property_readonly("dimension", &GComplex::dimension)
        .def_property_readonly("regular", &GComplex::regular)
        .def_property_readonly("group_order", [](const GComplex& K) { return K.group().order(); })
        .def_property_readonly("simplices", &GComplex::simplices)
        .def("count_by_dim", &GComplex::count_by_dim)
        .def("euler_characteristic", &GComplex::euler_characteristic)
        .def("betti", [](const GComplex& K) { return betti(Subcomplex::whole(K)); })
        .def("to_json", [](const GComplex& K) { return complex_to_json(K).dump(); });

    m.def("catalog_names", &catalog_names, "Names of the built-in examples");
    m.def("catalog", &catalog, py::arg("name"), "A built-in example complex");
    m.def("complex_from_json", &complex_from_text, py::arg("text"), "Parse a complex document");
    m.def("barycentric_subdivision", &barycentric_subdivision, py::arg("complex"));
    m.def("ensure_regular", [](const GComplex& K) { return ensure_regular(K); }, py::arg("complex"));

    m.def(
        "run",
        [](const std::string& command, const std::string& input, std::optional<std::string> fixed_set,
           std::optional<std::string> map_file, int times, bool cancel, int max_group) {
            RunConfig config;
            config.command = parse_command(command);
            config.input = input;
            config.fixed_set = std::move(fixed_set);
            config.map_file = std::move(map_file);
            config.times = times;
            config.cancel = cancel;
            config.max_group_order = max_group;
            RunResult result = run(config);
            return py::make_tuple(result.report.to_json().dump(), result.exit_code,
                                  render(result.report, OutputFormat::Table));
        },
        py::arg("command"), py::arg("input"), py::arg("fixed_set") = py::none(), py::arg("map_file") = py::none(),
        py::arg("times") = 1, py::arg("cancel") = false, py::arg("max_group") = kDefaultMaxGroupOrder,
        "Run a pipeline command; returns (report JSON text, exit code, table text)");
}
