#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fibercone/cli.hpp"

namespace py = pybind11;
using namespace fibercone;

namespace {

std::string run_text(const std::string& subcommand, const std::string& job_text,
                     std::optional<std::string> field, std::optional<std::uint32_t> power_cap,
                     std::optional<std::uint32_t> socle_cap, std::optional<std::uint64_t> seed,
                     std::uint32_t attempts, std::optional<std::uint32_t> degree_bound,
                     std::optional<std::uint32_t> power) {
    RunOverrides overrides;
    if (field) overrides.field = FieldSpec::parse(*field);
    overrides.power_cap = power_cap;
    overrides.socle_cap = socle_cap;
    overrides.seed = seed;
    overrides.attempts = attempts;
    overrides.degree_bound = degree_bound;
    overrides.power = power;
    JobSpec job = parse_job(job_text);
    return run_job(subcommand, job, overrides).dump();
}

} // namespace

PYBIND11_MODULE(_fibercone, m) {
    m.doc() = "exact fiber-cone computations for m-primary ideals";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

    m.def("run", &run_text,
          py::arg("subcommand"), py::arg("job_text"),
          py::arg("field") = std::nullopt, py::arg("power_cap") = std::nullopt,
          py::arg("socle_cap") = std::nullopt, py::arg("seed") = std::nullopt,
          py::arg("attempts") = 32, py::arg("degree_bound") = std::nullopt,
          py::arg("power") = std::nullopt,
          "Run one subcommand against a job description; returns the machine "
          "report as a JSON string.");

    m.def("render_text",
          [](const std::string& report_json) {
              return render_text(nlohmann::ordered_json::parse(report_json));
          },
          py::arg("report_json"), "Human-readable rendering of a machine report.");
}
