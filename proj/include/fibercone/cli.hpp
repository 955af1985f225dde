#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"

#include "fibercone/jobspec.hpp"

namespace fibercone {

/// Flag-level overrides applied on top of a job file.
struct RunOverrides {
    std::optional<FieldSpec> field;
    std::optional<std::uint32_t> power_cap;
    std::optional<std::uint32_t> socle_cap;
    std::optional<std::uint64_t> seed;
    std::uint32_t attempts = 32;                 // find-reduction
    std::optional<std::uint32_t> degree_bound;   // hilbert
    std::optional<std::uint32_t> power;          // membership-gap

    JobSpec apply(JobSpec job) const;
};

/// Runs one subcommand (analyze, defining-ideal, oracle, verify, hilbert,
/// find-reduction, membership-gap) and returns the machine report.  All
/// values inside the report are deterministic functions of the job.
nlohmann::ordered_json run_job(const std::string& subcommand, const JobSpec& job,
                               const RunOverrides& overrides = {});

/// Human-readable rendering of a machine report.
std::string render_text(const nlohmann::ordered_json& report);

/// CLI semantics: parse the job file, run, print (text or machine format),
/// and map errors to exit codes: 0 success, 2 input error, 3 resource cap,
/// 4 consistency violation, 1 internal defect.
int run_command(const std::string& subcommand, const std::string& job_path,
                const RunOverrides& overrides, const std::string& format,
                std::ostream& out, std::ostream& err);

} // namespace fibercone
