#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fibercone/field.hpp"
#include "fibercone/pipeline.hpp"

namespace fibercone {

/// Parsed job file.  Line-oriented `key: value` format, `#` comments:
///
///   field: Q            (or "Fp 32003"; default Q)
///   vars: x, y
///   I: x^7 + x^4*y^2 + y^12, x^5*y, ...
///   Q: indices 1, 2     (explicit positions into the I list, 1-based)
///   Q: x^5, y^5         (or expressions, for autocomplete mode)
///   mode: explicit | autocomplete   (optional; inferred from Q)
///   cap: 16             (power cap, optional)
///   socle-cap: 64       (optional)
///   seed: 42            (optional)
struct JobSpec {
    FieldSpec field = FieldSpec::rationals();
    std::vector<std::string> vars;
    std::vector<std::string> ideal_exprs;
    std::vector<std::string> q_exprs;         // autocomplete form
    std::vector<std::size_t> q_positions;     // explicit form, 0-based
    std::optional<PresentationMode> mode;
    std::uint32_t power_cap = 16;
    std::uint32_t socle_cap = 64;
    std::uint64_t seed = 0;

    /// Mode, inferred from which Q form is present when not set explicitly.
    PresentationMode resolved_mode() const;
};

JobSpec parse_job(const std::string& text);
JobSpec parse_job_file(const std::string& path);

} // namespace fibercone
