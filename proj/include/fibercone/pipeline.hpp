#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fibercone/groebner.hpp"
#include "fibercone/local.hpp"

namespace fibercone {

/// How the reduction Q is specified relative to the ideal generators.
enum class PresentationMode {
    explicit_positions,  // user lists all generators and marks Q's positions
    autocomplete,        // user gives Q generators; tool extends to a minimal list
};

struct PipelineOptions {
    LadderOptions ladder;
    GroebnerOptions groebner;
};

/// A validated minimal presentation of the fiber cone: ordered minimal
/// generators g_1..g_n of I, the positions P of the reduction generators,
/// and the polynomial ring K[X1..Xn] mapping onto F(I) via X_i -> g_i t.
struct FiberPresentation {
    RingPtr base_ring;
    RingPtr presentation_ring;
    std::vector<Poly> gens;               // minimal, validated
    std::vector<std::size_t> q_positions; // ascending, |P| = number of base vars
    std::uint32_t socle = 0;              // cached socle bound of I

    std::vector<Poly> q_gens() const;
    IdealSpec ideal() const;
    IdealSpec reduction() const;
};

/// Validates and assembles the presentation.
///   explicit mode: `gens` is the full ordered list, `q_positions` marks Q.
///   autocomplete: `q_gens` come first, then those `gens` whose image in
///   I/mI extends independence, scanned in the given order.
FiberPresentation build_presentation(RingPtr base_ring, const std::vector<Poly>& gens,
                                     PresentationMode mode,
                                     const std::vector<std::size_t>& q_positions,
                                     const std::vector<Poly>& q_gens,
                                     const PipelineOptions& opts = {});

/// The candidate defining ideal together with its provenance.
struct CandidateIdeal {
    MinGenSelection selection;
    std::vector<ProductRelation> relations;
    std::vector<Poly> gens;  // relation polynomials, presentation ring
};

CandidateIdeal build_candidate_ideal(const FiberPresentation& pres, const PowerLadder& ladder);

/// Independent computation of Ker phi: eliminate t from the ideal
/// (X_i - g_i t) in K[x, t, X] (the Rees presentation), then kill the base
/// variables on the resulting generators.  Killing variables on generators
/// is exact because the quotient map K[x, X] -> K[X] is surjective.
IdealHandle kernel_oracle(const FiberPresentation& pres, const GroebnerOptions& opts = {});

struct CmReport {
    bool is_cm = false;
    std::size_t regular_prefix = 0;  // how many Q-variables passed in sequence
    bool depth_zero = false;
};

/// Tests whether the Q-variable images form a regular sequence on
/// K[X]/kernel, position by position; also tests depth zero via the socle
/// colon (kernel : (X_1..X_n)).
CmReport cm_check(const IdealHandle& kernel, const FiberPresentation& pres);

struct VerificationReport {
    FiberPresentation presentation;
    std::uint32_t socle = 0;
    std::uint32_t reduction_num = 0;
    std::vector<std::uint32_t> new_gen_counts;  // u_1 .. u_{r+1}
    CandidateIdeal candidate;
    std::uint64_t lhs = 0;  // colength of candidate + (X_P)
    std::uint64_t rhs = 0;  // 1 + sum u_i
    bool lengths_equal = false;
    std::vector<Poly> kernel_gens;
    bool candidate_in_kernel = false;
    bool candidate_equals_kernel = false;
    CmReport cm;
    bool theorem_consistent = false;
};

/// Full verification: builds the ladder and candidate ideal, compares the
/// two length computations, runs the kernel oracle and the CM check, and
/// asserts the consistency the length criterion demands:
///   (a) candidate <= kernel, (b) (X)^{r+1} <= candidate + (X_P),
///   (c) lhs >= rhs, (d) if CM then lhs == rhs and candidate == kernel.
/// A violation throws ConsistencyError — it can only mean a defect.
VerificationReport verify_theorem(const FiberPresentation& pres,
                                  const PipelineOptions& opts = {});

struct ReductionSearchResult {
    std::vector<std::vector<long long>> coefficients;  // d rows over the gens
    std::vector<Poly> q_gens;
    std::uint32_t reduction_num = 0;
    std::uint32_t attempts_used = 0;
};

/// Samples d random small-coefficient combinations of the generators until
/// one is a reduction (deterministic in the seed).  Throws ResourceError
/// after the given number of failed attempts.
ReductionSearchResult find_reduction(const IdealSpec& I, std::uint64_t seed,
                                     std::uint32_t attempts,
                                     const PipelineOptions& opts = {});

} // namespace fibercone
