#include "fibercone/cli.hpp"

#include <ostream>
#include <set>
#include <sstream>

#include "fibercone/parse.hpp"

namespace fibercone {

using nlohmann::ordered_json;

JobSpec RunOverrides::apply(JobSpec job) const {
    if (field) job.field = *field;
    if (power_cap) job.power_cap = *power_cap;
    if (socle_cap) job.socle_cap = *socle_cap;
    if (seed) job.seed = *seed;
    return job;
}

namespace {

struct Prepared {
    JobSpec job;
    RingPtr ring;
    std::vector<Poly> ideal_gens;
    PipelineOptions opts;
};

Prepared prepare(const JobSpec& job) {
    Prepared p;
    p.job = job;
    p.ring = AmbientRing::base(job.vars, job.field);
    for (const auto& expr : job.ideal_exprs) p.ideal_gens.push_back(parse_poly(expr, p.ring));
    p.opts.ladder.power_cap = job.power_cap;
    p.opts.ladder.socle_cap = job.socle_cap;
    return p;
}

FiberPresentation make_presentation(const Prepared& p) {
    PresentationMode mode = p.job.resolved_mode();
    std::vector<Poly> q_gens;
    if (mode == PresentationMode::autocomplete)
        for (const auto& expr : p.job.q_exprs) q_gens.push_back(parse_poly(expr, p.ring));
    return build_presentation(p.ring, p.ideal_gens, mode, p.job.q_positions, q_gens, p.opts);
}

ordered_json multiset_json(const IndexMultiset& ms) {
    ordered_json arr = ordered_json::array();
    for (std::size_t idx : ms) arr.push_back(idx + 1);  // 1-based in reports
    return arr;
}

ordered_json poly_list_json(const std::vector<Poly>& polys) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : polys) arr.push_back(p.to_string());
    return arr;
}

ordered_json report_header(const std::string& command, const JobSpec& job,
                           const FiberPresentation& pres) {
    ordered_json j;
    j["schema"] = 1;
    j["command"] = command;
    j["field"] = job.field.to_string();
    j["vars"] = job.vars;
    j["generators"] = poly_list_json(pres.gens);
    ordered_json qpos = ordered_json::array();
    for (std::size_t p : pres.q_positions) qpos.push_back(p + 1);
    j["reduction_positions"] = qpos;
    j["n"] = pres.gens.size();
    j["d"] = pres.q_positions.size();
    j["socle_bound"] = pres.socle;
    return j;
}

void put_ladder(ordered_json& j, const PowerLadder& ladder) {
    j["reduction_number"] = ladder.reduction_number();
    j["new_gen_counts"] = ladder.new_gen_counts();
    j["rhs_colength"] = fiber_colength_rhs(ladder);
}

ordered_json relation_json(const ProductRelation& rel, const MinGenSelection& selection) {
    ordered_json j;
    j["degree"] = rel.power;
    j["indices"] = multiset_json(rel.indices);
    ordered_json min_terms = ordered_json::array();
    if (auto it = selection.chosen.find(rel.power); it != selection.chosen.end()) {
        for (std::size_t k = 0; k < rel.min_gen_coeffs.size(); ++k) {
            if (rel.min_gen_coeffs[k].is_zero()) continue;
            ordered_json term;
            term["product"] = multiset_json(it->second[k]);
            term["coeff"] = rel.min_gen_coeffs[k].to_string();
            min_terms.push_back(std::move(term));
        }
    }
    j["minimal_generator_terms"] = min_terms;
    ordered_json param_terms = ordered_json::array();
    for (const auto& [key, coeff] : rel.param_coeffs) {
        ordered_json term;
        term["position"] = key.first + 1;
        term["product"] = multiset_json(key.second);
        term["coeff"] = coeff.to_string();
        param_terms.push_back(std::move(term));
    }
    j["parameter_terms"] = param_terms;
    j["relation"] = rel.relation.to_string();
    return j;
}

ordered_json cmd_analyze(const Prepared& p) {
    FiberPresentation pres = make_presentation(p);
    PowerLadder ladder =
        build_ladder(pres.ideal(), pres.reduction(), p.opts.ladder, pres.q_positions);
    ordered_json j = report_header("analyze", p.job, pres);
    put_ladder(j, ladder);
    return j;
}

ordered_json cmd_defining_ideal(const Prepared& p) {
    FiberPresentation pres = make_presentation(p);
    PowerLadder ladder =
        build_ladder(pres.ideal(), pres.reduction(), p.opts.ladder, pres.q_positions);
    CandidateIdeal candidate = build_candidate_ideal(pres, ladder);
    ordered_json j = report_header("defining-ideal", p.job, pres);
    put_ladder(j, ladder);
    ordered_json chosen = ordered_json::array();
    for (const auto& [degree, products] : candidate.selection.chosen) {
        ordered_json e;
        e["degree"] = degree;
        ordered_json arr = ordered_json::array();
        for (const auto& ms : products) arr.push_back(multiset_json(ms));
        e["products"] = arr;
        chosen.push_back(std::move(e));
    }
    j["chosen_minimal_generators"] = chosen;
    ordered_json rels = ordered_json::array();
    for (const auto& rel : candidate.relations)
        rels.push_back(relation_json(rel, candidate.selection));
    j["relations"] = rels;
    j["candidate_generators"] = poly_list_json(candidate.gens);
    return j;
}

ordered_json cmd_oracle(const Prepared& p) {
    FiberPresentation pres = make_presentation(p);
    IdealHandle kernel = kernel_oracle(pres, p.opts.groebner);
    ordered_json j = report_header("oracle", p.job, pres);
    j["kernel_generators"] = poly_list_json(kernel.groebner().polys());
    return j;
}

ordered_json cmd_verify(const Prepared& p) {
    FiberPresentation pres = make_presentation(p);
    VerificationReport rep = verify_theorem(pres, p.opts);
    ordered_json j = report_header("verify", p.job, pres);
    j["reduction_number"] = rep.reduction_num;
    j["new_gen_counts"] = rep.new_gen_counts;
    j["candidate_generators"] = poly_list_json(rep.candidate.gens);
    j["lhs_colength"] = rep.lhs;
    j["rhs_colength"] = rep.rhs;
    j["lengths_equal"] = rep.lengths_equal;
    j["kernel_generators"] = poly_list_json(rep.kernel_gens);
    j["candidate_in_kernel"] = rep.candidate_in_kernel;
    j["candidate_equals_kernel"] = rep.candidate_equals_kernel;
    j["is_cohen_macaulay"] = rep.cm.is_cm;
    j["regular_prefix"] = rep.cm.regular_prefix;
    j["depth_zero"] = rep.cm.depth_zero;
    j["theorem_consistent"] = rep.theorem_consistent;
    return j;
}

ordered_json cmd_hilbert(const Prepared& p, const RunOverrides& overrides) {
    FiberPresentation pres = make_presentation(p);
    PowerLadder ladder =
        build_ladder(pres.ideal(), pres.reduction(), p.opts.ladder, pres.q_positions);
    const std::uint32_t bound =
        overrides.degree_bound ? *overrides.degree_bound : ladder.reduction_number() + 2;
    IdealHandle kernel = kernel_oracle(pres, p.opts.groebner);
    std::vector<std::uint64_t> quotient = hilbert_function(kernel, bound);
    std::vector<std::uint64_t> local;
    for (std::uint32_t i = 0; i <= bound; ++i)
        local.push_back(power_min_gen_count(pres.ideal(), i, p.opts.ladder));
    ordered_json j = report_header("hilbert", p.job, pres);
    j["reduction_number"] = ladder.reduction_number();
    j["degree_bound"] = bound;
    j["quotient_hilbert"] = quotient;
    j["local_min_gen_counts"] = local;
    j["agree"] = quotient == local;
    return j;
}

ordered_json cmd_find_reduction(const Prepared& p, const RunOverrides& overrides) {
    IdealSpec I = IdealSpec::make(p.ring, p.ideal_gens);
    std::uint64_t seed = overrides.seed ? *overrides.seed : p.job.seed;
    ReductionSearchResult res = find_reduction(I, seed, overrides.attempts, p.opts);
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "find-reduction";
    j["field"] = p.job.field.to_string();
    j["vars"] = p.job.vars;
    j["generators"] = poly_list_json(p.ideal_gens);
    j["seed"] = seed;
    j["attempts"] = overrides.attempts;
    j["attempts_used"] = res.attempts_used;
    j["coefficients"] = res.coefficients;
    j["reduction_generators"] = poly_list_json(res.q_gens);
    j["reduction_number"] = res.reduction_num;
    return j;
}

ordered_json cmd_membership_gap(const Prepared& p, const RunOverrides& overrides) {
    FiberPresentation pres = make_presentation(p);
    PowerLadder ladder =
        build_ladder(pres.ideal(), pres.reduction(), p.opts.ladder, pres.q_positions);
    const std::uint32_t power =
        overrides.power ? *overrides.power : ladder.reduction_number() + 1;
    MembershipGapReport rep = membership_gap(ladder, power);
    ordered_json j = report_header("membership-gap", p.job, pres);
    j["reduction_number"] = ladder.reduction_number();
    j["power"] = rep.power;
    ordered_json entries = ordered_json::array();
    for (const auto& e : rep.entries) {
        ordered_json entry;
        entry["product"] = multiset_json(e.indices);
        entry["local"] = e.local_member;
        entry["polynomial"] = e.polynomial_member;
        entries.push_back(std::move(entry));
    }
    j["entries"] = entries;
    ordered_json witnesses = ordered_json::array();
    for (const auto& w : rep.witnesses()) witnesses.push_back(multiset_json(w));
    j["witnesses"] = witnesses;
    return j;
}

std::string join_uints(const ordered_json& arr) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i) out << ", ";
        out << arr[i];
    }
    out << ')';
    return out.str();
}

void render_header(std::ostringstream& out, const ordered_json& j) {
    out << "fibercone " << j["command"].get<std::string>() << "\n";
    out << "  field " << j["field"].get<std::string>() << ", vars";
    for (const auto& v : j["vars"]) out << ' ' << v.get<std::string>();
    out << "\n";
    if (!j.contains("reduction_positions")) {
        out << "  generators:\n";
        for (const auto& g : j["generators"]) out << "    " << g.get<std::string>() << "\n";
        return;
    }
    std::set<std::size_t> qpos;
    for (const auto& p : j["reduction_positions"]) qpos.insert(p.get<std::size_t>());
    out << "  generators (n = " << j["n"] << ", d = " << j["d"] << "):\n";
    std::size_t k = 1;
    for (const auto& g : j["generators"]) {
        out << "    g" << k << " = " << g.get<std::string>();
        if (qpos.count(k)) out << "   [reduction]";
        out << "\n";
        ++k;
    }
    out << "  socle bound s = " << j["socle_bound"] << "\n";
}

std::string render_text_impl(const ordered_json& j) {
    std::ostringstream out;
    const std::string command = j["command"].get<std::string>();
    render_header(out, j);

    if (j.contains("reduction_number") && command != "find-reduction") {
        out << "  reduction number r = " << j["reduction_number"];
        if (j.contains("new_gen_counts")) out << ", u = " << join_uints(j["new_gen_counts"]);
        out << "\n";
    }

    if (command == "analyze") {
        out << "  rhs colength 1 + sum(u) = " << j["rhs_colength"] << "\n";
    } else if (command == "defining-ideal") {
        out << "  chosen minimal generators:\n";
        for (const auto& e : j["chosen_minimal_generators"]) {
            out << "    degree " << e["degree"] << ":";
            for (const auto& ms : e["products"]) out << ' ' << join_uints(ms);
            out << "\n";
        }
        out << "  relations:\n";
        for (const auto& rel : j["relations"])
            out << "    " << join_uints(rel["indices"]) << "  ->  "
                << rel["relation"].get<std::string>() << "\n";
        out << "  candidate ideal: " << j["candidate_generators"].size() << " generators\n";
    } else if (command == "oracle") {
        out << "  kernel generators (reduced basis):\n";
        for (const auto& g : j["kernel_generators"])
            out << "    " << g.get<std::string>() << "\n";
    } else if (command == "verify") {
        out << "  candidate ideal: " << j["candidate_generators"].size() << " generators\n";
        for (const auto& g : j["candidate_generators"])
            out << "    " << g.get<std::string>() << "\n";
        out << "  lengths: candidate side " << j["lhs_colength"] << ", ladder side "
            << j["rhs_colength"] << "  ->  "
            << (j["lengths_equal"].get<bool>() ? "equal" : "NOT equal") << "\n";
        out << "  kernel (oracle): " << j["kernel_generators"].size() << " generators\n";
        for (const auto& g : j["kernel_generators"])
            out << "    " << g.get<std::string>() << "\n";
        out << "  candidate in kernel: "
            << (j["candidate_in_kernel"].get<bool>() ? "yes" : "no") << "\n";
        out << "  candidate equals kernel: "
            << (j["candidate_equals_kernel"].get<bool>() ? "yes" : "no") << "\n";
        out << "  Cohen-Macaulay: " << (j["is_cohen_macaulay"].get<bool>() ? "yes" : "no")
            << " (regular prefix " << j["regular_prefix"] << "/" << j["d"] << ")"
            << ", depth zero: " << (j["depth_zero"].get<bool>() ? "yes" : "no") << "\n";
        out << "  theorem consistency: "
            << (j["theorem_consistent"].get<bool>() ? "ok" : "VIOLATED") << "\n";
    } else if (command == "hilbert") {
        out << "  degrees 0.." << j["degree_bound"] << "\n";
        out << "  quotient Hilbert function: " << join_uints(j["quotient_hilbert"]) << "\n";
        out << "  local min-gen counts:      " << join_uints(j["local_min_gen_counts"]) << "\n";
        out << "  agree: " << (j["agree"].get<bool>() ? "yes" : "NO") << "\n";
    } else if (command == "find-reduction") {
        out << "  seed " << j["seed"] << ", attempts used " << j["attempts_used"] << "/"
            << j["attempts"] << "\n";
        out << "  reduction generators:\n";
        for (const auto& g : j["reduction_generators"])
            out << "    " << g.get<std::string>() << "\n";
        out << "  reduction number r = " << j["reduction_number"] << "\n";
    } else if (command == "membership-gap") {
        out << "  power " << j["power"] << ": product in Q*I^" << j["power"].get<int>() - 1
            << " (local vs polynomial)\n";
        for (const auto& e : j["entries"])
            out << "    " << join_uints(e["product"]) << "  local "
                << (e["local"].get<bool>() ? "yes" : "no ") << "  polynomial "
                << (e["polynomial"].get<bool>() ? "yes" : "no") << "\n";
        out << "  witnesses (disagreements): " << j["witnesses"].size() << "\n";
        for (const auto& w : j["witnesses"]) out << "    " << join_uints(w) << "\n";
    }
    return out.str();
}

} // namespace

ordered_json run_job(const std::string& subcommand, const JobSpec& raw_job,
                     const RunOverrides& overrides) {
    JobSpec job = overrides.apply(raw_job);
    Prepared p = prepare(job);
    if (subcommand == "analyze") return cmd_analyze(p);
    if (subcommand == "defining-ideal") return cmd_defining_ideal(p);
    if (subcommand == "oracle") return cmd_oracle(p);
    if (subcommand == "verify") return cmd_verify(p);
    if (subcommand == "hilbert") return cmd_hilbert(p, overrides);
    if (subcommand == "find-reduction") return cmd_find_reduction(p, overrides);
    if (subcommand == "membership-gap") return cmd_membership_gap(p, overrides);
    throw InputError("unknown subcommand '" + subcommand + "'");
}

std::string render_text(const ordered_json& report) { return render_text_impl(report); }

int run_command(const std::string& subcommand, const std::string& job_path,
                const RunOverrides& overrides, const std::string& format,
                std::ostream& out, std::ostream& err) {
    try {
        if (format != "text" && format != "machine")
            throw InputError("unknown format '" + format + "' (use text or machine)");
        JobSpec job = parse_job_file(job_path);
        ordered_json report = run_job(subcommand, job, overrides);
        if (format == "machine")
            out << report.dump(2) << "\n";
        else
            out << render_text(report);
        return 0;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const ConsistencyError& e) {
        err << "consistency violation: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace fibercone
