#include "fibercone/pipeline.hpp"

#include <algorithm>
#include <set>

namespace fibercone {

std::vector<Poly> FiberPresentation::q_gens() const {
    std::vector<Poly> out;
    out.reserve(q_positions.size());
    for (std::size_t p : q_positions) out.push_back(gens.at(p));
    return out;
}

IdealSpec FiberPresentation::ideal() const { return IdealSpec::make(base_ring, gens); }

IdealSpec FiberPresentation::reduction() const {
    return IdealSpec::make(base_ring, q_gens());
}

FiberPresentation build_presentation(RingPtr base_ring, const std::vector<Poly>& gens,
                                     PresentationMode mode,
                                     const std::vector<std::size_t>& q_positions,
                                     const std::vector<Poly>& q_gens,
                                     const PipelineOptions& opts) {
    const std::size_t d = base_ring->num_vars();
    FiberPresentation pres;
    pres.base_ring = base_ring;

    if (mode == PresentationMode::explicit_positions) {
        IdealSpec I = IdealSpec::make(base_ring, gens);
        if (q_positions.size() != d)
            throw InputError("need exactly " + std::to_string(d) +
                             " reduction positions (one per variable), got " +
                             std::to_string(q_positions.size()));
        std::set<std::size_t> seen;
        for (std::size_t p : q_positions) {
            if (p >= gens.size())
                throw InputError("reduction position " + std::to_string(p + 1) +
                                 " is outside the generator list");
            if (!seen.insert(p).second)
                throw InputError("duplicate reduction position " + std::to_string(p + 1));
        }
        pres.socle = socle_bound(I, opts.ladder.socle_cap);
        // Minimality: every generator's class must enlarge the span over mI.
        const std::uint32_t D = pres.socle + 2 + opts.ladder.margin;
        std::vector<Poly> m_gens;
        const std::size_t nv = base_ring->num_vars();
        for (const auto& g : I.gens)
            for (std::size_t v = 0; v < nv; ++v)
                m_gens.push_back(g.times_monomial(Monomial::variable(v, nv)));
        SubspaceBasis sweep = ideal_image(base_ring, m_gens, D);
        for (const auto& g : I.gens)
            if (!sweep.insert(g))
                throw InputError("generator list is not minimal: '" + g.to_string() +
                                 "' is redundant modulo m*I and the earlier generators");
        pres.gens = gens;
        pres.q_positions.assign(q_positions.begin(), q_positions.end());
        std::sort(pres.q_positions.begin(), pres.q_positions.end());
    } else {
        if (q_gens.size() != d)
            throw InputError("need exactly " + std::to_string(d) +
                             " reduction generators (one per variable), got " +
                             std::to_string(q_gens.size()));
        // The ideal is generated by the given gens; Q must lie inside it.
        IdealSpec I = IdealSpec::make(base_ring, gens);
        for (const auto& q : q_gens)
            (void)IdealSpec::make(base_ring, {q});  // zero/constant-term validation
        pres.socle = socle_bound(I, opts.ladder.socle_cap);
        const std::uint32_t D = pres.socle + 2 + opts.ladder.margin;
        SubspaceBasis ideal_span = ideal_image(base_ring, I.gens, D);
        for (const auto& q : q_gens)
            if (!ideal_span.contains(q))
                throw InputError("reduction generator '" + q.to_string() +
                                 "' does not lie in the ideal");
        // Greedy completion of Q to a minimal generating set: sweep a basis
        // of I/mI starting from the Q classes, then the gens in given order.
        std::vector<Poly> m_gens;
        const std::size_t nv = base_ring->num_vars();
        for (const auto& g : I.gens)
            for (std::size_t v = 0; v < nv; ++v)
                m_gens.push_back(g.times_monomial(Monomial::variable(v, nv)));
        SubspaceBasis sweep = ideal_image(base_ring, m_gens, D);
        std::vector<Poly> list;
        for (const auto& q : q_gens) {
            if (!sweep.insert(q))
                throw InputError("reduction generators are dependent over m*I; they cannot "
                                 "be part of a minimal generating set");
            list.push_back(q);
        }
        for (const auto& g : I.gens)
            if (sweep.insert(g)) list.push_back(g);
        pres.gens = std::move(list);
        pres.q_positions.resize(d);
        for (std::size_t k = 0; k < d; ++k) pres.q_positions[k] = k;
    }

    pres.presentation_ring = AmbientRing::presentation(pres.gens.size(), base_ring->field());
    return pres;
}

CandidateIdeal build_candidate_ideal(const FiberPresentation& pres, const PowerLadder& ladder) {
    CandidateIdeal out;
    out.selection = select_min_gens(ladder);
    out.relations = candidate_relations(ladder, out.selection, pres.presentation_ring);
    out.gens.reserve(out.relations.size());
    for (const auto& rel : out.relations) out.gens.push_back(rel.relation);
    return out;
}

IdealHandle kernel_oracle(const FiberPresentation& pres, const GroebnerOptions& opts) {
    const std::size_t n = pres.gens.size();
    const std::size_t m = pres.base_ring->num_vars();
    RingPtr elim_ring = AmbientRing::elimination(*pres.base_ring, n);

    // Base variables embed at their elimination-ring positions.
    std::vector<std::optional<std::size_t>> up(m);
    for (std::size_t v = 0; v < m; ++v) up[v] = elim_ring->base_var_index(v);

    Poly t = Poly::variable(elim_ring, elim_ring->t_index());
    std::vector<Poly> rees_gens;
    rees_gens.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Poly xi = Poly::variable(elim_ring, elim_ring->x_var_index(i));
        rees_gens.push_back(xi - pres.gens[i].mapped_to(elim_ring, up) * t);
    }

    IdealHandle graph(elim_ring, std::move(rees_gens), opts);
    IdealHandle rees = eliminate(graph, {elim_ring->t_index()});

    std::vector<std::size_t> base_idx(m);
    for (std::size_t v = 0; v < m; ++v) base_idx[v] = elim_ring->base_var_index(v);
    std::vector<std::optional<std::size_t>> down(elim_ring->num_vars());
    for (std::size_t i = 0; i < n; ++i) down[elim_ring->x_var_index(i)] = i;

    std::vector<Poly> kernel_gens;
    for (const auto& g : rees.gens()) {
        Poly killed = g.with_vars_zeroed(base_idx);
        if (killed.is_zero()) continue;
        kernel_gens.push_back(killed.mapped_to(pres.presentation_ring, down));
    }
    return IdealHandle(pres.presentation_ring, std::move(kernel_gens), opts);
}

CmReport cm_check(const IdealHandle& kernel, const FiberPresentation& pres) {
    const RingPtr& ring = pres.presentation_ring;
    CmReport report;

    std::vector<Poly> current = kernel.gens();
    for (std::size_t p : pres.q_positions) {
        IdealHandle h(ring, current, kernel.options());
        Poly xp = Poly::variable(ring, p);
        IdealHandle colon = ideal_colon(h, IdealHandle(ring, {xp}, kernel.options()));
        if (!ideal_equal(colon, h)) break;
        ++report.regular_prefix;
        current.push_back(std::move(xp));
    }
    report.is_cm = report.regular_prefix == pres.q_positions.size();

    std::vector<Poly> all_vars;
    for (std::size_t i = 0; i < ring->num_vars(); ++i)
        all_vars.push_back(Poly::variable(ring, i));
    IdealHandle socle_colon =
        ideal_colon(kernel, IdealHandle(ring, std::move(all_vars), kernel.options()));
    report.depth_zero = !ideal_equal(socle_colon, kernel);
    return report;
}

VerificationReport verify_theorem(const FiberPresentation& pres, const PipelineOptions& opts) {
    VerificationReport report;
    report.presentation = pres;
    report.socle = pres.socle;

    PowerLadder ladder =
        build_ladder(pres.ideal(), pres.reduction(), opts.ladder, pres.q_positions);
    report.reduction_num = ladder.reduction_number();
    report.new_gen_counts = ladder.new_gen_counts();
    report.candidate = build_candidate_ideal(pres, ladder);
    report.rhs = fiber_colength_rhs(ladder);

    const RingPtr& ring = pres.presentation_ring;
    std::vector<Poly> with_params = report.candidate.gens;
    for (std::size_t p : pres.q_positions) with_params.push_back(Poly::variable(ring, p));
    IdealHandle length_ideal(ring, with_params, opts.groebner);
    report.lhs = artinian_colength(length_ideal);
    report.lengths_equal = report.lhs == report.rhs;

    IdealHandle kernel = kernel_oracle(pres, opts.groebner);
    report.kernel_gens = kernel.groebner().polys();
    IdealHandle candidate(ring, report.candidate.gens, opts.groebner);
    report.candidate_in_kernel = ideal_contains(kernel, candidate);
    report.candidate_equals_kernel = ideal_equal(candidate, kernel);
    report.cm = cm_check(kernel, pres);

    // Consistency facts the construction guarantees; a failure is a defect
    // in the engines, not a property of the input.
    if (!report.candidate_in_kernel)
        throw ConsistencyError("candidate relations escape the kernel oracle");
    for (const auto& mon :
         monomials_of_degree(ring->num_vars(), report.reduction_num + 1)) {
        Poly m = Poly::monomial_term(ring, mon, FieldScalar::one(ring->field()));
        if (!ideal_membership(m, length_ideal))
            throw ConsistencyError("(X)^{r+1} escapes the candidate plus parameters");
    }
    if (report.lhs < report.rhs)
        throw ConsistencyError("length of the candidate quotient fell below 1 + sum(u_i)");
    if (report.cm.is_cm && (!report.lengths_equal || !report.candidate_equals_kernel))
        throw ConsistencyError(
            "Cohen-Macaulay case must force both the length equality and candidate == kernel");
    report.theorem_consistent = true;
    return report;
}

namespace {

// splitmix64; fixed-seed determinism across platforms
std::uint64_t next_random(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace

ReductionSearchResult find_reduction(const IdealSpec& I, std::uint64_t seed,
                                     std::uint32_t attempts, const PipelineOptions& opts) {
    if (attempts == 0) throw InputError("need at least one attempt");
    const std::size_t d = I.ring->num_vars();
    const FieldSpec field = I.ring->field();
    // validates m-primariness up front so each attempt only tests reduction-ness
    (void)socle_bound(I, opts.ladder.socle_cap);

    std::uint64_t state = seed;
    for (std::uint32_t attempt = 1; attempt <= attempts; ++attempt) {
        std::vector<std::vector<long long>> coeffs(d, std::vector<long long>(I.gens.size()));
        std::vector<Poly> q;
        for (std::size_t row = 0; row < d; ++row) {
            Poly sum = Poly::zero(I.ring);
            for (std::size_t k = 0; k < I.gens.size(); ++k) {
                long long c;
                if (field.is_rationals()) {
                    c = static_cast<long long>(next_random(state) % 19ull) - 9;  // [-9, 9]
                } else {
                    c = static_cast<long long>(next_random(state) % field.modulus);
                }
                coeffs[row][k] = c;
                sum += I.gens[k].scaled(FieldScalar::from_integer(c, field));
            }
            q.push_back(std::move(sum));
        }
        try {
            IdealSpec Q = IdealSpec::make(I.ring, q);
            PowerLadder ladder = build_ladder(I, Q, opts.ladder);
            ReductionSearchResult result;
            result.coefficients = std::move(coeffs);
            result.q_gens = std::move(q);
            result.reduction_num = ladder.reduction_number();
            result.attempts_used = attempt;
            return result;
        } catch (const InputError&) {
            // degenerate sample (zero combination); try again
        } catch (const ResourceError&) {
            // not a reduction within the power cap; try again
        }
    }
    throw ResourceError("no reduction found in " + std::to_string(attempts) +
                        " attempts (inconclusive)");
}

} // namespace fibercone
