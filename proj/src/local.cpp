#include "fibercone/local.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "fibercone/groebner.hpp"

namespace fibercone {

namespace {

std::string multiset_string(const IndexMultiset& ms) {
    std::ostringstream out;
    out << '(';
    for (std::size_t k = 0; k < ms.size(); ++k) {
        if (k) out << ',';
        out << ms[k] + 1;  // 1-based for messages
    }
    out << ')';
    return out.str();
}

Monomial multiset_monomial(const IndexMultiset& ms, std::size_t n) {
    std::vector<std::uint32_t> e(n, 0);
    for (std::size_t idx : ms) {
        internal_check(idx < n, "generator index out of range");
        ++e[idx];
    }
    return Monomial(std::move(e));
}

/// Variable multiples of every product: generators of m*I^i.
std::vector<Poly> m_multiples(const RingPtr& ring, const std::vector<Poly>& polys) {
    const std::size_t nv = ring->num_vars();
    std::vector<Poly> out;
    out.reserve(polys.size() * nv);
    for (const auto& p : polys)
        for (std::size_t v = 0; v < nv; ++v)
            out.push_back(p.times_monomial(Monomial::variable(v, nv)));
    return out;
}

} // namespace

IdealSpec IdealSpec::make(RingPtr ring, std::vector<Poly> gens) {
    internal_check(static_cast<bool>(ring), "ideal needs a ring");
    if (ring->role() != RingRole::base)
        throw InputError("ideal generators must live in the base ring");
    if (gens.empty()) throw InputError("ideal needs at least one generator");
    for (const auto& g : gens) {
        internal_check(static_cast<bool>(g.ring()), "generator without a ring");
        if (!g.ring()->same_as(*ring))
            throw InputError("ideal generators must all live in one ring");
        if (g.is_zero())
            throw InputError("zero polynomial is not allowed as an ideal generator");
        for (const auto& t : g.terms())
            if (t.mon.is_unit())
                throw InputError("generator '" + g.to_string() +
                                 "' has a nonzero constant term (not in the maximal ideal)");
    }
    return IdealSpec{std::move(ring), std::move(gens)};
}

std::vector<IndexMultiset> index_multisets(std::size_t n, std::uint32_t k) {
    internal_check(n > 0, "multisets over an empty index set");
    std::vector<IndexMultiset> out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    IndexMultiset cur(k, 0);
    for (;;) {
        out.push_back(cur);
        // advance: find rightmost position that can grow, reset the tail
        std::size_t pos = k;
        while (pos-- > 0) {
            if (cur[pos] + 1 < n) {
                std::size_t v = cur[pos] + 1;
                for (std::size_t j = pos; j < k; ++j) cur[j] = v;
                break;
            }
            if (pos == 0) return out;
        }
    }
}

const Poly& LadderLevel::product_for(const IndexMultiset& ms) const {
    auto it = index_of.find(ms);
    internal_check(it != index_of.end(), "unknown product multiset");
    return product_polys[it->second];
}

const LadderLevel& PowerLadder::level(std::uint32_t power) const {
    internal_check(power >= 1 && power <= levels_.size(), "ladder level out of range");
    return levels_[power - 1];
}

std::vector<std::uint32_t> PowerLadder::new_gen_counts() const {
    std::vector<std::uint32_t> u;
    u.reserve(levels_.size());
    for (const auto& lv : levels_) u.push_back(lv.new_gen_count);
    return u;
}

std::uint32_t socle_bound(const IdealSpec& I, std::uint32_t cap) {
    const std::size_t nv = I.ring->num_vars();
    for (std::uint32_t s = 1; s <= cap; ++s) {
        // m^s <= I holds iff m^s <= I + m^{s+1} (Nakayama), which is a
        // finite check in K[x]/m^{s+1}.
        SubspaceBasis image = ideal_image(I.ring, I.gens, s + 1);
        bool all_in = true;
        for (const auto& mon : monomials_of_degree(nv, s)) {
            Poly m = Poly::monomial_term(I.ring, mon, FieldScalar::one(I.ring->field()));
            if (!image.contains(m)) {
                all_in = false;
                break;
            }
        }
        if (all_in) return s;
    }
    throw InputError("no power of the maximal ideal below the socle cap (" +
                     std::to_string(cap) + ") lies in the ideal; it is likely not m-primary");
}

PowerLadder build_ladder(const IdealSpec& I, const IdealSpec& Q, const LadderOptions& opts,
                         std::optional<std::vector<std::size_t>> q_positions) {
    if (!I.ring->same_as(*Q.ring))
        throw InputError("ideal and reduction must live in the same ring");
    const std::size_t d = I.ring->num_vars();
    if (Q.gens.size() != d)
        throw InputError("a parameter reduction needs exactly " + std::to_string(d) +
                         " generators (one per variable), got " +
                         std::to_string(Q.gens.size()));
    if (q_positions) {
        if (q_positions->size() != Q.gens.size())
            throw InputError("reduction position list does not match the reduction generators");
        std::set<std::size_t> seen;
        for (std::size_t k = 0; k < q_positions->size(); ++k) {
            std::size_t pos = (*q_positions)[k];
            if (pos >= I.gens.size() || !seen.insert(pos).second)
                throw InputError("invalid reduction position " + std::to_string(pos + 1));
            if (I.gens[pos] != Q.gens[k])
                throw InputError("reduction generator " + std::to_string(k + 1) +
                                 " does not match ideal generator at position " +
                                 std::to_string(pos + 1));
        }
    }

    PowerLadder ladder;
    ladder.ideal_ = I;
    ladder.reduction_ = Q;
    ladder.socle_ = socle_bound(I, opts.socle_cap);
    ladder.q_positions_ = std::move(q_positions);

    const std::size_t n = I.gens.size();
    const Poly one = Poly::constant(I.ring, FieldScalar::one(I.ring->field()));

    for (std::uint32_t i = 1; i <= opts.power_cap; ++i) {
        const LadderLevel* prev = ladder.levels_.empty() ? nullptr : &ladder.levels_.back();
        TruncationContext ctx{ladder.socle_, i, opts.margin};
        const std::uint32_t D = ctx.degree();

        std::vector<IndexMultiset> products = index_multisets(n, i);
        std::vector<Poly> product_polys;
        product_polys.reserve(products.size());
        std::map<IndexMultiset, std::size_t> index_of;
        for (std::size_t k = 0; k < products.size(); ++k) {
            const IndexMultiset& ms = products[k];
            if (i == 1) {
                product_polys.push_back(I.gens[ms[0]]);
            } else {
                IndexMultiset prefix(ms.begin(), ms.end() - 1);
                product_polys.push_back(prev->product_for(prefix) * I.gens[ms.back()]);
            }
            index_of.emplace(ms, k);
        }

        std::vector<Poly> m_gens = m_multiples(I.ring, product_polys);
        SubspaceBasis power_span = ideal_image(I.ring, product_polys, D);
        SubspaceBasis m_power_span = ideal_image(I.ring, m_gens, D);

        std::vector<Poly> reduction_gens;
        if (i == 1) {
            reduction_gens = Q.gens;
        } else {
            reduction_gens.reserve(Q.gens.size() * prev->product_polys.size());
            for (const auto& q : Q.gens)
                for (const auto& p : prev->product_polys) reduction_gens.push_back(q * p);
        }
        for (const auto& g : m_gens) reduction_gens.push_back(g);
        SubspaceBasis reduction_span = ideal_image(I.ring, reduction_gens, D);

        if (i == 1) {
            for (const auto& q : Q.gens)
                if (!power_span.contains(q))
                    throw InputError("reduction generator '" + q.to_string() +
                                     "' does not lie in the ideal");
        }

        std::uint32_t u = 0;
        {
            SubspaceBasis sweep = reduction_span;
            for (const auto& p : product_polys)
                if (sweep.insert(p)) ++u;
        }

        ladder.levels_.push_back(LadderLevel{i, ctx, std::move(products),
                                             std::move(product_polys), std::move(index_of),
                                             std::move(power_span), std::move(m_power_span),
                                             std::move(reduction_span), u});
        if (u == 0) return ladder;
    }
    throw ResourceError("powers up to the cap (" + std::to_string(opts.power_cap) +
                        ") never reached u = 0; either Q is not a reduction or the "
                        "power cap is too small");
}

std::uint32_t reduction_number(const IdealSpec& I, const IdealSpec& Q,
                               const LadderOptions& opts) {
    return build_ladder(I, Q, opts).reduction_number();
}

std::uint32_t power_min_gen_count(const IdealSpec& I, std::uint32_t power,
                                  const LadderOptions& opts) {
    if (power == 0) return 1;
    const std::uint32_t s = socle_bound(I, opts.socle_cap);
    const std::uint32_t D = s * power + 2 + opts.margin;
    std::vector<Poly> product_polys;
    for (const auto& ms : index_multisets(I.gens.size(), power)) {
        Poly p = I.gens[ms[0]];
        for (std::size_t k = 1; k < ms.size(); ++k) p *= I.gens[ms[k]];
        product_polys.push_back(std::move(p));
    }
    SubspaceBasis sweep = ideal_image(I.ring, m_multiples(I.ring, product_polys), D);
    std::uint32_t count = 0;
    for (const auto& p : product_polys)
        if (sweep.insert(p)) ++count;
    return count;
}

bool MinGenSelection::is_chosen(std::uint32_t power, const IndexMultiset& ms) const {
    auto it = chosen.find(power);
    if (it == chosen.end()) return false;
    return std::find(it->second.begin(), it->second.end(), ms) != it->second.end();
}

namespace {

/// Multisets over the non-Q generator indices, lex order.
std::vector<IndexMultiset> q_free_multisets(std::size_t n,
                                            const std::vector<std::size_t>& q_positions,
                                            std::uint32_t k) {
    std::vector<std::size_t> free_idx;
    for (std::size_t idx = 0; idx < n; ++idx)
        if (std::find(q_positions.begin(), q_positions.end(), idx) == q_positions.end())
            free_idx.push_back(idx);
    std::vector<IndexMultiset> out;
    if (free_idx.empty()) return out;
    for (const auto& ms : index_multisets(free_idx.size(), k)) {
        IndexMultiset mapped;
        mapped.reserve(k);
        for (std::size_t pos : ms) mapped.push_back(free_idx[pos]);
        out.push_back(std::move(mapped));
    }
    return out;
}

} // namespace

MinGenSelection select_min_gens(const PowerLadder& ladder) {
    internal_check(ladder.q_positions().has_value(),
                   "selection needs the reduction given by positions");
    const auto& qpos = *ladder.q_positions();
    const std::size_t n = ladder.ideal().gens.size();
    MinGenSelection sel;
    for (std::uint32_t i = 2; i + 1 <= ladder.reduction_number() + 1; ++i) {
        const LadderLevel& level = ladder.level(i);
        SubspaceBasis sweep = level.reduction_span;
        std::vector<IndexMultiset> chosen;
        for (const auto& ms : q_free_multisets(n, qpos, i))
            if (sweep.insert(level.product_for(ms))) chosen.push_back(ms);
        internal_check(chosen.size() == level.new_gen_count,
                       "independent products did not reach u_i");
        sel.chosen.emplace(i, std::move(chosen));
    }
    return sel;
}

ProductRelation solve_product_relation(const PowerLadder& ladder,
                                       const MinGenSelection& selection,
                                       const RingPtr& presentation_ring,
                                       const IndexMultiset& multiset) {
    const std::uint32_t r = ladder.reduction_number();
    const std::uint32_t i = static_cast<std::uint32_t>(multiset.size());
    if (i < 2 || i > r + 1)
        throw InputError("relation degree must lie between 2 and r+1 = " +
                         std::to_string(r + 1));
    internal_check(std::is_sorted(multiset.begin(), multiset.end()), "unsorted multiset");
    internal_check(ladder.q_positions().has_value(),
                   "relations need the reduction given by positions");
    const auto& qpos = *ladder.q_positions();
    const IdealSpec& I = ladder.ideal();
    const std::size_t n = I.gens.size();
    internal_check(presentation_ring->role() == RingRole::presentation &&
                       presentation_ring->num_vars() == n,
                   "presentation ring does not match the generator list");
    for (std::size_t idx : multiset) {
        if (idx >= n) throw InputError("generator index out of range in multiset");
        if (std::find(qpos.begin(), qpos.end(), idx) != qpos.end())
            throw InputError("multiset " + multiset_string(multiset) +
                             " touches a reduction position; no relation is emitted there");
    }
    if (selection.is_chosen(i, multiset))
        throw InputError("multiset " + multiset_string(multiset) +
                         " was selected as a minimal generator; it has no relation");

    const LadderLevel& level = ladder.level(i);
    const LadderLevel& prev = ladder.level(i - 1);
    const FieldSpec field = I.ring->field();

    static const std::vector<IndexMultiset> no_chosen;
    const std::vector<IndexMultiset>* chosen = &no_chosen;
    if (auto it = selection.chosen.find(i); it != selection.chosen.end())
        chosen = &it->second;

    std::vector<std::size_t> sorted_q = qpos;
    std::sort(sorted_q.begin(), sorted_q.end());

    // Columns: the chosen minimal generators first, then x_p * (q-product)
    // for p over the reduction positions and q over all multisets of size
    // i-1, both ascending.  The solver consumes them greedily, which pins
    // the answer.
    CombinationSolver solver(I.ring);
    struct ParamColumn {
        std::size_t p;
        const IndexMultiset* q;
    };
    std::vector<ParamColumn> param_columns;
    std::size_t col = 0;
    for (; col < chosen->size(); ++col)
        solver.insert(level.m_power_span.reduce(level.product_for((*chosen)[col])), col);
    for (std::size_t p : sorted_q) {
        for (const auto& qms : prev.products) {
            Poly prod = I.gens[p] * prev.product_for(qms);
            param_columns.push_back(ParamColumn{p, &qms});
            solver.insert(level.m_power_span.reduce(prod), col);
            ++col;
        }
    }

    Poly target = level.m_power_span.reduce(level.product_for(multiset));
    auto combo = solver.express(target);
    internal_check(combo.has_value(), "product class escaped the candidate span");

    ProductRelation rel;
    rel.power = i;
    rel.indices = multiset;
    rel.min_gen_coeffs.assign(chosen->size(), FieldScalar::zero(field));

    Poly expr = Poly::monomial_term(presentation_ring, multiset_monomial(multiset, n),
                                    FieldScalar::one(field));
    Poly residual = level.product_for(multiset);  // A-side check, see below

    for (const auto& [c, coeff] : *combo) {
        if (c < chosen->size()) {
            rel.min_gen_coeffs[c] = coeff;
            expr -= Poly::monomial_term(presentation_ring,
                                        multiset_monomial((*chosen)[c], n), coeff);
            residual -= level.product_for((*chosen)[c]).scaled(coeff);
        } else {
            const ParamColumn& pc = param_columns[c - chosen->size()];
            IndexMultiset q_sorted = *pc.q;
            rel.param_coeffs.emplace(std::make_pair(pc.p, q_sorted), coeff);
            IndexMultiset with_p = q_sorted;
            with_p.insert(std::lower_bound(with_p.begin(), with_p.end(), pc.p), pc.p);
            expr -= Poly::monomial_term(presentation_ring, multiset_monomial(with_p, n), coeff);
            residual -= (I.gens[pc.p] * prev.product_for(q_sorted)).scaled(coeff);
        }
    }
    rel.relation = expr;

    // The combination was solved modulo m*I^i, so the A-side residual must
    // land in that subspace; this is exactly what makes the relation map to
    // zero in the fiber cone.
    internal_check(level.m_power_span.contains(residual),
                   "relation residual escaped m * I^i");
    return rel;
}

std::vector<ProductRelation> candidate_relations(const PowerLadder& ladder,
                                                 const MinGenSelection& selection,
                                                 const RingPtr& presentation_ring) {
    internal_check(ladder.q_positions().has_value(),
                   "relations need the reduction given by positions");
    const auto& qpos = *ladder.q_positions();
    const std::size_t n = ladder.ideal().gens.size();
    std::vector<ProductRelation> out;
    for (std::uint32_t i = 2; i <= ladder.reduction_number() + 1; ++i) {
        for (const auto& ms : q_free_multisets(n, qpos, i)) {
            if (selection.is_chosen(i, ms)) continue;
            out.push_back(solve_product_relation(ladder, selection, presentation_ring, ms));
        }
    }
    return out;
}

std::uint64_t fiber_colength_rhs(const PowerLadder& ladder) {
    std::uint64_t total = 1;
    for (const auto& level : ladder.levels())
        if (level.power <= ladder.reduction_number()) total += level.new_gen_count;
    return total;
}

std::vector<IndexMultiset> MembershipGapReport::witnesses() const {
    std::vector<IndexMultiset> out;
    for (const auto& e : entries)
        if (e.local_member != e.polynomial_member) out.push_back(e.indices);
    return out;
}

MembershipGapReport membership_gap(const PowerLadder& ladder, std::uint32_t power) {
    if (power < 1 || power > ladder.reduction_number() + 1)
        throw InputError("membership gap power must lie between 1 and r+1 = " +
                         std::to_string(ladder.reduction_number() + 1));
    const LadderLevel& level = ladder.level(power);
    const IdealSpec& I = ladder.ideal();
    const IdealSpec& Q = ladder.reduction();

    // Q * I^{power-1} as a polynomial ideal, for the exact membership side.
    std::vector<Poly> poly_gens;
    if (power == 1) {
        poly_gens = Q.gens;
    } else {
        const LadderLevel& prev = ladder.level(power - 1);
        for (const auto& q : Q.gens)
            for (const auto& p : prev.product_polys) poly_gens.push_back(q * p);
    }
    GroebnerBasis gb = buchberger(I.ring, poly_gens, MonomialOrder::degrevlex());

    MembershipGapReport report;
    report.power = power;
    for (std::size_t k = 0; k < level.products.size(); ++k) {
        MembershipGapEntry entry;
        entry.indices = level.products[k];
        entry.local_member = level.reduction_span.contains(level.product_polys[k]);
        entry.polynomial_member = normal_form(level.product_polys[k], gb).is_zero();
        report.entries.push_back(std::move(entry));
    }
    return report;
}

} // namespace fibercone
