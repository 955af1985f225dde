#include "fibercone/groebner.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace fibercone {

namespace {

using Terms = std::vector<Term>;

bool greater_under(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
    return order_compare(a, b, ord) == std::strong_ordering::greater;
}

Terms to_ordered(const Poly& p, const MonomialOrder& ord) {
    Terms t = p.terms();
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) {
        return greater_under(a.mon, b.mon, ord);
    });
    return t;
}

/// a + c * x^shift * b, all term lists sorted descending under ord.
Terms axpy(const Terms& a, const FieldScalar& c, const Monomial& shift, const Terms& b,
           const MonomialOrder& ord) {
    Terms out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        Monomial bm = b[j].mon.times(shift);
        auto cmp = order_compare(a[i].mon, bm, ord);
        if (cmp == std::strong_ordering::greater) {
            out.push_back(a[i++]);
        } else if (cmp == std::strong_ordering::less) {
            out.push_back({std::move(bm), b[j].coeff * c});
            ++j;
        } else {
            FieldScalar s = a[i].coeff + b[j].coeff * c;
            if (!s.is_zero()) out.push_back({a[i].mon, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back({b[j].mon.times(shift), b[j].coeff * c});
    return out;
}

/// Rescales in place: over F_p monic, over Q the primitive integer vector
/// with positive leading coefficient.  Keeps coefficients small and the
/// run deterministic.
void normalize(Terms& t, const FieldSpec& field) {
    if (t.empty()) return;
    if (!field.is_rationals()) {
        FieldScalar inv = t.front().coeff.inverse();
        for (auto& term : t) term.coeff = term.coeff * inv;
        return;
    }
    mpz_class den_lcm = 1;
    for (const auto& term : t)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                term.coeff.rational().get_den().get_mpz_t());
    mpz_class content = 0;
    for (const auto& term : t) {
        mpz_class num = term.coeff.rational().get_num() *
                        (den_lcm / term.coeff.rational().get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
    }
    mpq_class factor(den_lcm, content);  // canonicalized below
    factor.canonicalize();
    if (t.front().coeff.rational() * factor < 0) factor = -factor;
    for (auto& term : t) {
        mpq_class v = term.coeff.rational() * factor;
        term.coeff = FieldScalar::from_fraction(v.get_num().get_str(),
                                                v.get_den().get_str(), field);
    }
}

struct Divisor {
    const Monomial* lm;
    const FieldScalar* lc;
    const Terms* terms;
};

/// Full division remainder; optionally records the quotient against a
/// single divisor (quotient != nullptr requires divisors.size() == 1).
Terms reduce_full(Terms w, const std::vector<Divisor>& divisors, const MonomialOrder& ord,
                  Terms* quotient = nullptr) {
    Terms rem;
    while (!w.empty()) {
        const Term& lead = w.front();
        const Divisor* hit = nullptr;
        for (const auto& d : divisors) {
            if (d.lm->divides(lead.mon)) {
                hit = &d;
                break;
            }
        }
        if (!hit) {
            rem.push_back(lead);
            w.erase(w.begin());
            continue;
        }
        Monomial shift = lead.mon.divide(*hit->lm);
        FieldScalar factor = lead.coeff / *hit->lc;
        if (quotient) quotient->push_back({shift, factor});
        w = axpy(w, -factor, shift, *hit->terms, ord);
    }
    return rem;
}

struct GbElem {
    Terms terms;
    Monomial lm;
    FieldScalar lc;
};

GbElem make_elem(Terms t) {
    internal_check(!t.empty(), "empty basis element");
    Monomial lm = t.front().mon;
    FieldScalar lc = t.front().coeff;
    return GbElem{std::move(t), std::move(lm), std::move(lc)};
}

std::vector<Divisor> divisor_view(const std::vector<GbElem>& G,
                                  const std::vector<std::size_t>& idx) {
    std::vector<Divisor> out;
    out.reserve(idx.size());
    for (std::size_t k : idx) out.push_back(Divisor{&G[k].lm, &G[k].lc, &G[k].terms});
    return out;
}

Terms s_poly(const GbElem& a, const GbElem& b, const MonomialOrder& ord) {
    Monomial L = a.lm.lcm(b.lm);
    Monomial sa = L.divide(a.lm);
    FieldScalar ca = a.lc.inverse();
    Terms left;
    left.reserve(a.terms.size());
    for (const auto& t : a.terms) left.push_back({t.mon.times(sa), t.coeff * ca});
    return axpy(left, -b.lc.inverse(), L.divide(b.lm), b.terms, ord);
}

struct Pair {
    std::size_t i, j;  // i < j
    Monomial lcm;
};

std::vector<Terms> buchberger_core(const RingPtr& ring, const std::vector<Poly>& gens,
                                   const MonomialOrder& ord, const GroebnerOptions& opts) {
    const FieldSpec field = ring->field();
    std::vector<GbElem> G;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        internal_check(g.ring()->same_as(*ring), "generator outside the ring");
        Terms t = to_ordered(g, ord);
        normalize(t, field);
        G.push_back(make_elem(std::move(t)));
    }

    std::vector<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> pending_keys;
    auto push_pairs_for = [&](std::size_t k) {
        for (std::size_t u = 0; u < k; ++u) {
            pending.push_back(Pair{u, k, G[u].lm.lcm(G[k].lm)});
            pending_keys.emplace(u, k);
        }
    };
    for (std::size_t k = 0; k < G.size(); ++k) push_pairs_for(k);

    std::vector<std::size_t> all_idx;
    auto refresh_idx = [&]() {
        all_idx.resize(G.size());
        for (std::size_t k = 0; k < G.size(); ++k) all_idx[k] = k;
    };
    refresh_idx();

    while (!pending.empty()) {
        // normal strategy: minimal lcm degree, ties by lcm then indices
        std::size_t best = 0;
        for (std::size_t k = 1; k < pending.size(); ++k) {
            const Pair &a = pending[k], &b = pending[best];
            if (a.lcm.degree() != b.lcm.degree()) {
                if (a.lcm.degree() < b.lcm.degree()) best = k;
                continue;
            }
            auto c = order_compare(a.lcm, b.lcm, ord);
            if (c == std::strong_ordering::less ||
                (c == std::strong_ordering::equal &&
                 std::make_pair(a.i, a.j) < std::make_pair(b.i, b.j)))
                best = k;
        }
        Pair pair = std::move(pending[best]);
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
        pending_keys.erase({pair.i, pair.j});

        // Buchberger's first criterion: coprime leading terms.
        if (G[pair.i].lm.coprime(G[pair.j].lm)) continue;

        // Chain criterion: some third element divides the lcm and both of
        // its pairs with i and j are already settled.
        bool skip = false;
        for (std::size_t k = 0; k < G.size() && !skip; ++k) {
            if (k == pair.i || k == pair.j) continue;
            if (!G[k].lm.divides(pair.lcm)) continue;
            auto key = [&](std::size_t a, std::size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (!pending_keys.count(key(pair.i, k)) && !pending_keys.count(key(pair.j, k)))
                skip = true;
        }
        if (skip) continue;

        Terms h = reduce_full(s_poly(G[pair.i], G[pair.j], ord), divisor_view(G, all_idx), ord);
        if (h.empty()) continue;
        if (opts.max_degree != 0 && h.front().mon.degree() > opts.max_degree)
            throw ResourceError("Groebner element exceeds the degree cap (" +
                                std::to_string(opts.max_degree) + ")");
        if (G.size() + 1 > opts.max_basis)
            throw ResourceError("Groebner basis exceeds the size cap (" +
                                std::to_string(opts.max_basis) + ")");
        normalize(h, field);
        G.push_back(make_elem(std::move(h)));
        refresh_idx();
        push_pairs_for(G.size() - 1);
    }

    // Minimal basis: walk ascending leading monomials, drop anything whose
    // leading monomial an earlier survivor divides.
    std::vector<std::size_t> order_idx(G.size());
    for (std::size_t k = 0; k < G.size(); ++k) order_idx[k] = k;
    std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
        auto c = order_compare(G[a].lm, G[b].lm, ord);
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
        return a < b;
    });
    std::vector<std::size_t> kept;
    for (std::size_t k : order_idx) {
        bool divisible = false;
        for (std::size_t e : kept)
            if (G[e].lm.divides(G[k].lm)) {
                divisible = true;
                break;
            }
        if (!divisible) kept.push_back(k);
    }

    // Tail reduction: leading monomials are fixed, so reducing each element
    // against the others yields the unique reduced basis in one pass.
    for (std::size_t pos = 0; pos < kept.size(); ++pos) {
        std::vector<std::size_t> others;
        for (std::size_t q = 0; q < kept.size(); ++q)
            if (q != pos) others.push_back(kept[q]);
        Terms reduced = reduce_full(G[kept[pos]].terms, divisor_view(G, others), ord);
        internal_check(!reduced.empty(), "tail reduction killed a minimal element");
        G[kept[pos]] = make_elem(std::move(reduced));
    }

    std::vector<Terms> out;
    out.reserve(kept.size());
    for (std::size_t k : kept) {
        Terms t = G[k].terms;
        FieldScalar inv = t.front().coeff.inverse();
        for (auto& term : t) term.coeff = term.coeff * inv;
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<std::optional<std::size_t>> identity_map(std::size_t n) {
    std::vector<std::optional<std::size_t>> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = i;
    return m;
}

std::vector<std::uint32_t> pure_power_bounds(const GroebnerBasis& gb) {
    const std::size_t n = gb.ring()->num_vars();
    std::vector<std::uint32_t> bounds(n, 0);
    for (const auto& lm : gb.leading_monomials()) {
        std::size_t support_var = n;
        bool pure = true;
        for (std::size_t v = 0; v < n; ++v) {
            if (lm.exponent(v) == 0) continue;
            if (support_var != n) {
                pure = false;
                break;
            }
            support_var = v;
        }
        if (!pure || support_var == n) continue;
        std::uint32_t e = lm.exponent(support_var);
        if (bounds[support_var] == 0 || e < bounds[support_var]) bounds[support_var] = e;
    }
    for (std::size_t v = 0; v < n; ++v)
        if (bounds[v] == 0)
            throw InputError("quotient is not Artinian: no pure power of '" +
                             gb.ring()->var_name(v) + "' among the leading terms");
    return bounds;
}

bool divisible_by_any(const Monomial& m, const std::vector<Monomial>& lms) {
    for (const auto& lm : lms)
        if (lm.divides(m)) return true;
    return false;
}

void require_homogeneous(const IdealHandle& ideal, const char* op) {
    for (const auto& g : ideal.gens())
        if (!g.is_homogeneous())
            throw InputError(std::string(op) + " needs a homogeneous ideal; generator '" +
                             g.to_string() + "' is not");
}

} // namespace

GroebnerBasis::GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<Poly> reduced)
    : ring_(std::move(ring)), order_(std::move(order)), polys_(std::move(reduced)) {
    std::sort(polys_.begin(), polys_.end(), [&](const Poly& a, const Poly& b) {
        return order_compare(to_ordered(a, order_).front().mon,
                             to_ordered(b, order_).front().mon,
                             order_) == std::strong_ordering::less;
    });
    for (const auto& p : polys_) {
        internal_check(!p.is_zero(), "zero element in a reduced basis");
        Terms t = to_ordered(p, order_);
        lead_.push_back(t.front().mon);
        ordered_.push_back(std::move(t));
    }
}

bool GroebnerBasis::is_trivial_unit() const {
    return polys_.size() == 1 && polys_.front().term_count() == 1 &&
           polys_.front().terms().front().mon.is_unit();
}

GroebnerBasis buchberger(RingPtr ring, const std::vector<Poly>& gens,
                         const MonomialOrder& order, const GroebnerOptions& opts) {
    std::vector<Terms> reduced = buchberger_core(ring, gens, order, opts);
    std::vector<Poly> polys;
    polys.reserve(reduced.size());
    for (auto& t : reduced) polys.push_back(Poly::from_terms(ring, std::move(t)));
    GroebnerBasis gb(ring, order, std::move(polys));
    for (const auto& g : gens)
        internal_check(normal_form(g, gb).is_zero(), "input generator escapes its own basis");
    return gb;
}

Poly normal_form(const Poly& p, const GroebnerBasis& gb) {
    internal_check(p.ring() && p.ring()->same_as(*gb.ring()), "normal form across rings");
    std::vector<Divisor> divisors;
    divisors.reserve(gb.polys().size());
    for (std::size_t k = 0; k < gb.polys().size(); ++k)
        divisors.push_back(Divisor{&gb.leading_monomials()[k],
                                   &gb.ordered_terms()[k].front().coeff,
                                   &gb.ordered_terms()[k]});
    Terms rem = reduce_full(to_ordered(p, gb.order()), divisors, gb.order());
    return Poly::from_terms(p.ring(), std::move(rem));
}

IdealHandle::IdealHandle(RingPtr ring, std::vector<Poly> gens, GroebnerOptions opts)
    : ring_(std::move(ring)), gens_(std::move(gens)), opts_(opts) {
    internal_check(static_cast<bool>(ring_), "ideal handle needs a ring");
    for (const auto& g : gens_)
        internal_check(g.ring() && g.ring()->same_as(*ring_), "generator outside the ring");
}

const GroebnerBasis& IdealHandle::groebner(const MonomialOrder& order) const {
    auto it = cache_.find(order.key());
    if (it == cache_.end()) {
        auto gb = std::make_shared<GroebnerBasis>(buchberger(ring_, gens_, order, opts_));
        it = cache_.emplace(order.key(), std::move(gb)).first;
    }
    return *it->second;
}

std::uint64_t artinian_colength(const IdealHandle& ideal) {
    const GroebnerBasis& gb = ideal.groebner();
    if (gb.is_trivial_unit()) return 0;
    if (gb.polys().empty())
        throw InputError("quotient is not Artinian: zero ideal");
    std::vector<std::uint32_t> bounds = pure_power_bounds(gb);
    std::uint64_t box = 1;
    for (std::uint32_t b : bounds) {
        box *= b;
        if (box > 50'000'000ull)
            throw ResourceError("standard monomial enumeration too large");
    }
    const std::size_t n = bounds.size();
    std::vector<std::uint32_t> exps(n, 0);
    std::uint64_t count = 0;
    for (;;) {
        if (!divisible_by_any(Monomial(exps), gb.leading_monomials())) ++count;
        std::size_t pos = 0;
        while (pos < n && exps[pos] + 1 == bounds[pos]) exps[pos++] = 0;
        if (pos == n) break;
        ++exps[pos];
    }
    return count;
}

bool ideal_membership(const Poly& p, const IdealHandle& ideal) {
    return normal_form(p, ideal.groebner()).is_zero();
}

bool ideal_contains(const IdealHandle& outer, const IdealHandle& inner) {
    if (!outer.ring()->same_as(*inner.ring()))
        throw InputError("ideal comparison across rings");
    for (const auto& g : inner.gens())
        if (!ideal_membership(g, outer)) return false;
    return true;
}

bool ideal_equal(const IdealHandle& a, const IdealHandle& b) {
    if (!a.ring()->same_as(*b.ring()))
        throw InputError("ideal comparison across rings");
    const auto& ga = a.groebner().polys();
    const auto& gb = b.groebner().polys();
    if (ga.size() != gb.size()) return false;
    for (std::size_t k = 0; k < ga.size(); ++k)
        if (ga[k] != gb[k]) return false;
    return true;
}

IdealHandle ideal_intersection(const IdealHandle& A, const IdealHandle& B) {
    if (!A.ring()->same_as(*B.ring()))
        throw InputError("ideal intersection across rings");
    const RingPtr& ring = A.ring();
    const std::size_t n = ring->num_vars();
    RingPtr tagged = AmbientRing::with_tag(*ring);
    const std::size_t w = n;  // the tag variable's index
    auto up = identity_map(n);
    Poly tag = Poly::variable(tagged, w);
    Poly one_minus_tag = Poly::constant(tagged, FieldScalar::one(ring->field())) - tag;

    std::vector<Poly> gens;
    for (const auto& a : A.gens())
        if (!a.is_zero()) gens.push_back(tag * a.mapped_to(tagged, up));
    for (const auto& b : B.gens())
        if (!b.is_zero()) gens.push_back(one_minus_tag * b.mapped_to(tagged, up));

    IdealHandle work(tagged, std::move(gens), A.options());
    IdealHandle elim = eliminate(work, {w});

    std::vector<std::optional<std::size_t>> down(n + 1);
    for (std::size_t i = 0; i < n; ++i) down[i] = i;
    std::vector<Poly> out;
    for (const auto& g : elim.gens()) out.push_back(g.mapped_to(ring, down));
    return IdealHandle(ring, std::move(out), A.options());
}

IdealHandle ideal_colon(const IdealHandle& J, const IdealHandle& F) {
    if (!J.ring()->same_as(*F.ring()))
        throw InputError("ideal colon across rings");
    const RingPtr& ring = J.ring();
    std::optional<IdealHandle> acc;
    for (const auto& f : F.gens()) {
        if (f.is_zero()) continue;
        IdealHandle meet = ideal_intersection(J, IdealHandle(ring, {f}, J.options()));
        // (J : f) = (J cap (f)) / f, the division being exact by construction.
        std::vector<Poly> quotients;
        const MonomialOrder ord = MonomialOrder::degrevlex();
        Terms ft = to_ordered(f, ord);
        Divisor fd{&ft.front().mon, &ft.front().coeff, &ft};
        for (const auto& h : meet.gens()) {
            if (h.is_zero()) continue;
            Terms quotient;
            Terms rem = reduce_full(to_ordered(h, ord), {fd}, ord, &quotient);
            internal_check(rem.empty(), "intersection element not divisible by f");
            quotients.push_back(Poly::from_terms(ring, std::move(quotient)));
        }
        IdealHandle cf(ring, std::move(quotients), J.options());
        acc = acc ? ideal_intersection(*acc, cf) : std::move(cf);
    }
    if (!acc) {
        // F = (0): everything multiplies 0 into J.
        return IdealHandle(ring, {Poly::constant(ring, FieldScalar::one(ring->field()))},
                           J.options());
    }
    return *acc;
}

IdealHandle eliminate(const IdealHandle& ideal, const std::vector<std::size_t>& drop_vars) {
    if (drop_vars.empty()) return ideal;
    const RingPtr& ring = ideal.ring();
    MonomialOrder ord = MonomialOrder::block(drop_vars, ring->num_vars());
    const GroebnerBasis& gb = ideal.groebner(ord);
    std::vector<Poly> retained;
    for (const auto& g : gb.polys()) {
        bool free = true;
        for (const auto& t : g.terms()) {
            for (std::size_t v : drop_vars)
                if (t.mon.exponent(v) > 0) {
                    free = false;
                    break;
                }
            if (!free) break;
        }
        if (free) retained.push_back(g);
    }
    return IdealHandle(ring, std::move(retained), ideal.options());
}

std::size_t quotient_dimension(const IdealHandle& ideal) {
    require_homogeneous(ideal, "quotient dimension");
    const std::size_t n = ideal.ring()->num_vars();
    const GroebnerBasis& gb = ideal.groebner();
    if (gb.polys().empty()) return n;
    if (gb.is_trivial_unit()) return 0;
    internal_check(n < 26, "too many variables for subset enumeration");
    const auto& lms = gb.leading_monomials();
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        std::size_t size = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (size <= best) continue;
        // S is independent iff no leading monomial uses only variables of S
        bool independent = true;
        for (const auto& lm : lms) {
            bool inside = true;
            for (std::size_t v = 0; v < n; ++v)
                if (lm.exponent(v) > 0 && !(mask & (1ull << v))) {
                    inside = false;
                    break;
                }
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = size;
    }
    return best;
}

std::vector<std::uint64_t> hilbert_function(const IdealHandle& ideal,
                                            std::uint32_t max_degree) {
    require_homogeneous(ideal, "Hilbert function");
    const GroebnerBasis& gb = ideal.groebner();
    const std::size_t n = ideal.ring()->num_vars();
    std::vector<std::uint64_t> out;
    out.reserve(max_degree + 1);
    for (std::uint32_t d = 0; d <= max_degree; ++d) {
        std::uint64_t count = 0;
        for (const auto& m : monomials_of_degree(n, d))
            if (!divisible_by_any(m, gb.leading_monomials())) ++count;
        out.push_back(count);
    }
    return out;
}

} // namespace fibercone
