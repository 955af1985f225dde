#include "fibercone/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace fibercone {

void check_same_ring(const Poly& a, const Poly& b) {
    internal_check(a.ring() && b.ring(), "operation on default-constructed polynomial");
    if (!a.ring()->same_as(*b.ring()))
        throw InputError("polynomials live in different rings");
}

Poly Poly::zero(RingPtr ring) { return Poly(std::move(ring), {}); }

Poly Poly::constant(RingPtr ring, FieldScalar c) {
    std::vector<Term> t;
    if (!c.is_zero()) t.push_back({Monomial::unit(ring->num_vars()), std::move(c)});
    return Poly(std::move(ring), std::move(t));
}

Poly Poly::monomial_term(RingPtr ring, Monomial m, FieldScalar c) {
    internal_check(m.num_vars() == ring->num_vars(), "monomial arity mismatch");
    std::vector<Term> t;
    if (!c.is_zero()) t.push_back({std::move(m), std::move(c)});
    return Poly(std::move(ring), std::move(t));
}

Poly Poly::variable(RingPtr ring, std::size_t idx) {
    auto m = Monomial::variable(idx, ring->num_vars());
    auto c = FieldScalar::one(ring->field());
    return monomial_term(std::move(ring), std::move(m), std::move(c));
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
    std::map<Monomial, FieldScalar, CanonicalMonomialGreater> acc;
    for (auto& t : terms) {
        internal_check(t.mon.num_vars() == ring->num_vars(), "monomial arity mismatch");
        auto it = acc.find(t.mon);
        if (it == acc.end())
            acc.emplace(std::move(t.mon), std::move(t.coeff));
        else
            it->second += t.coeff;
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) out.push_back({m, c});
    return Poly(std::move(ring), std::move(out));
}

std::uint32_t Poly::degree() const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mon.degree());
    return d;
}

bool Poly::is_homogeneous() const {
    for (const auto& t : terms_)
        if (t.mon.degree() != terms_.front().mon.degree()) return false;
    return true;
}

const Term& Poly::leading_term() const {
    internal_check(!terms_.empty(), "leading term of zero polynomial");
    return terms_.front();
}

Poly Poly::operator-() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.mon, -t.coeff});
    return Poly(ring_, std::move(out));
}

Poly Poly::operator+(const Poly& o) const {
    check_same_ring(*this, o);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        auto c = canonical_compare(terms_[i].mon, o.terms_[j].mon);
        if (c == std::strong_ordering::greater) {
            out.push_back(terms_[i++]);
        } else if (c == std::strong_ordering::less) {
            out.push_back(o.terms_[j++]);
        } else {
            FieldScalar s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) out.push_back({terms_[i].mon, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    return Poly(ring_, std::move(out));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    check_same_ring(*this, o);
    std::map<Monomial, FieldScalar, CanonicalMonomialGreater> acc;
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Monomial m = a.mon.times(b.mon);
            FieldScalar c = a.coeff * b.coeff;
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(std::move(m), std::move(c));
            else
                it->second += c;
        }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) out.push_back({m, c});
    return Poly(ring_, std::move(out));
}

Poly Poly::scaled(const FieldScalar& c) const {
    if (c.is_zero()) return Poly(ring_, {});
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.mon, t.coeff * c});
    return Poly(ring_, std::move(out));
}

Poly Poly::times_monomial(const Monomial& m) const {
    // multiplying by a fixed monomial preserves the canonical term order
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.mon.times(m), t.coeff});
    return Poly(ring_, std::move(out));
}

Poly Poly::pow(std::uint32_t e) const {
    Poly acc = Poly::constant(ring_, FieldScalar::one(ring_->field()));
    Poly base = *this;
    while (e > 0) {
        if (e & 1u) acc *= base;
        e >>= 1u;
        if (e > 0) base *= base;
    }
    return acc;
}

Poly Poly::monic() const {
    return scaled(leading_term().coeff.inverse());
}

bool Poly::operator==(const Poly& o) const {
    check_same_ring(*this, o);
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mon != o.terms_[i].mon || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

Poly Poly::truncated(std::uint32_t bound) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_)
        if (t.mon.degree() < bound) out.push_back(t);
    return Poly(ring_, std::move(out));
}

Poly Poly::with_vars_zeroed(const std::vector<std::size_t>& vars) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        bool uses = false;
        for (std::size_t v : vars)
            if (t.mon.exponent(v) > 0) { uses = true; break; }
        if (!uses) out.push_back(t);
    }
    return Poly(ring_, std::move(out));
}

Poly Poly::mapped_to(RingPtr target,
                     const std::vector<std::optional<std::size_t>>& var_map) const {
    internal_check(var_map.size() == ring_->num_vars(), "variable map arity mismatch");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::vector<std::uint32_t> e(target->num_vars(), 0);
        for (std::size_t i = 0; i < var_map.size(); ++i) {
            std::uint32_t x = t.mon.exponent(i);
            if (x == 0) continue;
            internal_check(var_map[i].has_value(), "mapped variable has no image");
            e[*var_map[i]] += x;
        }
        out.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Poly::from_terms(std::move(target), std::move(out));
}

std::string monomial_to_string(const Monomial& m, const AmbientRing& ring) {
    if (m.is_unit()) return "1";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < m.num_vars(); ++i) {
        std::uint32_t e = m.exponent(i);
        if (e == 0) continue;
        if (!first) out << '*';
        first = false;
        out << ring.var_name(i);
        if (e > 1) out << '^' << e;
    }
    return out.str();
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
        bool neg = t.coeff.is_negative();
        if (first) {
            if (neg) out << '-';
        } else {
            out << (neg ? " - " : " + ");
        }
        first = false;
        std::string mag = t.coeff.magnitude_string();
        if (t.mon.is_unit()) {
            out << mag;
        } else if (mag == "1") {
            out << monomial_to_string(t.mon, *ring_);
        } else {
            out << mag << '*' << monomial_to_string(t.mon, *ring_);
        }
    }
    return out.str();
}

} // namespace fibercone
