#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fibercone/monomial.hpp"
#include "fibercone/ring.hpp"

namespace fibercone {

struct Term {
    Monomial mon;
    FieldScalar coeff;
};

/// Exact multivariate polynomial.  Terms are kept normalized: nonzero
/// coefficients, distinct monomials, sorted in descending canonical
/// (degrevlex) order.  That makes operator== and printing deterministic.
class Poly {
public:
    Poly() = default;

    static Poly zero(RingPtr ring);
    static Poly constant(RingPtr ring, FieldScalar c);
    static Poly monomial_term(RingPtr ring, Monomial m, FieldScalar c);
    static Poly variable(RingPtr ring, std::size_t idx);
    /// Normalizes: merges duplicate monomials, drops zeros, sorts.
    static Poly from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Total degree of the highest term; 0 for the zero polynomial.
    std::uint32_t degree() const;
    bool is_homogeneous() const;
    /// Leading term in the canonical order.  Requires a nonzero polynomial.
    const Term& leading_term() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const FieldScalar& c) const;
    Poly times_monomial(const Monomial& m) const;
    Poly pow(std::uint32_t e) const;
    /// Leading coefficient scaled to 1.  Requires a nonzero polynomial.
    Poly monic() const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Drops every term of total degree >= bound (image in R/m^bound).
    Poly truncated(std::uint32_t bound) const;

    /// Sets the listed variables to zero (drops terms using them).
    Poly with_vars_zeroed(const std::vector<std::size_t>& vars) const;

    /// Re-expresses this polynomial in `target`, sending variable i of the
    /// current ring to variable var_map[i] of the target.  Throws
    /// InternalError if a used variable has no image.
    Poly mapped_to(RingPtr target, const std::vector<std::optional<std::size_t>>& var_map) const;

    std::string to_string() const;

private:
    Poly(RingPtr ring, std::vector<Term> terms)
        : ring_(std::move(ring)), terms_(std::move(terms)) {}

    RingPtr ring_;
    std::vector<Term> terms_;  // canonical descending, normalized
};

/// Structural ring agreement (see AmbientRing::same_as); throws InputError
/// when polynomials from unrelated rings are combined.
void check_same_ring(const Poly& a, const Poly& b);

std::string monomial_to_string(const Monomial& m, const AmbientRing& ring);

} // namespace fibercone
