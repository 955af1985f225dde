#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "fibercone/errors.hpp"

namespace fibercone {

/// Coefficient field: the rationals (modulus == 0) or a prime field F_p.
struct FieldSpec {
    std::uint64_t modulus = 0;

    static FieldSpec rationals() { return FieldSpec{0}; }
    static FieldSpec prime(std::uint64_t p);

    bool is_rationals() const { return modulus == 0; }
    bool operator==(const FieldSpec&) const = default;

    /// "Q" or "Fp <p>", matching the job-file syntax.
    std::string to_string() const;
    static FieldSpec parse(const std::string& text);
};

/// An exact scalar in the field fixed by its FieldSpec.  Rational values are
/// backed by GMP; prime-field values are residues in [0, p).
class FieldScalar {
public:
    FieldScalar() : p_(0), rat_(0) {}

    static FieldScalar zero(const FieldSpec& k);
    static FieldScalar one(const FieldSpec& k);
    static FieldScalar from_integer(long long n, const FieldSpec& k);
    /// Decimal digit strings (arbitrary length); den must be invertible.
    static FieldScalar from_decimal(const std::string& digits, const FieldSpec& k);
    static FieldScalar from_fraction(const std::string& num, const std::string& den,
                                     const FieldSpec& k);

    FieldSpec spec() const { return FieldSpec{p_}; }
    bool is_zero() const;
    bool is_one() const;

    FieldScalar operator-() const;
    FieldScalar operator+(const FieldScalar& o) const;
    FieldScalar operator-(const FieldScalar& o) const;
    FieldScalar operator*(const FieldScalar& o) const;
    FieldScalar& operator+=(const FieldScalar& o) { return *this = *this + o; }
    FieldScalar& operator-=(const FieldScalar& o) { return *this = *this - o; }
    FieldScalar& operator*=(const FieldScalar& o) { return *this = *this * o; }

    /// Multiplicative inverse; throws InputError on zero.
    FieldScalar inverse() const;
    FieldScalar operator/(const FieldScalar& o) const { return *this * o.inverse(); }

    bool operator==(const FieldScalar& o) const;
    bool operator!=(const FieldScalar& o) const { return !(*this == o); }

    /// True for rationals with negative numerator.  Prime-field residues are
    /// never negative; printing uses the canonical representative.
    bool is_negative() const;
    /// |value| for rationals, the residue itself for F_p (used by printers
    /// which emit the sign separately).
    std::string magnitude_string() const;
    std::string to_string() const;

    const mpq_class& rational() const;
    std::uint64_t residue() const;

private:
    FieldScalar(std::uint64_t p, mpq_class r, std::uint64_t v)
        : p_(p), rat_(std::move(r)), val_(v) {}
    void check_same(const FieldScalar& o) const;

    std::uint64_t p_;        // 0 = rationals
    mpq_class rat_;          // valid iff p_ == 0
    std::uint64_t val_ = 0;  // valid iff p_ != 0
};

} // namespace fibercone
