#include "fibercone/field.hpp"

#include <sstream>

namespace fibercone {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on signed words; p < 2^31 so no overflow
    long long t = 0, newt = 1;
    long long r = static_cast<long long>(p), newr = static_cast<long long>(a);
    while (newr != 0) {
        long long q = r / newr;
        long long tmp = t - q * newt;
        t = newt; newt = tmp;
        tmp = r - q * newr;
        r = newr; newr = tmp;
    }
    if (r != 1) throw InputError("element not invertible modulo p");
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t residue_of(const mpz_class& z, std::uint64_t p) {
    mpz_class m = z % static_cast<unsigned long>(p);
    if (m < 0) m += static_cast<unsigned long>(p);
    return m.get_ui();
}

} // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p < 2 || p > (1ull << 31))
        throw InputError("field characteristic must be a prime below 2^31");
    if (!is_prime_u64(p))
        throw InputError("field characteristic " + std::to_string(p) + " is not prime");
    return FieldSpec{p};
}

std::string FieldSpec::to_string() const {
    return is_rationals() ? "Q" : "Fp " + std::to_string(modulus);
}

FieldSpec FieldSpec::parse(const std::string& text) {
    std::istringstream in(text);
    std::string head;
    in >> head;
    if (head == "Q" || head == "q") {
        std::string rest;
        if (in >> rest) throw InputError("malformed field: '" + text + "'");
        return rationals();
    }
    if (head == "Fp" || head == "fp" || head == "FP") {
        unsigned long long p = 0;
        if (!(in >> p)) throw InputError("malformed field: '" + text + "' (expected 'Fp <prime>')");
        std::string rest;
        if (in >> rest) throw InputError("malformed field: '" + text + "'");
        return prime(p);
    }
    throw InputError("unknown field '" + text + "' (expected 'Q' or 'Fp <prime>')");
}

FieldScalar FieldScalar::zero(const FieldSpec& k) { return FieldScalar(k.modulus, mpq_class(0), 0); }

FieldScalar FieldScalar::one(const FieldSpec& k) { return FieldScalar(k.modulus, mpq_class(1), k.is_rationals() ? 0 : 1 % k.modulus); }

FieldScalar FieldScalar::from_integer(long long n, const FieldSpec& k) {
    if (k.is_rationals()) return FieldScalar(0, mpq_class(static_cast<long>(n)), 0);
    mpz_class z(static_cast<long>(n));
    return FieldScalar(k.modulus, mpq_class(0), residue_of(z, k.modulus));
}

FieldScalar FieldScalar::from_decimal(const std::string& digits, const FieldSpec& k) {
    mpz_class z;
    if (mpz_set_str(z.get_mpz_t(), digits.c_str(), 10) != 0)
        throw InputError("malformed integer literal '" + digits + "'");
    if (k.is_rationals()) return FieldScalar(0, mpq_class(z), 0);
    return FieldScalar(k.modulus, mpq_class(0), residue_of(z, k.modulus));
}

FieldScalar FieldScalar::from_fraction(const std::string& num, const std::string& den,
                                       const FieldSpec& k) {
    FieldScalar n = from_decimal(num, k);
    FieldScalar d = from_decimal(den, k);
    if (d.is_zero()) throw InputError("zero denominator in coefficient");
    return n / d;
}

bool FieldScalar::is_zero() const { return p_ == 0 ? rat_ == 0 : val_ == 0; }

bool FieldScalar::is_one() const { return p_ == 0 ? rat_ == 1 : val_ == 1 % p_; }

void FieldScalar::check_same(const FieldScalar& o) const {
    internal_check(p_ == o.p_, "mixed coefficient fields");
}

FieldScalar FieldScalar::operator-() const {
    if (p_ == 0) return FieldScalar(0, -rat_, 0);
    return FieldScalar(p_, mpq_class(0), val_ == 0 ? 0 : p_ - val_);
}

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
    check_same(o);
    if (p_ == 0) return FieldScalar(0, rat_ + o.rat_, 0);
    return FieldScalar(p_, mpq_class(0), add_mod(val_, o.val_, p_));
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const {
    check_same(o);
    if (p_ == 0) return FieldScalar(0, rat_ - o.rat_, 0);
    return FieldScalar(p_, mpq_class(0), sub_mod(val_, o.val_, p_));
}

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
    check_same(o);
    if (p_ == 0) return FieldScalar(0, rat_ * o.rat_, 0);
    return FieldScalar(p_, mpq_class(0), mul_mod(val_, o.val_, p_));
}

FieldScalar FieldScalar::inverse() const {
    if (is_zero()) throw InputError("division by zero in coefficient field");
    if (p_ == 0) return FieldScalar(0, mpq_class(1) / rat_, 0);
    return FieldScalar(p_, mpq_class(0), inv_mod(val_, p_));
}

bool FieldScalar::operator==(const FieldScalar& o) const {
    return p_ == o.p_ && (p_ == 0 ? rat_ == o.rat_ : val_ == o.val_);
}

bool FieldScalar::is_negative() const { return p_ == 0 && rat_ < 0; }

std::string FieldScalar::magnitude_string() const {
    if (p_ != 0) return std::to_string(val_);
    mpq_class a = rat_ < 0 ? mpq_class(-rat_) : rat_;
    return a.get_str();
}

std::string FieldScalar::to_string() const {
    return p_ == 0 ? rat_.get_str() : std::to_string(val_);
}

const mpq_class& FieldScalar::rational() const {
    internal_check(p_ == 0, "rational() on prime-field scalar");
    return rat_;
}

std::uint64_t FieldScalar::residue() const {
    internal_check(p_ != 0, "residue() on rational scalar");
    return val_;
}

} // namespace fibercone
