#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "fibercone/errors.hpp"

namespace fibercone {

/// Exponent vector with cached total degree.  Immutable after construction.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exps)
        : exps_(std::move(exps)),
          degree_(std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0})) {}

    static Monomial unit(std::size_t num_vars) {
        return Monomial(std::vector<std::uint32_t>(num_vars, 0));
    }
    static Monomial variable(std::size_t idx, std::size_t num_vars) {
        std::vector<std::uint32_t> e(num_vars, 0);
        e.at(idx) = 1;
        return Monomial(std::move(e));
    }

    std::size_t num_vars() const { return exps_.size(); }
    std::uint32_t exponent(std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }
    std::uint32_t degree() const { return degree_; }
    bool is_unit() const { return degree_ == 0; }

    Monomial times(const Monomial& o) const {
        internal_check(exps_.size() == o.exps_.size(), "monomial arity mismatch");
        std::vector<std::uint32_t> e(exps_.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] + o.exps_[i];
        return Monomial(std::move(e));
    }

    bool divides(const Monomial& o) const {
        if (exps_.size() != o.exps_.size() || degree_ > o.degree_) return false;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > o.exps_[i]) return false;
        return true;
    }

    /// Exact quotient o / *this is *not* what we want; this is *this / o.
    Monomial divide(const Monomial& o) const {
        internal_check(o.divides(*this), "inexact monomial division");
        std::vector<std::uint32_t> e(exps_.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] - o.exps_[i];
        return Monomial(std::move(e));
    }

    Monomial lcm(const Monomial& o) const {
        internal_check(exps_.size() == o.exps_.size(), "monomial arity mismatch");
        std::vector<std::uint32_t> e(exps_.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exps_[i], o.exps_[i]);
        return Monomial(std::move(e));
    }

    bool coprime(const Monomial& o) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > 0 && o.exps_[i] > 0) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

private:
    std::vector<std::uint32_t> exps_;
    std::uint32_t degree_ = 0;
};

/// A term order on monomials.  `lex` and `degrevlex` act on the whole
/// exponent vector; `block` compares a designated group of variables first
/// (with its own inner order), then the rest, which makes the order an
/// elimination order for the first group.
struct MonomialOrder {
    enum class Kind { lex, degrevlex, block };

    Kind kind = Kind::degrevlex;
    // block orders only:
    std::vector<std::uint8_t> in_first;  // per variable, 1 if in the leading block
    Kind first_kind = Kind::degrevlex;
    Kind second_kind = Kind::degrevlex;

    static MonomialOrder lex() { return MonomialOrder{Kind::lex, {}, Kind::lex, Kind::lex}; }
    static MonomialOrder degrevlex() {
        return MonomialOrder{Kind::degrevlex, {}, Kind::degrevlex, Kind::degrevlex};
    }
    static MonomialOrder block(const std::vector<std::size_t>& first_vars,
                               std::size_t num_vars,
                               Kind first = Kind::degrevlex,
                               Kind second = Kind::degrevlex);

    /// Stable identity string, used as a cache key for Groebner bases.
    std::string key() const;
};

std::strong_ordering order_compare(const Monomial& a, const Monomial& b,
                                   const MonomialOrder& ord);

/// All monomials of the given total degree in num_vars variables, in
/// descending canonical order.
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, std::uint32_t degree);

/// The library-wide canonical order (degrevlex); used for stored term
/// sequences, subspace pivots and printed output.
inline std::strong_ordering canonical_compare(const Monomial& a, const Monomial& b) {
    return order_compare(a, b, MonomialOrder::degrevlex());
}

struct CanonicalMonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return canonical_compare(a, b) == std::strong_ordering::less;
    }
};

struct CanonicalMonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return canonical_compare(a, b) == std::strong_ordering::greater;
    }
};

} // namespace fibercone
