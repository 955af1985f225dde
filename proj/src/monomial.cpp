#include "fibercone/monomial.hpp"

#include <algorithm>
#include <sstream>

namespace fibercone {

namespace {

// Compare restricted to the positions where pick[i] == want (or to all
// positions when pick is empty).
std::strong_ordering cmp_subvector(const Monomial& a, const Monomial& b,
                                   MonomialOrder::Kind kind,
                                   const std::vector<std::uint8_t>& pick,
                                   std::uint8_t want) {
    const std::size_t n = a.num_vars();
    auto selected = [&](std::size_t i) { return pick.empty() || pick[i] == want; };

    if (kind == MonomialOrder::Kind::lex) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!selected(i)) continue;
            if (a.exponent(i) != b.exponent(i))
                return a.exponent(i) <=> b.exponent(i);
        }
        return std::strong_ordering::equal;
    }

    // degrevlex: higher total degree wins; on ties the *last* position where
    // the exponents differ decides, and the smaller exponent there wins.
    long da = 0, db = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!selected(i)) continue;
        da += a.exponent(i);
        db += b.exponent(i);
    }
    if (da != db) return da <=> db;
    for (std::size_t i = n; i-- > 0;) {
        if (!selected(i)) continue;
        if (a.exponent(i) != b.exponent(i))
            return b.exponent(i) <=> a.exponent(i);
    }
    return std::strong_ordering::equal;
}

} // namespace

MonomialOrder MonomialOrder::block(const std::vector<std::size_t>& first_vars,
                                   std::size_t num_vars, Kind first, Kind second) {
    internal_check(first != Kind::block && second != Kind::block, "nested block order");
    MonomialOrder ord;
    ord.kind = Kind::block;
    ord.first_kind = first;
    ord.second_kind = second;
    ord.in_first.assign(num_vars, 0);
    for (std::size_t v : first_vars) {
        internal_check(v < num_vars, "block variable out of range");
        ord.in_first[v] = 1;
    }
    return ord;
}

std::string MonomialOrder::key() const {
    switch (kind) {
    case Kind::lex: return "lex";
    case Kind::degrevlex: return "degrevlex";
    case Kind::block: {
        std::ostringstream out;
        out << "block:" << (first_kind == Kind::lex ? "lex" : "drl") << '/'
            << (second_kind == Kind::lex ? "lex" : "drl") << ':';
        for (std::uint8_t f : in_first) out << (f ? '1' : '0');
        return out.str();
    }
    }
    return "?";
}

namespace {

void enumerate_degree(std::size_t pos, std::uint32_t remaining,
                      std::vector<std::uint32_t>& exps, std::vector<Monomial>& out) {
    if (pos + 1 == exps.size()) {
        exps[pos] = remaining;
        out.emplace_back(exps);
        exps[pos] = 0;
        return;
    }
    for (std::uint32_t e = remaining + 1; e-- > 0;) {
        exps[pos] = e;
        enumerate_degree(pos + 1, remaining - e, exps, out);
    }
    exps[pos] = 0;
}

} // namespace

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, std::uint32_t degree) {
    internal_check(num_vars > 0, "monomials_of_degree needs variables");
    std::vector<Monomial> out;
    std::vector<std::uint32_t> exps(num_vars, 0);
    enumerate_degree(0, degree, exps, out);
    std::sort(out.begin(), out.end(), CanonicalMonomialGreater{});
    return out;
}

std::strong_ordering order_compare(const Monomial& a, const Monomial& b,
                                   const MonomialOrder& ord) {
    internal_check(a.num_vars() == b.num_vars(), "monomial arity mismatch");
    switch (ord.kind) {
    case MonomialOrder::Kind::lex:
        return cmp_subvector(a, b, MonomialOrder::Kind::lex, {}, 1);
    case MonomialOrder::Kind::degrevlex:
        if (a.degree() != b.degree()) return a.degree() <=> b.degree();
        return cmp_subvector(a, b, MonomialOrder::Kind::degrevlex, {}, 1);
    case MonomialOrder::Kind::block: {
        internal_check(ord.in_first.size() == a.num_vars(), "block order arity mismatch");
        auto first = cmp_subvector(a, b, ord.first_kind, ord.in_first, 1);
        if (first != std::strong_ordering::equal) return first;
        return cmp_subvector(a, b, ord.second_kind, ord.in_first, 0);
    }
    }
    throw InternalError("unknown monomial order");
}

} // namespace fibercone
