#pragma once

// Shared helpers for the test binaries: a deterministic RNG and generators
// for random monomial-ideal instances.

#include <cstdint>
#include <string>
#include <vector>

#include "fibercone/local.hpp"
#include "fibercone/parse.hpp"

namespace testsupport {

// splitmix64: tiny, fully deterministic, identical on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    /// Uniform in [lo, hi] inclusive.
    std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
        return lo + below(hi - lo + 1);
    }

private:
    std::uint64_t state_;
};

inline fibercone::RingPtr ring2(fibercone::FieldSpec k = fibercone::FieldSpec::rationals()) {
    return fibercone::AmbientRing::base({"x", "y"}, k);
}

inline fibercone::Poly P(const std::string& text, const fibercone::RingPtr& ring) {
    return fibercone::parse_poly(text, ring);
}

/// A random m-primary monomial ideal in two variables whose socle bound is
/// at most 5: pure powers x^a, y^b with a + b <= 6 (so m^(a+b-1) <= (x^a,y^b))
/// plus up to three interior monomials, which only shrink the socle.
inline std::vector<fibercone::Poly> random_primary_monomials(Rng& rng,
                                                             const fibercone::RingPtr& ring) {
    using namespace fibercone;
    const std::uint32_t a = static_cast<std::uint32_t>(rng.range(1, 5));
    const std::uint32_t b = static_cast<std::uint32_t>(rng.range(1, 6 - a));
    std::vector<Monomial> mons;
    mons.push_back(Monomial({a, 0}));
    mons.push_back(Monomial({0, b}));
    const std::uint64_t extras = rng.below(4);
    for (std::uint64_t k = 0; k < extras && a > 1 && b > 1; ++k) {
        Monomial m({static_cast<std::uint32_t>(rng.range(1, a - 1)),
                    static_cast<std::uint32_t>(rng.range(1, b - 1))});
        bool redundant = false;
        for (const auto& o : mons)
            if (o.divides(m)) { redundant = true; break; }
        if (redundant) continue;
        std::vector<Monomial> kept;
        for (auto& o : mons)
            if (!m.divides(o)) kept.push_back(std::move(o));
        kept.push_back(std::move(m));
        mons = std::move(kept);
    }
    std::vector<Poly> gens;
    for (const auto& m : mons)
        gens.push_back(Poly::monomial_term(ring, m, FieldScalar::one(ring->field())));
    return gens;
}

/// A random Artinian monomial ideal: one pure power per variable (exponent
/// <= max_degree) plus a few random monomials of degree <= max_degree.
inline std::vector<fibercone::Poly> random_artinian_monomials(Rng& rng, std::size_t num_vars,
                                                              std::uint32_t max_degree,
                                                              const fibercone::RingPtr& ring) {
    using namespace fibercone;
    std::vector<Poly> gens;
    for (std::size_t v = 0; v < num_vars; ++v) {
        std::vector<std::uint32_t> e(num_vars, 0);
        e[v] = static_cast<std::uint32_t>(rng.range(1, max_degree));
        gens.push_back(Poly::monomial_term(ring, Monomial(std::move(e)),
                                           FieldScalar::one(ring->field())));
    }
    const std::uint64_t extras = rng.below(4);
    for (std::uint64_t k = 0; k < extras; ++k) {
        std::vector<std::uint32_t> e(num_vars, 0);
        std::uint32_t left = max_degree;
        for (std::size_t v = 0; v < num_vars && left > 0; ++v) {
            e[v] = static_cast<std::uint32_t>(rng.below(left + 1));
            left -= e[v];
        }
        Monomial m(std::move(e));
        if (m.is_unit()) continue;
        gens.push_back(Poly::monomial_term(ring, m, FieldScalar::one(ring->field())));
    }
    return gens;
}

} // namespace testsupport
