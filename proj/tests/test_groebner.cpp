#include <algorithm>

#include "doctest.h"

#include "fibercone/groebner.hpp"

#include "support.hpp"

using namespace fibercone;
using testsupport::P;
using testsupport::Rng;
using testsupport::ring2;

namespace {

/// Brute-force colength of a monomial ideal: count monomials below the
/// pure-power box that no generator divides.  Independent of any basis
/// computation -- membership for monomial ideals is plain divisibility.
std::uint64_t colength_by_divisibility(const std::vector<Poly>& gens, std::size_t nv) {
    std::vector<std::uint32_t> box(nv, 0);
    for (std::size_t v = 0; v < nv; ++v) {
        for (const auto& g : gens) {
            const Monomial& m = g.leading_term().mon;
            bool pure = m.exponent(v) > 0;
            for (std::size_t w = 0; w < nv && pure; ++w)
                if (w != v && m.exponent(w) > 0) pure = false;
            if (pure && (box[v] == 0 || m.exponent(v) < box[v])) box[v] = m.exponent(v);
        }
        REQUIRE(box[v] > 0);  // instance generation guarantees a pure power
    }
    std::uint64_t count = 0;
    std::vector<std::uint32_t> e(nv, 0);
    for (;;) {
        Monomial m{std::vector<std::uint32_t>(e)};
        bool member = false;
        for (const auto& g : gens)
            if (g.leading_term().mon.divides(m)) { member = true; break; }
        if (!member) ++count;
        std::size_t pos = 0;
        while (pos < nv && e[pos] + 1 >= box[pos]) e[pos++] = 0;
        if (pos == nv) break;
        ++e[pos];
    }
    return count;
}

} // namespace

TEST_CASE("reduced basis of a principal ideal is its monic generator") {
    auto R = AmbientRing::presentation(1, FieldSpec::rationals());
    auto gb = buchberger(R, {P("X1^2", R)}, MonomialOrder::degrevlex());
    REQUIRE(gb.polys().size() == 1);
    CHECK(gb.polys()[0] == P("X1^2", R));
    auto gb2 = buchberger(R, {P("3*X1^2", R)}, MonomialOrder::degrevlex());
    CHECK(gb2.polys()[0] == P("X1^2", R));
}

TEST_CASE("substitution chain reduces under lex") {
    auto R = AmbientRing::presentation(3, FieldSpec::rationals());
    auto gb = buchberger(R, {P("X1 - X2^2", R), P("X2 - X3", R)}, MonomialOrder::lex());
    REQUIRE(gb.polys().size() == 2);
    // reduced: the X2^2 tail of the first element rewrites to X3^2
    CHECK(gb.polys()[0] == P("X2 - X3", R));
    CHECK(gb.polys()[1] == P("X1 - X3^2", R));
    CHECK(normal_form(P("X1", R), gb) == P("X3^2", R));
    CHECK(normal_form(P("X1 - X2*X3", R), gb).is_zero());
}

TEST_CASE("S-polynomials produce generators below the input degrees") {
    auto R = ring2();
    // worked by hand: S(f1,f2) = -x^2, then -2xy, then -2y^2 + x, and both
    // inputs interreduce to zero, leaving a three-element reduced basis
    auto gb = buchberger(R, {P("x^3 - 2*x*y", R), P("x^2*y - 2*y^2 + x", R)},
                         MonomialOrder::degrevlex());
    REQUIRE(gb.polys().size() == 3);
    bool sq = false, mixed = false, tail = false;
    for (const auto& p : gb.polys()) {
        if (p == P("x^2", R)) sq = true;
        if (p == P("x*y", R)) mixed = true;
        if (p == P("y^2 - 1/2*x", R)) tail = true;
    }
    CHECK(sq);
    CHECK(mixed);
    CHECK(tail);
    CHECK(ideal_membership(P("x^3 - 2*x*y", R), IdealHandle(R, gb.polys())));
}

TEST_CASE("coprime leading monomials need no S-polynomial") {
    auto S = AmbientRing::presentation(3, FieldSpec::rationals());
    // under degrevlex the leading monomials are X2^2 and X1^2; since they are
    // coprime, the pair is already a reduced basis
    auto gb = buchberger(S, {P("X1*X3 - X2^2", S), P("X2*X3 - X1^2", S)},
                         MonomialOrder::degrevlex());
    REQUIRE(gb.polys().size() == 2);
    bool first = false, second = false;
    for (const auto& p : gb.polys()) {
        if (p == P("X2^2 - X1*X3", S)) first = true;
        if (p == P("X1^2 - X2*X3", S)) second = true;
    }
    CHECK(first);
    CHECK(second);
    // membership still sees consequences of the S-pair that was skipped:
    // X1^3 rewrites to X1*X2*X3 and so does X2^3
    CHECK(ideal_membership(P("X1^3 - X2^3", S), IdealHandle(S, gb.polys())));
    CHECK(ideal_membership(P("X1^4 - X1*X2^3", S), IdealHandle(S, gb.polys())));
    CHECK(!ideal_membership(P("X1*X2 - X3^2", S), IdealHandle(S, gb.polys())));
}

TEST_CASE("reduced basis is independent of generator order and scaling") {
    auto R = ring2();
    std::vector<Poly> gens = {P("x^2 - y", R), P("x*y - 1", R), P("y^2 - x", R)};
    auto gb1 = buchberger(R, gens, MonomialOrder::degrevlex());
    std::vector<Poly> shuffled = {gens[2].scaled(FieldScalar::from_integer(5, R->field())),
                                  gens[0], gens[1].scaled(FieldScalar::from_fraction(
                                               "1", "3", R->field()))};
    auto gb2 = buchberger(R, shuffled, MonomialOrder::degrevlex());
    REQUIRE(gb1.polys().size() == gb2.polys().size());
    for (std::size_t i = 0; i < gb1.polys().size(); ++i)
        CHECK(gb1.polys()[i] == gb2.polys()[i]);
}

TEST_CASE("normal form is idempotent and linear") {
    auto R = ring2();
    auto gb = buchberger(R, {P("x^2 - y^3", R), P("x*y^2 - x", R)},
                         MonomialOrder::degrevlex());
    Rng rng(7);
    for (int k = 0; k < 20; ++k) {
        std::vector<Term> terms;
        for (int t = 0; t < 4; ++t) {
            Monomial m({static_cast<std::uint32_t>(rng.below(5)),
                        static_cast<std::uint32_t>(rng.below(5))});
            terms.push_back({m, FieldScalar::from_integer(
                                    static_cast<long long>(rng.range(1, 9)), R->field())});
        }
        Poly p = Poly::from_terms(R, terms);
        Poly r = normal_form(p, gb);
        CHECK(normal_form(r, gb) == r);
        CHECK(ideal_membership(p - r, IdealHandle(R, {P("x^2 - y^3", R), P("x*y^2 - x", R)})));
    }
}

TEST_CASE("artinian colength by standard monomials") {
    auto R = ring2();
    CHECK(artinian_colength(IdealHandle(R, {P("x^2", R), P("y^3", R)})) == 6);
    CHECK(artinian_colength(IdealHandle(R, {P("x", R), P("y", R)})) == 1);
    CHECK(artinian_colength(IdealHandle(R, {P("x^2", R), P("x*y", R), P("y^2", R)})) == 3);
    // mixed generators still cut out a finite quotient
    CHECK(artinian_colength(IdealHandle(R, {P("x^2 - y", R), P("y^2", R)})) == 4);
    // not Artinian: no pure power of y
    CHECK_THROWS_AS(artinian_colength(IdealHandle(R, {P("x", R)})), InputError);
    // unit ideal
    auto one = Poly::constant(R, FieldScalar::one(R->field()));
    CHECK(artinian_colength(IdealHandle(R, {one})) == 0);
}

TEST_CASE("colength agrees with brute-force divisibility counting") {
    Rng rng(4242);
    for (int inst = 0; inst < 30; ++inst) {
        std::size_t nv = 2 + rng.below(3);  // 2..4 variables
        std::vector<std::string> names;
        for (std::size_t v = 0; v < nv; ++v) names.push_back(std::string(1, char('a' + v)));
        auto R = AmbientRing::base(names, FieldSpec::rationals());
        auto gens = testsupport::random_artinian_monomials(rng, nv, 6, R);
        CHECK(artinian_colength(IdealHandle(R, gens)) ==
              colength_by_divisibility(gens, nv));
    }
}

TEST_CASE("ideal membership, containment, equality") {
    auto R = ring2();
    IdealHandle A(R, {P("x^2", R), P("y", R)});
    IdealHandle B(R, {P("x^2 + y", R), P("y", R)});
    IdealHandle C(R, {P("x^2", R)});
    CHECK(ideal_equal(A, B));
    CHECK(ideal_contains(A, C));
    CHECK(!ideal_contains(C, A));
    CHECK(!ideal_equal(A, C));
    CHECK(ideal_membership(P("x^3 + x*y", R), A));
    CHECK(!ideal_membership(P("x", R), A));
}

TEST_CASE("intersection and colon") {
    auto R = ring2();
    IdealHandle X(R, {P("x", R)});
    IdealHandle Y(R, {P("y", R)});
    CHECK(ideal_equal(ideal_intersection(X, Y), IdealHandle(R, {P("x*y", R)})));

    // ((x y) : x) = (y); ((x^2) : x) = (x)
    CHECK(ideal_equal(ideal_colon(IdealHandle(R, {P("x*y", R)}), X),
                      IdealHandle(R, {P("y", R)})));
    CHECK(ideal_equal(ideal_colon(IdealHandle(R, {P("x^2", R)}), X), X));

    // (J : 1) = J and J <= (J : f) in general
    IdealHandle J(R, {P("x^2 - y^3", R), P("x*y", R)});
    auto one = Poly::constant(R, FieldScalar::one(R->field()));
    CHECK(ideal_equal(ideal_colon(J, IdealHandle(R, {one})), J));
    auto quot = ideal_colon(J, IdealHandle(R, {P("x", R)}));
    CHECK(ideal_contains(quot, J));
    // colon against several elements is the intersection of the colons
    auto by_pair = ideal_colon(J, IdealHandle(R, {P("x", R), P("y", R)}));
    auto manual = ideal_intersection(ideal_colon(J, IdealHandle(R, {P("x", R)})),
                                     ideal_colon(J, IdealHandle(R, {P("y", R)})));
    CHECK(ideal_equal(by_pair, manual));
}

TEST_CASE("elimination projects onto the retained variables") {
    // eliminate t from (X1 - x^2 t, X2 - x^3 t) inside K[t, x, X1, X2]:
    // the contraction to K[x, X1, X2] is (x X1 - X2)
    auto R = ring2();
    auto E = AmbientRing::elimination(*AmbientRing::base({"x"}, FieldSpec::rationals()), 2);
    // E = [t, x, X1, X2]
    IdealHandle rees(E, {P("X1 - x^2*t", E), P("X2 - x^3*t", E)});
    IdealHandle contracted = eliminate(rees, {E->t_index()});
    REQUIRE(contracted.gens().size() == 1);
    CHECK(contracted.gens()[0] == P("x*X1 - X2", E));
    (void)R;
}

TEST_CASE("quotient dimension of homogeneous ideals") {
    auto S = AmbientRing::presentation(3, FieldSpec::rationals());
    CHECK(quotient_dimension(IdealHandle(S, {})) == 3);
    CHECK(quotient_dimension(IdealHandle(S, {P("X1*X3 - X2^2", S)})) == 2);
    CHECK(quotient_dimension(IdealHandle(S, {P("X1", S), P("X2", S), P("X3", S)})) == 0);
    CHECK(quotient_dimension(IdealHandle(S, {P("X1*X2", S), P("X1*X3", S)})) == 2);
    CHECK_THROWS_AS(quotient_dimension(IdealHandle(S, {P("X1 - X2^2", S)})), InputError);
}

TEST_CASE("hilbert function of graded quotients") {
    auto S = AmbientRing::presentation(2, FieldSpec::rationals());
    auto hf = hilbert_function(IdealHandle(S, {}), 4);
    CHECK(hf == std::vector<std::uint64_t>{1, 2, 3, 4, 5});
    auto conic = hilbert_function(IdealHandle(S, {P("X1*X2", S)}), 4);
    CHECK(conic == std::vector<std::uint64_t>{1, 2, 2, 2, 2});
    CHECK_THROWS_AS(hilbert_function(IdealHandle(S, {P("X1 - X2^2", S)}), 3), InputError);
}

TEST_CASE("degree cap aborts runaway bases") {
    auto R = ring2();
    GroebnerOptions opts;
    opts.max_degree = 2;
    CHECK_THROWS_AS(buchberger(R, {P("x^3 - y", R), P("x*y^3 - x", R)},
                               MonomialOrder::lex(), opts),
                    ResourceError);
}
