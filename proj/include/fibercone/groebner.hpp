#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fibercone/poly.hpp"

namespace fibercone {

struct GroebnerOptions {
    std::size_t max_basis = 20000;   // elements retained during the run
    std::uint32_t max_degree = 0;    // 0 = unbounded; else cap on new leading terms
};

/// The unique reduced Groebner basis of an ideal under a fixed order:
/// monic elements, pairwise leading terms not dividing any term of another
/// element, sorted ascending by leading monomial.
class GroebnerBasis {
public:
    GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<Poly> reduced);

    const RingPtr& ring() const { return ring_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Poly>& polys() const { return polys_; }
    bool is_trivial_unit() const;  // ideal == (1)

    /// Leading monomial of each basis element under the basis order.
    const std::vector<Monomial>& leading_monomials() const { return lead_; }

    /// Terms of each element sorted descending under the basis order
    /// (cached for division).
    const std::vector<std::vector<Term>>& ordered_terms() const { return ordered_; }

private:
    RingPtr ring_;
    MonomialOrder order_;
    std::vector<Poly> polys_;
    std::vector<Monomial> lead_;
    std::vector<std::vector<Term>> ordered_;
};

/// Buchberger's algorithm with the normal selection strategy (lowest lcm
/// degree first), the coprimality criterion and the chain criterion;
/// returns the reduced basis.  Deterministic for a fixed input list, and
/// the result is independent of generator order by uniqueness.
GroebnerBasis buchberger(RingPtr ring, const std::vector<Poly>& gens,
                         const MonomialOrder& order, const GroebnerOptions& opts = {});

/// Remainder of full multivariate division: no term of the result is
/// divisible by any basis leading term, and p - NF(p) lies in the ideal.
Poly normal_form(const Poly& p, const GroebnerBasis& gb);

/// Generator list with lazily cached Groebner bases, one per order.
class IdealHandle {
public:
    IdealHandle(RingPtr ring, std::vector<Poly> gens, GroebnerOptions opts = {});

    const RingPtr& ring() const { return ring_; }
    const std::vector<Poly>& gens() const { return gens_; }
    const GroebnerOptions& options() const { return opts_; }

    const GroebnerBasis& groebner(const MonomialOrder& order = MonomialOrder::degrevlex()) const;

private:
    RingPtr ring_;
    std::vector<Poly> gens_;
    GroebnerOptions opts_;
    mutable std::map<std::string, std::shared_ptr<const GroebnerBasis>> cache_;
};

/// Number of monomials outside the leading-term ideal = dim_K of the
/// quotient.  Throws InputError when some variable has no pure power among
/// the leading terms (quotient not finite-dimensional).
std::uint64_t artinian_colength(const IdealHandle& ideal);

bool ideal_membership(const Poly& p, const IdealHandle& ideal);
bool ideal_contains(const IdealHandle& outer, const IdealHandle& inner);
bool ideal_equal(const IdealHandle& a, const IdealHandle& b);

/// (J : F) = intersection over F's generators f of (J : f), each computed
/// by the tag-variable intersection J cap (f) followed by exact division.
IdealHandle ideal_colon(const IdealHandle& J, const IdealHandle& F);

/// Intersection of two ideals via a tag variable w: eliminate w from
/// w*A + (1-w)*B.
IdealHandle ideal_intersection(const IdealHandle& A, const IdealHandle& B);

/// Generators of the ideal's contraction to the subring without the given
/// variables, via a block elimination order.  The result lives in the same
/// ring but involves only retained variables.
IdealHandle eliminate(const IdealHandle& ideal, const std::vector<std::size_t>& drop_vars);

/// Krull dimension of the quotient by a homogeneous ideal, via maximal
/// variable subsets independent of the leading-term ideal.
std::size_t quotient_dimension(const IdealHandle& ideal);

/// dim_K of each graded piece of the quotient by a homogeneous ideal, for
/// degrees 0..max_degree.
std::vector<std::uint64_t> hilbert_function(const IdealHandle& ideal, std::uint32_t max_degree);

} // namespace fibercone
