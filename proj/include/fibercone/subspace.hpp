#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "fibercone/poly.hpp"

namespace fibercone {

/// Exact K-linear subspace of the truncation K[x]/(all monomials of degree
/// >= trunc_degree), kept in fully reduced row-echelon form: each row is
/// monic with a distinct pivot monomial (its canonical leading monomial),
/// and no row's pivot occurs in any other row.
class SubspaceBasis {
public:
    SubspaceBasis(RingPtr ring, std::uint32_t trunc_degree);

    /// Inserts the truncation of v; returns true if the dimension grew.
    bool insert(const Poly& v);

    /// Canonical representative of v modulo the subspace: the unique
    /// element of v + span whose support avoids every pivot monomial.
    Poly reduce(const Poly& v) const;

    bool contains(const Poly& v) const { return reduce(v).is_zero(); }

    std::size_t dimension() const { return rows_.size(); }
    std::uint32_t truncation_degree() const { return trunc_; }
    const RingPtr& ring() const { return ring_; }

    /// Rows in ascending pivot order.
    std::vector<Poly> rows() const;

private:
    RingPtr ring_;
    std::uint32_t trunc_;
    std::map<Monomial, Poly, CanonicalMonomialLess> rows_;  // pivot -> monic row
};

/// Span of all monomial multiples of the generators inside the degree
/// truncation: the image of the ideal (gens) in K[x]/m^trunc_degree.
/// Computed by closing the generator span under multiplication by each
/// variable (sound because truncation commutes with those products).
SubspaceBasis ideal_image(RingPtr ring, const std::vector<Poly>& gens,
                          std::uint32_t trunc_degree);

/// Row echelon form with provenance: every inserted vector is tagged with a
/// column id, and express() writes a target as an explicit combination of
/// the inserted vectors.  Insertion order fixes which columns become
/// pivots, so for a fixed column ordering the answer is deterministic:
/// columns are consumed greedily, and the returned combination never uses a
/// column that was dependent on earlier ones.
class CombinationSolver {
public:
    explicit CombinationSolver(RingPtr ring);

    /// Returns false (and records nothing) if v is dependent on the rows
    /// already present.
    bool insert(const Poly& v, std::size_t column);

    /// Writes target as sum(coeff[c] * inserted[c]); nullopt if target is
    /// outside the span.  Only nonzero coefficients are reported.
    std::optional<std::map<std::size_t, FieldScalar>> express(const Poly& target) const;

    std::size_t rank() const { return rows_.size(); }

private:
    struct Row {
        Poly vec;                                    // monic
        std::map<std::size_t, FieldScalar> combo;    // vec = sum combo[c] * inserted[c]
    };

    RingPtr ring_;
    std::map<Monomial, Row, CanonicalMonomialLess> rows_;  // pivot -> row
};

} // namespace fibercone
