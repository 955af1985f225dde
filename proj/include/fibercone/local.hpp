#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fibercone/subspace.hpp"

namespace fibercone {

/// Generators of an ideal inside the maximal ideal of K[[x_1..x_m]],
/// given by polynomial representatives.
struct IdealSpec {
    RingPtr ring;
    std::vector<Poly> gens;

    /// Validates: base ring, non-empty list, every generator nonzero with
    /// zero constant term.
    static IdealSpec make(RingPtr ring, std::vector<Poly> gens);
};

/// Degree bound under which a power computation is faithful.  Any module M
/// with m*I^i <= M <= I^i contains m^{s*i+1} (s = socle bound), so its image
/// in K[x]/m^degree determines it whenever degree >= s*i + 2.
struct TruncationContext {
    std::uint32_t socle;      // least s with m^s <= I
    std::uint32_t max_power;  // highest power index certified
    std::uint32_t margin;     // extra slack, for stability testing

    std::uint32_t degree() const { return socle * max_power + 2 + margin; }
};

struct LadderOptions {
    std::uint32_t power_cap = 16;
    std::uint32_t socle_cap = 64;
    std::uint32_t margin = 0;  // added to every truncation degree
};

/// Sorted generator-index multiset; (l1 <= ... <= li) encodes the product
/// g_{l1} * ... * g_{li} in I^i.
using IndexMultiset = std::vector<std::size_t>;

/// All size-k multisets over {0..n-1} in lexicographic order.
std::vector<IndexMultiset> index_multisets(std::size_t n, std::uint32_t k);

/// One power I^i of the ladder, truncated at ctx.degree().
struct LadderLevel {
    std::uint32_t power = 0;
    TruncationContext ctx;
    std::vector<IndexMultiset> products;         // lex order, all of Gen(I^i)
    std::vector<Poly> product_polys;             // exact products, same order
    std::map<IndexMultiset, std::size_t> index_of;
    SubspaceBasis power_span;      // image of I^i
    SubspaceBasis m_power_span;    // image of m*I^i
    SubspaceBasis reduction_span;  // image of Q*I^{i-1} + m*I^i
    std::uint32_t new_gen_count = 0;  // u_i = dim I^i / (Q I^{i-1} + m I^i)

    const Poly& product_for(const IndexMultiset& ms) const;
};

/// The chain of powers I^1 .. I^{r+1} relative to a reduction Q, with the
/// data needed to detect r and solve product relations.
class PowerLadder {
public:
    const IdealSpec& ideal() const { return ideal_; }
    const IdealSpec& reduction() const { return reduction_; }
    std::uint32_t socle_bound() const { return socle_; }

    /// Least r with I^{r+1} = Q*I^r locally.
    std::uint32_t reduction_number() const { return static_cast<std::uint32_t>(levels_.size()) - 1; }

    const std::vector<LadderLevel>& levels() const { return levels_; }
    const LadderLevel& level(std::uint32_t power) const;  // 1-based

    /// u_1 .. u_{r+1}; the last entry is always 0.
    std::vector<std::uint32_t> new_gen_counts() const;

    /// Positions of the Q generators inside ideal().gens, when Q was given
    /// that way (required for selection / relation solving).
    const std::optional<std::vector<std::size_t>>& q_positions() const { return q_positions_; }

private:
    friend PowerLadder build_ladder(const IdealSpec&, const IdealSpec&, const LadderOptions&,
                                    std::optional<std::vector<std::size_t>>);
    IdealSpec ideal_;
    IdealSpec reduction_;
    std::uint32_t socle_ = 0;
    std::vector<LadderLevel> levels_;
    std::optional<std::vector<std::size_t>> q_positions_;
};

/// Least s >= 1 with m^s <= I, certified by the linear-algebra test
/// m^s <= I + m^{s+1} at truncation degree s+1.  Throws InputError when the
/// cap is exceeded (I is then most likely not m-primary).
std::uint32_t socle_bound(const IdealSpec& I, std::uint32_t cap = 64);

/// Builds the ladder, detecting r as the least power with u_{r+1} = 0.
/// q_positions, when given, asserts reduction.gens[k] == I.gens[q_positions[k]].
PowerLadder build_ladder(const IdealSpec& I, const IdealSpec& Q,
                         const LadderOptions& opts = {},
                         std::optional<std::vector<std::size_t>> q_positions = std::nullopt);

std::uint32_t reduction_number(const IdealSpec& I, const IdealSpec& Q,
                               const LadderOptions& opts = {});

/// dim_K I^i / m*I^i, the number of minimal generators of I^i (i >= 0).
std::uint32_t power_min_gen_count(const IdealSpec& I, std::uint32_t power,
                                  const LadderOptions& opts = {});

/// For each power 2..r: the greedy choice of products whose classes form a
/// basis of I^i/(Q I^{i-1} + m I^i), scanning Q-free multisets in lex order.
struct MinGenSelection {
    std::map<std::uint32_t, std::vector<IndexMultiset>> chosen;

    bool is_chosen(std::uint32_t power, const IndexMultiset& ms) const;
};

MinGenSelection select_min_gens(const PowerLadder& ladder);

/// A homogeneous degree-i element of Ker phi obtained by rewriting one
/// product of generators: X_{l1}..X_{li} minus the solved combination of
/// chosen minimal-generator monomials and Q-variable terms.
struct ProductRelation {
    std::uint32_t power = 0;
    IndexMultiset indices;
    std::vector<FieldScalar> min_gen_coeffs;  // aligned with selection.chosen[power]
    std::map<std::pair<std::size_t, IndexMultiset>, FieldScalar> param_coeffs;
    Poly relation;  // element of the presentation ring
};

/// Solves, in I^i/m*I^i, for the class of the multiset's product as a
/// combination of the chosen minimal generators (zero when i = r+1) and the
/// products x_p * (q-multiset product) with p a Q position.  Deterministic:
/// columns enter in the order [chosen gens, then (p, q-multiset) lex] and
/// the unique pivot solution is taken.
ProductRelation solve_product_relation(const PowerLadder& ladder,
                                       const MinGenSelection& selection,
                                       const RingPtr& presentation_ring,
                                       const IndexMultiset& multiset);

/// All relations for powers 2..r+1 over eligible multisets (Q-free, not
/// chosen), ordered by (power, multiset lex).  This generates the candidate
/// defining ideal.
std::vector<ProductRelation> candidate_relations(const PowerLadder& ladder,
                                                 const MinGenSelection& selection,
                                                 const RingPtr& presentation_ring);

/// 1 + sum of u_i for 1 <= i <= r: the colength of the parameter image in
/// the fiber cone.
std::uint64_t fiber_colength_rhs(const PowerLadder& ladder);

/// Local vs exact-polynomial membership of each spanning product of I^i in
/// Q*I^{i-1}: the local test uses the reduction_span subspace (with its
/// m-correction), the polynomial test uses Groebner normal forms in K[x].
struct MembershipGapEntry {
    IndexMultiset indices;
    bool local_member = false;
    bool polynomial_member = false;
};

struct MembershipGapReport {
    std::uint32_t power = 0;
    std::vector<MembershipGapEntry> entries;

    std::vector<IndexMultiset> witnesses() const;  // entries where the two disagree
};

MembershipGapReport membership_gap(const PowerLadder& ladder, std::uint32_t power);

} // namespace fibercone
