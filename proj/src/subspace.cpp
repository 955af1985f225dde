#include "fibercone/subspace.hpp"

#include <deque>

namespace fibercone {

SubspaceBasis::SubspaceBasis(RingPtr ring, std::uint32_t trunc_degree)
    : ring_(std::move(ring)), trunc_(trunc_degree) {
    internal_check(trunc_ > 0, "truncation degree must be positive");
}

Poly SubspaceBasis::reduce(const Poly& v) const {
    Poly w = v.truncated(trunc_);
    // Each pass eliminates the largest pivot monomial present in w.  Row
    // tails contain no pivots (full RREF), so the count of pivot monomials
    // in w strictly decreases and the loop terminates.
    for (;;) {
        const Term* hit = nullptr;
        const Poly* row = nullptr;
        for (const auto& t : w.terms()) {
            auto it = rows_.find(t.mon);
            if (it != rows_.end()) {
                hit = &t;
                row = &it->second;
                break;  // terms are descending, so this is the largest pivot
            }
        }
        if (!hit) return w;
        w -= row->scaled(hit->coeff);
    }
}

bool SubspaceBasis::insert(const Poly& v) {
    Poly r = reduce(v);
    if (r.is_zero()) return false;
    r = r.monic();
    const Monomial pivot = r.leading_term().mon;
    // Restore full reduction: the new pivot may occur in existing tails.
    for (auto& [p, row] : rows_) {
        for (const auto& t : row.terms()) {
            if (t.mon == pivot) {
                row -= r.scaled(t.coeff);
                break;
            }
        }
    }
    rows_.emplace(pivot, std::move(r));
    return true;
}

std::vector<Poly> SubspaceBasis::rows() const {
    std::vector<Poly> out;
    out.reserve(rows_.size());
    for (const auto& [p, row] : rows_) out.push_back(row);
    return out;
}

SubspaceBasis ideal_image(RingPtr ring, const std::vector<Poly>& gens,
                          std::uint32_t trunc_degree) {
    SubspaceBasis basis(ring, trunc_degree);
    std::deque<Poly> queue;
    for (const auto& g : gens) {
        Poly t = g.truncated(trunc_degree);
        if (basis.insert(t)) queue.push_back(std::move(t));
    }
    // The span of an ideal's image is the closure of the generator span
    // under multiplication by the variables; every vector that enlarged the
    // span gets each of its variable multiples tried in turn.
    const std::size_t nv = ring->num_vars();
    while (!queue.empty()) {
        Poly v = std::move(queue.front());
        queue.pop_front();
        for (std::size_t i = 0; i < nv; ++i) {
            Poly w = v.times_monomial(Monomial::variable(i, nv)).truncated(trunc_degree);
            if (w.is_zero()) continue;
            if (basis.insert(w)) queue.push_back(std::move(w));
        }
    }
    return basis;
}

CombinationSolver::CombinationSolver(RingPtr ring) : ring_(std::move(ring)) {}

bool CombinationSolver::insert(const Poly& v, std::size_t column) {
    Poly w = v;
    std::map<std::size_t, FieldScalar> combo;
    combo.emplace(column, FieldScalar::one(ring_->field()));
    // Plain echelon reduction (tails may contain other pivots); every pass
    // removes the largest pivot present, so it terminates.
    for (;;) {
        if (w.is_zero()) return false;
        auto it = rows_.find(w.leading_term().mon);
        if (it == rows_.end()) break;
        FieldScalar c = w.leading_term().coeff;
        w -= it->second.vec.scaled(c);
        for (const auto& [col, s] : it->second.combo) {
            auto jt = combo.find(col);
            if (jt == combo.end())
                combo.emplace(col, -(c * s));
            else {
                jt->second -= c * s;
                if (jt->second.is_zero()) combo.erase(jt);
            }
        }
    }
    FieldScalar lead = w.leading_term().coeff;
    FieldScalar inv = lead.inverse();
    Poly monic = w.scaled(inv);
    std::map<std::size_t, FieldScalar> scaled_combo;
    for (auto& [col, s] : combo) {
        FieldScalar c = s * inv;
        if (!c.is_zero()) scaled_combo.emplace(col, std::move(c));
    }
    Monomial pivot = monic.leading_term().mon;
    rows_.emplace(std::move(pivot), Row{std::move(monic), std::move(scaled_combo)});
    return true;
}

std::optional<std::map<std::size_t, FieldScalar>>
CombinationSolver::express(const Poly& target) const {
    Poly w = target;
    std::map<std::size_t, FieldScalar> combo;
    while (!w.is_zero()) {
        auto it = rows_.find(w.leading_term().mon);
        if (it == rows_.end()) return std::nullopt;
        FieldScalar c = w.leading_term().coeff;
        w -= it->second.vec.scaled(c);
        for (const auto& [col, s] : it->second.combo) {
            auto jt = combo.find(col);
            if (jt == combo.end())
                combo.emplace(col, c * s);
            else {
                jt->second += c * s;
                if (jt->second.is_zero()) combo.erase(jt);
            }
        }
    }
    return combo;
}

} // namespace fibercone
