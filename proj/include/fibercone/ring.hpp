#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fibercone/field.hpp"

namespace fibercone {

/// What a polynomial ring is used for.  `base` holds the input ideal's
/// variables, `presentation` holds X1..Xn (the fiber-cone generators),
/// `elimination` holds [t, base vars, X1..Xn] for Rees-algebra work.
enum class RingRole { base, presentation, elimination };

class AmbientRing;
using RingPtr = std::shared_ptr<const AmbientRing>;

class AmbientRing {
public:
    /// Base ring over user-named variables.  Names must be distinct
    /// identifiers and may not collide with the reserved names `t`,
    /// `X1`, `X2`, ...
    static RingPtr base(std::vector<std::string> vars, FieldSpec field);

    /// Presentation ring K[X1..Xn].
    static RingPtr presentation(std::size_t n, FieldSpec field);

    /// Elimination ring K[t, <base vars>, X1..Xn] over the same field.
    static RingPtr elimination(const AmbientRing& base_ring, std::size_t n);

    /// Internal workspace ring: the given ring plus one trailing variable
    /// whose name ("#0", "#1", ...) the expression parser can never
    /// produce, so it cannot collide with user variables.  Used for colon
    /// and intersection computations.
    static RingPtr with_tag(const AmbientRing& ring);

    std::size_t num_vars() const { return vars_.size(); }
    const std::string& var_name(std::size_t i) const { return vars_.at(i); }
    const std::vector<std::string>& var_names() const { return vars_; }
    std::optional<std::size_t> var_index(const std::string& name) const;

    const FieldSpec& field() const { return field_; }
    RingRole role() const { return role_; }

    // Layout of an elimination ring.
    std::size_t t_index() const;
    std::size_t base_var_index(std::size_t i) const;
    std::size_t x_var_index(std::size_t i) const;
    std::size_t base_var_count() const;
    std::size_t x_var_count() const;

    /// Structural equality: same role, field and variable names.  Two rings
    /// built independently with the same data are interchangeable.
    bool same_as(const AmbientRing& o) const {
        return role_ == o.role_ && field_ == o.field_ && vars_ == o.vars_;
    }

private:
    AmbientRing(RingRole role, std::vector<std::string> vars, FieldSpec field,
                std::size_t base_count)
        : role_(role), vars_(std::move(vars)), field_(field), base_count_(base_count) {}

    RingRole role_;
    std::vector<std::string> vars_;
    FieldSpec field_;
    std::size_t base_count_ = 0;  // elimination rings only
};

} // namespace fibercone
