#include "fibercone/ring.hpp"

#include <cctype>
#include <set>

namespace fibercone {

namespace {

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

bool reserved_name(const std::string& s) {
    if (s == "t") return true;
    // X<digits> is reserved for presentation variables
    if (s.size() >= 2 && s[0] == 'X') {
        for (std::size_t i = 1; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    }
    return false;
}

std::vector<std::string> x_names(std::size_t n) {
    std::vector<std::string> v;
    v.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) v.push_back("X" + std::to_string(i));
    return v;
}

} // namespace

RingPtr AmbientRing::base(std::vector<std::string> vars, FieldSpec field) {
    if (vars.empty()) throw InputError("a ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (!valid_identifier(v))
            throw InputError("invalid variable name '" + v + "'");
        if (reserved_name(v))
            throw InputError("variable name '" + v + "' is reserved");
        if (!seen.insert(v).second)
            throw InputError("duplicate variable name '" + v + "'");
    }
    return RingPtr(new AmbientRing(RingRole::base, std::move(vars), field, 0));
}

RingPtr AmbientRing::presentation(std::size_t n, FieldSpec field) {
    if (n == 0) throw InputError("a ring needs at least one variable");
    return RingPtr(new AmbientRing(RingRole::presentation, x_names(n), field, 0));
}

RingPtr AmbientRing::elimination(const AmbientRing& base_ring, std::size_t n) {
    internal_check(base_ring.role() == RingRole::base, "elimination ring needs a base ring");
    std::vector<std::string> vars;
    vars.reserve(1 + base_ring.num_vars() + n);
    vars.push_back("t");
    for (const auto& v : base_ring.var_names()) vars.push_back(v);
    for (auto& v : x_names(n)) vars.push_back(std::move(v));
    return RingPtr(new AmbientRing(RingRole::elimination, std::move(vars),
                                   base_ring.field(), base_ring.num_vars()));
}

RingPtr AmbientRing::with_tag(const AmbientRing& ring) {
    std::size_t tag_no = 0;
    std::string name;
    do {
        name = "#" + std::to_string(tag_no++);
    } while (ring.var_index(name).has_value());
    std::vector<std::string> vars = ring.var_names();
    vars.push_back(name);
    return RingPtr(new AmbientRing(ring.role(), std::move(vars), ring.field(),
                                   ring.role() == RingRole::elimination ? ring.base_count_ : 0));
}

std::optional<std::size_t> AmbientRing::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    return std::nullopt;
}

std::size_t AmbientRing::t_index() const {
    internal_check(role_ == RingRole::elimination, "t_index on non-elimination ring");
    return 0;
}

std::size_t AmbientRing::base_var_index(std::size_t i) const {
    internal_check(role_ == RingRole::elimination && i < base_count_, "base var out of range");
    return 1 + i;
}

std::size_t AmbientRing::x_var_index(std::size_t i) const {
    internal_check(role_ == RingRole::elimination, "x_var_index on non-elimination ring");
    std::size_t idx = 1 + base_count_ + i;
    internal_check(idx < vars_.size(), "X var out of range");
    return idx;
}

std::size_t AmbientRing::base_var_count() const {
    internal_check(role_ == RingRole::elimination, "base_var_count on non-elimination ring");
    return base_count_;
}

std::size_t AmbientRing::x_var_count() const {
    internal_check(role_ == RingRole::elimination, "x_var_count on non-elimination ring");
    return vars_.size() - 1 - base_count_;
}

} // namespace fibercone
