#include "fibercone/parse.hpp"

#include <cctype>

namespace fibercone {

namespace {

class Parser {
public:
    Parser(const std::string& text, RingPtr ring)
        : text_(text), ring_(std::move(ring)) {}

    Poly run() {
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("parse error at position " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    std::string read_digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) fail("expected a number");
        return text_.substr(start, pos_ - start);
    }

    std::string read_identifier() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ >= text_.size() ||
            (!std::isalpha(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '_'))
            fail("expected a variable name");
        ++pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    std::uint32_t read_exponent() {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '-') fail("malformed exponent (must be a nonnegative integer)");
        std::string d = read_digits();
        if (d.size() > 6) fail("exponent too large");
        return static_cast<std::uint32_t>(std::stoul(d));
    }

    Poly expr() {
        bool neg = eat('-');
        Poly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else return acc;
        }
    }

    Poly term() {
        Poly acc = factor();
        while (eat('*')) acc *= factor();
        return acc;
    }

    Poly factor() {
        char c = peek();
        if (c == '(') {
            eat('(');
            Poly inner = expr();
            if (!eat(')')) fail("expected ')'");
            if (eat('^')) return inner.pow(read_exponent());
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = read_digits();
            if (eat('/')) {
                std::string den = read_digits();
                return Poly::constant(ring_, FieldScalar::from_fraction(num, den, ring_->field()));
            }
            return Poly::constant(ring_, FieldScalar::from_decimal(num, ring_->field()));
        }
        std::string name = read_identifier();
        auto idx = ring_->var_index(name);
        if (!idx) fail("unknown variable '" + name + "'");
        Poly v = Poly::variable(ring_, *idx);
        if (eat('^')) return v.pow(read_exponent());
        return v;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    RingPtr ring_;
};

} // namespace

Poly parse_poly(const std::string& text, RingPtr ring) {
    internal_check(static_cast<bool>(ring), "parse_poly without a ring");
    return Parser(text, std::move(ring)).run();
}

} // namespace fibercone
