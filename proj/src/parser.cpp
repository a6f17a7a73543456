#include "jetcalc/mpoly.hpp"

#include <cctype>
#include <string>

namespace jetcalc {

namespace {

// Recursive-descent parser for the polynomial grammar: rationals "p" or
// "p/q", declared variable names, + - * ^ and parentheses. Juxtaposition
// multiplies ("2x", "x y", "3(x+1)").
class PolyParser {
public:
    PolyParser(const std::string& src, RingPtr ring) : src_(src), ring_(std::move(ring)) {}

    MPoly parse() {
        skip_ws();
        MPoly p = expr();
        skip_ws();
        if (pos_ != src_.size())
            throw parse_error(err("unexpected trailing input"));
        return p;
    }

private:
    const std::string& src_;
    RingPtr ring_;
    std::size_t pos_ = 0;

    std::string err(const std::string& what) const {
        return "polynomial parse error at position " + std::to_string(pos_) + ": " + what;
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    bool starts_factor() const {
        char c = peek();
        return c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
               std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    MPoly expr() {
        bool neg = false;
        skip_ws();
        while (peek() == '+' || peek() == '-') {
            if (peek() == '-') neg = !neg;
            ++pos_;
            skip_ws();
        }
        MPoly acc = term();
        if (neg) acc = -acc;
        skip_ws();
        while (peek() == '+' || peek() == '-') {
            bool minus = peek() == '-';
            ++pos_;
            skip_ws();
            MPoly t = term();
            acc = minus ? acc - t : acc + t;
            skip_ws();
        }
        return acc;
    }

    MPoly term() {
        MPoly acc = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                acc = acc * factor();
            } else if (starts_factor()) {
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    MPoly factor() {
        MPoly base = primary();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (peek() == '-')
                throw parse_error(err("exponent must be a nonnegative integer"));
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw parse_error(err("expected integer exponent after '^'"));
            Integer e = integer_literal();
            if (e > 100000)
                throw resource_error("exponent too large: " + e.get_str());
            return base.pow(e.get_ui());
        }
        return base;
    }

    MPoly primary() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            MPoly p = expr();
            skip_ws();
            if (peek() != ')') throw parse_error(err("expected ')'"));
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = integer_literal();
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                if (!std::isdigit(static_cast<unsigned char>(peek())))
                    throw parse_error(err("expected integer denominator"));
                Integer den = integer_literal();
                if (den == 0) throw parse_error(err("zero denominator"));
                Rational q(num, den);
                q.canonicalize();
                return MPoly::constant(ring_, q);
            }
            return MPoly::constant(ring_, Rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = identifier();
            int idx = ring_->index_of(name);
            if (idx < 0) throw parse_error(err("unknown variable '" + name + "'"));
            return MPoly::variable(ring_, idx);
        }
        throw parse_error(err(std::string("unexpected character '") + c + "'"));
    }

    Integer integer_literal() {
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        return Integer(src_.substr(start, pos_ - start));
    }

    std::string identifier() {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        return src_.substr(start, pos_ - start);
    }
};

} // namespace

MPoly parse_poly(const std::string& source, RingPtr ring) {
    return PolyParser(source, std::move(ring)).parse();
}

} // namespace jetcalc
