#include "bv/parse.hpp"

#include <cctype>

namespace bv {

namespace {

class Parser {
public:
    Parser(const std::string& src, Nat exponent_cap)
        : src_(src), cap_(exponent_cap) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != src_.size())
            throw ParseError("unexpected character '" + std::string(1, src_[pos_]) + "'",
                             pos_ + 1);
        return p;
    }

private:
    Polynomial expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') { ++pos_; neg = true; }
        Polynomial p = term();
        if (neg) p = -p;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                Polynomial t = term();
                p = (c == '+') ? p + t : p - t;
            } else {
                return p;
            }
        }
    }

    Polynomial term() {
        Polynomial p = factor();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '*') {
                ++pos_;
                p = p * factor();
            } else if (c == 'x' || c == '(') {
                p = p * factor();  // implicit multiplication
            } else {
                return p;
            }
        }
    }

    Polynomial factor() {
        Polynomial b = base();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            Nat e = natural();
            if (e > cap_)
                throw ParseError("exponent exceeds cap of " + std::to_string(cap_), pos_);
            b = b.pow(e);
        }
        return b;
    }

    Polynomial base() {
        skip_ws();
        char c = peek();
        if (c == 'x') {
            ++pos_;
            return Polynomial::monomial(1);
        }
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            skip_ws();
            if (peek() != ')')
                throw ParseError("expected ')'", pos_ + 1);
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-')
            return Polynomial::constant(rational());
        throw ParseError("expected rational, 'x' or '('", pos_ + 1);
    }

    Rational rational() {
        Int num = integer();
        std::size_t save = pos_;
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            std::size_t denom_at = pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("expected positive integer after '/'", pos_ + 1);
            Int den = integer();
            if (den == 0)
                throw ParseError("zero denominator", denom_at + 1);
            return Rational(num, den);
        }
        pos_ = save;
        return Rational(num);
    }

    Int integer() {
        std::size_t start = pos_;
        if (peek() == '-') ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected digit", pos_ + 1);
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return Int(src_.substr(start, pos_ - start));
    }

    Nat natural() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected natural number", pos_ + 1);
        Nat v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<Nat>(src_[pos_] - '0');
            ++pos_;
            if (v > 1000000) throw ParseError("exponent too large", pos_);
        }
        return v;
    }

    void skip_ws() {
        while (pos_ < src_.size() &&
               std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    const std::string& src_;
    Nat cap_;
    std::size_t pos_ = 0;
};

}  // namespace

PolyExpr parse_poly(const std::string& source, Nat exponent_cap) {
    Parser p(source, exponent_cap);
    return PolyExpr{source, p.parse()};
}

}  // namespace bv
