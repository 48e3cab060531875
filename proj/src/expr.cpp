#include "kpoly/expr.hpp"

#include <cctype>
#include <stdexcept>

namespace kpoly {

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    BiPoly parse() {
        BiPoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("expr parse error at " + std::to_string(pos_) + " in '" + s_ +
                                    "': " + why);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool starts_factor() {
        char c = peek();
        return c == '(' || c == 'u' || c == 'v' || std::isdigit(static_cast<unsigned char>(c));
    }

    BiPoly expr() {
        bool neg = false;
        char c = peek();
        if (c == '+' || c == '-') {
            ++pos_;
            neg = (c == '-');
        }
        BiPoly acc = term();
        if (neg) acc = -acc;
        while (true) {
            c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                BiPoly t = term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    BiPoly term() {
        BiPoly acc = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * factor();
            } else if (c == '/') {
                ++pos_;
                BiPoly d = factor();
                if (!(d.terms().size() == 1 && d.terms().begin()->first == std::make_pair(0, 0)))
                    fail("division only by a constant");
                Rational k = d.coeff(0, 0);
                if (k.is_zero()) fail("division by zero");
                acc = acc.scaled(Rational(1) / k);
            } else if (starts_factor()) {
                acc = acc * factor();  // juxtaposition
            } else {
                return acc;
            }
        }
    }

    BiPoly factor() {
        BiPoly base = atom();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("expected exponent");
            long e = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                e = e * 10 + (s_[pos_++] - '0');
            BiPoly out(Rational(1));
            for (long i = 0; i < e; ++i) out = out * base;
            return out;
        }
        return base;
    }

    BiPoly atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            BiPoly p = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return p;
        }
        if (c == 'u') {
            ++pos_;
            return BiPoly::var_u();
        }
        if (c == 'v') {
            ++pos_;
            return BiPoly::var_v();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                num += s_[pos_++];
            return BiPoly(Rational::parse(num));
        }
        fail("expected atom");
    }

    const std::string& s_;
    size_t pos_ = 0;
};

} // namespace

BiPoly parse_bipoly(const std::string& text) { return Parser(text).parse(); }

UniPoly parse_unipoly(const std::string& text) {
    BiPoly p = parse_bipoly(text);
    std::vector<Rational> coeffs;
    for (const auto& [m, c] : p.terms()) {
        if (m.second != 0)
            throw std::invalid_argument("expected a polynomial in u only: '" + text + "'");
        if (m.first >= static_cast<int>(coeffs.size())) coeffs.resize(static_cast<size_t>(m.first) + 1);
        coeffs[static_cast<size_t>(m.first)] = c;
    }
    return UniPoly(std::move(coeffs));
}

AffineUV parse_affine(const std::string& text) {
    BiPoly p = parse_bipoly(text);
    AffineUV a;
    for (const auto& [m, c] : p.terms()) {
        if (m.first == 0 && m.second == 0) a.c0 = c;
        else if (m.first == 1 && m.second == 0) a.cu = c;
        else if (m.first == 0 && m.second == 1) a.cv = c;
        else throw std::invalid_argument("expected an affine expression: '" + text + "'");
    }
    return a;
}

Rational parse_rational_expr(const std::string& text) {
    BiPoly p = parse_bipoly(text);
    for (const auto& [m, c] : p.terms())
        if (m.first != 0 || m.second != 0)
            throw std::invalid_argument("expected a constant: '" + text + "'");
    return p.coeff(0, 0);
}

} // namespace kpoly
