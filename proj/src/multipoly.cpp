#include "kpoly/multipoly.hpp"

#include <sstream>

namespace kpoly {

const char* sym_name(Sym s) {
    static const char* names[kNumSyms] = {"x1", "x2", "x3", "y1", "y2", "y3",
                                          "z1", "z2", "z3", "a",  "b"};
    return names[static_cast<int>(s)];
}

MultiPoly MultiPoly::var(Sym s) {
    MultiPoly p;
    Mono m{};
    m[static_cast<size_t>(static_cast<int>(s))] = 1;
    p.add_term(m, Rational(1));
    return p;
}

void MultiPoly::add_term(const Mono& m, Rational c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            MultiPoly::Mono m;
            for (int i = 0; i < kNumSyms; ++i)
                m[static_cast<size_t>(i)] =
                    static_cast<unsigned char>(ma[static_cast<size_t>(i)] + mb[static_cast<size_t>(i)]);
            out.add_term(m, ca * cb);
        }
    return out;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly out;
    if (c.is_zero()) return out;
    for (const auto& [m, x] : terms_) out.terms_[m] = x * c;
    return out;
}

MultiPoly MultiPoly::subst_ab(const Rational& va, const Rational& vb) const {
    MultiPoly out;
    const size_t ia = static_cast<size_t>(static_cast<int>(Sym::a));
    const size_t ib = static_cast<size_t>(static_cast<int>(Sym::b));
    for (const auto& [m, c] : terms_) {
        Rational k = c;
        for (int i = 0; i < m[ia]; ++i) k *= va;
        for (int i = 0; i < m[ib]; ++i) k *= vb;
        Mono m2 = m;
        m2[ia] = 0;
        m2[ib] = 0;
        out.add_term(m2, k);
    }
    return out;
}

Rational MultiPoly::eval(const std::array<Rational, kNumSyms>& point) const {
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < kNumSyms; ++i)
            for (int e = 0; e < m[i]; ++e) t *= point[i];
        acc += t;
    }
    return acc;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        Rational abs = c.sign() < 0 ? -c : c;
        bool havevar = false;
        for (size_t i = 0; i < kNumSyms; ++i) havevar = havevar || m[i] > 0;
        if (!havevar || abs != Rational(1)) os << abs.str();
        bool printed = !havevar || abs != Rational(1);
        for (size_t i = 0; i < kNumSyms; ++i) {
            if (m[i] == 0) continue;
            if (printed) os << "*";
            os << sym_name(static_cast<Sym>(static_cast<int>(i)));
            if (m[i] > 1) os << "^" << static_cast<int>(m[i]);
            printed = true;
        }
        first = false;
    }
    return os.str();
}

bool poly_identity(const MultiPoly& lhs, const MultiPoly& rhs) { return (lhs - rhs).is_zero(); }

} // namespace kpoly
