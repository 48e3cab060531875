#include "kpoly/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace kpoly {

void UniPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::var() { return UniPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

UniPoly UniPoly::operator-() const {
    std::vector<Rational> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(-x);
    return UniPoly(std::move(c));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const Rational& c) const {
    std::vector<Rational> out;
    out.reserve(coeffs_.size());
    for (const auto& x : coeffs_) out.push_back(x * c);
    return UniPoly(std::move(out));
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly();
    std::vector<Rational> c(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(c));
}

UniPoly UniPoly::antiderivative() const {
    if (is_zero()) return UniPoly();
    std::vector<Rational> c(coeffs_.size() + 1);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        c[i + 1] = coeffs_[i] / Rational(static_cast<long>(i + 1));
    return UniPoly(std::move(c));
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rational c = coeff(k);
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        Rational a = c.sign() < 0 ? -c : c;
        if (k == 0 || a != Rational(1)) os << a.str();
        if (k >= 1) {
            if (a != Rational(1)) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

Rational integrate_uni(const UniPoly& p, const Rational& a, const Rational& b) {
    if (a > b) throw std::invalid_argument("integrate_uni: a > b");
    UniPoly F = p.antiderivative();
    return F.eval(b) - F.eval(a);
}

UniPoly AffineUV::as_unipoly() const {
    if (!cv.is_zero()) throw std::logic_error("AffineUV::as_unipoly: cv != 0");
    return UniPoly(std::vector<Rational>{c0, cu});
}

UniPoly AffineUV::subst_v(const UniPoly& vexpr) const {
    return UniPoly(std::vector<Rational>{c0, cu}) + vexpr.scaled(cv);
}

std::string AffineUV::str() const {
    BiPoly p(*this);
    return p.str();
}

BiPoly::BiPoly(const AffineUV& a) {
    set(0, 0, a.c0);
    set(1, 0, a.cu);
    set(0, 1, a.cv);
}

void BiPoly::set(int du, int dv, Rational c) {
    if (c.is_zero()) terms_.erase({du, dv});
    else terms_[{du, dv}] = std::move(c);
}

Rational BiPoly::coeff(int du, int dv) const {
    auto it = terms_.find({du, dv});
    return it == terms_.end() ? Rational(0) : it->second;
}

BiPoly BiPoly::operator-() const {
    BiPoly out;
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly out = a;
    for (const auto& [m, c] : b.terms_) out.set(m.first, m.second, out.coeff(m.first, m.second) + c);
    return out;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            auto key = std::make_pair(ma.first + mb.first, ma.second + mb.second);
            out.set(key.first, key.second, out.coeff(key.first, key.second) + ca * cb);
        }
    return out;
}

BiPoly BiPoly::scaled(const Rational& c) const {
    BiPoly out;
    if (c.is_zero()) return out;
    for (const auto& [m, x] : terms_) out.terms_[m] = x * c;
    return out;
}

Rational BiPoly::eval(const Rational& u, const Rational& v) const {
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < m.first; ++i) t *= u;
        for (int i = 0; i < m.second; ++i) t *= v;
        acc += t;
    }
    return acc;
}

BiPoly BiPoly::antiderivative_v() const {
    BiPoly out;
    for (const auto& [m, c] : terms_)
        out.set(m.first, m.second + 1, c / Rational(m.second + 1));
    return out;
}

UniPoly BiPoly::subst_v(const UniPoly& vexpr) const {
    // Group by v-degree, evaluate v-powers of vexpr once each.
    int maxdv = 0;
    for (const auto& [m, c] : terms_) maxdv = std::max(maxdv, m.second);
    std::vector<UniPoly> vpow(static_cast<size_t>(maxdv) + 1);
    vpow[0] = UniPoly(Rational(1));
    for (int k = 1; k <= maxdv; ++k) vpow[k] = vpow[k - 1] * vexpr;
    UniPoly out;
    for (const auto& [m, c] : terms_) {
        std::vector<Rational> mono(static_cast<size_t>(m.first) + 1);
        mono[static_cast<size_t>(m.first)] = c;
        out += UniPoly(std::move(mono)) * vpow[m.second];
    }
    return out;
}

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        Rational a = c.sign() < 0 ? -c : c;
        bool havevar = m.first > 0 || m.second > 0;
        if (!havevar || a != Rational(1)) os << a.str();
        if (m.first > 0) {
            if (a != Rational(1)) os << "*";
            os << "u";
            if (m.first > 1) os << "^" << m.first;
        }
        if (m.second > 0) {
            if (m.first > 0 || a != Rational(1)) os << "*";
            os << "v";
            if (m.second > 1) os << "^" << m.second;
        }
        first = false;
    }
    return os.str();
}

bool Chamber2D::valid() const {
    if (!v_lo.v_free() || !v_hi.v_free()) return false;
    if (!(u_lo < u_hi)) return false;
    for (const Rational& u : {u_lo, u_hi})
        if (v_lo.eval(u, Rational(0)) > v_hi.eval(u, Rational(0))) return false;
    return true;
}

Rational integrate_chamber(const BiPoly& f, const Chamber2D& ch) {
    if (!ch.valid()) throw std::invalid_argument("integrate_chamber: invalid chamber");
    BiPoly F = f.antiderivative_v();
    UniPoly inner = F.subst_v(ch.v_hi.as_unipoly()) - F.subst_v(ch.v_lo.as_unipoly());
    return integrate_uni(inner, ch.u_lo, ch.u_hi);
}

} // namespace kpoly
