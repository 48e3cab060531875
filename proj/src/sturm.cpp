#include "kpoly/sturm.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace kpoly {

const char* to_string(IntervalSign s) {
    switch (s) {
        case IntervalSign::nonnegative: return "nonnegative";
        case IntervalSign::nonpositive: return "nonpositive";
        default: return "mixed";
    }
}

namespace {

// Remainder of a modulo b (b nonzero), by exact long division.
UniPoly poly_rem(UniPoly a, const UniPoly& b) {
    while (!a.is_zero() && a.degree() >= b.degree()) {
        Rational q = a.coeff(a.degree()) / b.coeff(b.degree());
        int shift = a.degree() - b.degree();
        std::vector<Rational> m(static_cast<size_t>(shift) + 1);
        m[static_cast<size_t>(shift)] = q;
        a = a - UniPoly(std::move(m)) * b;
    }
    return a;
}

// Exact quotient; requires b | a.
UniPoly poly_quot(UniPoly a, const UniPoly& b) {
    UniPoly quo;
    while (!a.is_zero() && a.degree() >= b.degree()) {
        Rational c = a.coeff(a.degree()) / b.coeff(b.degree());
        int shift = a.degree() - b.degree();
        std::vector<Rational> m(static_cast<size_t>(shift) + 1);
        m[static_cast<size_t>(shift)] = c;
        UniPoly t(std::move(m));
        quo += t;
        a = a - t * b;
    }
    if (!a.is_zero()) throw std::logic_error("poly_quot: inexact division");
    return quo;
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = poly_rem(a, b);
        a = b;
        b = r;
    }
    return a;
}

UniPoly squarefree_part(const UniPoly& p) {
    UniPoly g = poly_gcd(p, p.derivative());
    if (g.degree() < 1) return p;
    return poly_quot(p, g);
}

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain;
    chain.push_back(p);
    chain.push_back(p.derivative());
    while (!chain.back().is_zero()) {
        UniPoly r = poly_rem(chain[chain.size() - 2], chain.back());
        chain.push_back(-r);
    }
    chain.pop_back();
    return chain;
}

int sign_changes(const std::vector<UniPoly>& chain, const Rational& x) {
    int changes = 0, last = 0;
    for (const auto& q : chain) {
        int s = q.eval(x).sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

UniPoly linear_factor(const Rational& root) {
    return UniPoly(std::vector<Rational>{-root, Rational(1)});
}

// Disjoint enclosures, one per distinct root of squarefree q in (a, b).
// Roots at the endpoints must have been divided out already.
std::vector<std::pair<Rational, Rational>> isolate_roots(const UniPoly& q, const Rational& a,
                                                         const Rational& b) {
    std::vector<std::pair<Rational, Rational>> out;
    if (q.degree() < 1) return out;
    auto chain = sturm_chain(q);
    auto count = [&](const Rational& lo, const Rational& hi) {
        return sign_changes(chain, lo) - sign_changes(chain, hi);  // roots in (lo, hi]
    };
    std::vector<std::pair<Rational, Rational>> work{{a, b}};
    while (!work.empty()) {
        auto [lo, hi] = work.back();
        work.pop_back();
        int n = count(lo, hi);
        if (n == 0) continue;
        if (n == 1) {
            out.emplace_back(lo, hi);
            continue;
        }
        Rational mid = (lo + hi) / Rational(2);
        long k = 997;  // only finitely many roots, so some offset works
        while (q.eval(mid).is_zero()) mid += (hi - mid) / Rational(k++);
        work.emplace_back(lo, mid);
        work.emplace_back(mid, hi);
    }
    return out;
}

} // namespace

int sturm_root_count(const UniPoly& p, const Rational& a, const Rational& b) {
    if (p.is_zero()) throw std::invalid_argument("sturm_root_count: zero polynomial");
    auto chain = sturm_chain(p);
    return sign_changes(chain, a) - sign_changes(chain, b);
}

IntervalSign sign_on_interval(const UniPoly& p, const Rational& a, const Rational& b) {
    if (a > b) throw std::invalid_argument("sign_on_interval: a > b");
    if (p.is_zero()) return IntervalSign::nonnegative;
    if (a == b) {
        int s = p.eval(a).sign();
        return s >= 0 ? IntervalSign::nonnegative : IntervalSign::nonpositive;
    }

    UniPoly q = squarefree_part(p);
    while (q.degree() >= 1 && q.eval(a).is_zero()) q = poly_quot(q, linear_factor(a));
    while (q.degree() >= 1 && q.eval(b).is_zero()) q = poly_quot(q, linear_factor(b));

    // When p vanishes at an endpoint, shift that endpoint inward to a point
    // with no q-root in between, so the outermost root-free stretch still
    // gets a nonzero sample below.
    Rational a2 = a, b2 = b;
    if (q.degree() >= 1) {
        auto chain = sturm_chain(q);
        auto roots_between = [&](const Rational& lo, const Rational& hi) {
            return sign_changes(chain, lo) - sign_changes(chain, hi);
        };
        if (p.eval(a).is_zero()) {
            long k = 4;
            do {
                a2 = a + (b - a) / Rational(k);
                k *= 2;
            } while (roots_between(a, a2) != 0 || q.eval(a2).is_zero());
        }
        if (p.eval(b).is_zero()) {
            long k = 4;
            do {
                b2 = b - (b - a) / Rational(k);
                k *= 2;
            } while (roots_between(b2, b) != 0 || q.eval(b2).is_zero());
        }
    } else {
        if (p.eval(a).is_zero()) a2 = (a + b) / Rational(2);
        if (p.eval(b).is_zero()) b2 = (a + b) / Rational(2);
    }
    if (a2 > b2) std::swap(a2, b2);

    auto boxes = isolate_roots(q, a2, b2);

    // Box endpoints are the interval ends (roots divided out) or bisection
    // midpoints (chosen off the roots), so every box holds its single root
    // strictly inside. Sampling p at all box endpoints therefore hits every
    // maximal root-free stretch of [a, b].
    bool has_pos = false, has_neg = false;
    auto note = [&](const Rational& x) {
        int s = p.eval(x).sign();
        if (s > 0) has_pos = true;
        if (s < 0) has_neg = true;
    };
    note(a);
    note(b);
    note(a2);
    note(b2);
    for (const auto& [lo, hi] : boxes) {
        note(lo);
        note(hi);
    }
    if (has_pos && has_neg) return IntervalSign::mixed;
    if (has_neg) return IntervalSign::nonpositive;
    return IntervalSign::nonnegative;
}

} // namespace kpoly
