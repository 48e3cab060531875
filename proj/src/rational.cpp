#include "kpoly/rational.hpp"

#include <ostream>

namespace kpoly {

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("Rational::parse: bad literal '" + s + "'");
    if (sgn(q.get_den()) == 0)
        throw std::domain_error("Rational::parse: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace kpoly
