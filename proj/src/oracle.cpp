#include "kpoly/oracle.hpp"

#include "kpoly/zariski.hpp"

#include <algorithm>
#include <map>

namespace kpoly {

uint64_t SampleRng::next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545f4914f6cdd1dull;
}

Rational SampleRng::unit_fraction() {
    long den = static_cast<long>(next() % 96) + 2;   // 2..97
    long num = static_cast<long>(next() % static_cast<uint64_t>(den - 1)) + 1;  // 1..den-1
    return Rational(num, den);
}

namespace {

// Declared decomposition at a sample point, as (positive class, name->coeff).
std::pair<DivisorClass, std::map<std::string, Rational>> declared_at(const VChamber& vch,
                                                                     const Rational& u,
                                                                     const Rational& v) {
    std::map<std::string, Rational> neg;
    for (const auto& part : vch.N) {
        Rational c = part.coeff.eval(u, v);
        if (!c.is_zero()) neg[part.curve] += c;
    }
    return {vch.P.at(u, v), neg};
}

} // namespace

std::vector<OracleMismatch> oracle_check_flag(const Corpus& corpus, const FlagCert& cert,
                                              int samples, uint64_t seed) {
    std::vector<OracleMismatch> out;
    const auto& div = corpus.divisorial_cert(cert.divisorial);
    const auto& surf = corpus.surface(cert.surface);
    const auto& res = corpus.restriction(cert.restriction);

    // Per-certificate stream keyed by the seed and the certificate name, so
    // corpus order cannot perturb samples.
    uint64_t h = seed;
    for (char c : cert.name) h = h * 1099511628211ull + static_cast<unsigned char>(c);
    SampleRng rng(h);

    for (size_t ui = 0; ui < cert.uchambers.size(); ++ui) {
        const FlagUChamber& uch = cert.uchambers[ui];
        const UChamber* cover = nullptr;
        for (const auto& dch : div.chambers)
            if (dch.lo <= uch.lo && uch.hi <= dch.hi) cover = &dch;
        if (!cover) continue;  // verify_flag reports this
        const PolyClass& P3 = cover->P;
        for (size_t vi = 0; vi < uch.vchambers.size(); ++vi) {
            const VChamber& vch = uch.vchambers[vi];
            for (int s = 0; s < samples; ++s) {
                Rational u = uch.lo + (uch.hi - uch.lo) * rng.unit_fraction();
                Rational vlo = vch.v_lo.eval(u, Rational(0));
                Rational vhi = vch.v_hi.eval(u, Rational(0));
                if (!(vlo < vhi)) continue;  // chamber degenerates at this u
                Rational v = vlo + (vhi - vlo) * rng.unit_fraction();

                DivisorClass restricted = res.restrict(P3.at(u)) - cert.curve.scaled(v);
                OracleMismatch mm;
                mm.certificate = cert.name;
                mm.uchamber = ui + 1;
                mm.vchamber = vi + 1;
                mm.u = u;
                mm.v = v;
                try {
                    ZariskiResult z = zariski_at(surf, restricted);
                    auto [declP, declN] = declared_at(vch, u, v);
                    if (z.positive != declP) {
                        mm.detail = "positive part " + z.positive.str() + " vs declared " +
                                    declP.str();
                        out.push_back(mm);
                        continue;
                    }
                    std::map<std::string, Rational> oracleN(z.negative.begin(), z.negative.end());
                    if (oracleN != declN) {
                        mm.detail = "negative part differs";
                        out.push_back(mm);
                    }
                } catch (const NotPseudoEffective& e) {
                    mm.detail = std::string("oracle: ") + e.what();
                    out.push_back(mm);
                }
            }
        }
    }
    return out;
}

std::vector<OracleMismatch> oracle_check_all(const Corpus& corpus, int samples, uint64_t seed) {
    std::vector<OracleMismatch> out;
    for (const auto& cert : corpus.flags) {
        auto part = oracle_check_flag(corpus, cert, samples, seed);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

} // namespace kpoly
