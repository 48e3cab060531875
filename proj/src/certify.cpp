#include "kpoly/certify.hpp"

#include "kpoly/corpus.hpp"
#include "kpoly/zariski.hpp"

#include <sstream>

namespace kpoly {

namespace {

PolyClass minus_u_times(const DivisorClass& d) {
    // -u * d as a PolyClass
    PolyClass out;
    out.c.reserve(d.c.size());
    for (const auto& x : d.c) out.c.push_back(UniPoly(std::vector<Rational>{Rational(0), -x}));
    return out;
}

std::string poly_str(const UniPoly& p) { return p.str(); }

// P plus the negative part, as polynomial classes.
PolyClass chamber_total(const UChamber& ch) {
    PolyClass total = ch.P;
    for (const auto& np : ch.N) total = total + PolyClass::constant(np.cls).scaled_poly(np.coeff);
    return total;
}

bool nonneg_on(const UniPoly& p, const Rational& lo, const Rational& hi) {
    return sign_on_interval(p, lo, hi) == IntervalSign::nonnegative;
}

bool affine_nonneg_at_vertices(const AffineUV& f, const FlagUChamber& uch, const VChamber& vch) {
    for (const Rational& u : {uch.lo, uch.hi})
        for (const AffineUV* bound : {&vch.v_lo, &vch.v_hi}) {
            Rational v = bound->eval(u, Rational(0));
            if (f.eval(u, v).sign() < 0) return false;
        }
    return true;
}

} // namespace

DivisorClass Corpus::polarization_of(const DivisorialCert& cert) const {
    if (cert.polarization) return *cert.polarization;
    return geometry(cert.geometry).anticanonical;
}

Rational Corpus::norm_cube(const DivisorialCert& cert) const {
    const auto& g = geometry(cert.geometry);
    return g.cube(polarization_of(cert));
}

InvariantReport verify_divisorial(const Corpus& corpus, const DivisorialCert& cert) {
    InvariantReport rep;
    const DivisorClass pol = corpus.polarization_of(cert);

    // (h) chambers tile [0, tau]
    {
        bool ok = !cert.chambers.empty() && cert.chambers.front().lo == Rational(0) &&
                  cert.chambers.back().hi == cert.tau;
        for (size_t i = 0; ok && i + 1 < cert.chambers.size(); ++i)
            ok = cert.chambers[i].hi == cert.chambers[i + 1].lo;
        for (const auto& ch : cert.chambers)
            if (!(ch.lo < ch.hi)) ok = false;
        rep.add("chamber-tiling", ok);
        if (!ok) return rep;
    }

    for (size_t ci = 0; ci < cert.chambers.size(); ++ci) {
        const UChamber& ch = cert.chambers[ci];
        const auto& g = corpus.geometry(ch.geometry ? *ch.geometry : cert.geometry);
        std::string tag = "chamber" + std::to_string(ci + 1);

        // (a) class identity P + N = pol - u D
        {
            PolyClass expected = PolyClass::constant(pol) + minus_u_times(cert.divisor);
            rep.add(tag + "-class-identity", chamber_total(ch) == expected);
        }
        // (b) nefness against every test curve
        {
            bool ok = true;
            std::string why;
            for (const auto& [cname, func] : g.test_curves) {
                UniPoly val = g.curve_pairing(ch.P, func);
                if (!nonneg_on(val, ch.lo, ch.hi)) {
                    ok = false;
                    why = "P negative on curve " + cname + " (" + poly_str(val) + ")";
                    break;
                }
            }
            rep.add(tag + "-nef", ok, why);
        }
        // (c) orthogonality P.P.N_i identically zero
        {
            bool ok = true;
            std::string why;
            for (const auto& np : ch.N) {
                UniPoly q = g.triple_eval(ch.P, ch.P, PolyClass::constant(np.cls));
                if (!q.is_zero()) {
                    ok = false;
                    why = "P^2." + np.name + " = " + poly_str(q);
                    break;
                }
            }
            rep.add(tag + "-orthogonality", ok, why);
        }
        // (e) negative-part coefficients nonnegative on the chamber
        {
            bool ok = true;
            std::string why;
            for (const auto& np : ch.N)
                if (!nonneg_on(np.coeff, ch.lo, ch.hi)) {
                    ok = false;
                    why = "coefficient of " + np.name;
                    break;
                }
            rep.add(tag + "-N-nonnegative", ok, why);
        }
        // (j) declared volume polynomial, when given
        if (ch.expected_vol) {
            UniPoly vol = g.volume_poly(ch.P);
            rep.add(tag + "-declared-volume", vol == *ch.expected_vol,
                    vol == *ch.expected_vol ? "" : "computed " + poly_str(vol));
        }
    }

    // (d) positive part agrees at shared breakpoints, (f) volume continuity
    for (size_t i = 0; i + 1 < cert.chambers.size(); ++i) {
        const UChamber& a = cert.chambers[i];
        const UChamber& b = cert.chambers[i + 1];
        const Rational& u = a.hi;
        rep.add("breakpoint-P-continuity-" + std::to_string(i + 1), a.P.at(u) == b.P.at(u));
        const auto& ga = corpus.geometry(a.geometry ? *a.geometry : cert.geometry);
        const auto& gb = corpus.geometry(b.geometry ? *b.geometry : cert.geometry);
        Rational va = ga.cube(a.P.at(u));
        Rational vb = gb.cube(b.P.at(u));
        rep.add("breakpoint-volume-continuity-" + std::to_string(i + 1), va == vb,
                va == vb ? "" : va.str() + " vs " + vb.str());
    }

    // (g) volume vanishes at tau
    {
        const UChamber& last = cert.chambers.back();
        const auto& g = corpus.geometry(last.geometry ? *last.geometry : cert.geometry);
        Rational v = g.cube(last.P.at(cert.tau));
        rep.add("volume-vanishes-at-tau", v.is_zero(), v.is_zero() ? "" : "vol(tau) = " + v.str());
    }

    // expected_beta = A - expected_S
    rep.add("expected-beta-consistent", cert.expected_beta == cert.A - cert.expected_S);

    auto [S, beta] = eval_S_divisor(corpus, cert);
    rep.values["tau"] = cert.tau;
    rep.values["S"] = S;
    rep.values["beta"] = beta;
    rep.add("S-matches-expected", S == cert.expected_S,
            S == cert.expected_S ? "" : "computed " + S.str() + ", expected " + cert.expected_S.str());
    rep.add("beta-matches-expected", beta == cert.expected_beta);

    // S <= (3/4) tau
    Rational bound = bound_S_by_tau(cert);
    rep.add("S-within-tau-bound", S <= bound);
    return rep;
}

std::pair<Rational, Rational> eval_S_divisor(const Corpus& corpus, const DivisorialCert& cert) {
    Rational total(0);
    for (const auto& ch : cert.chambers) {
        const auto& g = corpus.geometry(ch.geometry ? *ch.geometry : cert.geometry);
        total += integrate_uni(g.volume_poly(ch.P), ch.lo, ch.hi);
    }
    Rational S = total / corpus.norm_cube(cert);
    return {S, cert.A - S};
}

Rational bound_S_by_tau(const DivisorialCert& cert) { return cert.tau * Rational(3, 4); }

namespace {

struct FlagContext {
    const DivisorialCert* div;
    const SurfaceGeometry* surf;
    const RestrictionMap* res;
    Rational norm;  // (-K_X)^3
};

FlagContext flag_context(const Corpus& corpus, const FlagCert& cert) {
    FlagContext ctx;
    ctx.div = &corpus.divisorial_cert(cert.divisorial);
    ctx.surf = &corpus.surface(cert.surface);
    ctx.res = &corpus.restriction(cert.restriction);
    ctx.norm = corpus.norm_cube(*ctx.div);
    return ctx;
}

// Class of the declared surface negative part.
SurfPolyClass vchamber_negative(const SurfaceGeometry& surf, const VChamber& vch) {
    SurfPolyClass acc;
    acc.c.assign(surf.rank(), AffineUV());
    for (const auto& part : vch.N) {
        int ci = surf.curve_index(part.curve);
        if (ci < 0) throw std::runtime_error("unknown surface curve " + part.curve);
        const DivisorClass& cls = surf.curves[static_cast<size_t>(ci)].cls;
        for (size_t j = 0; j < surf.rank(); ++j)
            acc.c[j] = acc.c[j] + part.coeff.scaled(cls.c[j]);
    }
    return acc;
}

SurfPolyClass times_affine(const DivisorClass& cls, const AffineUV& f) {
    SurfPolyClass out;
    out.c.reserve(cls.c.size());
    for (const auto& x : cls.c) out.c.push_back(f.scaled(x));
    return out;
}

} // namespace

InvariantReport verify_flag(const Corpus& corpus, const FlagCert& cert) {
    InvariantReport rep;
    FlagContext ctx = flag_context(corpus, cert);
    const SurfaceGeometry& surf = *ctx.surf;

    rep.add("restriction-compatible", [&] {
        std::string why;
        return check_restriction(corpus.geometry(ctx.div->geometry), surf, *ctx.res, &why);
    }());

    // u-chambers refine the divisorial chamber decomposition: together they
    // tile [0, tau] and each one sits inside a single divisorial chamber.
    std::vector<const UChamber*> covering(cert.uchambers.size(), nullptr);
    {
        bool ok = !cert.uchambers.empty() && cert.uchambers.front().lo == Rational(0) &&
                  cert.uchambers.back().hi == ctx.div->tau;
        for (size_t i = 0; ok && i + 1 < cert.uchambers.size(); ++i)
            ok = cert.uchambers[i].hi == cert.uchambers[i + 1].lo;
        for (size_t i = 0; ok && i < cert.uchambers.size(); ++i) {
            const auto& uch = cert.uchambers[i];
            ok = uch.lo < uch.hi;
            for (const auto& dch : ctx.div->chambers)
                if (dch.lo <= uch.lo && uch.hi <= dch.hi) covering[i] = &dch;
            ok = ok && covering[i] != nullptr;
        }
        rep.add("uchambers-refine-divisorial", ok);
        if (!ok) return rep;
    }

    for (size_t ci = 0; ci < cert.uchambers.size(); ++ci) {
        const FlagUChamber& uch = cert.uchambers[ci];
        const UChamber& dch = *covering[ci];
        std::string tag = "u" + std::to_string(ci + 1);

        // Declared restriction of the positive part equals the matrix image.
        {
            SurfPolyClass expect = ctx.res->restrict(dch.P);
            rep.add(tag + "-restricted-P", expect == uch.restrictedP);
        }
        // d(u) + N'(u) account for the restriction of the threefold N(u).
        {
            SurfPolyClass resN;
            resN.c.assign(surf.rank(), AffineUV());
            for (const auto& np : dch.N) {
                DivisorClass r = ctx.res->restrict(np.cls);
                if (np.coeff.degree() > 1) {
                    rep.add(tag + "-d-consistency", false, "N coefficient degree > 1");
                    return rep;
                }
                AffineUV coeff(np.coeff.coeff(0), np.coeff.coeff(1), Rational(0));
                for (size_t j = 0; j < surf.rank(); ++j)
                    resN.c[j] = resN.c[j] + coeff.scaled(r.c[j]);
            }
            SurfPolyClass declared;
            declared.c.assign(surf.rank(), AffineUV());
            if (uch.d.degree() > 1) {
                rep.add(tag + "-d-consistency", false, "d(u) degree > 1");
                return rep;
            }
            AffineUV dcoeff(uch.d.coeff(0), uch.d.coeff(1), Rational(0));
            for (size_t j = 0; j < surf.rank(); ++j)
                declared.c[j] = declared.c[j] + dcoeff.scaled(cert.curve.c[j]);
            for (const auto& [cname, coeff] : uch.nprime) {
                int k = surf.curve_index(cname);
                if (k < 0) {
                    rep.add(tag + "-d-consistency", false, "unknown curve " + cname);
                    return rep;
                }
                AffineUV a(coeff.coeff(0), coeff.coeff(1), Rational(0));
                const DivisorClass& cls = surf.curves[static_cast<size_t>(k)].cls;
                for (size_t j = 0; j < surf.rank(); ++j)
                    declared.c[j] = declared.c[j] + a.scaled(cls.c[j]);
            }
            for (const auto& [cls, coeff] : uch.nprime_classes) {
                AffineUV a(coeff.coeff(0), coeff.coeff(1), Rational(0));
                for (size_t j = 0; j < surf.rank(); ++j)
                    declared.c[j] = declared.c[j] + a.scaled(cls.c[j]);
            }
            rep.add(tag + "-d-consistency", resN == declared);
        }
        // d(u) and N'(u) coefficients nonnegative.
        {
            bool ok = nonneg_on(uch.d, uch.lo, uch.hi);
            for (const auto& [cname, coeff] : uch.nprime) ok = ok && nonneg_on(coeff, uch.lo, uch.hi);
            for (const auto& [cls, coeff] : uch.nprime_classes)
                ok = ok && nonneg_on(coeff, uch.lo, uch.hi);
            rep.add(tag + "-d-nonnegative", ok);
        }
        // v-chambers tile [0, t(u)].
        {
            bool ok = !uch.vchambers.empty() && uch.vchambers.front().v_lo == AffineUV() &&
                      uch.vchambers.back().v_hi.as_unipoly() == uch.t;
            for (size_t k = 0; ok && k + 1 < uch.vchambers.size(); ++k)
                ok = uch.vchambers[k].v_hi == uch.vchambers[k + 1].v_lo;
            // nonempty at the chamber endpoints
            for (const auto& vch : uch.vchambers) {
                for (const Rational& u : {uch.lo, uch.hi})
                    if (vch.v_lo.eval(u, Rational(0)) > vch.v_hi.eval(u, Rational(0))) ok = false;
            }
            rep.add(tag + "-v-tiling", ok);
            if (!ok) continue;
        }

        for (size_t k = 0; k < uch.vchambers.size(); ++k) {
            const VChamber& vch = uch.vchambers[k];
            std::string vtag = tag + "-v" + std::to_string(k + 1);

            // class identity: P + N = restrictedP - v C
            {
                SurfPolyClass expect = uch.restrictedP - times_affine(cert.curve, AffineUV(Rational(0), Rational(0), Rational(1)));
                SurfPolyClass total = vch.P + vchamber_negative(surf, vch);
                rep.add(vtag + "-class-identity", total == expect);
            }
            // nefness at vertices against the listed cone curves
            {
                bool ok = true;
                std::string why;
                for (const auto& cu : surf.curves) {
                    AffineUV val = surf.pair(vch.P, cu.cls);
                    if (!affine_nonneg_at_vertices(val, uch, vch)) {
                        ok = false;
                        why = "P negative on " + cu.name;
                        break;
                    }
                }
                rep.add(vtag + "-nef-at-vertices", ok, why);
            }
            // orthogonality to the support, identically
            {
                bool ok = true;
                std::string why;
                for (const auto& part : vch.N) {
                    int ciace = surf.curve_index(part.curve);
                    AffineUV val = surf.pair(vch.P, surf.curves[static_cast<size_t>(ciace)].cls);
                    if (!val.is_zero()) {
                        ok = false;
                        why = "P." + part.curve + " = " + val.str();
                        break;
                    }
                }
                rep.add(vtag + "-orthogonality", ok, why);
            }
            // negative-part coefficients nonnegative at vertices
            {
                bool ok = true;
                for (const auto& part : vch.N)
                    if (!affine_nonneg_at_vertices(part.coeff, uch, vch)) ok = false;
                rep.add(vtag + "-N-nonnegative", ok);
            }
            // ordP nonnegative at vertices
            if (!vch.ordP.is_zero())
                rep.add(vtag + "-ordP-nonnegative", affine_nonneg_at_vertices(vch.ordP, uch, vch));
            // continuity with the next v-chamber
            if (k + 1 < uch.vchambers.size()) {
                const VChamber& next = uch.vchambers[k + 1];
                bool ok = true;
                UniPoly boundary = vch.v_hi.as_unipoly();
                for (size_t j = 0; j < surf.rank(); ++j)
                    if (BiPoly(vch.P.c[j]).subst_v(boundary) != BiPoly(next.P.c[j]).subst_v(boundary))
                        ok = false;
                rep.add(vtag + "-P-continuity", ok);
            }
        }

        // volume vanishes at v = t(u), identically in u
        {
            const VChamber& last = uch.vchambers.back();
            BiPoly vol = surf.pair(last.P, last.P);
            UniPoly at_t = vol.subst_v(uch.t);
            rep.add(tag + "-volume-vanishes-at-t", at_t.is_zero(),
                    at_t.is_zero() ? "" : "vol(t(u)) = " + at_t.str());
        }
        // first v-chamber agrees with the restriction at v = 0
        {
            const VChamber& first = uch.vchambers.front();
            bool ok = true;
            for (size_t j = 0; j < surf.rank(); ++j)
                if (BiPoly(first.P.c[j]).subst_v(UniPoly()) !=
                    BiPoly(uch.restrictedP.c[j]).subst_v(UniPoly()))
                    ok = false;
            rep.add(tag + "-P-at-v0", ok);
        }
    }

    // expected values
    Rational swc = eval_S_curve(corpus, cert);
    rep.values["S_WC"] = swc;
    rep.values["S_S"] = ctx.div->expected_S;
    if (cert.expected_S_WC)
        rep.add("S_WC-matches-expected", swc == *cert.expected_S_WC,
                swc == *cert.expected_S_WC
                    ? ""
                    : "computed " + swc.str() + ", expected " + cert.expected_S_WC->str());
    if (cert.has_point_data) {
        Rational fp = eval_F_P(corpus, cert);
        Rational swp = eval_S_point(corpus, cert);
        rep.values["F_P"] = fp;
        rep.values["S_WP"] = swp;
        if (cert.expected_F_P) rep.add("F_P-matches-expected", fp == *cert.expected_F_P);
        if (cert.expected_S_WP) rep.add("S_WP-matches-expected", swp == *cert.expected_S_WP);
    }
    if (cert.expected_delta_bound) {
        Rational db = delta_bound(corpus, cert);
        rep.values["delta_bound"] = db;
        rep.add("delta-bound-matches-expected", db == *cert.expected_delta_bound);
    }
    // The beta > 0 verdict: strict inequalities, or equality covered by the
    // sharpened remarks when the certificate invokes them. A certificate may
    // opt out when its honest values fall short of the threshold.
    if (cert.concludes_beta_positive) {
        Rational one(1);
        bool ok;
        if (cert.strict_remark)
            ok = ctx.div->expected_S < one && swc <= one;
        else
            ok = ctx.div->expected_S < one && swc < one;
        if (cert.has_point_data && cert.expected_S_WP) {
            Rational swp = eval_S_point(corpus, cert);
            ok = ok && (cert.strict_remark ? swp <= one : swp < one);
        }
        rep.add(cert.strict_remark ? "beta-positive-by-strict-remark" : "beta-positive", ok);
    } else {
        rep.add("no-beta-conclusion-recorded", true,
                "S(W;C) = " + swc.str() + " does not reach the threshold");
    }
    return rep;
}

Rational eval_S_curve(const Corpus& corpus, const FlagCert& cert) {
    FlagContext ctx = flag_context(corpus, cert);
    const SurfaceGeometry& surf = *ctx.surf;
    Rational total(0);
    for (const auto& uch : cert.uchambers) {
        // d(u) (P(u,0))^2 term
        BiPoly p0sq = surf.pair(uch.restrictedP, uch.restrictedP);
        UniPoly p0sq_u = p0sq.subst_v(UniPoly());  // v does not occur, but normalize anyway
        total += integrate_uni(uch.d * p0sq_u, uch.lo, uch.hi);
        // (P(u,v))^2 over the v-chambers
        for (const auto& vch : uch.vchambers) {
            BiPoly vol = surf.pair(vch.P, vch.P);
            Chamber2D ch{uch.lo, uch.hi, vch.v_lo, vch.v_hi};
            total += integrate_chamber(vol, ch);
        }
    }
    return total * Rational(3) / ctx.norm;
}

Rational eval_F_P(const Corpus& corpus, const FlagCert& cert) {
    FlagContext ctx = flag_context(corpus, cert);
    const SurfaceGeometry& surf = *ctx.surf;
    Rational total(0);
    for (const auto& uch : cert.uchambers) {
        for (const auto& vch : uch.vchambers) {
            if (vch.ordP.is_zero()) continue;
            AffineUV pc = surf.pair(vch.P, cert.curve);
            BiPoly integrand = BiPoly(pc) * BiPoly(vch.ordP);
            Chamber2D ch{uch.lo, uch.hi, vch.v_lo, vch.v_hi};
            total += integrate_chamber(integrand, ch);
        }
    }
    return total * Rational(6) / ctx.norm;
}

Rational eval_S_point(const Corpus& corpus, const FlagCert& cert) {
    FlagContext ctx = flag_context(corpus, cert);
    const SurfaceGeometry& surf = *ctx.surf;
    Rational total(0);
    for (const auto& uch : cert.uchambers) {
        for (const auto& vch : uch.vchambers) {
            AffineUV pc = surf.pair(vch.P, cert.curve);
            BiPoly integrand = BiPoly(pc) * BiPoly(pc);
            Chamber2D ch{uch.lo, uch.hi, vch.v_lo, vch.v_hi};
            total += integrate_chamber(integrand, ch);
        }
    }
    return total * Rational(3) / ctx.norm + eval_F_P(corpus, cert);
}

Rational delta_bound(const Corpus& corpus, const FlagCert& cert) {
    FlagContext ctx = flag_context(corpus, cert);
    Rational best = Rational(1) / ctx.div->expected_S;
    Rational swc = eval_S_curve(corpus, cert);
    if (!swc.is_zero()) best = std::min(best, Rational(1) / swc);
    if (cert.has_point_data) {
        Rational swp = eval_S_point(corpus, cert);
        if (!swp.is_zero()) best = std::min(best, Rational(1) / swp);
    }
    return best;
}

InvariantReport verify_upper_bound(const Corpus& corpus, const UpperBoundCert& cert) {
    InvariantReport rep;
    const auto& g = corpus.geometry(cert.geometry);
    DivisorClass pol = cert.polarization ? *cert.polarization : g.anticanonical;

    // chambers tile [0, nef_hi] and are plain nef segments
    {
        bool ok = !cert.chambers.empty() && cert.chambers.front().lo == Rational(0) &&
                  cert.chambers.back().hi == cert.nef_hi;
        for (size_t i = 0; ok && i + 1 < cert.chambers.size(); ++i)
            ok = cert.chambers[i].hi == cert.chambers[i + 1].lo;
        for (const auto& ch : cert.chambers) ok = ok && ch.N.empty();
        rep.add("nef-interval-tiling", ok);
        if (!ok) return rep;
    }
    for (size_t ci = 0; ci < cert.chambers.size(); ++ci) {
        const UChamber& ch = cert.chambers[ci];
        std::string tag = "chamber" + std::to_string(ci + 1);
        PolyClass expected = PolyClass::constant(pol) + minus_u_times(cert.divisor);
        rep.add(tag + "-class-identity", ch.P == expected);
        bool ok = true;
        std::string why;
        for (const auto& [cname, func] : g.test_curves) {
            UniPoly val = g.curve_pairing(ch.P, func);
            if (!nonneg_on(val, ch.lo, ch.hi)) {
                ok = false;
                why = "negative on " + cname;
                break;
            }
        }
        rep.add(tag + "-nef", ok, why);
        if (ch.expected_vol) {
            UniPoly vol = g.volume_poly(ch.P);
            rep.add(tag + "-declared-volume", vol == *ch.expected_vol,
                    vol == *ch.expected_vol ? "" : "computed " + vol.str());
        }
    }
    // tau bound: the witness is a nef class, and (pol - u D).W^2 hits zero at
    // tau_bound, so the divisor cannot stay pseudo-effective past it.
    {
        bool ok = true;
        std::string why;
        for (const auto& [cname, func] : g.test_curves) {
            Rational val(0);
            for (size_t i = 0; i < g.rank(); ++i) val += cert.witness.c[i] * func[i];
            if (val.sign() < 0) {
                ok = false;
                why = "witness negative on " + cname;
                break;
            }
        }
        rep.add("tau-witness-nef", ok, why);
        PolyClass d_u = PolyClass::constant(pol) + minus_u_times(cert.divisor);
        UniPoly h = g.triple_eval(d_u, PolyClass::constant(cert.witness),
                                  PolyClass::constant(cert.witness));
        Rational at_bound = h.eval(cert.tau_bound);
        bool root_ok = at_bound.is_zero() && h.eval(Rational(0)).sign() > 0;
        rep.add("tau-bound-certified", root_ok,
                root_ok ? "" : "witness square at bound = " + at_bound.str());
    }
    Rational S_bound = eval_S_upper_bound(corpus, cert);
    rep.values["S_bound"] = S_bound;
    rep.add("S-bound-matches-expected", S_bound == cert.expected_S_bound,
            S_bound == cert.expected_S_bound ? "" : "computed " + S_bound.str());
    rep.add("beta-conclusion", cert.A - S_bound >= cert.conclusion_beta_ge,
            "beta >= " + (cert.A - S_bound).str());
    rep.values["beta_ge"] = cert.A - S_bound;
    return rep;
}

Rational eval_S_upper_bound(const Corpus& corpus, const UpperBoundCert& cert) {
    const auto& g = corpus.geometry(cert.geometry);
    DivisorClass pol = cert.polarization ? *cert.polarization : g.anticanonical;
    Rational total(0);
    UniPoly last_vol;
    for (const auto& ch : cert.chambers) {
        UniPoly vol = g.volume_poly(ch.P);
        total += integrate_uni(vol, ch.lo, ch.hi);
        last_vol = vol;
    }
    // tail: vol is non-increasing, so bound it by its value at nef_hi
    total += (cert.tau_bound - cert.nef_hi) * last_vol.eval(cert.nef_hi);
    return total / g.cube(pol);
}

} // namespace kpoly
