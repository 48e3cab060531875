// Certificate data model and the verifier/evaluator: tau, S-invariants of
// divisors, the flag invariants S(W;C), F_P, S(W;P), and the delta lower
// bounds assembled from them.
#pragma once

#include "kpoly/lattice.hpp"
#include "kpoly/sturm.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kpoly {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct InvariantReport {
    std::vector<CheckResult> checks;
    std::map<std::string, Rational> values;

    bool valid() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string name, bool pass, std::string detail = "") {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }
    std::string first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return c.name + (c.detail.empty() ? "" : (": " + c.detail));
        return "";
    }
};

struct NegativePart {
    std::string name;      // label for reports
    DivisorClass cls;      // threefold class of the component
    UniPoly coeff;         // coefficient polynomial in u, >= 0 on the chamber
};

struct UChamber {
    Rational lo, hi;
    PolyClass P;
    std::vector<NegativePart> N;
    std::optional<UniPoly> expected_vol;
    std::optional<std::string> geometry;  // override, for flop-crossing certificates
};

struct DivisorialCert {
    std::string name;
    std::string family;
    std::string geometry;
    DivisorClass divisor;
    Rational A;
    Rational tau;
    // Polarization defaults to the geometry's anticanonical class; set when
    // the certificate lives on a model above the polarized 3-fold.
    std::optional<DivisorClass> polarization;
    std::vector<UChamber> chambers;
    Rational expected_S;
    Rational expected_beta;
};

struct SurfaceNegativePart {
    std::string curve;   // name in the surface's cone list
    AffineUV coeff;      // >= 0 on the chamber
};

struct VChamber {
    AffineUV v_lo, v_hi;  // affine in u (cv = 0)
    SurfPolyClass P;
    std::vector<SurfaceNegativePart> N;
    AffineUV ordP;        // multiplicity integrand for F_P; zero when absent
};

struct FlagUChamber {
    Rational lo, hi;
    SurfPolyClass restrictedP;  // class of P(u)|_S
    UniPoly d;                  // ord_C(N(u)|_S)
    std::vector<std::pair<std::string, UniPoly>> nprime;  // named curve or class-encoded rows
    std::vector<std::pair<DivisorClass, UniPoly>> nprime_classes;  // components not in the cone list
    UniPoly t;                  // pseudo-effective threshold in v, affine in u
    std::vector<VChamber> vchambers;
};

struct FlagCert {
    std::string name;
    std::string family;
    std::string divisorial;   // underlying divisorial certificate
    std::string surface;
    std::string restriction;
    std::string curve_name;   // label only
    DivisorClass curve;       // class of the flag curve on the surface
    std::vector<FlagUChamber> uchambers;
    std::optional<Rational> expected_S_WC;
    std::optional<Rational> expected_F_P;
    std::optional<Rational> expected_S_WP;
    std::optional<Rational> expected_delta_bound;
    bool strict_remark = false;  // S == 1 passes via the sharpened remark
    bool has_point_data = false;
    // Set false when the computed S-values do not reach the beta > 0
    // threshold; the certificate then records the computation without
    // claiming the conclusion.
    bool concludes_beta_positive = true;
};

// Estimate-style certificate: exact volumes on a nef interval, then the
// constant bound vol(u) <= vol(nef_hi) up to a certified tau upper bound.
struct UpperBoundCert {
    std::string name;
    std::string family;
    std::string geometry;
    DivisorClass divisor;
    Rational A;
    std::optional<DivisorClass> polarization;
    Rational nef_hi;
    std::vector<UChamber> chambers;  // cover [0, nef_hi], N empty
    Rational tau_bound;
    DivisorClass witness;  // nef class whose square certifies the tau bound
    Rational expected_S_bound;
    Rational conclusion_beta_ge;
};

class Corpus;  // defined in corpus.hpp

// --- divisorial certificates ---------------------------------------------
InvariantReport verify_divisorial(const Corpus& corpus, const DivisorialCert& cert);
// S and beta; appended to the report's values. Requires prior verification
// for meaning, not enforced.
std::pair<Rational, Rational> eval_S_divisor(const Corpus& corpus, const DivisorialCert& cert);
// Upper bound (3/4) tau from the S <= n/(n+1) tau inequality.
Rational bound_S_by_tau(const DivisorialCert& cert);

// --- flag certificates ----------------------------------------------------
InvariantReport verify_flag(const Corpus& corpus, const FlagCert& cert);
Rational eval_S_curve(const Corpus& corpus, const FlagCert& cert);
Rational eval_F_P(const Corpus& corpus, const FlagCert& cert);
Rational eval_S_point(const Corpus& corpus, const FlagCert& cert);
// min of reciprocals of the available S-values (divisorial S, S(W;C), S(W;P)).
Rational delta_bound(const Corpus& corpus, const FlagCert& cert);

// --- upper-bound certificates ---------------------------------------------
InvariantReport verify_upper_bound(const Corpus& corpus, const UpperBoundCert& cert);
Rational eval_S_upper_bound(const Corpus& corpus, const UpperBoundCert& cert);

} // namespace kpoly
