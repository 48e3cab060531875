#include "kpoly/oracle.hpp"
#include "kpoly/report.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace kpoly;

namespace {

std::string corpus_root() {
    const char* env = std::getenv("KPOLY_CORPUS");
    return env ? env : "corpus";
}

const Corpus& shared_corpus() {
    static Corpus corpus = load_corpus(corpus_root());
    return corpus;
}

} // namespace

TEST_CASE("corpus inventory") {
    const Corpus& c = shared_corpus();
    CHECK(c.scopes.size() == 4);
    CHECK(c.geometries.size() >= 8);
    CHECK(c.surfaces.size() >= 7);
    CHECK(c.divisorial.size() + c.flags.size() + c.upper_bounds.size() >= 24);
}

TEST_CASE("empty corpus loads cleanly") {
    std::filesystem::path tmp = std::filesystem::temp_directory_path() / "kpoly-empty-corpus";
    std::filesystem::create_directories(tmp);
    Corpus c = load_corpus(tmp.string());
    CHECK(c.geometries.empty());
    CHECK(c.divisorial.empty());
}

TEST_CASE("mutated triple entry fails the cube self-check") {
    std::filesystem::path tmp = std::filesystem::temp_directory_path() / "kpoly-mutated-corpus";
    std::filesystem::create_directories(tmp / "geometry");
    std::ofstream out(tmp / "geometry" / "bad.txt");
    out << "geometry \"bad/P3\" {\n"
           "  basis = H\n"
           "  anticanonical = 4\n"
           "  cube = 64\n"
           "  triple { H H H = 2 }\n"
           "}\n";
    out.close();
    CHECK_THROWS_AS(load_corpus(tmp.string()), std::runtime_error);
}

TEST_CASE("master regression: every certificate verifies and reproduces its expected values") {
    const Corpus& c = shared_corpus();
    auto outcomes = verify_all(c);
    for (const auto& o : outcomes) {
        INFO(o.name << ": " << o.report.first_failure());
        CHECK(o.report.valid());
    }
}

TEST_CASE("every family scope is complete") {
    const Corpus& c = shared_corpus();
    for (const auto& [family, scope] : c.scopes) {
        CHECK(!scope.centers.empty());
        for (const auto& e : scope.centers) {
            INFO(family << " center " << e.center);
            CHECK(c.has_certificate(e.certificate));
        }
    }
}

TEST_CASE("oracle equivalence on sampled interior points") {
    const Corpus& c = shared_corpus();
    auto mismatches = oracle_check_all(c, 5, 7);
    for (const auto& mm : mismatches) {
        INFO(mm.certificate << " u-chamber " << mm.uchamber << " v-chamber " << mm.vchamber
                            << " at (" << mm.u.str() << ", " << mm.v.str() << "): " << mm.detail);
        CHECK(false);
    }
    CHECK(mismatches.empty());
}

TEST_CASE("mutated certificate data is caught by verification") {
    Corpus c = load_corpus(corpus_root());
    REQUIRE(!c.divisorial.empty());
    // negate one negative-part coefficient
    for (auto& cert : c.divisorial) {
        if (cert.chambers.empty()) continue;
        for (auto& ch : cert.chambers) {
            if (ch.N.empty()) continue;
            ch.N[0].coeff = -ch.N[0].coeff;
            auto rep = verify_divisorial(c, cert);
            CHECK_FALSE(rep.valid());
            return;
        }
    }
}

TEST_CASE("mutated flag tiling is caught") {
    Corpus c = load_corpus(corpus_root());
    REQUIRE(!c.flags.empty());
    auto& cert = c.flags.front();
    REQUIRE(!cert.uchambers.empty());
    auto& uch = cert.uchambers.front();
    REQUIRE(!uch.vchambers.empty());
    uch.vchambers.back().v_hi = uch.vchambers.back().v_hi + AffineUV(Rational(1));
    auto rep = verify_flag(c, cert);
    CHECK_FALSE(rep.valid());
}

TEST_CASE("derivative identity follows from orthogonality") {
    // On every divisorial chamber: d/du P^3 = -3 P^2 . D as polynomials.
    const Corpus& c = shared_corpus();
    for (const auto& cert : c.divisorial) {
        for (const auto& ch : cert.chambers) {
            const auto& g = c.geometry(ch.geometry ? *ch.geometry : cert.geometry);
            UniPoly lhs = g.volume_poly(ch.P).derivative();
            UniPoly rhs =
                g.triple_eval(ch.P, ch.P, PolyClass::constant(cert.divisor)).scaled(Rational(-3));
            INFO(cert.name);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("Eq. (2.1): S is at most three quarters of tau") {
    const Corpus& c = shared_corpus();
    for (const auto& cert : c.divisorial) {
        auto [S, beta] = eval_S_divisor(c, cert);
        INFO(cert.name);
        CHECK(S <= bound_S_by_tau(cert));
    }
}
