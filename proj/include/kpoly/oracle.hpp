// Sampling equivalence check: at deterministic rational interior points of
// every (u,v)-chamber, the surface Zariski oracle must reproduce the
// certificate's declared decomposition exactly.
#pragma once

#include "kpoly/corpus.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kpoly {

// Small deterministic generator (xorshift64*); value streams depend only on
// the seed, so oracle runs are reproducible.
class SampleRng {
public:
    explicit SampleRng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    uint64_t next();
    // Rational strictly inside (0, 1) with denominator <= 97.
    Rational unit_fraction();

private:
    uint64_t state_;
};

struct OracleMismatch {
    std::string certificate;
    size_t uchamber = 0, vchamber = 0;
    Rational u, v;
    std::string detail;
};

// Samples `samples` interior points per (u,v)-chamber of the flag
// certificate and compares zariski_at against the declared (P, N).
std::vector<OracleMismatch> oracle_check_flag(const Corpus& corpus, const FlagCert& cert,
                                              int samples, uint64_t seed);

std::vector<OracleMismatch> oracle_check_all(const Corpus& corpus, int samples, uint64_t seed);

} // namespace kpoly
