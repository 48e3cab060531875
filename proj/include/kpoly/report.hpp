// Shared drivers for the CLI and the test suites: verify everything, render
// the per-family ledger, format fractions.
#pragma once

#include "kpoly/corpus.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace kpoly {

struct CertOutcome {
    std::string name;
    std::string family;
    std::string kind;  // divisorial | flag | upper_bound
    InvariantReport report;
};

// Runs verification on every certificate, in name order per kind.
std::vector<CertOutcome> verify_all(const Corpus& corpus);

// One line per certificate: values and OK/FAIL. Deterministic.
void print_verify(std::ostream& os, const std::vector<CertOutcome>& outcomes);

// Per-family ledger: center, certificate, tau, S-values, beta/delta, verdict.
void print_report(std::ostream& os, const Corpus& corpus,
                  const std::vector<CertOutcome>& outcomes, bool machine);

} // namespace kpoly
