// Corpus loading: geometries, surfaces, restriction maps, certificates and
// family scope files, parsed strictly from the directory layout
//   corpus/<family>/geometry/*.txt, surfaces/*.txt, certs/*.txt, scope.txt
// Field-by-field format documentation lives in docs/format.md.
#pragma once

#include "kpoly/certify.hpp"

#include <map>
#include <string>
#include <vector>

namespace kpoly {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ScopeEntry {
    std::string center;
    std::string certificate;  // covering certificate
    bool indirect = false;    // covered via a cross-reference
    std::string note;
};

struct FamilyScope {
    std::string family;
    std::vector<ScopeEntry> centers;
};

class Corpus {
public:
    std::map<std::string, ThreefoldGeometry> geometries;
    std::map<std::string, SurfaceGeometry> surfaces;
    std::map<std::string, RestrictionMap> restrictions;
    std::vector<DivisorialCert> divisorial;
    std::vector<FlagCert> flags;
    std::vector<UpperBoundCert> upper_bounds;
    std::map<std::string, FamilyScope> scopes;

    const ThreefoldGeometry& geometry(const std::string& name) const;
    const SurfaceGeometry& surface(const std::string& name) const;
    const RestrictionMap& restriction(const std::string& name) const;
    const DivisorialCert& divisorial_cert(const std::string& name) const;
    bool has_certificate(const std::string& name) const;

    // Polarization class and its cube for a divisorial/upper-bound certificate.
    DivisorClass polarization_of(const DivisorialCert& cert) const;
    Rational norm_cube(const DivisorialCert& cert) const;

    // Cross-references resolve, scopes complete, geometry self-checks pass.
    void validate() const;
};

// Parses every file under root; throws ParseError with file context on
// malformed input, dangling references or failed self-checks.
Corpus load_corpus(const std::string& root);

} // namespace kpoly
