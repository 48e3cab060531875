#include "kpoly/report.hpp"

#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

namespace kpoly {

std::vector<CertOutcome> verify_all(const Corpus& corpus) {
    std::vector<CertOutcome> out;
    for (const auto& c : corpus.divisorial)
        out.push_back({c.name, c.family, "divisorial", verify_divisorial(corpus, c)});
    for (const auto& c : corpus.flags)
        out.push_back({c.name, c.family, "flag", verify_flag(corpus, c)});
    for (const auto& c : corpus.upper_bounds)
        out.push_back({c.name, c.family, "upper_bound", verify_upper_bound(corpus, c)});
    return out;
}

namespace {

std::string value_summary(const CertOutcome& o) {
    std::ostringstream os;
    static const char* order[] = {"tau", "S", "beta", "S_WC", "F_P", "S_WP", "delta_bound",
                                  "S_bound", "beta_ge"};
    for (const char* key : order) {
        auto it = o.report.values.find(key);
        if (it != o.report.values.end()) os << " " << key << "=" << it->second.str();
    }
    return os.str();
}

} // namespace

void print_verify(std::ostream& os, const std::vector<CertOutcome>& outcomes) {
    size_t failures = 0;
    for (const auto& o : outcomes) {
        os << o.name << " [" << o.kind << "]" << value_summary(o);
        if (o.report.valid()) {
            os << " OK\n";
        } else {
            ++failures;
            os << " FAIL " << o.report.first_failure() << "\n";
        }
    }
    os << outcomes.size() << " certificates, " << failures << " failing\n";
}

void print_report(std::ostream& os, const Corpus& corpus,
                  const std::vector<CertOutcome>& outcomes, bool machine) {
    std::map<std::string, const CertOutcome*> by_name;
    for (const auto& o : outcomes) by_name[o.name] = &o;

    for (const auto& [family, scope] : corpus.scopes) {
        if (!machine) {
            os << "family " << family << "\n";
            os << "  " << std::left << std::setw(34) << "center" << std::setw(30) << "certificate"
               << std::setw(24) << "invariant" << "verdict\n";
        }
        for (const auto& e : scope.centers) {
            const CertOutcome* o = by_name.count(e.certificate) ? by_name.at(e.certificate) : nullptr;
            std::string inv, verdict;
            if (o) {
                const auto& vals = o->report.values;
                std::ostringstream iv;
                if (o->kind == "divisorial") {
                    iv << "beta=" << vals.at("beta").str();
                } else if (o->kind == "flag") {
                    if (vals.count("delta_bound")) iv << "delta>=" << vals.at("delta_bound").str();
                    else iv << "S_WC=" << vals.at("S_WC").str();
                } else {
                    iv << "beta>=" << vals.at("beta_ge").str();
                }
                inv = iv.str();
                verdict = o->report.valid() ? (e.indirect ? "covered" : "verified") : "INVALID";
            } else {
                verdict = "missing";
            }
            if (machine) {
                os << "family=" << family << " center=\"" << e.center << "\" cert=" << e.certificate
                   << " " << inv << " verdict=" << verdict;
                if (!e.note.empty()) os << " note=\"" << e.note << "\"";
                os << "\n";
            } else {
                os << "  " << std::left << std::setw(34) << e.center << std::setw(30)
                   << e.certificate << std::setw(24) << inv << verdict;
                if (!e.note.empty()) os << "  (" << e.note << ")";
                os << "\n";
            }
        }
        if (!machine) {
            // full invariant rows for every certificate of the family
            os << "  --\n";
            for (const auto& o : outcomes) {
                if (o.family != family) continue;
                os << "  " << std::left << std::setw(34) << "" << std::setw(30) << o.name
                   << value_summary(o) << (o.report.valid() ? "" : "  INVALID") << "\n";
            }
        }
    }
}

} // namespace kpoly
