// Thin python bindings over the main operations. Values cross the boundary
// as exact decimal-free strings ("43/60"), never as floats.
#include "kpoly/expr.hpp"
#include "kpoly/oracle.hpp"
#include "kpoly/pfaffian.hpp"
#include "kpoly/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace kpoly;

namespace {

struct PyCorpus {
    Corpus corpus;
};

py::dict outcome_to_dict(const CertOutcome& o) {
    py::dict d;
    d["name"] = o.name;
    d["family"] = o.family;
    d["kind"] = o.kind;
    d["ok"] = o.report.valid();
    py::dict values;
    for (const auto& [k, v] : o.report.values) values[py::str(k)] = v.str();
    d["values"] = values;
    if (!o.report.valid()) d["failure"] = o.report.first_failure();
    return d;
}

} // namespace

PYBIND11_MODULE(_kpoly, m) {
    m.doc() = "exact K-stability certificate engine";

    m.def("integrate_uni", [](const std::string& poly, const std::string& a, const std::string& b) {
        return integrate_uni(parse_unipoly(poly), Rational::parse(a), Rational::parse(b)).str();
    }, py::arg("poly"), py::arg("a"), py::arg("b"),
       "Exact definite integral of a rational polynomial in u.");

    m.def("integrate_chamber",
          [](const std::string& poly, const std::string& ulo, const std::string& uhi,
             const std::string& vlo, const std::string& vhi) {
              Chamber2D ch{Rational::parse(ulo), Rational::parse(uhi), parse_affine(vlo),
                           parse_affine(vhi)};
              return integrate_chamber(parse_bipoly(poly), ch).str();
          },
          py::arg("poly"), py::arg("u_lo"), py::arg("u_hi"), py::arg("v_lo"), py::arg("v_hi"));

    m.def("sign_on_interval", [](const std::string& poly, const std::string& a, const std::string& b) {
        return std::string(to_string(sign_on_interval(parse_unipoly(poly), Rational::parse(a),
                                                      Rational::parse(b))));
    });

    m.def("pfaffians", [] {
        std::vector<std::string> out;
        for (const auto& p : pfaffians_5(smoothing_matrix())) out.push_back(p.str());
        return out;
    }, "The five published Pfaffians of the smoothing matrix.");

    m.def("pfaffian_relations", [] {
        std::vector<std::pair<std::string, bool>> out;
        for (const auto& v : relation_verdicts()) out.emplace_back(v.description, v.holds);
        return out;
    });

    py::class_<PyCorpus>(m, "Corpus")
        .def(py::init([](const std::string& root) { return PyCorpus{load_corpus(root)}; }),
             py::arg("root"))
        .def("verify", [](const PyCorpus& pc) {
            py::list out;
            for (const auto& o : verify_all(pc.corpus)) out.append(outcome_to_dict(o));
            return out;
        })
        .def("report", [](const PyCorpus& pc, bool machine) {
            auto outcomes = verify_all(pc.corpus);
            std::ostringstream os;
            print_report(os, pc.corpus, outcomes, machine);
            return os.str();
        }, py::arg("machine") = false)
        .def("oracle", [](const PyCorpus& pc, int samples, uint64_t seed) {
            py::list out;
            for (const auto& mm : oracle_check_all(pc.corpus, samples, seed)) {
                py::dict d;
                d["certificate"] = mm.certificate;
                d["u"] = mm.u.str();
                d["v"] = mm.v.str();
                d["detail"] = mm.detail;
                out.append(d);
            }
            return out;
        }, py::arg("samples") = 25, py::arg("seed") = 7)
        .def_property_readonly("families", [](const PyCorpus& pc) {
            std::vector<std::string> out;
            for (const auto& [f, s] : pc.corpus.scopes) out.push_back(f);
            return out;
        });
}
