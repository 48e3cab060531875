#include "kpoly/corpus.hpp"

#include "kpoly/expr.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace kpoly {

namespace {

struct Token {
    enum Kind { Ident, String, Number, Punct, End } kind;
    std::string text;
    int line;
};

class Lexer {
public:
    Lexer(std::string text, std::string file) : s_(std::move(text)), file_(std::move(file)) {
        next();
    }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        next();
        return t;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(file_ + ":" + std::to_string(tok_.line) + ": " + msg +
                         " (near '" + tok_.text + "')");
    }

    std::string expect_ident() {
        if (tok_.kind != Token::Ident) fail("expected identifier");
        return take().text;
    }
    std::string expect_string() {
        if (tok_.kind != Token::String) fail("expected quoted string");
        return take().text;
    }
    void expect_punct(const std::string& p) {
        if (tok_.kind != Token::Punct || tok_.text != p) fail("expected '" + p + "'");
        take();
    }
    bool accept_punct(const std::string& p) {
        if (tok_.kind == Token::Punct && tok_.text == p) {
            take();
            return true;
        }
        return false;
    }
    Rational expect_number() {
        if (tok_.kind != Token::Number) fail("expected number");
        return Rational::parse(take().text);
    }
    bool at_number() const { return tok_.kind == Token::Number; }
    bool at_ident(const std::string& w) const { return tok_.kind == Token::Ident && tok_.text == w; }
    bool at_end() const { return tok_.kind == Token::End; }
    const std::string& file() const { return file_; }

private:
    void next() {
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
        tok_.line = line_;
        if (pos_ >= s_.size()) {
            tok_ = {Token::End, "", line_};
            return;
        }
        char c = s_[pos_];
        if (c == '"') {
            ++pos_;
            std::string out;
            while (pos_ < s_.size() && s_[pos_] != '"') {
                if (s_[pos_] == '\n') ++line_;
                out += s_[pos_++];
            }
            if (pos_ >= s_.size()) throw ParseError(file_ + ": unterminated string");
            ++pos_;
            tok_ = {Token::String, out, line_};
            return;
        }
        if (c == '{' || c == '}' || c == '=') {
            ++pos_;
            tok_ = {Token::Punct, std::string(1, c), line_};
            return;
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            std::string out(1, c);
            ++pos_;
            while (pos_ < s_.size() &&
                   (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) {
                out += s_[pos_++];
            }
            tok_ = {Token::Number, out, line_};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string out;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                        s_[pos_] == '_' || s_[pos_] == '.')) {
                out += s_[pos_++];
            }
            tok_ = {Token::Ident, out, line_};
            return;
        }
        throw ParseError(file_ + ":" + std::to_string(line_) + ": unexpected character '" +
                         std::string(1, c) + "'");
    }

    std::string s_;
    std::string file_;
    size_t pos_ = 0;
    int line_ = 1;
    Token tok_{Token::End, "", 1};
};

std::vector<Rational> read_number_list(Lexer& lx) {
    std::vector<Rational> out;
    while (lx.at_number()) out.push_back(lx.expect_number());
    if (out.empty()) lx.fail("expected at least one number");
    return out;
}

DivisorClass read_class(Lexer& lx) { return DivisorClass(read_number_list(lx)); }

std::vector<std::string> read_ident_list(Lexer& lx) {
    std::vector<std::string> out;
    int line = lx.peek().line;
    while (lx.peek().kind == Token::Ident && lx.peek().line == line)
        out.push_back(lx.expect_ident());
    if (out.empty()) lx.fail("expected identifiers");
    return out;
}

PolyClass read_polyclass(Lexer& lx, size_t rank) {
    PolyClass p;
    for (size_t i = 0; i < rank; ++i) p.c.push_back(parse_unipoly(lx.expect_string()));
    return p;
}

SurfPolyClass read_surfpolyclass(Lexer& lx, size_t rank) {
    SurfPolyClass p;
    for (size_t i = 0; i < rank; ++i) p.c.push_back(parse_affine(lx.expect_string()));
    return p;
}

ThreefoldGeometry parse_geometry(Lexer& lx) {
    ThreefoldGeometry g;
    g.name = lx.expect_string();
    lx.expect_punct("{");
    bool have_cube = false;
    while (!lx.accept_punct("}")) {
        std::string key = lx.expect_ident();
        if (key == "basis") {
            lx.expect_punct("=");
            g.basis = read_ident_list(lx);
        } else if (key == "anticanonical") {
            lx.expect_punct("=");
            g.anticanonical = read_class(lx);
        } else if (key == "cube") {
            lx.expect_punct("=");
            g.expected_cube = lx.expect_number();
            have_cube = true;
        } else if (key == "triple") {
            if (g.basis.empty()) lx.fail("triple block before basis");
            lx.expect_punct("{");
            while (!lx.accept_punct("}")) {
                std::string a = lx.expect_ident(), b = lx.expect_ident(), c = lx.expect_ident();
                lx.expect_punct("=");
                Rational val = lx.expect_number();
                int ia = g.basis_index(a), ib = g.basis_index(b), ic = g.basis_index(c);
                if (ia < 0 || ib < 0 || ic < 0) lx.fail("unknown basis element in triple");
                g.set_triple(static_cast<size_t>(ia), static_cast<size_t>(ib),
                             static_cast<size_t>(ic), val);
            }
        } else if (key == "curve") {
            std::string cname = lx.expect_string();
            lx.expect_punct("=");
            g.test_curves.emplace_back(cname, read_number_list(lx));
        } else {
            lx.fail("unknown geometry field '" + key + "'");
        }
    }
    if (g.basis.empty() || !have_cube || g.anticanonical.rank() == 0)
        throw ParseError(lx.file() + ": geometry " + g.name + " missing required fields");
    return g;
}

SurfaceGeometry parse_surface(Lexer& lx) {
    SurfaceGeometry s;
    s.name = lx.expect_string();
    lx.expect_punct("{");
    while (!lx.accept_punct("}")) {
        std::string key = lx.expect_ident();
        if (key == "basis") {
            lx.expect_punct("=");
            s.basis = read_ident_list(lx);
            s.gram.assign(s.rank(), std::vector<Rational>(s.rank(), Rational(0)));
        } else if (key == "gram") {
            if (s.basis.empty()) lx.fail("gram block before basis");
            lx.expect_punct("{");
            while (!lx.accept_punct("}")) {
                std::string a = lx.expect_ident(), b = lx.expect_ident();
                lx.expect_punct("=");
                Rational val = lx.expect_number();
                int ia = -1, ib = -1;
                for (size_t i = 0; i < s.basis.size(); ++i) {
                    if (s.basis[i] == a) ia = static_cast<int>(i);
                    if (s.basis[i] == b) ib = static_cast<int>(i);
                }
                if (ia < 0 || ib < 0) lx.fail("unknown basis element in gram");
                s.gram[static_cast<size_t>(ia)][static_cast<size_t>(ib)] = val;
                s.gram[static_cast<size_t>(ib)][static_cast<size_t>(ia)] = val;
            }
        } else if (key == "cone_complete") {
            lx.expect_punct("=");
            std::string b = lx.expect_ident();
            if (b != "true" && b != "false") lx.fail("cone_complete must be true/false");
            s.cone_complete = (b == "true");
        } else if (key == "curve" || key == "zero_curve") {
            std::string cname = lx.expect_string();
            lx.expect_punct("=");
            SurfaceCurve cu;
            cu.name = cname;
            cu.cls = read_class(lx);
            cu.self_intersection = s.pair(cu.cls, cu.cls);
            if (key == "curve" && cu.self_intersection.sign() >= 0)
                lx.fail("curve " + cname + " is not negative; use zero_curve");
            if (key == "zero_curve" && cu.self_intersection.sign() < 0)
                lx.fail("zero_curve " + cname + " has negative self-intersection");
            s.curves.push_back(std::move(cu));
        } else {
            lx.fail("unknown surface field '" + key + "'");
        }
    }
    return s;
}

RestrictionMap parse_restriction(Lexer& lx, const std::map<std::string, ThreefoldGeometry>& geoms) {
    RestrictionMap r;
    r.name = lx.expect_string();
    lx.expect_punct("{");
    std::vector<std::pair<std::string, DivisorClass>> rows;
    while (!lx.accept_punct("}")) {
        std::string key = lx.expect_ident();
        if (key == "geometry") {
            lx.expect_punct("=");
            r.geometry = lx.expect_string();
        } else if (key == "surface") {
            lx.expect_punct("=");
            r.surface = lx.expect_string();
        } else if (key == "surface_class") {
            lx.expect_punct("=");
            r.surface_class = read_class(lx);
        } else if (key == "row") {
            std::string div = lx.expect_ident();
            lx.expect_punct("=");
            rows.emplace_back(div, read_class(lx));
        } else {
            lx.fail("unknown restriction field '" + key + "'");
        }
    }
    auto git = geoms.find(r.geometry);
    if (git == geoms.end()) throw ParseError(lx.file() + ": restriction " + r.name +
                                             " references unknown geometry " + r.geometry);
    const auto& g = git->second;
    r.rows.assign(g.rank(), DivisorClass());
    for (auto& [div, cls] : rows) {
        int i = g.basis_index(div);
        if (i < 0) throw ParseError(lx.file() + ": restriction " + r.name + ": unknown row " + div);
        r.rows[static_cast<size_t>(i)] = std::move(cls);
    }
    for (size_t i = 0; i < r.rows.size(); ++i)
        if (r.rows[i].rank() == 0)
            throw ParseError(lx.file() + ": restriction " + r.name + ": missing row " + g.basis[i]);
    return r;
}

UChamber parse_uchamber(Lexer& lx, size_t rank) {
    UChamber ch;
    lx.expect_punct("{");
    while (!lx.accept_punct("}")) {
        std::string key = lx.expect_ident();
        if (key == "u") {
            lx.expect_punct("=");
            ch.lo = lx.expect_number();
            ch.hi = lx.expect_number();
        } else if (key == "P") {
            lx.expect_punct("=");
            ch.P = read_polyclass(lx, rank);
        } else if (key == "N") {
            NegativePart np;
            np.name = lx.expect_string();
            lx.expect_punct("{");
            while (!lx.accept_punct("}")) {
                std::string f = lx.expect_ident();
                lx.expect_punct("=");
                if (f == "class") np.cls = read_class(lx);
                else if (f == "coeff") np.coeff = parse_unipoly(lx.expect_string());
                else lx.fail("unknown N field '" + f + "'");
            }
            ch.N.push_back(std::move(np));
        } else if (key == "vol") {
            lx.expect_punct("=");
            ch.expected_vol = parse_unipoly(lx.expect_string());
        } else if (key == "geometry") {
            lx.expect_punct("=");
            ch.geometry = lx.expect_string();
        } else {
            lx.fail("unknown chamber field '" + key + "'");
        }
    }
    return ch;
}

VChamber parse_vchamber(Lexer& lx, size_t rank) {
    VChamber v;
    lx.expect_punct("{");
    while (!lx.accept_punct("}")) {
        std::string key = lx.expect_ident();
        if (key == "v") {
            lx.expect_punct("=");
            v.v_lo = parse_affine(lx.expect_string());
            v.v_hi = parse_affine(lx.expect_string());
            if (!v.v_lo.v_free() || !v.v_hi.v_free()) lx.fail("v bounds must not involve v");
        } else if (key == "P") {
            lx.expect_punct("=");
            v.P = read_surfpolyclass(lx, rank);
        } else if (key == "N") {
            SurfaceNegativePart part;
            part.curve = lx.expect_string();
            lx.expect_punct("=");
            part.coeff = parse_affine(lx.expect_string());
            v.N.push_back(std::move(part));
        } else if (key == "ordP") {
            lx.expect_punct("=");
            v.ordP = parse_affine(lx.expect_string());
        } else {
            lx.fail("unknown vchamber field '" + key + "'");
        }
    }
    return v;
}

FlagUChamber parse_flag_uchamber(Lexer& lx, size_t surf_rank) {
    FlagUChamber uch;
    lx.expect_punct("{");
    while (!lx.accept_punct("}")) {
        std::string key = lx.expect_ident();
        if (key == "u") {
            lx.expect_punct("=");
            uch.lo = lx.expect_number();
            uch.hi = lx.expect_number();
        } else if (key == "restricted_P") {
            lx.expect_punct("=");
            uch.restrictedP = read_surfpolyclass(lx, surf_rank);
        } else if (key == "d") {
            lx.expect_punct("=");
            uch.d = parse_unipoly(lx.expect_string());
        } else if (key == "nprime") {
            std::string cname = lx.expect_string();
            lx.expect_punct("=");
            uch.nprime.emplace_back(cname, parse_unipoly(lx.expect_string()));
        } else if (key == "nprime_class") {
            lx.expect_punct("{");
            DivisorClass cls;
            UniPoly coeff;
            while (!lx.accept_punct("}")) {
                std::string f = lx.expect_ident();
                lx.expect_punct("=");
                if (f == "class") cls = read_class(lx);
                else if (f == "coeff") coeff = parse_unipoly(lx.expect_string());
                else lx.fail("unknown nprime_class field '" + f + "'");
            }
            uch.nprime_classes.emplace_back(std::move(cls), std::move(coeff));
        } else if (key == "t") {
            lx.expect_punct("=");
            uch.t = parse_unipoly(lx.expect_string());
        } else if (key == "vchamber") {
            uch.vchambers.push_back(parse_vchamber(lx, surf_rank));
        } else {
            lx.fail("unknown uchamber field '" + key + "'");
        }
    }
    return uch;
}

FamilyScope parse_scope(Lexer& lx) {
    FamilyScope sc;
    sc.family = lx.expect_string();
    lx.expect_punct("{");
    while (!lx.accept_punct("}")) {
        std::string key = lx.expect_ident();
        if (key != "center") lx.fail("unknown scope field '" + key + "'");
        ScopeEntry e;
        e.center = lx.expect_string();
        lx.expect_punct("=");
        std::string how = lx.expect_ident();
        if (how == "cert") {
            e.certificate = lx.expect_string();
        } else if (how == "via") {
            e.indirect = true;
            e.certificate = lx.expect_string();
            e.note = lx.expect_string();
        } else {
            lx.fail("scope entries are 'cert' or 'via'");
        }
        sc.centers.push_back(std::move(e));
    }
    return sc;
}

void parse_certificate(Lexer& lx, Corpus& corpus) {
    std::string name = lx.expect_string();
    lx.expect_punct("{");
    // read kind first (must be the first field)
    std::string key = lx.expect_ident();
    if (key != "kind") lx.fail("certificate must start with 'kind'");
    lx.expect_punct("=");
    std::string kind = lx.expect_ident();

    if (kind == "divisorial" || kind == "upper_bound") {
        DivisorialCert dc;
        UpperBoundCert uc;
        bool upper = (kind == "upper_bound");
        std::string geom_name;
        size_t rank = 0;
        auto geom_rank = [&]() -> size_t {
            if (rank == 0) lx.fail("geometry must come before chambers");
            return rank;
        };
        std::vector<UChamber> chambers;
        while (!lx.accept_punct("}")) {
            std::string k = lx.expect_ident();
            if (k == "family") {
                lx.expect_punct("=");
                dc.family = uc.family = lx.expect_string();
            } else if (k == "geometry") {
                lx.expect_punct("=");
                geom_name = lx.expect_string();
                auto it = corpus.geometries.find(geom_name);
                if (it == corpus.geometries.end())
                    throw ParseError(lx.file() + ": certificate " + name +
                                     " references unknown geometry " + geom_name);
                rank = it->second.rank();
            } else if (k == "divisor") {
                lx.expect_punct("=");
                dc.divisor = uc.divisor = read_class(lx);
            } else if (k == "A") {
                lx.expect_punct("=");
                dc.A = uc.A = lx.expect_number();
            } else if (k == "polarization") {
                lx.expect_punct("=");
                DivisorClass pol = read_class(lx);
                dc.polarization = pol;
                uc.polarization = pol;
            } else if (k == "tau") {
                lx.expect_punct("=");
                dc.tau = lx.expect_number();
            } else if (k == "expected_S") {
                lx.expect_punct("=");
                dc.expected_S = lx.expect_number();
            } else if (k == "expected_beta") {
                lx.expect_punct("=");
                dc.expected_beta = lx.expect_number();
            } else if (k == "chamber") {
                chambers.push_back(parse_uchamber(lx, geom_rank()));
            } else if (k == "nef_hi" && upper) {
                lx.expect_punct("=");
                uc.nef_hi = lx.expect_number();
            } else if (k == "tau_bound" && upper) {
                lx.expect_punct("=");
                uc.tau_bound = lx.expect_number();
            } else if (k == "witness" && upper) {
                lx.expect_punct("=");
                uc.witness = read_class(lx);
            } else if (k == "expected_S_bound" && upper) {
                lx.expect_punct("=");
                uc.expected_S_bound = lx.expect_number();
            } else if (k == "conclusion_beta_ge" && upper) {
                lx.expect_punct("=");
                uc.conclusion_beta_ge = lx.expect_number();
            } else {
                lx.fail("unknown certificate field '" + k + "'");
            }
        }
        if (upper) {
            uc.name = name;
            uc.geometry = geom_name;
            uc.chambers = std::move(chambers);
            corpus.upper_bounds.push_back(std::move(uc));
        } else {
            dc.name = name;
            dc.geometry = geom_name;
            dc.chambers = std::move(chambers);
            corpus.divisorial.push_back(std::move(dc));
        }
    } else if (kind == "flag") {
        FlagCert fc;
        fc.name = name;
        size_t surf_rank = 0;
        while (!lx.accept_punct("}")) {
            std::string k = lx.expect_ident();
            if (k == "family") {
                lx.expect_punct("=");
                fc.family = lx.expect_string();
            } else if (k == "divisorial") {
                lx.expect_punct("=");
                fc.divisorial = lx.expect_string();
            } else if (k == "surface") {
                lx.expect_punct("=");
                fc.surface = lx.expect_string();
                auto it = corpus.surfaces.find(fc.surface);
                if (it == corpus.surfaces.end())
                    throw ParseError(lx.file() + ": certificate " + name +
                                     " references unknown surface " + fc.surface);
                surf_rank = it->second.rank();
            } else if (k == "restriction") {
                lx.expect_punct("=");
                fc.restriction = lx.expect_string();
            } else if (k == "curve_name") {
                lx.expect_punct("=");
                fc.curve_name = lx.expect_string();
            } else if (k == "curve") {
                lx.expect_punct("=");
                fc.curve = read_class(lx);
            } else if (k == "expected_S_WC") {
                lx.expect_punct("=");
                fc.expected_S_WC = lx.expect_number();
            } else if (k == "expected_F_P") {
                lx.expect_punct("=");
                fc.expected_F_P = lx.expect_number();
            } else if (k == "expected_S_WP") {
                lx.expect_punct("=");
                fc.expected_S_WP = lx.expect_number();
            } else if (k == "expected_delta_bound") {
                lx.expect_punct("=");
                fc.expected_delta_bound = lx.expect_number();
            } else if (k == "strict_remark") {
                lx.expect_punct("=");
                fc.strict_remark = (lx.expect_ident() == "true");
            } else if (k == "point_data") {
                lx.expect_punct("=");
                fc.has_point_data = (lx.expect_ident() == "true");
            } else if (k == "concludes_beta_positive") {
                lx.expect_punct("=");
                fc.concludes_beta_positive = (lx.expect_ident() == "true");
            } else if (k == "uchamber") {
                if (surf_rank == 0) lx.fail("surface must come before uchambers");
                fc.uchambers.push_back(parse_flag_uchamber(lx, surf_rank));
            } else {
                lx.fail("unknown flag certificate field '" + k + "'");
            }
        }
        corpus.flags.push_back(std::move(fc));
    } else {
        lx.fail("unknown certificate kind '" + kind + "'");
    }
}

void parse_file(const fs::path& path, Corpus& corpus) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    Lexer lx(buf.str(), path.string());
    while (!lx.at_end()) {
        std::string top = lx.expect_ident();
        if (top == "geometry") {
            ThreefoldGeometry g = parse_geometry(lx);
            if (corpus.geometries.count(g.name))
                throw ParseError(path.string() + ": duplicate geometry " + g.name);
            corpus.geometries.emplace(g.name, std::move(g));
        } else if (top == "surface") {
            SurfaceGeometry s = parse_surface(lx);
            if (corpus.surfaces.count(s.name))
                throw ParseError(path.string() + ": duplicate surface " + s.name);
            corpus.surfaces.emplace(s.name, std::move(s));
        } else if (top == "restriction") {
            RestrictionMap r = parse_restriction(lx, corpus.geometries);
            if (corpus.restrictions.count(r.name))
                throw ParseError(path.string() + ": duplicate restriction " + r.name);
            corpus.restrictions.emplace(r.name, std::move(r));
        } else if (top == "certificate") {
            parse_certificate(lx, corpus);
        } else if (top == "scope") {
            FamilyScope sc = parse_scope(lx);
            if (corpus.scopes.count(sc.family))
                throw ParseError(path.string() + ": duplicate scope " + sc.family);
            corpus.scopes.emplace(sc.family, std::move(sc));
        } else {
            lx.fail("unknown top-level block '" + top + "'");
        }
    }
}

} // namespace

const ThreefoldGeometry& Corpus::geometry(const std::string& name) const {
    auto it = geometries.find(name);
    if (it == geometries.end()) throw std::runtime_error("unknown geometry " + name);
    return it->second;
}

const SurfaceGeometry& Corpus::surface(const std::string& name) const {
    auto it = surfaces.find(name);
    if (it == surfaces.end()) throw std::runtime_error("unknown surface " + name);
    return it->second;
}

const RestrictionMap& Corpus::restriction(const std::string& name) const {
    auto it = restrictions.find(name);
    if (it == restrictions.end()) throw std::runtime_error("unknown restriction " + name);
    return it->second;
}

const DivisorialCert& Corpus::divisorial_cert(const std::string& name) const {
    for (const auto& c : divisorial)
        if (c.name == name) return c;
    throw std::runtime_error("unknown divisorial certificate " + name);
}

bool Corpus::has_certificate(const std::string& name) const {
    for (const auto& c : divisorial)
        if (c.name == name) return true;
    for (const auto& c : flags)
        if (c.name == name) return true;
    for (const auto& c : upper_bounds)
        if (c.name == name) return true;
    return false;
}

void Corpus::validate() const {
    for (const auto& [name, g] : geometries) g.self_check();
    for (const auto& [name, s] : surfaces) s.self_check();
    for (const auto& [name, r] : restrictions) {
        geometry(r.geometry);
        surface(r.surface);
    }
    for (const auto& c : divisorial) {
        const auto& g = geometry(c.geometry);
        for (const auto& ch : c.chambers)
            if (ch.geometry) geometry(*ch.geometry);
        if (c.divisor.rank() != g.rank())
            throw ParseError("certificate " + c.name + ": divisor rank mismatch");
    }
    for (const auto& c : flags) {
        divisorial_cert(c.divisorial);
        const auto& s = surface(c.surface);
        const auto& r = restriction(c.restriction);
        if (r.surface != c.surface || r.geometry != divisorial_cert(c.divisorial).geometry)
            throw ParseError("certificate " + c.name + ": restriction does not match");
        if (c.curve.rank() != s.rank())
            throw ParseError("certificate " + c.name + ": curve rank mismatch");
    }
    for (const auto& c : upper_bounds) geometry(c.geometry);
    for (const auto& [fam, sc] : scopes) {
        for (const auto& e : sc.centers) {
            if (e.certificate.empty() || !has_certificate(e.certificate))
                throw ParseError("scope " + fam + ": center '" + e.center +
                                 "' has no covering certificate");
        }
    }
}

Corpus load_corpus(const std::string& root) {
    Corpus corpus;
    if (!fs::exists(root)) throw ParseError("corpus root does not exist: " + root);
    // Two passes so certificates can reference geometries/surfaces from any file:
    // first geometries/surfaces/restrictions, then certificates and scopes.
    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(root))
        if (entry.is_regular_file() && entry.path().extension() == ".txt")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    auto in_dir = [](const fs::path& p, const std::string& dir) {
        for (const auto& part : p) if (part == dir) return true;
        return false;
    };
    for (const auto& p : files)
        if (in_dir(p, "geometry")) parse_file(p, corpus);
    for (const auto& p : files)
        if (in_dir(p, "surfaces")) parse_file(p, corpus);
    for (const auto& p : files)
        if (!in_dir(p, "geometry") && !in_dir(p, "surfaces")) parse_file(p, corpus);

    std::sort(corpus.divisorial.begin(), corpus.divisorial.end(),
              [](const auto& a, const auto& b) { return a.name < b.name; });
    std::sort(corpus.flags.begin(), corpus.flags.end(),
              [](const auto& a, const auto& b) { return a.name < b.name; });
    std::sort(corpus.upper_bounds.begin(), corpus.upper_bounds.end(),
              [](const auto& a, const auto& b) { return a.name < b.name; });
    corpus.validate();
    return corpus;
}

} // namespace kpoly
