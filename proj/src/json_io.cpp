#include "bcm/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace bcm::io {

Json rational_json(const Rational& r) { return r.str(); }

Rational rational_from(const Json& j) {
    if (!j.is_string()) throw std::invalid_argument("expected a rational string");
    return Rational::parse(j.get<std::string>());
}

Json multipoly_json(const MultiPoly& p) {
    Json out;
    Json vars = Json::array();
    if (p.vars())
        for (auto& v : *p.vars()) vars.push_back(v);
    out["vars"] = std::move(vars);
    Json terms = Json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        Json t;
        t["e"] = it->first;
        t["n"] = it->second.num().str();
        t["d"] = it->second.den().str();
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out;
}

MultiPoly multipoly_from(const Json& j) {
    std::vector<std::string> names = j.at("vars").get<std::vector<std::string>>();
    MultiPoly p(make_varset(names));
    for (auto& t : j.at("terms")) {
        Monomial e = t.at("e").get<Monomial>();
        if (e.size() != names.size()) throw std::invalid_argument("exponent arity mismatch");
        Rational c(Int(t.at("n").get<std::string>()), Int(t.at("d").get<std::string>()));
        p.add_term(e, c);
    }
    return p;
}

Json helement_json(const cherednik::HElement& h) {
    Json out;
    out["N"] = h.sites();
    Json terms = Json::array();
    for (auto it = h.terms().rbegin(); it != h.terms().rend(); ++it) {
        Json t;
        t["x"] = it->first.x;
        Perm p{std::vector<int>(it->first.perm)};
        t["perm"] = p.one_indexed();
        t["y"] = it->first.y;
        t["n"] = it->second.num().str();
        t["d"] = it->second.den().str();
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out;
}

cherednik::HElement helement_from(const Json& j) {
    int n = j.at("N").get<int>();
    cherednik::HElement h(n);
    for (auto& t : j.at("terms")) {
        std::vector<int> x = t.at("x").get<std::vector<int>>();
        std::vector<int> y = t.at("y").get<std::vector<int>>();
        Perm p = Perm::from_one_indexed(t.at("perm").get<std::vector<int>>());
        if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n || p.size() != n)
            throw std::invalid_argument("arity mismatch");
        Rational c(Int(t.at("n").get<std::string>()), Int(t.at("d").get<std::string>()));
        h += cherednik::HElement::monomial(n, std::move(x), p, std::move(y), c);
    }
    return h;
}

Json v1_json(const gaudin::V1Element& v) {
    Json out;
    out["N"] = v.sites();
    Json terms = Json::array();
    for (auto& [tau, p] : v.terms()) {
        Json t;
        t["perm"] = tau.one_indexed();
        t["coeff"] = multipoly_json(p);
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out;
}

gaudin::V1Element v1_from(const Json& j) {
    int n = j.at("N").get<int>();
    gaudin::V1Element v(n);
    for (auto& t : j.at("terms")) {
        Perm p = Perm::from_one_indexed(t.at("perm").get<std::vector<int>>());
        v.add(p, multipoly_from(t.at("coeff")));
    }
    return v;
}

namespace {

Json matrix_json(const Matrix<Rational>& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (int j = 0; j < m.cols(); ++j) r.push_back(m(i, j).str());
        rows.push_back(std::move(r));
    }
    return rows;
}

Matrix<Rational> matrix_from(const Json& j, int n) {
    Matrix<Rational> m(n, n);
    if (static_cast<int>(j.size()) != n) throw std::invalid_argument("matrix shape mismatch");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(j[i].size()) != n) throw std::invalid_argument("matrix shape mismatch");
        for (int k = 0; k < n; ++k) m(i, k) = Rational::parse(j[i][k].get<std::string>());
    }
    return m;
}

Json poly1_json(const Poly1& p) {
    Json out = Json::array();
    for (int d = 0; d <= p.deg(); ++d) out.push_back(p.coeff(d).str());
    if (p.is_zero()) out.push_back("0");
    return out;
}

}  // namespace

Json cmpoint_json(const calogero::CMPoint& pt) {
    Json out;
    out["N"] = pt.n;
    out["Z"] = matrix_json(pt.Z);
    out["L"] = matrix_json(pt.L);
    return out;
}

calogero::CMPoint cmpoint_from(const Json& j) {
    calogero::CMPoint pt;
    pt.n = j.at("N").get<int>();
    if (pt.n < 1) throw std::invalid_argument("N must be positive");
    pt.Z = matrix_from(j.at("Z"), pt.n);
    pt.L = matrix_from(j.at("L"), pt.n);
    return pt;
}

Json qexp_json(const qexp::QExpSpace& w) {
    Json out;
    Json basis = Json::array();
    for (auto& t : w.basis) {
        Json b;
        b["q"] = poly1_json(t.q);
        b["exp"] = t.mu.str();
        basis.push_back(std::move(b));
    }
    out["basis"] = std::move(basis);
    return out;
}

qexp::QExpSpace qexp_from(const Json& j) {
    qexp::QExpSpace w;
    for (auto& b : j.at("basis")) {
        std::vector<Rational> cs;
        for (auto& c : b.at("q")) cs.push_back(Rational::parse(c.get<std::string>()));
        w.basis.push_back(qexp::QExpTerm{Poly1(std::move(cs)), Rational::parse(b.at("exp").get<std::string>())});
    }
    if (w.basis.empty()) throw std::invalid_argument("empty basis");
    return w;
}

Json series_json(const TruncSeries<Rational>& s) {
    Json out;
    out["order"] = s.order();
    Json rows = Json::array();
    for (int i = 0; i <= s.order(); ++i) {
        Json r = Json::array();
        for (int j = 0; j <= s.order(); ++j) r.push_back(s.at(i, j).str());
        rows.push_back(std::move(r));
    }
    out["c"] = std::move(rows);
    return out;
}

TruncSeries<Rational> series_from(const Json& j) {
    int order = j.at("order").get<int>();
    TruncSeries<Rational> s(order);
    const Json& rows = j.at("c");
    for (int i = 0; i <= order; ++i)
        for (int k = 0; k <= order; ++k) {
            Rational c = Rational::parse(rows[i][k].get<std::string>());
            if (!c.is_zero()) s.set(i, k, c);
        }
    return s;
}

Json diffop_json(const gaudin::DiffOp& d) {
    Json out;
    out["order"] = d.order;
    Json cs = Json::array();
    for (auto& mat : d.coeff) {
        Json rows = Json::array();
        for (int i = 0; i < mat.rows(); ++i) {
            Json r = Json::array();
            for (int j = 0; j < mat.cols(); ++j) {
                Json pair = Json::array();
                pair.push_back(poly1_json(mat(i, j).num()));
                pair.push_back(poly1_json(mat(i, j).den()));
                r.push_back(std::move(pair));
            }
            rows.push_back(std::move(r));
        }
        cs.push_back(std::move(rows));
    }
    out["coeff"] = std::move(cs);
    return out;
}

Json central_table_json(int n) {
    UVPoly<cherednik::HElement> pz = cherednik::universal_central_poly(n);
    Json out;
    out["N"] = n;
    Json table = Json::array();
    for (int i = 0; i <= n; ++i) {
        Json row = Json::array();
        for (int j = 0; j <= n; ++j) row.push_back(helement_json(pz.coeff(n - j, n - i)));
        table.push_back(std::move(row));
    }
    out["c"] = std::move(table);
    return out;
}

void write_file(const std::string& path, const Json& j) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << j.dump(2) << "\n";
}

Json read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    return Json::parse(f);
}

}  // namespace bcm::io
