#include "cm/io.hpp"

#include <json.hpp>

#include <algorithm>

namespace cm {

namespace {

using json = nlohmann::ordered_json;

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw parse_error("malformed JSON");
    if (!j.is_object()) throw parse_error("top-level value must be an object");
    return j;
}

Rational field_rational(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key) || !j[key].is_string())
        throw parse_error(where + ": missing rational field '" + key + "'");
    auto r = Rational::parse(j[key].get<std::string>());
    if (!r)
        throw validation_error(where + ": non-canonical rational '" +
                               j[key].get<std::string>() + "' in field '" + key + "'");
    return *r;
}

GaussRational complex_of(const json& j, const std::string& where) {
    if (!j.is_object()) throw parse_error(where + ": expected {re, im} object");
    return {field_rational(j, "re", where), field_rational(j, "im", where)};
}

int field_int(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw parse_error(where + ": missing integer field '" + key + "'");
    return j[key].get<int>();
}

Exponents field_exponents(const json& j, const char* key, int n, const std::string& where) {
    if (!j.contains(key) || !j[key].is_array())
        throw parse_error(where + ": missing exponent list '" + key + "'");
    Exponents e;
    for (const auto& v : j[key]) {
        if (!v.is_number_integer() || v.get<int>() < 0)
            throw validation_error(where + ": exponents must be nonnegative integers");
        e.push_back(v.get<int>());
    }
    if (static_cast<int>(e.size()) != n)
        throw validation_error(where + ": exponent list length != n");
    return e;
}

json rational_json(const Rational& r) { return json(r.str()); }

json complex_json(const GaussRational& c) {
    json j;
    j["re"] = rational_json(c.re);
    j["im"] = rational_json(c.im);
    return j;
}

void expect_type(const json& j, const char* want) {
    if (!j.contains("type") || j["type"] != want)
        throw parse_error(std::string("expected file of type '") + want + "'");
}

} // namespace

Hypersurface parse_surface(const std::string& text) {
    const json j = parse_text(text);
    expect_type(j, "surface");
    const int n = field_int(j, "n", "surface");
    const int e = field_int(j, "e", "surface");
    const int K = field_int(j, "truncation_weight", "surface");
    if (K < 2) throw validation_error("surface: truncation_weight must be >= 2");
    Signature sig(n, e);
    SeriesC F(n, K);
    if (!j.contains("terms") || !j["terms"].is_array())
        throw parse_error("surface: missing term list");
    int idx = 0;
    for (const auto& t : j["terms"]) {
        const std::string where = "surface term " + std::to_string(idx++);
        RealMonomial m{field_exponents(t, "zi", n, where), field_exponents(t, "zbari", n, where),
                       field_int(t, "u", where)};
        if (m.up < 0) throw validation_error(where + ": negative u power");
        if (m.weight() > K) throw validation_error(where + ": weight above truncation");
        const GaussRational c = complex_of(t, where);
        if (c.is_zero()) throw validation_error(where + ": zero coefficient stored");
        if (!F.coeff(m).is_zero()) throw validation_error(where + ": duplicate monomial");
        F.add_term(m, c);
    }
    // RealSeries checks the full symmetric listing; Hypersurface checks the
    // second-order vanishing and the Levi form.
    return Hypersurface(sig, RealSeries(std::move(F)));
}

HoloMap parse_map(const std::string& text) {
    const json j = parse_text(text);
    expect_type(j, "map");
    const int n = field_int(j, "n", "map");
    const int K = field_int(j, "truncation_weight", "map");
    if (n < 1 || K < 2) throw validation_error("map: need n >= 1, truncation_weight >= 2");
    if (!j.contains("f") || !j["f"].is_array() || static_cast<int>(j["f"].size()) != n)
        throw parse_error("map: f must list n components");
    auto read_terms = [&](const json& arr, int trunc, const std::string& who) {
        HoloSeries s(n, trunc);
        int idx = 0;
        for (const auto& t : arr) {
            const std::string where = who + " term " + std::to_string(idx++);
            HoloMonomial m{field_exponents(t, "zi", n, where), field_int(t, "w", where)};
            if (m.wp < 0) throw validation_error(where + ": negative w power");
            if (m.weight() > trunc) throw validation_error(where + ": weight above truncation");
            const GaussRational c = complex_of(t, where);
            if (c.is_zero()) throw validation_error(where + ": zero coefficient stored");
            if (!s.coeff(m).is_zero()) throw validation_error(where + ": duplicate monomial");
            s.add_term(m, c);
        }
        return s;
    };
    std::vector<HoloSeries> f;
    f.reserve(n);
    for (int a = 0; a < n; ++a)
        f.push_back(read_terms(j["f"][a], K - 1, "map f" + std::to_string(a + 1)));
    if (!j.contains("g") || !j["g"].is_array()) throw parse_error("map: missing g term list");
    HoloSeries g = read_terms(j["g"], K, "map g");
    try {
        return HoloMap(std::move(f), std::move(g));
    } catch (const precondition_error& e) {
        throw validation_error(std::string("map: ") + e.what());
    }
}

InitialValue parse_sigma(const std::string& text) {
    const json j = parse_text(text);
    expect_type(j, "sigma");
    const int n = field_int(j, "n", "sigma");
    const int e = field_int(j, "e", "sigma");
    Signature sig(n, e);
    if (!j.contains("C") || !j["C"].is_array() || static_cast<int>(j["C"].size()) != n)
        throw parse_error("sigma: C must be an n x n matrix");
    GMatrix C(n);
    for (int a = 0; a < n; ++a) {
        if (!j["C"][a].is_array() || static_cast<int>(j["C"][a].size()) != n)
            throw parse_error("sigma: C must be an n x n matrix");
        for (int b = 0; b < n; ++b) C(a, b) = complex_of(j["C"][a][b], "sigma C");
    }
    if (!j.contains("a") || !j["a"].is_array() || static_cast<int>(j["a"].size()) != n)
        throw parse_error("sigma: a must be an n vector");
    std::vector<GaussRational> a(n);
    for (int k = 0; k < n; ++k) a[k] = complex_of(j["a"][k], "sigma a");
    const Rational rho = field_rational(j, "rho", "sigma");
    const Rational r = field_rational(j, "r", "sigma");
    try {
        return InitialValue(sig, std::move(C), std::move(a), rho, r);
    } catch (const precondition_error& e) {
        throw validation_error(std::string("sigma: ") + e.what());
    }
}

std::string emit_surface(const Hypersurface& M) {
    json j;
    j["type"] = "surface";
    j["n"] = M.dim();
    j["e"] = M.sig().e;
    j["truncation_weight"] = M.truncation();
    j["terms"] = json::array();
    for (const auto& [m, c] : M.defining_series().complex_form().terms()) {
        json t;
        t["zi"] = m.zp;
        t["zbari"] = m.zbp;
        t["u"] = m.up;
        t["re"] = rational_json(c.re);
        t["im"] = rational_json(c.im);
        j["terms"].push_back(std::move(t));
    }
    return j.dump(2) + "\n";
}

std::string emit_map(const HoloMap& phi) {
    json j;
    j["type"] = "map";
    j["n"] = phi.dim();
    j["truncation_weight"] = phi.truncation();
    j["f"] = json::array();
    auto terms_json = [](const HoloSeries& s) {
        json arr = json::array();
        for (const auto& [m, c] : s.terms()) {
            json t;
            t["zi"] = m.zp;
            t["w"] = m.wp;
            t["re"] = rational_json(c.re);
            t["im"] = rational_json(c.im);
            arr.push_back(std::move(t));
        }
        return arr;
    };
    for (const auto& c : phi.f()) j["f"].push_back(terms_json(c));
    j["g"] = terms_json(phi.g());
    return j.dump(2) + "\n";
}

std::string emit_sigma(const InitialValue& sigma) {
    json j;
    j["type"] = "sigma";
    j["n"] = sigma.sig().n;
    j["e"] = sigma.sig().e;
    j["C"] = json::array();
    for (int a = 0; a < sigma.sig().n; ++a) {
        json row = json::array();
        for (int b = 0; b < sigma.sig().n; ++b) row.push_back(complex_json(sigma.C()(a, b)));
        j["C"].push_back(std::move(row));
    }
    j["a"] = json::array();
    for (const auto& c : sigma.a()) j["a"].push_back(complex_json(c));
    j["rho"] = rational_json(sigma.rho());
    j["r"] = rational_json(sigma.r());
    return j.dump(2) + "\n";
}

} // namespace cm
