#pragma once

// JSON readers and writers. Rationals are strings "p" or "p/q".

#include "tropic/cubic_group.hpp"
#include "tropic/enumeration.hpp"
#include "tropic/intersection.hpp"
#include "tropic/puiseux.hpp"
#include "tropic/recursion.hpp"
#include "tropic/subdivision.hpp"

#include "json.hpp"

#include <string>

namespace tropic::json_io {

using Json = nlohmann::ordered_json;

struct FormatError : DomainError {
    using DomainError::DomainError;
};

namespace detail {

inline const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
    return j.at(key);
}

inline std::int64_t integer(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw FormatError(std::string("expected an integer for ") + what);
    return j.get<std::int64_t>();
}

inline const Json& array(const Json& j, const char* what) {
    if (!j.is_array()) throw FormatError(std::string("expected an array for ") + what);
    return j;
}

}  // namespace detail

inline Json write(const Rational& q) { return q.str(); }

inline Rational read_rational(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<std::int64_t>()));
    throw FormatError("expected a rational string");
}

inline Json write(const PointQ2& p) { return Json::array({write(p.x), write(p.y)}); }

inline PointQ2 read_point(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw FormatError("expected a point [x, y]");
    return {read_rational(j[0]), read_rational(j[1])};
}

inline Json write(IntVec2 v) { return Json::array({v.x, v.y}); }

inline IntVec2 read_vec(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw FormatError("expected an integer vector [x, y]");
    return {detail::integer(j[0], "vector"), detail::integer(j[1], "vector")};
}

inline Json write(const TropicalPolynomial& g) {
    Json terms = Json::array();
    for (const auto& [e, c] : g.terms()) terms.push_back({{"i", e.i}, {"j", e.j}, {"c", write(c)}});
    return {{"terms", terms}};
}

inline TropicalPolynomial read_polynomial(const Json& j) {
    TropicalPolynomial::TermMap t;
    for (const auto& term : detail::array(detail::field(j, "terms"), "terms")) {
        Exponent e{static_cast<int>(detail::integer(detail::field(term, "i"), "i")),
                   static_cast<int>(detail::integer(detail::field(term, "j"), "j"))};
        Rational c = read_rational(detail::field(term, "c"));
        auto [it, inserted] = t.emplace(e, c);
        if (!inserted && it->second < c) it->second = c;
    }
    return TropicalPolynomial(std::move(t));
}

inline Json write(const PuiseuxSeries& s) {
    Json terms = Json::array();
    for (const auto& [q, c] : s.terms()) terms.push_back({{"q", write(q)}, {"c", write(c)}});
    Json out{{"terms", terms}};
    if (s.truncation()) out["trunc"] = write(*s.truncation());
    return out;
}

inline PuiseuxSeries read_series(const Json& j) {
    std::vector<PuiseuxSeries::Term> terms;
    for (const auto& t : detail::array(detail::field(j, "terms"), "terms"))
        terms.emplace_back(read_rational(detail::field(t, "q")), read_rational(detail::field(t, "c")));
    std::optional<Rational> trunc;
    if (j.contains("trunc") && !j.at("trunc").is_null()) trunc = read_rational(j.at("trunc"));
    return PuiseuxSeries(std::move(terms), trunc);
}

inline Json write(const PuiseuxPolynomial& f) {
    Json terms = Json::array();
    for (const auto& [e, a] : f.terms()) terms.push_back({{"i", e.i}, {"j", e.j}, {"series", write(a)}});
    return {{"terms", terms}};
}

inline PuiseuxPolynomial read_puiseux_polynomial(const Json& j) {
    PuiseuxPolynomial::TermMap t;
    for (const auto& term : detail::array(detail::field(j, "terms"), "terms")) {
        Exponent e{static_cast<int>(detail::integer(detail::field(term, "i"), "i")),
                   static_cast<int>(detail::integer(detail::field(term, "j"), "j"))};
        PuiseuxSeries a = read_series(detail::field(term, "series"));
        auto it = t.find(e);
        if (it == t.end()) t.emplace(e, std::move(a));
        else it->second = it->second + a;
    }
    return PuiseuxPolynomial(std::move(t));
}

inline Json write(const PlaneTropicalCurve& c) {
    Json vs = Json::array(), es = Json::array(), rs = Json::array(), ls = Json::array();
    for (const auto& v : c.vertices) vs.push_back(write(v));
    for (const auto& e : c.edges) es.push_back({{"from", e.from}, {"to", e.to}, {"w", e.weight}});
    for (const auto& r : c.rays) rs.push_back({{"base", r.base}, {"dir", write(r.dir)}, {"w", r.weight}});
    for (const auto& l : c.lines) ls.push_back({{"base", write(l.base)}, {"dir", write(l.dir)}, {"w", l.weight}});
    return {{"vertices", vs}, {"edges", es}, {"rays", rs}, {"lines", ls}};
}

inline PlaneTropicalCurve read_curve(const Json& j) {
    PlaneTropicalCurve c;
    for (const auto& v : detail::array(detail::field(j, "vertices"), "vertices")) c.vertices.push_back(read_point(v));
    auto index = [&](const Json& x) {
        std::int64_t k = detail::integer(x, "vertex index");
        if (k < 0 || static_cast<std::size_t>(k) >= c.vertices.size()) throw FormatError("vertex index out of range");
        return static_cast<std::size_t>(k);
    };
    auto weight = [](const Json& x) {
        std::int64_t w = detail::integer(x, "weight");
        if (w < 1) throw FormatError("weights must be positive");
        return w;
    };
    auto primitive_dir = [](const Json& x) {
        IntVec2 u = read_vec(x);
        if (u.is_zero() || lattice_length(u) != 1) throw FormatError("directions must be primitive");
        return u;
    };
    if (j.contains("edges"))
        for (const auto& e : detail::array(j.at("edges"), "edges")) {
            BoundedEdge be{index(detail::field(e, "from")), index(detail::field(e, "to")), weight(detail::field(e, "w"))};
            if (c.vertices[be.from] == c.vertices[be.to]) throw FormatError("edge of zero length");
            c.edges.push_back(be);
        }
    if (j.contains("rays"))
        for (const auto& r : detail::array(j.at("rays"), "rays"))
            c.rays.push_back({index(detail::field(r, "base")), primitive_dir(detail::field(r, "dir")), weight(detail::field(r, "w"))});
    if (j.contains("lines"))
        for (const auto& l : detail::array(j.at("lines"), "lines"))
            c.lines.push_back(canonical_line(read_point(detail::field(l, "base")), primitive_dir(detail::field(l, "dir")),
                                             weight(detail::field(l, "w"))));
    return c;
}

inline Json write(const NewtonSubdivision& s) {
    auto pts = [](const std::vector<IntVec2>& v) {
        Json a = Json::array();
        for (IntVec2 p : v) a.push_back(write(p));
        return a;
    };
    Json cells = Json::array();
    for (const auto& c : s.cells) cells.push_back(pts(c));
    Json out{{"polygon", pts(s.polygon)}, {"cells", cells}};
    if (s.heights) {
        Json h = Json::array();
        for (const auto& [p, c] : *s.heights) h.push_back({{"i", p.x}, {"j", p.y}, {"h", write(c)}});
        out["heights"] = h;
    }
    return out;
}

inline NewtonSubdivision read_subdivision(const Json& j) {
    auto pts = [](const Json& a) {
        std::vector<IntVec2> v;
        for (const auto& p : detail::array(a, "point list")) v.push_back(read_vec(p));
        return v;
    };
    NewtonSubdivision s;
    s.polygon = pts(detail::field(j, "polygon"));
    for (const auto& c : detail::array(detail::field(j, "cells"), "cells")) s.cells.push_back(pts(c));
    if (j.contains("heights") && !j.at("heights").is_null()) {
        std::map<IntVec2, Rational> h;
        for (const auto& e : detail::array(j.at("heights"), "heights"))
            h[{detail::integer(detail::field(e, "i"), "i"), detail::integer(detail::field(e, "j"), "j")}] =
                read_rational(detail::field(e, "h"));
        s.heights = std::move(h);
    }
    return s;
}

inline Json write(const std::vector<IntersectionPoint>& pts) {
    Json out = Json::array();
    for (const auto& p : pts) out.push_back({{"pt", write(p.location)}, {"mult", p.multiplicity}});
    return out;
}

inline std::vector<IntersectionPoint> read_intersections(const Json& j) {
    std::vector<IntersectionPoint> out;
    for (const auto& p : detail::array(j, "intersections")) {
        IntersectionPoint ip;
        ip.location = read_point(detail::field(p, "pt"));
        ip.multiplicity = detail::integer(detail::field(p, "mult"), "mult");
        out.push_back(ip);
    }
    return out;
}

inline Json write(const RecursionTable& t) {
    Json out = Json::object();
    for (const auto& [d, n] : t) out[std::to_string(d)] = n.get_str();
    return out;
}

inline RecursionTable read_recursion_table(const Json& j) {
    if (!j.is_object()) throw FormatError("expected an object");
    RecursionTable t;
    for (const auto& [k, v] : j.items()) {
        if (!v.is_string()) throw FormatError("expected integer strings");
        t[std::stoi(k)] = BigInt(v.get<std::string>());
    }
    return t;
}

inline Json write(const LoopPoint& p) { return {{"edge", p.edge}, {"t", write(p.t)}}; }

inline LoopPoint read_loop_point(const Json& j) {
    std::int64_t e = detail::integer(detail::field(j, "edge"), "edge");
    if (e < 0) throw FormatError("negative loop edge");
    return {static_cast<std::size_t>(e), read_rational(detail::field(j, "t"))};
}

inline Json write(const CountResult& r) {
    Json curves = Json::array();
    for (const auto& c : r.curves)
        curves.push_back({{"curve", write(c.curve)}, {"complex_mult", c.complex_mult}, {"welschinger", c.welschinger}});
    Json pts = Json::array();
    for (const auto& p : r.points) pts.push_back(write(p));
    Json out{{"degree", r.degree}};
    out["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
    out["points"] = pts;
    out["N_complex"] = r.n_complex.get_str();
    out["N_welschinger"] = r.n_welschinger.get_str();
    out["curves"] = curves;
    out["diagnostics"] = {{"trees", r.trees},
                          {"systems_examined", r.systems_examined},
                          {"assignments_pruned", r.assignments_pruned},
                          {"identity_checks", r.identity_checks}};
    return out;
}

inline Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace tropic::json_io
