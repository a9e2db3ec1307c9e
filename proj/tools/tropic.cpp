// tropic: command-line front end. JSON on stdout; exit 0 ok, 1 domain error, 2 usage error.

#include "tropic/tropic.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace tropic;
using json_io::Json;
namespace jio = tropic::json_io;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::vector<std::string> expr;
    std::string input;
    std::string at;
    int degree = 0;
    std::optional<std::uint64_t> seed;
    std::size_t trials = 0;
    bool welschinger = false;
    int dmax = 0;
    std::string out;
};

Json read_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return jio::parse_text(ss.str());
}

std::vector<TropicalPolynomial> polynomials(const Options& o, std::size_t want) {
    std::vector<TropicalPolynomial> out;
    for (const auto& e : o.expr) out.push_back(parse(e));
    if (out.empty() && !o.input.empty()) {
        Json j = read_input(o.input);
        if (j.is_array())
            for (const auto& p : j) out.push_back(jio::read_polynomial(p));
        else
            out.push_back(jio::read_polynomial(j));
    }
    if (out.size() != want)
        throw UsageError("expected " + std::to_string(want) + " polynomial(s) via --expr or --input");
    return out;
}

// A curve from --expr, or from --input holding a curve or polynomial.
PlaneTropicalCurve one_curve(const Options& o) {
    if (o.expr.empty() && !o.input.empty()) {
        Json j = read_input(o.input);
        if (j.contains("vertices")) return jio::read_curve(j);
        return corner_locus(jio::read_polynomial(j)).curve;
    }
    return corner_locus(polynomials(o, 1)[0]).curve;
}

std::pair<PlaneTropicalCurve, PlaneTropicalCurve> two_curves(const Options& o) {
    if (o.expr.empty() && !o.input.empty()) {
        Json j = read_input(o.input);
        if (!j.is_array() || j.size() != 2) throw UsageError("--input must hold an array of two curves or polynomials");
        auto get = [](const Json& x) { return x.contains("vertices") ? jio::read_curve(x) : corner_locus(jio::read_polynomial(x)).curve; };
        return {get(j[0]), get(j[1])};
    }
    auto ps = polynomials(o, 2);
    return {corner_locus(ps[0]).curve, corner_locus(ps[1]).curve};
}

PointQ2 parse_at(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw UsageError("--at expects x,y");
    return {Rational::parse(s.substr(0, comma)), Rational::parse(s.substr(comma + 1))};
}

Json intersections(const std::vector<IntersectionPoint>& pts) {
    return {{"points", jio::write(pts)}, {"total", total_multiplicity(pts)}};
}

Json run(const std::string& cmd, const Options& o) {
    if (cmd == "parse") {
        auto g = polynomials(o, 1)[0];
        Json out = jio::write(g);
        out["text"] = format(g);
        return out;
    }
    if (cmd == "eval") {
        if (o.at.empty()) throw UsageError("eval needs --at x,y");
        return jio::write(eval(polynomials(o, 1)[0], parse_at(o.at)));
    }
    if (cmd == "curve") return jio::write(one_curve(o));
    if (cmd == "subdivision") return jio::write(corner_locus(polynomials(o, 1)[0]).subdivision);
    if (cmd == "regular") {
        if (o.degree > 0) {
            Json types = Json::array();
            for (const auto& s : enumerate_smooth_types(o.degree)) types.push_back(jio::write(s));
            return {{"degree", o.degree}, {"count", types.size()}, {"types", types}};
        }
        NewtonSubdivision s;
        if (!o.input.empty()) s = jio::read_subdivision(read_input(o.input));
        else s = corner_locus(polynomials(o, 1)[0]).subdivision;
        auto r = is_regular(s);
        Json lift = nullptr;
        if (r.lift) {
            lift = Json::array();
            for (const auto& [p, h] : *r.lift) lift.push_back({{"i", p.x}, {"j", p.y}, {"h", jio::write(h)}});
        }
        return {{"regular", r.regular}, {"lift", lift}, {"equalities", r.equalities}, {"strict_inequalities", r.strict_inequalities}};
    }
    if (cmd == "intersect") {
        auto [a, b] = two_curves(o);
        return intersections(transverse_intersections(a, b));
    }
    if (cmd == "stable") {
        auto [a, b] = two_curves(o);
        return intersections(stable_intersection(a, b));
    }
    if (cmd == "union") {
        auto [a, b] = two_curves(o);
        return jio::write(curve_union(a, b));
    }
    if (cmd == "genus") {
        auto c = one_curve(o);
        auto d = degree(c);
        Json out{{"genus", genus(c)}, {"degree", d ? Json(*d) : Json(nullptr)}};
        if (d) out["bound"] = (*d - 1) * (*d - 2) / 2;
        return out;
    }
    if (cmd == "smooth") {
        if (!o.expr.empty() || o.input.empty()) {
            auto cl = corner_locus(polynomials(o, 1)[0]);
            return {{"smooth", is_smooth(cl.curve, cl.certificate)}};
        }
        return {{"smooth", is_smooth_graph(one_curve(o))}};
    }
    if (cmd == "decompose") {
        PlaneTropicalCurve c;
        if (o.expr.size() == 2) {
            auto [a, b] = two_curves(o);
            c = curve_union(a, b);
        } else {
            c = one_curve(o);
        }
        auto parts = decompose_transverse_union(c);
        if (!parts) return {{"parts", nullptr}};
        return {{"parts", Json::array({jio::write(parts->first), jio::write(parts->second)})}};
    }
    if (cmd == "count") {
        if (o.degree < 1) throw UsageError("count needs --degree");
        if (!o.seed) throw UsageError("count needs --seed");
        if (o.trials > 0) {
            auto rep = invariance_harness(o.degree, o.trials, *o.seed);
            Json runs = Json::array();
            for (const auto& r : rep.runs) {
                Json x{{"seed", *r.seed}, {"N_complex", r.n_complex.get_str()}};
                if (o.welschinger) x["N_welschinger"] = r.n_welschinger.get_str();
                runs.push_back(x);
            }
            Json out{{"degree", o.degree}, {"seed", *o.seed}, {"trials", o.trials}, {"rejected", rep.rejected},
                     {"complex_invariant", rep.complex_invariant}};
            if (o.welschinger) out["welschinger_invariant"] = rep.welschinger_invariant;
            out["runs"] = runs;
            return out;
        }
        auto r = count_seeded(o.degree, *o.seed);
        Json out = jio::write(r);
        if (!o.welschinger) {
            out.erase("N_welschinger");
            for (auto& c : out["curves"]) c.erase("welschinger");
        }
        return out;
    }
    if (cmd == "kontsevich") {
        if (o.dmax < 1) throw UsageError("kontsevich needs --dmax");
        return jio::write(kontsevich(o.dmax));
    }
    if (cmd == "cubic-add") {
        if (o.input.empty()) throw UsageError("cubic-add needs --input with base, p and q");
        Json j = read_input(o.input);
        PlaneTropicalCurve c;
        if (!o.expr.empty()) c = corner_locus(parse(o.expr.at(0))).curve;
        else if (j.contains("curve")) c = jio::read_curve(j.at("curve"));
        else c = corner_locus(jio::read_polynomial(jio::detail::field(j, "polynomial"))).curve;
        LoopPoint base = j.contains("base") ? jio::read_loop_point(j.at("base")) : LoopPoint{};
        CubicContext ctx(c, base);
        auto p = jio::read_loop_point(jio::detail::field(j, "p"));
        auto q = jio::read_loop_point(jio::detail::field(j, "q"));
        auto s = ctx.add(p, q);
        return {{"sum", jio::write(s)},
                {"point", jio::write(ctx.point(s))},
                {"position", jio::write(ctx.position(s))},
                {"loop_length", jio::write(ctx.loop().total_length())}};
    }
    if (cmd == "render") {
        if (o.out.empty()) throw UsageError("render needs --out FILE.svg");
        std::string svg;
        if (o.expr.empty() && !o.input.empty()) {
            Json j = read_input(o.input);
            if (j.contains("cells")) svg = render_svg(jio::read_subdivision(j));
            else if (j.contains("vertices")) svg = render_svg(jio::read_curve(j));
            else svg = render_svg(corner_locus(jio::read_polynomial(j)).curve);
        } else {
            svg = render_svg(one_curve(o));
        }
        std::ofstream f(o.out);
        if (!f) throw DomainError("cannot write " + o.out);
        f << svg;
        return {{"svg", o.out}, {"bytes", svg.size()}};
    }
    if (cmd == "kapranov") {
        if (o.input.empty()) throw UsageError("kapranov needs --input with polynomial and point");
        Json j = read_input(o.input);
        auto f = jio::read_puiseux_polynomial(jio::detail::field(j, "polynomial"));
        const Json& pt = jio::detail::field(j, "point");
        if (!pt.is_array() || pt.size() != 2) throw jio::FormatError("point must be two series");
        auto r = kapranov_check(f, {jio::read_series(pt[0]), jio::read_series(pt[1])});
        const char* status = r.root == RootStatus::Root ? "root" : r.root == RootStatus::NotRoot ? "not_root" : "undecidable";
        return {{"root", status},
                {"min_attained_twice", r.min_attained_twice},
                {"image_on_corner_locus", r.image_on_corner_locus},
                {"min_valuation", jio::write(r.min_valuation)},
                {"image", jio::write(r.image)},
                {"tropicalization", jio::write(tropicalize(f))}};
    }
    throw UsageError("unknown subcommand " + cmd);
}

void emit_error(const std::string& msg) { std::cout << Json{{"error", msg}}.dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Plane tropical curves toolkit"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::string> names{"parse", "eval", "curve", "subdivision", "regular", "intersect", "stable", "union",
                                         "genus", "smooth", "decompose", "count", "kontsevich", "cubic-add", "render", "kapranov"};
    for (const auto& n : names) {
        auto* sub = app.add_subcommand(n);
        sub->add_option("--expr", o.expr, "tropical polynomial; repeat for two-curve commands");
        sub->add_option("--input", o.input, "JSON input file");
        sub->add_option("--at", o.at, "evaluation point x,y");
        sub->add_option("--degree", o.degree, "degree");
        sub->add_option("--seed", o.seed, "random seed");
        sub->add_option("--trials", o.trials, "invariance trials");
        sub->add_flag("--welschinger", o.welschinger, "report Welschinger signs");
        sub->add_option("--dmax", o.dmax, "largest degree");
        sub->add_option("--out", o.out, "SVG output file");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error(e.what());
        return 2;
    }
    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        std::cout << run(cmd, o).dump() << "\n";
        return 0;
    } catch (const UsageError& e) {
        emit_error(e.what());
        return 2;
    } catch (const std::exception& e) {
        emit_error(e.what());
        return 1;
    }
}
