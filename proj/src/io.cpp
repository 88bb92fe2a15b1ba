#include "ilab/io.hpp"

#include <fstream>
#include <sstream>

#include "ilab/error.hpp"

namespace ilab {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError("scene" + where + ": " + what);
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) fail(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
    return *it;
}

Rational parse_rational_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) {
        return j.is_number_unsigned() ? Rational(Integer(std::to_string(j.get<unsigned long long>())))
                                      : Rational(Integer(std::to_string(j.get<long long>())));
    }
    if (!j.is_string()) fail(where, "expected a rational string or an integer");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
        fail(where, e.what());
    }
}

Vec3 parse_vec(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 3) fail(where, "expected an array of 3 rationals");
    Vec3 v;
    for (std::size_t i = 0; i < 3; ++i) v[i] = parse_rational_json(j[i], where + "/" + std::to_string(i));
    return v;
}

const Json& array_field(const Json& root, const char* key) {
    static const Json empty = Json::array();
    auto it = root.find(key);
    if (it == root.end()) return empty;
    if (!it->is_array()) fail(std::string("/") + key, "expected an array");
    return *it;
}

Json vec_json(const Vec3& v) { return Json::array({to_json(v[0]), to_json(v[1]), to_json(v[2])}); }

template <typename T>
Json index_list(const std::vector<T>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x);
    return out;
}

}  // namespace

Scene parse_scene(const std::string& text) {
    Json root;
    try {
        root = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("scene: malformed JSON: ") + e.what());
    }
    if (!root.is_object()) fail("", "top level must be an object");
    Scene s;
    const auto& lines = array_field(root, "lines");
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string where = "/lines/" + std::to_string(i);
        const Vec3 p = parse_vec(field(lines[i], "p", where), where + "/p");
        const Vec3 q = parse_vec(field(lines[i], "q", where), where + "/q");
        if (p == q) fail(where, "anchor points coincide");
        s.lines.emplace_back(p, q);
    }
    const auto& circles = array_field(root, "circles");
    for (std::size_t i = 0; i < circles.size(); ++i) {
        const std::string where = "/circles/" + std::to_string(i);
        const auto& c = circles[i];
        const Vec3 n = parse_vec(field(c, "normal", where), where + "/normal");
        const Rational off = parse_rational_json(field(c, "offset", where), where + "/offset");
        const Vec3 center = parse_vec(field(c, "center", where), where + "/center");
        const Rational r2 = parse_rational_json(field(c, "r2", where), where + "/r2");
        try {
            s.circles.emplace_back(n, off, center, r2);
        } catch (const ContractError& e) {
            fail(where, e.what());
        }
    }
    return s;
}

Scene read_scene_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open scene file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scene(buf.str());
}

Json scene_to_json(const Scene& s) {
    Json lines = Json::array(), circles = Json::array();
    for (const auto& l : s.lines) lines.push_back({{"p", vec_json(l.p())}, {"q", vec_json(l.q())}});
    for (const auto& c : s.circles) {
        circles.push_back({{"normal", vec_json(c.normal())},
                           {"offset", to_json(c.offset())},
                           {"center", vec_json(c.center())},
                           {"r2", to_json(c.r2())}});
    }
    return {{"lines", lines}, {"circles", circles}};
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const QuadExt& x) { return {{"a", to_json(x.a())}, {"b", to_json(x.b())}, {"d", x.d().get_str()}}; }

Json to_json(const Point3& p) { return Json::array({to_json(p.coords[0]), to_json(p.coords[1]), to_json(p.coords[2])}); }

Json to_json(const MultiPoly& poly) {
    Json terms = Json::array();
    for (const auto& [e, c] : poly.terms()) terms.push_back({{"exp", {e[0], e[1], e[2]}}, {"coeff", to_json(c)}});
    return {{"degree", poly.degree()}, {"text", poly.to_string()}, {"terms", terms}};
}

Json to_json(const IncidenceReport& rep) {
    Json points = Json::array();
    for (const auto& ip : rep.points) {
        points.push_back({{"point", to_json(ip.point)}, {"lines", index_list(ip.lines)}, {"circles", index_list(ip.circles)}});
    }
    return {{"lines", rep.line_counts.size()},
            {"circles", rep.circle_counts.size()},
            {"totalPoints", rep.total_points()},
            {"lineCounts", index_list(rep.line_counts)},
            {"circleCounts", index_list(rep.circle_counts)},
            {"points", points}};
}

Json to_json(const SurfaceFit& fit) {
    return {{"degree", fit.degree}, {"kernelDim", fit.kernel_dim}, {"surface", to_json(fit.surface)}};
}

Json to_json(const CoverResult& res) {
    Json factors = Json::array(), rounds = Json::array();
    for (const auto& f : res.factors) factors.push_back(to_json(f));
    for (const auto& r : res.round_info) {
        rounds.push_back({{"residualLines", r.residual_lines},
                          {"residualCircles", r.residual_circles},
                          {"D", r.D},
                          {"p", to_json(r.p)},
                          {"sampled", r.sampled_lines ? "lines" : "circles"},
                          {"sampleSize", r.sample_size},
                          {"retries", r.retries},
                          {"degree", r.degree},
                          {"absorbed", r.absorbed}});
    }
    return {{"seed", res.seed},
            {"rounds", res.rounds},
            {"totalDegree", res.total_degree},
            {"degreeBudget", to_json(res.degree_budget)},
            {"withinBudget", Rational(res.total_degree) <= res.degree_budget},
            {"assignment", index_list(res.assignment)},
            {"factors", factors},
            {"roundInfo", rounds}};
}

Json to_json(const std::vector<StructuredFamily>& families) {
    Json out = Json::array();
    for (const auto& f : families) {
        out.push_back({{"kind", std::string(to_string(f.kind))},
                       {"memberCount", f.members.size()},
                       {"members", index_list(f.members)},
                       {"surface", to_json(f.surface)}});
    }
    return out;
}

Json to_json(const BoundReport& rep) {
    std::ostringstream ratio;
    ratio.precision(12);
    ratio << rep.growth_ratio;
    return {{"lines", rep.lines},
            {"circles", rep.circles},
            {"A", to_json(rep.A)},
            {"points", rep.points},
            {"rhs", to_json(rep.rhs)},
            {"boundHolds", rep.bound_holds},
            {"growthRatio", ratio.str()},
            {"regimeHolds", rep.regime_holds},
            {"detectThreshold", rep.detect_threshold},
            {"largestFamily", rep.largest_family},
            {"familyReachesA", rep.family_reaches_A}};
}

Json to_json(const QuarticReport& rep) {
    auto rats = [](const std::vector<Rational>& v) {
        Json out = Json::array();
        for (const auto& x : v) out.push_back(to_json(x));
        return out;
    };
    auto pairs = [](const std::vector<std::pair<Rational, Rational>>& v) {
        Json out = Json::array();
        for (const auto& [t, s] : v) out.push_back({{"t", to_json(t)}, {"s", to_json(s)}});
        return out;
    };
    return {{"ok", rep.ok()},
            {"tValues", rats(rep.t_values)},
            {"sValues", rats(rep.s_values)},
            {"pointsChecked", rep.points_checked},
            {"verifiedIntersections", rep.verified_intersections},
            {"distinctPoints", rep.distinct_points},
            {"surfaceFailures", pairs(rep.surface_failures)},
            {"lineFailures", rats(rep.line_failures)},
            {"circleFailures", rats(rep.circle_failures)},
            {"degenerateCircles", rats(rep.degenerate_circles)},
            {"incidenceFailures", pairs(rep.incidence_failures)}};
}

Json to_json(const PruneResult& res) {
    return {{"keptLines", index_list(res.kept_lines)}, {"keptCircles", index_list(res.kept_circles)}};
}

std::string incidences_csv(const IncidenceReport& rep) {
    std::ostringstream out;
    out << "x,y,z,lines,circles\n";
    auto join = [](const std::vector<std::size_t>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + std::to_string(v[i]);
        return s;
    };
    for (const auto& ip : rep.points) {
        for (const auto& c : ip.point.coords) out << c.to_string() << ',';
        out << join(ip.lines) << ',' << join(ip.circles) << '\n';
    }
    return out.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ilab
