#include "hypersplit/io_formats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <utility>

#include "json.hpp"

#include "hypersplit/errors.hpp"
#include "hypersplit/rational.hpp"

namespace hypersplit {

namespace {

using nlohmann::json;

// ── Parsing helpers ─────────────────────────────────────────────────

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
}

void reject_floats(const json& j) {
    if (j.is_number_float()) {
        throw ParseError("floating-point literals are not accepted; write rationals as strings");
    }
    if (j.is_array() || j.is_object()) {
        for (const auto& child : j) reject_floats(child);
    }
}

void allow_keys(const json& obj, std::initializer_list<const char*> keys) {
    for (const auto& item : obj.items()) {
        if (std::find_if(keys.begin(), keys.end(), [&](const char* k) {
                return item.key() == k;
            }) == keys.end()) {
            throw ValidationError("unexpected field '" + item.key() + "'");
        }
    }
}

const json& field(const json& obj, const char* key) {
    if (!obj.is_object()) {
        throw ValidationError(std::string("expected an object carrying field '") + key + "'");
    }
    const auto it = obj.find(key);
    if (it == obj.end()) throw ValidationError(std::string("missing field '") + key + "'");
    return *it;
}

std::int64_t int_field(const json& obj, const char* key) {
    const json& j = field(obj, key);
    if (!j.is_number_integer()) {
        throw ValidationError(std::string("field '") + key + "' must be an integer");
    }
    return j.get<std::int64_t>();
}

int index_field(const json& obj, const char* key) {
    const std::int64_t v = int_field(obj, key);
    if (v < -2147483648LL || v > 2147483647LL) {
        throw ValidationError(std::string("field '") + key + "' is out of range");
    }
    return static_cast<int>(v);
}

std::string string_field(const json& obj, const char* key) {
    const json& j = field(obj, key);
    if (!j.is_string()) {
        throw ValidationError(std::string("field '") + key + "' must be a string");
    }
    return j.get<std::string>();
}

bool bool_field(const json& obj, const char* key) {
    const json& j = field(obj, key);
    if (!j.is_boolean()) {
        throw ValidationError(std::string("field '") + key + "' must be a boolean");
    }
    return j.get<bool>();
}

const json& array_field(const json& obj, const char* key) {
    const json& j = field(obj, key);
    if (!j.is_array()) {
        throw ValidationError(std::string("field '") + key + "' must be an array");
    }
    return j;
}

std::vector<int> index_array(const json& arr, const char* what) {
    std::vector<int> out;
    out.reserve(arr.size());
    for (const json& j : arr) {
        if (!j.is_number_integer()) {
            throw ValidationError(std::string(what) + " must contain integers");
        }
        const std::int64_t v = j.get<std::int64_t>();
        if (v < -2147483648LL || v > 2147483647LL) {
            throw ValidationError(std::string(what) + " contains an out-of-range index");
        }
        out.push_back(static_cast<int>(v));
    }
    return out;
}

Rat rational_field(const json& j, const char* what) {
    if (!j.is_string()) {
        throw ValidationError(std::string(what) + " must be a rational string");
    }
    return parse_rational(j.get<std::string>());
}

std::vector<std::vector<int>> edges_field(const json& obj) {
    const json& arr = array_field(obj, "edges");
    std::vector<std::vector<int>> edges;
    edges.reserve(arr.size());
    for (const json& e : arr) {
        if (!e.is_array()) throw ValidationError("field 'edges' must contain index arrays");
        edges.push_back(index_array(e, "an edge"));
    }
    return edges;
}

// ── Instance parsing ────────────────────────────────────────────────

PointConfig parse_geometric(const json& j) {
    allow_keys(j, {"dim", "groups", "points"});
    const int dim = index_field(j, "dim");

    std::vector<std::vector<Rat>> points;
    for (const json& row : array_field(j, "points")) {
        if (!row.is_array()) throw ValidationError("field 'points' must contain arrays");
        std::vector<Rat> p;
        p.reserve(row.size());
        for (const json& c : row) p.push_back(rational_field(c, "a coordinate"));
        points.push_back(std::move(p));
    }

    std::vector<PointGroup> groups;
    for (const json& g : array_field(j, "groups")) {
        if (!g.is_object()) throw ValidationError("field 'groups' must contain objects");
        allow_keys(g, {"members", "mu", "name"});
        groups.push_back(PointGroup{string_field(g, "name"),
                                    index_array(array_field(g, "members"), "field 'members'"),
                                    int_field(g, "mu")});
    }
    return make_point_config(dim, std::move(points), std::move(groups));
}

std::vector<std::pair<std::vector<int>, std::int64_t>> ground_sets_field(const json& j,
                                                                         const char* value_key) {
    std::vector<std::pair<std::vector<int>, std::int64_t>> out;
    for (const json& g : array_field(j, "ground_sets")) {
        if (!g.is_object()) throw ValidationError("field 'ground_sets' must contain objects");
        allow_keys(g, {"members", value_key});
        out.emplace_back(index_array(array_field(g, "members"), "field 'members'"),
                         int_field(g, value_key));
    }
    return out;
}

ParsedInstance parse_abstract(const json& j) {
    const std::string kind = string_field(j, "kind");
    if (kind == "pcms") {
        allow_keys(j, {"edges", "ground_sets", "kind", "universe_size"});
        return make_pcms(index_field(j, "universe_size"), edges_field(j),
                         ground_sets_field(j, "demand"));
    }
    if (kind == "rmc") {
        allow_keys(j, {"edges", "ground_sets", "kind", "universe_size"});
        return make_rmc(index_field(j, "universe_size"), edges_field(j),
                        ground_sets_field(j, "target"));
    }
    if (kind == "ptd") {
        allow_keys(j, {"demands", "edges", "kind", "universe_size"});
        std::vector<std::int64_t> demands;
        for (const json& d : array_field(j, "demands")) {
            if (!d.is_number_integer()) {
                throw ValidationError("field 'demands' must contain integers");
            }
            demands.push_back(d.get<std::int64_t>());
        }
        return make_ptd(make_set_system(index_field(j, "universe_size"), edges_field(j)),
                        std::move(demands));
    }
    throw ValidationError("unknown kind '" + kind + "'");
}

// ── Emission helpers ────────────────────────────────────────────────

json rational_json(const Rat& r) { return format_rational(r); }

json edges_json(const std::vector<Bitset>& edges) {
    json arr = json::array();
    for (const Bitset& e : edges) arr.push_back(e.members());
    return arr;
}

json instance_json(const PointConfig& config) {
    json j;
    j["dim"] = config.dim;
    json points = json::array();
    for (const auto& p : config.points) {
        json row = json::array();
        for (const Rat& c : p) row.push_back(rational_json(c));
        points.push_back(std::move(row));
    }
    j["points"] = std::move(points);
    json groups = json::array();
    for (const PointGroup& g : config.groups) {
        json gj;
        gj["members"] = g.members;
        gj["mu"] = g.target;
        gj["name"] = g.name;
        groups.push_back(std::move(gj));
    }
    j["groups"] = std::move(groups);
    return j;
}

json instance_json(const PCMSInstance& inst) {
    json j;
    j["kind"] = "pcms";
    j["universe_size"] = inst.universe_size;
    j["edges"] = edges_json(inst.edges);
    json groups = json::array();
    for (const PcmsGroundSet& g : inst.ground_sets) {
        json gj;
        gj["demand"] = g.demand;
        gj["members"] = g.members;
        groups.push_back(std::move(gj));
    }
    j["ground_sets"] = std::move(groups);
    return j;
}

json instance_json(const PTDInstance& inst) {
    json j;
    j["kind"] = "ptd";
    j["universe_size"] = inst.system.ground_size;
    j["edges"] = edges_json(inst.system.edges);
    j["demands"] = inst.demands;
    return j;
}

json instance_json(const RMCInstance& inst) {
    json j;
    j["kind"] = "rmc";
    j["universe_size"] = inst.universe_size;
    j["edges"] = edges_json(inst.edges);
    json groups = json::array();
    for (const RmcGroundSet& g : inst.ground_sets) {
        json gj;
        gj["members"] = g.members;
        gj["target"] = g.target;
        groups.push_back(std::move(gj));
    }
    j["ground_sets"] = std::move(groups);
    return j;
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

// ── SVG helpers ─────────────────────────────────────────────────────

std::string fixed2(double v) {
    double r = std::round(v * 100.0) / 100.0;
    if (r == 0.0) r = 0.0;  // drop the sign of negative zero
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", r);
    return buf;
}

// Both intersection points of the line normal[0] x + normal[1] y = offset
// with the rectangle boundary, or nothing when the line misses it.
std::vector<std::pair<Rat, Rat>> clip_line(const Hyperplane& h, const Rat& x0, const Rat& x1,
                                           const Rat& y0, const Rat& y1) {
    std::vector<std::pair<Rat, Rat>> hits;
    const Rat& a = h.normal[0];
    const Rat& b = h.normal[1];
    if (sgn(b) != 0) {
        for (const Rat& x : {x0, x1}) {
            const Rat y((h.offset - a * x) / b);
            if (y0 <= y && y <= y1) hits.emplace_back(x, y);
        }
    }
    if (sgn(a) != 0) {
        for (const Rat& y : {y0, y1}) {
            const Rat x((h.offset - b * y) / a);
            if (x0 <= x && x <= x1) hits.emplace_back(x, y);
        }
    }
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    if (hits.size() < 2) return {};
    return {hits.front(), hits.back()};
}

}  // namespace

// ── Public API ──────────────────────────────────────────────────────

ParsedInstance parse_instance(const std::string& text) {
    const json j = parse_json(text);
    reject_floats(j);
    if (!j.is_object()) throw ValidationError("an instance file must be a single object");
    if (j.contains("kind")) return parse_abstract(j);
    return parse_geometric(j);
}

SolutionFile parse_solution(const std::string& text) {
    const json j = parse_json(text);
    reject_floats(j);
    if (!j.is_object()) throw ValidationError("a solution file must be a single object");
    allow_keys(j, {"chosen_edges", "feasible", "final_value", "hyperplanes", "shortfalls",
                   "trace", "violations"});

    SolutionFile out;
    out.chosen_edges = index_array(array_field(j, "chosen_edges"), "field 'chosen_edges'");
    out.feasible = bool_field(j, "feasible");
    out.final_value = int_field(j, "final_value");
    for (const json& h : array_field(j, "hyperplanes")) {
        if (!h.is_object()) throw ValidationError("field 'hyperplanes' must contain objects");
        allow_keys(h, {"a", "b"});
        Hyperplane plane;
        for (const json& c : array_field(h, "a")) {
            plane.normal.push_back(rational_field(c, "a normal coordinate"));
        }
        plane.offset = rational_field(field(h, "b"), "field 'b'");
        out.hyperplanes.push_back(std::move(plane));
    }
    for (const json& s : array_field(j, "shortfalls")) {
        if (!s.is_object()) throw ValidationError("field 'shortfalls' must contain objects");
        allow_keys(s, {"achieved", "demand", "group"});
        out.shortfalls.push_back(GroupShortfall{index_field(s, "group"),
                                                int_field(s, "achieved"),
                                                int_field(s, "demand")});
    }
    for (const json& s : array_field(j, "trace")) {
        if (!s.is_object()) throw ValidationError("field 'trace' must contain objects");
        allow_keys(s, {"deficiency", "edge", "gain"});
        out.steps.push_back(GreedyStep{index_field(s, "edge"), int_field(s, "gain"),
                                       int_field(s, "deficiency")});
    }
    for (const json& v : array_field(j, "violations")) {
        if (!v.is_object()) throw ValidationError("field 'violations' must contain objects");
        allow_keys(v, {"face", "group"});
        out.violations.push_back(FaceViolation{
            index_array(array_field(v, "face"), "field 'face'"), index_field(v, "group")});
    }
    return out;
}

std::string emit_instance(const ParsedInstance& instance) {
    const json j = std::visit([](const auto& inst) { return instance_json(inst); }, instance);
    return dump_canonical(j);
}

std::string emit_solution(const SolutionFile& solution) {
    json j;
    j["chosen_edges"] = solution.chosen_edges;
    j["feasible"] = solution.feasible;
    j["final_value"] = solution.final_value;
    json planes = json::array();
    for (const Hyperplane& h : solution.hyperplanes) {
        json hj;
        json normal = json::array();
        for (const Rat& c : h.normal) normal.push_back(rational_json(c));
        hj["a"] = std::move(normal);
        hj["b"] = rational_json(h.offset);
        planes.push_back(std::move(hj));
    }
    j["hyperplanes"] = std::move(planes);
    json shortfalls = json::array();
    for (const GroupShortfall& s : solution.shortfalls) {
        json sj;
        sj["achieved"] = s.achieved;
        sj["demand"] = s.demand;
        sj["group"] = s.group;
        shortfalls.push_back(std::move(sj));
    }
    j["shortfalls"] = std::move(shortfalls);
    json steps = json::array();
    for (const GreedyStep& s : solution.steps) {
        json sj;
        sj["deficiency"] = s.deficiency_after;
        sj["edge"] = s.edge;
        sj["gain"] = s.gain;
        steps.push_back(std::move(sj));
    }
    j["trace"] = std::move(steps);
    json violations = json::array();
    for (const FaceViolation& v : solution.violations) {
        json vj;
        vj["face"] = v.face;
        vj["group"] = v.group;
        violations.push_back(std::move(vj));
    }
    j["violations"] = std::move(violations);
    return dump_canonical(j);
}

SolutionFile make_solution_file(const PcmsSolveResult& result) {
    SolutionFile out;
    out.chosen_edges = result.chosen;
    out.feasible = result.feasible;
    out.final_value = result.trace.final_value;
    out.shortfalls = result.shortfalls;
    out.steps = result.trace.steps;
    return out;
}

SolutionFile make_solution_file(const PtdSolveResult& result) {
    SolutionFile out;
    out.chosen_edges = result.chosen;
    out.feasible = result.feasible;
    out.final_value = result.trace.final_value;
    out.shortfalls = result.shortfalls;
    out.steps = result.trace.steps;
    out.violations = result.violations;
    return out;
}

SolutionFile make_solution_file(const RmcSolveResult& result) {
    SolutionFile out;
    out.chosen_edges = result.chosen;
    out.feasible = result.feasible;
    out.final_value = result.trace.final_value;
    out.shortfalls = result.shortfalls;
    out.steps = result.trace.steps;
    out.violations = result.violations;
    return out;
}

SolutionFile make_solution_file(const GeometricSolution& solution) {
    SolutionFile out;
    out.chosen_edges = solution.report.chosen_edges;
    out.feasible = solution.report.feasible;
    out.final_value = solution.report.trace.final_value;
    out.hyperplanes = solution.hyperplanes;
    out.shortfalls = solution.report.shortfalls;
    out.steps = solution.report.trace.steps;
    out.violations = solution.report.violations;
    return out;
}

std::string generate_instance(std::uint64_t seed, int n, int d, int m, long coordinate_bound,
                              TargetRule rule) {
    if (n < 1 || d < 1 || m < 1 || coordinate_bound < 1) {
        throw ValidationError("generator parameters must be positive");
    }
    if (m > n) {
        throw ValidationError("cannot fill " + std::to_string(m) + " groups from " +
                              std::to_string(n) + " points");
    }

    std::mt19937_64 rng(seed);
    std::vector<std::vector<Rat>> points;
    std::set<std::vector<long>> used;
    const int retry_budget = 5000;
    int retries = 0;
    while (static_cast<int>(points.size()) < n) {
        std::vector<long> raw(d);
        for (long& c : raw) {
            c = static_cast<long>(rng() % static_cast<std::uint64_t>(coordinate_bound + 1));
        }
        bool ok = !used.contains(raw);
        if (ok) {
            std::vector<Rat> p;
            p.reserve(d);
            for (long c : raw) p.emplace_back(c);
            points.push_back(std::move(p));
            std::vector<int> all(points.size());
            for (std::size_t i = 0; i < points.size(); ++i) all[i] = static_cast<int>(i);
            const PointConfig probe =
                make_point_config(d, points, {PointGroup{"g0", all, 1}});
            ok = check_general_position(probe).ok;
            if (!ok) points.pop_back();
        }
        if (!ok && ++retries > retry_budget) {
            throw ValidationError(
                "could not reach general position within the retry budget; "
                "increase the coordinate bound");
        }
        if (ok) used.insert(std::move(raw));
    }

    std::vector<std::vector<int>> members(m);
    for (int j = 0; j < n; ++j) members[j % m].push_back(j);
    for (int j = 0; j < n; ++j) {
        if (rng() % 4 == 0) {
            const int extra = static_cast<int>(rng() % static_cast<std::uint64_t>(m));
            if (extra != j % m) members[extra].push_back(j);
        }
    }

    std::vector<PointGroup> groups;
    for (int g = 0; g < m; ++g) {
        const auto size = static_cast<std::int64_t>(members[g].size());
        const std::int64_t target = rule == TargetRule::kSingleton ? 1 : (size + 1) / 2;
        groups.push_back(PointGroup{"g" + std::to_string(g), std::move(members[g]), target});
    }
    return emit_instance(make_point_config(d, std::move(points), std::move(groups)));
}

std::string emit_svg(const PointConfig& config, const std::vector<Hyperplane>& hyperplanes) {
    if (config.dim != 2) {
        throw ValidationError("svg output supports dimension 2 only, got " +
                              std::to_string(config.dim));
    }
    for (const Hyperplane& h : hyperplanes) {
        if (h.normal.size() != 2) {
            throw ValidationError("svg output needs two-dimensional hyperplanes");
        }
    }

    Rat x0 = config.points[0][0], x1 = x0, y0 = config.points[0][1], y1 = y0;
    for (const auto& p : config.points) {
        x0 = std::min(x0, p[0]);
        x1 = std::max(x1, p[0]);
        y0 = std::min(y0, p[1]);
        y1 = std::max(y1, p[1]);
    }
    const Rat margin_x = sgn(Rat(x1 - x0)) == 0 ? Rat(1) : Rat((x1 - x0) / 10);
    const Rat margin_y = sgn(Rat(y1 - y0)) == 0 ? Rat(1) : Rat((y1 - y0) / 10);
    x0 -= margin_x;
    x1 += margin_x;
    y0 -= margin_y;
    y1 += margin_y;

    const double width = 800.0;
    const double span_x = to_double(Rat(x1 - x0));
    const double span_y = to_double(Rat(y1 - y0));
    const double height = std::max(1.0, std::round(width * span_y / span_x));
    const auto px = [&](const Rat& x) { return to_double(Rat(x - x0)) / span_x * width; };
    const auto py = [&](const Rat& y) {
        return height - to_double(Rat(y - y0)) / span_y * height;
    };

    static const char* kPalette[] = {"#e69f00", "#56b4e9", "#009e73", "#f0e442",
                                     "#0072b2", "#d55e00", "#cc79a7", "#999999"};
    const int palette_size = 8;
    const int n = static_cast<int>(config.points.size());
    std::vector<int> group_of(n, 0);
    for (int g = static_cast<int>(config.groups.size()) - 1; g >= 0; --g) {
        for (int v : config.groups[g].members) group_of[v] = g;
    }

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed2(width) +
           "\" height=\"" + fixed2(height) + "\" viewBox=\"0 0 " + fixed2(width) + " " +
           fixed2(height) + "\">\n";
    svg += "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    for (const Hyperplane& h : hyperplanes) {
        const auto segment = clip_line(h, x0, x1, y0, y1);
        if (segment.empty()) continue;
        svg += "  <line x1=\"" + fixed2(px(segment[0].first)) + "\" y1=\"" +
               fixed2(py(segment[0].second)) + "\" x2=\"" + fixed2(px(segment[1].first)) +
               "\" y2=\"" + fixed2(py(segment[1].second)) +
               "\" stroke=\"#1a1a1a\" stroke-width=\"2\"/>\n";
    }
    for (int i = 0; i < n; ++i) {
        svg += "  <circle cx=\"" + fixed2(px(config.points[i][0])) + "\" cy=\"" +
               fixed2(py(config.points[i][1])) + "\" r=\"5\" fill=\"" +
               kPalette[group_of[i] % palette_size] + "\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace hypersplit
