#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "hypersplit/bitset.hpp"
#include "hypersplit/core_greedy.hpp"
#include "hypersplit/cover_instances.hpp"
#include "hypersplit/errors.hpp"
#include "hypersplit/geometry.hpp"
#include "hypersplit/io_formats.hpp"
#include "hypersplit/oracle.hpp"
#include "hypersplit/rational.hpp"

namespace {

using hypersplit::Bitset;
using hypersplit::FaceViolation;
using hypersplit::GreedyMode;
using hypersplit::GroupShortfall;
using hypersplit::Hyperplane;
using hypersplit::OracleBudget;
using hypersplit::ParsedInstance;
using hypersplit::PCMSInstance;
using hypersplit::PcmsObjective;
using hypersplit::PointConfig;
using hypersplit::PTDInstance;
using hypersplit::Rat;
using hypersplit::RMCInstance;
using hypersplit::RmcObjective;
using hypersplit::SolutionFile;
using hypersplit::SubmodularObjective;
using hypersplit::ValidationError;

constexpr int kOk = 0;
constexpr int kInfeasible = 2;
constexpr int kVerifyFailed = 3;
constexpr int kInputError = 4;
constexpr int kBudgetRefused = 5;

enum class LogLevel { kQuiet, kInfo, kDebug };

LogLevel log_level() {
    const char* env = std::getenv("HYPERSPLIT_LOG");
    if (env == nullptr) return LogLevel::kInfo;
    const std::string value(env);
    if (value == "quiet") return LogLevel::kQuiet;
    if (value == "debug" || value == "trace") return LogLevel::kDebug;
    return LogLevel::kInfo;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write file '" + path + "'");
    out << content;
    out.flush();
    if (!out) throw ValidationError("failed while writing '" + path + "'");
}

std::string kind_name(const ParsedInstance& instance) {
    if (std::holds_alternative<PointConfig>(instance)) return "geometric";
    if (std::holds_alternative<PCMSInstance>(instance)) return "pcms";
    if (std::holds_alternative<PTDInstance>(instance)) return "ptd";
    return "rmc";
}

ParsedInstance load_instance(const std::string& path, const std::string& expected_kind) {
    ParsedInstance instance = hypersplit::parse_instance(read_file(path));
    if (!expected_kind.empty() && expected_kind != "auto" &&
        kind_name(instance) != expected_kind) {
        throw ValidationError("instance kind '" + kind_name(instance) +
                              "' does not match the requested kind '" + expected_kind + "'");
    }
    return instance;
}

GreedyMode parse_mode(const std::string& mode) {
    if (mode == "naive") return GreedyMode::kNaive;
    if (mode == "lazy") return GreedyMode::kLazy;
    throw ValidationError("mode must be 'naive' or 'lazy', got '" + mode + "'");
}

std::string face_text(const std::vector<int>& face) {
    std::string out = "{";
    for (std::size_t i = 0; i < face.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(face[i]);
    }
    return out + "}";
}

void print_solution_summary(const SolutionFile& file) {
    const LogLevel level = log_level();
    if (level == LogLevel::kQuiet) return;
    std::cout << "chosen " << file.chosen_edges.size() << " edge"
              << (file.chosen_edges.size() == 1 ? "" : "s") << ", "
              << (file.feasible ? "feasible" : "infeasible") << "\n";
    const std::int64_t deficiency =
        file.steps.empty() ? 0 : file.steps.back().deficiency_after;
    std::cout << "trace: " << file.steps.size() << " step"
              << (file.steps.size() == 1 ? "" : "s") << ", final value " << file.final_value
              << ", deficiency " << deficiency << "\n";
    if (level == LogLevel::kDebug) {
        for (std::size_t i = 0; i < file.steps.size(); ++i) {
            const auto& s = file.steps[i];
            std::cout << "  step " << i + 1 << ": edge " << s.edge << ", gain " << s.gain
                      << ", deficiency " << s.deficiency_after << "\n";
        }
    }
    for (const GroupShortfall& s : file.shortfalls) {
        std::cout << "shortfall: group " << s.group << " achieved " << s.achieved << " of "
                  << s.demand << "\n";
    }
    for (const FaceViolation& v : file.violations) {
        std::cout << "violation: face " << face_text(v.face) << " exceeds the target of group "
                  << v.group << "\n";
    }
}

int run_solve(const std::string& input, const std::string& output, const std::string& svg_path,
              const std::string& mode, int threads, const std::string& kind) {
    const ParsedInstance instance = load_instance(input, kind);
    const GreedyMode greedy_mode = parse_mode(mode);

    SolutionFile file;
    if (const auto* config = std::get_if<PointConfig>(&instance)) {
        const auto solution = hypersplit::solve_geometric(*config, greedy_mode, threads);
        file = make_solution_file(solution);
        if (!svg_path.empty()) {
            write_file(svg_path, emit_svg(*config, solution.hyperplanes));
        }
    } else {
        if (!svg_path.empty()) {
            throw ValidationError("--svg requires a geometric instance");
        }
        if (const auto* pcms = std::get_if<PCMSInstance>(&instance)) {
            file = make_solution_file(hypersplit::solve_pcms(*pcms, greedy_mode, threads));
        } else if (const auto* ptd = std::get_if<PTDInstance>(&instance)) {
            file = make_solution_file(hypersplit::solve_ptd(*ptd, greedy_mode, threads));
        } else {
            file = make_solution_file(
                hypersplit::solve_rmc(std::get<RMCInstance>(instance), greedy_mode, threads));
        }
    }

    print_solution_summary(file);
    if (!output.empty()) write_file(output, emit_solution(file));
    return file.feasible ? kOk : kInfeasible;
}

int run_exact(const std::string& input, int budget_edges, int budget_points,
              const std::string& kind) {
    const ParsedInstance instance = load_instance(input, kind);
    const OracleBudget budget{budget_edges, budget_points};

    std::unique_ptr<SubmodularObjective> objective;
    if (const auto* config = std::get_if<PointConfig>(&instance)) {
        objective = std::make_unique<RmcObjective>(hypersplit::build_rmc(*config).instance);
    } else if (const auto* pcms = std::get_if<PCMSInstance>(&instance)) {
        objective = std::make_unique<PcmsObjective>(*pcms);
    } else if (const auto* ptd = std::get_if<PTDInstance>(&instance)) {
        objective = std::make_unique<PcmsObjective>(hypersplit::ptd_to_pcms(*ptd));
    } else {
        objective = std::make_unique<RmcObjective>(std::get<RMCInstance>(instance));
    }

    const auto [k, best] = hypersplit::exact_min_cover(*objective, budget);
    std::cout << "k = " << k << "\n";
    std::cout << "edges:";
    for (int e : best) std::cout << " " << e;
    std::cout << "\n";
    return kOk;
}

int run_enumerate(const std::string& input) {
    const ParsedInstance instance = load_instance(input, "geometric");
    const auto& config = std::get<PointConfig>(instance);
    const auto halfspaces = hypersplit::enumerate_halfspaces(config);
    std::cout << halfspaces.size() << " canonical halfspace"
              << (halfspaces.size() == 1 ? "" : "s") << "\n";
    if (log_level() == LogLevel::kDebug) {
        for (const auto& hs : halfspaces) {
            std::cout << "  subset " << face_text(hs.subset.members()) << " a = (";
            for (std::size_t j = 0; j < hs.witness.normal.size(); ++j) {
                if (j > 0) std::cout << ", ";
                std::cout << hypersplit::format_rational(hs.witness.normal[j]);
            }
            std::cout << "), b = " << hypersplit::format_rational(hs.witness.offset) << "\n";
        }
    }
    return kOk;
}

int run_gen(const std::string& output, std::uint64_t seed, int n, int dim, int groups,
            long bound, const std::string& rule) {
    hypersplit::TargetRule target_rule;
    if (rule == "half") {
        target_rule = hypersplit::TargetRule::kHalf;
    } else if (rule == "singleton") {
        target_rule = hypersplit::TargetRule::kSingleton;
    } else {
        throw ValidationError("rule must be 'half' or 'singleton', got '" + rule + "'");
    }
    const std::string text =
        hypersplit::generate_instance(seed, n, dim, groups, bound, target_rule);
    if (output.empty()) {
        std::cout << text;
    } else {
        write_file(output, text);
    }
    return kOk;
}

int run_plot(const std::string& input, const std::string& solution_path,
             const std::string& output) {
    const ParsedInstance instance = load_instance(input, "geometric");
    const auto& config = std::get<PointConfig>(instance);
    std::vector<Hyperplane> planes;
    if (!solution_path.empty()) {
        planes = hypersplit::parse_solution(read_file(solution_path)).hyperplanes;
    }
    write_file(output, emit_svg(config, planes));
    return kOk;
}

// Face violations of a PTD edge choice, recomputed from the arrangement.
std::vector<FaceViolation> ptd_face_violations(const PTDInstance& inst,
                                               std::span<const int> chosen) {
    std::vector<Bitset> selected;
    selected.reserve(chosen.size());
    for (int e : chosen) selected.push_back(inst.system.edges[e]);
    const auto faces = hypersplit::arrangement(inst.system.ground_size, selected);
    std::vector<FaceViolation> out;
    for (const auto& face : faces) {
        for (int v : face) {
            if (static_cast<std::int64_t>(face.size()) > inst.demands[v]) {
                out.push_back({face, v});
            }
        }
    }
    return out;
}

int run_verify(const std::string& input, const std::string& solution_path,
               const std::string& kind) {
    const ParsedInstance instance = load_instance(input, kind);
    const SolutionFile file = hypersplit::parse_solution(read_file(solution_path));

    std::vector<std::string> problems;
    const auto check = [&problems](bool ok, const std::string& message) {
        if (!ok) problems.push_back(message);
    };

    // Kind-specific machinery: the objective, its edge family, and the
    // recomputation of shortfalls and face violations.
    std::unique_ptr<SubmodularObjective> objective;
    std::vector<Bitset> edges;
    std::function<std::vector<GroupShortfall>(std::span<const int>)> shortfalls_of;
    std::function<std::vector<FaceViolation>(std::span<const int>)> violations_of;
    std::int64_t demand_cap = 0;
    const PointConfig* config = std::get_if<PointConfig>(&instance);
    RMCInstance built_rmc;

    if (config != nullptr) {
        built_rmc = hypersplit::build_rmc(*config).instance;
    }
    if (const RMCInstance* rmc = config != nullptr ? &built_rmc
                                                   : std::get_if<RMCInstance>(&instance)) {
        auto typed = std::make_unique<RmcObjective>(*rmc);
        edges = rmc->edges;
        demand_cap = typed->demand_cap();
        const int n = rmc->universe_size;
        shortfalls_of = [obj = typed.get(), n](std::span<const int> chosen) {
            std::vector<GroupShortfall> out;
            const auto service = obj->group_service(chosen);
            for (std::size_t g = 0; g < service.size(); ++g) {
                const auto& gs = obj->instance().ground_sets[g];
                const std::int64_t cap =
                    static_cast<std::int64_t>(gs.members.size()) * (n - gs.target);
                if (service[g] < cap) out.push_back({static_cast<int>(g), service[g], cap});
            }
            return out;
        };
        violations_of = [rmc](std::span<const int> chosen) {
            return hypersplit::verify_rmc(*rmc, chosen);
        };
        objective = std::move(typed);
    } else if (const auto* pcms = std::get_if<PCMSInstance>(&instance)) {
        auto typed = std::make_unique<PcmsObjective>(*pcms);
        edges = pcms->edges;
        demand_cap = typed->demand_cap();
        shortfalls_of = [obj = typed.get()](std::span<const int> chosen) {
            std::vector<GroupShortfall> out;
            const auto service = obj->group_service(chosen);
            for (std::size_t g = 0; g < service.size(); ++g) {
                const std::int64_t demand = obj->instance().ground_sets[g].demand;
                if (service[g] < demand) out.push_back({static_cast<int>(g), service[g], demand});
            }
            return out;
        };
        violations_of = [](std::span<const int>) { return std::vector<FaceViolation>{}; };
        objective = std::move(typed);
    } else {
        const auto& ptd = std::get<PTDInstance>(instance);
        auto typed = std::make_unique<PcmsObjective>(hypersplit::ptd_to_pcms(ptd));
        edges = ptd.system.edges;
        demand_cap = typed->demand_cap();
        shortfalls_of = [obj = typed.get()](std::span<const int> chosen) {
            std::vector<GroupShortfall> out;
            const auto service = obj->group_service(chosen);
            for (std::size_t g = 0; g < service.size(); ++g) {
                const std::int64_t demand = obj->instance().ground_sets[g].demand;
                if (service[g] < demand) out.push_back({static_cast<int>(g), service[g], demand});
            }
            return out;
        };
        violations_of = [&ptd](std::span<const int> chosen) {
            return ptd_face_violations(ptd, chosen);
        };
        objective = std::move(typed);
    }

    bool chosen_ok = std::is_sorted(file.chosen_edges.begin(), file.chosen_edges.end()) &&
                     std::adjacent_find(file.chosen_edges.begin(), file.chosen_edges.end()) ==
                         file.chosen_edges.end();
    for (int e : file.chosen_edges) {
        chosen_ok = chosen_ok && e >= 0 && e < static_cast<int>(edges.size());
    }
    check(chosen_ok, "chosen_edges must be ascending distinct indices into the edge family");

    if (config == nullptr) {
        check(file.hyperplanes.empty(), "abstract solutions carry no hyperplanes");
    } else {
        check(file.hyperplanes.size() == file.chosen_edges.size(),
              "hyperplane count " + std::to_string(file.hyperplanes.size()) +
                  " does not match chosen edge count " +
                  std::to_string(file.chosen_edges.size()));
        if (chosen_ok && file.hyperplanes.size() == file.chosen_edges.size()) {
            const int n = static_cast<int>(config->points.size());
            for (std::size_t j = 0; j < file.hyperplanes.size(); ++j) {
                const Bitset& subset = edges[file.chosen_edges[j]];
                bool realizes = file.hyperplanes[j].normal.size() ==
                                static_cast<std::size_t>(config->dim);
                for (int i = 0; realizes && i < n; ++i) {
                    const int sign =
                        hypersplit::side_sign(file.hyperplanes[j], config->points[i]);
                    realizes = sign != 0 && (sign > 0) == subset.test(i);
                }
                check(realizes, "hyperplane " + std::to_string(j) +
                                    " does not realize chosen edge " +
                                    std::to_string(file.chosen_edges[j]));
            }
        }
        try {
            const auto sign_route = hypersplit::verify_partition(*config, file.hyperplanes);
            if (sign_route != file.violations) {
                std::string message = "recorded violations do not match the sign-vector check;";
                if (sign_route.empty()) message += " no violations recomputed";
                for (const auto& v : sign_route) {
                    message += " face " + face_text(v.face) + " exceeds the target of group " +
                               std::to_string(v.group) + ";";
                }
                problems.push_back(message);
            }
        } catch (const ValidationError& e) {
            problems.push_back(std::string("sign-vector check failed: ") + e.what());
        }
    }

    if (chosen_ok) {
        const std::int64_t value = objective->eval(file.chosen_edges);
        check(value == file.final_value,
              "final value mismatch: recomputed " + std::to_string(value) + ", file says " +
                  std::to_string(file.final_value));
        check(file.feasible == (value == demand_cap),
              "feasibility flag does not match the recomputed value");

        const auto shortfalls =
            file.feasible ? std::vector<GroupShortfall>{} : shortfalls_of(file.chosen_edges);
        check(shortfalls == file.shortfalls, "recorded shortfalls do not match the recomputation");

        const auto face_route = violations_of(file.chosen_edges);
        if (face_route != file.violations) {
            std::string message = "recorded violations do not match the arrangement check;";
            if (face_route.empty()) message += " no violations recomputed";
            for (const auto& v : face_route) {
                message += " face " + face_text(v.face) + " exceeds the target of group " +
                           std::to_string(v.group) + ";";
            }
            problems.push_back(message);
        }

        // Replay the greedy trace step by step.
        const std::int64_t f_max = objective->f_max();
        std::vector<int> prefix;
        bool replay_ok = true;
        for (std::size_t t = 0; replay_ok && t < file.steps.size(); ++t) {
            const auto& step = file.steps[t];
            if (step.edge < 0 || step.edge >= static_cast<int>(edges.size())) {
                check(false, "trace step " + std::to_string(t + 1) + " names edge " +
                                 std::to_string(step.edge) + ", which does not exist");
                replay_ok = false;
                break;
            }
            const std::int64_t gain = hypersplit::marginal_gain(*objective, prefix, step.edge);
            check(step.gain > 0, "trace step " + std::to_string(t + 1) + " has nonpositive gain");
            check(gain == step.gain, "trace step " + std::to_string(t + 1) +
                                         " records gain " + std::to_string(step.gain) +
                                         ", recomputed " + std::to_string(gain));
            prefix.push_back(step.edge);
            const std::int64_t after = objective->eval(prefix);
            check(f_max - after == step.deficiency_after,
                  "trace step " + std::to_string(t + 1) + " records deficiency " +
                      std::to_string(step.deficiency_after) + ", recomputed " +
                      std::to_string(f_max - after));
            replay_ok = replay_ok && gain == step.gain;
        }
        if (replay_ok) {
            std::sort(prefix.begin(), prefix.end());
            check(prefix == file.chosen_edges, "trace steps do not produce the chosen edges");
        }
    }

    if (!problems.empty()) {
        for (const std::string& p : problems) std::cerr << "verification failed: " << p << "\n";
        return kVerifyFailed;
    }
    if (log_level() != LogLevel::kQuiet) {
        std::cout << "solution verifies: " << (file.feasible ? "feasible" : "infeasible")
                  << "\n";
        for (const GroupShortfall& s : file.shortfalls) {
            std::cout << "shortfall: group " << s.group << " achieved " << s.achieved << " of "
                      << s.demand << "\n";
        }
    }
    return file.feasible ? kOk : kInfeasible;
}

// Deterministic random abstract instances for the self test.
PCMSInstance random_pcms(std::mt19937_64& rng) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const int m = 2 + static_cast<int>(rng() % 6);
    std::vector<std::vector<int>> edges(m);
    for (auto& edge : edges) {
        for (int v = 0; v < n; ++v) {
            if (rng() % 2) edge.push_back(v);
        }
    }
    const int groups = 1 + static_cast<int>(rng() % 3);
    std::vector<std::pair<std::vector<int>, std::int64_t>> ground;
    for (int g = 0; g < groups; ++g) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v) {
            if (rng() % 2) members.push_back(v);
        }
        if (members.empty()) members.push_back(static_cast<int>(rng() % n));
        ground.emplace_back(members, static_cast<std::int64_t>(rng() % members.size()));
    }
    return hypersplit::make_pcms(n, edges, ground);
}

PointConfig random_gp_config(std::mt19937_64& rng, int dim, int n) {
    const std::string text = hypersplit::generate_instance(rng(), n, dim, 1, 40);
    ParsedInstance instance = hypersplit::parse_instance(text);
    return std::get<PointConfig>(std::move(instance));
}

int run_selftest(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    int failures = 0;
    const auto report = [&failures](const std::string& name, bool ok,
                                    const std::string& detail) {
        std::cout << (ok ? "pass" : "FAIL") << ": " << name;
        if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
        std::cout << "\n";
        if (!ok) ++failures;
    };

    bool submodular_ok = true;
    std::string submodular_detail;
    for (int trial = 0; trial < 20 && submodular_ok; ++trial) {
        const PCMSInstance inst = random_pcms(rng);
        PcmsObjective obj(inst);
        const auto verdict = hypersplit::check_submodular(obj, 300, rng());
        if (!verdict.ok) {
            submodular_ok = false;
            submodular_detail = "pcms counterexample at edge " + std::to_string(verdict.edge);
        }
    }
    for (int trial = 0; trial < 8 && submodular_ok; ++trial) {
        const PointConfig config = random_gp_config(rng, 2, 5 + static_cast<int>(rng() % 3));
        RmcObjective obj(hypersplit::build_rmc(config).instance);
        const auto verdict = hypersplit::check_submodular(obj, 300, rng());
        if (!verdict.ok) {
            submodular_ok = false;
            submodular_detail = "rmc counterexample at edge " + std::to_string(verdict.edge);
        }
    }
    report("submodularity and monotonicity on sampled chains", submodular_ok,
           submodular_detail);

    bool greedy_ok = true;
    std::string greedy_detail;
    for (int trial = 0; trial < 25 && greedy_ok; ++trial) {
        const PCMSInstance inst = random_pcms(rng);
        PcmsObjective obj(inst);
        const auto [k, best] = hypersplit::exact_min_cover(obj);
        const auto greedy = hypersplit::greedy_cover(obj);
        const double bound =
            k * (1.0 + std::log(static_cast<double>(std::max<std::int64_t>(obj.f_max(), 2))));
        if (obj.eval(greedy.solution) != obj.f_max() ||
            k > static_cast<int>(greedy.solution.size()) ||
            static_cast<double>(greedy.solution.size()) > bound + 1e-9) {
            greedy_ok = false;
            greedy_detail = "trial " + std::to_string(trial);
        }
    }
    report("greedy between the exact optimum and the Wolsey bound", greedy_ok, greedy_detail);

    bool enumeration_ok = true;
    std::string enumeration_detail;
    for (int trial = 0; trial < 8 && enumeration_ok; ++trial) {
        const int dim = 1 + static_cast<int>(rng() % 2);
        const int n = 4 + static_cast<int>(rng() % 4);
        const PointConfig config = random_gp_config(rng, dim, n);
        const auto via_tuples = hypersplit::enumerate_halfspaces(config);
        const auto via_lp = hypersplit::realizable_subsets(config);
        bool same = via_tuples.size() == via_lp.size();
        for (std::size_t i = 0; same && i < via_lp.size(); ++i) {
            same = via_lp[i] == via_tuples[i].canonical_key;
        }
        if (!same) {
            enumeration_ok = false;
            enumeration_detail = "trial " + std::to_string(trial);
        }
    }
    report("halfspace enumeration equals the separability scan", enumeration_ok,
           enumeration_detail);

    if (failures > 0) {
        std::cerr << failures << " selftest propert" << (failures == 1 ? "y" : "ies")
                  << " failed\n";
        return kVerifyFailed;
    }
    std::cout << "selftest: all properties hold\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"greedy hyperplane and set-cover partitioner"};
    app.require_subcommand(1);

    std::string input, output, solution_path, svg_path;
    std::string mode = "naive";
    std::string kind = "auto";
    std::string rule = "half";
    int threads = 1;
    int budget_edges = 20;
    int budget_points = 14;
    std::uint64_t seed = 1;
    int gen_n = 8;
    int gen_dim = 2;
    int gen_groups = 1;
    long gen_bound = 100;

    CLI::App* solve = app.add_subcommand("solve", "solve an instance and write the solution");
    solve->add_option("--input", input, "instance file")->required();
    solve->add_option("--output", output, "solution file to write");
    solve->add_option("--svg", svg_path, "also plot the solved configuration (geometric only)");
    solve->add_option("--mode", mode, "greedy mode: naive or lazy");
    solve->add_option("--threads", threads, "parallel candidate scan width");
    solve->add_option("--kind", kind, "require this instance kind");

    CLI::App* exact = app.add_subcommand("exact", "exhaustive minimum cover via the oracle");
    exact->add_option("--input", input, "instance file")->required();
    exact->add_option("--budget-edges", budget_edges, "refuse instances with more edges");
    exact->add_option("--budget-points", budget_points, "refuse scans over more points");
    exact->add_option("--kind", kind, "require this instance kind");

    CLI::App* verify = app.add_subcommand("verify", "recompute a solution file and compare");
    verify->add_option("--input", input, "instance file")->required();
    verify->add_option("--solution", solution_path, "solution file to verify")->required();
    verify->add_option("--kind", kind, "require this instance kind");

    CLI::App* enumerate = app.add_subcommand("enumerate", "count canonical halfspaces");
    enumerate->add_option("--input", input, "geometric instance file")->required();

    CLI::App* gen = app.add_subcommand("gen", "generate a random geometric instance");
    gen->add_option("--output", output, "instance file to write (stdout when omitted)");
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--n", gen_n, "number of points");
    gen->add_option("--dim", gen_dim, "dimension");
    gen->add_option("--groups", gen_groups, "number of groups");
    gen->add_option("--bound", gen_bound, "coordinate bound");
    gen->add_option("--rule", rule, "target rule: half or singleton");

    CLI::App* plot = app.add_subcommand("plot", "render a planar instance to SVG");
    plot->add_option("--input", input, "geometric instance file")->required();
    plot->add_option("--solution", solution_path, "solution file whose lines to draw");
    plot->add_option("--output", output, "SVG file to write")->required();

    CLI::App* selftest = app.add_subcommand("selftest", "run the property suite");
    selftest->add_option("--seed", seed, "suite seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) {
            return run_solve(input, output, svg_path, mode, threads, kind);
        }
        if (exact->parsed()) {
            return run_exact(input, budget_edges, budget_points, kind);
        }
        if (verify->parsed()) {
            return run_verify(input, solution_path, kind);
        }
        if (enumerate->parsed()) {
            return run_enumerate(input);
        }
        if (gen->parsed()) {
            return run_gen(output, seed, gen_n, gen_dim, gen_groups, gen_bound, rule);
        }
        if (plot->parsed()) {
            return run_plot(input, solution_path, output);
        }
        return run_selftest(seed);
    } catch (const hypersplit::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBudgetRefused;
    } catch (const hypersplit::DegenerateInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const hypersplit::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const hypersplit::NonRealizableError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
