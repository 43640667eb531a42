#ifndef HYPERSPLIT_IO_FORMATS_HPP
#define HYPERSPLIT_IO_FORMATS_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "hypersplit/core_greedy.hpp"
#include "hypersplit/cover_instances.hpp"
#include "hypersplit/geometry.hpp"

namespace hypersplit {

// Any instance the tools accept: a geometric point configuration or one of
// the abstract cover instances, distinguished in the file by its "kind".
using ParsedInstance = std::variant<PointConfig, PCMSInstance, PTDInstance, RMCInstance>;

// Solver output in file form. Hyperplanes are present for geometric runs
// only; the trace is stored step by step next to its final value.
struct SolutionFile {
    std::vector<int> chosen_edges;
    bool feasible = false;
    std::int64_t final_value = 0;
    std::vector<Hyperplane> hyperplanes;
    std::vector<GroupShortfall> shortfalls;
    std::vector<GreedyStep> steps;
    std::vector<FaceViolation> violations;

    bool operator==(const SolutionFile&) const = default;
};

SolutionFile make_solution_file(const PcmsSolveResult& result);
SolutionFile make_solution_file(const PtdSolveResult& result);
SolutionFile make_solution_file(const RmcSolveResult& result);
SolutionFile make_solution_file(const GeometricSolution& solution);

// Parsers reject malformed text with a position-annotated ParseError and
// structurally valid but inconsistent content with a ValidationError
// naming the field. Rationals travel as strings; floating-point literals
// are rejected everywhere.
ParsedInstance parse_instance(const std::string& text);
SolutionFile parse_solution(const std::string& text);

// Canonical emission: alphabetical keys, two-space indent, normalized
// rationals, trailing newline. emit(parse(F)) == F for canonical files.
std::string emit_instance(const ParsedInstance& instance);
std::string emit_solution(const SolutionFile& solution);

enum class TargetRule { kHalf, kSingleton };

// Random geometric instance in canonical file form: n distinct integer
// points in [0, bound]^d resampled into general position, m groups with
// every point in at least one, targets by rule (half rounds up).
// Deterministic for a fixed argument tuple.
std::string generate_instance(std::uint64_t seed, int n, int d, int m, long coordinate_bound,
                              TargetRule rule = TargetRule::kHalf);

// Plane plot of a configuration and separating lines, clipped to the
// bounding box plus a 10% margin. Deterministic bytes; dim 2 only.
std::string emit_svg(const PointConfig& config, const std::vector<Hyperplane>& hyperplanes);

}  // namespace hypersplit

#endif
