#ifndef HYPERSPLIT_GEOMETRY_HPP
#define HYPERSPLIT_GEOMETRY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hypersplit/bitset.hpp"
#include "hypersplit/core_greedy.hpp"
#include "hypersplit/cover_instances.hpp"
#include "hypersplit/rational.hpp"

namespace hypersplit {

struct PointGroup {
    std::string name;
    std::vector<int> members;  // sorted ascending
    std::int64_t target = 0;   // maximum points of this group per face
};

struct PointConfig {
    int dim = 0;
    std::vector<std::vector<Rat>> points;
    std::vector<PointGroup> groups;
};

// Validating constructor: distinct points, consistent dimensions, member
// indices in range, 1 <= target <= group size, unique group names, and
// every point in at least one group.
PointConfig make_point_config(int dim, std::vector<std::vector<Rat>> points,
                              std::vector<PointGroup> groups);

// Oriented hyperplane a.x = b; the positive side is {x : a.x > b}.
struct Hyperplane {
    std::vector<Rat> normal;
    Rat offset;

    bool operator==(const Hyperplane&) const = default;
};

struct HalfspaceProvenance {
    std::vector<int> tuple;  // defining point indices; empty when n <= dim
    unsigned side_mask = 0;  // bit j set = tuple[j] lies on the positive side
};

// One combinatorial class of halfspaces: the subset of points strictly on
// the witness's positive side, keyed up to complement.
struct CanonicalHalfspace {
    Bitset subset;
    Bitset canonical_key;
    Hyperplane witness;
    HalfspaceProvenance provenance;
};

// Exact sign of a.p - b. No floating point is involved anywhere in this
// module; this predicate is the only way sides are ever decided.
int side_sign(const Hyperplane& h, const std::vector<Rat>& p);

struct GeneralPositionReport {
    bool ok = true;
    std::vector<int> offending;  // one witness subset when !ok
};

// General position: no dim+1 points on a common hyperplane; when n <= dim
// the requirement tightens to affine independence of all n points, which
// is what makes every subset realizable.
GeneralPositionReport check_general_position(const PointConfig& config);

// All combinatorially distinct halfspaces over the points, one per
// dichotomy class, ordered by canonical key. Each carries a verified
// witness whose strict positive side is exactly `subset`; the empty and
// full subsets are not emitted.
std::vector<CanonicalHalfspace> enumerate_halfspaces(const PointConfig& config);

// A hyperplane with a.p > b exactly for p in `subset`, as primitive
// integers. Throws NonRealizableError when no strict separator exists.
Hyperplane witness_for_subset(const PointConfig& config, const Bitset& subset);

struct GeometricBuild {
    RMCInstance instance;  // edges index-aligned with halfspaces
    std::vector<CanonicalHalfspace> halfspaces;
};

GeometricBuild build_rmc(const PointConfig& config);

struct SolutionReport {
    std::vector<int> chosen_edges;  // ascending halfspace indices
    GreedyTrace trace;
    bool feasible = false;
    std::vector<GroupShortfall> shortfalls;
    std::vector<FaceViolation> violations;
};

struct GeometricSolution {
    std::vector<Hyperplane> hyperplanes;  // witnesses of the chosen edges
    SolutionReport report;
};

// End-to-end solve: enumerate halfspaces, run the greedy separation
// solver, and verify the resulting hyperplanes by sign vectors. The
// sign-vector verification must agree with the abstract arrangement
// check; a mismatch is a logic error, not a reported violation.
GeometricSolution solve_geometric(const PointConfig& config,
                                  GreedyMode mode = GreedyMode::kNaive, int threads = 1);

// Faces are classes of equal sign vectors over the hyperplanes; reports
// every (face, group) exceeding its target. Never consults the
// set-system machinery. A point lying on any hyperplane breaks the
// witness contract and raises ValidationError.
std::vector<FaceViolation> verify_partition(const PointConfig& config,
                                            const std::vector<Hyperplane>& hyperplanes);

}  // namespace hypersplit

#endif
