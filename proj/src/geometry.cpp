#include "hypersplit/geometry.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "hypersplit/errors.hpp"
#include "hypersplit/linalg.hpp"
#include "hypersplit/lp.hpp"

namespace hypersplit {

namespace {

// Calls fn with every k-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_combination(int n, int k, Fn&& fn) {
    if (k > n) return;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    for (;;) {
        fn(static_cast<const std::vector<int>&>(c));
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i) --i;
        if (i < 0) return;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

// Affine dependence test: k points lie on a common hyperplane of R^d
// (k = d+1) iff the (p | 1) matrix is singular.
bool on_common_hyperplane(const PointConfig& config, const std::vector<int>& subset) {
    const int k = static_cast<int>(subset.size());
    RatMatrix matrix(k, std::vector<Rat>(config.dim + 1, Rat(0)));
    for (int r = 0; r < k; ++r) {
        for (int j = 0; j < config.dim; ++j) matrix[r][j] = config.points[subset[r]][j];
        matrix[r][config.dim] = 1;
    }
    return determinant(std::move(matrix)) == 0;
}

// Flips a witness so the first nonzero normal coordinate is positive;
// reports whether the sides swapped.
bool orient_leading_positive(Hyperplane& h) {
    int lead = 0;
    for (const Rat& a : h.normal) {
        lead = sgn(a);
        if (lead != 0) break;
    }
    if (lead >= 0) return false;
    for (Rat& a : h.normal) {
        Rat flipped = -a;
        a = flipped;
    }
    Rat flipped = -h.offset;
    h.offset = flipped;
    return true;
}

struct Candidate {
    Bitset subset;
    HalfspaceProvenance provenance;
};

}  // namespace

PointConfig make_point_config(int dim, std::vector<std::vector<Rat>> points,
                              std::vector<PointGroup> groups) {
    if (dim < 1) throw ValidationError("dimension must be at least 1");
    if (points.empty()) throw ValidationError("at least one point is required");
    const int n = static_cast<int>(points.size());
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(points[i].size()) != dim) {
            throw ValidationError("point " + std::to_string(i) + " has " +
                                  std::to_string(points[i].size()) + " coordinates, expected " +
                                  std::to_string(dim));
        }
    }
    std::map<std::vector<Rat>, int> seen;
    for (int i = 0; i < n; ++i) {
        auto [it, fresh] = seen.emplace(points[i], i);
        if (!fresh) {
            throw ValidationError("points must be distinct: points " +
                                  std::to_string(it->second) + " and " + std::to_string(i) +
                                  " coincide");
        }
    }

    if (groups.empty()) throw ValidationError("at least one group is required");
    std::vector<char> grouped(n, 0);
    std::map<std::string, int> names;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        auto& group = groups[g];
        const std::string what = "group '" + group.name + "'";
        if (!names.emplace(group.name, static_cast<int>(g)).second) {
            throw ValidationError("duplicate group name '" + group.name + "'");
        }
        std::vector<char> in(n, 0);
        for (int v : group.members) {
            if (v < 0 || v >= n) {
                throw ValidationError(what + ": point index " + std::to_string(v) +
                                      " out of range");
            }
            if (in[v]) {
                throw ValidationError(what + ": duplicate point index " + std::to_string(v));
            }
            in[v] = 1;
            grouped[v] = 1;
        }
        if (group.target < 1 || group.target > static_cast<std::int64_t>(group.members.size())) {
            throw ValidationError(what + ": target " + std::to_string(group.target) +
                                  " must be between 1 and the group size " +
                                  std::to_string(group.members.size()));
        }
        std::sort(group.members.begin(), group.members.end());
    }
    for (int i = 0; i < n; ++i) {
        if (!grouped[i]) {
            throw ValidationError("point " + std::to_string(i) + " belongs to no group");
        }
    }
    return PointConfig{dim, std::move(points), std::move(groups)};
}

int side_sign(const Hyperplane& h, const std::vector<Rat>& p) {
    if (h.normal.size() != p.size()) {
        throw ValidationError("hyperplane dimension " + std::to_string(h.normal.size()) +
                              " does not match point dimension " + std::to_string(p.size()));
    }
    Rat value(0);
    for (std::size_t j = 0; j < p.size(); ++j) value += h.normal[j] * p[j];
    value -= h.offset;
    return sgn(value);
}

GeneralPositionReport check_general_position(const PointConfig& config) {
    const int d = config.dim;
    const int n = static_cast<int>(config.points.size());

    if (n <= d) {
        // With so few points the hyperplane test is vacuous; require
        // affine independence instead so every subset stays realizable.
        for (int k = 1; k < n; ++k) {
            RatMatrix diffs(k, std::vector<Rat>(d));
            for (int i = 1; i <= k; ++i) {
                for (int j = 0; j < d; ++j) {
                    Rat delta = config.points[i][j] - config.points[0][j];
                    diffs[i - 1][j] = delta;
                }
            }
            if (matrix_rank(std::move(diffs)) < k) {
                std::vector<int> offending(k + 1);
                for (int i = 0; i <= k; ++i) offending[i] = i;
                return {false, std::move(offending)};
            }
        }
        return {true, {}};
    }

    GeneralPositionReport report;
    for_each_combination(n, d + 1, [&](const std::vector<int>& subset) {
        if (report.ok && on_common_hyperplane(config, subset)) {
            report.ok = false;
            report.offending = subset;
        }
    });
    return report;
}

Hyperplane witness_for_subset(const PointConfig& config, const Bitset& subset) {
    const int d = config.dim;
    const int n = static_cast<int>(config.points.size());
    if (subset.universe() != n) {
        throw ValidationError("subset universe " + std::to_string(subset.universe()) +
                              " does not match the point count " + std::to_string(n));
    }

    Hyperplane h;
    if (subset.empty() || subset.full()) {
        // Any hyperplane strictly past the extreme first coordinate.
        h.normal.assign(d, Rat(0));
        h.normal[0] = 1;
        Rat extreme = config.points[0][0];
        for (const auto& p : config.points) {
            if (subset.empty() ? p[0] > extreme : p[0] < extreme) extreme = p[0];
        }
        h.offset = subset.empty() ? Rat(extreme + 1) : Rat(extreme - 1);
    } else {
        // Unit-margin feasibility in the d+1 unknowns (a, b):
        // a.p - b >= 1 inside the subset, a.p - b <= -1 outside.
        RatMatrix rows(n, std::vector<Rat>(d + 1));
        std::vector<Rat> rhs(n, Rat(1));
        for (int i = 0; i < n; ++i) {
            const int side = subset.test(i) ? 1 : -1;
            for (int j = 0; j < d; ++j) rows[i][j] = side * config.points[i][j];
            rows[i][d] = -side;
        }
        const auto solution = find_feasible_point(d + 1, rows, rhs);
        if (!solution.has_value()) {
            throw NonRealizableError("subset admits no strict separating hyperplane");
        }
        const auto primitive = normalize_primitive(*solution);
        h.normal.assign(primitive.begin(), primitive.end() - 1);
        h.offset = primitive.back();
        // Primitive normalization may have flipped the orientation; undo
        // it so the requested subset is the positive side.
        const int probe = subset.members().front();
        if (side_sign(h, config.points[probe]) < 0) {
            for (Rat& a : h.normal) {
                Rat flipped = -a;
                a = flipped;
            }
            Rat flipped = -h.offset;
            h.offset = flipped;
        }
    }

    for (int i = 0; i < n; ++i) {
        const int expected = subset.test(i) ? 1 : -1;
        if (side_sign(h, config.points[i]) != expected) {
            throw std::logic_error("witness failed exact re-verification");
        }
    }
    return h;
}

std::vector<CanonicalHalfspace> enumerate_halfspaces(const PointConfig& config) {
    const int d = config.dim;
    const int n = static_cast<int>(config.points.size());
    const auto gp = check_general_position(config);
    if (!gp.ok) {
        std::string msg = "points not in general position; offending subset {";
        for (std::size_t i = 0; i < gp.offending.size(); ++i) {
            if (i) msg += ", ";
            msg += std::to_string(gp.offending[i]);
        }
        msg += "}";
        throw DegenerateInputError(msg, gp.offending);
    }

    std::map<Bitset, Candidate, BitsetLexLess> classes;
    auto offer = [&](Bitset subset, HalfspaceProvenance provenance) {
        if (subset.empty() || subset.full()) return;
        Bitset key = subset.canonical_key();
        classes.emplace(std::move(key), Candidate{std::move(subset), std::move(provenance)});
    };

    if (n <= d) {
        // Affinely independent points: every dichotomy is realizable.
        for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
            Bitset subset(n);
            for (int i = 0; i < n; ++i) {
                if (mask & (1u << i)) subset.set(i);
            }
            offer(std::move(subset), HalfspaceProvenance{});
        }
    } else {
        for_each_combination(n, d, [&](const std::vector<int>& tuple) {
            // The hyperplane through the tuple: kernel of the (p | -1)
            // rows, one-dimensional in general position.
            RatMatrix rows(d, std::vector<Rat>(d + 1));
            for (int r = 0; r < d; ++r) {
                for (int j = 0; j < d; ++j) rows[r][j] = config.points[tuple[r]][j];
                rows[r][d] = -1;
            }
            const auto kernel = kernel_vector(std::move(rows));
            Hyperplane h;
            h.normal.assign(kernel.begin(), kernel.end() - 1);
            h.offset = kernel.back();

            Bitset base(n);
            std::vector<char> in_tuple(n, 0);
            for (int t : tuple) in_tuple[t] = 1;
            for (int i = 0; i < n; ++i) {
                if (in_tuple[i]) continue;
                const int s = side_sign(h, config.points[i]);
                if (s == 0) {
                    std::vector<int> offending = tuple;
                    offending.push_back(i);
                    std::sort(offending.begin(), offending.end());
                    throw DegenerateInputError("unexpected point on a tuple hyperplane",
                                               std::move(offending));
                }
                if (s > 0) base.set(i);
            }

            for (unsigned mask = 0; mask < (1u << d); ++mask) {
                Bitset subset = base;
                for (int j = 0; j < d; ++j) {
                    if (mask & (1u << j)) subset.set(tuple[j]);
                }
                offer(std::move(subset), HalfspaceProvenance{tuple, mask});
            }
        });
    }

    std::vector<CanonicalHalfspace> out;
    out.reserve(classes.size());
    for (auto& [key, candidate] : classes) {
        CanonicalHalfspace hs;
        hs.witness = witness_for_subset(config, candidate.subset);
        hs.subset = std::move(candidate.subset);
        if (orient_leading_positive(hs.witness)) hs.subset = hs.subset.complement();
        hs.canonical_key = key;
        hs.provenance = std::move(candidate.provenance);
        if (!hs.provenance.tuple.empty()) {
            unsigned mask = 0;
            for (std::size_t j = 0; j < hs.provenance.tuple.size(); ++j) {
                if (hs.subset.test(hs.provenance.tuple[j])) mask |= 1u << j;
            }
            hs.provenance.side_mask = mask;
        }
        out.push_back(std::move(hs));
    }
    return out;
}

GeometricBuild build_rmc(const PointConfig& config) {
    GeometricBuild build;
    build.halfspaces = enumerate_halfspaces(config);
    const int n = static_cast<int>(config.points.size());
    std::vector<std::vector<int>> edges;
    edges.reserve(build.halfspaces.size());
    for (const auto& hs : build.halfspaces) edges.push_back(hs.subset.members());
    std::vector<std::pair<std::vector<int>, std::int64_t>> ground_sets;
    ground_sets.reserve(config.groups.size());
    for (const auto& g : config.groups) ground_sets.push_back({g.members, g.target});
    build.instance = make_rmc(n, edges, ground_sets);
    return build;
}

GeometricSolution solve_geometric(const PointConfig& config, GreedyMode mode, int threads) {
    const GeometricBuild build = build_rmc(config);
    RmcSolveResult res = solve_rmc(build.instance, mode, threads);

    GeometricSolution solution;
    solution.hyperplanes.reserve(res.chosen.size());
    for (int e : res.chosen) solution.hyperplanes.push_back(build.halfspaces[e].witness);

    solution.report.chosen_edges = std::move(res.chosen);
    solution.report.trace = std::move(res.trace);
    solution.report.feasible = res.feasible;
    solution.report.shortfalls = std::move(res.shortfalls);
    solution.report.violations = verify_partition(config, solution.hyperplanes);
    // The sign-vector route and the abstract arrangement route must see
    // the same faces; disagreement means a broken witness, not bad input.
    if (solution.report.violations != res.violations) {
        throw std::logic_error("sign-vector verification disagrees with the arrangement check");
    }
    return solution;
}

std::vector<FaceViolation> verify_partition(const PointConfig& config,
                                            const std::vector<Hyperplane>& hyperplanes) {
    const int n = static_cast<int>(config.points.size());
    std::map<std::vector<int>, int> face_ids;
    std::vector<std::vector<int>> faces;
    for (int i = 0; i < n; ++i) {
        std::vector<int> signature;
        signature.reserve(hyperplanes.size());
        for (std::size_t j = 0; j < hyperplanes.size(); ++j) {
            const int s = side_sign(hyperplanes[j], config.points[i]);
            if (s == 0) {
                throw ValidationError("point " + std::to_string(i) + " lies on hyperplane " +
                                      std::to_string(j) + "; witness contract violated");
            }
            signature.push_back(s);
        }
        auto [it, fresh] = face_ids.emplace(std::move(signature), static_cast<int>(faces.size()));
        if (fresh) faces.emplace_back();
        faces[it->second].push_back(i);
    }

    std::vector<FaceViolation> violations;
    for (const auto& face : faces) {
        for (std::size_t g = 0; g < config.groups.size(); ++g) {
            const auto& group = config.groups[g];
            std::int64_t count = 0;
            for (int v : group.members)
                count += std::binary_search(face.begin(), face.end(), v);
            if (count > group.target) violations.push_back({face, static_cast<int>(g)});
        }
    }
    return violations;
}

}  // namespace hypersplit
