#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apollonian/circle.hpp"
#include "apollonian/config.hpp"
#include "apollonian/group.hpp"

namespace apollonian::packing {

enum class Kind { Apollonian, DualApollonian, SuperApollonian };

std::string kind_name(Kind k);
Kind kind_from_name(const std::string& name);

// One deduplicated circle: the row as first seen (orientation as it occurs
// in the orbit), plus the word and BFS level of first occurrence.
struct CircleRecord {
    circle::AccRow row;
    std::string word;
    int level = 0;
};

struct Packing {
    Mat4Q seed;  // after auto-negation, when applied
    Kind kind = Kind::Apollonian;
    int depth = 0;
    bool seed_negated = false;
    bool configs_stored = false;
    std::vector<std::pair<std::string, Mat4Q>> configs;  // BFS order
    std::map<std::string, CircleRecord> circles;         // canonical key -> record
    std::vector<long> new_circles_per_level;             // size depth + 1
};

struct GenerateOptions {
    int depth_cap = 12;        // apollonian / dual
    int super_depth_cap = 8;   // super-apollonian word length
    bool store_configs = true;
    int config_store_limit = 8;  // configs kept only up to this depth
    bool validate_configs = true;
    int validate_depth_limit = 7;
};

/// Orbit of the seed under reduced (Apollonian, dual) or normal-form
/// (super) words up to the given length, with exact circle deduplication.
Packing generate(const Mat4Q& seed, Kind kind, int depth,
                 const GenerateOptions& opts = {});

/// Curvature of the replacement circle under S_i (i in 1..4).
Rational new_circle_curvature(const Mat4Q& cfg, int i);

/// Exact orientation-normalized dedup key.
circle::AccRow canonical_circle_row(const circle::AccRow& row);
std::string canonical_circle_key(const circle::AccRow& row);

struct CheckReport {
    bool ok = true;
    std::string detail;
    long pairs_checked = 0;
};

/// Oriented interiors of all circles pairwise disjoint (tangency allowed).
CheckReport check_disjoint_interiors(const Packing& p, double tol = 1e-9);

/// No strict crossing between any two circles (coincide / tangent /
/// disjoint / nested all allowed).
CheckReport check_no_crossing(const Packing& p, double tol = 1e-9);

struct DistinctnessReport {
    bool ok = true;
    std::string detail;
    long words = 0;
    long distinct_canonical = 0;
};

/// Each reduced word gives a distinct unordered, unoriented configuration.
DistinctnessReport orbit_distinctness(const Packing& p);

struct CosetReport {
    bool ok = true;
    std::string detail;
    long orbits = 0;
    long oriented_total = 0;
    long unordered_total = 0;
};

/// The 48 coset-seeded orbits P_sigma (+-I) seed: identical canonical-form
/// sets, and 48x as many ordered-oriented matrices as unordered forms.
CosetReport coset_orbit_structure(const Mat4Q& seed, int depth);

/// Sorted (curvature, multiplicity) pairs; *all_integral reports whether
/// every curvature is an integer.
std::vector<std::pair<Rational, long>> curvature_spectrum(const Packing& p,
                                                          bool* all_integral = nullptr);

struct IntegralityReport {
    bool curvature_center_integral = false;  // columns 2..4
    bool co_curvature_integral = false;      // column 1
};

IntegralityReport is_strongly_integral(const Mat4Q& w);

/// Every configuration of the super-Apollonian orbit to the given depth is
/// an all-integer matrix. Requires a fully integral seed.
CheckReport strong_integrality_propagation(const Mat4Q& seed, int depth,
                                           const GenerateOptions& opts = {});

struct ResidualSample {
    std::vector<std::array<double, 2>> points;
    int at_infinity_pairs = 0;
};

/// Tangency points: exact within-configuration pairs plus geometrically
/// detected cross-configuration tangencies.
ResidualSample tangency_points(const Packing& p, bool cross_config = true,
                               double tol = 1e-9);

/// True iff the point is not strictly inside the oriented interior of any
/// circle of the packing.
bool residual_membership(double x, double y, const Packing& p, double tol = 1e-6);

/// Least-squares exponent of N(T) = #{circles with 0 < curvature <= T} over
/// the window [10 * b_min, T_complete), where T_complete is the smallest
/// curvature first appearing at the deepest level (beyond it the depth
/// truncation undercounts).
double estimate_residual_dimension(const Packing& p);

/// Core fitter: slope of log N(T) vs log T over [lo, hi) for a sorted
/// sample of values.
double fit_power_law_exponent(const std::vector<double>& sorted_values,
                              double lo, double hi);

}  // namespace apollonian::packing
