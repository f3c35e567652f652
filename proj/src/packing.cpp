#include "apollonian/packing.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace apollonian::packing {

std::string kind_name(Kind k) {
    switch (k) {
        case Kind::Apollonian: return "apollonian";
        case Kind::DualApollonian: return "dual";
        case Kind::SuperApollonian: return "super";
    }
    return "?";
}

Kind kind_from_name(const std::string& name) {
    if (name == "apollonian") return Kind::Apollonian;
    if (name == "dual") return Kind::DualApollonian;
    if (name == "super") return Kind::SuperApollonian;
    throw std::invalid_argument("unknown packing kind: " + name);
}

circle::AccRow canonical_circle_row(const circle::AccRow& row) {
    if (row[1] > 0) return row;
    if (row[1] < 0) return -row;
    // Line: normalize the normal to lexicographically positive.
    if (row[2] > 0 || (row[2] == 0 && row[3] > 0)) return row;
    return -row;
}

std::string canonical_circle_key(const circle::AccRow& row) {
    circle::AccRow c = canonical_circle_row(row);
    return to_string(c[0]) + "," + to_string(c[1]) + "," + to_string(c[2]) + "," +
           to_string(c[3]);
}

Rational new_circle_curvature(const Mat4Q& cfg, int i) {
    if (i < 1 || i > 4) throw std::invalid_argument("circle index out of range");
    Rational total = cfg(0, 1) + cfg(1, 1) + cfg(2, 1) + cfg(3, 1);
    return 2 * (total - cfg(i - 1, 1)) - cfg(i - 1, 1);
}

namespace {

using group::Gen;

struct Frontier {
    Mat4Q w;
    Gen last;  // leftmost (most recently applied) letter
    std::string word;
};

void insert_rows(Packing& p, const Mat4Q& w, const std::string& word, int level) {
    for (int i = 0; i < 4; ++i) {
        circle::AccRow row = w.row(i);
        std::string key = canonical_circle_key(row);
        auto [it, inserted] = p.circles.emplace(key, CircleRecord{row, word, level});
        if (inserted) ++p.new_circles_per_level[level];
    }
}

std::vector<Gen> alphabet_for(Kind kind) {
    switch (kind) {
        case Kind::Apollonian:
            return {Gen::S1, Gen::S2, Gen::S3, Gen::S4};
        case Kind::DualApollonian:
            return {Gen::S1p, Gen::S2p, Gen::S3p, Gen::S4p};
        case Kind::SuperApollonian:
            return {Gen::S1, Gen::S2, Gen::S3, Gen::S4,
                    Gen::S1p, Gen::S2p, Gen::S3p, Gen::S4p};
    }
    return {};
}

// May the letter g be prepended to a word whose leftmost letter is "last"?
bool may_prepend(Gen g, Gen last) {
    if (g == last) return false;
    if (group::gen_transposed(g)) {
        // A transposed letter may not sit immediately left of a plain
        // letter with a different index.
        if (!group::gen_transposed(last) &&
            group::gen_index(last) != group::gen_index(g))
            return false;
    }
    return true;
}

}  // namespace

Packing generate(const Mat4Q& seed, Kind kind, int depth, const GenerateOptions& opts) {
    int cap = (kind == Kind::SuperApollonian) ? opts.super_depth_cap : opts.depth_cap;
    if (const char* env = std::getenv("APOLLONIAN_DEPTH_CAP")) cap = std::atoi(env);
    if (depth < 0 || depth > cap) throw std::invalid_argument("depth over cap");

    Mat4Q w0 = seed;
    config::ConfigClass cls = config::validate_acc(w0);
    Packing p;
    p.kind = kind;
    p.depth = depth;
    if (kind == Kind::Apollonian && cls.total_orientation < 0) {
        w0 = -w0;  // packing construction needs positive orientation
        p.seed_negated = true;
    }
    p.seed = w0;
    p.configs_stored = opts.store_configs && depth <= opts.config_store_limit;
    p.new_circles_per_level.assign(depth + 1, 0);

    bool validate = opts.validate_configs && depth <= opts.validate_depth_limit;
    auto note_config = [&](const Mat4Q& w, const std::string& word, int level) {
        if (validate) config::validate_acc(w);
        if (kind == Kind::Apollonian && validate && config::total_orientation(w) < 0)
            throw std::logic_error("orientation flipped inside Apollonian orbit");
        if (p.configs_stored) p.configs.emplace_back(word, w);
        insert_rows(p, w, word, level);
    };

    note_config(w0, "", 0);
    std::vector<Gen> alphabet = alphabet_for(kind);
    std::vector<Frontier> frontier;
    for (Gen g : alphabet) {
        if (depth < 1) break;
        Mat4Q w = group::generator_matrix(g) * w0;
        std::string word = group::word_to_string({g});
        note_config(w, word, 1);
        frontier.push_back({w, g, word});
    }
    for (int level = 2; level <= depth; ++level) {
        std::vector<Frontier> next;
        for (const Frontier& f : frontier)
            for (Gen g : alphabet) {
                bool ok = (kind == Kind::SuperApollonian)
                              ? may_prepend(g, f.last)
                              : (g != f.last);
                if (!ok) continue;
                Mat4Q w = group::generator_matrix(g) * f.w;
                std::string word = group::word_to_string({g}) + f.word;
                note_config(w, word, level);
                next.push_back({w, g, word});
            }
        frontier = std::move(next);
    }
    return p;
}

namespace {

// Floating-point view of one oriented circle or line.
struct Geo {
    bool line = false;
    double cx = 0, cy = 0, r = 0;  // r signed by orientation
    double nx = 0, ny = 0, m = 0;  // interior is n.x > m
};

Geo to_geo(const circle::AccRow& row) {
    Geo g;
    double b = to_double(row[1]);
    if (b != 0.0) {
        g.cx = to_double(row[2]) / b;
        g.cy = to_double(row[3]) / b;
        g.r = 1.0 / b;
    } else {
        g.line = true;
        g.nx = to_double(row[2]);
        g.ny = to_double(row[3]);
        g.m = to_double(row[0]) / 2.0;
    }
    return g;
}

double dist(double ax, double ay, double bx, double by) {
    return std::hypot(ax - bx, ay - by);
}

// Oriented-interior disjointness for one pair; empty string means fine.
std::string disjoint_violation(const Geo& a, const Geo& b, double tol) {
    auto scale = [&](double extra) {
        double s = 1.0;
        if (!a.line) s = std::max(s, std::fabs(a.r));
        if (!b.line) s = std::max(s, std::fabs(b.r));
        return tol * std::max(s, extra);
    };
    if (a.line && b.line) {
        double cross = a.nx * b.ny - a.ny * b.nx;
        double dot = a.nx * b.nx + a.ny * b.ny;
        if (std::fabs(cross) > scale(std::fabs(a.m) + std::fabs(b.m)))
            return "half-planes not parallel";
        if (dot > 0) return "parallel half-planes with same normal overlap";
        if (a.m + b.m < -scale(1.0)) return "half-planes overlap";
        return "";
    }
    if (a.line || b.line) {
        const Geo& ln = a.line ? a : b;
        const Geo& ci = a.line ? b : a;
        double sd = ln.nx * ci.cx + ln.ny * ci.cy - ln.m;  // signed dist of center
        if (ci.r > 0) {
            // disk must avoid the half-plane
            if (sd + ci.r > scale(std::fabs(ln.m))) return "disk enters half-plane";
            return "";
        }
        return "half-plane cannot avoid a circle exterior";
    }
    double d = dist(a.cx, a.cy, b.cx, b.cy);
    if (a.r > 0 && b.r > 0) {
        if (d < a.r + b.r - scale(d)) return "disks overlap";
        return "";
    }
    if (a.r < 0 && b.r < 0) return "two outward interiors always overlap";
    const Geo& outer = (a.r < 0) ? a : b;
    const Geo& inner = (a.r < 0) ? b : a;
    if (d + inner.r > -outer.r + scale(d)) return "disk leaves enclosing circle";
    return "";
}

// Strict-crossing test, orientation ignored; empty string means fine.
std::string crossing_violation(const Geo& a, const Geo& b, double tol) {
    auto scale = [&] {
        double s = 1.0;
        if (!a.line) s = std::max(s, std::fabs(a.r));
        if (!b.line) s = std::max(s, std::fabs(b.r));
        return tol * s;
    };
    if (a.line && b.line) {
        double cross = a.nx * b.ny - a.ny * b.nx;
        if (std::fabs(cross) > tol * (1.0 + std::fabs(a.m) + std::fabs(b.m)))
            return "lines cross";
        return "";
    }
    if (a.line || b.line) {
        const Geo& ln = a.line ? a : b;
        const Geo& ci = a.line ? b : a;
        double sd = std::fabs(ln.nx * ci.cx + ln.ny * ci.cy - ln.m);
        double r = std::fabs(ci.r);
        if (sd < r - scale()) return "line crosses circle";
        return "";
    }
    double d = dist(a.cx, a.cy, b.cx, b.cy);
    double r1 = std::fabs(a.r), r2 = std::fabs(b.r);
    if (d > std::fabs(r1 - r2) + scale() && d < r1 + r2 - scale())
        return "circles cross";
    return "";
}

}  // namespace

CheckReport check_disjoint_interiors(const Packing& p, double tol) {
    CheckReport rep;
    std::vector<std::pair<const std::string*, Geo>> geos;
    geos.reserve(p.circles.size());
    for (const auto& [key, rec] : p.circles) geos.emplace_back(&key, to_geo(rec.row));
    for (std::size_t i = 0; i < geos.size(); ++i)
        for (std::size_t j = i + 1; j < geos.size(); ++j) {
            ++rep.pairs_checked;
            std::string why = disjoint_violation(geos[i].second, geos[j].second, tol);
            if (!why.empty()) {
                rep.ok = false;
                rep.detail = why + " (" + *geos[i].first + " vs " + *geos[j].first + ")";
                return rep;
            }
        }
    return rep;
}

CheckReport check_no_crossing(const Packing& p, double tol) {
    CheckReport rep;
    std::vector<std::pair<const std::string*, Geo>> geos;
    geos.reserve(p.circles.size());
    for (const auto& [key, rec] : p.circles) geos.emplace_back(&key, to_geo(rec.row));
    for (std::size_t i = 0; i < geos.size(); ++i)
        for (std::size_t j = i + 1; j < geos.size(); ++j) {
            ++rep.pairs_checked;
            std::string why = crossing_violation(geos[i].second, geos[j].second, tol);
            if (!why.empty()) {
                rep.ok = false;
                rep.detail = why + " (" + *geos[i].first + " vs " + *geos[j].first + ")";
                return rep;
            }
        }
    return rep;
}

DistinctnessReport orbit_distinctness(const Packing& p) {
    DistinctnessReport rep;
    if (!p.configs_stored) {
        rep.ok = false;
        rep.detail = "configurations were not stored";
        return rep;
    }
    std::set<std::string> canon;
    for (const auto& [word, w] : p.configs)
        canon.insert(config::canonical_form(w).to_string());
    rep.words = static_cast<long>(p.configs.size());
    rep.distinct_canonical = static_cast<long>(canon.size());
    if (rep.words != rep.distinct_canonical) {
        rep.ok = false;
        rep.detail = "two reduced words reached the same unordered configuration";
    }
    return rep;
}

CosetReport coset_orbit_structure(const Mat4Q& seed, int depth) {
    CosetReport rep;
    std::array<int, 4> sigma{0, 1, 2, 3};
    std::set<std::string> reference;
    std::set<std::string> all_oriented;
    GenerateOptions opts;
    do {
        for (int s = 0; s < 2; ++s) {
            Mat4Q coset_seed = config::permute_rows(s ? -seed : seed, sigma);
            Packing p = generate(coset_seed, Kind::Apollonian, depth, opts);
            std::set<std::string> canon;
            for (const auto& [word, w] : p.configs) {
                canon.insert(config::canonical_form(w).to_string());
                // undo the auto-negation bookkeeping: the stored matrices are
                // the orbit of the (possibly negated) seed, which is what the
                // coset P_sigma (+-I) produces anyway
                all_oriented.insert(w.to_string());
            }
            ++rep.orbits;
            if (reference.empty()) reference = canon;
            if (canon != reference) {
                rep.ok = false;
                rep.detail = "coset orbit produced a different unordered set";
                return rep;
            }
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    rep.oriented_total = static_cast<long>(all_oriented.size());
    rep.unordered_total = static_cast<long>(reference.size());
    if (rep.oriented_total != 48 * rep.unordered_total) {
        rep.ok = false;
        rep.detail = "oriented count is not 48x the unordered count";
    }
    return rep;
}

std::vector<std::pair<Rational, long>> curvature_spectrum(const Packing& p,
                                                          bool* all_integral) {
    std::map<Rational, long> mult;
    bool integral = true;
    for (const auto& [key, rec] : p.circles) {
        // signed curvature with the orientation the circle carries in the
        // packing (first occurrence)
        Rational b = rec.row[1];
        ++mult[b];
        if (!is_integer(b)) integral = false;
    }
    if (all_integral) *all_integral = integral;
    return {mult.begin(), mult.end()};
}

IntegralityReport is_strongly_integral(const Mat4Q& w) {
    IntegralityReport rep;
    rep.curvature_center_integral = true;
    rep.co_curvature_integral = true;
    for (int i = 0; i < 4; ++i) {
        if (!is_integer(w(i, 0))) rep.co_curvature_integral = false;
        for (int j = 1; j < 4; ++j)
            if (!is_integer(w(i, j))) rep.curvature_center_integral = false;
    }
    return rep;
}

CheckReport strong_integrality_propagation(const Mat4Q& seed, int depth,
                                           const GenerateOptions& opts) {
    IntegralityReport ir = is_strongly_integral(seed);
    if (!ir.curvature_center_integral || !ir.co_curvature_integral)
        throw std::invalid_argument("seed is not fully integral");
    GenerateOptions o = opts;
    o.store_configs = true;
    o.config_store_limit = std::max(o.config_store_limit, depth);
    Packing p = generate(seed, Kind::SuperApollonian, depth, o);
    CheckReport rep;
    rep.pairs_checked = static_cast<long>(p.configs.size());
    for (const auto& [word, w] : p.configs)
        if (!w.is_integral()) {
            rep.ok = false;
            rep.detail = "non-integral configuration at word " + word;
            return rep;
        }
    return rep;
}

ResidualSample tangency_points(const Packing& p, bool cross_config, double tol) {
    ResidualSample out;
    std::set<std::pair<long long, long long>> seen;
    auto push = [&](double x, double y) {
        auto key = std::make_pair(static_cast<long long>(std::llround(x * 1e7)),
                                  static_cast<long long>(std::llround(y * 1e7)));
        if (seen.insert(key).second) out.points.push_back({x, y});
    };

    if (p.configs_stored) {
        for (const auto& [word, w] : p.configs) {
            config::TangencyPoints tp = config::config_tangency_points(w);
            out.at_infinity_pairs += tp.at_infinity_pairs;
            for (const auto& pt : tp.points) push(to_double(pt[0]), to_double(pt[1]));
        }
    }
    if (cross_config) {
        std::vector<Geo> geos;
        geos.reserve(p.circles.size());
        for (const auto& [key, rec] : p.circles) geos.push_back(to_geo(rec.row));
        for (std::size_t i = 0; i < geos.size(); ++i)
            for (std::size_t j = i + 1; j < geos.size(); ++j) {
                const Geo& a = geos[i];
                const Geo& b = geos[j];
                if (a.line && b.line) continue;
                if (a.line || b.line) {
                    const Geo& ln = a.line ? a : b;
                    const Geo& ci = a.line ? b : a;
                    double sd = ln.nx * ci.cx + ln.ny * ci.cy - ln.m;
                    if (std::fabs(std::fabs(sd) - std::fabs(ci.r)) <
                        tol * std::max(1.0, std::fabs(ci.r)))
                        push(ci.cx - sd * ln.nx, ci.cy - sd * ln.ny);
                    continue;
                }
                double d = dist(a.cx, a.cy, b.cx, b.cy);
                if (d == 0) continue;
                double r1 = std::fabs(a.r), r2 = std::fabs(b.r);
                double s = tol * std::max({1.0, r1, r2});
                bool external = std::fabs(d - (r1 + r2)) < s;
                bool internal = std::fabs(d - std::fabs(r1 - r2)) < s;
                if (external || internal) {
                    // point on the line of centers at distance r1 from a:
                    // toward b, except when a sits inside b
                    double ux = (b.cx - a.cx) / d, uy = (b.cy - a.cy) / d;
                    double sgn = (external || r1 > r2) ? 1.0 : -1.0;
                    push(a.cx + sgn * r1 * ux, a.cy + sgn * r1 * uy);
                }
            }
    }
    return out;
}

bool residual_membership(double x, double y, const Packing& p, double tol) {
    for (const auto& [key, rec] : p.circles) {
        Geo g = to_geo(rec.row);
        if (g.line) {
            double s = tol * std::max(1.0, std::fabs(g.m));
            if (g.nx * x + g.ny * y - g.m > s) return false;
        } else if (g.r > 0) {
            double s = tol * std::max(1.0, g.r);
            if (dist(x, y, g.cx, g.cy) < g.r - s) return false;
        } else {
            double r = -g.r;
            double s = tol * std::max(1.0, r);
            if (dist(x, y, g.cx, g.cy) > r + s) return false;
        }
    }
    return true;
}

double fit_power_law_exponent(const std::vector<double>& sorted_values, double lo,
                              double hi) {
    std::vector<double> xs, ys;
    double last = -1;
    for (std::size_t i = 0; i < sorted_values.size(); ++i) {
        double v = sorted_values[i];
        if (v < lo || v >= hi) continue;
        if (v == last) continue;
        last = v;
        auto n = std::upper_bound(sorted_values.begin(), sorted_values.end(), v) -
                 sorted_values.begin();
        xs.push_back(std::log(v));
        ys.push_back(std::log(static_cast<double>(n)));
    }
    if (xs.size() < 10) throw std::domain_error("too few circles in the fit window");
    double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double denom = n * sxx - sx * sx;
    if (denom == 0) throw std::domain_error("degenerate fit window");
    return (n * sxy - sx * sy) / denom;
}

double estimate_residual_dimension(const Packing& p) {
    if (p.circles.size() < 10000)
        throw std::domain_error("too few circles (need >= 10^4, depth ~ 9)");
    std::vector<double> curvs;
    double t_complete = 0;
    bool have_tc = false;
    for (const auto& [key, rec] : p.circles) {
        double b = to_double(rec.row[1]);
        if (b <= 0) continue;
        curvs.push_back(b);
        if (rec.level == p.depth && (!have_tc || b < t_complete)) {
            t_complete = b;
            have_tc = true;
        }
    }
    std::sort(curvs.begin(), curvs.end());
    if (curvs.empty()) throw std::domain_error("no positive curvatures");
    double lo = 10.0 * curvs.front();
    double hi = have_tc ? t_complete : curvs.back() / std::sqrt(10.0);
    return fit_power_law_exponent(curvs, lo, hi);
}

}  // namespace apollonian::packing
