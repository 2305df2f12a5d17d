#include "planefold/lip.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace planefold {

namespace {

struct EKey {
    Eisen v;
    int dir;
    friend bool operator==(const EKey&, const EKey&) = default;
};
struct EKeyHash {
    size_t operator()(const EKey& k) const {
        return EisenHash{}(k.v) * 31u + static_cast<size_t>(k.dir);
    }
};

Eisen step_vec(Family family, int dir) {
    return family == Family::Gosper ? kTheta * unit_dir(dir) : unit_dir(dir);
}

// directed edges and curve passages of a patch, keyed for fast window scans
struct CurveIndex {
    Family family;
    std::unordered_set<EKey, EKeyHash> edges;
    std::unordered_map<Eisen, std::vector<std::pair<int, int>>, EisenHash> joins;
};

CurveIndex build_index(const CoveringPatch& patch) {
    CurveIndex ix;
    ix.family = patch.family;
    for (const EmbeddedCurve& c : patch.curves) {
        int prev = -1;
        for (size_t k = 0; k < c.segments(); ++k) {
            int d = segment_dir(c, k);
            ix.edges.insert({c.vertices[k], d});
            if (k > 0) ix.joins[c.vertices[k]].push_back({prev, d});
            prev = d;
        }
    }
    for (auto& [v, list] : ix.joins) std::sort(list.begin(), list.end());
    return ix;
}

int64_t hex_reach(int64_t euclid) {  // hex-distance bound for a Euclidean radius
    return static_cast<int64_t>(std::ceil(1.1547005383792515 * static_cast<double>(euclid))) + 1;
}

std::vector<Eisen> hex_window(Eisen center, int64_t r) {
    std::vector<Eisen> out;
    for (int64_t a = -r; a <= r; ++a)
        for (int64_t b = -r; b <= r; ++b)
            if (hex_dist({a, b}) <= r) out.push_back(center + Eisen{a, b});
    return out;
}

}  // namespace

Pattern extract_pattern(const CoveringPatch& patch, Eisen center, WindowShape shape,
                        bool include_joins) {
    Pattern p;
    p.family = patch.family;
    p.shape = shape;
    if (shape.kind == ShapeKind::TripleHex && patch.family != Family::Gosper)
        throw std::invalid_argument("extract_pattern: TripleHex windows are for Gosper patches");

    std::unordered_set<Eisen, EisenHash> triple_hexes;
    if (patch.family == Family::Gosper) {
        std::unordered_set<Eisen, EisenHash> hexset;
        for (Eisen tile : patch.tiles)
            for (Eisen h : tile_hexagons(patch.tiling, patch.level, tile)) hexset.insert(h);
        if (shape.kind == ShapeKind::TripleHex) {
            if (tri_class(center) == 0)
                throw OutOfWindow("extract_pattern: TripleHex center must be a tiling vertex");
            for (Eisen h : hexagons_at_vertex(center)) {
                if (!hexset.count(h)) throw OutOfWindow("extract_pattern: window leaves the patch");
                triple_hexes.insert(h);
            }
        } else {
            int64_t reach = shape.kind == ShapeKind::Hex ? shape.r : hex_reach(shape.r);
            for (Eisen v : hex_window(center, reach + 2)) {
                Eisen h;
                if (exact_div(v, kTheta, h) && hex_dist(hex_center_fine(h) - center) <= reach + 2 &&
                    !hexset.count(h))
                    throw OutOfWindow("extract_pattern: window leaves the patch");
            }
        }
    } else {
        int64_t reach = shape.kind == ShapeKind::Hex ? shape.r : hex_reach(shape.r);
        if (hex_dist(center - patch.center) + reach > patch.radius)
            throw OutOfWindow("extract_pattern: window leaves the patch");
    }

    auto in_shape = [&](Eisen v) {
        Eisen d = v - center;
        switch (shape.kind) {
            case ShapeKind::Hex: return hex_dist(d) <= shape.r;
            case ShapeKind::Disc: return d.norm() <= shape.r * shape.r;
            default: return true;  // TripleHex handled per segment
        }
    };
    auto seg_in = [&](const EmbeddedCurve& c, size_t k) {
        if (shape.kind == ShapeKind::TripleHex) return triple_hexes.count(c.hexes[k]) > 0;
        return in_shape(c.vertices[k]) && in_shape(c.vertices[k + 1]);
    };

    for (const EmbeddedCurve& c : patch.curves)
        for (size_t k = 0; k < c.segments(); ++k) {
            if (!seg_in(c, k)) continue;
            p.edges.push_back({c.vertices[k] - center, c.vertices[k + 1] - center});
            if (include_joins && k > 0 && seg_in(c, k - 1))
                p.joins.push_back(
                    {c.vertices[k] - center, segment_dir(c, k - 1), segment_dir(c, k)});
        }
    std::sort(p.edges.begin(), p.edges.end());
    std::sort(p.joins.begin(), p.joins.end());
    return p;
}

bool patterns_equal(const Pattern& p, const Pattern& q) {
    if (p.family != q.family || !(p.shape == q.shape))
        throw ShapeMismatch("patterns_equal: different families or shapes");
    return p.edges == q.edges && p.joins == q.joins;
}

namespace {

// window contents around z serialized for hashing/dedup; matches what
// extract_pattern produces for a Hex window of radius r
std::vector<int64_t> serialize_window(const CurveIndex& ix, Eisen z, int64_t r,
                                      const std::vector<Eisen>& offsets, bool include_joins) {
    std::vector<int64_t> out;
    for (Eisen o : offsets) {
        Eisen v = z + o;
        for (int d = 0; d < 6; ++d) {
            if (hex_dist(o + step_vec(ix.family, d)) > r) continue;
            if (ix.edges.count({v, d})) {
                out.push_back(o.a);
                out.push_back(o.b);
                out.push_back(d);
            }
        }
    }
    if (include_joins) {
        out.push_back(INT64_MIN);  // separator
        for (Eisen o : offsets) {
            auto it = ix.joins.find(z + o);
            if (it == ix.joins.end()) continue;
            for (auto [din, dout] : it->second) {
                if (hex_dist(o - step_vec(ix.family, din)) > r) continue;
                if (hex_dist(o + step_vec(ix.family, dout)) > r) continue;
                out.push_back(o.a);
                out.push_back(o.b);
                out.push_back(din * 8 + dout);
            }
        }
    }
    return out;
}

size_t fnv(const std::vector<int64_t>& v) {
    size_t h = 1469598103934665603ull;
    for (int64_t x : v) {
        h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

struct Grid {  // square array indexed by (a, b) offsets around a center
    int64_t r;
    std::vector<int32_t> cells;
    explicit Grid(int64_t radius) : r(radius), cells((2 * radius + 1) * (2 * radius + 1), -1) {}
    int32_t& at(Eisen d) {
        return cells[static_cast<size_t>((d.a + r) * (2 * r + 1) + (d.b + r))];
    }
    bool inside(Eisen d) const { return std::abs(d.a) <= r && std::abs(d.b) <= r; }
};

}  // namespace

std::vector<LipRadiusReport> strong_lip_report(const CoveringPatch& patch,
                                               const std::vector<int64_t>& radii, int64_t s,
                                               int64_t t, bool include_joins) {
    if (patch.family != Family::Triangular)
        throw std::invalid_argument("strong_lip_report: triangular patches only");
    CurveIndex ix = build_index(patch);
    std::vector<LipRadiusReport> reports;
    for (int64_t r : radii) {
        LipRadiusReport rep;
        rep.r = r;
        rep.bound = r * s + t;
        rep.core_radius = patch.radius - rep.bound;
        if (rep.core_radius < 0 || rep.bound < r)
            throw WindowTooSmall("strong_lip_report: patch radius below r*s+t");
        int64_t zr = patch.radius - r;  // centers whose window stays inside

        std::vector<Eisen> offsets = hex_window({0, 0}, r);
        Grid classes(zr);
        std::vector<std::vector<int64_t>> reps_serial;
        std::vector<std::vector<Eisen>> occs;
        std::unordered_map<size_t, std::vector<int32_t>> by_hash;
        for (Eisen z : hex_window(patch.center, zr)) {
            auto serial = serialize_window(ix, z, r, offsets, include_joins);
            size_t h = fnv(serial);
            int32_t id = -1;
            for (int32_t cand : by_hash[h])
                if (reps_serial[static_cast<size_t>(cand)] == serial) id = cand;
            if (id < 0) {
                id = static_cast<int32_t>(reps_serial.size());
                reps_serial.push_back(std::move(serial));
                occs.emplace_back();
                by_hash[h].push_back(id);
            }
            classes.at(z - patch.center) = id;
            occs[static_cast<size_t>(id)].push_back(z);
            ++rep.centers;
        }
        rep.classes = reps_serial.size();

        // class by class: dilate its occurrences by the bound and look for
        // core centers left uncovered
        std::vector<Eisen> ball = hex_window({0, 0}, rep.bound);
        Grid covered(rep.core_radius);
        for (size_t cid = 0; cid < occs.size(); ++cid) {
            std::fill(covered.cells.begin(), covered.cells.end(), -1);
            for (Eisen z : occs[cid])
                for (Eisen d : ball) {
                    Eisen y = z - patch.center + d;
                    if (hex_dist(y) <= rep.core_radius) covered.at(y) = 1;
                }
            for (Eisen y : hex_window({0, 0}, rep.core_radius))
                if (covered.at(y) < 0) {
                    ++rep.failures;
                    if (!rep.first_failure) rep.first_failure = patch.center + y;
                }
        }
        reports.push_back(std::move(rep));
    }
    return reports;
}

AperiodicityReport aperiodicity_check(const CoveringPatch& patch, int64_t max_shift) {
    if (patch.radius < 2 * max_shift && patch.family == Family::Triangular)
        throw WindowTooSmall("aperiodicity_check: patch radius below twice the shift bound");
    std::vector<Eisen> shifts;
    int64_t amax = hex_reach(max_shift);
    for (int64_t a = -amax; a <= amax; ++a)
        for (int64_t b = -amax; b <= amax; ++b) {
            Eisen v{a, b};
            if (v.norm() > 0 && v.norm() <= max_shift * max_shift) shifts.push_back(v);
        }
    std::sort(shifts.begin(), shifts.end(), [](Eisen u, Eisen v) {
        return std::tuple(u.norm(), u.a, u.b) < std::tuple(v.norm(), v.a, v.b);
    });

    if (patch.family == Family::Triangular) {
        CurveIndex ix = build_index(patch);
        int64_t core = patch.radius - hex_reach(max_shift);
        std::vector<Eisen> anchors;  // vertices with passages, inside the core
        for (const auto& [v, list] : ix.joins) {
            (void)list;
            if (hex_dist(v - patch.center) <= core) anchors.push_back(v);
        }
        for (Eisen t : shifts) {
            bool period = true;
            for (Eisen v : anchors) {
                auto it = ix.joins.find(v + t);
                if (it == ix.joins.end() || it->second != ix.joins.at(v)) {
                    period = false;
                    break;
                }
            }
            if (period) return {false, t};
        }
        return {};
    }
    if (patch.family != Family::Gosper)
        throw std::invalid_argument("aperiodicity_check: triangular or Gosper patches only");

    std::unordered_set<Eisen, EisenHash> hexset;
    for (Eisen tile : patch.tiles)
        for (Eisen h : tile_hexagons(patch.tiling, patch.level, tile)) hexset.insert(h);
    // the overlap with a translate must span a good part of the patch, or a
    // coincidental match on a few rim hexagons would pass for a period
    int64_t lo[3] = {INT64_MAX, INT64_MAX, INT64_MAX}, hi[3] = {INT64_MIN, INT64_MIN, INT64_MIN};
    for (Eisen h : hexset) {
        int64_t c[3] = {h.a, h.b, h.a + h.b};
        for (int i = 0; i < 3; ++i) lo[i] = std::min(lo[i], c[i]), hi[i] = std::max(hi[i], c[i]);
    }
    int64_t diameter = std::max({hi[0] - lo[0], hi[1] - lo[1], hi[2] - lo[2]});
    int64_t reach = 0;
    for (Eisen u : shifts)
        if (3 * u.norm() <= max_shift * max_shift) reach = std::max(reach, hex_dist(u));
    if (2 * reach > diameter)
        throw WindowTooSmall("aperiodicity_check: patch diameter below twice the shift bound");
    std::unordered_set<EKey, EKeyHash> chords;
    for (const EmbeddedCurve& c : patch.curves)
        for (size_t k = 0; k < c.segments(); ++k) chords.insert({c.vertices[k], segment_dir(c, k)});
    for (Eisen u : shifts) {
        if (3 * u.norm() > max_shift * max_shift) continue;  // fine shift is theta*u
        bool period = true;
        size_t overlap = 0;
        for (const EmbeddedCurve& c : patch.curves) {
            for (size_t k = 0; k < c.segments() && period; ++k) {
                if (!hexset.count(c.hexes[k] + u)) continue;
                ++overlap;
                if (!chords.count({c.vertices[k] + kTheta * u, segment_dir(c, k)})) period = false;
            }
            if (!period) break;
        }
        if (period && overlap > 0) return {false, kTheta * u};
    }
    return {};
}

std::vector<Q0Config> config_census(const GosperTiling& t, const EmbeddedCurve& covering) {
    (void)t;
    std::unordered_map<Eisen, OrientedSide, EisenHash> chord_of;
    for (size_t k = 0; k < covering.segments(); ++k)
        chord_of.emplace(covering.hexes[k],
                         OrientedSide{covering.vertices[k], covering.vertices[k + 1]});

    std::unordered_set<Eisen, EisenHash> vertices;
    for (const auto& [h, chord] : chord_of) {
        (void)chord;
        for (int j = 0; j < 6; ++j) vertices.insert(hex_vertex(h, j));
    }

    std::set<Q0Config> classes;
    for (Eisen x : vertices) {
        auto around = hexagons_at_vertex(x);
        std::array<OrientedSide, 3> rel;
        bool complete = true;
        for (size_t i = 0; i < 3 && complete; ++i) {
            auto it = chord_of.find(around[i]);
            if (it == chord_of.end()) complete = false;
            else rel[i] = {it->second.from - x, it->second.to - x};
        }
        if (!complete) continue;
        // canonical form over 3 rotations x optional global reversal
        std::optional<Q0Config> best;
        for (int rot = 0; rot < 3; ++rot)
            for (int flip = 0; flip < 2; ++flip) {
                Eisen m = unit_dir(2 * rot);
                Q0Config cand;
                for (size_t i = 0; i < 3; ++i) {
                    Eisen f = m * rel[i].from, g = m * rel[i].to;
                    cand.chords[i] = flip ? OrientedSide{g, f} : OrientedSide{f, g};
                }
                std::sort(cand.chords.begin(), cand.chords.end());
                if (!best || cand < *best) best = cand;
            }
        classes.insert(*best);
    }
    return {classes.begin(), classes.end()};
}

bool local_iso_compare(const CoveringPatch& a, const CoveringPatch& b, int64_t radius,
                       bool include_joins) {
    auto class_set = [&](const CoveringPatch& p) {
        if (p.family != Family::Triangular)
            throw std::invalid_argument("local_iso_compare: triangular patches only");
        if (p.radius < radius + 1) throw WindowTooSmall("local_iso_compare: radius too large");
        CurveIndex ix = build_index(p);
        std::vector<Eisen> offsets = hex_window({0, 0}, radius);
        std::set<std::vector<int64_t>> out;
        for (Eisen z : hex_window(p.center, p.radius - radius))
            out.insert(serialize_window(ix, z, radius, offsets, include_joins));
        return out;
    };
    return class_set(a) == class_set(b);
}

}  // namespace planefold
