#pragma once

#include "planefold/coverings.hpp"

namespace planefold {

// Window shapes for pattern extraction: hexagon H(center, r) in hex distance,
// Euclidean disc of radius r, or the union of the 3 hexagonal tiles around a
// vertex (Gosper patches only).
enum class ShapeKind { Hex, Disc, TripleHex };
struct WindowShape {
    ShapeKind kind = ShapeKind::Hex;
    int64_t r = 0;
    friend bool operator==(const WindowShape&, const WindowShape&) = default;
};

struct PatternEdge {
    Eisen from, to;  // anchor-relative
    friend bool operator==(const PatternEdge&, const PatternEdge&) = default;
    friend auto operator<=>(const PatternEdge&, const PatternEdge&) = default;
};

// A curve passage: incoming and outgoing segment directions at a vertex.
struct PatternJoin {
    Eisen at;  // anchor-relative
    int din = 0, dout = 0;
    friend bool operator==(const PatternJoin&, const PatternJoin&) = default;
    friend auto operator<=>(const PatternJoin&, const PatternJoin&) = default;
};

// Translation-anchored window contents: the oriented edges, plus (optionally)
// the passages telling which consecutive edge pairs belong to one curve.
struct Pattern {
    Family family = Family::Triangular;
    WindowShape shape;
    std::vector<PatternEdge> edges;  // sorted
    std::vector<PatternJoin> joins;  // sorted; empty unless requested
};

struct OutOfWindow : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ShapeMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Pattern extract_pattern(const CoveringPatch& patch, Eisen center, WindowShape shape,
                        bool include_joins = false);

// True iff some translation maps p onto q exactly (they are stored
// anchor-relative, so this is plain equality of the canonical lists).
bool patterns_equal(const Pattern& p, const Pattern& q);

struct LipRadiusReport {
    int64_t r = 0;
    int64_t bound = 0;        // r*s + t
    int64_t core_radius = 0;  // centers y range over H(patch.center, core_radius)
    size_t centers = 0;       // window centers z examined
    size_t classes = 0;       // distinct patterns among them
    size_t failures = 0;      // (class, y) pairs with no copy in H(y, bound)
    std::optional<Eisen> first_failure;
};

// For each radius r: every pattern H(z, r) occurring in the safe core must
// recur with a copy centered in H(y, r*s + t) for every core center y.
std::vector<LipRadiusReport> strong_lip_report(const CoveringPatch& patch,
                                               const std::vector<int64_t>& radii, int64_t s,
                                               int64_t t, bool include_joins = false);

struct AperiodicityReport {
    bool ok = true;
    Eisen period{0, 0};  // smallest offending shift when !ok
};

// Looks for a nonzero translation of Euclidean length <= max_shift mapping
// the patch's curve structure (edges and passages) into itself on the region
// where both are defined.
AperiodicityReport aperiodicity_check(const CoveringPatch& patch, int64_t max_shift);

// Configuration of a covering on the 3 hexagons around a vertex, canonical
// modulo translation, rotation by 2k*pi/3 and global orientation reversal.
struct Q0Config {
    std::array<OrientedSide, 3> chords;  // vertex-relative, sorted
    friend bool operator==(const Q0Config&, const Q0Config&) = default;
    friend auto operator<=>(const Q0Config&, const Q0Config&) = default;
};

std::vector<Q0Config> config_census(const GosperTiling& t, const EmbeddedCurve& covering);

// True iff the r-patterns occurring in a's core and in b's core coincide.
bool local_iso_compare(const CoveringPatch& a, const CoveringPatch& b, int64_t radius,
                       bool include_joins = false);

}  // namespace planefold
