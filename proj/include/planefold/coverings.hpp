#pragma once

#include <optional>

#include "planefold/curves.hpp"

namespace planefold {

// A finite patch of a plane covering: full curves meeting an explicit window.
//  - Triangular: window is the hexagon H(center, radius); curves are level-n
//    folding curves (or merged limit curves), each used side covered once.
//  - Gosper: window is a union of tiles of the given tiling.
struct CoveringPatch {
    Family family = Family::Triangular;
    std::vector<int> signs;

    // triangular window
    Eisen center{0, 0};
    int64_t radius = 0;
    int orientation = 1;  // rotation class of the segments (1 or 2)

    // gosper window
    GosperTiling tiling;
    int level = 0;
    std::vector<Eisen> tiles;

    std::vector<EmbeddedCurve> curves;
    std::vector<bool> truncated;
    std::optional<Eisen> connection_vertex;  // merge point of a +/- limit patch
};

struct InconsistentPrefix : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidPrefix : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotAChild : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All curves of the level-n covering C(signs, anchor) with at least one side
// inside H(anchor, radius); orientation picks the rotation class of segments.
CoveringPatch build_tri_covering_patch(const std::vector<int>& signs, Eisen anchor,
                                       int orientation, int64_t radius);

// Finite patch of a limit covering. The X-prefix lists anchors x_0..x_n with
// x_{k+1} in V_k(x_k). alpha = +1/-1 requires a constant tail (x_n == x_{n-1})
// and merges the six curve germs at x_n into 3 curves turning left (right) at
// the merge point; alpha = 0 requires a moving tail and performs no merge.
CoveringPatch connect_limit_patch(const std::vector<int>& signs,
                                  const std::vector<Eisen>& x_prefix, int alpha,
                                  int64_t radius);

// The 6 oriented coverings of the level-n tile centered c: Hamiltonian cell
// paths, one chord per hexagon, whose endpoints are the tile's 3 W corners.
// Deterministic order: by (start vertex, start direction).
std::vector<EmbeddedCurve> gosper_tile_coverings(const GosperTiling& t, int level_n, Eisen c);

// Restriction of a covering of the level-n tile `parent` to its child tile
// (level n-1) centered `child`: the contiguous run of segments hosted there.
EmbeddedCurve restrict_covering(const GosperTiling& t, const EmbeddedCurve& cov, int level_n,
                                Eisen parent, Eisen child);

// Coverings of `parent` whose restriction to the child equals cov, where two
// coverings are identified when they are orientation-reversals.
std::vector<EmbeddedCurve> enumerate_extensions(const GosperTiling& t, const EmbeddedCurve& cov,
                                                int level_n, Eisen parent, Eisen child);

enum class RegionCount { One, TwoOrThree, Three, Undetermined };

struct RegionReport {
    int depth = 0;
    bool constant_tail = false;     // nested tiles exhaust the plane
    bool side_persists = false;     // a side of the base hexagon stays on every rim
    bool vertex_persists = false;   // a corner of the base hexagon stays a tile corner
    RegionCount count = RegionCount::Undetermined;
};

// Tracks the base hexagon x_prefix[0] through the nested tiles selected by
// x_prefix and reports which region-count certificate persists to `depth`.
RegionReport classify_regions(const GosperTiling& t, const std::vector<Eisen>& x_prefix, int depth);

struct GosperAssembly {
    CoveringPatch patch;       // one covering of the depth-n tile
    int completion_count = 0;  // distinct base-tile coverings extendable to depth n
};

// Builds a covering of the level-`depth` tile of the prefix and counts how
// many of the nonoriented coverings of the base tile x_prefix[0]'s level-1
// tile survive extension chains up to that depth.
GosperAssembly assemble_gosper_covering_patch(const GosperTiling& t,
                                              const std::vector<Eisen>& x_prefix, int depth);

struct PropertyP {
    bool ok = true;
    // offending pair of segments (curve index, segment index) when !ok
    size_t curve_a = 0, seg_a = 0, curve_b = 0, seg_b = 0;
};

// Orientation coherence: tri patches keep one rotation class; Gosper patches
// give opposite orientations to opposite sides of every rhombus.
PropertyP check_property_P(const CoveringPatch& patch);

}  // namespace planefold
