#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "planefold/eisen.hpp"

namespace planefold {

// ---------------------------------------------------------------------------
// Triangular lattice: vertices are Eisen points with unit side length.
// ---------------------------------------------------------------------------

using TriVertex = Eisen;

struct OrientedSide {
    Eisen from;
    Eisen to;
    friend bool operator==(const OrientedSide&, const OrientedSide&) = default;
    friend auto operator<=>(const OrientedSide&, const OrientedSide&) = default;
};

// theta = 1 + t, norm 3: V_k(x) = x + theta^k * Z[t] is the nested index-3
// hexagonal sublattice hierarchy; W_k = V_{k-1} \ V_k are the hexagon vertices
// around the V_k centers.
inline constexpr Eisen kTheta{1, 1};

inline Eisen theta_pow(int k) {
    Eisen p{1, 0};
    while (k-- > 0) p = p * kTheta;
    return p;
}

// Ring class of a vertex in V_0 relative to V_1(0): (a - b) mod 3.
// Class 0 = V_1 centers; classes 1 and 2 = the two rings of W_1.
inline int tri_class(Eisen v) { return static_cast<int>(((v.a - v.b) % 3 + 3) % 3); }

enum class SubMember { InV, InW };

struct NotInParent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SublatticeLevel {
    Eisen anchor;
    int level = 1;  // >= 1
};

SubMember sublattice_member(Eisen v, SublatticeLevel lvl);

// Rotation class of an oriented side: 1 if its direction index is even,
// 2 if odd. Class-1 sides run counterclockwise around every upward triangle.
int side_class(const OrientedSide& s);

// ---------------------------------------------------------------------------
// Hexagonal tiling: hexagons of side 1 on the fine lattice Z[t]. A hexagon is
// identified by its center coordinate c (the fine center is theta*c), so
// hexagon centers form their own copy of Z[t]; neighbors differ by t^j.
// Fine vertices of hexagon c are theta*c + t^j, j = 0..5.
// ---------------------------------------------------------------------------

inline Eisen hex_center_fine(Eisen c) { return kTheta * c; }
inline Eisen hex_vertex(Eisen c, int j) { return kTheta * c + unit_dir(j); }

enum class WClass { W, NotW };

// Vertex bipartition: fine points split into hexagon centers (class 0) and the
// two vertex classes 1, 2; the class-1 vertices are W (fixed choice).
WClass w_class(Eisen fine_vertex);

// The 3 hexagons (center coords) around a vertex of the hexagonal tiling.
std::array<Eisen, 3> hexagons_at_vertex(Eisen fine_vertex);

// The W-vertices of hexagon c.
std::array<Eisen, 3> w_vertices_of_hexagon(Eisen c);

// ---------------------------------------------------------------------------
// Gosper substitution tiles. A level-m tile is a union of 7 level-(m-1) tiles,
// one central; the per-level chirality sign picks one of the two norm-7 center
// multipliers. All coordinates below are hexagon center coords; the tiling is
// anchored at center 0.
// ---------------------------------------------------------------------------

// Chirality multipliers, norm 7; which one "+" denotes is fixed by the
// boundary convention (first unit side of a macro side lies right of it).
extern const Eisen kGammaPlus;
extern const Eisen kGammaMinus;

inline Eisen gamma_of(int sign) { return sign > 0 ? kGammaPlus : kGammaMinus; }

struct GosperTiling {
    std::vector<int> signs;  // lambda_1 ... lambda_n, innermost first

    // Product gamma_{l1} ... gamma_{lm}: level-m tile centers are Gamma_m*Z[t].
    Eisen Gamma(int m) const;
};

struct GosperAddress {
    Eisen base;               // center of the level-n tile, n = digits.size()
    std::vector<int> digits;  // d_1..d_n, d_i in 0..6: child choice at level i
};

// Children of the level-m tile centered c: the central one plus the 6 ring
// tiles, in digit order 0,1..6 (ring counterclockwise from direction 0).
std::array<Eisen, 7> tile_children(const GosperTiling& t, int level_m, Eisen c);

// All 7^m hexagons of the tile.
std::vector<Eisen> tile_hexagons(const GosperTiling& t, int level_m, Eisen c);

// Center of the level-m tile containing hexagon h.
Eisen tile_of_hex(const GosperTiling& t, int level_m, Eisen h);

// digits <-> center round trip for the tile hierarchy below a level-n base.
Eisen address_center(const GosperTiling& t, const GosperAddress& a);
GosperAddress address_of_hex(const GosperTiling& t, int level_n, Eisen h);

// The 6 corner vertices (fine coords) of the level-m tile centered c, indexed
// so that corner j is shared with the neighbor tiles at c + Gamma_m*t^j and
// c + Gamma_m*t^{j-1}.
std::array<Eisen, 6> tile_corners(const GosperTiling& t, int level_m, Eisen c);

// Boundary of the tile as a counterclockwise cyclic vertex walk starting and
// ending at corner 0, plus the positions of the 6 corners in the walk; each
// macro side (corner to corner) consists of 3^m unit hexagon sides.
struct TileBoundary {
    std::vector<Eisen> walk;          // fine vertices, walk.front() == walk.back()
    std::array<size_t, 6> corner_at;  // index in walk of corner j
};
TileBoundary tile_boundary(const GosperTiling& t, int level_m, Eisen c);

}  // namespace planefold
