#pragma once

#include <optional>
#include <vector>

#include "planefold/lattice.hpp"
#include "planefold/words.hpp"

namespace planefold {

// A lattice realization of a turn word.
//  - Square: vertices on the integer grid (pair reused from Eisen, 4 dirs).
//  - Triangular: vertices on Z[t], 6 directions, turns of +-120 degrees.
//  - Gosper: vertices are W-vertices of the hexagonal tiling; each segment is
//    the W-to-W chord of one hexagon (direction theta*t^j, length sqrt(3));
//    hexes[k] is the hexagon hosting segment k.
struct EmbeddedCurve {
    Family family = Family::Triangular;
    Eisen start{0, 0};
    int start_dir = 0;
    TurnWord word;
    std::vector<Eisen> vertices;
    std::vector<Eisen> hexes;  // Gosper only

    size_t segments() const { return vertices.size() - 1; }
};

EmbeddedCurve embed(const TurnWord& word, Family family, Eisen start, int start_dir);

// Direction index of segment k (mod 4 for square, mod 6 otherwise).
int segment_dir(const EmbeddedCurve& c, size_t k);

struct SelfAvoidance {
    bool ok = true;
    size_t first = 0, second = 0;  // colliding segment indices when !ok
};

// Square/tri: no undirected edge/side used twice; Gosper: no hexagon hosts
// two segments.
SelfAvoidance is_self_avoiding(const EmbeddedCurve& c);

struct NotFoldingCurve : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Left/right boundary paths of a triangular folding curve. Both run from the
// curve's initial to its terminal point, with 2^n unit sides each and turns
// of +-60 degrees at interior vertices.
struct Frontier {
    std::vector<Eisen> left, right;  // x_i, y_i
    TurnWord alpha, beta;            // +-1 per interior vertex
};

Frontier frontier(const EmbeddedCurve& c);

// Recovers the sign sequence from a triangular folding word, or nullopt.
std::optional<std::vector<int>> tri_signs_of_word(const TurnWord& w);

// Searches for a k-triangle in which every side of every unit triangle is the
// support of a segment of c.
struct TriangleCover {
    bool ok = false;
    Eisen corner{0, 0};
    bool upward = true;
};
TriangleCover covers_k_triangle(const EmbeddedCurve& c, int k);

// Maximum pairwise distance over vertices; exact squared value plus a double.
struct Diameter {
    int64_t norm2 = 0;
    double value = 0.0;
};
Diameter curve_diameter(const EmbeddedCurve& c);

// Diameter bound rho_n = ((sqrt3)^{n-1}(4-sqrt3) - 1)/(sqrt3 - 1), rho_1 = sqrt3.
double rho_bound(int n);

// Macro-curve obtained by replacing each block of 3 (tri) or 7 (Gosper)
// segments with one segment. Tri: result is on Z[t] again (renormalized by
// the anchored division by theta). Gosper: result is an embedded curve on the
// macro hexagon lattice of the derived tiling (tiling signs shifted by one).
EmbeddedCurve derive_geometric(const EmbeddedCurve& c);
EmbeddedCurve derive_geometric_gosper(const EmbeddedCurve& c, const GosperTiling& t);

// Distances d(D^k(p), D^k(c)) for k = 0..depth under the unit-length
// renormalization anchored at the curve start; drops below 3/4 and stays.
std::vector<double> contraction_check(const EmbeddedCurve& c, double px, double py, int depth);

}  // namespace planefold
