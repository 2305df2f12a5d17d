#include "planefold/coverings.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace planefold {

namespace {

// ---------------------------------------------------------------------------
// Triangular coverings. All level-k curves share the word T_{Lk}, so the
// covering is held as compact records keyed by (start, start dir); level k+1
// concatenates A + B + C where B starts at A's end turned 2*lambda and C at
// B's end turned back.
// ---------------------------------------------------------------------------

struct StartKey {
    Eisen v;
    int dir;
    friend bool operator==(const StartKey&, const StartKey&) = default;
};
struct StartKeyHash {
    size_t operator()(const StartKey& k) const {
        return EisenHash{}(k.v) * 31u + static_cast<size_t>(k.dir);
    }
};
struct Rec {
    Eisen end;
    int edir;
};
using RecMap = std::unordered_map<StartKey, Rec, StartKeyHash>;

bool divisible_by_theta_pow(Eisen v, int k) {
    Eisen q;
    return exact_div(v, theta_pow(k), q);
}

// Records of all level-n curves of C(signs, sub_anchor) whose construction
// fits inside H(center, work_radius); curves needing data past the rim are
// dropped, which only affects a band of width ~diameter near the rim.
RecMap build_records(const std::vector<int>& signs, Eisen sub_anchor, int orientation,
                     Eisen center, int64_t work_radius) {
    RecMap cur;
    for (int64_t a = -work_radius; a <= work_radius; ++a)
        for (int64_t b = -work_radius; b <= work_radius; ++b) {
            Eisen v = center + Eisen{a, b};
            if (hex_dist(v - center) > work_radius) continue;
            for (int j = orientation == 1 ? 0 : 1; j < 6; j += 2)
                cur.emplace(StartKey{v, j}, Rec{v + unit_dir(j), j});
        }
    for (size_t k = 0; k < signs.size(); ++k) {
        int lambda = signs[k];
        RecMap next;
        for (const auto& [key, A] : cur) {
            if (!divisible_by_theta_pow(key.v - sub_anchor, static_cast<int>(k) + 1)) continue;
            auto itB = cur.find({A.end, dir_mod6(A.edir + 2 * lambda)});
            if (itB == cur.end()) continue;
            const Rec& B = itB->second;
            auto itC = cur.find({B.end, dir_mod6(B.edir - 2 * lambda)});
            if (itC == cur.end()) continue;
            next.emplace(key, Rec{itC->second.end, itC->second.edir});
        }
        cur = std::move(next);
    }
    return cur;
}

int64_t work_margin(int n) {
    return static_cast<int64_t>(std::ceil(1.5 * rho_bound(std::max(n, 1)))) + n + 4;
}

CoveringPatch materialize_tri_patch(const std::vector<int>& signs, Eisen sub_anchor,
                                    int orientation, Eisen center, int64_t radius) {
    int n = static_cast<int>(signs.size());
    RecMap recs = build_records(signs, sub_anchor, orientation, center, radius + work_margin(n));
    TurnWord word = tri_fold_word(FoldSpec(Family::Triangular, signs));
    int64_t reach = static_cast<int64_t>(std::ceil(1.2 * rho_bound(std::max(n, 1)))) + 2;

    std::vector<StartKey> keys;
    for (const auto& [key, rec] : recs) {
        (void)rec;
        if (hex_dist(key.v - center) <= radius + reach) keys.push_back(key);
    }
    std::sort(keys.begin(), keys.end(), [](const StartKey& u, const StartKey& w) {
        return std::pair(u.v, u.dir) < std::pair(w.v, w.dir);
    });

    CoveringPatch p;
    p.family = Family::Triangular;
    p.signs = signs;
    p.center = center;
    p.radius = radius;
    p.orientation = orientation;
    for (const StartKey& key : keys) {
        EmbeddedCurve c = embed(word, Family::Triangular, key.v, key.dir);
        bool meets = false, outside = false;
        for (size_t i = 0; i + 1 < c.vertices.size(); ++i) {
            bool in0 = hex_dist(c.vertices[i] - center) <= radius;
            bool in1 = hex_dist(c.vertices[i + 1] - center) <= radius;
            meets = meets || (in0 && in1);
            outside = outside || !in0 || !in1;
        }
        if (!meets) continue;
        p.curves.push_back(std::move(c));
        p.truncated.push_back(outside);
    }
    return p;
}

}  // namespace

CoveringPatch build_tri_covering_patch(const std::vector<int>& signs, Eisen anchor,
                                       int orientation, int64_t radius) {
    if (orientation != 1 && orientation != 2)
        throw std::invalid_argument("build_tri_covering_patch: orientation must be 1 or 2");
    int n = static_cast<int>(signs.size());
    if (static_cast<double>(radius) < rho_bound(n))
        throw WindowTooSmall("build_tri_covering_patch: radius below the curve diameter bound");
    return materialize_tri_patch(signs, anchor, orientation, anchor, radius);
}

CoveringPatch connect_limit_patch(const std::vector<int>& signs,
                                  const std::vector<Eisen>& x_prefix, int alpha,
                                  int64_t radius) {
    int n = static_cast<int>(signs.size());
    if (x_prefix.size() != signs.size() + 1)
        throw InconsistentPrefix("connect_limit_patch: prefix needs one anchor per level");
    for (size_t k = 1; k + 1 < x_prefix.size(); ++k)
        if (!divisible_by_theta_pow(x_prefix[k + 1] - x_prefix[k], static_cast<int>(k)))
            throw InconsistentPrefix("connect_limit_patch: x_{k+1} is not in V_k(x_k)");
    Eisen x0 = x_prefix.front(), xn = x_prefix.back();
    bool constant_tail = x_prefix.size() >= 2 && xn == x_prefix[x_prefix.size() - 2];
    if (alpha == 0) {
        if (constant_tail)
            throw InconsistentPrefix("connect_limit_patch: alpha 0 needs a moving tail");
    } else if (alpha == 1 || alpha == -1) {
        if (!constant_tail)
            throw InconsistentPrefix("connect_limit_patch: alpha +- needs a constant tail");
    } else {
        throw std::invalid_argument("connect_limit_patch: alpha must be -1, 0 or +1");
    }
    if (static_cast<double>(radius) < rho_bound(n) || hex_dist(xn - x0) >= radius)
        throw WindowTooSmall("connect_limit_patch: window too small for the prefix");

    CoveringPatch p = materialize_tri_patch(signs, xn, 1, x0, radius);
    p.signs = signs;
    if (alpha == 0) return p;

    // merge the six curve germs at the connection point into three curves,
    // each incoming end continuing into the start turned 2*alpha
    p.connection_vertex = xn;
    std::vector<size_t> starters, enders;
    for (size_t i = 0; i < p.curves.size(); ++i) {
        if (p.curves[i].vertices.front() == xn) starters.push_back(i);
        if (p.curves[i].vertices.back() == xn) enders.push_back(i);
    }
    if (starters.size() != 3 || enders.size() != 3)
        throw std::logic_error("connect_limit_patch: expected six germs at the connection point");
    std::vector<EmbeddedCurve> merged;
    std::vector<bool> merged_trunc;
    for (size_t ei : enders) {
        const EmbeddedCurve& d = p.curves[ei];
        int din = segment_dir(d, d.segments() - 1);
        int want = dir_mod6(din + 2 * alpha);
        size_t si = SIZE_MAX;
        for (size_t s : starters)
            if (p.curves[s].start_dir == want) si = s;
        if (si == SIZE_MAX)
            throw std::logic_error("connect_limit_patch: no germ continues the incoming end");
        TurnWord w = d.word;
        w.push_back(alpha);
        w.insert(w.end(), p.curves[si].word.begin(), p.curves[si].word.end());
        EmbeddedCurve c = embed(w, Family::Triangular, d.start, d.start_dir);
        merged.push_back(std::move(c));
        merged_trunc.push_back(p.truncated[ei] || p.truncated[si]);
    }
    std::vector<EmbeddedCurve> curves;
    std::vector<bool> trunc;
    for (size_t i = 0; i < p.curves.size(); ++i) {
        if (p.curves[i].vertices.front() == xn || p.curves[i].vertices.back() == xn) continue;
        curves.push_back(std::move(p.curves[i]));
        trunc.push_back(p.truncated[i]);
    }
    for (size_t i = 0; i < merged.size(); ++i) {
        curves.push_back(std::move(merged[i]));
        trunc.push_back(merged_trunc[i]);
    }
    p.curves = std::move(curves);
    p.truncated = std::move(trunc);
    return p;
}

// ---------------------------------------------------------------------------
// Gosper tile coverings: Hamiltonian chord paths through 7 cells between W
// corners; levels above 1 solve the same 7-cell problem on child tiles and
// expand each macro chord into the child covering with matching endpoints.
// ---------------------------------------------------------------------------

namespace {

std::array<Eisen, 3> w_corners_of_cell(const GosperTiling& t, int level, Eisen c) {
    std::array<Eisen, 3> out;
    size_t n = 0;
    if (level == 0) return w_vertices_of_hexagon(c);
    for (Eisen v : tile_corners(t, level, c)) {
        if (w_class(v) == WClass::W) {
            if (n == 3) throw std::logic_error("tile has more than 3 W corners");
            out[n++] = v;
        }
    }
    if (n != 3) throw std::logic_error("tile has fewer than 3 W corners");
    return out;
}

struct CellPath {
    std::vector<Eisen> vertices;  // 8 fine vertices
    std::vector<int> cells;       // 7 indices into the cell array
};

// All paths using each cell exactly once, jumping between W corners within a
// cell, starting and ending at W corners of the parent.
std::vector<CellPath> solve_flower(const std::array<std::array<Eisen, 3>, 7>& corners,
                                   const std::array<Eisen, 3>& ends) {
    std::vector<CellPath> out;
    CellPath path;
    auto at_end = [&](Eisen v) { return v == ends[0] || v == ends[1] || v == ends[2]; };
    auto dfs = [&](auto&& self, Eisen v, unsigned used) -> void {
        if (used == 0x7f) {
            if (at_end(v)) out.push_back(path);
            return;
        }
        for (int i = 0; i < 7; ++i) {
            if (used & (1u << i)) continue;
            const auto& cs = corners[static_cast<size_t>(i)];
            if (cs[0] != v && cs[1] != v && cs[2] != v) continue;
            for (Eisen w : cs) {
                if (w == v) continue;
                path.vertices.push_back(w);
                path.cells.push_back(i);
                self(self, w, used | (1u << i));
                path.vertices.pop_back();
                path.cells.pop_back();
            }
        }
    };
    for (Eisen s : ends) {
        path.vertices = {s};
        path.cells = {};
        dfs(dfs, s, 0);
    }
    return out;
}

EmbeddedCurve curve_from_vertices(const std::vector<Eisen>& verts) {
    std::vector<int> dirs;
    for (size_t k = 0; k + 1 < verts.size(); ++k) {
        int j = dir_index_of(verts[k + 1] - verts[k], kTheta);
        if (j < 0) throw std::logic_error("gosper covering step is not a chord");
        dirs.push_back(j);
    }
    TurnWord word;
    for (size_t k = 0; k + 1 < dirs.size(); ++k) {
        int d = dir_mod6(dirs[k + 1] - dirs[k]);
        if (d == 3) throw std::logic_error("gosper covering doubles back");
        word.push_back(d <= 2 ? d : d - 6);
    }
    EmbeddedCurve c = embed(word, Family::Gosper, verts.front(), dirs.front());
    if (c.vertices != verts) throw std::logic_error("gosper covering re-embedding mismatch");
    return c;
}

std::vector<EmbeddedCurve> coverings_rec(const GosperTiling& t, int level_n, Eisen c) {
    auto kids = tile_children(t, level_n, c);
    std::array<std::array<Eisen, 3>, 7> corners;
    for (size_t i = 0; i < 7; ++i) corners[i] = w_corners_of_cell(t, level_n - 1, kids[i]);
    auto macro = solve_flower(corners, w_corners_of_cell(t, level_n, c));

    std::unordered_map<Eisen, std::vector<EmbeddedCurve>, EisenHash> sub;
    if (level_n >= 2)
        for (Eisen k : kids) sub.emplace(k, coverings_rec(t, level_n - 1, k));

    std::vector<EmbeddedCurve> out;
    for (const CellPath& mp : macro) {
        if (level_n == 1) {
            EmbeddedCurve c1 = curve_from_vertices(mp.vertices);
            for (size_t k = 0; k < 7; ++k)
                if (c1.hexes[k] != kids[static_cast<size_t>(mp.cells[k])])
                    throw std::logic_error("gosper covering hexagon mismatch");
            out.push_back(std::move(c1));
            continue;
        }
        std::vector<Eisen> verts{mp.vertices.front()};
        for (size_t k = 0; k < 7; ++k) {
            Eisen u = mp.vertices[k], w = mp.vertices[k + 1];
            const EmbeddedCurve* pick = nullptr;
            for (const EmbeddedCurve& sc : sub.at(kids[static_cast<size_t>(mp.cells[k])]))
                if (sc.vertices.front() == u && sc.vertices.back() == w) {
                    if (pick) throw std::logic_error("child covering for endpoint pair not unique");
                    pick = &sc;
                }
            if (!pick) throw std::logic_error("no child covering for endpoint pair");
            verts.insert(verts.end(), pick->vertices.begin() + 1, pick->vertices.end());
        }
        out.push_back(curve_from_vertices(verts));
    }
    std::sort(out.begin(), out.end(), [](const EmbeddedCurve& u, const EmbeddedCurve& w) {
        return std::pair(u.start, u.start_dir) < std::pair(w.start, w.start_dir);
    });
    return out;
}

bool same_nonoriented(const EmbeddedCurve& a, const EmbeddedCurve& b) {
    if (a.vertices == b.vertices) return true;
    std::vector<Eisen> rev(b.vertices.rbegin(), b.vertices.rend());
    return a.vertices == rev;
}

// canonical representative of an orientation-reversal pair
bool is_forward_rep(const EmbeddedCurve& c) {
    std::vector<Eisen> rev(c.vertices.rbegin(), c.vertices.rend());
    return c.vertices <= rev;
}

void validate_gosper_prefix(const GosperTiling& t, const std::vector<Eisen>& x_prefix) {
    if (x_prefix.empty()) throw InvalidPrefix("empty tile prefix");
    if (x_prefix.size() - 1 > t.signs.size())
        throw InvalidPrefix("tile prefix deeper than the tiling's sign list");
    for (size_t k = 1; k < x_prefix.size(); ++k) {
        Eisen q;
        if (!exact_div(x_prefix[k], t.Gamma(static_cast<int>(k)), q))
            throw InvalidPrefix("prefix entry is not a tile center of its level");
        auto kids = tile_children(t, static_cast<int>(k), x_prefix[k]);
        if (std::find(kids.begin(), kids.end(), x_prefix[k - 1]) == kids.end())
            throw InvalidPrefix("consecutive prefix tiles are not nested");
    }
}

}  // namespace

std::vector<EmbeddedCurve> gosper_tile_coverings(const GosperTiling& t, int level_n, Eisen c) {
    if (level_n < 1 || static_cast<size_t>(level_n) > t.signs.size())
        throw std::invalid_argument("gosper_tile_coverings: level out of range for the tiling");
    Eisen q;
    if (!exact_div(c, t.Gamma(level_n), q))
        throw std::invalid_argument("gosper_tile_coverings: c is not a level-n tile center");
    return coverings_rec(t, level_n, c);
}

EmbeddedCurve restrict_covering(const GosperTiling& t, const EmbeddedCurve& cov, int level_n,
                                Eisen parent, Eisen child) {
    auto kids = tile_children(t, level_n, parent);
    if (std::find(kids.begin(), kids.end(), child) == kids.end())
        throw NotAChild("restrict_covering: child is not a child of parent");
    size_t lo = SIZE_MAX, hi = 0;
    for (size_t k = 0; k < cov.hexes.size(); ++k)
        if (tile_of_hex(t, level_n - 1, cov.hexes[k]) == child) {
            lo = std::min(lo, k);
            hi = k;
        }
    if (lo == SIZE_MAX) throw std::invalid_argument("restrict_covering: covering misses the child");
    for (size_t k = lo; k <= hi; ++k)
        if (tile_of_hex(t, level_n - 1, cov.hexes[k]) != child)
            throw std::logic_error("restrict_covering: child segments are not contiguous");
    std::vector<Eisen> verts(cov.vertices.begin() + static_cast<ptrdiff_t>(lo),
                             cov.vertices.begin() + static_cast<ptrdiff_t>(hi) + 2);
    return curve_from_vertices(verts);
}

std::vector<EmbeddedCurve> enumerate_extensions(const GosperTiling& t, const EmbeddedCurve& cov,
                                                int level_n, Eisen parent, Eisen child) {
    std::vector<EmbeddedCurve> out;
    for (EmbeddedCurve& big : gosper_tile_coverings(t, level_n, parent)) {
        if (!is_forward_rep(big)) continue;  // one orientation per covering
        EmbeddedCurve r = restrict_covering(t, big, level_n, parent, child);
        if (same_nonoriented(r, cov)) out.push_back(std::move(big));
    }
    return out;
}

RegionReport classify_regions(const GosperTiling& t, const std::vector<Eisen>& x_prefix, int depth) {
    validate_gosper_prefix(t, x_prefix);
    if (depth < 1 || static_cast<size_t>(depth) > x_prefix.size() - 1)
        throw InvalidPrefix("classify_regions: depth outside the prefix");
    RegionReport rep;
    rep.depth = depth;
    rep.constant_tail = true;
    for (int k = 1; k <= depth; ++k)
        if (x_prefix[static_cast<size_t>(k)] != x_prefix[static_cast<size_t>(k - 1)])
            rep.constant_tail = false;

    std::array<bool, 6> side_alive, vertex_alive;
    side_alive.fill(true);
    vertex_alive.fill(true);
    bool interior_at_depth = false;
    Eisen x0 = x_prefix.front();
    for (int k = 1; k <= depth; ++k) {
        TileBoundary b = tile_boundary(t, k, x_prefix[static_cast<size_t>(k)]);
        std::unordered_set<Eisen, EisenHash> bverts(b.walk.begin(), b.walk.end());
        std::unordered_set<Eisen, EisenHash> bcorners;
        for (size_t at : b.corner_at) bcorners.insert(b.walk[at]);
        std::set<std::pair<Eisen, Eisen>> bsides;
        for (size_t i = 0; i + 1 < b.walk.size(); ++i) {
            Eisen u = b.walk[i], v = b.walk[i + 1];
            bsides.insert(u < v ? std::pair(u, v) : std::pair(v, u));
        }
        bool any_vertex = false;
        for (int j = 0; j < 6; ++j) {
            Eisen u = hex_vertex(x0, j), v = hex_vertex(x0, j + 1);
            if (!bsides.count(u < v ? std::pair(u, v) : std::pair(v, u)))
                side_alive[static_cast<size_t>(j)] = false;
            if (!bcorners.count(u)) vertex_alive[static_cast<size_t>(j)] = false;
            any_vertex = any_vertex || bverts.count(u);
        }
        if (k == depth) interior_at_depth = !any_vertex;
    }
    for (bool s : side_alive) rep.side_persists = rep.side_persists || s;
    for (bool v : vertex_alive) rep.vertex_persists = rep.vertex_persists || v;
    if (rep.vertex_persists)
        rep.count = RegionCount::Three;
    else if (rep.side_persists)
        rep.count = RegionCount::TwoOrThree;
    else if (interior_at_depth)
        rep.count = RegionCount::One;
    else
        rep.count = RegionCount::Undetermined;
    return rep;
}

GosperAssembly assemble_gosper_covering_patch(const GosperTiling& t,
                                              const std::vector<Eisen>& x_prefix, int depth) {
    validate_gosper_prefix(t, x_prefix);
    if (depth < 1 || static_cast<size_t>(depth) > x_prefix.size() - 1)
        throw InvalidPrefix("assemble_gosper_covering_patch: depth outside the prefix");
    Eisen top = x_prefix[static_cast<size_t>(depth)];
    auto covs = gosper_tile_coverings(t, depth, top);

    // how many distinct coverings of the level-1 tile remain reachable by
    // restricting the coverings of the level-depth tile down the prefix chain
    std::vector<EmbeddedCurve> base;
    for (const EmbeddedCurve& cov : covs) {
        if (!is_forward_rep(cov)) continue;
        EmbeddedCurve cur = cov;
        for (int k = depth; k >= 2; --k)
            cur = restrict_covering(t, cur, k, x_prefix[static_cast<size_t>(k)],
                                    x_prefix[static_cast<size_t>(k - 1)]);
        bool fresh = true;
        for (const EmbeddedCurve& seen : base)
            if (same_nonoriented(cur, seen)) fresh = false;
        if (fresh) base.push_back(std::move(cur));
    }

    GosperAssembly out;
    out.completion_count = static_cast<int>(base.size());
    out.patch.family = Family::Gosper;
    out.patch.signs = t.signs;
    out.patch.tiling = t;
    out.patch.level = depth;
    out.patch.tiles = {top};
    out.patch.curves = {covs.front()};
    out.patch.truncated = {false};
    return out;
}

PropertyP check_property_P(const CoveringPatch& patch) {
    PropertyP res;
    if (patch.family == Family::Triangular) {
        // one rotation class throughout the patch
        std::optional<int> cls;
        size_t ref_curve = 0, ref_seg = 0;
        for (size_t i = 0; i < patch.curves.size(); ++i)
            for (size_t k = 0; k < patch.curves[i].segments(); ++k) {
                int c = segment_dir(patch.curves[i], k) % 2 == 0 ? 1 : 2;
                if (!cls) {
                    cls = c;
                    ref_curve = i;
                    ref_seg = k;
                } else if (c != *cls) {
                    return {false, ref_curve, ref_seg, i, k};
                }
            }
        return res;
    }
    if (patch.family != Family::Gosper)
        throw std::invalid_argument("check_property_P: triangular or Gosper patches only");
    // opposite sides of a rhombus (parallel chords at distance sqrt 3) must
    // carry opposite orientations: no equal directed chord one rhombus over
    std::unordered_map<StartKey, std::pair<size_t, size_t>, StartKeyHash> directed;
    for (size_t i = 0; i < patch.curves.size(); ++i)
        for (size_t k = 0; k < patch.curves[i].segments(); ++k)
            directed.emplace(StartKey{patch.curves[i].vertices[k], segment_dir(patch.curves[i], k)},
                             std::pair(i, k));
    for (const auto& [key, where] : directed) {
        for (int j = 0; j < 6; ++j) {
            if (j == key.dir || j == dir_mod6(key.dir + 3)) continue;  // collinear shift
            auto it = directed.find({key.v + kTheta * unit_dir(j), key.dir});
            if (it != directed.end())
                return {false, where.first, where.second, it->second.first, it->second.second};
        }
    }
    return res;
}

}  // namespace planefold
