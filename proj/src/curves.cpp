#include "planefold/curves.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <unordered_map>
#include <unordered_set>

namespace planefold {

namespace {

constexpr std::array<Eisen, 4> kSquareDirs = {{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};

// For a Gosper chord in direction theta*t^j, the hexagon hosting it has its
// center at (start - w1[j]) / theta.
const std::array<Eisen, 6> kChordW1 = {{
    unit_dir(4), unit_dir(4), unit_dir(0), unit_dir(0), unit_dir(2), unit_dir(2),
}};

Eisen gosper_chord_hex(Eisen from, int dir) {
    Eisen c;
    if (!exact_div(from - kChordW1[static_cast<size_t>(dir_mod6(dir))], kTheta, c))
        throw std::logic_error("gosper chord does not start on a W vertex");
    return c;
}

}  // namespace

EmbeddedCurve embed(const TurnWord& word, Family family, Eisen start, int start_dir) {
    EmbeddedCurve c;
    c.family = family;
    c.start = start;
    c.word = word;
    c.vertices.push_back(start);
    if (family == Family::Square) {
        int dir = ((start_dir % 4) + 4) % 4;
        c.start_dir = dir;
        Eisen p = start;
        for (size_t k = 0; k <= word.size(); ++k) {
            p += kSquareDirs[static_cast<size_t>(dir)];
            c.vertices.push_back(p);
            if (k < word.size()) dir = ((dir + word[k]) % 4 + 4) % 4;
        }
        return c;
    }
    int dir = dir_mod6(start_dir);
    c.start_dir = dir;
    if (family == Family::Gosper && tri_class(start) != 1)
        throw std::invalid_argument("embed: Gosper curves start on W vertices");
    Eisen p = start;
    for (size_t k = 0; k <= word.size(); ++k) {
        if (family == Family::Triangular) {
            p += unit_dir(dir);
        } else {
            c.hexes.push_back(gosper_chord_hex(p, dir));
            p += kTheta * unit_dir(dir);
        }
        c.vertices.push_back(p);
        if (k < word.size()) dir = dir_mod6(dir + (family == Family::Triangular ? 2 * word[k] : word[k]));
    }
    return c;
}

int segment_dir(const EmbeddedCurve& c, size_t k) {
    Eisen d = c.vertices[k + 1] - c.vertices[k];
    if (c.family == Family::Square) {
        for (int j = 0; j < 4; ++j)
            if (kSquareDirs[static_cast<size_t>(j)] == d) return j;
        throw std::logic_error("segment_dir: not a unit square step");
    }
    Eisen ref = (c.family == Family::Triangular) ? Eisen{1, 0} : kTheta;
    int j = dir_index_of(d, ref);
    if (j < 0) throw std::logic_error("segment_dir: not a unit lattice step");
    return j;
}

namespace {

struct SideKey {
    Eisen a, b;
    friend bool operator==(const SideKey&, const SideKey&) = default;
};
SideKey norm_side(Eisen p, Eisen q) { return p < q ? SideKey{p, q} : SideKey{q, p}; }
struct SideKeyHash {
    size_t operator()(const SideKey& s) const {
        return EisenHash{}(s.a) * 1000003u ^ EisenHash{}(s.b);
    }
};

}  // namespace

SelfAvoidance is_self_avoiding(const EmbeddedCurve& c) {
    if (c.family == Family::Gosper) {
        std::unordered_map<Eisen, size_t, EisenHash> seen;
        for (size_t k = 0; k < c.hexes.size(); ++k) {
            auto [it, fresh] = seen.emplace(c.hexes[k], k);
            if (!fresh) return {false, it->second, k};
        }
        return {};
    }
    std::unordered_map<SideKey, size_t, SideKeyHash> seen;
    for (size_t k = 0; k + 1 < c.vertices.size(); ++k) {
        auto [it, fresh] = seen.emplace(norm_side(c.vertices[k], c.vertices[k + 1]), k);
        if (!fresh) return {false, it->second, k};
    }
    return {};
}

std::optional<std::vector<int>> tri_signs_of_word(const TurnWord& w) {
    int n = 0;
    int64_t len = 1;
    while (len - 1 < static_cast<int64_t>(w.size())) {
        len *= 3;
        ++n;
    }
    if (len - 1 != static_cast<int64_t>(w.size())) return std::nullopt;
    std::vector<int> signs;
    int64_t pos = 1;
    for (int k = 1; k <= n; ++k) {
        signs.push_back(w[static_cast<size_t>(pos - 1)]);
        pos *= 3;
    }
    if (tri_fold_word(FoldSpec(Family::Triangular, signs)) != w) return std::nullopt;
    return signs;
}

namespace {

struct FrontierPaths {
    std::vector<Eisen> left, right;
};

// Concatenate two frontier pieces sharing their junction vertex.
void join(std::vector<Eisen>& acc, const std::vector<Eisen>& piece) {
    if (acc.empty()) {
        acc = piece;
        return;
    }
    if (acc.back() != piece.front()) throw std::logic_error("frontier pieces do not meet");
    acc.insert(acc.end(), piece.begin() + 1, piece.end());
}

std::vector<Eisen> lower_half(const std::vector<Eisen>& v) {
    return {v.begin(), v.begin() + static_cast<ptrdiff_t>(v.size() / 2) + 1};
}
std::vector<Eisen> upper_half(const std::vector<Eisen>& v) {
    return {v.begin() + static_cast<ptrdiff_t>(v.size() / 2), v.end()};
}

FrontierPaths frontier_rec(const std::vector<Eisen>& verts, size_t lo, int n,
                           const std::vector<int>& signs) {
    if (n == 1) {
        Eisen v0 = verts[lo], v1 = verts[lo + 1], v2 = verts[lo + 2], v3 = verts[lo + 3];
        if (signs[0] > 0) return {{v0, v2, v3}, {v0, v1, v3}};
        return {{v0, v1, v3}, {v0, v2, v3}};
    }
    size_t third = static_cast<size_t>(ipow(3, n - 1));
    FrontierPaths I = frontier_rec(verts, lo, n - 1, signs);
    FrontierPaths M = frontier_rec(verts, lo + third, n - 1, signs);
    FrontierPaths S = frontier_rec(verts, lo + 2 * third, n - 1, signs);
    int lambda = signs[static_cast<size_t>(n - 1)];
    FrontierPaths out;
    if (lambda > 0) {
        join(out.left, lower_half(I.left));
        join(out.left, upper_half(M.left));
        join(out.left, S.left);
        join(out.right, I.right);
        join(out.right, lower_half(M.right));
        join(out.right, upper_half(S.right));
    } else {
        join(out.left, I.left);
        join(out.left, lower_half(M.left));
        join(out.left, upper_half(S.left));
        join(out.right, lower_half(I.right));
        join(out.right, upper_half(M.right));
        join(out.right, S.right);
    }
    return out;
}

TurnWord path_turns(const std::vector<Eisen>& v) {
    TurnWord t;
    for (size_t i = 1; i + 1 < v.size(); ++i) {
        int din = dir_index_of(v[i] - v[i - 1], {1, 0});
        int dout = dir_index_of(v[i + 1] - v[i], {1, 0});
        if (din < 0 || dout < 0) throw std::logic_error("frontier path leaves the lattice");
        int d = dir_mod6(dout - din);
        if (d == 1) t.push_back(+1);
        else if (d == 5) t.push_back(-1);
        else throw std::logic_error("frontier path turn is not +-60 degrees");
    }
    return t;
}

}  // namespace

Frontier frontier(const EmbeddedCurve& c) {
    if (c.family != Family::Triangular)
        throw std::invalid_argument("frontier: triangular curves only");
    auto signs = tri_signs_of_word(c.word);
    if (!signs || signs->empty()) throw NotFoldingCurve("frontier: word is not a folding word");
    FrontierPaths p = frontier_rec(c.vertices, 0, static_cast<int>(signs->size()), *signs);
    Frontier f;
    f.left = std::move(p.left);
    f.right = std::move(p.right);
    if (f.left.front() != c.vertices.front() || f.left.back() != c.vertices.back() ||
        f.right.front() != c.vertices.front() || f.right.back() != c.vertices.back())
        throw std::logic_error("frontier endpoints mismatch");
    f.alpha = path_turns(f.left);
    f.beta = path_turns(f.right);
    return f;
}

TriangleCover covers_k_triangle(const EmbeddedCurve& c, int k) {
    if (c.family != Family::Triangular)
        throw std::invalid_argument("covers_k_triangle: triangular curves only");
    std::unordered_set<SideKey, SideKeyHash> sides;
    int64_t min_a = c.vertices[0].a, max_a = min_a, min_b = c.vertices[0].b, max_b = min_b;
    for (size_t i = 0; i + 1 < c.vertices.size(); ++i) {
        sides.insert(norm_side(c.vertices[i], c.vertices[i + 1]));
        min_a = std::min(min_a, c.vertices[i].a);
        max_a = std::max(max_a, c.vertices[i].a);
        min_b = std::min(min_b, c.vertices[i].b);
        max_b = std::max(max_b, c.vertices[i].b);
    }
    for (int up = 1; up >= 0; --up) {
        Eisen d1 = up ? unit_dir(0) : unit_dir(3);
        Eisen d2 = up ? unit_dir(1) : unit_dir(4);
        for (int64_t za = min_a - k - 1; za <= max_a + k + 1; ++za)
            for (int64_t zb = min_b - k - 1; zb <= max_b + k + 1; ++zb) {
                Eisen z{za, zb};
                auto pt = [&](int64_t a, int64_t b) { return z + a * d1 + b * d2; };
                // every side of every unit triangle inside the k-triangle
                bool all = true;
                for (int64_t a = 0; all && a <= k - 1; ++a)
                    for (int64_t b = 0; all && a + b <= k - 1; ++b) {
                        if (!sides.count(norm_side(pt(a, b), pt(a + 1, b))) ||
                            !sides.count(norm_side(pt(a, b), pt(a, b + 1))) ||
                            !sides.count(norm_side(pt(a + 1, b), pt(a, b + 1))))
                            all = false;
                    }
                if (all) return {true, z, up == 1};
            }
    }
    return {};
}

Diameter curve_diameter(const EmbeddedCurve& c) {
    // convex hull (monotone chain; exact cross products), then pairwise scan
    std::vector<Eisen> pts = c.vertices;
    std::sort(pts.begin(), pts.end(), [](Eisen u, Eisen v) {
        return std::pair(2 * u.a + u.b, u.b) < std::pair(2 * v.a + v.b, v.b);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    auto cross = [](Eisen o, Eisen u, Eisen v) {
        Eisen p = u - o, q = v - o;
        return p.a * q.b - p.b * q.a;  // sign matches the Euclidean cross product
    };
    std::vector<Eisen> hull;
    if (pts.size() <= 2) {
        hull = pts;
    } else {
        std::vector<Eisen> lower, upper;
        for (Eisen p : pts) {
            while (lower.size() >= 2 && cross(lower[lower.size() - 2], lower.back(), p) <= 0)
                lower.pop_back();
            lower.push_back(p);
        }
        for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
            while (upper.size() >= 2 && cross(upper[upper.size() - 2], upper.back(), *it) <= 0)
                upper.pop_back();
            upper.push_back(*it);
        }
        hull.assign(lower.begin(), lower.end() - 1);
        hull.insert(hull.end(), upper.begin(), upper.end() - 1);
    }
    Diameter d;
    for (size_t i = 0; i < hull.size(); ++i)
        for (size_t j = i + 1; j < hull.size(); ++j)
            d.norm2 = std::max(d.norm2, (hull[i] - hull[j]).norm());
    d.value = std::sqrt(static_cast<double>(d.norm2));
    return d;
}

double rho_bound(int n) {
    double s3 = std::sqrt(3.0);
    return (std::pow(s3, n - 1) * (4.0 - s3) - 1.0) / (s3 - 1.0);
}

EmbeddedCurve derive_geometric(const EmbeddedCurve& c) {
    if (c.family != Family::Triangular)
        throw std::invalid_argument("derive_geometric: use the Gosper overload for Gosper curves");
    TurnWord macro_word = derive_tri_word(c.word);  // throws BadLength/NotDerivable
    Eisen v0 = c.vertices.front();
    std::vector<Eisen> mv;
    for (size_t k = 0; k * 3 < c.vertices.size(); ++k) {
        Eisen q;
        if (!exact_div(c.vertices[3 * k] - v0, kTheta, q))
            throw NotDerivable("derive_geometric: macro vertex off the derived lattice");
        mv.push_back(v0 + q);
    }
    int d0 = dir_index_of(mv[1] - mv[0], {1, 0});
    if (d0 < 0) throw NotDerivable("derive_geometric: macro step is not a unit side");
    EmbeddedCurve out = embed(macro_word, Family::Triangular, mv[0], d0);
    if (out.vertices != mv) throw NotDerivable("derive_geometric: macro turns disagree with word");
    return out;
}

EmbeddedCurve derive_geometric_gosper(const EmbeddedCurve& c, const GosperTiling& t) {
    if (c.family != Family::Gosper) throw std::invalid_argument("derive_geometric_gosper: Gosper curves only");
    if (c.segments() % 7 != 0) throw NotDerivable("derive_geometric_gosper: segment count not a multiple of 7");
    Eisen g1 = t.Gamma(1);
    std::vector<Eisen> mv;
    for (size_t k = 0; 7 * k < c.vertices.size(); ++k) {
        Eisen v = c.vertices[7 * k];
        auto around = hexagons_at_vertex(v);
        // the 3 level-1 tiles meeting at v, mapped to macro hexagons
        std::array<Eisen, 3> macro;
        for (int i = 0; i < 3; ++i) {
            Eisen tile = tile_of_hex(t, 1, around[static_cast<size_t>(i)]);
            if (!exact_div(tile, g1, macro[static_cast<size_t>(i)]))
                throw std::logic_error("derive_geometric_gosper: tile center off the macro lattice");
        }
        if (macro[0] == macro[1] || macro[0] == macro[2] || macro[1] == macro[2])
            throw NotDerivable("derive_geometric_gosper: block endpoint is not a tile corner");
        // unique common vertex of the 3 mutually adjacent macro hexagons
        std::optional<Eisen> common;
        for (int j = 0; j < 6; ++j) {
            Eisen cand = hex_vertex(macro[0], j);
            bool ok = true;
            for (int i = 1; i < 3 && ok; ++i) {
                bool member = false;
                for (int j2 = 0; j2 < 6; ++j2)
                    if (hex_vertex(macro[static_cast<size_t>(i)], j2) == cand) member = true;
                ok = member;
            }
            if (ok) {
                if (common) throw std::logic_error("derive_geometric_gosper: corner not unique");
                common = cand;
            }
        }
        if (!common) throw NotDerivable("derive_geometric_gosper: macro hexagons share no vertex");
        mv.push_back(*common);
    }
    TurnWord macro_word;
    std::vector<int> dirs;
    for (size_t k = 0; k + 1 < mv.size(); ++k) {
        int j = dir_index_of(mv[k + 1] - mv[k], kTheta);
        if (j < 0) throw NotDerivable("derive_geometric_gosper: macro step is not a chord");
        dirs.push_back(j);
    }
    for (size_t k = 0; k + 1 < dirs.size(); ++k) {
        int d = dir_mod6(dirs[k + 1] - dirs[k]);
        if (d == 3) throw NotDerivable("derive_geometric_gosper: macro curve doubles back");
        macro_word.push_back(d <= 2 ? d : d - 6);
    }
    EmbeddedCurve out = embed(macro_word, Family::Gosper, mv[0], dirs[0]);
    if (out.vertices != mv) throw std::logic_error("derive_geometric_gosper: re-embedding mismatch");
    return out;
}

std::vector<double> contraction_check(const EmbeddedCurve& c, double px, double py, int depth) {
    if (c.family != Family::Triangular)
        throw std::invalid_argument("contraction_check: triangular curves only");
    using cplx = std::complex<double>;
    const cplx theta(1.5, 0.8660254037844386);
    cplx anchor(c.vertices.front().x(), c.vertices.front().y());
    auto dist_to_curve = [](const EmbeddedCurve& cur, cplx p) {
        double best = 1e300;
        for (size_t i = 0; i + 1 < cur.vertices.size(); ++i) {
            cplx a(cur.vertices[i].x(), cur.vertices[i].y());
            cplx b(cur.vertices[i + 1].x(), cur.vertices[i + 1].y());
            cplx ab = b - a;
            double t = std::clamp(((p - a) / ab).real(), 0.0, 1.0);
            best = std::min(best, std::abs(p - (a + t * ab)));
        }
        return best;
    };
    std::vector<double> out;
    EmbeddedCurve cur = c;
    cplx p(px, py);
    for (int k = 0; k <= depth; ++k) {
        out.push_back(dist_to_curve(cur, p));
        if (k == depth) break;
        cur = derive_geometric(cur);  // throws NotDerivable when too deep
        p = anchor + (p - anchor) / theta;
    }
    return out;
}

}  // namespace planefold
