#include "planefold/lattice.hpp"

#include <unordered_map>
#include <unordered_set>

namespace planefold {

SubMember sublattice_member(Eisen v, SublatticeLevel lvl) {
    if (lvl.level < 1) throw std::invalid_argument("sublattice_member: level must be >= 1");
    Eisen d = v - lvl.anchor;
    Eisen q;
    if (!exact_div(d, theta_pow(lvl.level - 1), q))
        throw NotInParent("sublattice_member: vertex not in the parent sublattice");
    return exact_div(d, theta_pow(lvl.level), q) ? SubMember::InV : SubMember::InW;
}

int side_class(const OrientedSide& s) {
    int k = dir_index_of(s.to - s.from, {1, 0});
    if (k < 0) throw std::invalid_argument("side_class: not a unit lattice side");
    return k % 2 == 0 ? 1 : 2;
}

WClass w_class(Eisen fine_vertex) {
    int c = tri_class(fine_vertex);
    if (c == 0) throw std::invalid_argument("w_class: point is a hexagon center, not a vertex");
    return c == 1 ? WClass::W : WClass::NotW;
}

std::array<Eisen, 3> hexagons_at_vertex(Eisen v) {
    int c = tri_class(v);
    if (c == 0) throw std::invalid_argument("hexagons_at_vertex: point is a hexagon center");
    int k0 = (c == 1) ? 0 : 1;  // t^k has class 1 for even k, class 2 for odd k
    std::array<Eisen, 3> out;
    for (int i = 0; i < 3; ++i) {
        Eisen fine_center = v - unit_dir(k0 + 2 * i);
        Eisen cc;
        if (!exact_div(fine_center, kTheta, cc))
            throw std::logic_error("hexagons_at_vertex: center not on the center lattice");
        out[static_cast<size_t>(i)] = cc;
    }
    return out;
}

std::array<Eisen, 3> w_vertices_of_hexagon(Eisen c) {
    return {hex_vertex(c, 0), hex_vertex(c, 2), hex_vertex(c, 4)};
}

// Fixed by the boundary convention: with this multiplier the first unit side
// of each macro side of a level-1 "+" tile lies at the right of that side.
const Eisen kGammaPlus{2, 1};
const Eisen kGammaMinus{1, 2};

Eisen GosperTiling::Gamma(int m) const {
    if (m > static_cast<int>(signs.size())) throw std::invalid_argument("Gamma: level beyond tiling depth");
    Eisen p{1, 0};
    for (int i = 0; i < m; ++i) p = p * gamma_of(signs[static_cast<size_t>(i)]);
    return p;
}

std::array<Eisen, 7> tile_children(const GosperTiling& t, int level_m, Eisen c) {
    if (level_m < 1) throw std::invalid_argument("tile_children: need level >= 1");
    Eisen g = t.Gamma(level_m - 1);
    std::array<Eisen, 7> out;
    out[0] = c;
    for (int j = 0; j < 6; ++j) out[static_cast<size_t>(j + 1)] = c + g * unit_dir(j);
    return out;
}

std::vector<Eisen> tile_hexagons(const GosperTiling& t, int level_m, Eisen c) {
    if (level_m == 0) return {c};
    std::vector<Eisen> out;
    for (Eisen ch : tile_children(t, level_m, c)) {
        auto sub = tile_hexagons(t, level_m - 1, ch);
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

namespace {

// Unique multiple c' of g (norm 7) with u - c' in {0} union units.
Eisen nearest_multiple(Eisen u, Eisen g) {
    Eisen p = u * g.conj();
    auto div_round = [](int64_t v) { return (2 * v + (v >= 0 ? 7 : -7)) / 14; };
    Eisen q0{div_round(p.a), div_round(p.b)};
    for (int64_t da = -1; da <= 1; ++da)
        for (int64_t db = -1; db <= 1; ++db) {
            Eisen q = q0 + Eisen{da, db};
            if ((u - g * q).norm() <= 1) return g * q;
        }
    throw std::logic_error("nearest_multiple: no residue of norm <= 1 found");
}

}  // namespace

Eisen tile_of_hex(const GosperTiling& t, int level_m, Eisen h) {
    Eisen cur = h;
    for (int i = 1; i <= level_m; ++i) {
        Eisen gi = gamma_of(t.signs[static_cast<size_t>(i - 1)]);
        Eisen scale = t.Gamma(i - 1);
        Eisen u;
        if (!exact_div(cur, scale, u)) throw std::logic_error("tile_of_hex: center not on level lattice");
        cur = scale * nearest_multiple(u, gi);
    }
    return cur;
}

Eisen address_center(const GosperTiling& t, const GosperAddress& a) {
    Eisen c = a.base;
    for (int i = static_cast<int>(a.digits.size()); i >= 1; --i) {
        int d = a.digits[static_cast<size_t>(i - 1)];
        if (d != 0) c += t.Gamma(i - 1) * unit_dir(d - 1);
    }
    return c;
}

GosperAddress address_of_hex(const GosperTiling& t, int level_n, Eisen h) {
    GosperAddress a;
    a.digits.resize(static_cast<size_t>(level_n));
    Eisen below = h;
    for (int i = 1; i <= level_n; ++i) {
        Eisen ci = tile_of_hex(t, i, h);
        Eisen diff = below - ci;
        if (diff == Eisen{0, 0}) {
            a.digits[static_cast<size_t>(i - 1)] = 0;
        } else {
            Eisen u;
            if (!exact_div(diff, t.Gamma(i - 1), u) || u.norm() != 1)
                throw std::logic_error("address_of_hex: child offset is not a ring step");
            a.digits[static_cast<size_t>(i - 1)] = dir_index_of(u, {1, 0}) + 1;
        }
        below = ci;
    }
    a.base = below;
    return a;
}

std::array<Eisen, 6> tile_corners(const GosperTiling& t, int level_m, Eisen c) {
    auto hexes = tile_hexagons(t, level_m, c);
    std::unordered_set<Eisen, EisenHash> inside(hexes.begin(), hexes.end());
    Eisen gm = t.Gamma(level_m);
    std::array<Eisen, 6> corners;
    std::array<bool, 6> found{};
    std::unordered_set<Eisen, EisenHash> seen;
    for (Eisen h : hexes) {
        bool on_boundary = false;
        for (int j = 0; j < 6 && !on_boundary; ++j)
            if (!inside.count(h + unit_dir(j))) on_boundary = true;
        if (!on_boundary) continue;
        for (int j = 0; j < 6; ++j) {
            Eisen v = hex_vertex(h, j);
            if (!seen.insert(v).second) continue;
            auto around = hexagons_at_vertex(v);
            Eisen t0 = tile_of_hex(t, level_m, around[0]);
            Eisen t1 = tile_of_hex(t, level_m, around[1]);
            Eisen t2 = tile_of_hex(t, level_m, around[2]);
            if (t0 == t1 || t0 == t2 || t1 == t2) continue;
            // corner: identify the two neighbor tiles as c + gm*t^a, c + gm*t^b
            int ja = -1, jb = -1;
            for (Eisen tn : {t0, t1, t2}) {
                if (tn == c) continue;
                Eisen u;
                if (!exact_div(tn - c, gm, u) || u.norm() != 1)
                    throw std::logic_error("tile_corners: corner touches a non-neighbor tile");
                int k = dir_index_of(u, {1, 0});
                (ja < 0 ? ja : jb) = k;
            }
            if (ja < 0 || jb < 0) throw std::logic_error("tile_corners: corner not on this tile's ring");
            int j_label;
            if ((ja + 1) % 6 == jb) j_label = jb;
            else if ((jb + 1) % 6 == ja) j_label = ja;
            else throw std::logic_error("tile_corners: neighbor tiles at corner are not adjacent");
            if (found[static_cast<size_t>(j_label)])
                throw std::logic_error("tile_corners: duplicate corner label");
            corners[static_cast<size_t>(j_label)] = v;
            found[static_cast<size_t>(j_label)] = true;
        }
    }
    for (bool f : found)
        if (!f) throw std::logic_error("tile_corners: missing corner label");
    return corners;
}

TileBoundary tile_boundary(const GosperTiling& t, int level_m, Eisen c) {
    auto hexes = tile_hexagons(t, level_m, c);
    std::unordered_set<Eisen, EisenHash> inside(hexes.begin(), hexes.end());
    // directed boundary edges keep the tile interior on the left
    std::unordered_map<Eisen, Eisen, EisenHash> next;
    for (Eisen h : hexes)
        for (int j = 0; j < 6; ++j)
            if (!inside.count(h + unit_dir(j))) {
                Eisen a = hex_vertex(h, j);
                Eisen b = hex_vertex(h, j + 1);
                if (!next.emplace(a, b).second)
                    throw std::logic_error("tile_boundary: boundary is not a simple cycle");
            }
    auto corners = tile_corners(t, level_m, c);
    TileBoundary out;
    out.corner_at.fill(0);
    Eisen start = corners[0];
    Eisen v = start;
    out.walk.push_back(v);
    do {
        auto it = next.find(v);
        if (it == next.end()) throw std::logic_error("tile_boundary: walk left the boundary");
        v = it->second;
        out.walk.push_back(v);
    } while (v != start);
    if (out.walk.size() - 1 != next.size())
        throw std::logic_error("tile_boundary: boundary has more than one cycle");
    for (int j = 0; j < 6; ++j) {
        bool located = false;
        for (size_t i = 0; i + 1 < out.walk.size(); ++i)
            if (out.walk[i] == corners[static_cast<size_t>(j)]) {
                out.corner_at[static_cast<size_t>(j)] = i;
                located = true;
                break;
            }
        if (!located) throw std::logic_error("tile_boundary: corner missing from walk");
    }
    return out;
}

}  // namespace planefold
