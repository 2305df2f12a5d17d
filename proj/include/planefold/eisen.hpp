#pragma once

#include <array>
#include <cmath>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <ostream>

namespace planefold {

// Eisenstein-style integer pair a + b*t with t = exp(i*pi/3), so t^2 = t - 1.
// Serves as exact coordinates for the triangular lattice (unit side) and,
// scaled, for hexagon centers and vertices.
struct Eisen {
    int64_t a = 0;
    int64_t b = 0;

    friend Eisen operator+(Eisen u, Eisen v) { return {u.a + v.a, u.b + v.b}; }
    friend Eisen operator-(Eisen u, Eisen v) { return {u.a - v.a, u.b - v.b}; }
    friend Eisen operator-(Eisen u) { return {-u.a, -u.b}; }
    friend Eisen operator*(Eisen u, Eisen v) {
        // (a+bt)(c+dt) = ac - bd + (ad + bc + bd) t
        return {u.a * v.a - u.b * v.b, u.a * v.b + u.b * v.a + u.b * v.b};
    }
    friend Eisen operator*(int64_t k, Eisen v) { return {k * v.a, k * v.b}; }
    Eisen& operator+=(Eisen v) { a += v.a; b += v.b; return *this; }
    Eisen& operator-=(Eisen v) { a -= v.a; b -= v.b; return *this; }

    friend bool operator==(Eisen, Eisen) = default;
    friend auto operator<=>(Eisen, Eisen) = default;

    Eisen conj() const { return {a + b, -b}; }          // complex conjugate
    int64_t norm() const { return a * a + a * b + b * b; }  // squared modulus

    double x() const { return static_cast<double>(a) + 0.5 * static_cast<double>(b); }
    double y() const { return 0.8660254037844386 * static_cast<double>(b); }

    friend std::ostream& operator<<(std::ostream& os, Eisen v) {
        return os << '(' << v.a << ',' << v.b << ')';
    }
};

// The six units t^k, k = 0..5: the unit directions of the triangular lattice.
inline constexpr std::array<Eisen, 6> kUnitDirs = {{
    {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1},
}};

inline Eisen unit_dir(int k) { return kUnitDirs[((k % 6) + 6) % 6]; }

inline int dir_mod6(int k) { return ((k % 6) + 6) % 6; }

// Index j with v == t^j * unit_dir(0) * |v|-scaled reference, i.e. v == t^j * ref.
// Returns -1 if no such j exists.
inline int dir_index_of(Eisen v, Eisen ref) {
    for (int j = 0; j < 6; ++j)
        if (unit_dir(j) * ref == v) return j;
    return -1;
}

// Exact division u / v in Z[t]; returns false when not divisible.
inline bool exact_div(Eisen u, Eisen v, Eisen& out) {
    int64_t n = v.norm();
    if (n == 0) return false;
    Eisen p = u * v.conj();
    if (p.a % n != 0 || p.b % n != 0) return false;
    out = {p.a / n, p.b / n};
    return true;
}

// Hexagon-window metric: H(0,k) = { v : hex_dist(v) <= k } is the regular
// hexagon with corners at k*t^j whose sides run along lattice directions.
inline int64_t hex_dist(Eisen v) {
    int64_t s = v.a + v.b;
    return std::max({std::llabs(v.a), std::llabs(v.b), std::llabs(s)});
}

struct EisenHash {
    size_t operator()(Eisen v) const {
        uint64_t h = static_cast<uint64_t>(v.a) * 0x9e3779b97f4a7c15ull;
        h ^= static_cast<uint64_t>(v.b) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<size_t>(h);
    }
};

}  // namespace planefold
