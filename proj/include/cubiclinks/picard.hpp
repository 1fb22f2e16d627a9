#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cubiclinks {

// Divisor class on a smooth cubic surface S, the blowup of P^2 at six
// general points.  Stored as the type (k; m1,...,m6) of the class
// k*L - sum_i m_i*F_i, where L is the pullback of a line and the F_i are
// the exceptional curves.  The intersection form is diagonal
// (1,-1,...,-1), so <D,D'> = k*k' - sum_i m_i*m'_i.
struct SurfaceClass {
    long long k = 0;
    std::array<long long, 6> m{};

    SurfaceClass() = default;
    SurfaceClass(long long k_, std::array<long long, 6> m_) : k(k_), m(m_) {}

    SurfaceClass operator+(const SurfaceClass& o) const;
    SurfaceClass operator-(const SurfaceClass& o) const;
    SurfaceClass operator-() const;
    SurfaceClass operator*(long long t) const;

    bool operator==(const SurfaceClass&) const = default;
    auto operator<=>(const SurfaceClass&) const = default;

    bool is_zero() const { return k == 0 && m == std::array<long long, 6>{}; }
};

SurfaceClass operator*(long long t, const SurfaceClass& c);

long long pairing(const SurfaceClass& a, const SurfaceClass& b);

// K_S = -3L + sum F_i, i.e. the type (-3; -1,...,-1).  Satisfies
// <K,K> = 3 and <l,K> = -1 for each of the 27 lines.
SurfaceClass canonical_class_s();

// Degree of the curve embedded in P^3 by |-K_S|: <C,-K_S> = 3k - sum m_i.
long long degree_in_p3(const SurfaceClass& c);

// Arithmetic genus by adjunction, (<C,C> + <C,K_S>)/2 + 1.
long long genus(const SurfaceClass& c);

// Type-string grammar "(k;m1,m2,m3,m4,m5,m6)", optional whitespace.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
SurfaceClass parse_surface_class(std::string_view text);
std::string to_string(const SurfaceClass& c);

// One of the 27 lines on S: the six exceptional curves e_i = F_i, the
// fifteen transforms l_ij = L - F_i - F_j of lines through two of the
// blown-up points, and the six transforms c_i = 2L - sum F_j + F_i of
// conics through five of them.
struct LineOnCubic {
    enum class Kind { E, L, C };
    Kind kind = Kind::E;
    int i = 0;  // 1-based
    int j = 0;  // 1-based, Kind::L only
    SurfaceClass cls;

    std::string name() const;  // "e1", "l12", "c1"
    bool operator==(const LineOnCubic& o) const { return cls == o.cls; }
};

// All 27 lines in the canonical order e1..e6, l12..l56 (lexicographic),
// c1..c6.
const std::array<LineOnCubic, 27>& twenty_seven_lines();

// Two distinct lines on a smooth cubic meet iff their pairing is 1.
bool lines_meet(const LineOnCubic& a, const LineOnCubic& b);

// Divisor class a*H + b*E on the blowup X of P^3 along a curve, with H
// the hyperplane pullback and E the exceptional divisor.
struct ThreefoldDivClass {
    long long a = 0;
    long long b = 0;

    ThreefoldDivClass operator+(const ThreefoldDivClass& o) const { return {a + o.a, b + o.b}; }
    ThreefoldDivClass operator-(const ThreefoldDivClass& o) const { return {a - o.a, b - o.b}; }
    ThreefoldDivClass operator*(long long t) const { return {a * t, b * t}; }
    bool operator==(const ThreefoldDivClass&) const = default;
};

// Curve class c*l + d*f, with l the pullback of a line and f a fibre of
// the exceptional ruling.
struct ThreefoldCurveClass {
    long long c = 0;
    long long d = 0;

    ThreefoldCurveClass operator+(const ThreefoldCurveClass& o) const { return {c + o.c, d + o.d}; }
    ThreefoldCurveClass operator*(long long t) const { return {c * t, d * t}; }
    bool operator==(const ThreefoldCurveClass&) const = default;
};

// Generator products: H.l = 1, H.f = 0, E.l = 0, E.f = -1, so
// (aH + bE).(cl + df) = ac - bd.
long long threefold_pairing(const ThreefoldDivClass& d, const ThreefoldCurveClass& z);

// K_X = -4H + E.
inline ThreefoldDivClass canonical_class_x() { return {-4, 1}; }
// Strict transform of the cubic surface through the blown-up curve,
// S = 3H - E.
inline ThreefoldDivClass cubic_class_x() { return {3, -1}; }

// Restriction to the cubic: H|_S = -K_S and E|_S = C, so
// (aH + bE)|_S = a(-K_S) + bC.
SurfaceClass restrict_to_cubic(const ThreefoldDivClass& d, const SurfaceClass& curve);

std::size_t hash_of(const SurfaceClass& c);

}  // namespace cubiclinks
