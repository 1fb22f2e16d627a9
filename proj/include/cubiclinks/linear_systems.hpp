#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "cubiclinks/picard.hpp"

namespace cubiclinks {

// The 27 intersection numbers of a class with the lines of the cubic,
// split by line kind and kept in canonical order.
struct SecancyProfile {
    std::array<long long, 6> e{};   // <C, e_i>, equals m_i
    std::array<long long, 15> l{};  // <C, l_ij>, lexicographic
    std::array<long long, 6> c{};   // <C, c_i>

    long long at(int canonical_index) const;
    std::array<long long, 27> all() const;
    long long max_value() const;
};

SecancyProfile secancy_profile(const SurfaceClass& c);

// A line of maximal secancy, ties broken by canonical order.  For a
// standard-form class the maximum sits at c_1.
std::pair<LineOnCubic, long long> max_secant_line(const SurfaceClass& c);

// The blowup of P^3 along the curve is weak Fano iff no line is
// m-secant with m >= 5.  Expects a standard-form class.
bool is_weak_fano_blowup(const SurfaceClass& c);

// A pair of distinct meeting lines whose secancies sum to at least 8,
// if one exists; such a pair rules out a Sarkisov link.  First pair in
// canonical scan order.
std::optional<std::pair<LineOnCubic, LineOnCubic>> pair_violation(const SurfaceClass& c);

// A meeting pair with secancy sum exactly 7; the residual pencil of
// conics through such a pair is 7-secant to the curve.
std::optional<std::pair<LineOnCubic, LineOnCubic>> seven_secant_conic_pencil(const SurfaceClass& c);

// Fixed-line decomposition: D = sum of lines (with multiplicity) plus a
// residual that pairs non-negatively with every line, or a residual of
// negative degree when D is not effective.
struct PeelResult {
    std::vector<std::pair<LineOnCubic, int>> fixed;  // canonical order
    SurfaceClass residual;
};

PeelResult peel_fixed_lines(const SurfaceClass& d);

// h^0 of a divisor class on the cubic: peel the fixed lines, then count
// sections of the nef residual by Riemann-Roch (higher cohomology of a
// nef class on a del Pezzo surface vanishes).
long long h0_on_cubic(const SurfaceClass& d);

// Dimension of the space of cubic surfaces through the curve,
// h^0(S, -3K_S - C) + 1.
long long cubic_count(const SurfaceClass& c);

}  // namespace cubiclinks
