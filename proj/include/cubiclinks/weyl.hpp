#pragma once

#include <array>
#include <utility>
#include <vector>

#include "cubiclinks/picard.hpp"

namespace cubiclinks {

// A step of a normalization word: either a permutation of the six
// exceptional indices or the quadratic Cremona move on three of them.
struct Move {
    enum class Kind { Perm, Cremona };
    Kind kind = Kind::Perm;
    std::array<int, 6> perm{};  // new m[i] = old m[perm[i]], 0-based
    std::array<int, 3> ijk{};   // Cremona indices, 1-based
};
using MoveWord = std::vector<Move>;

SurfaceClass apply_move(const SurfaceClass& c, const Move& mv);
SurfaceClass apply_word(const SurfaceClass& c, const MoveWord& word);

// Quadratic Cremona transformation centred at the i-th, j-th and l-th
// points: k' = 2k - mi - mj - ml, mi' = k - mj - ml and cyclically.
// Acts as the lattice reflection in L - F_i - F_j - F_l, so it preserves
// <D,D> and <D,K_S>; it is an involution.
SurfaceClass cremona(const SurfaceClass& c, int i, int j, int l);

bool is_standard_form(const SurfaceClass& c);

// Reduce a positive-degree class to the standard form m1 >= ... >= m6,
// k >= m1 + m2 + m3 by alternately sorting and applying Cremona on the
// three largest multiplicities.  Each Cremona strictly decreases k, and
// k is bounded below on classes of fixed degree and self-intersection,
// so the loop terminates; a 10^4 iteration cap guards against misuse.
// Replaying the returned word on the input reproduces the output.
std::pair<SurfaceClass, MoveWord> standardize(const SurfaceClass& c);

// Whether two classes lie in the same orbit of the Weyl group generated
// by the index permutations and Cremona moves.  BFS over the generators;
// the group has order 51840, which bounds every orbit.
bool same_orbit(const SurfaceClass& a, const SurfaceClass& b);

}  // namespace cubiclinks
