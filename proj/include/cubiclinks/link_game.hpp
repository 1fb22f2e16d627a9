#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "cubiclinks/flip_calculus.hpp"
#include "cubiclinks/picard.hpp"
#include "cubiclinks/rational.hpp"

namespace cubiclinks {

// One small modification of the 2-ray game: the flop of (-1,-1)-curves
// or the flip of curves with normal bundle (-1,-2) or (-1,-3).
enum class StepKind { Flip12, Flip13, Flop };
struct FlipStep {
    StepKind kind = StepKind::Flop;
    int count = 0;
};

enum class SingKind { Half, Third, Odp };  // 1/2(1,1,1), 1/3(1,1,2), ordinary double point
int singularity_index(SingKind s);

// Divisorial contractions to a point met along the links: E5 contracts
// a plane with normal degree -2, E3 a quadric with normal bidegree
// (-1,-1); the F2-cone case only appears inside the (1,3)-flip
// resolution.
enum class ContractionType { E5, E3, FBar2 };
Rational contraction_discrepancy(ContractionType t);  // 1/2, 1, 1/3
Rational contraction_delta_k3(ContractionType t);     // 1/2, 2, 1/6

// -K^3 of the blowup of P^3 along a smooth curve of degree d and genus
// g: 62 - 8d + 2g.
Rational blowup_cube(long long d, long long g);

// Change of -K^3 across a step: a flop is neutral, each (1,2)-flip adds
// 1/2, each (1,3)-flip adds 8/3.
Rational step_delta_k3(const FlipStep& s);

// Quotient singularities created by a step: one 1/2(1,1,1) per
// (1,2)-flip, one 1/3(1,1,2) per (1,3)-flip, none for flops.
std::vector<SingKind> step_basket(const FlipStep& s);

// Lines whose strict transforms are flipped (secancy >= 5) or flopped
// (secancy 4) by the 2-ray game of a link candidate.
struct ContractedLines {
    std::vector<LineOnCubic> flipped;
    std::vector<LineOnCubic> flopped;
};
ContractedLines contracted_lines(const SurfaceClass& c);

// Numerical model of the surface obtained from the cubic by blowing
// down a disjoint set of lines, together with the degree of the normal
// bundle of its image (restricting D_S = -3K_S - C).
struct BlowdownResult {
    enum class Model { P2, Quadric, Other };
    int rank = 0;
    long long k_sq = 0;
    Model model = Model::Other;
    long long normal_deg = 0;                     // P2
    std::pair<long long, long long> bidegree{0, 0};  // Quadric
};
BlowdownResult blowdown_on_surface(const SurfaceClass& c, const std::vector<LineOnCubic>& contracted);

// Strict transform under the pseudo-isomorphism of a divisor written in
// the basis (K_{Y0}, T) on the far side: (a,b) -> (-4a+3b)H + (a-b)E.
ThreefoldDivClass pullback_to_x(long long a, long long b);

// Fano-Weil index of the Type II target: q = lcm of the basket indices,
// pull -qK_{Y0} + (q*discrepancy)T back to X and take the gcd of the
// coefficients.
int fano_weil_index(const std::vector<SingKind>& basket, ContractionType ct);

struct TypeIIData {
    ContractionType contraction = ContractionType::E5;
    Rational ky3;
    int fano_weil_index = 0;
};
struct TypeIData {
    int dp_degree = 0;
    Rational ky03;
};
using LinkKind = std::variant<TypeIIData, TypeIData>;

// Full numerical replay of the Sarkisov link induced by a candidate
// curve type.
struct LinkReport {
    SurfaceClass type;
    long long degree = 0;
    long long genus = 0;
    Rational kx3;
    std::vector<FlipStep> steps;
    std::vector<SingKind> basket;  // ordered Half, Third, Odp
    LinkKind link;
    ContractedLines contracted;
};

LinkReport analyze_link(const SurfaceClass& c);

const char* to_string(StepKind s);
const char* to_string(SingKind s);
const char* to_string(ContractionType t);

}  // namespace cubiclinks
