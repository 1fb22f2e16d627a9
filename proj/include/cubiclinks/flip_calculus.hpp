#pragma once

#include <utility>

#include "cubiclinks/rational.hpp"

namespace cubiclinks {

// Divisor class a*sigma + b*f on the Hirzebruch surface F_n, where
// sigma is the unique (-n)-section and f a ruling fibre.  Intersection
// matrix ((-n,1),(1,0)); K = -2*sigma - (n+2)*f.
struct FnClass {
    int n = 0;
    long long a = 0;
    long long b = 0;

    bool operator==(const FnClass&) const = default;
};

long long fn_pairing(const FnClass& d1, const FnClass& d2);  // throws on mismatched n
FnClass fn_canonical(int n);

// chi(O(D)) = (a+1)(b+1) - n*a(a+1)/2.
long long fn_euler(const FnClass& d);

struct FnVanishing {
    bool all_vanish = false;   // D.f = -1 kills every h^i
    bool h1_vanishes = false;  // D.f >= 0 and D.sigma >= -1 kill h^1
};
FnVanishing fn_vanishing(const FnClass& d);

// Weil intersection data on the cone obtained by contracting the
// (-n)-section: sigma_bar = n*f_bar, sigma_bar^2 = n, f_bar^2 = 1/n.
struct FnBarData {
    Rational sigma_bar_sq;
    Rational f_bar_sq;
    long long sigma_bar_in_f_bar = 0;
};
FnBarData fn_bar_data(int n);  // throws on n < 1

// O(alpha) + O(beta) on a rational curve, alpha >= beta.
struct SplitBundle {
    long long alpha = 0;
    long long beta = 0;

    bool operator==(const SplitBundle&) const = default;
};
SplitBundle split_bundle(long long x, long long y);  // sorts

// Normal bundle of the strict transform of an m-secant line of the
// blown-up curve, m >= 3: O(-1) + O(3-m).
SplitBundle secant_line_normal_bundle(long long m);

// Numerical data of the exceptional divisor E = F_{alpha-beta} of the
// blowup of a rational curve with split normal bundle: E.C' = alpha and
// E|_E = -C' + beta*f, with C' the negative section.
struct BlowupExceptionalData {
    int hirzebruch_index = 0;
    long long e_dot_cprime = 0;
    std::pair<long long, long long> e_on_e;  // coefficients of (C', f)
};
BlowupExceptionalData blowup_exceptional_data(const SplitBundle& n);

// Class on E of the strict transform of a surface through the curve
// with self-intersection kappa: C' + (alpha - kappa)*f.
std::pair<long long, long long> strict_transform_on_e(const SplitBundle& n, long long kappa);

// Normal bundle of the negative section after the blowup: when
// 2*alpha - beta < 2 the extension splits and the result is
// O(beta-alpha) + O(alpha); in every case alpha' + beta' = beta.
SplitBundle flipped_normal_bundle(const SplitBundle& n);  // throws when 2a-b >= 2

}  // namespace cubiclinks
