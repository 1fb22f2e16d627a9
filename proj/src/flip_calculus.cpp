#include "cubiclinks/flip_calculus.hpp"

#include <stdexcept>

namespace cubiclinks {

long long fn_pairing(const FnClass& d1, const FnClass& d2) {
    if (d1.n != d2.n)
        throw std::invalid_argument("fn_pairing: classes live on different Hirzebruch surfaces");
    return -static_cast<long long>(d1.n) * d1.a * d2.a + d1.a * d2.b + d1.b * d2.a;
}

FnClass fn_canonical(int n) { return {n, -2, -(static_cast<long long>(n) + 2)}; }

long long fn_euler(const FnClass& d) {
    return (d.a + 1) * (d.b + 1) - d.n * (d.a * (d.a + 1)) / 2;
}

FnVanishing fn_vanishing(const FnClass& d) {
    long long df = d.a;                  // D.f
    long long dsigma = -d.n * d.a + d.b;  // D.sigma
    FnVanishing v;
    v.all_vanish = (df == -1);
    v.h1_vanishes = v.all_vanish || (df >= 0 && dsigma >= -1);
    return v;
}

FnBarData fn_bar_data(int n) {
    if (n < 1) throw std::invalid_argument("fn_bar_data: requires n >= 1");
    FnBarData d;
    d.sigma_bar_sq = Rational(n);
    d.f_bar_sq = Rational(1, n);
    d.sigma_bar_in_f_bar = n;
    return d;
}

SplitBundle split_bundle(long long x, long long y) {
    return x >= y ? SplitBundle{x, y} : SplitBundle{y, x};
}

SplitBundle secant_line_normal_bundle(long long m) {
    if (m < 3) throw std::invalid_argument("secant_line_normal_bundle: requires m >= 3");
    return split_bundle(-1, 3 - m);
}

BlowupExceptionalData blowup_exceptional_data(const SplitBundle& n) {
    BlowupExceptionalData d;
    d.hirzebruch_index = static_cast<int>(n.alpha - n.beta);
    d.e_dot_cprime = n.alpha;
    d.e_on_e = {-1, n.beta};
    return d;
}

std::pair<long long, long long> strict_transform_on_e(const SplitBundle& n, long long kappa) {
    return {1, n.alpha - kappa};
}

SplitBundle flipped_normal_bundle(const SplitBundle& n) {
    if (2 * n.alpha - n.beta >= 2)
        throw std::invalid_argument(
            "flipped_normal_bundle: undetermined for 2*alpha - beta >= 2");
    SplitBundle out = split_bundle(n.beta - n.alpha, n.alpha);
    if (out.alpha + out.beta != n.beta)
        throw std::logic_error("flipped_normal_bundle: degree not conserved");
    return out;
}

}  // namespace cubiclinks
