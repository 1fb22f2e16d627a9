#include "cubiclinks/linear_systems.hpp"

#include <algorithm>
#include <stdexcept>

#include "cubiclinks/weyl.hpp"

namespace cubiclinks {

long long SecancyProfile::at(int idx) const {
    if (idx < 6) return e[idx];
    if (idx < 21) return l[idx - 6];
    return c[idx - 21];
}

std::array<long long, 27> SecancyProfile::all() const {
    std::array<long long, 27> out{};
    for (int i = 0; i < 27; ++i) out[i] = at(i);
    return out;
}

long long SecancyProfile::max_value() const {
    auto v = all();
    return *std::max_element(v.begin(), v.end());
}

SecancyProfile secancy_profile(const SurfaceClass& c) {
    const auto& lines = twenty_seven_lines();
    SecancyProfile p;
    for (int i = 0; i < 6; ++i) p.e[i] = pairing(c, lines[i].cls);
    for (int i = 0; i < 15; ++i) p.l[i] = pairing(c, lines[6 + i].cls);
    for (int i = 0; i < 6; ++i) p.c[i] = pairing(c, lines[21 + i].cls);
    return p;
}

std::pair<LineOnCubic, long long> max_secant_line(const SurfaceClass& c) {
    const auto& lines = twenty_seven_lines();
    int best = 0;
    long long best_val = pairing(c, lines[0].cls);
    for (int i = 1; i < 27; ++i) {
        long long v = pairing(c, lines[i].cls);
        if (v > best_val) {
            best = i;
            best_val = v;
        }
    }
    if (is_standard_form(c) && pairing(c, lines[21].cls) != best_val)
        throw std::logic_error("max_secant_line: maximum not at c1 for a standard-form class");
    return {lines[best], best_val};
}

bool is_weak_fano_blowup(const SurfaceClass& c) {
    return secancy_profile(c).max_value() <= 4;
}

namespace {

std::optional<std::pair<LineOnCubic, LineOnCubic>> meeting_pair_with_sum(
    const SurfaceClass& c, long long target, bool at_least) {
    const auto& lines = twenty_seven_lines();
    const auto s = secancy_profile(c).all();
    for (int i = 0; i < 27; ++i)
        for (int j = i + 1; j < 27; ++j) {
            if (!lines_meet(lines[i], lines[j])) continue;
            long long sum = s[i] + s[j];
            if (at_least ? sum >= target : sum == target)
                return std::make_pair(lines[i], lines[j]);
        }
    return std::nullopt;
}

}  // namespace

std::optional<std::pair<LineOnCubic, LineOnCubic>> pair_violation(const SurfaceClass& c) {
    return meeting_pair_with_sum(c, 8, true);
}

std::optional<std::pair<LineOnCubic, LineOnCubic>> seven_secant_conic_pencil(const SurfaceClass& c) {
    return meeting_pair_with_sum(c, 7, false);
}

PeelResult peel_fixed_lines(const SurfaceClass& d) {
    const auto& lines = twenty_seven_lines();
    PeelResult r;
    r.residual = d;
    std::array<int, 27> mult{};
    // Each subtraction lowers the degree by 1, so the loop terminates.
    while (degree_in_p3(r.residual) >= 0) {
        int neg = -1;
        for (int i = 0; i < 27; ++i)
            if (pairing(r.residual, lines[i].cls) < 0) {
                neg = i;
                break;
            }
        if (neg < 0) break;
        r.residual = r.residual - lines[neg].cls;
        ++mult[neg];
    }
    for (int i = 0; i < 27; ++i)
        if (mult[i] > 0) r.fixed.emplace_back(lines[i], mult[i]);
    return r;
}

long long h0_on_cubic(const SurfaceClass& d) {
    PeelResult p = peel_fixed_lines(d);
    const SurfaceClass& r = p.residual;
    if (degree_in_p3(r) < 0) return 0;
    if (r.is_zero()) return 1;
    // Residual is nef, so h^0 = chi.
    long long chi2 = pairing(r, r) - pairing(r, canonical_class_s());
    if (chi2 % 2 != 0) throw std::logic_error("h0_on_cubic: odd Riemann-Roch numerator");
    long long h0 = chi2 / 2 + 1;
    if (h0 <= 0) throw std::logic_error("h0_on_cubic: nonpositive chi on a nef class");
    return h0;
}

long long cubic_count(const SurfaceClass& c) {
    SurfaceClass d = canonical_class_s() * -3 - c;
    return h0_on_cubic(d) + 1;
}

}  // namespace cubiclinks
