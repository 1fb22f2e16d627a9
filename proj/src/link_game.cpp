#include "cubiclinks/link_game.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cubiclinks/classify.hpp"
#include "cubiclinks/linear_systems.hpp"

namespace cubiclinks {

int singularity_index(SingKind s) {
    switch (s) {
        case SingKind::Half: return 2;
        case SingKind::Third: return 3;
        case SingKind::Odp: return 1;
    }
    return 0;
}

Rational contraction_discrepancy(ContractionType t) {
    switch (t) {
        case ContractionType::E5: return {1, 2};
        case ContractionType::E3: return 1;
        case ContractionType::FBar2: return {1, 3};
    }
    return 0;
}

Rational contraction_delta_k3(ContractionType t) {
    switch (t) {
        case ContractionType::E5: return {1, 2};
        case ContractionType::E3: return 2;
        case ContractionType::FBar2: return {1, 6};
    }
    return 0;
}

Rational blowup_cube(long long d, long long g) { return 62 - 8 * d + 2 * g; }

Rational step_delta_k3(const FlipStep& s) {
    switch (s.kind) {
        case StepKind::Flop: return 0;
        case StepKind::Flip12: return Rational(s.count) * Rational(1, 2);
        case StepKind::Flip13: return Rational(s.count) * Rational(8, 3);
    }
    return 0;
}

std::vector<SingKind> step_basket(const FlipStep& s) {
    std::vector<SingKind> out;
    if (s.kind == StepKind::Flip12) out.assign(s.count, SingKind::Half);
    if (s.kind == StepKind::Flip13) out.assign(s.count, SingKind::Third);
    return out;
}

ContractedLines contracted_lines(const SurfaceClass& c) {
    CandidateRecord rec = classify_type(c);
    if (rec.status != LinkStatus::LinkCandidate)
        throw std::invalid_argument("contracted_lines: type is not a link candidate");
    const auto& lines = twenty_seven_lines();
    const auto s = secancy_profile(rec.type).all();
    ContractedLines out;
    bool has5 = false, has6 = false;
    for (int i = 0; i < 27; ++i) {
        if (s[i] >= 5) {
            out.flipped.push_back(lines[i]);
            has5 |= (s[i] == 5);
            has6 |= (s[i] == 6);
        } else if (s[i] == 4) {
            out.flopped.push_back(lines[i]);
        }
    }
    if (has5 && has6)
        throw std::logic_error("contracted_lines: 5- and 6-secant lines cannot coexist");
    return out;
}

namespace {

using Vec7 = std::array<long long, 7>;

SurfaceClass from_vec(const Vec7& v) {
    return {v[0], {v[1], v[2], v[3], v[4], v[5], v[6]}};
}

long long llabs_(long long x) { return x < 0 ? -x : x; }

// Basis of the full integer lattice orthogonal (under the pairing) to
// the given classes.  Writes the constraints as columns of the left
// block of [U^T | I] and row-reduces over Z with gcd elimination; the
// rows whose left block vanishes carry a basis of the saturated kernel
// in the right block.
std::vector<Vec7> orthogonal_complement(const std::vector<SurfaceClass>& classes) {
    const int n = 7;
    const int m = static_cast<int>(classes.size());
    // Row i: (<x_i, classes> ..., then the i-th unit vector), where x_i
    // runs over the standard basis and <.,.> is the lattice pairing.
    std::vector<std::vector<long long>> rows(n, std::vector<long long>(m + n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            const SurfaceClass& c = classes[j];
            rows[i][j] = (i == 0) ? c.k : -c.m[i - 1];
        }
        rows[i][m + i] = 1;
    }
    int r = 0;
    for (int col = 0; col < m && r < n; ++col) {
        for (;;) {
            int piv = -1;
            for (int i = r; i < n; ++i)
                if (rows[i][col] != 0 && (piv < 0 || llabs_(rows[i][col]) < llabs_(rows[piv][col])))
                    piv = i;
            if (piv < 0) break;
            std::swap(rows[r], rows[piv]);
            bool cleared = true;
            for (int i = r + 1; i < n; ++i) {
                if (rows[i][col] == 0) continue;
                long long q = rows[i][col] / rows[r][col];
                for (int j = 0; j < m + n; ++j) rows[i][j] -= q * rows[r][j];
                if (rows[i][col] != 0) cleared = false;
            }
            if (cleared) {
                ++r;
                break;
            }
        }
    }
    std::vector<Vec7> basis;
    for (int i = r; i < n; ++i) {
        Vec7 v{};
        for (int j = 0; j < n; ++j) v[j] = rows[i][m + j];
        basis.push_back(v);
    }
    return basis;
}

constexpr long long kCombinationBound = 24;

}  // namespace

BlowdownResult blowdown_on_surface(const SurfaceClass& c, const std::vector<LineOnCubic>& contracted) {
    for (std::size_t i = 0; i < contracted.size(); ++i)
        for (std::size_t j = i + 1; j < contracted.size(); ++j)
            if (lines_meet(contracted[i], contracted[j]))
                throw std::invalid_argument("blowdown_on_surface: contracted lines must be disjoint");

    BlowdownResult out;
    out.rank = 7 - static_cast<int>(contracted.size());
    out.k_sq = 3 + static_cast<long long>(contracted.size());

    std::vector<SurfaceClass> classes;
    for (const auto& l : contracted) classes.push_back(l.cls);
    auto basis = orthogonal_complement(classes);
    if (static_cast<int>(basis.size()) != out.rank)
        throw std::runtime_error("blowdown_on_surface: contracted lines are not independent");

    const SurfaceClass mk = -canonical_class_s();
    const SurfaceClass d_s = canonical_class_s() * -3 - c;

    if (out.rank == 1) {
        SurfaceClass h = from_vec(basis[0]);
        if (pairing(h, mk) < 0) h = -h;
        if (pairing(h, h) != 1 || pairing(h, mk) != 3)
            throw std::runtime_error("blowdown_on_surface: no hyperplane class in the complement");
        out.model = BlowdownResult::Model::P2;
        out.normal_deg = pairing(d_s, h);
        return out;
    }

    if (out.rank == 2) {
        SurfaceClass v1 = from_vec(basis[0]), v2 = from_vec(basis[1]);
        std::vector<SurfaceClass> rulings;
        bool minus_one_class = false;
        for (long long x = -kCombinationBound; x <= kCombinationBound; ++x)
            for (long long y = -kCombinationBound; y <= kCombinationBound; ++y) {
                if (x == 0 && y == 0) continue;
                SurfaceClass r = v1 * x + v2 * y;
                if (pairing(r, r) == 0 && pairing(r, mk) == 2) rulings.push_back(r);
                if (pairing(r, r) == -1 && pairing(r, mk) == 1) minus_one_class = true;
            }
        std::sort(rulings.begin(), rulings.end());
        rulings.erase(std::unique(rulings.begin(), rulings.end()), rulings.end());
        if (!minus_one_class)
            for (std::size_t i = 0; i < rulings.size(); ++i)
                for (std::size_t j = i + 1; j < rulings.size(); ++j)
                    if (pairing(rulings[i], rulings[j]) == 1) {
                        out.model = BlowdownResult::Model::Quadric;
                        out.bidegree = {pairing(d_s, rulings[i]), pairing(d_s, rulings[j])};
                        return out;
                    }
        out.model = BlowdownResult::Model::Other;
        return out;
    }

    out.model = BlowdownResult::Model::Other;
    return out;
}

ThreefoldDivClass pullback_to_x(long long a, long long b) {
    return {-4 * a + 3 * b, a - b};
}

int fano_weil_index(const std::vector<SingKind>& basket, ContractionType ct) {
    if (ct == ContractionType::FBar2)
        throw std::invalid_argument("fano_weil_index: FBar2 is not a terminal contraction here");
    long long q = 1;
    for (SingKind s : basket) q = std::lcm(q, static_cast<long long>(singularity_index(s)));
    Rational alpha_q = contraction_discrepancy(ct) * Rational(q);
    if (!alpha_q.is_integer())
        throw std::runtime_error("fano_weil_index: q * discrepancy is not integral");
    ThreefoldDivClass w = pullback_to_x(-q, alpha_q.num());
    long long g = std::gcd(llabs_(w.a), llabs_(w.b));
    // The divided class is the integral Weil divisor realizing the index.
    if (w.a % g != 0 || w.b % g != 0)
        throw std::logic_error("fano_weil_index: witness class not integral");
    return static_cast<int>(g);
}

LinkReport analyze_link(const SurfaceClass& c) {
    CandidateRecord rec = classify_type(c);
    if (rec.status != LinkStatus::LinkCandidate)
        throw std::invalid_argument("analyze_link: type does not induce a Sarkisov link");
    const SurfaceClass& t = rec.type;

    LinkReport r;
    r.type = t;
    r.degree = rec.degree;
    r.genus = rec.genus;
    r.kx3 = blowup_cube(r.degree, r.genus);
    r.contracted = contracted_lines(t);

    if (!r.contracted.flipped.empty()) {
        long long m = pairing(t, r.contracted.flipped.front().cls);
        for (const auto& l : r.contracted.flipped)
            if (pairing(t, l.cls) != m)
                throw std::logic_error("analyze_link: flipped lines of mixed secancy");
        SplitBundle n = secant_line_normal_bundle(m);
        StepKind kind;
        if (n == SplitBundle{-1, -2})
            kind = StepKind::Flip12;
        else if (n == SplitBundle{-1, -3})
            kind = StepKind::Flip13;
        else
            throw std::logic_error("analyze_link: unexpected flip normal bundle");
        r.steps.push_back({kind, static_cast<int>(r.contracted.flipped.size())});
    }
    if (!r.contracted.flopped.empty()) {
        for (const auto& l : r.contracted.flopped)
            if (secant_line_normal_bundle(pairing(t, l.cls)) != SplitBundle{-1, -1})
                throw std::logic_error("analyze_link: flopped line is not a (-1,-1)-curve");
        r.steps.push_back({StepKind::Flop, static_cast<int>(r.contracted.flopped.size())});
    }

    Rational after_steps = r.kx3;
    for (const auto& s : r.steps) {
        after_steps += step_delta_k3(s);
        auto b = step_basket(s);
        r.basket.insert(r.basket.end(), b.begin(), b.end());
    }

    if (cubic_count(t) == 1) {
        std::vector<LineOnCubic> all = r.contracted.flipped;
        all.insert(all.end(), r.contracted.flopped.begin(), r.contracted.flopped.end());
        BlowdownResult bd = blowdown_on_surface(t, all);
        TypeIIData data;
        if (bd.model == BlowdownResult::Model::P2 && bd.normal_deg == -2)
            data.contraction = ContractionType::E5;
        else if (bd.model == BlowdownResult::Model::Quadric && bd.bidegree == std::pair<long long, long long>{-1, -1})
            data.contraction = ContractionType::E3;
        else
            throw std::runtime_error("analyze_link: unrecognized terminal contraction");
        r.basket.push_back(data.contraction == ContractionType::E5 ? SingKind::Half : SingKind::Odp);
        data.ky3 = after_steps + contraction_delta_k3(data.contraction);
        std::sort(r.basket.begin(), r.basket.end());
        data.fano_weil_index = fano_weil_index(r.basket, data.contraction);
        r.link = data;
    } else {
        TypeIData data;
        data.dp_degree =
            3 + static_cast<int>(r.contracted.flipped.size() + r.contracted.flopped.size());
        data.ky03 = after_steps;
        std::sort(r.basket.begin(), r.basket.end());
        r.link = data;
    }
    return r;
}

const char* to_string(StepKind s) {
    switch (s) {
        case StepKind::Flip12: return "Flip12";
        case StepKind::Flip13: return "Flip13";
        case StepKind::Flop: return "Flop";
    }
    return "";
}

const char* to_string(SingKind s) {
    switch (s) {
        case SingKind::Half: return "1/2(1,1,1)";
        case SingKind::Third: return "1/3(1,1,2)";
        case SingKind::Odp: return "odp";
    }
    return "";
}

const char* to_string(ContractionType t) {
    switch (t) {
        case ContractionType::E5: return "E5";
        case ContractionType::E3: return "E3";
        case ContractionType::FBar2: return "FBar2";
    }
    return "";
}

}  // namespace cubiclinks
