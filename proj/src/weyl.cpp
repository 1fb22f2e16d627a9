#include "cubiclinks/weyl.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace cubiclinks {

SurfaceClass apply_move(const SurfaceClass& c, const Move& mv) {
    if (mv.kind == Move::Kind::Perm) {
        SurfaceClass r = c;
        for (int i = 0; i < 6; ++i) r.m[i] = c.m[mv.perm[i]];
        return r;
    }
    return cremona(c, mv.ijk[0], mv.ijk[1], mv.ijk[2]);
}

SurfaceClass apply_word(const SurfaceClass& c, const MoveWord& word) {
    SurfaceClass r = c;
    for (const Move& mv : word) r = apply_move(r, mv);
    return r;
}

SurfaceClass cremona(const SurfaceClass& c, int i, int j, int l) {
    if (i < 1 || i > 6 || j < 1 || j > 6 || l < 1 || l > 6 || i == j || j == l || i == l)
        throw std::invalid_argument("cremona: indices must be distinct and in 1..6");
    long long mi = c.m[i - 1], mj = c.m[j - 1], ml = c.m[l - 1];
    SurfaceClass r = c;
    r.k = 2 * c.k - mi - mj - ml;
    r.m[i - 1] = c.k - mj - ml;
    r.m[j - 1] = c.k - mi - ml;
    r.m[l - 1] = c.k - mi - mj;
    if (pairing(r, r) != pairing(c, c) ||
        pairing(r, canonical_class_s()) != pairing(c, canonical_class_s()))
        throw std::logic_error("cremona: lattice invariants not preserved");
    return r;
}

bool is_standard_form(const SurfaceClass& c) {
    for (int i = 0; i < 5; ++i)
        if (c.m[i] < c.m[i + 1]) return false;
    return c.k >= c.m[0] + c.m[1] + c.m[2];
}

namespace {

// Stable descending sort of the multiplicities, recorded as a Move.
Move sort_move(const SurfaceClass& c) {
    Move mv;
    mv.kind = Move::Kind::Perm;
    std::array<int, 6> idx;
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return c.m[a] > c.m[b]; });
    mv.perm = idx;
    return mv;
}

bool is_descending(const SurfaceClass& c) {
    for (int i = 0; i < 5; ++i)
        if (c.m[i] < c.m[i + 1]) return false;
    return true;
}

}  // namespace

std::pair<SurfaceClass, MoveWord> standardize(const SurfaceClass& c) {
    if (degree_in_p3(c) <= 0)
        throw std::invalid_argument("standardize: class has nonpositive degree");
    SurfaceClass cur = c;
    MoveWord word;
    for (int iter = 0; iter < 10000; ++iter) {
        if (!is_descending(cur)) {
            Move mv = sort_move(cur);
            cur = apply_move(cur, mv);
            word.push_back(mv);
        }
        if (cur.k >= cur.m[0] + cur.m[1] + cur.m[2]) {
            if (apply_word(c, word) != cur)
                throw std::logic_error("standardize: move word does not replay");
            return {cur, word};
        }
        Move mv;
        mv.kind = Move::Kind::Cremona;
        mv.ijk = {1, 2, 3};
        long long prev_k = cur.k;
        cur = apply_move(cur, mv);
        word.push_back(mv);
        if (cur.k >= prev_k)
            throw std::logic_error("standardize: Cremona did not decrease k");
    }
    throw std::runtime_error("standardize: iteration cap exceeded for " + to_string(c));
}

namespace {

struct ClassHash {
    std::size_t operator()(const SurfaceClass& c) const { return hash_of(c); }
};

constexpr std::size_t kWeylGroupOrder = 51840;

}  // namespace

bool same_orbit(const SurfaceClass& a, const SurfaceClass& b) {
    if (a == b) return true;
    // Orbit invariants give a cheap negative answer.
    const SurfaceClass k = canonical_class_s();
    if (pairing(a, a) != pairing(b, b) || pairing(a, k) != pairing(b, k)) return false;

    std::unordered_set<SurfaceClass, ClassHash> seen{a};
    std::deque<SurfaceClass> queue{a};
    while (!queue.empty()) {
        SurfaceClass cur = queue.front();
        queue.pop_front();
        auto visit = [&](const SurfaceClass& next) {
            if (seen.insert(next).second) {
                if (seen.size() > kWeylGroupOrder)
                    throw std::logic_error("same_orbit: orbit exceeded the Weyl group order");
                queue.push_back(next);
            }
        };
        for (int i = 0; i < 5; ++i) {
            SurfaceClass next = cur;
            std::swap(next.m[i], next.m[i + 1]);
            if (next == b) return true;
            visit(next);
        }
        SurfaceClass next = cremona(cur, 1, 2, 3);
        if (next == b) return true;
        visit(next);
    }
    return false;
}

}  // namespace cubiclinks
