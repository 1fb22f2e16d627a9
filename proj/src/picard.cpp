#include "cubiclinks/picard.hpp"

#include <cctype>
#include <charconv>

namespace cubiclinks {

SurfaceClass SurfaceClass::operator+(const SurfaceClass& o) const {
    SurfaceClass r;
    r.k = k + o.k;
    for (int i = 0; i < 6; ++i) r.m[i] = m[i] + o.m[i];
    return r;
}

SurfaceClass SurfaceClass::operator-(const SurfaceClass& o) const {
    SurfaceClass r;
    r.k = k - o.k;
    for (int i = 0; i < 6; ++i) r.m[i] = m[i] - o.m[i];
    return r;
}

SurfaceClass SurfaceClass::operator-() const {
    SurfaceClass r;
    r.k = -k;
    for (int i = 0; i < 6; ++i) r.m[i] = -m[i];
    return r;
}

SurfaceClass SurfaceClass::operator*(long long t) const {
    SurfaceClass r;
    r.k = k * t;
    for (int i = 0; i < 6; ++i) r.m[i] = m[i] * t;
    return r;
}

SurfaceClass operator*(long long t, const SurfaceClass& c) { return c * t; }

long long pairing(const SurfaceClass& a, const SurfaceClass& b) {
    long long p = a.k * b.k;
    for (int i = 0; i < 6; ++i) p -= a.m[i] * b.m[i];
    return p;
}

SurfaceClass canonical_class_s() {
    return {-3, {-1, -1, -1, -1, -1, -1}};
}

long long degree_in_p3(const SurfaceClass& c) {
    return pairing(c, -canonical_class_s());
}

long long genus(const SurfaceClass& c) {
    long long n = pairing(c, c) + pairing(c, canonical_class_s());
    if (n % 2 != 0) throw std::logic_error("genus: odd <C,C> + <C,K> on an integral class");
    return n / 2 + 1;
}

namespace {

void skip_ws(std::string_view& s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
}

long long parse_int(std::string_view& s) {
    skip_ws(s);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc()) throw ParseError("expected integer in type string");
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    return v;
}

void expect(std::string_view& s, char c) {
    skip_ws(s);
    if (s.empty() || s.front() != c)
        throw ParseError(std::string("expected '") + c + "' in type string");
    s.remove_prefix(1);
}

}  // namespace

SurfaceClass parse_surface_class(std::string_view text) {
    std::string_view s = text;
    SurfaceClass c;
    expect(s, '(');
    c.k = parse_int(s);
    expect(s, ';');
    for (int i = 0; i < 6; ++i) {
        if (i > 0) expect(s, ',');
        c.m[i] = parse_int(s);
    }
    expect(s, ')');
    skip_ws(s);
    if (!s.empty()) throw ParseError("trailing characters in type string");
    return c;
}

std::string to_string(const SurfaceClass& c) {
    std::string s = "(" + std::to_string(c.k) + ";";
    for (int i = 0; i < 6; ++i) {
        if (i > 0) s += ",";
        s += std::to_string(c.m[i]);
    }
    s += ")";
    return s;
}

std::string LineOnCubic::name() const {
    switch (kind) {
        case Kind::E: return "e" + std::to_string(i);
        case Kind::L: return "l" + std::to_string(i) + std::to_string(j);
        case Kind::C: return "c" + std::to_string(i);
    }
    return {};
}

const std::array<LineOnCubic, 27>& twenty_seven_lines() {
    static const std::array<LineOnCubic, 27> lines = [] {
        std::array<LineOnCubic, 27> out{};
        int idx = 0;
        for (int i = 1; i <= 6; ++i) {
            LineOnCubic l;
            l.kind = LineOnCubic::Kind::E;
            l.i = i;
            l.cls = SurfaceClass{0, {}};
            l.cls.m[i - 1] = -1;  // e_i = F_i
            out[idx++] = l;
        }
        for (int i = 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j) {
                LineOnCubic l;
                l.kind = LineOnCubic::Kind::L;
                l.i = i;
                l.j = j;
                l.cls = SurfaceClass{1, {}};
                l.cls.m[i - 1] = 1;
                l.cls.m[j - 1] = 1;  // l_ij = L - F_i - F_j
                out[idx++] = l;
            }
        for (int i = 1; i <= 6; ++i) {
            LineOnCubic l;
            l.kind = LineOnCubic::Kind::C;
            l.i = i;
            l.cls = SurfaceClass{2, {1, 1, 1, 1, 1, 1}};
            l.cls.m[i - 1] = 0;  // c_i = 2L - F_1 - ... - F_6 + F_i
            out[idx++] = l;
        }
        return out;
    }();
    return lines;
}

bool lines_meet(const LineOnCubic& a, const LineOnCubic& b) {
    if (a.cls == b.cls) throw std::invalid_argument("lines_meet: identical lines");
    long long p = pairing(a.cls, b.cls);
    if (p != 0 && p != 1)
        throw std::logic_error("lines_meet: pairing of distinct lines not in {0,1}");
    return p == 1;
}

long long threefold_pairing(const ThreefoldDivClass& d, const ThreefoldCurveClass& z) {
    return d.a * z.c - d.b * z.d;
}

SurfaceClass restrict_to_cubic(const ThreefoldDivClass& d, const SurfaceClass& curve) {
    return (-canonical_class_s()) * d.a + curve * d.b;
}

std::size_t hash_of(const SurfaceClass& c) {
    std::size_t h = static_cast<std::size_t>(c.k) * 1469598103934665603ULL;
    for (int i = 0; i < 6; ++i) {
        h ^= static_cast<std::size_t>(c.m[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace cubiclinks
