#include "cubiclinks/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubiclinks {

namespace {

CandidateRecord make_record(const SurfaceClass& type, MoveWord word) {
    CandidateRecord r;
    r.type = type;
    r.profile = secancy_profile(type);
    r.degree = degree_in_p3(type);
    r.genus = genus(type);
    r.weak_fano = is_weak_fano_blowup(type);
    r.normalization = std::move(word);
    if (r.weak_fano) {
        r.status = LinkStatus::WeakFano;
    } else if (auto viol = pair_violation(type)) {
        r.status = LinkStatus::Excluded;
        r.witness = viol;
    } else {
        r.status = LinkStatus::LinkCandidate;
    }
    return r;
}

bool is_line_class(const SurfaceClass& c) {
    for (const auto& l : twenty_seven_lines())
        if (c == l.cls) return true;
    return false;
}

std::vector<CandidateRecord> run_enumeration() {
    std::vector<CandidateRecord> out;
    for (long long k = 2; k <= 9; ++k)
        for (long long m1 = 0; m1 <= std::min(k - 1, 8LL); ++m1)
            for (long long m2 = 0; m2 <= std::min(m1, 2LL); ++m2)
                for (long long m3 = 0; m3 <= m2; ++m3) {
                    if (k < m1 + m2 + m3) continue;
                    for (long long m4 = 0; m4 <= m3; ++m4)
                        for (long long m5 = 0; m5 <= m4; ++m5)
                            for (long long m6 = 0; m6 <= m5; ++m6) {
                                SurfaceClass c{k, {m1, m2, m3, m4, m5, m6}};
                                if (is_line_class(c)) continue;
                                SecancyProfile p = secancy_profile(c);
                                auto s = p.all();
                                if (*std::min_element(s.begin(), s.end()) < 0) continue;
                                if (genus(c) < 0) continue;
                                if (p.max_value() <= 4) continue;  // weak Fano blowup
                                if (pair_violation(c)) continue;
                                out.push_back(make_record(c, {}));
                            }
                }
    // Candidate-table order: unique-cubic types before pencil types.
    std::stable_sort(out.begin(), out.end(), [](const CandidateRecord& a, const CandidateRecord& b) {
        bool pa = seven_secant_conic_pencil(a.type).has_value();
        bool pb = seven_secant_conic_pencil(b.type).has_value();
        if (pa != pb) return pa;
        return a.type < b.type;
    });
    return out;
}

}  // namespace

const std::vector<CandidateRecord>& enumerate_candidates() {
    static const std::vector<CandidateRecord> table = run_enumeration();
    return table;
}

CandidateRecord classify_type(const SurfaceClass& c) {
    if (degree_in_p3(c) <= 0)
        throw std::invalid_argument("classify_type: class has nonpositive degree");
    auto [std_form, word] = standardize(c);
    CandidateRecord r = make_record(std_form, std::move(word));
    if (r.status == LinkStatus::LinkCandidate) {
        const auto& table = enumerate_candidates();
        bool found = std::any_of(table.begin(), table.end(),
                                 [&](const CandidateRecord& t) { return t.type == r.type; });
        if (!found)
            throw std::logic_error("classify_type: link candidate missing from the candidate table");
    }
    return r;
}

const char* to_string(LinkStatus s) {
    switch (s) {
        case LinkStatus::WeakFano: return "WeakFano";
        case LinkStatus::LinkCandidate: return "LinkCandidate";
        case LinkStatus::Excluded: return "Excluded";
    }
    return "";
}

}  // namespace cubiclinks
