#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cubiclinks/linear_systems.hpp"
#include "cubiclinks/picard.hpp"
#include "cubiclinks/weyl.hpp"

namespace cubiclinks {

enum class LinkStatus { WeakFano, LinkCandidate, Excluded };

struct CandidateRecord {
    SurfaceClass type;  // standard form
    SecancyProfile profile;
    long long degree = 0;
    long long genus = 0;
    bool weak_fano = false;
    LinkStatus status = LinkStatus::WeakFano;
    std::optional<std::pair<LineOnCubic, LineOnCubic>> witness;  // Excluded only
    MoveWord normalization;  // replays the original input to `type`
};

// All standard-form curve types on a smooth cubic whose blowup is not
// weak Fano and which survive the meeting-pair exclusion: k in 2..9,
// m1 <= 8, m2..m6 <= 2, every line secancy >= 0, genus >= 0, some
// secancy >= 5 and no meeting pair summing to 8 or more.  Rows ordered
// as in the candidate table: the unique-cubic types first, then the
// pencil types, each group by (k, m) lexicographically.
const std::vector<CandidateRecord>& enumerate_candidates();

// Normalize an arbitrary positive-degree type and settle its status:
// weak Fano blowup, excluded by a meeting pair, or a link candidate (in
// which case it is one of the six enumerated types).
CandidateRecord classify_type(const SurfaceClass& c);

const char* to_string(LinkStatus s);

}  // namespace cubiclinks
