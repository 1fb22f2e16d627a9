#include "cubiclinks/formats.hpp"

#include <sstream>

#include "json.hpp"

namespace cubiclinks {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

template <typename It>
std::string join(It begin, It end, const std::string& sep) {
    std::string out;
    for (It it = begin; it != end; ++it) {
        if (it != begin) out += sep;
        out += *it;
    }
    return out;
}

template <std::size_t N>
std::string vec_str(const std::array<long long, N>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < N; ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

template <std::size_t N>
std::string vec_csv(const std::array<long long, N>& v) {
    std::string s;
    for (std::size_t i = 0; i < N; ++i) {
        if (i) s += " ";
        s += std::to_string(v[i]);
    }
    return s;
}

template <std::size_t N>
ordered_json vec_json(const std::array<long long, N>& v) {
    ordered_json a = ordered_json::array();
    for (auto x : v) a.push_back(x);
    return a;
}

std::vector<std::string> line_names(const std::vector<LineOnCubic>& ls) {
    std::vector<std::string> out;
    for (const auto& l : ls) out.push_back(l.name());
    return out;
}

std::string move_str(const Move& mv) {
    if (mv.kind == Move::Kind::Cremona) {
        return "cremona(" + std::to_string(mv.ijk[0]) + "," + std::to_string(mv.ijk[1]) + "," +
               std::to_string(mv.ijk[2]) + ")";
    }
    std::string s = "perm(";
    for (int i = 0; i < 6; ++i) {
        if (i) s += ",";
        s += std::to_string(mv.perm[i] + 1);
    }
    return s + ")";
}

std::string steps_str(const std::vector<FlipStep>& steps) {
    std::vector<std::string> parts;
    for (const auto& s : steps)
        parts.push_back(std::to_string(s.count) + " x " + to_string(s.kind));
    return parts.empty() ? "(none)" : join(parts.begin(), parts.end(), "; ");
}

// "3 x 1/2(1,1,1)" style, grouped, in the canonical basket order.
std::string basket_str(const std::vector<SingKind>& basket) {
    if (basket.empty()) return "(none)";
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < basket.size();) {
        std::size_t j = i;
        while (j < basket.size() && basket[j] == basket[i]) ++j;
        std::size_t n = j - i;
        parts.push_back(n > 1 ? std::to_string(n) + " x " + to_string(basket[i])
                              : std::string(to_string(basket[i])));
        i = j;
    }
    return join(parts.begin(), parts.end(), ", ");
}

ordered_json basket_json(const std::vector<SingKind>& basket) {
    ordered_json a = ordered_json::array();
    for (SingKind s : basket) a.push_back(to_string(s));
    return a;
}

ordered_json report_json_obj(const LinkReport& r) {
    ordered_json j;
    j["type"] = to_string(r.type);
    j["degree"] = r.degree;
    j["genus"] = r.genus;
    j["kx3"] = r.kx3.str_canonical();
    j["steps"] = ordered_json::array();
    for (const auto& s : r.steps)
        j["steps"].push_back({{"kind", to_string(s.kind)}, {"count", s.count}});
    j["basket"] = basket_json(r.basket);
    if (const auto* ii = std::get_if<TypeIIData>(&r.link)) {
        j["linkKind"] = {{"kind", "II"},
                         {"contraction", to_string(ii->contraction)},
                         {"ky3", ii->ky3.str_canonical()},
                         {"fanoWeilIndex", ii->fano_weil_index}};
    } else {
        const auto& i = std::get<TypeIData>(r.link);
        j["linkKind"] = {{"kind", "I"}, {"dpDegree", i.dp_degree}, {"ky03", i.ky03.str_canonical()}};
    }
    j["contractedLines"] = {{"flipped", line_names(r.contracted.flipped)},
                            {"flopped", line_names(r.contracted.flopped)}};
    return j;
}

}  // namespace

OutputFormat parse_format(std::string_view s) {
    if (s == "md") return OutputFormat::Md;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    throw std::invalid_argument("unknown output format: " + std::string(s));
}

std::string move_word_str(const MoveWord& w) {
    if (w.empty()) return "(none)";
    std::vector<std::string> parts;
    for (const auto& mv : w) parts.push_back(move_str(mv));
    return join(parts.begin(), parts.end(), "; ");
}

std::string render_lines(OutputFormat fmt) {
    const auto& lines = twenty_seven_lines();
    switch (fmt) {
        case OutputFormat::Md: {
            std::string out;
            for (const auto& l : lines) out += l.name() + " = " + to_string(l.cls) + "\n";
            return out;
        }
        case OutputFormat::Csv: {
            std::string out = "name,type\n";
            for (const auto& l : lines) out += l.name() + "," + to_string(l.cls) + "\n";
            return out;
        }
        case OutputFormat::Json: {
            ordered_json j = ordered_json::array();
            for (const auto& l : lines)
                j.push_back({{"name", l.name()}, {"type", to_string(l.cls)}});
            return dump(j);
        }
    }
    return {};
}

std::string render_secancy(const SurfaceClass& c, OutputFormat fmt) {
    SecancyProfile p = secancy_profile(c);
    switch (fmt) {
        case OutputFormat::Md:
            return "type = " + to_string(c) + "\ne = " + vec_str(p.e) + "\nl = " + vec_str(p.l) +
                   "\nc = " + vec_str(p.c) + "\n";
        case OutputFormat::Csv:
            return "type,e,l,c\n" + to_string(c) + "," + vec_csv(p.e) + "," + vec_csv(p.l) + "," +
                   vec_csv(p.c) + "\n";
        case OutputFormat::Json: {
            ordered_json j;
            j["type"] = to_string(c);
            j["e"] = vec_json(p.e);
            j["l"] = vec_json(p.l);
            j["c"] = vec_json(p.c);
            return dump(j);
        }
    }
    return {};
}

std::string render_normalize(const SurfaceClass& input, OutputFormat fmt) {
    auto [standard, word] = standardize(input);
    switch (fmt) {
        case OutputFormat::Md:
            return "input = " + to_string(input) + "\nstandard = " + to_string(standard) +
                   "\nmoves = " + move_word_str(word) + "\n";
        case OutputFormat::Csv: {
            std::vector<std::string> parts;
            for (const auto& mv : word) parts.push_back(move_str(mv));
            return "input,standard,moves\n" + to_string(input) + "," + to_string(standard) + "," +
                   join(parts.begin(), parts.end(), ";") + "\n";
        }
        case OutputFormat::Json: {
            ordered_json j;
            j["input"] = to_string(input);
            j["standard"] = to_string(standard);
            j["moves"] = ordered_json::array();
            for (const auto& mv : word) {
                if (mv.kind == Move::Kind::Cremona) {
                    j["moves"].push_back(
                        {{"kind", "cremona"}, {"indices", {mv.ijk[0], mv.ijk[1], mv.ijk[2]}}});
                } else {
                    ordered_json order = ordered_json::array();
                    for (int i = 0; i < 6; ++i) order.push_back(mv.perm[i] + 1);
                    j["moves"].push_back({{"kind", "perm"}, {"order", order}});
                }
            }
            return dump(j);
        }
    }
    return {};
}

std::string render_h0(const SurfaceClass& c, OutputFormat fmt) {
    long long h0 = h0_on_cubic(c);
    switch (fmt) {
        case OutputFormat::Md:
            return "type = " + to_string(c) + "\nh0 = " + std::to_string(h0) + "\n";
        case OutputFormat::Csv:
            return "type,h0\n" + to_string(c) + "," + std::to_string(h0) + "\n";
        case OutputFormat::Json: {
            ordered_json j;
            j["type"] = to_string(c);
            j["h0"] = h0;
            return dump(j);
        }
    }
    return {};
}

std::string render_cubics(const SurfaceClass& c, OutputFormat fmt) {
    long long n = cubic_count(c);
    switch (fmt) {
        case OutputFormat::Md:
            return "type = " + to_string(c) + "\ncubics = " + std::to_string(n) + "\n";
        case OutputFormat::Csv:
            return "type,cubics\n" + to_string(c) + "," + std::to_string(n) + "\n";
        case OutputFormat::Json: {
            ordered_json j;
            j["type"] = to_string(c);
            j["cubics"] = n;
            return dump(j);
        }
    }
    return {};
}

std::string render_classify(const SurfaceClass& c, OutputFormat fmt) {
    CandidateRecord r = classify_type(c);
    std::string witness;
    if (r.witness) witness = r.witness->first.name() + "+" + r.witness->second.name();
    switch (fmt) {
        case OutputFormat::Md: {
            std::string out = "type = " + to_string(c) + "\nstandard = " + to_string(r.type) +
                              "\ndegree = " + std::to_string(r.degree) +
                              "\ngenus = " + std::to_string(r.genus) +
                              "\nweakFano = " + (r.weak_fano ? "true" : "false") +
                              "\nstatus = " + to_string(r.status) + "\n";
            if (r.witness) out += "witness = " + witness + "\n";
            return out;
        }
        case OutputFormat::Csv:
            return "type,standard,degree,genus,weakFano,status,witness\n" + to_string(c) + "," +
                   to_string(r.type) + "," + std::to_string(r.degree) + "," +
                   std::to_string(r.genus) + "," + (r.weak_fano ? "true" : "false") + "," +
                   to_string(r.status) + "," + witness + "\n";
        case OutputFormat::Json: {
            ordered_json j;
            j["type"] = to_string(c);
            j["standard"] = to_string(r.type);
            j["degree"] = r.degree;
            j["genus"] = r.genus;
            j["weakFano"] = r.weak_fano;
            j["status"] = to_string(r.status);
            if (r.witness)
                j["witness"] = {r.witness->first.name(), r.witness->second.name()};
            else
                j["witness"] = nullptr;
            return dump(j);
        }
    }
    return {};
}

std::string render_enumerate(OutputFormat fmt) {
    const auto& table = enumerate_candidates();
    switch (fmt) {
        case OutputFormat::Md: {
            std::string out = "| # | type | c-vector | l-vector | deg | g |\n"
                              "|---|------|----------|----------|-----|---|\n";
            int idx = 1;
            for (const auto& r : table) {
                out += "| " + std::to_string(idx++) + " | " + to_string(r.type) + " | " +
                       vec_str(r.profile.c) + " | " + vec_str(r.profile.l) + " | " +
                       std::to_string(r.degree) + " | " + std::to_string(r.genus) + " |\n";
            }
            return out;
        }
        case OutputFormat::Csv: {
            std::string out = "index,type,c_vector,l_vector,degree,genus\n";
            int idx = 1;
            for (const auto& r : table) {
                out += std::to_string(idx++) + "," + to_string(r.type) + "," +
                       vec_csv(r.profile.c) + "," + vec_csv(r.profile.l) + "," +
                       std::to_string(r.degree) + "," + std::to_string(r.genus) + "\n";
            }
            return out;
        }
        case OutputFormat::Json: {
            ordered_json j = ordered_json::array();
            int idx = 1;
            for (const auto& r : table) {
                ordered_json row;
                row["index"] = idx++;
                row["type"] = to_string(r.type);
                row["e"] = vec_json(r.profile.e);
                row["l"] = vec_json(r.profile.l);
                row["c"] = vec_json(r.profile.c);
                row["degree"] = r.degree;
                row["genus"] = r.genus;
                j.push_back(row);
            }
            return dump(j);
        }
    }
    return {};
}

std::string link_report_json(const LinkReport& r) { return dump(report_json_obj(r)); }

std::string render_analyze(const SurfaceClass& c, OutputFormat fmt) {
    LinkReport r = analyze_link(c);
    switch (fmt) {
        case OutputFormat::Md: {
            auto flipped = line_names(r.contracted.flipped);
            auto flopped = line_names(r.contracted.flopped);
            std::string out = "type = " + to_string(r.type) +
                              "\ndegree = " + std::to_string(r.degree) +
                              "\ngenus = " + std::to_string(r.genus) + "\n-Kx^3 = " + r.kx3.str() +
                              "\nsteps = " + steps_str(r.steps) +
                              "\nbasket = " + basket_str(r.basket) +
                              "\nflipped = " + join(flipped.begin(), flipped.end(), ", ") +
                              "\nflopped = ";
            out += flopped.empty() ? "(none)" : join(flopped.begin(), flopped.end(), ", ");
            if (const auto* ii = std::get_if<TypeIIData>(&r.link)) {
                out += "\nlink type = II\ncontraction = " + std::string(to_string(ii->contraction)) +
                       "\n-Ky^3 = " + ii->ky3.str() +
                       "\nFano-Weil index = " + std::to_string(ii->fano_weil_index) + "\n";
            } else {
                const auto& i = std::get<TypeIData>(r.link);
                out += "\nlink type = I\ndel Pezzo fibration degree = " +
                       std::to_string(i.dp_degree) + "\n-Ky0^3 = " + i.ky03.str() + "\n";
            }
            return out;
        }
        case OutputFormat::Csv: {
            std::string link_type, contraction, dp_degree, ky, index;
            if (const auto* ii = std::get_if<TypeIIData>(&r.link)) {
                link_type = "II";
                contraction = to_string(ii->contraction);
                ky = ii->ky3.str();
                index = std::to_string(ii->fano_weil_index);
            } else {
                const auto& i = std::get<TypeIData>(r.link);
                link_type = "I";
                dp_degree = std::to_string(i.dp_degree);
                ky = i.ky03.str();
            }
            auto flipped = line_names(r.contracted.flipped);
            auto flopped = line_names(r.contracted.flopped);
            return "type,degree,genus,kx3,steps,basket,flipped,flopped,linkType,contraction,"
                   "dpDegree,ky3,fanoWeilIndex\n" +
                   to_string(r.type) + "," + std::to_string(r.degree) + "," +
                   std::to_string(r.genus) + "," + r.kx3.str() + "," + steps_str(r.steps) + "," +
                   basket_str(r.basket) + "," + join(flipped.begin(), flipped.end(), " ") + "," +
                   join(flopped.begin(), flopped.end(), " ") + "," + link_type + "," + contraction +
                   "," + dp_degree + "," + ky + "," + index + "\n";
        }
        case OutputFormat::Json:
            return link_report_json(r);
    }
    return {};
}

std::string render_tables(OutputFormat fmt) {
    const auto& table = enumerate_candidates();
    std::vector<LinkReport> reports;
    for (const auto& r : table) reports.push_back(analyze_link(r.type));
    switch (fmt) {
        case OutputFormat::Md: {
            std::string out = "Type II links (Fano targets):\n\n";
            out += "| # | type | contraction | singularities | -Ky^3 | Fano-Weil index |\n"
                   "|---|------|-------------|---------------|-------|-----------------|\n";
            int idx = 1;
            for (const auto& r : reports) {
                if (const auto* ii = std::get_if<TypeIIData>(&r.link)) {
                    out += "| " + std::to_string(idx) + " | " + to_string(r.type) + " | " +
                           to_string(ii->contraction) + " | " + basket_str(r.basket) + " | " +
                           ii->ky3.str() + " | " + std::to_string(ii->fano_weil_index) + " |\n";
                }
                ++idx;
            }
            out += "\nType I links (del Pezzo fibrations):\n\n";
            out += "| # | type | fibration | singularities | -Ky0^3 |\n"
                   "|---|------|-----------|---------------|--------|\n";
            idx = 1;
            for (const auto& r : reports) {
                if (const auto* i = std::get_if<TypeIData>(&r.link)) {
                    out += "| " + std::to_string(idx) + " | " + to_string(r.type) +
                           " | del Pezzo fibration of degree " + std::to_string(i->dp_degree) +
                           " | " + basket_str(r.basket) + " | " + i->ky03.str() + " |\n";
                }
                ++idx;
            }
            return out;
        }
        case OutputFormat::Csv: {
            std::string out = "index,type,linkType,contraction,dpDegree,singularities,ky3,fanoWeilIndex\n";
            int idx = 1;
            for (const auto& r : reports) {
                if (const auto* ii = std::get_if<TypeIIData>(&r.link)) {
                    out += std::to_string(idx) + "," + to_string(r.type) + ",II," +
                           to_string(ii->contraction) + ",," + basket_str(r.basket) + "," +
                           ii->ky3.str() + "," + std::to_string(ii->fano_weil_index) + "\n";
                } else {
                    const auto& i = std::get<TypeIData>(r.link);
                    out += std::to_string(idx) + "," + to_string(r.type) + ",I,," +
                           std::to_string(i.dp_degree) + "," + basket_str(r.basket) + "," +
                           i.ky03.str() + ",\n";
                }
                ++idx;
            }
            return out;
        }
        case OutputFormat::Json: {
            ordered_json j;
            j["typeII"] = ordered_json::array();
            j["typeI"] = ordered_json::array();
            for (const auto& r : reports) {
                if (std::holds_alternative<TypeIIData>(r.link))
                    j["typeII"].push_back(report_json_obj(r));
                else
                    j["typeI"].push_back(report_json_obj(r));
            }
            return dump(j);
        }
    }
    return {};
}

}  // namespace cubiclinks
