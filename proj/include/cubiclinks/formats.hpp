#pragma once

#include <string>
#include <string_view>

#include "cubiclinks/classify.hpp"
#include "cubiclinks/link_game.hpp"

namespace cubiclinks {

enum class OutputFormat { Md, Csv, Json };

OutputFormat parse_format(std::string_view s);  // throws on unknown format

// All emitters are deterministic: fixed key order, canonical line order,
// rationals in lowest terms ("p/q" with "p/1" in JSON, bare integers in
// markdown/CSV).

std::string render_lines(OutputFormat fmt);
std::string render_secancy(const SurfaceClass& c, OutputFormat fmt);
std::string render_normalize(const SurfaceClass& input, OutputFormat fmt);
std::string render_h0(const SurfaceClass& c, OutputFormat fmt);
std::string render_cubics(const SurfaceClass& c, OutputFormat fmt);
std::string render_classify(const SurfaceClass& c, OutputFormat fmt);
std::string render_enumerate(OutputFormat fmt);
std::string render_analyze(const SurfaceClass& c, OutputFormat fmt);
std::string render_tables(OutputFormat fmt);

std::string link_report_json(const LinkReport& r);
std::string move_word_str(const MoveWord& w);

}  // namespace cubiclinks
