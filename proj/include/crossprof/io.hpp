#pragma once

#include "crossprof/constructions.hpp"
#include "crossprof/profile.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crossprof {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what);
    std::size_t line, column;  // 1-based
};

// Valid syntax but not in general position; lines are 1-based file lines of the offending points.
class DrawingFileError : public std::runtime_error {
public:
    DrawingFileError(GeneralPositionReport report, std::vector<std::size_t> lines);
    GeneralPositionReport report;
    std::vector<std::size_t> lines;
};

// "n" then n lines "x y"; coordinates are integers or p/q; '#' starts a comment.
Drawing parse_drawing(const std::string& text);
std::string serialize_drawing(const Drawing& d);

Rational parse_rational(const std::string& token);  // throws std::invalid_argument

struct SvgOptions {
    enum class Highlight { None, Designated, Counts };
    Highlight highlight = Highlight::None;
    std::vector<EdgeId> designated;
    int precision = 6;   // significant digits in coordinates
    double size = 600;   // viewbox side length
};

std::string render_svg(const Drawing& d, const SvgOptions& options = {});

struct ReportOptions {
    bool primed = false;
    bool k_edges = false;
    const GeneratedDrawing* generated = nullptr;  // adds the designated-edge block
};

inline constexpr const char* kProfileSchema = "crossprof.profile/1";

// JSON document; see README for the fields.
std::string profile_report_json(const Drawing& d, const ReportOptions& options = {});
std::string profile_report_text(const Drawing& d, const ReportOptions& options = {});

}  // namespace crossprof
