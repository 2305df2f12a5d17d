#pragma once

#include <iosfwd>

#include "planefold/lip.hpp"

namespace planefold {

struct RenderOptions {
    double stroke_width = 0.08;  // side lengths
    double rounding = 0.2;       // corner arc radius, side lengths
    double scale = 40.0;         // pixels per side
};

struct RunConfig {
    Family family = Family::Triangular;
    std::string spec;  // "+-+" style
    Eisen anchor{0, 0};
    bool covering = false;
    int64_t radius = 0;
    std::string json_path, svg_path;  // gen outputs
    std::string in_path, out_path;    // render input/output
    std::string suite;                // verify
    int max_n = 7;
    RenderOptions render;
};

// Circular-arc corner fillet: the two segments are cut back by `cut` and
// joined by an arc of the given radius; `clearance` is the distance from the
// corner vertex to the arc. turn_angle is the deviation from straight.
struct Fillet {
    double cut = 0.0;
    double radius = 0.0;
    double clearance = 0.0;
};
Fillet fillet_for(double rounding_sides, double side_len, double turn_angle);

std::string curve_to_json(const EmbeddedCurve& c, const std::string& spec_string);
std::string patch_to_json(const CoveringPatch& p, const std::string& spec_string);

struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses a curve or patch document into its curve list (for rendering).
std::vector<EmbeddedCurve> curves_from_json(const std::string& text);

std::string render_svg(const std::vector<EmbeddedCurve>& curves, const RenderOptions& opt);

// Exit codes: 0 ok, 2 usage/parse, 3 construction, 4 verification failure.
int run_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_render(const RunConfig& cfg, std::ostream& err);

}  // namespace planefold
