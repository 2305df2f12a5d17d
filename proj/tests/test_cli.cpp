#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "planefold/cli.hpp"
#include "planefold/coverings.hpp"

using namespace planefold;

namespace {

size_t count_paths(const std::string& svg) {
    size_t n = 0;
    for (size_t at = svg.find("<path"); at != std::string::npos; at = svg.find("<path", at + 1))
        ++n;
    return n;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("gen writes curve json and svg") {
    RunConfig cfg;
    cfg.family = Family::Triangular;
    cfg.spec = "+++";
    cfg.svg_path = "test_cli_tri.svg";
    std::ostringstream out, err;
    CHECK(run_generate(cfg, out, err) == 0);
    std::string svg = slurp(cfg.svg_path);
    CHECK(svg.starts_with("<?xml"));
    CHECK(count_paths(svg) == 1);

    RunConfig gj;
    gj.family = Family::Gosper;
    gj.spec = "+";
    std::ostringstream jout;
    CHECK(run_generate(gj, jout, err) == 0);
    auto j = nlohmann::json::parse(jout.str());
    CHECK(j.at("family") == "gosper");
    CHECK(j.at("edges").size() == 7);
    CHECK(j.at("word") == nlohmann::json({1, 2, -1, -2, 0, -1}));
}

TEST_CASE("gen exit codes") {
    std::ostringstream out, err;

    RunConfig bad;
    bad.family = Family::Triangular;
    bad.spec = "+x";
    CHECK(run_generate(bad, out, err) == 2);

    RunConfig small;
    small.family = Family::Triangular;
    small.spec = "++";
    small.covering = true;
    small.radius = 2;  // below the diameter bound for two folds
    CHECK(run_generate(small, out, err) == 3);

    RunConfig sq;
    sq.family = Family::Square;
    sq.spec = "++";
    sq.covering = true;
    sq.radius = 10;
    CHECK(run_generate(sq, out, err) == 2);
}

TEST_CASE("json round trip is byte identical") {
    EmbeddedCurve c = embed(tri_fold_word({Family::Triangular, {1, -1}}), Family::Triangular,
                            {2, -1}, 1);
    std::string once = curve_to_json(c, "+-");
    auto curves = curves_from_json(once);
    REQUIRE(curves.size() == 1);
    CHECK(curve_to_json(curves[0], "+-") == once);

    CoveringPatch p = build_tri_covering_patch({1, 1}, {0, 0}, 1, 14);
    std::string ptext = patch_to_json(p, "++");
    auto parsed = nlohmann::json::parse(ptext);
    CHECK(parsed.dump(2) + "\n" == ptext);
    CHECK(curves_from_json(ptext).size() == p.curves.size());
    CHECK(parsed.at("truncated").size() == p.curves.size());
    CHECK(parsed.at("window") == 14);
}

TEST_CASE("malformed render input") {
    CHECK_THROWS_AS(curves_from_json("{ not json"), BadInput);
    CHECK_THROWS_AS(curves_from_json("{\"curves\": []}"), BadInput);
    // edges inconsistent with the word
    EmbeddedCurve c = embed({1}, Family::Triangular, {0, 0}, 0);
    auto j = nlohmann::json::parse(curve_to_json(c, "x"));
    j["edges"][0][2] = 5;
    CHECK_THROWS_AS(curves_from_json(j.dump()), BadInput);

    RunConfig cfg;
    cfg.in_path = "does_not_exist.json";
    cfg.out_path = "unused.svg";
    std::ostringstream err;
    CHECK(run_render(cfg, err) == 2);
}

TEST_CASE("render is deterministic and keeps curves apart") {
    CoveringPatch p = connect_limit_patch({1, 1, 1}, {{0, 0}, {0, 0}, {0, 0}, {0, 0}}, 1, 20);
    CoveringPatch merged = p;  // keep only the 3 curves joined at the connection vertex
    merged.curves.clear();
    merged.truncated.clear();
    for (const EmbeddedCurve& c : p.curves)
        for (Eisen v : c.vertices)
            if (v == *p.connection_vertex) {
                merged.curves.push_back(c);
                merged.truncated.push_back(false);
                break;
            }
    REQUIRE(merged.curves.size() == 3);
    std::string text = patch_to_json(merged, "+++");
    {
        std::ofstream f("test_cli_patch.json", std::ios::binary);
        f << text;
    }
    RunConfig cfg;
    cfg.in_path = "test_cli_patch.json";
    cfg.out_path = "test_cli_patch.svg";
    std::ostringstream err;
    CHECK(run_render(cfg, err) == 0);
    std::string first = slurp(cfg.out_path);
    CHECK(count_paths(first) == 3);  // the merged limit patch carries 3 curves
    CHECK(run_render(cfg, err) == 0);
    CHECK(slurp(cfg.out_path) == first);
}

TEST_CASE("corner fillets clear the vertices") {
    // turn angles that occur: square 90, tri 120, gosper 60/120 degrees
    for (double deg : {60.0, 90.0, 120.0}) {
        Fillet f = fillet_for(0.2, 1.0, deg * M_PI / 180.0);
        CHECK(f.cut < 0.5);         // cut points stay inside each half-side
        CHECK(f.clearance > 0.01);  // the arc never reaches the vertex
        // fillet tangency: the arc center is radius away from both cut points
        double half = 0.5 * (M_PI - deg * M_PI / 180.0);
        double center_d = f.radius / std::sin(half);
        double cut_d = std::hypot(f.cut, 0.0);
        CHECK(std::abs(center_d * std::cos(half) - cut_d) < 1e-12);
    }
    // rounding below half a side keeps arcs of distinct passes disjoint: each
    // arc lies inside its own 60-degree corner wedge within radius 1/2
    Fillet tri = fillet_for(0.2, 1.0, 2.0 * M_PI / 3.0);
    CHECK(tri.cut + tri.radius < 1.0);
}

TEST_CASE("verify suites") {
    std::ostringstream out, err;
    RunConfig sa;
    sa.suite = "tri-selfavoid";
    sa.max_n = 7;
    CHECK(run_verify(sa, out, err) == 0);
    auto rep = nlohmann::json::parse(out.str());
    CHECK(rep.at("pass") == true);
    CHECK(rep.at("checks").at(0).at("count") == 254);  // 2 + 4 + ... + 128

    std::ostringstream out2;
    RunConfig ge;
    ge.suite = "gosper-extensions";
    CHECK(run_verify(ge, out2, err) == 0);
    auto rep2 = nlohmann::json::parse(out2.str());
    CHECK(rep2.at("checks").at(0).at("count") == 21);  // 3 coverings x 7 children

    std::ostringstream out3;
    RunConfig lip;
    lip.suite = "lip";
    lip.radius = 27;
    CHECK(run_verify(lip, out3, err) == 0);
    auto rep3 = nlohmann::json::parse(out3.str());
    CHECK(rep3.at("checks").size() == 2);  // window radii 1 and 3 fit in 27

    std::ostringstream out4;
    RunConfig unk;
    unk.suite = "nope";
    CHECK(run_verify(unk, out4, err) == 2);
}
