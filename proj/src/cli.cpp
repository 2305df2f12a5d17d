#include "planefold/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "planefold/coverings.hpp"

namespace planefold {

using nlohmann::json;

namespace {

const char* family_name(Family f) {
    switch (f) {
        case Family::Square: return "square";
        case Family::Triangular: return "tri";
        default: return "gosper";
    }
}

Family family_of(const std::string& s) {
    if (s == "square") return Family::Square;
    if (s == "tri") return Family::Triangular;
    if (s == "gosper") return Family::Gosper;
    throw BadInput("unknown family: " + s);
}

json curve_fields(const EmbeddedCurve& c) {
    json j;
    j["family"] = family_name(c.family);
    j["start"] = {c.start.a, c.start.b};
    j["dir"] = c.start_dir;
    j["word"] = c.word;
    json edges = json::array();
    for (size_t k = 0; k + 1 < c.vertices.size(); ++k)
        edges.push_back({c.vertices[k].a, c.vertices[k].b, c.vertices[k + 1].a,
                         c.vertices[k + 1].b});
    j["edges"] = std::move(edges);
    return j;
}

EmbeddedCurve curve_from_fields(const json& j) {
    Family f = family_of(j.at("family").get<std::string>());
    Eisen start{j.at("start").at(0).get<int64_t>(), j.at("start").at(1).get<int64_t>()};
    int dir = j.at("dir").get<int>();
    TurnWord word = j.at("word").get<TurnWord>();
    EmbeddedCurve c = embed(word, f, start, dir);
    const json& edges = j.at("edges");
    if (edges.size() != c.segments()) throw BadInput("edge list does not match word");
    for (size_t k = 0; k < edges.size(); ++k) {
        Eisen from{edges[k].at(0).get<int64_t>(), edges[k].at(1).get<int64_t>()};
        Eisen to{edges[k].at(2).get<int64_t>(), edges[k].at(3).get<int64_t>()};
        if (from != c.vertices[k] || to != c.vertices[k + 1])
            throw BadInput("edge list does not match word");
    }
    return c;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// --- SVG ---

struct Pt {
    double x = 0.0, y = 0.0;
};

Pt screen_point(Eisen v, Family f, double scale) {
    if (f == Family::Square)
        return {scale * static_cast<double>(v.a), -scale * static_cast<double>(v.b)};
    return {scale * v.x(), -scale * v.y()};
}

std::string fmt6(double v) {
    if (std::abs(v) < 5e-7) v = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd", "#ff7f0e", "#8c564b"};

std::string curve_path(const std::vector<Pt>& p, double side_px, const RenderOptions& opt) {
    std::string d = "M " + fmt6(p[0].x) + " " + fmt6(p[0].y);
    for (size_t k = 1; k + 1 < p.size(); ++k) {
        double ux = p[k].x - p[k - 1].x, uy = p[k].y - p[k - 1].y;
        double vx = p[k + 1].x - p[k].x, vy = p[k + 1].y - p[k].y;
        double lu = std::hypot(ux, uy), lv = std::hypot(vx, vy);
        ux /= lu, uy /= lu, vx /= lv, vy /= lv;
        double turn = std::atan2(ux * vy - uy * vx, ux * vx + uy * vy);
        if (std::abs(turn) < 1e-9) {
            d += " L " + fmt6(p[k].x) + " " + fmt6(p[k].y);
            continue;
        }
        Fillet f = fillet_for(opt.rounding, side_px, turn);
        double cut = std::min(f.cut, 0.499 * std::min(lu, lv));
        double ax = p[k].x - ux * cut, ay = p[k].y - uy * cut;
        double bx = p[k].x + vx * cut, by = p[k].y + vy * cut;
        // arc center sits on the corner bisector, R/sin(psi/2) from the vertex
        double nx = vx - ux, ny = vy - uy;
        double ln = std::hypot(nx, ny);
        double half = 0.5 * (M_PI - std::abs(turn));
        double cd = f.radius / std::sin(half);
        double cx = p[k].x + nx / ln * cd, cy = p[k].y + ny / ln * cd;
        int sweep = ((ax - cx) * (by - cy) - (ay - cy) * (bx - cx)) > 0 ? 1 : 0;
        d += " L " + fmt6(ax) + " " + fmt6(ay);
        d += " A " + fmt6(f.radius) + " " + fmt6(f.radius) + " 0 0 " + std::to_string(sweep) +
             " " + fmt6(bx) + " " + fmt6(by);
    }
    d += " L " + fmt6(p.back().x) + " " + fmt6(p.back().y);
    return d;
}

// --- verify suites ---

struct Check {
    std::string name;
    bool pass = true;
    int64_t count = 0;
    std::string counterexample = {};
};

Check suite_tri_selfavoid(int max_n) {
    Check ck;
    ck.name = "tri-selfavoid";
    for (int n = 1; n <= max_n && ck.pass; ++n)
        for (uint32_t bits = 0; bits < (1u << n); ++bits) {
            std::vector<int> signs;
            std::string spec;
            for (int i = 0; i < n; ++i) {
                signs.push_back(bits >> i & 1 ? 1 : -1);
                spec += bits >> i & 1 ? '+' : '-';
            }
            EmbeddedCurve c =
                embed(tri_fold_word({Family::Triangular, signs}), Family::Triangular, {0, 0}, 0);
            ++ck.count;
            if (!is_self_avoiding(c).ok) {
                ck.pass = false;
                ck.counterexample = spec;
                break;
            }
        }
    return ck;
}

Check suite_gosper_extensions() {
    Check ck;
    ck.name = "gosper-extensions";
    GosperTiling t{{+1, +1}};
    Eisen parent{0, 0};
    auto pcorners = tile_corners(t, 1, parent);
    for (Eisen h : tile_children(t, 1, parent)) {
        int wc = 0;
        for (Eisen pc : pcorners)
            for (int v = 0; v < 6; ++v)
                if (hex_vertex(h, v) == pc && w_class(pc) == WClass::W) ++wc;
        auto wv = w_vertices_of_hexagon(h);
        std::vector<int> counts;
        for (int a = 0; a < 3; ++a) {
            Eisen u = wv[static_cast<size_t>(a)], w = wv[static_cast<size_t>((a + 1) % 3)];
            EmbeddedCurve chord = embed({}, Family::Gosper, u, dir_index_of(w - u, kTheta));
            counts.push_back(static_cast<int>(enumerate_extensions(t, chord, 1, parent, h).size()));
            ++ck.count;
        }
        std::sort(counts.rbegin(), counts.rend());
        std::vector<int> want = h == parent ? std::vector<int>{1, 1, 1}
                               : wc == 1    ? std::vector<int>{2, 1, 0}
                                            : std::vector<int>{3, 0, 0};
        if (counts != want) {
            ck.pass = false;
            std::ostringstream os;
            os << "child " << h << " counts (" << counts[0] << "," << counts[1] << ","
               << counts[2] << ")";
            ck.counterexample = os.str();
            break;
        }
    }
    return ck;
}

std::vector<Check> suite_lip(const std::vector<int>& signs, int64_t radius) {
    CoveringPatch p = build_tri_covering_patch(signs, {0, 0}, 1, radius);
    std::vector<int64_t> radii;
    for (int64_t r = 1; 6 * r <= radius && r <= 9; r *= 3) radii.push_back(r);
    std::vector<Check> out;
    for (const LipRadiusReport& rep : strong_lip_report(p, radii, 5, 0, true)) {
        Check ck;
        ck.name = "lip-r" + std::to_string(rep.r);
        ck.count = static_cast<int64_t>(rep.centers);
        ck.pass = rep.failures == 0;
        if (rep.first_failure) {
            std::ostringstream os;
            os << "no recurrence near " << *rep.first_failure;
            ck.counterexample = os.str();
        }
        out.push_back(std::move(ck));
    }
    return out;
}

}  // namespace

Fillet fillet_for(double rounding_sides, double side_len, double turn_angle) {
    Fillet f;
    f.radius = rounding_sides * side_len;
    double t = std::abs(turn_angle);
    f.cut = f.radius * std::tan(0.5 * t);
    f.clearance = f.radius / std::sin(0.5 * (M_PI - t)) - f.radius;
    return f;
}

std::string curve_to_json(const EmbeddedCurve& c, const std::string& spec_string) {
    json j = curve_fields(c);
    j["spec"] = spec_string;
    return dump(j);
}

std::string patch_to_json(const CoveringPatch& p, const std::string& spec_string) {
    json j;
    j["family"] = family_name(p.family);
    j["spec"] = spec_string;
    j["window"] = p.radius;
    json curves = json::array();
    for (const EmbeddedCurve& c : p.curves) curves.push_back(curve_fields(c));
    j["curves"] = std::move(curves);
    j["truncated"] = p.truncated;
    return dump(j);
}

std::vector<EmbeddedCurve> curves_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
        std::vector<EmbeddedCurve> out;
        if (j.contains("curves"))
            for (const json& c : j.at("curves")) out.push_back(curve_from_fields(c));
        else
            out.push_back(curve_from_fields(j));
        if (out.empty()) throw BadInput("document holds no curves");
        return out;
    } catch (const json::exception& e) {
        throw BadInput(std::string("malformed document: ") + e.what());
    }
}

std::string render_svg(const std::vector<EmbeddedCurve>& curves, const RenderOptions& opt) {
    double lox = 1e30, loy = 1e30, hix = -1e30, hiy = -1e30;
    std::vector<std::vector<Pt>> pts;
    for (const EmbeddedCurve& c : curves) {
        std::vector<Pt> p;
        for (Eisen v : c.vertices) {
            Pt q = screen_point(v, c.family, opt.scale);
            lox = std::min(lox, q.x), hix = std::max(hix, q.x);
            loy = std::min(loy, q.y), hiy = std::max(hiy, q.y);
            p.push_back(q);
        }
        pts.push_back(std::move(p));
    }
    double side = curves.front().family == Family::Gosper ? std::sqrt(3.0) : 1.0;
    double side_px = side * opt.scale;
    double margin = side_px;
    double w = hix - lox + 2 * margin, h = hiy - loy + 2 * margin;

    std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" +
           fmt6(lox - margin) + " " + fmt6(loy - margin) + " " + fmt6(w) + " " + fmt6(h) +
           "\" width=\"" + fmt6(w) + "\" height=\"" + fmt6(h) + "\">\n";
    for (size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].size() < 2) continue;
        svg += "  <path d=\"" + curve_path(pts[i], side_px, opt) + "\" fill=\"none\" stroke=\"" +
               kPalette[i % 6] + "\" stroke-width=\"" + fmt6(opt.stroke_width * side_px) +
               "\" stroke-linecap=\"round\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

namespace {

int write_file(const std::string& path, const std::string& text, std::ostream& err) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        err << "cannot open " << path << " for writing\n";
        return 3;
    }
    f << text;
    return 0;
}

}  // namespace

int run_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::string jtext;
    std::vector<EmbeddedCurve> curves;
    try {
        FoldSpec spec = parse_spec(cfg.family, cfg.spec);
        if (cfg.covering) {
            if (cfg.family != Family::Triangular) {
                err << "coverings are generated for --family tri only\n";
                return 2;
            }
            CoveringPatch p = build_tri_covering_patch(spec.signs, cfg.anchor, 1, cfg.radius);
            jtext = patch_to_json(p, cfg.spec);
            curves = p.curves;
        } else {
            TurnWord word = cfg.family == Family::Square      ? square_fold_word(spec)
                            : cfg.family == Family::Triangular ? tri_fold_word(spec)
                                                               : gosper_word(spec);
            Eisen start = cfg.anchor;
            if (cfg.family == Family::Gosper && start == Eisen{0, 0}) start = {1, 0};
            EmbeddedCurve c = embed(word, cfg.family, start, 0);
            jtext = curve_to_json(c, cfg.spec);
            curves = {c};
        }
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 3;
    }
    if (!cfg.json_path.empty())
        if (int rc = write_file(cfg.json_path, jtext, err)) return rc;
    if (!cfg.svg_path.empty())
        if (int rc = write_file(cfg.svg_path, render_svg(curves, cfg.render), err)) return rc;
    if (cfg.json_path.empty() && cfg.svg_path.empty()) out << jtext;
    return 0;
}

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::vector<Check> checks;
    auto t0 = std::chrono::steady_clock::now();
    try {
        if (cfg.suite == "tri-selfavoid") {
            checks.push_back(suite_tri_selfavoid(cfg.max_n));
        } else if (cfg.suite == "gosper-extensions") {
            checks.push_back(suite_gosper_extensions());
        } else if (cfg.suite == "lip") {
            std::vector<int> signs = parse_spec(Family::Triangular,
                                                cfg.spec.empty() ? "++" : cfg.spec)
                                         .signs;
            checks = suite_lip(signs, cfg.radius > 0 ? cfg.radius : 27);
        } else {
            err << "unknown suite: " << cfg.suite
                << " (expected tri-selfavoid, gosper-extensions or lip)\n";
            return 2;
        }
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 3;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();

    json rep;
    rep["suite"] = cfg.suite;
    rep["ms"] = ms;
    bool pass = true;
    json list = json::array();
    for (const Check& ck : checks) {
        json c;
        c["name"] = ck.name;
        c["pass"] = ck.pass;
        c["count"] = ck.count;
        if (!ck.pass) c["counterexample"] = ck.counterexample;
        pass = pass && ck.pass;
        list.push_back(std::move(c));
    }
    rep["checks"] = std::move(list);
    rep["pass"] = pass;
    out << dump(rep);
    return pass ? 0 : 4;
}

int run_render(const RunConfig& cfg, std::ostream& err) {
    std::ifstream f(cfg.in_path, std::ios::binary);
    if (!f) {
        err << "cannot read " << cfg.in_path << "\n";
        return 2;
    }
    std::ostringstream buf;
    buf << f.rdbuf();
    try {
        std::vector<EmbeddedCurve> curves = curves_from_json(buf.str());
        return write_file(cfg.out_path, render_svg(curves, cfg.render), err) ? 3 : 0;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 2;
    }
}

}  // namespace planefold
