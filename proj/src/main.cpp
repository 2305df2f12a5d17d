#include <iostream>

#include <CLI11.hpp>

#include "planefold/cli.hpp"

using namespace planefold;

int main(int argc, char** argv) {
    CLI::App app{"planefold: plane-filling folding curves and covering patches"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string family = "tri";
    std::vector<int64_t> anchor;

    auto add_family = [&](CLI::App* cmd) {
        cmd->add_option("--family", family, "square | tri | gosper")
            ->check(CLI::IsMember({"square", "tri", "gosper"}));
        cmd->add_option("--spec", cfg.spec, "sign string, e.g. ++-");
    };
    auto add_render_opts = [&](CLI::App* cmd) {
        cmd->add_option("--stroke-width", cfg.render.stroke_width, "stroke width, side lengths");
        cmd->add_option("--rounding", cfg.render.rounding, "corner arc radius, side lengths");
        cmd->add_option("--scale", cfg.render.scale, "pixels per side");
    };

    CLI::App* gen = app.add_subcommand("gen", "generate a curve or covering patch");
    add_family(gen);
    gen->add_flag("--covering", cfg.covering, "build a covering patch instead of one curve");
    gen->add_option("--radius", cfg.radius, "hexagon window radius for --covering");
    gen->add_option("--anchor", anchor, "lattice anchor a,b")->expected(2);
    gen->add_option("--json", cfg.json_path, "write JSON here");
    gen->add_option("--svg", cfg.svg_path, "write SVG here");
    add_render_opts(gen);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", cfg.suite, "tri-selfavoid | gosper-extensions | lip")
        ->required();
    verify->add_option("--max-n", cfg.max_n, "max fold order for exhaustive suites");
    verify->add_option("--radius", cfg.radius, "patch radius for the lip suite");
    verify->add_option("--spec", cfg.spec, "sign string for the lip suite");

    CLI::App* render = app.add_subcommand("render", "render generated JSON to SVG");
    render->add_option("--in", cfg.in_path, "input JSON")->required();
    render->add_option("--out", cfg.out_path, "output SVG")->required();
    add_render_opts(render);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    cfg.family = family == "square" ? Family::Square
                 : family == "tri"  ? Family::Triangular
                                    : Family::Gosper;
    if (anchor.size() == 2) cfg.anchor = {anchor[0], anchor[1]};

    if (gen->parsed()) return run_generate(cfg, std::cout, std::cerr);
    if (verify->parsed()) return run_verify(cfg, std::cout, std::cerr);
    return run_render(cfg, std::cerr);
}
