#include "homarea/errors.hpp"
#include "homarea/generators.hpp"
#include "homarea/io.hpp"
#include "homarea/oracle.hpp"
#include "homarea/sphere.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>

namespace homarea {

namespace {

using json = nlohmann::ordered_json;

struct Report {
    std::string mode;
    Rational sigma;
    HomotopyDecomposition decomposition;
    SolveStats stats;
    std::optional<Rational> sphere_area;
    bool infimum = false;
    std::optional<std::string> cycle_case;
    std::optional<Point> cut;
    double elapsed_ms = 0;
};

Report solve(const CurveFile &file, std::uint64_t *seed = nullptr) {
    Report r;
    SolveOptions options;
    if (seed) options.seed = *seed;
    auto t0 = std::chrono::steady_clock::now();
    if (file.kind == CurveKind::cycles) {
        if (file.sphere_area) throw InputError("sphere mode supports paths only");
        CycleResult c = min_homotopy_area_cycles(file.p, file.q);
        r.mode = "cycles";
        r.sigma = c.sigma;
        r.decomposition = c.decomposition;
        r.stats = c.stats;
        r.infimum = c.infimum;
        r.cycle_case = c.kind == CycleCase::crossing ? "crossing" : c.kind == CycleCase::nested ? "nested" : "disjoint";
        r.cut = c.cut;
    } else if (file.sphere_area) {
        HomotopyResult h = min_homotopy_area_sphere(file.p, file.q, *file.sphere_area, options);
        r.mode = "sphere";
        r.sigma = h.sigma;
        r.decomposition = h.decomposition;
        r.stats = h.stats;
        r.sphere_area = file.sphere_area;
    } else {
        HomotopyResult h = min_homotopy_area(file.p, file.q, options);
        r.mode = "paths";
        r.sigma = h.sigma;
        r.decomposition = h.decomposition;
        r.stats = h.stats;
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

Rational oracle_value(const CurveFile &file) {
    if (file.kind == CurveKind::cycles) return oracle_cycles(file.p, file.q).sigma;
    if (file.sphere_area) return oracle_sphere(file.p, file.q, *file.sphere_area);
    return oracle_dp(file.p, file.q);
}

std::string position_text(const CurvePosition &pos) {
    return std::to_string(pos.segment) + (pos.t == 0 ? "" : " + " + to_string(pos.t));
}

json position_json(const CurvePosition &pos) {
    return json{{"segment", pos.segment}, {"t", to_string(pos.t)}};
}

json stats_json(const Report &r) {
    return json{{"events", r.stats.events},
                {"genuine_events", r.stats.genuine_events},
                {"extension_events", r.stats.extension_events},
                {"representatives", r.stats.representatives},
                {"sweeps", r.stats.sweep.sweeps},
                {"events_processed", r.stats.sweep.events_processed},
                {"tree_updates", r.stats.sweep.tree_updates},
                {"node_visits", r.stats.sweep.node_visits},
                {"elapsed_ms", r.elapsed_ms}};
}

json report_json(const Report &r) {
    json anchors = json::array();
    for (const Anchor &a : r.decomposition.anchors)
        anchors.push_back({{"x", to_string(a.point.x)},
                           {"y", to_string(a.point.y)},
                           {"pos_p", position_json(a.pos_p)},
                           {"pos_q", position_json(a.pos_q)}});
    json j{{"sigma", to_string(r.sigma)},
           {"sigma_decimal", to_double(r.sigma)},
           {"sigma_decimal_is_approximate", true},
           {"anchors", anchors},
           {"mode", r.mode}};
    json costs = json::array();
    for (const Rational &c : r.decomposition.segment_costs) costs.push_back(to_string(c));
    j["segment_costs"] = costs;
    if (r.sphere_area) j["sphere_area"] = to_string(*r.sphere_area);
    if (r.cycle_case) {
        j["cycle_case"] = *r.cycle_case;
        j["infimum"] = r.infimum;
        if (r.cut) j["cut"] = {{"x", to_string(r.cut->x)}, {"y", to_string(r.cut->y)}};
    }
    j["stats"] = stats_json(r);
    return j;
}

void print_text(std::ostream &out, const Report &r) {
    out << "mode: " << r.mode << "\n";
    out << "sigma = " << to_string(r.sigma) << "\n";
    if (r.sigma.get_den() != 1)
        out << "sigma ~ " << std::setprecision(12) << to_double(r.sigma) << " (approximate)\n";
    if (r.sphere_area) out << "sphere area = " << to_string(*r.sphere_area) << "\n";
    if (r.cycle_case) {
        out << "cycles: " << *r.cycle_case << (r.infimum ? " (infimum, not attained)" : "") << "\n";
        if (r.cut) out << "cut at " << to_string(*r.cut) << "\n";
    }
    out << "anchors: " << r.decomposition.anchors.size() << "\n";
    for (const Anchor &a : r.decomposition.anchors)
        out << "  " << to_string(a.point) << "  P " << position_text(a.pos_p) << "  Q " << position_text(a.pos_q)
            << "\n";
}

void print_trace(std::ostream &out, const Report &r) {
    const auto &s = r.stats;
    out << "trace: events " << s.events << " (genuine " << s.genuine_events << ", extension " << s.extension_events
        << ")\n";
    out << "trace: representatives " << s.representatives << "\n";
    out << "trace: sweeps " << s.sweep.sweeps << ", events processed " << s.sweep.events_processed
        << ", tree updates " << s.sweep.tree_updates << ", node visits " << s.sweep.node_visits << "\n";
    if (s.sweep.sweeps)
        out << "trace: per sweep " << std::setprecision(6)
            << static_cast<double>(s.sweep.events_processed) / static_cast<double>(s.sweep.sweeps) << " events, "
            << static_cast<double>(s.sweep.tree_updates) / static_cast<double>(s.sweep.sweeps) << " updates, "
            << static_cast<double>(s.sweep.node_visits) / static_cast<double>(s.sweep.sweeps) << " node visits\n";
    out << "trace: elapsed " << std::setprecision(6) << r.elapsed_ms << " ms\n";
}

CurveFile load(const std::string &path, const std::string &sphere_area) {
    CurveFile f = read_curve_file(path);
    if (!sphere_area.empty()) {
        auto a = parse_rational(sphere_area);
        if (!a) throw InputError("--sphere-area: malformed number '" + sphere_area + "'");
        f.sphere_area = *a;
    }
    return f;
}

CurveFile generate(const std::string &family, const std::vector<std::string> &params) {
    auto num = [&](std::size_t k, const char *what) -> std::uint64_t {
        if (k >= params.size()) throw InputError(family + ": missing parameter " + what);
        try {
            std::size_t used = 0;
            unsigned long long v = std::stoull(params[k], &used);
            if (used != params[k].size()) throw std::invalid_argument(params[k]);
            return v;
        } catch (const std::exception &) {
            throw InputError(family + ": " + what + " must be a non-negative integer");
        }
    };
    CurveFile f;
    CurvePair c;
    if (family == "zigzag") c = gen_zigzag(num(0, "n"));
    else if (family == "lens") c = gen_lens();
    else if (family == "figure-eight") c = gen_figure_eight();
    else if (family == "random-monotone") c = gen_random_monotone(num(0, "n"), params.size() > 1 ? num(1, "seed") : 0);
    else if (family == "random-walks") c = gen_random_walks(num(0, "size"), params.size() > 1 ? num(1, "seed") : 0);
    else if (family == "random-polylines")
        c = gen_random_polylines(num(0, "k"), num(1, "size"), params.size() > 2 ? num(2, "seed") : 0);
    else if (family == "random-cycles") {
        c = gen_random_cycles(num(0, "cells"), params.size() > 1 ? num(1, "seed") : 0);
        f.kind = CurveKind::cycles;
    } else {
        throw InputError("unknown family '" + family +
                         "' (zigzag, lens, figure-eight, random-monotone, random-walks, random-polylines, random-cycles)");
    }
    f.p = std::move(c.p);
    f.q = std::move(c.q);
    return f;
}

} // namespace

int run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Minimum homotopy area between polygonal curves", "homarea"};
    app.require_subcommand(1);

    std::string file, svg_path, sphere_area, family, output;
    std::vector<std::string> params;
    bool as_json = false, trace = false;

    auto common = [&](CLI::App *sub) {
        sub->add_option("file", file, "curve file")->required();
        sub->add_flag("--json", as_json, "machine-readable report");
        sub->add_flag("--trace", trace, "sweep statistics");
        sub->add_option("--sphere-area", sphere_area, "solve on a sphere of this total area");
    };
    CLI::App *area = app.add_subcommand("area", "minimum homotopy area and anchors");
    common(area);
    CLI::App *check = app.add_subcommand("check", "compare the fast solver with the brute-force oracle");
    common(check);
    CLI::App *render = app.add_subcommand("render", "write an SVG of the winding diagram");
    common(render);
    render->add_option("--svg", svg_path, "output path")->required();
    CLI::App *gen = app.add_subcommand("gen", "emit a generated instance");
    gen->add_option("family", family, "zigzag, lens, figure-eight, random-monotone, random-walks, random-polylines, random-cycles")
        ->required();
    gen->add_option("params", params, "family parameters (n, seed, ...)");
    gen->add_option("-o,--output", output, "write to a file instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (gen->parsed()) {
            std::string text = serialize_curve_file(generate(family, params));
            if (output.empty()) {
                out << text;
            } else {
                std::ofstream f(output, std::ios::binary);
                if (!f || !(f << text)) throw InputError("cannot write '" + output + "'");
            }
            return 0;
        }
        CurveFile f = load(file, sphere_area);
        Report r = solve(f);
        if (area->parsed()) {
            if (as_json) out << report_json(r).dump(2) << "\n";
            else print_text(out, r);
            if (trace) print_trace(as_json ? err : out, r);
            return 0;
        }
        if (check->parsed()) {
            Rational o = oracle_value(f);
            bool agree = o == r.sigma;
            if (as_json) {
                json j = report_json(r);
                j["oracle_sigma"] = to_string(o);
                j["agree"] = agree;
                out << j.dump(2) << "\n";
            } else {
                out << "sigma = " << to_string(r.sigma) << "\n";
                out << "oracle = " << to_string(o) << "\n";
                out << (agree ? "agree" : "MISMATCH") << "\n";
            }
            if (trace) print_trace(as_json ? err : out, r);
            return agree ? 0 : 1;
        }
        std::vector<Point> marks;
        for (const Anchor &a : r.decomposition.anchors) marks.push_back(a.point);
        if (r.cut) marks.push_back(*r.cut);
        std::string svg = render_svg(f, marks);
        std::ofstream s(svg_path, std::ios::binary);
        if (!s || !(s << svg)) throw InputError("cannot write '" + svg_path + "'");
        if (as_json) out << report_json(r).dump(2) << "\n";
        else out << "wrote " << svg_path << "\n";
        return 0;
    } catch (const InputError &e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace homarea
