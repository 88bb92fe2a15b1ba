// incidence_lab: command-line harness over the ilab library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "ilab/cover.hpp"
#include "ilab/detect.hpp"
#include "ilab/error.hpp"
#include "ilab/fitter.hpp"
#include "ilab/gen.hpp"
#include "ilab/incidence.hpp"
#include "ilab/io.hpp"

using namespace ilab;

namespace {

struct Settings {
    std::string kind;
    std::size_t lines = 0;
    std::size_t circles = 0;
    std::string family = "first";
    std::size_t grid = 10;
    std::string scene;
    std::string out;
    std::string format = "json";
    std::uint64_t seed = 1;
    std::string A = "3";
    std::size_t max_rounds = 1000;
    std::size_t retry_cap = 20;
    std::size_t seed_budget = 2000;
};

void emit(const Settings& s, const std::string& text) {
    if (s.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(s.out, std::ios::binary);
    if (!f) throw ParseError("cannot open output file '" + s.out + "'");
    f << text;
}

Rational threshold(const Settings& s) {
    const Rational A = parse_rational(s.A);
    if (A <= 0) throw ContractError("--A must be positive");
    return A;
}

Scene load(const Settings& s) {
    if (s.scene.empty()) throw ParseError("--scene is required");
    return read_scene_file(s.scene);
}

CoverOptions cover_options(const Settings& s, const Rational& A) {
    CoverOptions opt;
    opt.A = A;
    opt.seed = s.seed;
    opt.max_rounds = s.max_rounds;
    opt.retry_cap = s.retry_cap;
    return opt;
}

DetectOptions detect_options(const Settings& s, const Rational& A) {
    DetectOptions opt;
    opt.A = A;
    opt.seed = s.seed;
    opt.seed_budget = s.seed_budget;
    return opt;
}

Rational detect_threshold(const Rational& A) {
    const Rational c(ceil_of(A));
    return c < 3 ? Rational(3) : c;
}

void run_generate(const Settings& s) {
    if (s.kind == "hyperboloid") {
        emit(s, dump(scene_to_json(gen_hyperboloid(s.lines, s.circles, parse_family(s.family)))));
    } else if (s.kind == "planar") {
        emit(s, dump(scene_to_json(gen_planar(s.lines, s.circles))));
    } else if (s.kind == "generic") {
        emit(s, dump(scene_to_json(gen_generic(s.lines, s.circles, s.seed))));
    } else if (s.kind == "quartic-check") {
        const auto grid = distinct_params(s.grid);
        emit(s, dump(to_json(complex_quartic_check(grid, grid))));
    } else {
        throw ParseError("unknown --kind '" + s.kind + "'");
    }
}

void run_incidences(const Settings& s) {
    const auto rep = all_incidences(load(s));
    if (s.format == "csv") {
        emit(s, incidences_csv(rep));
    } else if (s.format == "json") {
        emit(s, dump(to_json(rep)));
    } else {
        throw ParseError("unknown --format '" + s.format + "'");
    }
}

void run_fit(const Settings& s) {
    const Scene scene = load(s);
    const auto fit = min_degree_surface(curve_refs(scene));
    Json j = to_json(fit);
    j["trivialBound"] = trivial_degree_bound(scene.size());
    emit(s, dump(j));
}

void run_cover(const Settings& s) {
    const Rational A = threshold(s);
    emit(s, dump(to_json(cover_collections(load(s), cover_options(s, A)))));
}

void run_detect(const Settings& s) {
    const Rational A = threshold(s);
    emit(s, dump(to_json(find_structured_families(load(s), detect_options(s, A)))));
}

void run_report(const Settings& s) {
    const Rational A = threshold(s);
    emit(s, dump(to_json(bound_report(load(s), A, s.seed))));
}

void run_verify(const Settings& s) {
    const Rational A = threshold(s);
    const Scene scene = load(s);
    const auto pruned = prune(scene, A);
    const auto incidences = all_incidences(scene);
    const auto families = find_structured_families(scene, detect_options(s, detect_threshold(A)));
    const auto cover = cover_collections(pruned.scene, cover_options(s, A));
    const auto bound = bound_report(scene, A, s.seed);
    Json j;
    j["A"] = to_json(A);
    j["seed"] = s.seed;
    j["prune"] = to_json(pruned);
    j["totalPoints"] = incidences.total_points();
    j["prunedPoints"] = all_incidences(pruned.scene).total_points();
    j["families"] = to_json(families);
    j["cover"] = to_json(cover);
    j["bound"] = to_json(bound);
    emit(s, dump(j));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact line/circle incidence experiments in R^3."};
    app.footer(
        "Exit codes: 0 ok, 2 parse error (bad flags, unreadable or malformed scene),\n"
        "3 contract violation (precondition named in the message), 4 algorithm failure.\n"
        "INCIDENCE_LAB_THREADS caps the number of worker threads.");
    app.require_subcommand(1);
    Settings s;

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--scene", s.scene, "Scene JSON file")->required();
        cmd->add_option("--out", s.out, "Output file (default: stdout)");
    };
    auto add_seed = [&](CLI::App* cmd) { cmd->add_option("--seed", s.seed, "RNG seed")->capture_default_str(); };
    auto add_A = [&](CLI::App* cmd) {
        cmd->add_option("--A", s.A, "Incidence threshold, integer or n/d")->capture_default_str();
    };
    auto add_cover_flags = [&](CLI::App* cmd) {
        cmd->add_option("--max-rounds", s.max_rounds, "Round limit for covering")->capture_default_str();
        cmd->add_option("--retry-cap", s.retry_cap, "Resamples allowed per round")->capture_default_str();
    };
    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--seed-budget", s.seed_budget, "Random seed triples above the exhaustive limit")
            ->capture_default_str();
    };

    auto* gen = app.add_subcommand("generate", "Write a generated scene (or the quartic check report)");
    gen->add_option("--kind", s.kind, "hyperboloid | planar | generic | quartic-check")->required();
    gen->add_option("--lines", s.lines, "Number of lines");
    gen->add_option("--circles", s.circles, "Number of circles");
    gen->add_option("--family", s.family, "Ruling family: first | second | both")->capture_default_str();
    gen->add_option("--grid", s.grid, "Grid size for quartic-check")->capture_default_str();
    gen->add_option("--out", s.out, "Output file (default: stdout)");
    add_seed(gen);

    auto* inc = app.add_subcommand("incidences", "List the points of P(L, C)");
    add_io(inc);
    inc->add_option("--format", s.format, "json | csv")->capture_default_str();

    auto* fit = app.add_subcommand("fit", "Minimal-degree surface through all curves");
    add_io(fit);

    auto* cov = app.add_subcommand("cover", "Randomized covering by low-degree surfaces");
    add_io(cov);
    add_A(cov);
    add_seed(cov);
    add_cover_flags(cov);

    auto* det = app.add_subcommand("detect", "Planes and one-sheet hyperboloids with >= A curves");
    add_io(det);
    add_A(det);
    add_seed(det);
    add_budget(det);

    auto* ver = app.add_subcommand("verify", "prune, incidences, detect, cover and bound report in one run");
    add_io(ver);
    add_A(ver);
    add_seed(ver);
    add_cover_flags(ver);
    add_budget(ver);

    auto* rep = app.add_subcommand("report", "Bound report for a scene");
    add_io(rep);
    add_A(rep);
    add_seed(rep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) run_generate(s);
        if (*inc) run_incidences(s);
        if (*fit) run_fit(s);
        if (*cov) run_cover(s);
        if (*det) run_detect(s);
        if (*ver) run_verify(s);
        if (*rep) run_report(s);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const ContractError& e) {
        std::cerr << "contract violation: " << e.what() << '\n';
        return 3;
    } catch (const AlgorithmError& e) {
        std::cerr << "algorithm failure: " << e.what() << '\n';
        return 4;
    }
    return 0;
}
