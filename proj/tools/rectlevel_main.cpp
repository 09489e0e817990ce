#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rectlevel/arrangement.hpp"
#include "rectlevel/bounds.hpp"
#include "rectlevel/generators.hpp"
#include "rectlevel/instance_io.hpp"
#include "rectlevel/render.hpp"
#include "rectlevel/report.hpp"

namespace {

using namespace rectlevel;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitBadInput = 2;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("RECTLEVEL_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw CLI::ValidationError("RECTLEVEL_SEED", "must be an unsigned integer");
        }
    }
    return 0;
}

std::int64_t micros_since(std::chrono::steady_clock::time_point start) {
    const auto delta = std::chrono::steady_clock::now() - start;
    return std::chrono::duration_cast<std::chrono::microseconds>(delta).count();
}

struct GenerateArgs {
    std::string kind;
    std::int64_t m = 0;
    std::int64_t n = 0;
    std::int64_t p = 0;
    std::int64_t clusters = 0;
    std::int64_t span = 0;
    std::optional<std::uint64_t> seed;
    std::string out;
};

Family build_family(const GenerateArgs& args) {
    const std::uint64_t seed = args.seed ? *args.seed : default_seed();
    if (args.kind == "grid") {
        if (args.m < 1) throw std::invalid_argument("--kind grid requires --m >= 1");
        return gen_grid(args.m);
    }
    if (args.kind == "staircase") {
        if (args.m < 1)
            throw std::invalid_argument("--kind staircase requires --m >= 1");
        return gen_staircase(args.m);
    }
    if (args.kind == "tightness") {
        if (args.n < 1 || args.p < 3) {
            throw std::invalid_argument(
                "--kind tightness requires --n >= 1 and --p >= 3");
        }
        return gen_tightness(args.n, args.p);
    }
    if (args.kind == "random") {
        if (args.n < 1) throw std::invalid_argument("--kind random requires --n >= 1");
        return gen_random(args.n, seed, args.span);
    }
    if (args.kind == "clustered") {
        if (args.n < 1 || args.clusters < 1) {
            throw std::invalid_argument(
                "--kind clustered requires --n >= 1 and --clusters >= 1");
        }
        return gen_clustered(args.n, args.clusters, seed);
    }
    throw std::invalid_argument("unknown kind: " + args.kind);
}

int cmd_generate(const GenerateArgs& args) {
    const Family f = build_family(args);
    write_instance_file(args.out, f);
    std::cout << args.kind << " n=" << f.size() << " file=" << args.out << "\n";
    return kExitOk;
}

struct AnalyzeArgs {
    std::string in;
    int k = 0;
    std::string engine = "sweep";
    std::string json_path;
    std::int64_t oracle_cap = 1500;
};

int cmd_analyze(const AnalyzeArgs& args) {
    const Family f = read_instance_file(args.in);
    const bool wants_oracle = args.engine == "oracle" || args.engine == "both";
    if (wants_oracle && static_cast<std::int64_t>(f.size()) > args.oracle_cap) {
        std::cerr << "oracle engine capped at n=" << args.oracle_cap
                  << " (override with --oracle-cap)\n";
        return kExitBadInput;
    }

    ArrangementProfile profile;
    if (args.engine == "sweep") {
        profile = analyze_sweep(f);
    } else if (args.engine == "oracle") {
        profile = enumerate_vertices_oracle(f);
    } else {
        const ArrangementProfile oracle = enumerate_vertices_oracle(f);
        const ArrangementProfile sweep = analyze_sweep(f);
        if (!(oracle == sweep)) {
            std::cerr << "engine mismatch";
            const std::size_t limit =
                std::min(oracle.vertices.size(), sweep.vertices.size());
            for (std::size_t i = 0; i < limit; ++i) {
                if (!(oracle.vertices[i] == sweep.vertices[i])) {
                    const Vertex& a = oracle.vertices[i];
                    const Vertex& b = sweep.vertices[i];
                    std::cerr << ": first differing vertex #" << i << " oracle=("
                              << a.x << "," << a.y << ",d" << a.depth << ") sweep=("
                              << b.x << "," << b.y << ",d" << b.depth << ")";
                    break;
                }
            }
            if (oracle.vertices.size() != sweep.vertices.size()) {
                std::cerr << " (vertex counts " << oracle.vertices.size() << " vs "
                          << sweep.vertices.size() << ")";
            }
            std::cerr << "\n";
            return kExitCheckFailure;
        }
        profile = sweep;
    }

    const BoundReport bounds = verify(f, args.k);
    const auto doc = report_document(f, args.in, args.k, profile, args.engine, &bounds);
    if (!args.json_path.empty()) {
        write_text_file(args.json_path, dump_report(doc));
    }
    std::cout << "n=" << f.size() << " vertices=" << profile.vertex_count()
              << " union_complexity=" << profile.union_complexity
              << " leq_" << args.k << "=" << profile.level_complexity(args.k)
              << " q_h=" << bounds.q_h << " q_v=" << bounds.q_v;
    if (bounds.nu) std::cout << " nu=" << *bounds.nu;
    std::cout << "\n";
    return kExitOk;
}

struct VerifyArgs {
    std::string in;
    int k = 0;
    std::string json_path;
};

int cmd_verify(const VerifyArgs& args) {
    const Family f = read_instance_file(args.in);
    const BoundReport report = verify(f, args.k);
    const auto doc = report_document(f, args.in, args.k, analyze_sweep(f), "sweep",
                                     &report);
    const std::string text = dump_report(doc);
    if (args.json_path.empty()) {
        std::cout << text;
    } else {
        write_text_file(args.json_path, text);
    }
    for (const BoundCheck& check : report.checks) {
        std::cerr << (check.skipped ? "skip" : check.pass ? "ok  " : "FAIL") << " "
                  << check.name;
        if (!check.detail.empty()) std::cerr << " (" << check.detail << ")";
        std::cerr << "\n";
    }
    return report.all_passed() ? kExitOk : kExitCheckFailure;
}

struct BenchArgs {
    std::string kind = "random";
    std::vector<std::int64_t> sizes;
    std::optional<std::uint64_t> seed;
    std::string csv;
    std::int64_t span = 8;
    bool with_oracle = false;
    std::int64_t oracle_cap = 1500;
};

Family bench_family(const BenchArgs& args, std::int64_t n, std::uint64_t seed) {
    if (args.kind == "random") return gen_random(n, seed, args.span);
    if (args.kind == "grid") {
        if (n % 2 != 0) throw std::invalid_argument("grid sizes must be even");
        return gen_grid(n / 2);
    }
    if (args.kind == "staircase") return gen_staircase(n);
    if (args.kind == "clustered") {
        return gen_clustered(n, std::max<std::int64_t>(1, n / 8), seed);
    }
    throw std::invalid_argument("unknown bench kind: " + args.kind);
}

int cmd_bench(const BenchArgs& args) {
    for (std::size_t i = 0; i + 1 < args.sizes.size(); ++i) {
        if (args.sizes[i] >= args.sizes[i + 1]) {
            throw std::invalid_argument("--sizes must be strictly ascending");
        }
    }
    const std::uint64_t seed = args.seed ? *args.seed : default_seed();
    std::ostringstream csv;
    csv << "n,vertices,engine,micros\n";
    for (const std::int64_t n : args.sizes) {
        const Family f = bench_family(args, n, seed);
        {
            const auto start = std::chrono::steady_clock::now();
            const ArrangementProfile profile = analyze_sweep(f);
            const std::int64_t micros = micros_since(start);
            csv << n << ',' << profile.vertex_count() << ",sweep," << micros << "\n";
        }
        if (args.with_oracle && n <= args.oracle_cap) {
            const auto start = std::chrono::steady_clock::now();
            const ArrangementProfile profile = enumerate_vertices_oracle(f);
            const std::int64_t micros = micros_since(start);
            csv << n << ',' << profile.vertex_count() << ",oracle," << micros << "\n";
        }
    }
    write_text_file(args.csv, csv.str());
    std::cout << "wrote " << args.csv << "\n";
    return kExitOk;
}

struct RenderArgs {
    std::string in;
    std::string out;
    bool show_lines = false;
    int k = 0;
};

int cmd_render(const RenderArgs& args) {
    const Family f = read_instance_file(args.in);
    RenderOptions options;
    options.show_lines = args.show_lines;
    options.k = args.k;
    write_text_file(args.out, render_svg(f, options));
    std::cout << "wrote " << args.out << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analyzer for families of axis-parallel rectangles"};
    app.require_subcommand(1);

    GenerateArgs gen;
    CLI::App* generate = app.add_subcommand(
        "generate", "Write a generated instance file");
    generate->add_option("--kind", gen.kind, "grid|staircase|tightness|random|clustered")
        ->required()
        ->check(CLI::IsMember({"grid", "staircase", "tightness", "random", "clustered"}));
    generate->add_option("--m", gen.m, "slab count (grid) or rect count (staircase)");
    generate->add_option("--n", gen.n, "rectangle count");
    generate->add_option("--p", gen.p, "target packing number plus one (tightness)");
    generate->add_option("--clusters", gen.clusters, "cluster count (clustered)");
    generate->add_option("--span", gen.span, "rank-width limit (random; 0 = free)");
    std::uint64_t gen_seed = 0;
    CLI::Option* gen_seed_opt =
        generate->add_option("--seed", gen_seed, "seed (default RECTLEVEL_SEED or 0)");
    generate->add_option("--out", gen.out, "output path")->required();

    AnalyzeArgs analyze;
    CLI::App* analyze_cmd = app.add_subcommand("analyze", "Analyze an instance file");
    analyze_cmd->add_option("--in", analyze.in, "instance path")->required();
    analyze_cmd->add_option("--k", analyze.k, "depth threshold")
        ->check(CLI::Range(0, 4096));
    analyze_cmd->add_option("--engine", analyze.engine, "oracle|sweep|both")
        ->check(CLI::IsMember({"oracle", "sweep", "both"}));
    analyze_cmd->add_option("--json", analyze.json_path, "write the report here");
    analyze_cmd->add_option("--oracle-cap", analyze.oracle_cap,
                            "size cap for the oracle engine");

    VerifyArgs verify_args;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Run every inequality check on an instance");
    verify_cmd->add_option("--in", verify_args.in, "instance path")->required();
    verify_cmd->add_option("--k", verify_args.k, "depth threshold")
        ->check(CLI::Range(0, 4096));
    verify_cmd->add_option("--json", verify_args.json_path,
                           "write the report here (default stdout)");

    BenchArgs bench;
    CLI::App* bench_cmd = app.add_subcommand("bench", "Time the engines over sizes");
    bench_cmd->add_option("--kind", bench.kind, "random|grid|staircase|clustered");
    bench_cmd->add_option("--sizes", bench.sizes, "ascending instance sizes")
        ->required()
        ->delimiter(',');
    std::uint64_t bench_seed = 0;
    CLI::Option* bench_seed_opt = bench_cmd->add_option("--seed", bench_seed, "seed");
    bench_cmd->add_option("--csv", bench.csv, "output CSV path")->required();
    bench_cmd->add_option("--span", bench.span, "rank-width limit for random");
    bench_cmd->add_flag("--with-oracle", bench.with_oracle,
                        "also time the oracle engine up to the cap");
    bench_cmd->add_option("--oracle-cap", bench.oracle_cap, "oracle size cap");

    RenderArgs render;
    CLI::App* render_cmd = app.add_subcommand("render", "Draw an instance as SVG");
    render_cmd->add_option("--in", render.in, "instance path")->required();
    render_cmd->add_option("--out", render.out, "output SVG path")->required();
    render_cmd->add_flag("--show-lines", render.show_lines, "draw piercing lines");
    render_cmd->add_option("--k", render.k, "depth threshold for vertex dots")
        ->check(CLI::Range(0, 4096));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (generate->parsed()) {
            if (gen_seed_opt->count() > 0) gen.seed = gen_seed;
            return cmd_generate(gen);
        }
        if (analyze_cmd->parsed()) return cmd_analyze(analyze);
        if (verify_cmd->parsed()) return cmd_verify(verify_args);
        if (bench_cmd->parsed()) {
            if (bench_seed_opt->count() > 0) bench.seed = bench_seed;
            return cmd_bench(bench);
        }
        if (render_cmd->parsed()) return cmd_render(render);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const InvalidFamilyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
