// latwidth: command-line front end for lattice width, lattice size,
// minimality, classification, enumeration and bound verification.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include "latwidth/classify.hpp"
#include "latwidth/json_io.hpp"
#include "latwidth/minimal.hpp"
#include "latwidth/svg.hpp"
#include "latwidth/width.hpp"
#include "verify_checks.hpp"

using namespace latwidth;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr Coord kMaxCliWidth = 1000;

struct RunConfig {
    std::string input;
    std::string output;
    Coord d = 0;
    Coord d_from = -1, d_to = -1;
    std::optional<Coord> ell;
    bool oracle = false;
    unsigned jobs = 1;
    std::string stats_path;
    SvgStyle style;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

unsigned default_jobs() {
    if (const char* env = std::getenv("LATWIDTH_JOBS")) {
        try {
            const long n = std::stol(env);
            if (n >= 1) return static_cast<unsigned>(n);
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring LATWIDTH_JOBS=" << env << "\n";
    }
    return 1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Polygon load_polygon(const std::string& path) { return read_polygon(path == "-" ? slurp("/dev/stdin") : slurp(path)); }

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void check_width_arg(Coord d) {
    if (d < 0 || d > kMaxCliWidth) throw UsageError("d must be in [0, " + std::to_string(kMaxCliWidth) + "]");
}

// Splits [0, n) into `jobs` contiguous chunks and runs fn(begin, end, slot)
// on worker threads. Results are stored per slot, so the caller can
// concatenate them in order regardless of the number of workers.
template <class Fn>
void run_chunked(std::size_t n, unsigned jobs, Fn fn) {
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    std::vector<std::jthread> workers;
    const std::size_t chunk = (n + jobs - 1) / jobs;
    for (unsigned j = 0; j < jobs; ++j) {
        const std::size_t begin = std::min(n, j * chunk), end = std::min(n, begin + chunk);
        workers.emplace_back([=, &fn] { fn(begin, end, j); });
    }
}

Enumeration enumerate_parallel(Coord d, unsigned jobs) {
    if (d > kMaxGeneratorWidth) throw OutOfRange("enumeration supports d <= " + std::to_string(kMaxGeneratorWidth));
    const std::vector<TypeParams> space = parameter_space(d);
    std::vector<std::vector<CandidateResult>> parts(std::max(1u, jobs));
    run_chunked(space.size(), jobs, [&](std::size_t begin, std::size_t end, unsigned slot) {
        for (std::size_t i = begin; i < end; ++i) parts[slot].push_back(evaluate_candidate(space[i]));
    });
    std::vector<CandidateResult> all;
    for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(all));
    return merge_candidates(d, all);
}

std::vector<MinimalClass> oracle_parallel(Coord d, unsigned jobs) {
    const std::vector<Polygon> universe = polygons_in_square(d);
    std::vector<std::vector<MinimalClass>> parts(std::max(1u, jobs));
    run_chunked(universe.size(), jobs, [&](std::size_t begin, std::size_t end, unsigned slot) {
        for (std::size_t i = begin; i < end; ++i) {
            if (auto c = oracle_candidate(universe[i], d)) parts[slot].push_back(std::move(*c));
        }
    });
    std::vector<MinimalClass> all;
    for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(all));
    return merge_oracle(all);
}

Json classes_to_json(const std::vector<MinimalClass>& classes) {
    Json arr = Json::array();
    for (const auto& c : classes) arr.push_back(to_json(c));
    return arr;
}

std::string sibling_path(const std::string& path, const std::string& suffix) {
    const std::string stem = path.size() > 5 && path.ends_with(".json") ? path.substr(0, path.size() - 5) : path;
    return stem + suffix;
}

int cmd_width(const RunConfig& cfg) {
    const Polygon p = load_polygon(cfg.input);
    const WidthResult w = lattice_width(p);
    Json j;
    j["lw"] = w.width;
    j["directions"] = Json::array();
    for (const Direction& v : w.directions) j["directions"].push_back(to_json(v));
    j["ls_square"] = lattice_size_square(p).size;
    emit(cfg.output, dump(j));
    return kExitOk;
}

int cmd_lattice_size(const RunConfig& cfg) {
    const Polygon p = load_polygon(cfg.input);
    const SizeResult s = lattice_size_square(p);
    Json j;
    j["ls_square"] = s.size;
    j["lw"] = lattice_width(p).width;
    j["witness"] = to_json(s.witness);
    j["image"] = polygon_to_json(apply_map(s.witness, p))["vertices"];
    j["embeddable"] = embed_in_square(p).has_value();
    emit(cfg.output, dump(j));
    return kExitOk;
}

int cmd_minimal(const RunConfig& cfg) {
    const Polygon p = load_polygon(cfg.input);
    const MinimalityReport r = is_minimal(p);
    Json j;
    j["minimal"] = r.is_minimal;
    j["d"] = r.width;
    j["offending_vertex"] = r.offending_vertex ? Json::array({r.offending_vertex->x, r.offending_vertex->y}) : Json();
    emit(cfg.output, dump(j));
    return kExitOk;
}

int cmd_classify(const RunConfig& cfg) {
    const Polygon p = load_polygon(cfg.input);
    const MinimalityReport r = is_minimal(p);
    Json j;
    j["minimal"] = r.is_minimal;
    j["d"] = r.width;
    if (!r.is_minimal) {
        j["offending_vertex"] = Json::array({r.offending_vertex->x, r.offending_vertex->y});
    } else {
        const auto c = classify_polygon(p);
        j["tag"] = std::string(to_string(c->cls.params->tag));
        j["params"] = to_json(*c->cls.params);
        j["key"] = c->cls.canonical.byte_key;
        j["representative"] = polygon_to_json(c->cls.representative())["vertices"];
        j["witness"] = to_json(c->witness);
    }
    emit(cfg.output, dump(j));
    return kExitOk;
}

int cmd_enumerate(const RunConfig& cfg) {
    check_width_arg(cfg.d);
    if (cfg.oracle && cfg.d > kMaxOracleWidth) {
        throw UsageError("--oracle requires d <= " + std::to_string(kMaxOracleWidth));
    }
    if (cfg.oracle && (cfg.output.empty() || cfg.output == "-")) throw UsageError("--oracle requires -o FILE");

    const Enumeration e = enumerate_parallel(cfg.d, cfg.jobs);
    emit(cfg.output, dump(classes_to_json(e.classes)));

    Json stats;
    stats["d"] = e.d;
    stats["classes"] = e.classes.size();
    stats["collisions"] = e.collisions;
    stats["types"] = Json::object();
    for (const auto& [tag, s] : e.stats) stats["types"][std::string(to_string(tag))] = to_json(s);
    if (!cfg.stats_path.empty()) emit(cfg.stats_path, dump(stats));
    std::cerr << "d=" << e.d << ": " << e.classes.size() << " classes, " << e.collisions << " parameter collisions\n";
    for (const auto& [tag, s] : e.stats) {
        std::cerr << "  " << to_string(tag) << ": tuples=" << s.tuples << " accepted=" << s.accepted
                  << " not_minimal=" << s.not_minimal << " wrong_width=" << s.minimal_wrong_width
                  << " collisions=" << s.collisions << " classes=" << s.classes << "\n";
    }

    if (!cfg.oracle) return kExitOk;
    const auto oracle = oracle_parallel(cfg.d, cfg.jobs);
    emit(sibling_path(cfg.output, ".oracle.json"), dump(classes_to_json(oracle)));
    std::set<std::string> gen_keys, oracle_keys;
    for (const auto& c : e.classes) gen_keys.insert(c.canonical.byte_key);
    for (const auto& c : oracle) oracle_keys.insert(c.canonical.byte_key);
    Json diff;
    diff["only_in_generator"] = Json::array();
    diff["only_in_oracle"] = Json::array();
    for (const auto& k : gen_keys)
        if (!oracle_keys.contains(k)) diff["only_in_generator"].push_back(k);
    for (const auto& k : oracle_keys)
        if (!gen_keys.contains(k)) diff["only_in_oracle"].push_back(k);
    emit(sibling_path(cfg.output, ".diff.json"), dump(diff));
    const bool empty = diff["only_in_generator"].empty() && diff["only_in_oracle"].empty();
    std::cerr << "oracle: " << oracle.size() << " classes, diff " << (empty ? "empty" : "NON-EMPTY") << "\n";
    return empty ? kExitOk : kExitFailed;
}

int cmd_verify(const RunConfig& cfg) {
    Coord from = cfg.d_from, to = cfg.d_to;
    if (from < 0 && to < 0) from = to = cfg.d;
    if (from < 0) from = to;
    if (to < 0) to = from;
    check_width_arg(from);
    check_width_arg(to);
    if (from > to) throw UsageError("--from must not exceed --to");

    bool ok = true;
    Json reports = Json::array();
    for (Coord d = from; d <= to; ++d) {
        const Enumeration e = enumerate_parallel(d, cfg.jobs);
        const cli::VerifyResult r = cli::verify_width(d, e.classes);
        for (const auto& line : r.lines) {
            std::cout << cli::format_line(line) << "\n";
            ok = ok && line.outcome != cli::Outcome::Fail;
        }
        for (const auto& rep : r.reports) reports.push_back(to_json(rep));
    }
    if (!cfg.output.empty() && cfg.output != "-") emit(cfg.output, dump(reports));
    std::cout << (ok ? "all checks passed" : "verification FAILED") << "\n";
    return ok ? kExitOk : kExitFailed;
}

int cmd_plot(const RunConfig& cfg) {
    const Polygon p = load_polygon(cfg.input);
    if (cfg.ell) {
        const Coord d = lattice_width(p).width;
        if (*cfg.ell < 0 || *cfg.ell > d) throw UsageError("--hexagon must be in [0, d] with d = " + std::to_string(d));
    }
    emit(cfg.output, render_svg(p, cfg.ell, cfg.style));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lattice width, minimal lattice polygons and their classification"};
    app.require_subcommand(1);
    RunConfig cfg;
    cfg.jobs = default_jobs();

    const auto add_input = [&](CLI::App* sub) {
        sub->add_option("polygon", cfg.input, "Polygon JSON file ({\"vertices\": [[x,y],...]}), - for stdin")
            ->required();
        sub->add_option("-o,--output", cfg.output, "Output file (default: stdout)");
    };

    auto* width = app.add_subcommand("width", "Lattice width, width directions and lattice size");
    add_input(width);
    auto* size = app.add_subcommand("lattice-size", "Lattice size with respect to the unit square, with witness");
    add_input(size);
    auto* minimal = app.add_subcommand("minimal", "Decide inclusion-minimality");
    add_input(minimal);
    auto* classify = app.add_subcommand("classify", "Classify a minimal polygon into T1-T5");
    add_input(classify);

    auto* enumerate = app.add_subcommand("enumerate", "Enumerate minimal polygons of width d up to equivalence");
    enumerate->add_option("-d,--width", cfg.d, "Lattice width d")->required();
    enumerate->add_flag("--oracle", cfg.oracle, "Also run the exhaustive oracle (d <= 4) and write a diff");
    enumerate->add_option("-o,--output", cfg.output, "Output file (default: stdout)");
    enumerate->add_option("--stats", cfg.stats_path, "Write per-type parameter statistics as JSON");
    enumerate->add_option("-j,--jobs", cfg.jobs, "Worker threads (default: LATWIDTH_JOBS or 1)")
        ->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "Check bounds and structural properties for a range of widths");
    verify->add_option("-d,--width", cfg.d, "Single width");
    verify->add_option("--from", cfg.d_from, "First width of the range");
    verify->add_option("--to", cfg.d_to, "Last width of the range");
    verify->add_option("-o,--output", cfg.output, "Write the bound reports as a JSON array");
    verify->add_option("-j,--jobs", cfg.jobs, "Worker threads (default: LATWIDTH_JOBS or 1)")
        ->check(CLI::PositiveNumber);

    auto* plot = app.add_subcommand("plot", "Render a polygon as SVG");
    add_input(plot);
    plot->add_option("--hexagon", cfg.ell, "Overlay the hexagon H_l for this l");
    plot->add_option("--fill", cfg.style.fill, "Polygon fill colour");
    plot->add_option("--stroke", cfg.style.stroke, "Polygon stroke colour");
    plot->add_flag("!--no-grid", cfg.style.show_grid, "Omit the lattice dots");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*width) return cmd_width(cfg);
        if (*size) return cmd_lattice_size(cfg);
        if (*minimal) return cmd_minimal(cfg);
        if (*classify) return cmd_classify(cfg);
        if (*enumerate) return cmd_enumerate(cfg);
        if (*verify) return cmd_verify(cfg);
        if (*plot) return cmd_plot(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
