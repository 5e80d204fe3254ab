#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "packing/colorer.hpp"
#include "packing/dot.hpp"
#include "packing/errors.hpp"
#include "packing/generators.hpp"
#include "packing/json_io.hpp"
#include "packing/verifier.hpp"

namespace {

using namespace packing;

// exit codes: 0 success, 1 negative answer (invalid coloring, wrong class,
// oracle says no, generation failed), 2 search budget exceeded,
// 3 internal invariant violated, 4 usage or I/O problem

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Graph read_graph(const std::string& path)
{
    if (path == "-")
        return load_edge_list(std::cin);
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open " + path);
    return load_edge_list(in);
}

std::string read_all(const std::string& path)
{
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in)
            throw IoError("cannot open " + path);
        buf << in.rdbuf();
    }
    return buf.str();
}

void write_all(const std::string& path, const std::string& text)
{
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        if (!std::cout)
            throw IoError("cannot write to stdout");
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot open " + path + " for writing");
    out << text;
    out.flush();
    if (!out)
        throw IoError("cannot write " + path);
}

ColorMode parse_mode(const std::string& name)
{
    return name == "t1" ? ColorMode::irregular3 : ColorMode::saturated1;
}

int run_color(const std::string& input, const std::string& mode_name, uint64_t seed,
              bool force, const std::string& output, const std::string& trace_path,
              const std::string& dump_path)
{
    Graph g = read_graph(input);
    ColorOutcome outcome;
    try {
        outcome = color(g, parse_mode(mode_name), seed, force);
    } catch (const UnmatchedViolationError& e) {
        if (!e.dump_json.empty())
            write_all(dump_path, e.dump_json);
        std::cerr << "packcolor: " << e.what() << "; state written to " << dump_path
                  << "\n";
        return 3;
    }
    if (!trace_path.empty())
        write_all(trace_path, trace_to_jsonl(outcome.trace));
    if (outcome.coloring) {
        write_all(output, coloring_to_string(*outcome.coloring));
        return 0;
    }
    write_all(output, *outcome.failure_certificate);
    std::cerr << "packcolor: input rejected; failure certificate written\n";
    return 1;
}

int run_verify(const std::string& graph_path, const std::string& coloring_path,
               const std::string& sequence_csv)
{
    if (graph_path == "-" && coloring_path == "-")
        throw std::invalid_argument("graph and coloring cannot both come from stdin");
    Graph g = read_graph(graph_path);
    Coloring c = coloring_from_string(read_all(coloring_path));
    PackingSequence s =
        sequence_csv.empty() ? c.sequence : PackingSequence::parse(sequence_csv);
    Verdict v = verify_coloring(g, s, c);
    std::cout << verdict_to_json(v).dump() << "\n";
    return v.valid ? 0 : 1;
}

int run_check(const std::string& input)
{
    Graph g = read_graph(input);
    bool sub = is_subcubic(g);
    bool irregular = sub && is_3_irregular(g);
    bool saturated = sub && is_i_saturated(g, 1);
    nlohmann::ordered_json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["subcubic"] = sub;
    j["three_irregular"] = irregular;
    j["one_saturated"] = saturated;
    std::cout << j.dump() << "\n";
    return (irregular || saturated) ? 0 : 1;
}

int run_gen(const std::string& family, int size, uint64_t seed, const std::string& name,
            const std::string& output)
{
    Graph g = [&] {
        if (family == "random-subcubic")
            return gen_random_subcubic(size, seed);
        if (family == "3-irregular")
            return gen_3_irregular(size, seed);
        if (family == "1-saturated")
            return gen_1_saturated(size, seed);
        if (name.empty())
            throw std::invalid_argument("--name is required with --family named");
        return named_graph(name);
    }();
    write_all(output, edge_list_string(g));
    return 0;
}

int run_list_named()
{
    for (const std::string& key : named_graph_keys())
        std::cout << key << "\n";
    return 0;
}

int status_code(SearchStatus s)
{
    switch (s) {
    case SearchStatus::yes:
        return 0;
    case SearchStatus::no:
        return 1;
    case SearchStatus::budget_exceeded:
        return 2;
    }
    return 3;
}

int run_oracle(const std::string& input, const std::string& sequence_csv, int min_k,
               uint64_t budget)
{
    Graph g = read_graph(input);
    nlohmann::ordered_json j;
    SearchStatus status;
    if (min_k > 0) {
        MinPackingResult r = min_packing_k(g, min_k, budget);
        status = r.status;
        j["status"] = search_status_name(r.status);
        if (r.status == SearchStatus::yes)
            j["k"] = r.k;
        if (r.witness)
            j["coloring"] = coloring_to_json(*r.witness);
    } else {
        PackingSequence s = PackingSequence::parse(sequence_csv);
        ExactResult r = exact_colorable(g, s, budget);
        status = r.status;
        j["status"] = search_status_name(r.status);
        j["nodes"] = r.nodes;
        if (r.witness)
            j["coloring"] = coloring_to_json(*r.witness);
    }
    std::cout << j.dump() << "\n";
    return status_code(status);
}

int run_bench(const std::string& family, int count, int size, uint64_t first_seed,
              int seeds, const std::string& output)
{
    const ColorMode mode =
        family == "3-irregular" ? ColorMode::irregular3 : ColorMode::saturated1;
    std::ostringstream csv;
    csv << "name,n,m,mode,moves,repairs,ms,verified\n";
    bool any_failure = false;
    int runs = 0;
    std::fprintf(stderr, "%-28s %6s %6s %9s %8s\n", "name", "n", "moves", "ms",
                 "verified");
    for (int i = 0; i < count; ++i) {
        uint64_t gen_seed = first_seed + static_cast<uint64_t>(i);
        Graph g = family == "3-irregular" ? gen_3_irregular(size, gen_seed)
                                          : gen_1_saturated(size, gen_seed);
        std::string base =
            family + "-n" + std::to_string(size) + "-g" + std::to_string(gen_seed);
        for (int k = 0; k < seeds; ++k) {
            std::string name = seeds > 1 ? base + "#" + std::to_string(k) : base;
            ++runs;
            auto t0 = std::chrono::steady_clock::now();
            long moves = 0;
            int repairs = 0;
            std::string verified;
            try {
                ColorOutcome o = color(g, mode, static_cast<uint64_t>(k));
                moves = static_cast<long>(o.trace.records.size());
                repairs = o.repair_iterations;
                bool ok = o.coloring
                          && verify_coloring(g, sequence_for(mode), *o.coloring).valid;
                verified = ok ? "yes" : "no";
                if (!ok)
                    any_failure = true;
            } catch (const std::exception& e) {
                verified = "error";
                any_failure = true;
                std::fprintf(stderr, "  %s: %s\n", name.c_str(), e.what());
            }
            auto t1 = std::chrono::steady_clock::now();
            double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            char ms_text[32];
            std::snprintf(ms_text, sizeof(ms_text), "%.3f", ms);
            csv << name << "," << g.vertex_count() << "," << g.edge_count() << ","
                << color_mode_name(mode) << "," << moves << "," << repairs << ","
                << ms_text << "," << verified << "\n";
            std::fprintf(stderr, "%-28s %6d %6ld %9s %8s\n", name.c_str(),
                         g.vertex_count(), moves, ms_text, verified.c_str());
        }
    }
    std::fprintf(stderr, "%d runs, %s\n", runs,
                 any_failure ? "some failed" : "all verified");
    write_all(output, csv.str());
    return any_failure ? 1 : 0;
}

int run_dot(const std::string& input, const std::string& coloring_path,
            const std::string& mode_name, uint64_t seed, const std::string& output)
{
    Graph g = read_graph(input);
    std::ostringstream out;
    if (!coloring_path.empty()) {
        if (input == "-" && coloring_path == "-")
            throw std::invalid_argument("graph and coloring cannot both come from stdin");
        Coloring c = coloring_from_string(read_all(coloring_path));
        write_dot(out, g, &c);
    } else if (!mode_name.empty()) {
        ColorOutcome o = color(g, parse_mode(mode_name), seed);
        write_dot(out, g, o.coloring ? &*o.coloring : nullptr, &o.bipartition,
                  &o.structure);
    } else {
        write_dot(out, g);
    }
    write_all(output, out.str());
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"packing colorings of subcubic graphs via bipartition local search"};
    app.require_subcommand(1);

    const std::string graph_help = "input graph edge list (\"-\" reads stdin)";

    auto* cmd_color = app.add_subcommand(
        "color", "color a graph and print the certified class assignment");
    std::string color_input = "-";
    std::string color_mode;
    uint64_t color_seed = 0;
    bool color_force = false;
    std::string color_output = "-";
    std::string color_trace;
    std::string color_dump = "violation-dump.json";
    cmd_color->add_option("input", color_input, graph_help);
    cmd_color->add_option("-m,--mode", color_mode, "threshold profile: t1 or t2")
        ->required()
        ->check(CLI::IsMember({"t1", "t2"}));
    cmd_color->add_option("-s,--seed", color_seed, "seed for the starting bipartition");
    cmd_color->add_flag("-f,--force", color_force,
                        "run even when the input fails the class check");
    cmd_color->add_option("-o,--output", color_output, "coloring destination");
    cmd_color->add_option("--trace", color_trace, "write the move trace (JSON lines)");
    cmd_color->add_option("--dump", color_dump,
                          "where to write the state dump on an unmatched violation");

    auto* cmd_verify =
        app.add_subcommand("verify", "check a coloring against the spacing rules");
    std::string verify_graph = "-";
    std::string verify_coloring_path;
    std::string verify_sequence;
    cmd_verify->add_option("input", verify_graph, graph_help);
    cmd_verify->add_option("-c,--coloring", verify_coloring_path, "coloring JSON file")
        ->required();
    cmd_verify->add_option("--sequence", verify_sequence,
                           "override the embedded threshold sequence (e.g. 1,1,3)");

    auto* cmd_check =
        app.add_subcommand("check", "report which input classes a graph belongs to");
    std::string check_input = "-";
    cmd_check->add_option("input", check_input, graph_help);

    auto* cmd_gen = app.add_subcommand("gen", "generate a test graph");
    std::string gen_family = "3-irregular";
    int gen_size = 8;
    uint64_t gen_seed = 0;
    std::string gen_name;
    std::string gen_output = "-";
    bool gen_list = false;
    cmd_gen
        ->add_option("--family", gen_family,
                     "random-subcubic, 3-irregular, 1-saturated or named")
        ->check(CLI::IsMember({"random-subcubic", "3-irregular", "1-saturated", "named"}));
    cmd_gen->add_option("-n,--size", gen_size,
                        "base vertex count (pair count for 1-saturated)");
    cmd_gen->add_option("-s,--seed", gen_seed, "generator seed");
    cmd_gen->add_option("--name", gen_name, "graph key when --family named");
    cmd_gen->add_option("-o,--output", gen_output, "edge list destination");
    cmd_gen->add_flag("--list", gen_list, "print the named graph keys and exit");

    auto* cmd_oracle = app.add_subcommand(
        "oracle", "exhaustive search for a packing coloring (small graphs)");
    std::string oracle_input = "-";
    std::string oracle_sequence = "1,1,3";
    int oracle_min_k = 0;
    uint64_t oracle_budget = kDefaultOracleBudget;
    cmd_oracle->add_option("input", oracle_input, graph_help);
    cmd_oracle->add_option("--sequence", oracle_sequence,
                           "threshold sequence to decide (e.g. 1,1,3)");
    cmd_oracle->add_option("--min-k", oracle_min_k,
                           "instead, find the least k with a (1,2,...,k) coloring");
    cmd_oracle->add_option("--budget", oracle_budget, "search node budget");

    auto* cmd_bench =
        app.add_subcommand("bench", "time the colorer over generated instances");
    std::string bench_family = "3-irregular";
    int bench_count = 10;
    int bench_size = 8;
    uint64_t bench_first_seed = 0;
    int bench_seeds = 1;
    std::string bench_output = "-";
    cmd_bench->add_option("--family", bench_family, "3-irregular or 1-saturated")
        ->check(CLI::IsMember({"3-irregular", "1-saturated"}));
    cmd_bench->add_option("--count", bench_count, "number of generated instances")
        ->check(CLI::PositiveNumber);
    cmd_bench->add_option("-n,--size", bench_size,
                          "base vertex count (pair count for 1-saturated)");
    cmd_bench->add_option("--first-seed", bench_first_seed,
                          "generator seed of the first instance");
    cmd_bench->add_option("--seeds", bench_seeds, "coloring seeds per instance")
        ->check(CLI::PositiveNumber);
    cmd_bench->add_option("-o,--output", bench_output, "CSV destination");

    auto* cmd_dot = app.add_subcommand("dot", "write a Graphviz view of a graph");
    std::string dot_input = "-";
    std::string dot_coloring;
    std::string dot_mode;
    uint64_t dot_seed = 0;
    std::string dot_output = "-";
    cmd_dot->add_option("input", dot_input, graph_help);
    cmd_dot->add_option("-c,--coloring", dot_coloring, "overlay a coloring JSON file");
    cmd_dot
        ->add_option("-m,--mode", dot_mode,
                     "color the graph first with this threshold profile")
        ->check(CLI::IsMember({"t1", "t2"}));
    cmd_dot->add_option("-s,--seed", dot_seed, "seed for --mode");
    cmd_dot->add_option("-o,--output", dot_output, "DOT destination");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e); // prints help or the usage error
        return code == 0 ? 0 : 4;
    }

    try {
        if (app.got_subcommand(cmd_color))
            return run_color(color_input, color_mode, color_seed, color_force,
                             color_output, color_trace, color_dump);
        if (app.got_subcommand(cmd_verify))
            return run_verify(verify_graph, verify_coloring_path, verify_sequence);
        if (app.got_subcommand(cmd_check))
            return run_check(check_input);
        if (app.got_subcommand(cmd_gen))
            return gen_list ? run_list_named()
                            : run_gen(gen_family, gen_size, gen_seed, gen_name,
                                      gen_output);
        if (app.got_subcommand(cmd_oracle))
            return run_oracle(oracle_input, oracle_sequence, oracle_min_k,
                              oracle_budget);
        if (app.got_subcommand(cmd_bench))
            return run_bench(bench_family, bench_count, bench_size, bench_first_seed,
                             bench_seeds, bench_output);
        if (app.got_subcommand(cmd_dot))
            return run_dot(dot_input, dot_coloring, dot_mode, dot_seed, dot_output);
    } catch (const ParseError& e) {
        std::cerr << "packcolor: " << e.what() << "\n";
        return 4;
    } catch (const ClassMismatchError& e) {
        std::cerr << "packcolor: " << e.what() << "\n";
        return 1;
    } catch (const GenerationError& e) {
        std::cerr << "packcolor: " << e.what() << "\n";
        return 1;
    } catch (const UnmatchedViolationError& e) {
        std::cerr << "packcolor: " << e.what() << "\n";
        return 3;
    } catch (const InvariantError& e) {
        std::cerr << "packcolor: " << e.what() << "\n";
        return 3;
    } catch (const IoError& e) {
        std::cerr << "packcolor: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "packcolor: " << e.what() << "\n";
        return 4;
    } catch (const std::out_of_range& e) {
        std::cerr << "packcolor: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "packcolor: unexpected error: " << e.what() << "\n";
        return 3;
    }
    return 4;
}
