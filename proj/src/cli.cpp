#include "gltc/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gltc/generate.hpp"
#include "gltc/oracle.hpp"
#include "gltc/partition.hpp"
#include "gltc/solver.hpp"

namespace gltc {

namespace {

std::vector<std::string_view> tokens_of(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

int to_int(int line, std::string_view token, long long low, long long high) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
    if (value < low || value > high)
        throw ParseError(line, "value " + std::string(token) + " out of range");
    return static_cast<int>(value);
}

std::string format_base(double base) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.4f", base);
    return buffer;
}

} // namespace

LabeledGraph parse_labeled_graph(std::string_view text, int span) {
    int n = -1;
    int m = 0;
    std::vector<LabelSet> lists;
    std::vector<char> declared;
    std::vector<std::pair<Edge, int>> edges;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        ++number;
        auto tokens = tokens_of(text.substr(start, end - start));
        start = end + 1;
        if (tokens.empty() || tokens.front().front() == '#')
            continue;
        if (n < 0) {
            if (tokens.size() != 3 || tokens[0] != "graph")
                throw ParseError(number, "expected header 'graph <n> <m>'");
            n = to_int(number, tokens[1], 0, 1'000'000);
            m = to_int(number, tokens[2], 0, 1'000'000'000);
            lists.resize(static_cast<std::size_t>(n));
            declared.assign(static_cast<std::size_t>(n), 0);
        } else if (tokens[0] == "v" && tokens.size() >= 2) {
            int v = to_int(number, tokens[1], 1, n) - 1;
            if (declared[v])
                throw ParseError(number, "duplicate vertex " + std::string(tokens[1]));
            declared[v] = 1;
            for (std::size_t t = 2; t < tokens.size(); ++t)
                lists[v].push_back(to_int(number, tokens[t], 1, 1'000'000'000));
        } else if (tokens[0] == "e" && (tokens.size() == 3 || tokens.size() == 4)) {
            int u = to_int(number, tokens[1], 1, n) - 1;
            int v = to_int(number, tokens[2], 1, n) - 1;
            if (u == v)
                throw ParseError(number, "self-loop at vertex " + std::string(tokens[1]));
            int w = tokens.size() == 4 ? to_int(number, tokens[3], 1, 1'000'000'000) : 1;
            auto e = make_edge(u, v);
            for (const auto &[seen, weight] : edges)
                if (seen == e)
                    throw ParseError(number, "duplicate edge " + std::string(tokens[1]) + "-" + std::string(tokens[2]));
            edges.emplace_back(e, w);
        } else {
            throw ParseError(number, "expected 'v <id> <label>...' or 'e <u> <v> [<weight>]'");
        }
    }
    if (n < 0)
        throw ParseError(1, "empty document");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError(number, "expected " + std::to_string(m) + " edge lines, found " + std::to_string(edges.size()));
    if (span > 0) {
        for (auto &labels : lists) {
            labels.clear();
            for (int l = 1; l <= span; ++l)
                labels.push_back(l);
        }
    } else {
        auto missing = std::find(declared.begin(), declared.end(), 0);
        if (missing != declared.end())
            throw ParseError(number, "vertex " + std::to_string(missing - declared.begin() + 1) +
                                         " has no 'v' line and no --span was given");
    }

    std::sort(edges.begin(), edges.end());
    std::vector<Edge> plain;
    std::vector<int> weights;
    for (const auto &[e, w] : edges) {
        plain.push_back(e);
        weights.push_back(w);
    }
    return {Graph(n, std::move(plain)), std::move(lists), std::move(weights)};
}

namespace {

struct Io {
    std::istream &in;
    std::ostream &out;
    std::ostream &err;
};

std::string read_input(const std::string &path, Io io) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << io.in.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot open " + path);
    buffer << file.rdbuf();
    return buffer.str();
}

void report(Io io, Decision decision, const std::optional<Witness> &witness, bool print_witness) {
    io.out << (decision == Decision::yes ? "YES" : "NO") << '\n';
    if (print_witness && decision == Decision::yes && witness)
        for (std::size_t v = 0; v < witness->labels.size(); ++v)
            io.out << "v " << v + 1 << ' ' << witness->labels[v] << '\n';
}

int exit_for(Decision decision) { return decision == Decision::yes ? exit_yes : exit_no; }

struct SolveFlags {
    std::string file;
    std::string partition = "auto";
    bool witness = false;
    bool no_early_exit = false;
    bool no_gap_compress = false;
    bool no_strong_prune = false;
    bool trace = false;
    std::size_t limit = std::size_t{1} << 26;
};

int cmd_solve(const SolveFlags &flags, Io io) {
    auto inst = parse_instance(read_input(flags.file, io));
    SolveOptions opts;
    opts.early_exit = !flags.no_early_exit;
    opts.gap_compress = !flags.no_gap_compress;
    opts.strengthened_pruning = !flags.no_strong_prune;
    opts.store_parents = flags.witness;
    opts.vector_limit = flags.limit;
    if (flags.trace)
        opts.trace = &io.err;
    auto result = solve_instance(inst, parse_partition_choice(flags.partition), opts);
    report(io, result.decision, result.witness, flags.witness);
    return exit_for(result.decision);
}

int cmd_oracle(const std::string &file, bool witness, Io io) {
    auto inst = parse_instance(read_input(file, io));
    if (inst.vertex_count() > 12)
        io.err << "warning: brute force on " << inst.vertex_count() << " vertices may take very long\n";
    auto result = brute_force_solve(inst);
    report(io, result.decision, result.witness, witness);
    return exit_for(result.decision);
}

struct ReduceFlags {
    std::string model;
    std::string file;
    int p = 2;
    int q = 1;
    std::vector<int> T;
    int span = 0;
};

int cmd_reduce(const ReduceFlags &flags, Io io) {
    auto input = parse_labeled_graph(read_input(flags.file, io), flags.span);
    Instance inst;
    if (flags.model == "coloring")
        inst = reduce_list_coloring(input.graph, std::move(input.lists));
    else if (flags.model == "lpq")
        inst = reduce_lpq(input.graph, flags.p, flags.q, std::move(input.lists));
    else if (flags.model == "channel")
        inst = reduce_channel(input.graph, input.weights, std::move(input.lists));
    else if (flags.model == "tcoloring")
        inst = reduce_tcoloring(input.graph, flags.T, std::move(input.lists));
    else
        throw std::invalid_argument("unknown model '" + flags.model + "'");
    io.out << serialize(inst);
    return exit_yes;
}

int cmd_predict(const std::string &file, const std::string &partition, Io io) {
    auto inst = parse_instance(read_input(file, io));
    const int tau = validate(inst).tau;
    const auto &g = inst.graph();
    auto choice = parse_partition_choice(partition);
    auto part = build_partition(g, choice, tau);
    auto estimate = predict(g, part, tau);
    io.out << "partition " << to_string(choice) << '\n';
    io.out << "tau " << tau << '\n';
    for (std::size_t i = 0; i < part.block_count(); ++i) {
        const auto &block = part.blocks()[i];
        io.out << "block " << to_string(block.kind) << ' ' << estimate.per_block_f[i];
        for (int v : block.vertices)
            io.out << ' ' << v + 1;
        io.out << '\n';
    }
    io.out << "product " << estimate.product.to_string() << '\n';
    io.out << "base " << format_base(estimate.base) << '\n';
    return exit_yes;
}

int cmd_bases(int tau, Io io) {
    const double claw_free = alpha(tau, 2);
    io.out << "tau\tgeneral\tsubcubic\tclaw-free\tregular\tclique\tunit-disk\n";
    io.out << tau << '\t' << format_base(tau + 2.0) << '\t' << format_base(alpha(tau, 3)) << '\t'
           << format_base(claw_free) << '\t' << format_base(claw_free) << '\t' << format_base(claw_free) << '\t'
           << format_base(std::max(claw_free, alpha(tau, 6))) << '\n';
    return exit_yes;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    Io io{in, out, err};
    CLI::App app{"Exact solver for tau-bounded generalized list T-coloring"};
    app.name("gltc");
    app.require_subcommand(1);

    SolveFlags solve_flags;
    auto *solve_cmd = app.add_subcommand("solve", "Decide an instance with the level-by-level dynamic program");
    solve_cmd->add_option("file", solve_flags.file, "GLTC file, '-' for stdin")->required();
    solve_cmd->add_option("--partition", solve_flags.partition, "singleton|star|k1d:<d>|clique|auto");
    solve_cmd->add_flag("--witness", solve_flags.witness, "Print a labeling on YES");
    solve_cmd->add_flag("--no-early-exit", solve_flags.no_early_exit, "Run every level up to the largest label");
    solve_cmd->add_flag("--no-gap-compress", solve_flags.no_gap_compress, "Keep the label gaps of the input");
    solve_cmd->add_flag("--no-strong-prune", solve_flags.no_strong_prune, "Prune in-block prefixes by equality only");
    solve_cmd->add_flag("--trace", solve_flags.trace, "Per-level table sizes on stderr");
    solve_cmd->add_option("--limit", solve_flags.limit, "Maximum number of vectors held at once");

    std::string oracle_file;
    bool oracle_witness = false;
    auto *oracle_cmd = app.add_subcommand("oracle", "Decide an instance by brute-force backtracking");
    oracle_cmd->add_option("file", oracle_file, "GLTC file, '-' for stdin")->required();
    oracle_cmd->add_flag("--witness", oracle_witness, "Print a labeling on YES");

    ReduceFlags reduce_flags;
    auto *reduce_cmd = app.add_subcommand("reduce", "Translate a classical labeling problem into a GLTC file");
    reduce_cmd->add_option("model", reduce_flags.model, "coloring|lpq|channel|tcoloring")
        ->required()
        ->check(CLI::IsMember({"coloring", "lpq", "channel", "tcoloring"}));
    reduce_cmd->add_option("file", reduce_flags.file, "graph file, '-' for stdin")->required();
    reduce_cmd->add_option("--p", reduce_flags.p, "L(p,q): separation at distance 1");
    reduce_cmd->add_option("--q", reduce_flags.q, "L(p,q): separation at distance 2");
    reduce_cmd->add_option("--T", reduce_flags.T, "T-coloring: forbidden differences, must include 0")->delimiter(',');
    reduce_cmd->add_option("--span", reduce_flags.span, "Give every vertex the list 1..span")->check(CLI::PositiveNumber);

    GeneratorParams gen_params;
    std::uint64_t seed = 1;
    auto *gen_cmd = app.add_subcommand("gen", "Print a random instance");
    gen_cmd->add_option("--n", gen_params.n, "Vertices")->check(CLI::NonNegativeNumber);
    gen_cmd->add_option("--density", gen_params.density, "Edge probability")->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--tau", gen_params.tau, "Largest possible forbidden difference")->check(CLI::NonNegativeNumber);
    gen_cmd->add_option("--lmax", gen_params.lmax, "Largest possible label")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--seed", seed, "PRNG seed");

    std::string predict_file;
    std::string predict_partition = "auto";
    auto *predict_cmd = app.add_subcommand("predict", "Per-block prefix counts and the predicted base");
    predict_cmd->add_option("file", predict_file, "GLTC file, '-' for stdin")->required();
    predict_cmd->add_option("--partition", predict_partition, "singleton|star|k1d:<d>|clique|auto");

    int bases_tau = 1;
    auto *bases_cmd = app.add_subcommand("bases", "Running-time bases for one tau");
    bases_cmd->add_option("tau", bases_tau, "tau >= 1")->required()->check(CLI::Range(1, 60));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_yes : exit_error;
    }

    try {
        if (*solve_cmd)
            return cmd_solve(solve_flags, io);
        if (*oracle_cmd)
            return cmd_oracle(oracle_file, oracle_witness, io);
        if (*reduce_cmd)
            return cmd_reduce(reduce_flags, io);
        if (*gen_cmd) {
            out << serialize(generate_instance(gen_params, seed));
            return exit_yes;
        }
        if (*predict_cmd)
            return cmd_predict(predict_file, predict_partition, io);
        if (*bases_cmd)
            return cmd_bases(bases_tau, io);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    }
    return exit_error;
}

} // namespace gltc
