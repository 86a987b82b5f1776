#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "divlat/conjectures.hpp"
#include "divlat/divisor_graph.hpp"
#include "divlat/invariants.hpp"
#include "divlat/sequences.hpp"

using namespace divlat;

namespace {

enum Exit : int {
    kOk = 0,
    kMismatch = 1,
    kBadInput = 2,
    kCounterexample = 3,
};

struct Config {
    std::size_t node_budget = GraphBudget{}.max_nodes;
    unsigned dp_budget = kDefaultPathDpBudget;
    std::uint64_t int_bound = kDefaultIntegerBound;
    int threads = 1;
    std::string output;

    GraphBudget budget() const {
        GraphBudget b;
        b.max_nodes = node_budget;
        return b;
    }
    Execution exec() const { return threads == 1 ? Execution::serial() : Execution::parallel(threads); }
};

// Defaults may come from the environment; flags still win.
template <class T>
void env_default(const char* name, T& target) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return;
    std::istringstream in(raw);
    T value{};
    if (!(in >> value) || !in.eof() || value == 0) throw UsageError(std::string(name) + " must be a positive integer");
    target = value;
}

void write_output(const Config& cfg, const std::string& text) {
    if (cfg.output.empty() || cfg.output == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw InputError("cannot open " + cfg.output + " for writing");
    out << text;
}

struct Target {
    PrimeSignature signature;
    std::optional<Factorization> factorization;  // set when given as --n
};

Target resolve_target(const std::optional<std::uint64_t>& n, const std::optional<std::string>& sig,
                      const Config& cfg) {
    if (n.has_value() == sig.has_value()) throw UsageError("give exactly one of --n and --sig");
    if (n) {
        auto f = factorize(*n, cfg.int_bound);
        auto s = signature_of(*n, cfg.int_bound);
        return {std::move(s), std::move(f)};
    }
    return {PrimeSignature::parse(*sig), std::nullopt};
}

nlohmann::ordered_json number(const BigCount& v) {
    if (const auto small = to_u64(v)) return *small;
    return to_decimal(v);
}

// ---------------------------------------------------------------- invariants

struct InvariantsArgs {
    std::optional<std::uint64_t> n;
    std::optional<std::string> sig;
    std::string format = "text";
};

int run_invariants(const InvariantsArgs& args, const Config& cfg) {
    const auto target = resolve_target(args.n, args.sig, cfg);
    const auto& s = target.signature;
    const auto record = all_invariants(s, cfg.dp_budget);

    if (args.format == "json") {
        nlohmann::ordered_json j;
        if (args.n) j["n"] = *args.n;
        j["signature"] = s.to_string();
        if (!args.n) j["LI"] = least_integer(s, cfg.int_bound);
        j["height"] = height(s);
        for (auto inv : kGraphInvariants) j[std::string(invariant_id(inv))] = number(record_value(record, inv));
        write_output(cfg, j.dump(2) + "\n");
        return kOk;
    }

    std::ostringstream out;
    auto line = [&](std::string_view label, const std::string& value) {
        out << label;
        for (auto i = label.size(); i < 10; ++i) out << ' ';
        out << value << '\n';
    };
    if (args.n) line("n", std::to_string(*args.n));
    line("signature", s.to_string());
    if (!args.n) line("LI", std::to_string(least_integer(s, cfg.int_bound)));
    line("height", std::to_string(height(s)));
    for (auto inv : kGraphInvariants) line(invariant_id(inv), to_decimal(record_value(record, inv)));
    write_output(cfg, out.str());
    return kOk;
}

// ------------------------------------------------------------------ sequence

struct SequenceArgs {
    std::string invariant;
    std::string order = "natural";
    std::size_t count = 50;
    std::string format = "csv";
};

Invariant parse_invariant_or_throw(const std::string& text) {
    const auto inv = parse_invariant(text);
    if (!inv) throw UsageError("unknown invariant '" + text + "'");
    return *inv;
}

Ordering parse_ordering_or_throw(const std::string& text) {
    const auto o = parse_ordering(text);
    if (!o) throw UsageError("unknown ordering '" + text + "'");
    return *o;
}

GenerateOptions generate_options(const Config& cfg) {
    GenerateOptions opts;
    opts.max_big_omega = cfg.dp_budget;
    opts.integer_bound = cfg.int_bound;
    opts.exec = cfg.exec();
    return opts;
}

int run_sequence(const SequenceArgs& args, const Config& cfg) {
    const auto inv = parse_invariant_or_throw(args.invariant);
    const auto ordering = parse_ordering_or_throw(args.order);
    const auto format = parse_output_format(args.format);
    if (!format) throw UsageError("unknown format '" + args.format + "'");
    const auto table = generate(inv, ordering, args.count, generate_options(cfg));
    for (const auto& note : table.notes) std::cerr << "note: " << note << '\n';
    write_output(cfg, emit(table, *format));
    return kOk;
}

// --------------------------------------------------------------------- graph

struct GraphArgs {
    std::optional<std::uint64_t> n;
    std::optional<std::string> sig;
    std::string kind = "hasse";
    std::string format = "dot";
};

int run_graph(const GraphArgs& args, const Config& cfg) {
    const auto target = resolve_target(args.n, args.sig, cfg);
    GraphKind kind;
    if (args.kind == "hasse") {
        kind = GraphKind::Hasse;
    } else if (args.kind == "closure") {
        kind = GraphKind::Closure;
    } else {
        throw UsageError("unknown graph kind '" + args.kind + "'");
    }
    const auto g = target.factorization ? build_graph(*target.factorization, kind, cfg.budget(), cfg.exec())
                                        : build_graph(target.signature, kind, cfg.budget(), cfg.exec());
    if (args.format == "dot") {
        write_output(cfg, to_dot(g));
    } else if (args.format == "json") {
        write_output(cfg, to_json(g));
    } else {
        throw UsageError("unknown graph format '" + args.format + "'");
    }
    return kOk;
}

// ------------------------------------------------------------------- compare

struct CompareArgs {
    std::string invariant;
    std::string order = "natural";
    std::string bfile;
    std::optional<std::size_t> count;
};

int run_compare(const CompareArgs& args, const Config& cfg) {
    const auto inv = parse_invariant_or_throw(args.invariant);
    const auto ordering = parse_ordering_or_throw(args.order);

    std::ifstream in(args.bfile, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read " << args.bfile << '\n';
        return kBadInput;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    std::size_t count = 0;
    try {
        count = args.count.value_or(parse_bfile(text).size());
    } catch (const FormatError& e) {
        std::cerr << "error: " << args.bfile << ":" << e.line() << ": " << e.what() << '\n';
        return kBadInput;
    }
    const auto table = generate(inv, ordering, count, generate_options(cfg));
    const auto report = compare_bfile(table, text);
    write_output(cfg, to_json(report));
    if (!report.full_match()) {
        const auto& m = *report.first_mismatch;
        std::cerr << "mismatch at key " << m.key << " (reference index " << m.their_index
                  << "): ours " << to_decimal(m.ours) << ", theirs " << to_decimal(m.theirs) << '\n';
        return kMismatch;
    }
    return kOk;
}

// --------------------------------------------------------------- conjectures

struct ConjectureArgs {
    int id = 0;
    std::optional<unsigned> max_omega;
    std::optional<std::uint64_t> max_n;
    std::optional<std::size_t> colex_count;
    std::string mode = "both";
    bool timing = false;
};

int run_conjectures(const ConjectureArgs& args, const Config& cfg) {
    const int scopes = args.max_omega.has_value() + args.max_n.has_value() + args.colex_count.has_value();
    if (scopes != 1) throw UsageError("give exactly one of --max-omega, --max-n, --colex-count");

    std::vector<PrimeSignature> sigs;
    std::string scope;
    if (args.max_omega) {
        sigs = signatures_up_to_big_omega(*args.max_omega);
        scope = "Omega <= " + std::to_string(*args.max_omega);
    } else if (args.max_n) {
        sigs = signatures_of_range(*args.max_n);
        scope = "n <= " + std::to_string(*args.max_n);
    } else {
        sigs = enumerate_signatures(SignatureOrder::GradedColex, *args.colex_count);
        scope = "first " + std::to_string(*args.colex_count) + " colex signatures";
    }

    std::vector<Disjointness> modes;
    if (args.mode == "node" || args.mode == "both") modes.push_back(Disjointness::NodeDisjoint);
    if (args.mode == "arc" || args.mode == "both") modes.push_back(Disjointness::ArcDisjoint);
    if (modes.empty()) throw UsageError("unknown mode '" + args.mode + "'");
    const auto id = static_cast<ConjectureId>(args.id);
    if (id != ConjectureId::DisjointPaths) modes.resize(1);  // mode is meaningless here

    ScanOptions opts;
    opts.budget = cfg.budget();
    opts.exec = cfg.exec();
    std::vector<ConjectureReport> reports;
    for (auto mode : modes) {
        opts.mode = mode;
        reports.push_back(scan(id, sigs, opts, scope));
    }

    std::string text;
    if (reports.size() == 1) {
        text = to_json(reports.front(), args.timing);
    } else {
        auto all = nlohmann::ordered_json::array();
        for (const auto& r : reports) all.push_back(nlohmann::ordered_json::parse(to_json(r, args.timing)));
        text = all.dump(2) + "\n";
    }
    write_output(cfg, text);

    bool held = true;
    for (const auto& r : reports) {
        held = held && r.held();
        for (const auto& e : r.errors) std::cerr << "warning: " << e.signature.to_string() << ": " << e.reason << '\n';
    }
    return held ? kOk : kCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
    Config cfg;
    try {
        env_default("DIVLAT_NODE_BUDGET", cfg.node_budget);
        env_default("DIVLAT_DP_BUDGET", cfg.dp_budget);
        env_default("DIVLAT_INT_BOUND", cfg.int_bound);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    }

    CLI::App app{"Divisor lattice graphs, their invariants and integer sequences."};
    app.require_subcommand(1);
    app.fallthrough();
    app.option_defaults()->always_capture_default();
    app.add_option("--node-budget", cfg.node_budget, "Largest graph to build, in nodes (env DIVLAT_NODE_BUDGET)")
        ->check(CLI::PositiveNumber);
    app.add_option("--dp-budget", cfg.dp_budget, "Largest Omega for the closure path count (env DIVLAT_DP_BUDGET)")
        ->check(CLI::PositiveNumber);
    app.add_option("--int-bound", cfg.int_bound, "Upper bound for integers such as n and LI (env DIVLAT_INT_BOUND)")
        ->check(CLI::PositiveNumber);
    app.add_option("--threads", cfg.threads, "Worker threads; 1 runs the serial path, 0 lets OpenMP decide")
        ->check(CLI::NonNegativeNumber);
    app.add_option("-o,--output", cfg.output, "Write results here instead of standard output");

    InvariantsArgs inv_args;
    auto* inv_cmd = app.add_subcommand("invariants", "All fourteen invariants of one n or one signature");
    auto* inv_n = inv_cmd->add_option("--n", inv_args.n, "Positive integer");
    auto* inv_sig = inv_cmd->add_option("--sig", inv_args.sig, "Signature such as 3.2.1 (0 for n = 1)");
    inv_n->excludes(inv_sig);
    inv_cmd->add_option("--format", inv_args.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    SequenceArgs seq_args;
    auto* seq_cmd = app.add_subcommand("sequence", "One invariant as an integer sequence");
    seq_cmd->add_option("--inv", seq_args.invariant, "Invariant id, symbol or alias (LI for least integers)")
        ->required();
    seq_cmd->add_option("--order", seq_args.order, "natural, colex or canonical");
    seq_cmd->add_option("--count", seq_args.count, "Number of entries");
    seq_cmd->add_option("--format", seq_args.format, "csv, json or bfile");

    GraphArgs graph_args;
    auto* graph_cmd = app.add_subcommand("graph", "Hasse diagram or transitive closure as DOT or JSON");
    auto* graph_n = graph_cmd->add_option("--n", graph_args.n, "Positive integer");
    auto* graph_sig = graph_cmd->add_option("--sig", graph_args.sig, "Signature such as 3.2.1");
    graph_n->excludes(graph_sig);
    graph_cmd->add_option("--kind", graph_args.kind, "hasse or closure");
    graph_cmd->add_option("--format", graph_args.format, "dot or json");

    CompareArgs cmp_args;
    auto* cmp_cmd = app.add_subcommand("compare", "Compare a generated sequence with a local b-file");
    cmp_cmd->add_option("--inv", cmp_args.invariant, "Invariant id, symbol or alias")->required();
    cmp_cmd->add_option("--order", cmp_args.order, "natural, colex or canonical");
    cmp_cmd->add_option("--bfile", cmp_args.bfile, "Path of the reference b-file")->required();
    cmp_cmd->add_option("--count", cmp_args.count, "Entries to generate (default: as many as the b-file lists)");

    ConjectureArgs conj_args;
    auto* conj_cmd = app.add_subcommand("conjectures", "Scan for counterexamples to the three conjectures");
    conj_cmd->add_option("--id", conj_args.id, "1 disjoint paths, 2 middle width, 3 argmax coincidence")
        ->required()
        ->check(CLI::Range(1, 3));
    conj_cmd->add_option("--max-omega", conj_args.max_omega, "All signatures with Omega up to this value");
    conj_cmd->add_option("--max-n", conj_args.max_n, "Signatures of 1..n");
    conj_cmd->add_option("--colex-count", conj_args.colex_count, "First signatures in graded colex order");
    conj_cmd->add_option("--mode", conj_args.mode, "node, arc or both (conjecture 1 only)")
        ->check(CLI::IsMember({"node", "arc", "both"}));
    conj_cmd->add_flag("--timing", conj_args.timing, "Include elapsed seconds in the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        if (*inv_cmd) return run_invariants(inv_args, cfg);
        if (*seq_cmd) return run_sequence(seq_args, cfg);
        if (*graph_cmd) return run_graph(graph_args, cfg);
        if (*cmp_cmd) return run_compare(cmp_args, cfg);
        if (*conj_cmd) return run_conjectures(conj_args, cfg);
    } catch (const FormatError& e) {
        std::cerr << "error: line " << e.line() << ": " << e.what() << '\n';
        return kBadInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    }
    return kBadInput;
}
