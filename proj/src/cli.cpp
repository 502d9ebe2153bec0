#include "diagnet/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "diagnet/conditions.hpp"
#include "diagnet/diagnosability.hpp"
#include "diagnet/distinguishability.hpp"
#include "diagnet/errors.hpp"
#include "diagnet/graph_io.hpp"
#include "diagnet/syndrome.hpp"
#include "diagnet/tables.hpp"
#include "diagnet/topologies.hpp"

namespace diagnet::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BadGraph : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "text";
    bool format_given = false;
    std::uint64_t budget_pairs = SearchOptions{}.max_pairs;
    std::optional<double> budget_seconds;
    unsigned jobs = 1;
    std::string out_path;

    bool json() const { return format == "json"; }

    SearchOptions search() const {
        SearchOptions o;
        o.max_pairs = budget_pairs;
        o.max_seconds = budget_seconds;
        o.jobs = jobs;
        return o;
    }
};

int parse_param(const std::string& text) {
    int value = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) throw UsageError(fmt::format("expected an integer, got '{}'", text));
    return value;
}

TopologySpec parse_family(const std::string& family, const std::vector<std::string>& raw) {
    std::vector<int> p;
    for (const auto& r : raw) p.push_back(parse_param(r));
    auto need = [&](std::size_t lo, std::size_t hi) {
        if (p.size() < lo || p.size() > hi)
            throw UsageError(fmt::format("{} takes {} parameter(s), got {}", family,
                                         lo == hi ? std::to_string(lo) : fmt::format("{} or {}", lo, hi), p.size()));
    };
    TopologySpec spec;
    if (family == "hypercube") {
        need(1, 1);
        spec = Hypercube{p[0]};
    } else if (family == "enhanced") {
        need(2, 2);
        spec = EnhancedHypercube{p[0], p[1]};
    } else if (family == "twisted") {
        need(1, 1);
        spec = TwistedCube{p[0]};
    } else if (family == "mobius") {
        need(1, 2);
        spec = MobiusCube{p[0], p.size() > 1 ? p[1] : 0};
    } else if (family == "crossed") {
        need(1, 1);
        spec = CrossedCube{p[0]};
    } else if (family == "ccc") {
        need(1, 1);
        spec = CubeConnectedCycles{p[0]};
    } else if (family == "torus") {
        need(2, 2);
        spec = Torus{p[0], p[1]};
    } else if (family == "star") {
        need(1, 1);
        spec = Star{p[0]};
    } else {
        throw UsageError(fmt::format("unknown family '{}'", family));
    }
    try {
        validate(spec);
    } catch (const ParameterError& e) {
        throw UsageError(e.what());
    }
    return spec;
}

FaultSet parse_node_list(const std::string& text, std::size_t n, const char* what) {
    FaultSet set(n);
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        if (first == std::string::npos) {
            if (text.find_first_not_of(" \t,") == std::string::npos) continue;
            throw UsageError(fmt::format("{}: empty entry in node list '{}'", what, text));
        }
        item = item.substr(first, item.find_last_not_of(" \t") - first + 1);
        unsigned long long v = 0;
        const char* end = item.data() + item.size();
        auto [ptr, ec] = std::from_chars(item.data(), end, v);
        if (ec != std::errc() || ptr != end)
            throw UsageError(fmt::format("{}: '{}' is not a node id", what, item));
        if (v >= n) throw UsageError(fmt::format("{}: node {} out of range (graph has {} nodes)", what, v, n));
        set.insert(static_cast<NodeId>(v));
    }
    return set;
}

Graph load(const std::string& path) {
    try {
        return read_graph_file(path);
    } catch (const std::exception& e) {
        throw BadGraph(e.what());
    }
}

std::string set_text(const NodeSet& s) {
    std::string out = "{";
    bool first = true;
    for (NodeId v : s.to_vector()) {
        out += fmt::format("{}{}", first ? "" : ",", v);
        first = false;
    }
    return out + "}";
}

std::string diag_text(const DiagnosabilityResult& r, const std::string& name) {
    std::string out = fmt::format("{}: {} {} diagnosability = {}\n", name.empty() ? "graph" : name,
                                  r.model == DiagnosisModel::Pmc ? "PMC" : "MM*", to_string(r.strategy), r.t);
    out += fmt::format("method: {}{}\n", to_string(r.method), r.exact ? " (exact)" : " (lower bound)");
    if (r.certified_bound) out += fmt::format("certified bound: {}\n", *r.certified_bound);
    if (r.witness)
        out += fmt::format("indistinguishable pair at level {}: F1 = {}, F2 = {}\n", r.t + 1, set_text(r.witness->f1),
                           set_text(r.witness->f2));
    out += fmt::format("pairs examined: {}, sets enumerated: {}, levels checked: {}, elapsed: {:.3f} s\n",
                       r.stats.pairs_examined, r.stats.sets_enumerated, r.stats.levels_checked, r.elapsed.count());
    return out;
}

std::string syndrome_text(const Syndrome& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Test& t = s.tests()[i];
        if (t.arbiter)
            out += fmt::format("{} {} {} {}\n", *t.arbiter, t.u, t.v, s.values()[i]);
        else
            out += fmt::format("{} {} {}\n", t.u, t.v, s.values()[i]);
    }
    return out;
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fault diagnosability of interconnection networks", "diagnet"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "Payload format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--budget-pairs", opt.budget_pairs, "Search budget in candidate pairs")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget-seconds", opt.budget_seconds, "Search budget in seconds")->check(CLI::PositiveNumber);
    app.add_option("--jobs", opt.jobs, "Worker threads per search")->check(CLI::Range(1u, 1024u));
    app.add_option("--out", opt.out_path, "Write the payload to this file");

    std::string family;
    std::vector<std::string> params;
    auto* gen = app.add_subcommand("gen", "Generate a network family instance");
    gen->add_option("family", family, "hypercube|enhanced|twisted|mobius|crossed|ccc|torus|star")->required();
    gen->add_option("params", params, "Family parameters");

    std::string exception_kind;
    std::optional<int> crown_n;
    auto* gen_ex = app.add_subcommand("gen-exception", "Generate G_8, a crown graph G_{n,n}, or G_5");
    gen_ex->add_option("kind", exception_kind)->required()->check(CLI::IsMember({"g8", "crown", "g5"}));
    gen_ex->add_option("n", crown_n, "Crown graph side");

    std::string file;
    auto* check = app.add_subcommand("check", "Report structural conditions and applicable theorems");
    check->add_option("file", file)->required();

    std::string model_text = "pmc", strategy_text = "precise", method_text = "auto";
    auto* diag = app.add_subcommand("diag", "Compute diagnosability");
    diag->add_option("file", file)->required();
    diag->add_option("--model", model_text)->check(CLI::IsMember({"pmc", "mm", "mmstar"}));
    diag->add_option("--strategy", strategy_text)->check(CLI::IsMember({"precise", "pessimistic"}));
    diag->add_option("--method", method_text)->check(CLI::IsMember({"brute", "theorem", "auto"}));

    std::string f1_text, f2_text;
    auto* dist = app.add_subcommand("distinguishable", "Decide whether two fault sets are distinguishable");
    dist->add_option("file", file)->required();
    dist->add_option("--f1", f1_text)->required();
    dist->add_option("--f2", f2_text)->required();
    dist->add_option("--model", model_text)->check(CLI::IsMember({"pmc", "mm", "mmstar"}));

    std::string faults_text;
    std::uint64_t seed = 0;
    auto* synd = app.add_subcommand("syndrome", "Sample a syndrome for a fault set");
    synd->add_option("file", file)->required();
    synd->add_option("--faults", faults_text)->required();
    synd->add_option("--seed", seed);
    synd->add_option("--model", model_text)->check(CLI::IsMember({"pmc", "mm", "mmstar"}));

    std::vector<std::string> caps;
    auto* tables = app.add_subcommand("tables", "Reproduce the property and diagnosability tables");
    tables->add_option("caps", caps, "family=N settings, torus=NxM, all=N");

    auto* dot = app.add_subcommand("export-dot", "Write a graph in Graphviz DOT");
    dot->add_option("file", file)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    opt.format_given = app.count("--format") > 0;

    std::string payload;
    try {
        if (*gen) {
            const Graph g = generate(parse_family(family, params));
            payload = write_graph(g, opt.format_given && !opt.json() ? GraphFormat::Text : GraphFormat::Json);
        } else if (*gen_ex) {
            ExceptionalKind kind = G8{};
            if (exception_kind == "crown") {
                if (!crown_n) throw UsageError("gen-exception crown needs n");
                kind = Crown{*crown_n};
            } else if (crown_n) {
                throw UsageError(fmt::format("gen-exception {} takes no parameter", exception_kind));
            } else if (exception_kind == "g5") {
                kind = G5{};
            }
            Graph g;
            try {
                g = generate_exceptional(kind);
            } catch (const ParameterError& e) {
                throw UsageError(e.what());
            }
            payload = write_graph(g, opt.format_given && !opt.json() ? GraphFormat::Text : GraphFormat::Json);
        } else if (*check) {
            const Graph g = load(file);
            ConditionReport report;
            try {
                report = check_conditions(g);
            } catch (const DomainError& e) {
                throw BadGraph(e.what());
            }
            payload = opt.json() ? dump(to_json(report)) : render_text(report, g.name());
        } else if (*diag) {
            const Graph g = load(file);
            const auto r = diagnosability(g, parse_model(model_text), parse_strategy(strategy_text),
                                          parse_method(method_text), opt.search());
            payload = opt.json() ? dump(to_json(r)) : diag_text(r, g.name());
        } else if (*dist) {
            const Graph g = load(file);
            const FaultSet f1 = parse_node_list(f1_text, g.num_nodes(), "--f1");
            const FaultSet f2 = parse_node_list(f2_text, g.num_nodes(), "--f2");
            if (f1 == f2) throw UsageError("--f1 and --f2 must differ");
            const DiagnosisModel model = parse_model(model_text);
            const auto node = distinguishing_node(g, f1, f2, model);
            if (opt.json()) {
                nlohmann::ordered_json j;
                j["model"] = to_string(model);
                j["f1"] = f1.to_vector();
                j["f2"] = f2.to_vector();
                j["distinguishable"] = node.has_value();
                j["witness_node"] = node ? nlohmann::ordered_json(*node) : nlohmann::ordered_json(nullptr);
                payload = dump(j);
            } else if (node) {
                payload = fmt::format("distinguishable (witness node {})\n", *node);
            } else {
                payload = "indistinguishable\n";
            }
        } else if (*synd) {
            const Graph g = load(file);
            const FaultSet faults = parse_node_list(faults_text, g.num_nodes(), "--faults");
            const Syndrome s = sample_syndrome(g, faults, parse_model(model_text), seed);
            payload = opt.json() ? dump(syndrome_to_json(s)) : syndrome_text(s);
        } else if (*tables) {
            TableCaps tc;
            for (const auto& c : caps) tc.apply(c);
            const TablesReport report = build_tables(tc, opt.search());
            payload = opt.json() ? dump(to_json(report)) : render_text(report);
        } else if (*dot) {
            payload = graph_to_dot(load(file));
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const InapplicableError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const BadGraph& e) {
        err << "error: invalid graph: " << e.what() << "\n";
        return kBadGraph;
    } catch (const SearchAborted& e) {
        err << "error: " << e.what() << "\n";
        return kBudget;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kBadGraph;
    }

    if (opt.out_path.empty()) {
        out << payload;
    } else {
        std::ofstream file_out(opt.out_path, std::ios::binary);
        if (!(file_out << payload)) {
            err << "error: cannot write '" << opt.out_path << "'\n";
            return kUsage;
        }
    }
    return kOk;
}

}  // namespace diagnet::cli
