// degseq: decide, realize, trace, brute-force and generate degree sequences.
//
// Exit codes: 0 = yes / success, 1 = verdict no, 2 = input error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <limits>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "degseq/checks.hpp"
#include "degseq/graph.hpp"
#include "degseq/oracle.hpp"
#include "degseq/realize.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Accepts comma- and/or whitespace-separated integers, optionally
// wrapped in parentheses or brackets (the form `gen` emits).
degseq::DegreeSequence parse_sequence(const std::string& line) {
    std::vector<int> values;
    std::size_t col = 0;
    const std::size_t len = line.size();
    auto is_sep = [](char c) {
        return c == ',' || c == ' ' || c == '\t' || c == '\r' ||
               c == '(' || c == ')' || c == '[' || c == ']';
    };
    while (col < len) {
        if (is_sep(line[col])) {
            ++col;
            continue;
        }
        std::size_t start = col;
        while (col < len && !is_sep(line[col])) ++col;
        const std::string token = line.substr(start, col - start);
        try {
            std::size_t used = 0;
            const long v = std::stol(token, &used);
            if (used != token.size())
                throw std::invalid_argument(token);
            if (v < 0)
                throw ParseError("column " + std::to_string(start + 1) +
                                 ": negative term " + token);
            if (v > std::numeric_limits<int>::max())
                throw ParseError("column " + std::to_string(start + 1) +
                                 ": term too large: " + token);
            values.push_back(static_cast<int>(v));
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("column " + std::to_string(start + 1) +
                             ": not an integer: '" + token + "'");
        }
    }
    if (values.empty())
        throw ParseError("empty sequence");
    return degseq::DegreeSequence::normalize(std::move(values));
}

// One input line per sequence, from an inline argument or a file.
// Inline arguments are "single-sequence mode" for exit-code purposes.
struct InputLines {
    std::vector<std::string> lines;
    bool single = false;
};

InputLines read_input(const std::string& inline_arg, const std::string& file) {
    InputLines in;
    if (!inline_arg.empty()) {
        in.lines.push_back(inline_arg);
        in.single = true;
        return in;
    }
    std::ifstream f(file);
    if (!f)
        throw ParseError("cannot open file: " + file);
    std::string line;
    while (std::getline(f, line)) {
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
        trimmed.erase(trimmed.find_last_not_of(" \t\r") + 1);
        if (!trimmed.empty()) in.lines.push_back(trimmed);
    }
    return in;
}

nlohmann::ordered_json report_json(const degseq::DegreeSequence& s) {
    const degseq::CheckReport r = degseq::check_report(s);
    std::string reason;
    for (const degseq::Verdict* v :
         {&r.realizable_multigraph, &r.graphic, &r.connected_realizable,
          &r.connected_graphic}) {
        if (!v->ok) {
            reason = v->reason;
            break;
        }
    }
    nlohmann::ordered_json j;
    j["sequence"] = s.to_string();
    j["realizable"] = r.realizable_multigraph.ok;
    j["graphic"] = r.graphic.ok;
    j["connected_realizable"] = r.connected_realizable.ok;
    j["connected_graphic"] = r.connected_graphic.ok;
    j["reason"] = reason;
    return j;
}

int cmd_check(const std::string& inline_arg, const std::string& file) {
    InputLines in = read_input(inline_arg, file);
    bool any_error = false;
    bool last_yes = false;
    std::size_t lineno = 0;
    for (const std::string& line : in.lines) {
        ++lineno;
        try {
            const auto s = parse_sequence(line);
            std::cout << report_json(s).dump() << "\n";
            last_yes = degseq::is_connected_graphic(s).ok;
        } catch (const std::exception& e) {
            std::cerr << "line " << lineno << ": " << e.what() << "\n";
            any_error = true;
        }
    }
    if (any_error) return kExitError;
    if (in.single) return last_yes ? kExitYes : kExitNo;
    return kExitYes;
}

void write_graph(std::ostream& os, const degseq::Graph& g,
                 const std::string& format) {
    const auto edge_list = g.edges();
    if (format == "dot") {
        os << "graph {\n";
        for (int v = 0; v < g.vertex_count(); ++v)
            os << "  v" << v << ";\n";
        for (const auto& [u, v] : edge_list)
            os << "  v" << u << " -- v" << v << ";\n";
        os << "}\n";
    } else if (format == "structured") {
        nlohmann::ordered_json j;
        j["n"] = g.vertex_count();
        auto& edges = j["edges"] = nlohmann::ordered_json::array();
        for (const auto& [u, v] : edge_list) edges.push_back({u, v});
        os << j.dump() << "\n";
    } else { // edges
        os << "n " << g.vertex_count() << "\n";
        for (const auto& [u, v] : edge_list)
            os << u << " " << v << "\n";
    }
}

int cmd_realize(const std::string& inline_arg, const std::string& file,
                bool connected, const std::string& format) {
    InputLines in = read_input(inline_arg, file);
    if (in.lines.size() != 1) {
        std::cerr << "realize expects exactly one sequence\n";
        return kExitError;
    }
    degseq::DegreeSequence s;
    try {
        s = parse_sequence(in.lines[0]);
    } catch (const std::exception& e) {
        std::cerr << "line 1: " << e.what() << "\n";
        return kExitError;
    }
    try {
        if (connected) {
            const degseq::Verdict v = degseq::is_connected_graphic(s);
            if (!v.ok) {
                std::cerr << "not connected-graphic: " << v.reason << "\n";
                return kExitNo;
            }
            write_graph(std::cout, degseq::realize_connected(s).graph, format);
        } else {
            const degseq::Verdict v = degseq::is_graphic(s);
            if (!v.ok) {
                std::cerr << "not graphic: " << v.reason << "\n";
                return kExitNo;
            }
            write_graph(std::cout, degseq::realize(s), format);
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitError;
    }
    return kExitYes;
}

int cmd_trace(const std::string& inline_arg, const std::string& file) {
    InputLines in = read_input(inline_arg, file);
    bool any_error = false;
    bool last_yes = false;
    std::size_t lineno = 0;
    for (const std::string& line : in.lines) {
        ++lineno;
        try {
            const auto s = parse_sequence(line);
            const degseq::ReductionTrace t = degseq::reduction_trace(s);
            for (std::size_t i = 0; i < t.steps.size(); ++i) {
                if (i) std::cout << " -> ";
                std::cout << t.steps[i].to_string();
            }
            std::cout << " => " << (t.connected_graphic ? "yes" : "no");
            if (!t.connected_graphic)
                std::cout << " (" << t.terminal_reason << ")";
            std::cout << "\n";
            last_yes = t.connected_graphic;
        } catch (const std::exception& e) {
            std::cerr << "line " << lineno << ": " << e.what() << "\n";
            any_error = true;
        }
    }
    if (any_error) return kExitError;
    if (in.single) return last_yes ? kExitYes : kExitNo;
    return kExitYes;
}

int cmd_oracle(const std::string& inline_arg, const std::string& file,
               bool with_counts) {
    InputLines in = read_input(inline_arg, file);
    bool any_error = false;
    std::size_t lineno = 0;
    for (const std::string& line : in.lines) {
        ++lineno;
        try {
            const auto s = parse_sequence(line);
            if (with_counts) {
                const auto r = degseq::enumerate_realizations(s);
                std::cout << s.to_string() << " total " << r.total
                          << " connected " << r.connected << "\n";
            } else {
                std::cout << s.to_string() << " exists "
                          << (degseq::exists_graphic_bruteforce(s) ? "true" : "false")
                          << " exists_connected "
                          << (degseq::exists_connected_bruteforce(s) ? "true" : "false")
                          << "\n";
            }
        } catch (const std::exception& e) {
            std::cerr << "line " << lineno << ": " << e.what() << "\n";
            any_error = true;
        }
    }
    return any_error ? kExitError : kExitYes;
}

int cmd_gen(int n, int count, std::uint64_t seed, bool connected) {
    if (n < 1 || count < 1) {
        std::cerr << "gen: require n >= 1 and count >= 1\n";
        return kExitError;
    }
    std::mt19937_64 rng(seed);
    std::vector<degseq::Edge> all_pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
    const std::size_t max_edges = all_pairs.size();
    const std::size_t min_edges = static_cast<std::size_t>(n - 1);

    for (int i = 0; i < count; ++i) {
        degseq::Graph g(n);
        while (true) {
            g = degseq::Graph(n);
            if (n > 1) {
                std::uniform_int_distribution<std::size_t> pick_m(min_edges, max_edges);
                const std::size_t m = pick_m(rng);
                std::shuffle(all_pairs.begin(), all_pairs.end(), rng);
                for (std::size_t k = 0; k < m; ++k)
                    g.add_edge(all_pairs[k].first, all_pairs[k].second);
            }
            if (!connected) break;
            // connect() needs minimum degree >= 1; resample otherwise
            bool has_isolated = false;
            for (int v = 0; v < n && !has_isolated; ++v)
                has_isolated = n > 1 && g.degree(v) == 0;
            if (has_isolated) continue;
            if (degseq::connected_components(g).size() > 1)
                g = degseq::connect(std::move(g)).graph;
            break;
        }
        std::cout << degseq::degree_sequence(g).to_string() << "\n";
    }
    return kExitYes;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree sequence toolkit: graphic and connected-graphic "
                 "checks, witness construction, reduction traces, "
                 "brute-force oracle, corpus generation"};
    app.require_subcommand(1);

    std::string seq, file, format = "edges";
    bool connected = false, with_counts = false;
    int gen_n = 0, gen_count = 1;
    std::uint64_t seed = 0;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("sequence", seq, "inline sequence, e.g. \"2,2,1,1\"");
        cmd->add_option("--file", file, "file with one sequence per line");
    };

    auto* check = app.add_subcommand("check", "report all four verdicts");
    add_input(check);

    auto* realize = app.add_subcommand("realize", "emit a witness graph");
    add_input(realize);
    realize->add_flag("--connected", connected, "require a connected witness");
    realize->add_option("--format", format, "dot|edges|structured")
        ->check(CLI::IsMember({"dot", "edges", "structured"}));

    auto* trace = app.add_subcommand("trace", "print the reduction chain");
    add_input(trace);

    auto* oracle = app.add_subcommand("oracle", "brute-force enumeration (n <= 8)");
    add_input(oracle);
    oracle->add_flag("--count", with_counts, "print realization counts");

    auto* gen = app.add_subcommand("gen", "emit random graphic sequences");
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--count", gen_count, "number of sequences");
    gen->add_option("--seed", seed, "rng seed");
    gen->add_flag("--connected", connected, "emit connected-graphic sequences");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitError;
    }

    try {
        if (seq.empty() && file.empty() && !gen->parsed()) {
            std::cerr << "no input: pass a sequence or --file\n";
            return kExitError;
        }
        if (check->parsed()) return cmd_check(seq, file);
        if (realize->parsed()) return cmd_realize(seq, file, connected, format);
        if (trace->parsed()) return cmd_trace(seq, file);
        if (oracle->parsed()) return cmd_oracle(seq, file, with_counts);
        if (gen->parsed()) return cmd_gen(gen_n, gen_count, seed, connected);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
