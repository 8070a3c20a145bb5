// w6tool: command line front end for the graph library. Exit codes follow
// a fixed contract: 0 = predicate true / success, 1 = predicate false,
// 2 = usage or parse error.

#include "CLI11.hpp"

#include "w6/canonical.hpp"
#include "w6/chains.hpp"
#include "w6/connectivity.hpp"
#include "w6/constructors.hpp"
#include "w6/graph.hpp"
#include "w6/hamilton.hpp"
#include "w6/minor.hpp"
#include "w6/parallel.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace w6;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Named graphs accepted everywhere a graph6 string is: family syntax
// (C9, W6, C2_7, DW_5, DW+_4, K7, K4,3), catalog names (K6-e, C2_7+e,
// Gamma1, K43_30, ...), and the special names (petersen, cube, k33, J, ...).
std::optional<Graph> resolve_named(const std::string& name) {
    auto parse_int = [](const std::string& s) -> std::optional<int> {
        if (s.empty()) return std::nullopt;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        return std::stoi(s);
    };
    auto family = [&](const std::string& prefix, Family f) -> std::optional<Graph> {
        if (name.rfind(prefix, 0) != 0) return std::nullopt;
        auto k = parse_int(name.substr(prefix.size()));
        if (!k) return std::nullopt;
        return construct(f, *k);
    };
    if (auto g = family("C2_", Family::squared_cycle)) return g;
    if (auto g = family("DW+_", Family::double_wheel_plus)) return g;
    if (auto g = family("DW_", Family::double_wheel)) return g;
    if (auto g = family("C", Family::cycle)) return g;
    if (auto g = family("W", Family::wheel)) return g;
    if (auto comma = name.find(','); comma != std::string::npos && name.rfind('K', 0) == 0) {
        auto a = parse_int(name.substr(1, comma - 1));
        auto b = parse_int(name.substr(comma + 1));
        if (a && b) return construct(Family::complete_bipartite, *a, *b);
    }
    if (auto g = family("K", Family::complete)) return g;
    for (const CatalogEntry& e : catalog())
        if (e.name == name) return e.graph;
    try {
        return special(name);
    } catch (const std::invalid_argument&) {
    }
    return std::nullopt;
}

struct InputOptions {
    std::string inline_g6;
    std::string file;
    std::string name;
    bool use_stdin = false;
};

void add_input_options(CLI::App* cmd, InputOptions& in, bool allow_stdin = true) {
    cmd->add_option("graph6", in.inline_g6, "graph6 string");
    cmd->add_option("--file", in.file, "read the graph6 string from this file");
    cmd->add_option("--name", in.name, "construct a named graph (e.g. K6, C2_7, DW_5, petersen)");
    if (allow_stdin)
        cmd->add_flag("--stdin", in.use_stdin, "batch mode: one graph6 per line on stdin");
}

struct Input {
    Graph graph;
    int line_no;
};

std::vector<Input> gather_inputs(const InputOptions& in) {
    int sources = (!in.inline_g6.empty() ? 1 : 0) + (!in.file.empty() ? 1 : 0) +
                  (!in.name.empty() ? 1 : 0) + (in.use_stdin ? 1 : 0);
    if (sources != 1) throw UsageError("exactly one input source required (graph6, --file, --name, or --stdin)");
    if (!in.name.empty()) {
        auto g = resolve_named(in.name);
        if (!g) throw UsageError("unknown graph name: " + in.name);
        return {{*g, 1}};
    }
    auto parse_at = [](const std::string& line, int line_no) -> Input {
        try {
            return {parse_graph6(line), line_no};
        } catch (const Graph6Error& e) {
            throw UsageError("line " + std::to_string(line_no) + ", byte " +
                             std::to_string(e.offset) + ": " + e.what());
        }
    };
    if (!in.inline_g6.empty()) return {parse_at(in.inline_g6, 1)};
    std::vector<Input> out;
    if (in.use_stdin) {
        std::string line;
        int line_no = 0;
        while (std::getline(std::cin, line)) {
            ++line_no;
            if (!line.empty()) out.push_back(parse_at(line, line_no));
        }
        return out;
    }
    std::ifstream f(in.file);
    if (!f) throw UsageError("cannot open file: " + in.file);
    std::string line;
    int line_no = 0;
    while (std::getline(f, line)) {
        ++line_no;
        if (!line.empty()) return {parse_at(line, line_no)};
    }
    throw UsageError("file has no graph6 line: " + in.file);
}

// Run fn over all inputs (possibly concurrently), print outputs in input
// order, and fold exit codes: 0 only when every line reports 0.
int run_batch(const std::vector<Input>& inputs,
              const std::function<std::pair<int, std::string>(const Graph&)>& fn) {
    std::vector<std::pair<int, std::string>> results(inputs.size());
    parallel_for(static_cast<int>(inputs.size()),
                 [&](int i) { results[static_cast<std::size_t>(i)] = fn(inputs[static_cast<std::size_t>(i)].graph); });
    int status = 0;
    for (const auto& [code, text] : results) {
        std::cout << text << '\n';
        status = std::max(status, code);
    }
    return status;
}

std::string render_branch_sets_compact(const MinorModel& model) {
    std::ostringstream out;
    for (std::size_t i = 0; i < model.branch_sets.size(); ++i) {
        if (i) out << ' ';
        out << i << ":{";
        for (std::size_t j = 0; j < model.branch_sets[i].size(); ++j) {
            if (j) out << ',';
            out << model.branch_sets[i][j];
        }
        out << '}';
    }
    return out.str();
}

std::pair<int, std::string> classify_one(const Graph& g) {
    bool conn = is_k_connected(g, 4);
    auto model = find_minor_model(g, wheel_w6());
    std::ostringstream out;
    out << "4-connected: " << (conn ? "yes" : "no") << "; W6-minor-free: " << (model ? "no" : "yes");
    if (model) {
        out << "; certificate: " << render_branch_sets_compact(*model);
    } else if (auto name = catalog_lookup(g)) {
        out << "; catalog: " << *name;
    } else if (conn) {
        // unreachable if the characterization holds; kept as a tripwire
        out << "; catalog: not in catalog (theorem violated)";
    } else {
        out << "; catalog: none";
    }
    return {0, out.str()};
}

std::pair<int, std::string> minor_one(const Graph& g, const Graph& pattern) {
    auto model = find_minor_model(g, pattern);
    if (!model) return {1, "no minor"};
    std::ostringstream out;
    for (std::size_t i = 0; i < model->branch_sets.size(); ++i) {
        out << "h-vertex " << i << ": {";
        for (std::size_t j = 0; j < model->branch_sets[i].size(); ++j) {
            if (j) out << ", ";
            out << model->branch_sets[i][j];
        }
        out << "}\n";
    }
    for (const auto& [he, ge] : model->edge_witnesses)
        out << "h-edge (" << he.u << "," << he.v << "): g-edge (" << ge.u << "," << ge.v << ")\n";
    std::string s = out.str();
    if (!s.empty() && s.back() == '\n') s.pop_back();
    return {0, s};
}

std::pair<int, std::string> connectivity_one(const Graph& g, int at_least) {
    SeparatorCertificate cert;
    int k = vertex_connectivity(g, &cert);
    std::ostringstream out;
    out << "connectivity: " << k;
    if (!cert.cut.empty() || (!cert.side_a.empty() && !cert.side_b.empty())) {
        out << "; separator: {";
        for (std::size_t i = 0; i < cert.cut.size(); ++i) {
            if (i) out << ',';
            out << cert.cut[i];
        }
        out << '}';
    }
    int code = at_least >= 0 ? (k >= at_least ? 0 : 1) : 0;
    return {code, out.str()};
}

std::pair<int, std::string> hamilton_one(const Graph& g) {
    auto cycle = find_hamiltonian_cycle(g);
    if (!cycle) return {1, "none"};
    std::ostringstream out;
    for (std::size_t i = 0; i < cycle->size(); ++i) {
        if (i) out << ' ';
        out << (*cycle)[i];
    }
    return {0, out.str()};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial toolkit for 4-connected W6-minor-free graphs"};
    app.require_subcommand(1);

    InputOptions cls_in;
    CLI::App* cls = app.add_subcommand("classify", "4-connectivity, W6-minor-freeness, catalog membership");
    add_input_options(cls, cls_in);

    InputOptions minor_in;
    std::string pattern_arg = "w6";
    CLI::App* minor_cmd = app.add_subcommand("minor", "search for a pattern minor, print the model");
    add_input_options(minor_cmd, minor_in);
    minor_cmd->add_option("--pattern", pattern_arg, "pattern: named graph or graph6 (default w6)");

    InputOptions conn_in;
    int at_least = -1;
    CLI::App* conn_cmd = app.add_subcommand("connectivity", "vertex connectivity and a minimum separator");
    add_input_options(conn_cmd, conn_in);
    conn_cmd->add_option("--at-least", at_least, "exit 0 iff connectivity >= this");

    InputOptions ham_in;
    CLI::App* ham_cmd = app.add_subcommand("hamilton", "find a Hamilton cycle");
    add_input_options(ham_cmd, ham_in);

    InputOptions split_in;
    bool split_4conn = false, split_w6free = false;
    CLI::App* split_cmd = app.add_subcommand("splits", "enumerate vertex splits up to isomorphism");
    add_input_options(split_cmd, split_in, false);
    split_cmd->add_flag("--4conn", split_4conn, "keep only 4-connected splits");
    split_cmd->add_flag("--w6-free", split_w6free, "keep only W6-minor-free splits");

    InputOptions chain_in;
    std::string chain_target;
    CLI::App* chain_cmd = app.add_subcommand("chain", "contraction chain down to a terminal graph");
    add_input_options(chain_cmd, chain_in, false);
    chain_cmd->add_option("--target", chain_target, "search a chain reaching this target: c25 or c26");

    std::string catalog_format = "graph6";
    CLI::App* catalog_cmd = app.add_subcommand("catalog", "the fourteen catalog graphs");
    catalog_cmd->add_option("--format", catalog_format, "graph6 or dot")
        ->check(CLI::IsMember({"graph6", "dot"}));

    int cubic_max_n = 14;
    CLI::App* cubic_cmd = app.add_subcommand("generate-cubic", "cyclically 4-connected cubic graphs");
    cubic_cmd->add_option("--max-n", cubic_max_n, "vertex bound (<= 14)");

    int theorem_max_n = 8;
    std::string report_file;
    CLI::App* theorem_cmd = app.add_subcommand("verify-theorem", "exhaustively certify the catalog");
    theorem_cmd->add_option("--max-n", theorem_max_n, "vertex bound");
    theorem_cmd->add_option("--report", report_file, "also write the report to this file");

    InputOptions dot_in;
    CLI::App* dot_cmd = app.add_subcommand("dot", "DOT output for any graph");
    add_input_options(dot_cmd, dot_in, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cls) return run_batch(gather_inputs(cls_in), classify_one);
        if (*minor_cmd) {
            Graph pattern = wheel_w6();
            if (pattern_arg != "w6" && pattern_arg != "W6") {
                if (auto named = resolve_named(pattern_arg))
                    pattern = *named;
                else
                    pattern = parse_graph6(pattern_arg);
            }
            return run_batch(gather_inputs(minor_in),
                             [&](const Graph& g) { return minor_one(g, pattern); });
        }
        if (*conn_cmd)
            return run_batch(gather_inputs(conn_in),
                             [&](const Graph& g) { return connectivity_one(g, at_least); });
        if (*ham_cmd) return run_batch(gather_inputs(ham_in), hamilton_one);
        if (*split_cmd) {
            Graph g = gather_inputs(split_in)[0].graph;
            for (const Graph& h : enumerate_splits(g, split_4conn)) {
                if (split_w6free && !is_w6_minor_free(h)) continue;
                std::cout << emit_graph6(h) << '\n';
            }
            return 0;
        }
        if (*chain_cmd) {
            Graph g = gather_inputs(chain_in)[0].graph;
            std::optional<Chain> chain;
            if (chain_target.empty()) {
                chain = chain_decompose(g);
            } else if (chain_target == "c25") {
                chain = chain_search(g, construct(Family::squared_cycle, 5));
            } else if (chain_target == "c26") {
                chain = chain_search(g, construct(Family::squared_cycle, 6));
            } else {
                throw UsageError("unknown chain target: " + chain_target);
            }
            if (!chain) {
                std::cout << "no chain\n";
                return 1;
            }
            for (std::size_t i = 0; i < chain->graphs.size(); ++i) {
                std::cout << emit_graph6(chain->graphs[i]) << '\n';
                if (i < chain->contracted.size())
                    std::cout << "contract (" << chain->contracted[i].u << ","
                              << chain->contracted[i].v << ")\n";
            }
            return 0;
        }
        if (*catalog_cmd) {
            for (const CatalogEntry& e : catalog()) {
                if (catalog_format == "graph6")
                    std::cout << e.name << '\t' << emit_graph6(e.graph) << '\n';
                else
                    std::cout << emit_dot(e.graph, e.name);
            }
            return 0;
        }
        if (*cubic_cmd) {
            for (const Graph& g : generate_cyclically_4conn_cubic(cubic_max_n))
                std::cout << emit_graph6(g) << '\n';
            return 0;
        }
        if (*theorem_cmd) {
            TheoremReport report = verify_theorem(theorem_max_n);
            std::string text = report.render();
            std::cout << text;
            if (!report_file.empty()) {
                std::ofstream f(report_file);
                if (!f) throw UsageError("cannot write report file: " + report_file);
                f << text;
            }
            return report.ok ? 0 : 1;
        }
        if (*dot_cmd) {
            Graph g = gather_inputs(dot_in)[0].graph;
            std::cout << emit_dot(g, "g");
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Graph6Error& e) {
        std::cerr << "error: line 1, byte " << e.offset << ": " << e.what() << '\n';
        return 2;
    }
    return 2;
}
