/// @file main.cpp
/// @brief revseq: command-line front end for the reversible-logic toolkit.
///
/// Subcommands: gates, table, verify, sim, truth, counter, analyze, compare.
/// Bits on the command line are written MSB first (Q2 Q1 Q0 for a 3-bit
/// counter). Exit status is 0 on success and nonzero on any error, with a
/// message on the error stream.

#include <CLI11.hpp>

#include "revseq/designs.hpp"
#include "revseq/metrics.hpp"
#include "revseq/netlist.hpp"
#include "revseq/sim.hpp"

#include <cctype>
#include <cstddef>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace revseq;

/// Parses "m=4,n=7,F=1" into overrides on top of the default cost map.
CostMap parse_cost_spec(const std::string& spec) {
    CostMap costs = default_cost_map();
    if (spec.empty()) {
        return costs;
    }
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
            throw Error("bad cost override '" + item + "' (expected symbol=value)");
        }
        const std::string value = item.substr(eq + 1);
        std::size_t used = 0;
        long long parsed = 0;
        try {
            parsed = std::stoll(value, &used);
        } catch (const std::exception&) {
            throw Error("bad cost override '" + item + "' (expected symbol=value)");
        }
        if (used != value.size()) {
            throw Error("bad cost override '" + item + "' (expected symbol=value)");
        }
        costs[item.substr(0, eq)] = parsed;
    }
    return costs;
}

Netlist load_netlist(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    try {
        return parse_netlist(in);
    } catch (const ParseError& e) {
        throw Error(path + ":" + e.what());
    }
}

void require_valid(const Netlist& n, const std::string& path) {
    const std::vector<Violation> violations = validate(n);
    if (violations.empty()) {
        return;
    }
    std::string msg = path + ": invalid netlist:";
    for (const Violation& v : violations) {
        msg += "\n  " + v.message;
    }
    throw Error(msg);
}

/// "sync3" -> 3 for a given prefix; rejects anything but 1-2 digits.
std::optional<std::size_t> design_width(const std::string& name, std::string_view prefix) {
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) {
        return std::nullopt;
    }
    const std::string digits = name.substr(prefix.size());
    if (digits.size() > 2) {
        return std::nullopt;
    }
    std::size_t width = 0;
    for (const char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return std::nullopt;
        }
        width = width * 10 + static_cast<std::size_t>(c - '0');
    }
    return width;
}

const char* source_name(DesignInventory::Source source) {
    switch (source) {
    case DesignInventory::Source::Structural:
        return "structural";
    case DesignInventory::Source::Declared:
        return "declared";
    case DesignInventory::Source::Extrapolated:
        return "extrapolated";
    }
    return "unknown";
}

std::string inventory_summary(const DesignInventory& inv) {
    std::string out;
    for (const auto& [kind, count] : inv.gate_counts) {
        if (count == 0) {
            continue;
        }
        if (!out.empty()) {
            out += ", ";
        }
        out += std::to_string(count) + " " + kind;
    }
    return out.empty() ? "no gates" : out;
}

int cmd_gates() {
    std::cout << std::left << std::setw(9) << "name" << std::setw(10) << "mnemonic"
              << std::setw(7) << "arity" << std::setw(6) << "cost" << "logic\n";
    for (const GateDef& g : builtin_library().gates()) {
        std::cout << std::setw(9) << g.name() << std::setw(10) << g.mnemonic() << std::setw(7)
                  << g.arity() << std::setw(6) << g.cost_symbol() << g.logic_cost().to_string()
                  << '\n';
    }
    return 0;
}

int cmd_table(const std::string& key) {
    const GateDef* gate = builtin_library().find(key);
    if (gate == nullptr) {
        throw Error("unknown gate '" + key + "'");
    }
    const std::size_t arity = gate->arity();
    for (std::size_t i = 0; i < arity; ++i) {
        std::cout << static_cast<char>('A' + i) << ' ';
    }
    std::cout << ' ';
    for (std::size_t i = 0; i < arity; ++i) {
        std::cout << static_cast<char>('P' + i) << (i + 1 < arity ? " " : "");
    }
    std::cout << '\n';
    for (const TruthRow& row : truth_table(*gate)) {
        for (std::size_t i = 0; i < arity; ++i) {
            std::cout << (row.first.get(i) ? '1' : '0') << ' ';
        }
        std::cout << ' ';
        for (std::size_t i = 0; i < arity; ++i) {
            std::cout << (row.second.get(i) ? '1' : '0') << (i + 1 < arity ? " " : "");
        }
        std::cout << '\n';
    }
    return 0;
}

int cmd_verify(const std::string& path) {
    const Netlist n = load_netlist(path);
    const std::vector<Violation> violations = validate(n);
    if (!violations.empty()) {
        for (const Violation& v : violations) {
            std::cerr << path << ": " << v.message << '\n';
        }
        return 1;
    }
    const BijectionCheck check = verify_bijective(n);
    if (!check.ok) {
        std::cerr << path << ": not bijective: inputs " << check.witness->first.to_string()
                  << " and " << check.witness->second.to_string()
                  << " map to the same output\n";
        return 1;
    }
    std::cout << "ok: " << n.width() << " wires, " << n.stages().size()
              << " stages, bijective\n";
    return 0;
}

int cmd_sim(const std::string& path, const std::string& bits) {
    const Netlist n = load_netlist(path);
    require_valid(n, path);
    std::cout << eval_combinational(n, BitVec::parse(bits)).to_string() << '\n';
    return 0;
}

int cmd_truth(const std::string& path) {
    const Netlist n = load_netlist(path);
    require_valid(n, path);
    const CircuitTruthTable table = circuit_truth_table(n);

    std::string constants;
    for (const Wire& w : n.wires()) {
        if (w.input_role != InputRole::Primary) {
            constants += (constants.empty() ? "" : " ") + w.name + "=" +
                         (w.input_role == InputRole::ConstantOne ? "1" : "0");
        }
    }
    if (!constants.empty()) {
        std::cout << "# constants: " << constants << '\n';
    }
    if (!table.garbage_outputs.empty()) {
        std::cout << "# garbage:";
        for (const std::size_t i : table.garbage_outputs) {
            std::cout << ' ' << n.wires()[i].name;
        }
        std::cout << '\n';
    }

    std::string in_names;
    for (const std::size_t i : table.free_inputs) {
        in_names += (in_names.empty() ? "" : " ") + n.wires()[i].name;
    }
    std::string out_names;
    for (const Wire& w : n.wires()) {
        out_names += (out_names.empty() ? "" : " ") + w.name;
    }
    std::cout << (in_names.empty() ? "-" : in_names) << " -> " << out_names << '\n';
    for (const CircuitRow& row : table.rows) {
        std::cout << (row.inputs.width() == 0 ? "-" : row.inputs.to_string()) << " -> "
                  << row.outputs.to_string() << '\n';
    }
    return 0;
}

int cmd_counter(const std::string& type, std::size_t bits, std::size_t edges,
                const std::string& init_bits, const std::string& trace_path) {
    const SeqCircuit circuit =
        type == "sync" ? build_sync_counter(bits) : build_async_counter(bits);

    BitVec init(bits);
    if (!init_bits.empty()) {
        init = BitVec::parse(init_bits);
        if (init.width() != bits) {
            throw Error("--init has " + std::to_string(init.width()) + " bits, expected " +
                        std::to_string(bits));
        }
    }

    const SimTrace trace = run(circuit, init, edges);
    if (trace_path.empty()) {
        write_trace_csv(std::cout, trace);
    } else {
        std::ofstream out(trace_path);
        if (!out) {
            throw Error("cannot write '" + trace_path + "'");
        }
        write_trace_csv(out, trace);
        std::cerr << "wrote " << trace_path << " (" << trace.states.size() + 1 << " rows)\n";
    }
    return 0;
}

void print_analysis(const DesignInventory& inv, const CostMap& costs,
                    const std::map<std::string, CostExpr>& cost_expansions,
                    const std::map<std::string, LogicCost>& logic_expansions) {
    const CostExpr qc = quantum_cost(inv, cost_expansions);
    std::cout << "inventory: " << source_name(inv.source) << " (" << inventory_summary(inv)
              << ")\n";
    std::cout << "QC = " << qc.to_string() << " = " << eval_cost(qc, costs) << '\n';
    std::cout << "T = " << total_logic_calc(inv, logic_expansions).to_string() << '\n';
}

int cmd_analyze(const std::string& target, const CostMap& costs) {
    std::cout << "design: " << target << '\n';

    if (target == "jk") {
        print_analysis(build_jk().inventory, costs, {}, {});
        return 0;
    }
    const std::optional<std::size_t> sync_width = design_width(target, "sync");
    const std::optional<std::size_t> async_width = design_width(target, "async");
    if (sync_width || async_width) {
        const SeqCircuit circuit =
            sync_width ? build_sync_counter(*sync_width) : build_async_counter(*async_width);
        print_analysis(circuit.gate_inventory(), costs, jk_cost_expansion(),
                       jk_logic_expansion());
        return 0;
    }

    const Netlist n = load_netlist(target);
    require_valid(n, target);
    print_analysis(inventory_of(n, target), costs, {}, {});
    std::cout << "garbage outputs = " << garbage_count(n) << '\n';
    std::cout << "constant inputs = " << constant_input_count(n) << '\n';
    return 0;
}

int cmd_compare(bool csv, const CostMap& costs) {
    const Report report = compare_report(counter_comparison_entries(), costs);
    std::cout << (csv ? report.to_csv() : report.to_text());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"reversible-logic circuit toolkit: gate library, netlist "
                 "verification and simulation, JK flip-flop counters, cost reports"};
    app.require_subcommand(1);

    std::string cost_spec;
    app.add_option("--cost", cost_spec,
                   "cost-map overrides as symbol=value pairs, e.g. m=4,n=7,F=1")
        ->type_name("LIST");

    CLI::App* gates_cmd = app.add_subcommand("gates", "list the gate library");

    CLI::App* table_cmd = app.add_subcommand("table", "print a gate truth table");
    std::string table_gate;
    table_cmd->add_option("gate", table_gate, "gate mnemonic or name")->required();

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "parse, validate and check a netlist for bijectivity");
    std::string verify_path;
    verify_cmd->add_option("file", verify_path, "netlist file")->required();

    CLI::App* sim_cmd = app.add_subcommand("sim", "evaluate a netlist on one input vector");
    std::string sim_path;
    std::string sim_inputs;
    sim_cmd->add_option("file", sim_path, "netlist file")->required();
    sim_cmd->add_option("--inputs", sim_inputs, "input bits, MSB first")->required();

    CLI::App* truth_cmd =
        app.add_subcommand("truth", "print a circuit truth table with constants pinned");
    std::string truth_path;
    truth_cmd->add_option("file", truth_path, "netlist file")->required();

    CLI::App* counter_cmd = app.add_subcommand("counter", "simulate a JK flip-flop counter");
    std::string counter_type;
    std::size_t counter_bits = 3;
    std::size_t counter_edges = 0;
    std::string counter_init;
    std::string counter_trace;
    counter_cmd->add_option("--type", counter_type, "clocking topology")
        ->required()
        ->check(CLI::IsMember({"sync", "async"}));
    counter_cmd->add_option("--bits", counter_bits, "flip-flop count (default 3)")
        ->check(CLI::Range(std::size_t{1}, std::size_t{62}));
    counter_cmd->add_option("--edges", counter_edges, "active clock edges to apply")
        ->required()
        ->check(CLI::Range(std::size_t{0}, std::size_t{1000000}));
    counter_cmd->add_option("--init", counter_init, "initial state bits, MSB first");
    counter_cmd->add_option("--trace", counter_trace, "write the CSV trace to this file");

    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "cost metrics for a design name or netlist file");
    std::string analyze_target;
    analyze_cmd->add_option("target", analyze_target,
                            "jk, sync<N>, async<N>, or a netlist file")
        ->required();

    CLI::App* compare_cmd =
        app.add_subcommand("compare", "counter comparison table against published designs");
    bool compare_csv = false;
    compare_cmd->add_flag("--csv", compare_csv, "emit CSV instead of aligned text");

    for (CLI::App* sub : app.get_subcommands({})) {
        sub->fallthrough();
    }

    CLI11_PARSE(app, argc, argv);

    try {
        const CostMap costs = parse_cost_spec(cost_spec);
        if (gates_cmd->parsed()) {
            return cmd_gates();
        }
        if (table_cmd->parsed()) {
            return cmd_table(table_gate);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(verify_path);
        }
        if (sim_cmd->parsed()) {
            return cmd_sim(sim_path, sim_inputs);
        }
        if (truth_cmd->parsed()) {
            return cmd_truth(truth_path);
        }
        if (counter_cmd->parsed()) {
            return cmd_counter(counter_type, counter_bits, counter_edges, counter_init,
                               counter_trace);
        }
        if (analyze_cmd->parsed()) {
            return cmd_analyze(analyze_target, costs);
        }
        if (compare_cmd->parsed()) {
            return cmd_compare(compare_csv, costs);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
