/// @file designs.cpp
/// @brief Flip-flop and counter construction.

#include "revseq/designs.hpp"

#include <stdexcept>

namespace revseq {

namespace {

DesignInventory declared(std::string name, std::map<std::string, int> counts,
                         std::string citation) {
    DesignInventory inv;
    inv.name = std::move(name);
    inv.gate_counts = std::move(counts);
    inv.source = DesignInventory::Source::Declared;
    inv.citation = std::move(citation);
    return inv;
}

DesignInventory extrapolated(std::string name, std::map<std::string, int> counts) {
    DesignInventory inv;
    inv.name = std::move(name);
    inv.gate_counts = std::move(counts);
    inv.source = DesignInventory::Source::Extrapolated;
    inv.citation = "extrapolated from the declared 3-bit inventory";
    return inv;
}

/// J_i = K_i = AND of Q_0..Q_{i-1}; the empty product is 1.
bool and_of_lower_bits(std::uint64_t state, std::size_t i) {
    const std::uint64_t mask = (std::uint64_t{1} << i) - 1;
    return (state & mask) == mask;
}

} // namespace

JkDesign build_jk() {
    JkDesign design;
    design.behavior = [](bool j, bool k, bool q) { return jk_next_state(j, k, q); };
    design.inventory = declared("jk", {{"mux", 4}, {"ng", 2}, {"f2", 4}},
                                "declared gate counts of the reversible JK flip-flop");
    return design;
}

SeqCircuit build_sync_counter(std::size_t bits) {
    if (bits == 0) {
        throw std::invalid_argument("a counter needs at least one flip-flop");
    }
    std::vector<SeqCircuit::Excitation> excitations;
    excitations.reserve(bits);
    for (std::size_t i = 0; i < bits; ++i) {
        auto fn = [i](std::uint64_t state) { return and_of_lower_bits(state, i); };
        excitations.push_back({fn, fn});
    }
    DesignInventory inv =
        bits == 3 ? declared("sync3", {{"JK", 3}, {"mux", 1}, {"f2", 3}},
                             "declared gate counts of the 3-bit synchronous counter")
                  : extrapolated("sync" + std::to_string(bits),
                                 {{"JK", static_cast<int>(bits)},
                                  {"f2", static_cast<int>(bits)},
                                  {"mux", bits > 2 ? static_cast<int>(bits) - 2 : 0}});
    return SeqCircuit(Topology::Synchronous, std::move(excitations), std::move(inv));
}

SeqCircuit build_async_counter(std::size_t bits) {
    if (bits == 0) {
        throw std::invalid_argument("a counter needs at least one flip-flop");
    }
    std::vector<SeqCircuit::Excitation> excitations;
    excitations.reserve(bits);
    for (std::size_t i = 0; i < bits; ++i) {
        auto one = [](std::uint64_t) { return true; };
        excitations.push_back({one, one});
    }
    DesignInventory inv =
        bits == 3 ? declared("async3", {{"JK", 3}, {"f2", 1}},
                             "declared gate counts of the 3-bit asynchronous counter")
                  : extrapolated("async" + std::to_string(bits),
                                 {{"JK", static_cast<int>(bits)}, {"f2", 1}});
    return SeqCircuit(Topology::Ripple, std::move(excitations), std::move(inv));
}

Netlist jk_excitation_netlist() {
    Netlist n;
    n.add_wire(Wire{"q", InputRole::Primary, OutputRole::Garbage});
    n.add_wire(Wire{"k", InputRole::Primary, OutputRole::Garbage});
    n.add_wire(Wire{"j", InputRole::Primary, OutputRole::Primary});
    n.add_stage(GateInstance("not", {"k"}));          // k now carries K'
    n.add_stage(GateInstance("mux", {"q", "k", "j"})); // R = Q'J xor QK' on j
    return n;
}

std::map<std::string, CostExpr> jk_cost_expansion() {
    return {{"JK", CostExpr::symbol("m", 4) + CostExpr::symbol("n", 2) +
                       CostExpr::symbol("F", 4)}};
}

std::map<std::string, LogicCost> jk_logic_expansion() {
    return {{"JK", LogicCost{20, 12, 10}}};
}

std::vector<ReportEntry> counter_comparison_entries() {
    std::vector<ReportEntry> entries;

    const auto cost_expansion = jk_cost_expansion();
    const auto logic_expansion = jk_logic_expansion();

    const SeqCircuit sync = build_sync_counter(3);
    entries.push_back(ReportEntry{"proposed synchronous counter",
                                  quantum_cost(sync.gate_inventory(), cost_expansion),
                                  total_logic_calc(sync.gate_inventory(), logic_expansion),
                                  false});

    const SeqCircuit async = build_async_counter(3);
    entries.push_back(ReportEntry{"proposed asynchronous counter",
                                  quantum_cost(async.gate_inventory(), cost_expansion),
                                  total_logic_calc(async.gate_inventory(), logic_expansion),
                                  false});

    // Published comparison rows; kept as opaque constants.
    entries.push_back(
        ReportEntry{"existing synchronous counter", 122LL, LogicCost{53, 64, 45}, true});
    entries.push_back(
        ReportEntry{"existing asynchronous counter", 115LL, LogicCost{49, 60, 42}, true});
    return entries;
}

} // namespace revseq
