#pragma once

/// @file helpers.hpp
/// @brief Seeded generators for property-style tests.

#include "revseq/gates.hpp"
#include "revseq/netlist.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace revseq::testing {

/// Gates from the library whose arity fits on `wires` lines.
inline std::vector<const GateDef*> gates_fitting(std::size_t wires) {
    std::vector<const GateDef*> out;
    for (const GateDef& g : builtin_library().gates()) {
        if (g.arity() <= wires) {
            out.push_back(&g);
        }
    }
    return out;
}

/// Appends `stages` random library-gate stages over the netlist's wires.
inline void add_random_stages(Netlist& n, std::mt19937& rng, std::size_t stages) {
    const auto candidates = gates_fitting(n.width());
    if (candidates.empty()) {
        return;
    }
    std::vector<std::size_t> order(n.width());
    std::iota(order.begin(), order.end(), 0);
    std::uniform_int_distribution<std::size_t> pick_gate(0, candidates.size() - 1);
    for (std::size_t s = 0; s < stages; ++s) {
        const GateDef* g = candidates[pick_gate(rng)];
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<std::string> bound;
        for (std::size_t i = 0; i < g->arity(); ++i) {
            bound.push_back(n.wires()[order[i]].name);
        }
        n.add_stage(GateInstance(g->mnemonic(), std::move(bound)));
    }
}

/// Random well-formed netlist: 1..max_wires wires named w0.., random
/// boundary roles, sometimes labels, 0..max_stages library stages.
inline Netlist random_netlist(std::mt19937& rng, std::size_t max_wires = 6,
                              std::size_t max_stages = 12) {
    std::uniform_int_distribution<std::size_t> wire_count(1, max_wires);
    std::uniform_int_distribution<int> percent(0, 99);

    Netlist n;
    const std::size_t wires = wire_count(rng);
    for (std::size_t i = 0; i < wires; ++i) {
        Wire w;
        w.name = "w" + std::to_string(i);
        const int in_roll = percent(rng);
        w.input_role = in_roll < 60 ? InputRole::Primary
                       : in_roll < 80 ? InputRole::ConstantZero
                                      : InputRole::ConstantOne;
        w.output_role = percent(rng) < 70 ? OutputRole::Primary : OutputRole::Garbage;
        n.add_wire(std::move(w));
    }
    if (percent(rng) < 25) {
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < wires; ++i) {
            labels.push_back("in" + std::to_string(i));
        }
        n.set_input_labels(std::move(labels));
    }
    if (percent(rng) < 25) {
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < wires; ++i) {
            labels.push_back("out" + std::to_string(i));
        }
        n.set_output_labels(std::move(labels));
    }

    std::uniform_int_distribution<std::size_t> stage_count(0, max_stages);
    add_random_stages(n, rng, stage_count(rng));
    return n;
}

} // namespace revseq::testing
