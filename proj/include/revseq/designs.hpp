#pragma once

/// @file designs.hpp
/// @brief Builders for the reversible JK flip-flop and the 3-bit
///        synchronous/asynchronous counters, with their declared gate
///        inventories and the published comparison constants.

#include "revseq/metrics.hpp"
#include "revseq/netlist.hpp"
#include "revseq/sim.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace revseq {

/// Behavioral JK flip-flop paired with the declared gate counts of its
/// reversible realization: 4 MUX, 2 NEW, 4 Feynman.
struct JkDesign {
    std::function<bool(bool j, bool k, bool q)> behavior;
    DesignInventory inventory;
};

[[nodiscard]] JkDesign build_jk();

/// Synchronous up-counter: J_i = K_i = Q_0 · ... · Q_{i-1} with
/// J_0 = K_0 = 1. The 3-bit inventory {JK:3, mux:1, f2:3} is declared;
/// other widths carry an extrapolated inventory
/// ({JK:N, f2:N, mux:max(N-2,0)}). Throws std::invalid_argument when
/// bits is 0.
[[nodiscard]] SeqCircuit build_sync_counter(std::size_t bits = 3);

/// Ripple up-counter: every flip-flop in toggle configuration (J = K = 1
/// fed by constants), stage i clocked by stage i-1 falling. The 3-bit
/// inventory {JK:3, f2:1} is declared; other widths are extrapolated
/// ({JK:N, f2:1}).
[[nodiscard]] SeqCircuit build_async_counter(std::size_t bits = 3);

/// Structural fragment showing a single MUX realizing the JK
/// characteristic function: bound as A=Q, B=K', C=J its R line equals
/// jk_next_state(J, K, Q) for all eight inputs, since R = Q'J xor QK'.
/// K' is formed by an explicit NOT stage so the netlist stays closed
/// over library gates. The P and Q outputs are garbage.
///
/// Wire order: q, k, j. Feed raw (Q, K, J); read the next state on j.
[[nodiscard]] Netlist jk_excitation_netlist();

/// Expansion of the JK sub-design symbol for quantum_cost: {JK: 4m+2n+4F}.
[[nodiscard]] std::map<std::string, CostExpr> jk_cost_expansion();

/// Expansion of the JK sub-design symbol for total_logic_calc:
/// {JK: 20 XOR, 12 AND, 10 NOT}.
[[nodiscard]] std::map<std::string, LogicCost> jk_logic_expansion();

/// Comparison-table entries: the two computed 3-bit counter designs plus
/// the published numbers they are measured against.
[[nodiscard]] std::vector<ReportEntry> counter_comparison_entries();

} // namespace revseq
