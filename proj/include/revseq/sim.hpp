#pragma once

/// @file sim.hpp
/// @brief Netlist evaluation, circuit truth tables, circuit-level
///        bijectivity, and clocked JK flip-flop networks.

#include "revseq/bitvec.hpp"
#include "revseq/errors.hpp"
#include "revseq/gates.hpp"
#include "revseq/metrics.hpp"
#include "revseq/netlist.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

namespace revseq {

/// Applies the cascade to a full wire vector (one bit per wire, in
/// declaration order). Wires with a constant role must carry their
/// declared value: that is enforced, not assumed. Throws WidthError on
/// width mismatch and ConstantError on a violated constant.
[[nodiscard]] BitVec eval_combinational(const Netlist& n, const BitVec& inputs);

/// One truth-table row: free-input bits (ascending wire order) and the
/// resulting full output vector.
struct CircuitRow {
    BitVec inputs;
    BitVec outputs;

    bool operator==(const CircuitRow&) const = default;
};

/// Circuit truth table with constant-role wires pinned to their
/// constants; only the free inputs enumerate.
struct CircuitTruthTable {
    std::vector<std::size_t> free_inputs;     // wire indices that enumerate
    std::vector<std::size_t> garbage_outputs; // wire indices declared garbage
    std::vector<CircuitRow> rows;             // 2^|free_inputs| rows, ascending
};

[[nodiscard]] CircuitTruthTable circuit_truth_table(const Netlist& n,
                                                    std::size_t max_width = kEnumerationCap);

/// Exhaustively checks the full wire-space map for one-to-oneness,
/// ignoring roles (constants are not pinned).
[[nodiscard]] BijectionCheck verify_bijective(const Netlist& n,
                                              std::size_t max_width = kEnumerationCap);

/// JK characteristic equation: next Q = JQ' xor K'Q
/// (hold / reset / set / toggle).
[[nodiscard]] bool jk_next_state(bool j, bool k, bool q);

/// Clock distribution of a flip-flop network.
enum class Topology { Synchronous, Ripple };

/// A clocked network of behavioral JK flip-flops.
///
/// Flip-flop i holds state bit Q_i with bit 0 the LSB. Excitation
/// functions receive the state as an integer whose bit i is Q_i. The
/// structural gate counts ride along as an inventory for the metrics.
class SeqCircuit {
public:
    struct Excitation {
        std::function<bool(std::uint64_t)> j;
        std::function<bool(std::uint64_t)> k;
    };

    SeqCircuit(Topology topology, std::vector<Excitation> excitations,
               DesignInventory inventory);

    [[nodiscard]] std::size_t bits() const { return excitations_.size(); }
    [[nodiscard]] Topology topology() const { return topology_; }
    [[nodiscard]] const std::vector<Excitation>& excitations() const { return excitations_; }
    [[nodiscard]] const DesignInventory& gate_inventory() const { return inventory_; }

private:
    Topology topology_;
    std::vector<Excitation> excitations_;
    DesignInventory inventory_;
};

/// Per-edge state history; states[0] is the initial state and
/// states.size() == edges + 1.
struct SimTrace {
    std::vector<BitVec> states;
    std::size_t edges = 0;
};

/// One active clock edge.
///
/// Synchronous: every excitation is evaluated on the pre-edge state,
/// then all flip-flops update at once. Ripple: flip-flop 0 is clocked by
/// the edge, and flip-flop i is clocked when flip-flop i-1 falls 1 -> 0,
/// repeated to a fixed point within the edge (zero-delay model); each
/// flip-flop is clocked at most once per edge.
[[nodiscard]] BitVec step(const SeqCircuit& c, const BitVec& state);

/// Applies `edges` active clock edges, recording every state.
[[nodiscard]] SimTrace run(const SeqCircuit& c, const BitVec& initial, std::size_t edges);

/// CSV export with header "edge,q<w-1>,...,q1,q0" and one row per
/// recorded state, including row 0 for the initial state.
void write_trace_csv(std::ostream& out, const SimTrace& trace);

} // namespace revseq
