/// @file sim.cpp
/// @brief Combinational evaluation and clocked stepping.

#include "revseq/sim.hpp"

#include <ostream>
#include <utility>

namespace revseq {

namespace {

/// Stage list with gate pointers and wire indices resolved, so that
/// enumeration loops do not re-do name lookups per row.
struct CompiledStage {
    const GateDef* gate;
    std::vector<std::size_t> lines;
};

std::vector<CompiledStage> compile(const Netlist& n) {
    std::vector<CompiledStage> stages;
    stages.reserve(n.stages().size());
    for (const GateInstance& stage : n.stages()) {
        const GateDef* gate = builtin_library().find(stage.mnemonic);
        if (gate == nullptr) {
            throw Error("unknown gate '" + stage.mnemonic + "' (validate the netlist first)");
        }
        if (stage.wires.size() != gate->arity()) {
            throw WidthError("gate '" + stage.mnemonic + "' expects " +
                             std::to_string(gate->arity()) + " wires, got " +
                             std::to_string(stage.wires.size()));
        }
        CompiledStage cs{gate, {}};
        cs.lines.reserve(stage.wires.size());
        for (const std::string& name : stage.wires) {
            auto idx = n.wire_index(name);
            if (!idx) {
                throw Error("undeclared wire '" + name + "' (validate the netlist first)");
            }
            cs.lines.push_back(*idx);
        }
        stages.push_back(std::move(cs));
    }
    return stages;
}

/// In-place cascade application on a full wire vector, roles ignored.
void apply_stages(const std::vector<CompiledStage>& stages, BitVec& values) {
    for (const CompiledStage& stage : stages) {
        BitVec gathered(stage.lines.size());
        for (std::size_t i = 0; i < stage.lines.size(); ++i) {
            gathered.set(i, values.get(stage.lines[i]));
        }
        const BitVec result = eval_gate(*stage.gate, gathered);
        for (std::size_t i = 0; i < stage.lines.size(); ++i) {
            values.set(stage.lines[i], result.get(i));
        }
    }
}

void check_constants(const Netlist& n, const BitVec& inputs) {
    for (std::size_t i = 0; i < n.width(); ++i) {
        const Wire& w = n.wires()[i];
        if (w.input_role == InputRole::ConstantZero && inputs.get(i)) {
            throw ConstantError("wire '" + w.name + "' is constant 0 but the input carries 1");
        }
        if (w.input_role == InputRole::ConstantOne && !inputs.get(i)) {
            throw ConstantError("wire '" + w.name + "' is constant 1 but the input carries 0");
        }
    }
}

} // namespace

BitVec eval_combinational(const Netlist& n, const BitVec& inputs) {
    if (inputs.width() != n.width()) {
        throw WidthError("netlist has " + std::to_string(n.width()) + " wires, input has " +
                         std::to_string(inputs.width()));
    }
    check_constants(n, inputs);
    BitVec values = inputs;
    apply_stages(compile(n), values);
    return values;
}

CircuitTruthTable circuit_truth_table(const Netlist& n, std::size_t max_width) {
    if (n.width() > max_width) {
        throw EnumerationLimitError("truth table over " + std::to_string(n.width()) +
                                    " wires exceeds the cap of " + std::to_string(max_width));
    }
    CircuitTruthTable table;
    BitVec base(n.width());
    for (std::size_t i = 0; i < n.width(); ++i) {
        switch (n.wires()[i].input_role) {
        case InputRole::Primary:
            table.free_inputs.push_back(i);
            break;
        case InputRole::ConstantZero:
            base.set(i, false);
            break;
        case InputRole::ConstantOne:
            base.set(i, true);
            break;
        }
        if (n.wires()[i].output_role == OutputRole::Garbage) {
            table.garbage_outputs.push_back(i);
        }
    }

    const std::vector<CompiledStage> stages = compile(n);
    const std::size_t free_count = table.free_inputs.size();
    const std::uint64_t rows = std::uint64_t{1} << free_count;
    table.rows.reserve(rows);
    for (std::uint64_t row = 0; row < rows; ++row) {
        const BitVec free_bits(free_count, row);
        BitVec values = base;
        for (std::size_t i = 0; i < free_count; ++i) {
            values.set(table.free_inputs[i], free_bits.get(i));
        }
        apply_stages(stages, values);
        table.rows.push_back(CircuitRow{free_bits, std::move(values)});
    }
    return table;
}

BijectionCheck verify_bijective(const Netlist& n, std::size_t max_width) {
    const std::vector<CompiledStage> stages = compile(n);
    return is_bijection(
        [&stages](const BitVec& in) {
            BitVec values = in;
            apply_stages(stages, values);
            return values;
        },
        n.width(), max_width);
}

bool jk_next_state(bool j, bool k, bool q) { return (j && !q) ^ (!k && q); }

SeqCircuit::SeqCircuit(Topology topology, std::vector<Excitation> excitations,
                       DesignInventory inventory)
    : topology_(topology), excitations_(std::move(excitations)), inventory_(std::move(inventory)) {
    for (const Excitation& e : excitations_) {
        if (!e.j || !e.k) {
            throw Error("flip-flop excitation functions must be set");
        }
    }
}

BitVec step(const SeqCircuit& c, const BitVec& state) {
    const std::size_t w = c.bits();
    if (state.width() != w) {
        throw WidthError("circuit has " + std::to_string(w) + " flip-flops, state has " +
                         std::to_string(state.width()) + " bits");
    }
    const std::uint64_t pre = state.to_index(); // bit i = Q_i
    std::uint64_t cur = pre;
    auto q_bit = [](std::uint64_t v, std::size_t i) { return ((v >> i) & 1u) != 0; };
    auto update = [&](std::size_t i, std::uint64_t eval_state) {
        const bool j = c.excitations()[i].j(eval_state);
        const bool k = c.excitations()[i].k(eval_state);
        const bool next = jk_next_state(j, k, q_bit(cur, i));
        if (next != q_bit(cur, i)) {
            cur ^= std::uint64_t{1} << i;
        }
    };

    if (c.topology() == Topology::Synchronous) {
        // All excitations see the pre-edge state; updates land at once.
        std::uint64_t next = pre;
        for (std::size_t i = 0; i < w; ++i) {
            const bool j = c.excitations()[i].j(pre);
            const bool k = c.excitations()[i].k(pre);
            const bool nq = jk_next_state(j, k, q_bit(pre, i));
            if (nq != q_bit(pre, i)) {
                next ^= std::uint64_t{1} << i;
            }
        }
        return BitVec(w, next);
    }

    // Ripple: stage 0 is clocked by the edge; stage i is clocked when
    // stage i-1 falls 1 -> 0. Settle to a fixed point within the edge.
    std::vector<bool> clocked(w, false);
    if (w > 0) {
        update(0, cur);
        clocked[0] = true;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 1; i < w; ++i) {
            if (!clocked[i] && clocked[i - 1] && q_bit(pre, i - 1) && !q_bit(cur, i - 1)) {
                update(i, cur);
                clocked[i] = true;
                changed = true;
            }
        }
    }
    return BitVec(w, cur);
}

SimTrace run(const SeqCircuit& c, const BitVec& initial, std::size_t edges) {
    SimTrace trace;
    trace.edges = edges;
    trace.states.reserve(edges + 1);
    trace.states.push_back(initial);
    for (std::size_t i = 0; i < edges; ++i) {
        trace.states.push_back(step(c, trace.states.back()));
    }
    return trace;
}

void write_trace_csv(std::ostream& out, const SimTrace& trace) {
    const std::size_t w = trace.states.empty() ? 0 : trace.states.front().width();
    out << "edge";
    for (std::size_t i = 0; i < w; ++i) {
        out << ",q" << (w - 1 - i);
    }
    out << '\n';
    for (std::size_t k = 0; k < trace.states.size(); ++k) {
        out << k;
        for (std::size_t i = 0; i < w; ++i) {
            out << ',' << (trace.states[k].get(i) ? '1' : '0');
        }
        out << '\n';
    }
}

} // namespace revseq
