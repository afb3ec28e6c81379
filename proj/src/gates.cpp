/// @file gates.cpp
/// @brief Built-in gate definitions and exhaustive bijection checking.

#include "revseq/gates.hpp"

#include <algorithm>
#include <cctype>

namespace revseq {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

// Defining expressions for the built-in gates. Line 0 is A.

BitVec not_gate(const BitVec& in) {
    BitVec out(1);
    out.set(0, !in.get(0)); // P = A'
    return out;
}

BitVec feynman_gate(const BitVec& in) {
    const bool a = in.get(0);
    const bool b = in.get(1);
    BitVec out(2);
    out.set(0, a);     // P = A
    out.set(1, a ^ b); // Q = A xor B
    return out;
}

BitVec fredkin_gate(const BitVec& in) {
    const bool a = in.get(0);
    const bool b = in.get(1);
    const bool c = in.get(2);
    BitVec out(3);
    out.set(0, a);                     // P = A
    out.set(1, (!a && b) ^ (a && c)); // Q = A'B xor AC
    out.set(2, (!a && c) ^ (a && b)); // R = A'C xor AB
    return out;
}

BitVec mux_gate(const BitVec& in) {
    const bool a = in.get(0);
    const bool b = in.get(1);
    const bool c = in.get(2);
    BitVec out(3);
    out.set(0, a);                     // P = A
    out.set(1, a ^ b ^ c);             // Q = A xor B xor C
    out.set(2, (!a && c) ^ (a && b)); // R = A'C xor AB
    return out;
}

BitVec new_gate(const BitVec& in) {
    const bool a = in.get(0);
    const bool b = in.get(1);
    const bool c = in.get(2);
    BitVec out(3);
    out.set(0, a);                      // P = A
    out.set(1, (a && b) ^ c);           // Q = AB xor C
    out.set(2, (!a && !c) ^ (!b));      // R = A'C' xor B'
    return out;
}

} // namespace

std::string LogicCost::to_string() const {
    return std::to_string(xor_count) + "α + " + std::to_string(and_count) + "β + " +
           std::to_string(not_count) + "δ";
}

GateDef::GateDef(std::string name, std::string mnemonic, std::size_t arity,
                 const std::function<BitVec(const BitVec&)>& semantics, std::string cost_symbol,
                 LogicCost logic_cost)
    : name_(std::move(name)),
      mnemonic_(lower(mnemonic)),
      arity_(arity),
      cost_symbol_(std::move(cost_symbol)),
      logic_cost_(logic_cost) {
    if (arity_ > kEnumerationCap) {
        throw EnumerationLimitError("gate arity " + std::to_string(arity_) +
                                    " exceeds the enumeration cap");
    }
    const std::uint64_t rows = std::uint64_t{1} << arity_;
    table_.reserve(rows);
    for (std::uint64_t i = 0; i < rows; ++i) {
        const BitVec out = semantics(BitVec(arity_, i));
        if (out.width() != arity_) {
            throw WidthError("gate '" + name_ + "': semantics returned width " +
                             std::to_string(out.width()) + ", expected " +
                             std::to_string(arity_));
        }
        table_.push_back(static_cast<std::uint32_t>(out.to_index()));
    }
}

std::function<BitVec(const BitVec&)> GateDef::semantics() const {
    return [this](const BitVec& in) { return eval_gate(*this, in); };
}

GateLibrary::GateLibrary() {
    gates_.emplace_back("NOT", "not", 1, not_gate, "I", LogicCost{0, 0, 1});
    gates_.emplace_back("FEYNMAN", "f2", 2, feynman_gate, "F", LogicCost{1, 0, 0});
    gates_.emplace_back("FREDKIN", "f3", 3, fredkin_gate, "Fr", LogicCost{2, 4, 2});
    gates_.emplace_back("MUX", "mux", 3, mux_gate, "m", LogicCost{3, 2, 1});
    gates_.emplace_back("NEW", "ng", 3, new_gate, "n", LogicCost{2, 2, 3});
}

const GateDef* GateLibrary::find(std::string_view mnemonic_or_name) const {
    const std::string key = lower(mnemonic_or_name);
    for (const GateDef& g : gates_) {
        if (g.mnemonic() == key || lower(g.name()) == key) {
            return &g;
        }
    }
    return nullptr;
}

const GateLibrary& builtin_library() {
    static const GateLibrary library;
    return library;
}

BitVec eval_gate(const GateDef& gate, const BitVec& inputs) {
    if (inputs.width() != gate.arity()) {
        throw WidthError("gate '" + gate.name() + "' expects " + std::to_string(gate.arity()) +
                         " lines, got " + std::to_string(inputs.width()));
    }
    return BitVec(gate.arity(), gate.table()[inputs.to_index()]);
}

std::vector<TruthRow> truth_table(const GateDef& gate, std::size_t max_width) {
    if (gate.arity() > max_width) {
        throw EnumerationLimitError("truth table of arity " + std::to_string(gate.arity()) +
                                    " exceeds the cap of " + std::to_string(max_width));
    }
    std::vector<TruthRow> rows;
    const std::uint64_t count = std::uint64_t{1} << gate.arity();
    rows.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        rows.emplace_back(BitVec(gate.arity(), i), BitVec(gate.arity(), gate.table()[i]));
    }
    return rows;
}

BijectionCheck is_bijection(const std::function<BitVec(const BitVec&)>& f, std::size_t width,
                            std::size_t max_width) {
    if (width > max_width || width > 63) {
        throw EnumerationLimitError("bijection check on width " + std::to_string(width) +
                                    " exceeds the cap of " + std::to_string(max_width));
    }
    const std::uint64_t count = std::uint64_t{1} << width;
    std::vector<std::int64_t> first_preimage(count, -1);
    for (std::uint64_t i = 0; i < count; ++i) {
        const BitVec out = f(BitVec(width, i));
        if (out.width() != width) {
            throw WidthError("bijection check: map returned width " +
                             std::to_string(out.width()) + ", expected " + std::to_string(width));
        }
        const std::uint64_t idx = out.to_index();
        if (first_preimage[idx] >= 0) {
            return {false,
                    std::make_pair(BitVec(width, static_cast<std::uint64_t>(first_preimage[idx])),
                                   BitVec(width, i))};
        }
        first_preimage[idx] = static_cast<std::int64_t>(i);
    }
    return {true, std::nullopt};
}

} // namespace revseq
