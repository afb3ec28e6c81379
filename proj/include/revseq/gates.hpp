#pragma once

/// @file gates.hpp
/// @brief Built-in reversible gate library: exact bit-vector bijections
///        with quantum-cost symbols and logic-operation counts attached.

#include "revseq/bitvec.hpp"
#include "revseq/errors.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace revseq {

/// Width cap for exhaustive enumeration (2^20 rows).
inline constexpr std::size_t kEnumerationCap = 20;

/// Counts of two-input XOR (α), two-input AND (β) and NOT (δ) operations
/// in a circuit's output expressions. Adds componentwise.
struct LogicCost {
    int xor_count = 0;
    int and_count = 0;
    int not_count = 0;

    LogicCost& operator+=(const LogicCost& other) {
        xor_count += other.xor_count;
        and_count += other.and_count;
        not_count += other.not_count;
        return *this;
    }

    friend LogicCost operator+(LogicCost a, const LogicCost& b) { return a += b; }

    friend LogicCost operator*(int count, const LogicCost& c) {
        return LogicCost{count * c.xor_count, count * c.and_count, count * c.not_count};
    }

    bool operator==(const LogicCost&) const = default;

    /// Formats as "20α + 12β + 10δ".
    [[nodiscard]] std::string to_string() const;
};

/// A reversible gate: a named bijection on arity-width bit-vectors.
///
/// The defining expressions are evaluated once at construction into a
/// permutation table over the 2^arity input rows; evaluation is a table
/// lookup from then on.
class GateDef {
public:
    GateDef(std::string name, std::string mnemonic, std::size_t arity,
            const std::function<BitVec(const BitVec&)>& semantics, std::string cost_symbol,
            LogicCost logic_cost);

    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] const std::string& mnemonic() const { return mnemonic_; }
    [[nodiscard]] std::size_t arity() const { return arity_; }
    [[nodiscard]] const std::string& cost_symbol() const { return cost_symbol_; }
    [[nodiscard]] const LogicCost& logic_cost() const { return logic_cost_; }

    /// Permutation table: entry i is the output row index for input row i.
    [[nodiscard]] const std::vector<std::uint32_t>& table() const { return table_; }

    /// The gate's map as a callable, for bijection checking.
    [[nodiscard]] std::function<BitVec(const BitVec&)> semantics() const;

private:
    std::string name_;
    std::string mnemonic_;
    std::size_t arity_;
    std::vector<std::uint32_t> table_;
    std::string cost_symbol_;
    LogicCost logic_cost_;
};

/// The built-in gate set. Immutable once constructed; lookups are
/// safe for concurrent use.
class GateLibrary {
public:
    [[nodiscard]] const std::vector<GateDef>& gates() const { return gates_; }

    /// Case-insensitive lookup by mnemonic ("f2") or name ("FEYNMAN");
    /// nullptr when unknown.
    [[nodiscard]] const GateDef* find(std::string_view mnemonic_or_name) const;

private:
    friend const GateLibrary& builtin_library();
    GateLibrary();
    std::vector<GateDef> gates_;
};

/// NOT, FEYNMAN, FREDKIN, MUX and NEW with their cost metadata.
[[nodiscard]] const GateLibrary& builtin_library();

/// Evaluates `gate` on `inputs`; throws WidthError on width mismatch.
[[nodiscard]] BitVec eval_gate(const GateDef& gate, const BitVec& inputs);

/// One truth-table row: an input vector and the output it maps to.
using TruthRow = std::pair<BitVec, BitVec>;

/// All 2^arity rows in ascending binary input order.
[[nodiscard]] std::vector<TruthRow> truth_table(const GateDef& gate,
                                                std::size_t max_width = kEnumerationCap);

/// Result of an exhaustive one-to-one check. When the map is not a
/// bijection, `witness` holds two distinct inputs with equal outputs.
struct BijectionCheck {
    bool ok = false;
    std::optional<std::pair<BitVec, BitVec>> witness;

    explicit operator bool() const { return ok; }
};

/// Exhaustively checks that `f` is one-to-one on width-wide bit-vectors.
/// Throws EnumerationLimitError when width exceeds `max_width`.
[[nodiscard]] BijectionCheck is_bijection(const std::function<BitVec(const BitVec&)>& f,
                                          std::size_t width,
                                          std::size_t max_width = kEnumerationCap);

} // namespace revseq
