#pragma once

/// @file netlist.hpp
/// @brief Combinational reversible circuits as gate cascades over named
///        wires: data model, text format, validation, concatenation.

#include "revseq/errors.hpp"
#include "revseq/gates.hpp"

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace revseq {

/// How a wire enters the circuit.
enum class InputRole { Primary, ConstantZero, ConstantOne };

/// How a wire leaves the circuit.
enum class OutputRole { Primary, Garbage };

/// A named circuit line. Every wire runs through the whole cascade; the
/// roles record how its two ends are used.
struct Wire {
    std::string name;
    InputRole input_role = InputRole::Primary;
    OutputRole output_role = OutputRole::Primary;

    bool operator==(const Wire&) const = default;
};

/// One cascade stage: a library gate applied in place to its bound wires.
struct GateInstance {
    GateInstance(std::string_view gate_mnemonic, std::vector<std::string> wire_names);

    std::string mnemonic; // normalized to lowercase
    std::vector<std::string> wires;

    bool operator==(const GateInstance&) const = default;
};

/// A cascade of gate instances over a fixed, ordered wire set.
///
/// Gates permute values in place on their bound wires, so fan-out and
/// feedback are not expressible; copying a value takes an explicit
/// Feynman stage with a constant-zero wire. The model itself is
/// permissive — run validate() before evaluating anything built by hand.
class Netlist {
public:
    Netlist() = default;

    void add_wire(Wire wire) { wires_.push_back(std::move(wire)); }
    void add_stage(GateInstance stage) { stages_.push_back(std::move(stage)); }

    [[nodiscard]] std::size_t width() const { return wires_.size(); }
    [[nodiscard]] const std::vector<Wire>& wires() const { return wires_; }
    [[nodiscard]] const std::vector<GateInstance>& stages() const { return stages_; }

    /// Index of the first wire with this name, if any.
    [[nodiscard]] std::optional<std::size_t> wire_index(std::string_view name) const;

    /// Optional display labels carried by the .inputs / .outputs directives.
    void set_input_labels(std::vector<std::string> labels) { input_labels_ = std::move(labels); }
    void set_output_labels(std::vector<std::string> labels) { output_labels_ = std::move(labels); }
    [[nodiscard]] const std::vector<std::string>& input_labels() const { return input_labels_; }
    [[nodiscard]] const std::vector<std::string>& output_labels() const { return output_labels_; }

    bool operator==(const Netlist&) const = default;

private:
    std::vector<Wire> wires_;
    std::vector<GateInstance> stages_;
    std::vector<std::string> input_labels_;
    std::vector<std::string> output_labels_;
};

enum class ViolationKind {
    DuplicateWireName,
    UnknownGate,
    ArityMismatch,
    UndeclaredWire,
    DuplicateBinding,
    LabelCountMismatch,
};

struct Violation {
    ViolationKind kind;
    std::string message;
};

/// Structural checks; an empty result means the netlist is well formed.
[[nodiscard]] std::vector<Violation> validate(const Netlist& n);

/// Cascades `a` then `b`. `wire_map` renames b's wires before merging;
/// wires with equal names after renaming become the same line (input
/// role taken from `a`, output role from `b`), new names are appended in
/// order of first occurrence. Throws ConcatError if the map is not
/// injective, names unknown wires, or renaming collides.
[[nodiscard]] Netlist concat(const Netlist& a, const Netlist& b,
                             const std::map<std::string, std::string>& wire_map = {});

/// Parses the cascade text format (see serialize_netlist for the shape);
/// throws ParseError carrying a 1-based line and column on failure.
[[nodiscard]] Netlist parse_netlist(std::istream& in);
[[nodiscard]] Netlist parse_netlist(std::string_view text);

/// Serializes so that parse_netlist(serialize_netlist(n)) == n.
///
/// Format, one directive per line, '#' starts a comment line:
///
///     .variables a b c
///     .inputs A B C          (optional labels)
///     .outputs P Q R         (optional labels)
///     .constants --0         (per wire: '-' free, '0'/'1' constant)
///     .garbage --1           (per wire: '-' primary, '1' garbage)
///     .begin
///     mux a b c
///     .end
[[nodiscard]] std::string serialize_netlist(const Netlist& n);

} // namespace revseq
