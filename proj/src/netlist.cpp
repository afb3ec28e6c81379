/// @file netlist.cpp
/// @brief Netlist model, structural validation and concatenation.

#include "revseq/netlist.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace revseq {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

} // namespace

GateInstance::GateInstance(std::string_view gate_mnemonic, std::vector<std::string> wire_names)
    : mnemonic(lower(gate_mnemonic)), wires(std::move(wire_names)) {}

std::optional<std::size_t> Netlist::wire_index(std::string_view name) const {
    for (std::size_t i = 0; i < wires_.size(); ++i) {
        if (wires_[i].name == name) {
            return i;
        }
    }
    return std::nullopt;
}

std::vector<Violation> validate(const Netlist& n) {
    std::vector<Violation> out;

    std::unordered_set<std::string> seen;
    for (const Wire& w : n.wires()) {
        if (!seen.insert(w.name).second) {
            out.push_back({ViolationKind::DuplicateWireName,
                           "wire '" + w.name + "' declared more than once"});
        }
    }

    if (!n.input_labels().empty() && n.input_labels().size() != n.width()) {
        out.push_back({ViolationKind::LabelCountMismatch,
                       "input label count " + std::to_string(n.input_labels().size()) +
                           " does not match wire count " + std::to_string(n.width())});
    }
    if (!n.output_labels().empty() && n.output_labels().size() != n.width()) {
        out.push_back({ViolationKind::LabelCountMismatch,
                       "output label count " + std::to_string(n.output_labels().size()) +
                           " does not match wire count " + std::to_string(n.width())});
    }

    const GateLibrary& lib = builtin_library();
    for (std::size_t s = 0; s < n.stages().size(); ++s) {
        const GateInstance& stage = n.stages()[s];
        const std::string where = "stage " + std::to_string(s + 1);
        const GateDef* gate = lib.find(stage.mnemonic);
        if (gate == nullptr) {
            out.push_back({ViolationKind::UnknownGate,
                           where + ": unknown gate '" + stage.mnemonic + "'"});
            continue;
        }
        if (stage.wires.size() != gate->arity()) {
            out.push_back({ViolationKind::ArityMismatch,
                           where + ": gate '" + stage.mnemonic + "' expects " +
                               std::to_string(gate->arity()) + " wires, got " +
                               std::to_string(stage.wires.size())});
        }
        std::set<std::string> bound;
        for (const std::string& name : stage.wires) {
            if (!n.wire_index(name)) {
                out.push_back(
                    {ViolationKind::UndeclaredWire, where + ": undeclared wire '" + name + "'"});
            }
            if (!bound.insert(name).second) {
                out.push_back({ViolationKind::DuplicateBinding,
                               where + ": wire '" + name + "' bound more than once"});
            }
        }
    }
    return out;
}

Netlist concat(const Netlist& a, const Netlist& b,
               const std::map<std::string, std::string>& wire_map) {
    // Check the rename map: every key must be a wire of b, and the map
    // must stay injective over b's full (renamed) wire set.
    std::unordered_map<std::string, std::string> rename;
    std::unordered_set<std::string> targets;
    for (const auto& [from, to] : wire_map) {
        if (!b.wire_index(from)) {
            throw ConcatError("wire map names unknown wire '" + from + "'");
        }
        if (!targets.insert(to).second) {
            throw ConcatError("wire map is not injective: duplicate target '" + to + "'");
        }
        rename.emplace(from, to);
    }
    auto renamed = [&rename](const std::string& name) {
        auto it = rename.find(name);
        return it == rename.end() ? name : it->second;
    };
    std::unordered_set<std::string> b_names;
    for (const Wire& w : b.wires()) {
        if (!b_names.insert(renamed(w.name)).second) {
            throw ConcatError("renaming collides on wire '" + renamed(w.name) + "'");
        }
    }

    std::vector<Wire> merged(a.wires().begin(), a.wires().end());
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < merged.size(); ++i) {
        index.emplace(merged[i].name, i);
    }
    for (const Wire& w : b.wires()) {
        const std::string name = renamed(w.name);
        auto it = index.find(name);
        if (it != index.end()) {
            // Shared line: the earlier circuit feeds it, the later one
            // drives the final output.
            merged[it->second].output_role = w.output_role;
        } else {
            index.emplace(name, merged.size());
            merged.push_back(Wire{name, w.input_role, w.output_role});
        }
    }

    Netlist result;
    for (Wire& w : merged) {
        result.add_wire(std::move(w));
    }
    for (const GateInstance& stage : a.stages()) {
        result.add_stage(stage);
    }
    for (const GateInstance& stage : b.stages()) {
        std::vector<std::string> bound;
        bound.reserve(stage.wires.size());
        for (const std::string& name : stage.wires) {
            bound.push_back(renamed(name));
        }
        result.add_stage(GateInstance(stage.mnemonic, std::move(bound)));
    }

    // Labels survive only while they still line up with the wire list.
    if (result.width() == a.width()) {
        result.set_input_labels(a.input_labels());
        result.set_output_labels(a.output_labels());
    }
    return result;
}

} // namespace revseq
