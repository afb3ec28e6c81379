/// @file metrics.cpp
/// @brief Cost metric computation and report formatting.

#include "revseq/metrics.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <unordered_set>

namespace revseq {

namespace {

// Fixed display order so counter expressions read A, m, n, F.
int display_rank(const std::string& symbol) {
    if (symbol == "A") return 0;
    if (symbol == "m") return 1;
    if (symbol == "n") return 2;
    if (symbol == "F") return 3;
    return 4;
}

} // namespace

CostMap default_cost_map() {
    return CostMap{{"m", 4}, {"n", 7}, {"F", 1}, {"Fr", 5}, {"I", 1}};
}

CostExpr CostExpr::symbol(const std::string& name, long long coefficient) {
    CostExpr e;
    if (coefficient != 0) {
        e.terms_[name] = coefficient;
    }
    return e;
}

CostExpr& CostExpr::operator+=(const CostExpr& other) {
    for (const auto& [name, coeff] : other.terms_) {
        const long long sum = (terms_[name] += coeff);
        if (sum == 0) {
            terms_.erase(name);
        }
    }
    return *this;
}

CostExpr operator*(long long count, CostExpr e) {
    if (count == 0) {
        return CostExpr{};
    }
    for (auto& [name, coeff] : e.terms_) {
        coeff *= count;
    }
    return e;
}

CostExpr CostExpr::substitute(const std::string& name, const CostExpr& replacement) const {
    CostExpr out;
    for (const auto& [sym, coeff] : terms_) {
        if (sym == name) {
            out += coeff * replacement;
        } else {
            out += CostExpr::symbol(sym, coeff);
        }
    }
    return out;
}

long long CostExpr::coefficient(const std::string& name) const {
    auto it = terms_.find(name);
    return it == terms_.end() ? 0 : it->second;
}

std::string CostExpr::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::vector<std::pair<std::string, long long>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        const int ra = display_rank(a.first);
        const int rb = display_rank(b.first);
        return ra != rb ? ra < rb : a.first < b.first;
    });
    std::string out;
    for (const auto& [name, coeff] : ordered) {
        if (!out.empty()) {
            out += '+';
        }
        out += std::to_string(coeff) + name;
    }
    return out;
}

long long eval_cost(const CostExpr& e, const CostMap& costs) {
    long long total = 0;
    for (const auto& [name, coeff] : e.terms()) {
        auto it = costs.find(name);
        if (it == costs.end()) {
            throw CostError("cost map does not cover symbol '" + name + "'");
        }
        total += coeff * it->second;
    }
    return total;
}

DesignInventory inventory_of(const Netlist& n, std::string name) {
    DesignInventory inv;
    inv.name = std::move(name);
    inv.source = DesignInventory::Source::Structural;
    for (const GateInstance& stage : n.stages()) {
        ++inv.gate_counts[stage.mnemonic];
    }
    return inv;
}

namespace {

CostExpr expand_symbols(const CostExpr& e, const std::map<std::string, CostExpr>& expansions,
                        std::unordered_set<std::string>& in_progress) {
    CostExpr out;
    for (const auto& [sym, coeff] : e.terms()) {
        auto it = expansions.find(sym);
        if (it == expansions.end()) {
            out += CostExpr::symbol(sym, coeff);
            continue;
        }
        if (!in_progress.insert(sym).second) {
            throw CostError("cyclic expansion of sub-design '" + sym + "'");
        }
        out += coeff * expand_symbols(it->second, expansions, in_progress);
        in_progress.erase(sym);
    }
    return out;
}

} // namespace

CostExpr quantum_cost(const DesignInventory& inv,
                      const std::map<std::string, CostExpr>& expansions) {
    const GateLibrary& lib = builtin_library();
    CostExpr total;
    for (const auto& [kind, count] : inv.gate_counts) {
        if (count == 0) {
            continue;
        }
        if (const GateDef* gate = lib.find(kind)) {
            total += CostExpr::symbol(gate->cost_symbol(), count);
            continue;
        }
        auto it = expansions.find(kind);
        if (it == expansions.end()) {
            throw CostError("unresolved sub-design '" + kind + "'");
        }
        std::unordered_set<std::string> in_progress{kind};
        total += count * expand_symbols(it->second, expansions, in_progress);
    }
    return total;
}

LogicCost total_logic_calc(const DesignInventory& inv,
                           const std::map<std::string, LogicCost>& expansions) {
    const GateLibrary& lib = builtin_library();
    LogicCost total;
    for (const auto& [kind, count] : inv.gate_counts) {
        if (count == 0) {
            continue;
        }
        if (const GateDef* gate = lib.find(kind)) {
            total += count * gate->logic_cost();
            continue;
        }
        auto it = expansions.find(kind);
        if (it == expansions.end()) {
            throw CostError("unresolved sub-design '" + kind + "'");
        }
        total += count * it->second;
    }
    return total;
}

int garbage_count(const Netlist& n) {
    int count = 0;
    for (const Wire& w : n.wires()) {
        count += w.output_role == OutputRole::Garbage ? 1 : 0;
    }
    return count;
}

int constant_input_count(const Netlist& n) {
    int count = 0;
    for (const Wire& w : n.wires()) {
        count += w.input_role != InputRole::Primary ? 1 : 0;
    }
    return count;
}

Report compare_report(const std::vector<ReportEntry>& entries, const CostMap& costs) {
    Report report;
    report.rows.reserve(entries.size());
    for (const ReportEntry& entry : entries) {
        ReportRow row;
        row.name = entry.name;
        if (const CostExpr* expr = std::get_if<CostExpr>(&entry.cost)) {
            row.quantum_cost = eval_cost(*expr, costs);
        } else {
            row.quantum_cost = std::get<long long>(entry.cost);
        }
        row.logic = entry.logic;
        row.provenance = entry.literature ? "literature" : "computed";
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string Report::to_text() const {
    std::size_t name_width = 6; // "design"
    std::size_t logic_width = 19; // "logical calculation"
    for (const ReportRow& row : rows) {
        name_width = std::max(name_width, row.name.size());
        // The Greek letters are two bytes each; count display columns.
        logic_width = std::max(logic_width, row.logic.to_string().size() - 3);
    }
    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(name_width)) << "design" << "  "
        << std::setw(12) << "quantum cost" << "  " << std::setw(static_cast<int>(logic_width))
        << "logical calculation" << "  provenance\n";
    for (const ReportRow& row : rows) {
        const std::string logic = row.logic.to_string();
        out << std::setw(static_cast<int>(name_width)) << row.name << "  " << std::setw(12)
            << row.quantum_cost << "  "
            << std::setw(static_cast<int>(logic_width + 3)) // UTF-8 padding correction
            << logic << "  " << row.provenance << '\n';
    }
    return out.str();
}

std::string Report::to_csv() const {
    std::ostringstream out;
    out << "name,quantum_cost,alpha,beta,delta,provenance\n";
    for (const ReportRow& row : rows) {
        out << row.name << ',' << row.quantum_cost << ',' << row.logic.xor_count << ','
            << row.logic.and_count << ',' << row.logic.not_count << ',' << row.provenance << '\n';
    }
    return out.str();
}

} // namespace revseq
