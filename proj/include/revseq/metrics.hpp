#pragma once

/// @file metrics.hpp
/// @brief Circuit cost metrics: quantum cost (symbolic and numeric),
///        total logical calculation, garbage outputs, constant inputs,
///        and comparison reports.

#include "revseq/gates.hpp"
#include "revseq/netlist.hpp"

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace revseq {

/// Numeric value per cost symbol, e.g. {m:4, n:7, F:1}.
using CostMap = std::map<std::string, long long>;

/// Default primitive costs: Feynman F=1, MUX m=4, New n=7, Fredkin Fr=5,
/// NOT I=1. n is back-derived from the published counter totals; override
/// it when working against a different New-gate decomposition.
[[nodiscard]] CostMap default_cost_map();

/// Integer linear combination over cost symbols, e.g. 13m+6n+15F.
class CostExpr {
public:
    CostExpr() = default;

    [[nodiscard]] static CostExpr symbol(const std::string& name, long long coefficient = 1);

    CostExpr& operator+=(const CostExpr& other);
    friend CostExpr operator+(CostExpr a, const CostExpr& b) { return a += b; }
    friend CostExpr operator*(long long count, CostExpr e);

    /// Replaces every occurrence of `name` by `replacement`.
    [[nodiscard]] CostExpr substitute(const std::string& name, const CostExpr& replacement) const;

    /// Coefficient of a symbol; 0 when absent.
    [[nodiscard]] long long coefficient(const std::string& name) const;

    /// Terms with nonzero coefficients.
    [[nodiscard]] const std::map<std::string, long long>& terms() const { return terms_; }

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    /// "13m+6n+15F" with unit coefficients printed; "0" for the empty sum.
    [[nodiscard]] std::string to_string() const;

    bool operator==(const CostExpr&) const = default;

private:
    std::map<std::string, long long> terms_; // zero coefficients erased
};

/// Numeric substitution; throws CostError when a symbol is not covered.
[[nodiscard]] long long eval_cost(const CostExpr& e, const CostMap& costs);

/// Gate counts of a design, keyed by library mnemonic or sub-design name.
struct DesignInventory {
    enum class Source { Structural, Declared, Extrapolated };

    std::string name;
    std::map<std::string, int> gate_counts;
    Source source = Source::Structural;
    std::string citation; // provenance note for declared counts

    bool operator==(const DesignInventory&) const = default;
};

/// Counts the gate mnemonics used by a netlist's stages (structural).
[[nodiscard]] DesignInventory inventory_of(const Netlist& n, std::string name = "");

/// Sum over the inventory of count × cost symbol. Keys that are not
/// library gates are sub-designs and resolve through `expansions`,
/// recursively; an unresolved key or an expansion cycle is a CostError.
[[nodiscard]] CostExpr quantum_cost(const DesignInventory& inv,
                                    const std::map<std::string, CostExpr>& expansions = {});

/// Sum over the inventory of count × per-gate logic cost, sub-designs
/// resolved through `expansions`.
[[nodiscard]] LogicCost total_logic_calc(const DesignInventory& inv,
                                         const std::map<std::string, LogicCost>& expansions = {});

/// Number of output wires declared garbage.
[[nodiscard]] int garbage_count(const Netlist& n);

/// Number of input wires held at a constant.
[[nodiscard]] int constant_input_count(const Netlist& n);

/// One comparison-table input: a computed cost expression or a published
/// number, plus the design's logic-operation counts.
struct ReportEntry {
    std::string name;
    std::variant<CostExpr, long long> cost;
    LogicCost logic;
    bool literature = false;
};

struct ReportRow {
    std::string name;
    long long quantum_cost = 0;
    LogicCost logic;
    std::string provenance; // "computed" or "literature"

    bool operator==(const ReportRow&) const = default;
};

/// Comparison table, exportable as aligned text or CSV
/// (`name,quantum_cost,alpha,beta,delta,provenance`).
struct Report {
    std::vector<ReportRow> rows;

    [[nodiscard]] std::string to_text() const;
    [[nodiscard]] std::string to_csv() const;
};

[[nodiscard]] Report compare_report(const std::vector<ReportEntry>& entries,
                                    const CostMap& costs);

} // namespace revseq
