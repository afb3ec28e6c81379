/// @file test_gates.cpp
/// @brief Gate library: golden truth tables, bijectivity, cost metadata.

#include <catch2/catch_amalgamated.hpp>

#include "revseq/gates.hpp"

#include <cstdint>
#include <vector>

using namespace revseq;

namespace {

const GateDef& gate(const char* key) {
    const GateDef* g = builtin_library().find(key);
    REQUIRE(g != nullptr);
    return *g;
}

/// Checks a gate's full table against expected output row indices, in
/// ascending binary input order.
void check_table(const GateDef& g, const std::vector<std::uint32_t>& expected) {
    const auto rows = truth_table(g);
    REQUIRE(rows.size() == expected.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        INFO(g.name() << " row " << i);
        CHECK(rows[i].first.to_index() == i);
        CHECK(rows[i].second.to_index() == expected[i]);
    }
}

} // namespace

TEST_CASE("BitVec encoding and parsing", "[bitvec]") {
    const BitVec v(3, 5); // 101, line 0 is the MSB
    CHECK(v.get(0));
    CHECK_FALSE(v.get(1));
    CHECK(v.get(2));
    CHECK(v.to_index() == 5);
    CHECK(v.to_string() == "101");
    CHECK(BitVec::parse("101") == v);
    CHECK(BitVec(3).to_index() == 0);
    CHECK_THROWS_AS(BitVec::parse("10x"), std::invalid_argument);
    CHECK_THROWS_AS(BitVec(2, 4), std::invalid_argument); // does not fit
    CHECK_THROWS_AS(v.get(3), std::out_of_range);
}

TEST_CASE("library contains the five gates with their metadata", "[gates]") {
    const auto& gates = builtin_library().gates();
    REQUIRE(gates.size() == 5);

    CHECK(gate("not").arity() == 1);
    CHECK(gate("not").logic_cost() == LogicCost{0, 0, 1});

    CHECK(gate("f2").arity() == 2);
    CHECK(gate("f2").name() == "FEYNMAN");
    CHECK(gate("f2").cost_symbol() == "F");
    CHECK(gate("f2").logic_cost() == LogicCost{1, 0, 0});

    CHECK(gate("f3").arity() == 3);
    CHECK(gate("f3").name() == "FREDKIN");
    CHECK(gate("f3").logic_cost() == LogicCost{2, 4, 2});

    CHECK(gate("mux").arity() == 3);
    CHECK(gate("mux").cost_symbol() == "m");
    CHECK(gate("mux").logic_cost() == LogicCost{3, 2, 1});

    CHECK(gate("ng").arity() == 3);
    CHECK(gate("ng").name() == "NEW");
    CHECK(gate("ng").cost_symbol() == "n");
    CHECK(gate("ng").logic_cost() == LogicCost{2, 2, 3});
}

TEST_CASE("lookup is case-insensitive over mnemonics and names", "[gates]") {
    CHECK(builtin_library().find("F2") == builtin_library().find("feynman"));
    CHECK(builtin_library().find("Mux") == builtin_library().find("MUX"));
    CHECK(builtin_library().find("toffoli") == nullptr);
}

TEST_CASE("FEYNMAN golden table", "[gates][golden]") {
    // 00->00, 01->01, 10->11, 11->10
    check_table(gate("f2"), {0b00, 0b01, 0b11, 0b10});
}

TEST_CASE("FREDKIN golden table", "[gates][golden]") {
    check_table(gate("f3"), {0b000, 0b001, 0b010, 0b011, 0b100, 0b110, 0b101, 0b111});
}

TEST_CASE("MUX golden table", "[gates][golden]") {
    check_table(gate("mux"), {0b000, 0b011, 0b010, 0b001, 0b110, 0b100, 0b101, 0b111});
}

TEST_CASE("NEW gate table, derived by hand from P=A, Q=AB^C, R=A'C'^B'", "[gates][golden]") {
    check_table(gate("ng"), {0b000, 0b011, 0b001, 0b010, 0b101, 0b111, 0b110, 0b100});
}

TEST_CASE("NOT truth table", "[gates]") {
    check_table(gate("not"), {1, 0});
}

TEST_CASE("spot rows from the golden tables", "[gates]") {
    CHECK(eval_gate(gate("mux"), BitVec::parse("101")) == BitVec::parse("100"));
    CHECK(eval_gate(gate("f2"), BitVec::parse("11")) == BitVec::parse("10"));
    CHECK(eval_gate(gate("f3"), BitVec::parse("101")) == BitVec::parse("110"));
    CHECK(eval_gate(gate("ng"), BitVec::parse("110")) == BitVec::parse("110"));
}

TEST_CASE("eval_gate rejects width mismatches", "[gates]") {
    CHECK_THROWS_AS(eval_gate(gate("mux"), BitVec::parse("10")), WidthError);
    CHECK_THROWS_AS(eval_gate(gate("not"), BitVec::parse("01")), WidthError);
}

TEST_CASE("every built-in gate is a bijection", "[gates][property]") {
    for (const GateDef& g : builtin_library().gates()) {
        INFO(g.name());
        CHECK(is_bijection(g.semantics(), g.arity()).ok);
    }
}

TEST_CASE("three-wire gates pass their first line through", "[gates][property]") {
    for (const GateDef& g : builtin_library().gates()) {
        if (g.arity() != 3) {
            continue;
        }
        for (std::uint64_t i = 0; i < 8; ++i) {
            const BitVec in(3, i);
            INFO(g.name() << " input " << in.to_string());
            CHECK(eval_gate(g, in).get(0) == in.get(0));
        }
    }
}

TEST_CASE("FEYNMAN with B=0 copies A", "[gates][property]") {
    for (bool a : {false, true}) {
        BitVec in(2);
        in.set(0, a);
        const BitVec out = eval_gate(gate("f2"), in);
        CHECK(out.get(0) == a);
        CHECK(out.get(1) == a);
    }
}

TEST_CASE("FREDKIN is a controlled swap", "[gates][property]") {
    for (std::uint64_t i = 0; i < 8; ++i) {
        const BitVec in(3, i);
        const BitVec out = eval_gate(gate("f3"), in);
        if (in.get(0)) {
            CHECK(out.get(1) == in.get(2));
            CHECK(out.get(2) == in.get(1));
        } else {
            CHECK(out.get(1) == in.get(1));
            CHECK(out.get(2) == in.get(2));
        }
    }
}

TEST_CASE("NOT, FEYNMAN and FREDKIN are self-inverse", "[gates][property]") {
    for (const char* key : {"not", "f2", "f3"}) {
        const GateDef& g = gate(key);
        const std::uint64_t rows = std::uint64_t{1} << g.arity();
        for (std::uint64_t i = 0; i < rows; ++i) {
            const BitVec in(g.arity(), i);
            INFO(g.name() << " input " << in.to_string());
            CHECK(eval_gate(g, eval_gate(g, in)) == in);
        }
    }
}

TEST_CASE("MUX and NEW invert by table and round-trip", "[gates][property]") {
    for (const char* key : {"mux", "ng"}) {
        const GateDef& g = gate(key);
        std::vector<std::uint32_t> inverse(g.table().size(), 0);
        for (std::uint32_t i = 0; i < g.table().size(); ++i) {
            inverse[g.table()[i]] = i;
        }
        for (std::uint32_t i = 0; i < g.table().size(); ++i) {
            INFO(g.name() << " row " << i);
            CHECK(inverse[g.table()[i]] == i);
            CHECK(g.table()[inverse[i]] == i);
        }
    }
}

TEST_CASE("is_bijection reports a collision witness", "[gates]") {
    // f(A,B) = (A, A·B): (0,0) and (0,1) both map to (0,0).
    const auto f = [](const BitVec& in) {
        BitVec out(2);
        out.set(0, in.get(0));
        out.set(1, in.get(0) && in.get(1));
        return out;
    };
    const BijectionCheck check = is_bijection(f, 2);
    REQUIRE_FALSE(check.ok);
    REQUIRE(check.witness.has_value());
    CHECK(check.witness->first == BitVec::parse("00"));
    CHECK(check.witness->second == BitVec::parse("01"));
}

TEST_CASE("identity on 3 wires is a bijection", "[gates]") {
    CHECK(is_bijection([](const BitVec& in) { return in; }, 3).ok);
}

TEST_CASE("is_bijection enforces the enumeration cap", "[gates]") {
    CHECK_THROWS_AS(is_bijection([](const BitVec& in) { return in; }, 21),
                    EnumerationLimitError);
    CHECK_THROWS_AS(is_bijection([](const BitVec& in) { return in; }, 8, 4),
                    EnumerationLimitError);
}

TEST_CASE("LogicCost arithmetic and formatting", "[gates]") {
    const LogicCost a{3, 2, 1};
    const LogicCost b{1, 0, 0};
    CHECK(a + b == LogicCost{4, 2, 1});
    CHECK(b + a == a + b);
    CHECK(a + LogicCost{} == a);
    CHECK((a + b) + a == a + (b + a));
    CHECK(3 * b == LogicCost{3, 0, 0});
    CHECK(LogicCost{20, 12, 10}.to_string() == "20α + 12β + 10δ");
}
