/// @file netlist_io.cpp
/// @brief Text reader and writer for the netlist cascade format.

#include "revseq/netlist.hpp"

#include <cctype>
#include <istream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

namespace revseq {

namespace {

struct Token {
    std::string text;
    std::size_t column; // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        tokens.push_back({line.substr(start, i - start), start + 1});
    }
    return tokens;
}

bool is_identifier(const std::string& s) {
    if (s.empty() || (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')) {
        return false;
    }
    for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
            return false;
        }
    }
    return true;
}

class Parser {
public:
    explicit Parser(std::istream& in) : in_(in) {}

    Netlist parse() {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++line_no_;
            if (!raw.empty() && raw.back() == '\r') {
                raw.pop_back();
            }
            const std::vector<Token> tokens = tokenize(raw);
            if (tokens.empty() || tokens.front().text[0] == '#') {
                continue;
            }
            handle_line(tokens);
        }
        if (state_ == State::Header) {
            throw ParseError("missing .begin", line_no_ + 1, 1);
        }
        if (state_ == State::Body) {
            throw ParseError("missing .end", line_no_ + 1, 1);
        }
        return std::move(netlist_);
    }

private:
    enum class State { Header, Body, Done };

    void handle_line(const std::vector<Token>& tokens) {
        const Token& head = tokens.front();
        switch (state_) {
        case State::Header:
            if (head.text == ".begin") {
                expect_bare(tokens);
                finish_header();
                state_ = State::Body;
            } else if (head.text[0] == '.') {
                handle_directive(tokens);
            } else {
                throw ParseError("expected a directive or .begin, got '" + head.text + "'",
                                 line_no_, head.column);
            }
            break;
        case State::Body:
            if (head.text == ".end") {
                expect_bare(tokens);
                state_ = State::Done;
            } else if (head.text[0] == '.') {
                throw ParseError("unexpected directive '" + head.text + "' inside .begin block",
                                 line_no_, head.column);
            } else {
                handle_gate_line(tokens);
            }
            break;
        case State::Done:
            throw ParseError("content after .end", line_no_, head.column);
        }
    }

    void expect_bare(const std::vector<Token>& tokens) const {
        if (tokens.size() > 1) {
            throw ParseError("unexpected token '" + tokens[1].text + "' after " + tokens[0].text,
                             line_no_, tokens[1].column);
        }
    }

    void handle_directive(const std::vector<Token>& tokens) {
        const Token& head = tokens.front();
        if (head.text == ".variables") {
            if (roles_or_labels_seen_) {
                throw ParseError(".variables must precede all other directives", line_no_,
                                 head.column);
            }
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                add_variable(tokens[i]);
            }
        } else if (head.text == ".inputs" || head.text == ".outputs") {
            roles_or_labels_seen_ = true;
            std::vector<std::string>& labels =
                head.text == ".inputs" ? input_labels_ : output_labels_;
            require_absent(!label_set(head.text), head);
            if (tokens.size() - 1 != wires_.size()) {
                throw ParseError(head.text + " lists " + std::to_string(tokens.size() - 1) +
                                     " labels for " + std::to_string(wires_.size()) + " wires",
                                 line_no_, head.column);
            }
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                labels.push_back(tokens[i].text);
            }
            set_label_seen(head.text);
        } else if (head.text == ".constants") {
            roles_or_labels_seen_ = true;
            require_absent(!constants_seen_, head);
            constants_seen_ = true;
            const Token& roles = role_string(tokens, head);
            for (std::size_t i = 0; i < roles.text.size(); ++i) {
                const char c = roles.text[i];
                if (c == '0') {
                    wires_[i].input_role = InputRole::ConstantZero;
                } else if (c == '1') {
                    wires_[i].input_role = InputRole::ConstantOne;
                } else if (c != '-') {
                    throw ParseError(".constants role for wire '" + wires_[i].name +
                                         "': invalid character '" + std::string(1, c) + "'",
                                     line_no_, roles.column + i);
                }
            }
        } else if (head.text == ".garbage") {
            roles_or_labels_seen_ = true;
            require_absent(!garbage_seen_, head);
            garbage_seen_ = true;
            const Token& roles = role_string(tokens, head);
            for (std::size_t i = 0; i < roles.text.size(); ++i) {
                const char c = roles.text[i];
                if (c == '1') {
                    wires_[i].output_role = OutputRole::Garbage;
                } else if (c != '-') {
                    throw ParseError(".garbage role for wire '" + wires_[i].name +
                                         "': invalid character '" + std::string(1, c) + "'",
                                     line_no_, roles.column + i);
                }
            }
        } else {
            throw ParseError("unknown directive '" + head.text + "'", line_no_, head.column);
        }
    }

    void require_absent(bool first_time, const Token& head) const {
        if (!first_time) {
            throw ParseError("duplicate directive " + head.text, line_no_, head.column);
        }
    }

    [[nodiscard]] bool label_set(const std::string& directive) const {
        return directive == ".inputs" ? inputs_seen_ : outputs_seen_;
    }

    void set_label_seen(const std::string& directive) {
        (directive == ".inputs" ? inputs_seen_ : outputs_seen_) = true;
    }

    const Token& role_string(const std::vector<Token>& tokens, const Token& head) const {
        if (tokens.size() != 2) {
            throw ParseError(head.text + " expects exactly one role string", line_no_,
                             tokens.size() > 2 ? tokens[2].column : head.column);
        }
        if (tokens[1].text.size() != wires_.size()) {
            throw ParseError(head.text + " role string has " +
                                 std::to_string(tokens[1].text.size()) + " entries for " +
                                 std::to_string(wires_.size()) + " wires",
                             line_no_, tokens[1].column);
        }
        return tokens[1];
    }

    void add_variable(const Token& tok) {
        if (!is_identifier(tok.text)) {
            throw ParseError("invalid wire name '" + tok.text + "'", line_no_, tok.column);
        }
        if (!names_.insert(tok.text).second) {
            throw ParseError("duplicate wire declaration '" + tok.text + "'", line_no_,
                             tok.column);
        }
        wires_.push_back(Wire{tok.text, InputRole::Primary, OutputRole::Primary});
    }

    void handle_gate_line(const std::vector<Token>& tokens) {
        const Token& head = tokens.front();
        const GateDef* gate = builtin_library().find(head.text);
        if (gate == nullptr) {
            throw ParseError("unknown gate mnemonic '" + head.text + "'", line_no_, head.column);
        }
        if (tokens.size() - 1 != gate->arity()) {
            throw ParseError("gate '" + gate->mnemonic() + "' expects " +
                                 std::to_string(gate->arity()) + " wires, got " +
                                 std::to_string(tokens.size() - 1),
                             line_no_, head.column);
        }
        std::vector<std::string> bound;
        std::unordered_set<std::string> distinct;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            if (names_.find(tokens[i].text) == names_.end()) {
                throw ParseError("undeclared wire '" + tokens[i].text + "'", line_no_,
                                 tokens[i].column);
            }
            if (!distinct.insert(tokens[i].text).second) {
                throw ParseError("wire '" + tokens[i].text + "' bound more than once", line_no_,
                                 tokens[i].column);
            }
            bound.push_back(tokens[i].text);
        }
        netlist_.add_stage(GateInstance(head.text, std::move(bound)));
    }

    void finish_header() {
        for (Wire& w : wires_) {
            netlist_.add_wire(std::move(w));
        }
        netlist_.set_input_labels(std::move(input_labels_));
        netlist_.set_output_labels(std::move(output_labels_));
    }

    std::istream& in_;
    std::size_t line_no_ = 0;
    State state_ = State::Header;
    Netlist netlist_;
    std::vector<Wire> wires_;
    std::vector<std::string> input_labels_;
    std::vector<std::string> output_labels_;
    std::unordered_set<std::string> names_;
    bool roles_or_labels_seen_ = false;
    bool inputs_seen_ = false;
    bool outputs_seen_ = false;
    bool constants_seen_ = false;
    bool garbage_seen_ = false;
};

} // namespace

Netlist parse_netlist(std::istream& in) { return Parser(in).parse(); }

Netlist parse_netlist(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_netlist(in);
}

std::string serialize_netlist(const Netlist& n) {
    std::ostringstream out;
    if (n.width() > 0) {
        out << ".variables";
        for (const Wire& w : n.wires()) {
            out << ' ' << w.name;
        }
        out << '\n';
    }
    if (!n.input_labels().empty()) {
        out << ".inputs";
        for (const std::string& label : n.input_labels()) {
            out << ' ' << label;
        }
        out << '\n';
    }
    if (!n.output_labels().empty()) {
        out << ".outputs";
        for (const std::string& label : n.output_labels()) {
            out << ' ' << label;
        }
        out << '\n';
    }
    bool any_constant = false;
    bool any_garbage = false;
    for (const Wire& w : n.wires()) {
        any_constant = any_constant || w.input_role != InputRole::Primary;
        any_garbage = any_garbage || w.output_role == OutputRole::Garbage;
    }
    if (any_constant) {
        out << ".constants ";
        for (const Wire& w : n.wires()) {
            out << (w.input_role == InputRole::Primary ? '-'
                    : w.input_role == InputRole::ConstantZero ? '0'
                                                              : '1');
        }
        out << '\n';
    }
    if (any_garbage) {
        out << ".garbage ";
        for (const Wire& w : n.wires()) {
            out << (w.output_role == OutputRole::Garbage ? '1' : '-');
        }
        out << '\n';
    }
    out << ".begin\n";
    for (const GateInstance& stage : n.stages()) {
        out << stage.mnemonic;
        for (const std::string& name : stage.wires) {
            out << ' ' << name;
        }
        out << '\n';
    }
    out << ".end\n";
    return out.str();
}

} // namespace revseq
