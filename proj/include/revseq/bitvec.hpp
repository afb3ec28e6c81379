#pragma once

/// @file bitvec.hpp
/// @brief Fixed-width bit-vector addressed by circuit line.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace revseq {

/// A fixed-width vector of bits.
///
/// Line 0 is the leftmost circuit line (a gate's A input), so the integer
/// encoding reads the vector as a binary number with line 0 as the most
/// significant bit. Truth-table row i is then simply BitVec(width, i).
class BitVec {
public:
    BitVec() = default;

    /// All-zero vector of the given width.
    explicit BitVec(std::size_t width) : bits_(width, 0) {}

    /// Vector of the given width holding the binary encoding of `value`.
    BitVec(std::size_t width, std::uint64_t value) : bits_(width, 0) {
        if (width < 64 && (value >> width) != 0) {
            throw std::invalid_argument("BitVec: value does not fit in " +
                                        std::to_string(width) + " bits");
        }
        for (std::size_t i = 0; i < width; ++i) {
            bits_[i] = static_cast<std::uint8_t>((value >> (width - 1 - i)) & 1u);
        }
    }

    /// Parses a string of '0'/'1' characters, leftmost line first.
    static BitVec parse(std::string_view text) {
        BitVec v(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] != '0' && text[i] != '1') {
                throw std::invalid_argument("BitVec: invalid bit character '" +
                                            std::string(1, text[i]) + "'");
            }
            v.bits_[i] = static_cast<std::uint8_t>(text[i] == '1');
        }
        return v;
    }

    [[nodiscard]] std::size_t width() const { return bits_.size(); }

    [[nodiscard]] bool get(std::size_t line) const { return bits_.at(line) != 0; }

    void set(std::size_t line, bool value) { bits_.at(line) = static_cast<std::uint8_t>(value); }

    /// Binary encoding with line 0 as the most significant bit.
    [[nodiscard]] std::uint64_t to_index() const {
        if (width() > 64) {
            throw std::length_error("BitVec: width > 64 has no integer encoding");
        }
        std::uint64_t value = 0;
        for (std::uint8_t b : bits_) {
            value = (value << 1) | b;
        }
        return value;
    }

    /// "101"-style rendering, leftmost line first.
    [[nodiscard]] std::string to_string() const {
        std::string s;
        s.reserve(width());
        for (std::uint8_t b : bits_) {
            s.push_back(b ? '1' : '0');
        }
        return s;
    }

    bool operator==(const BitVec&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

} // namespace revseq
