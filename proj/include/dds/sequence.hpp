#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dds/alphabet.hpp"

namespace dds::seq {

// Token sequence over the 21-symbol alphabet.
struct Sequence {
    std::vector<std::uint8_t> tokens;

    Sequence() = default;
    explicit Sequence(std::vector<std::uint8_t> t);

    std::size_t length() const { return tokens.size(); }

    bool operator==(const Sequence& other) const = default;
    // Lexicographic order, used by deterministic enumeration and set metrics.
    auto operator<=>(const Sequence& other) const = default;
};

// Parses an uppercase residue string ('-' allowed as gap).
Sequence from_string(const std::string& letters);
std::string to_string(const Sequence& s);

// Appends gap tokens until the sequence has length L. Throws DimensionError if
// the sequence is already longer than L. Idempotent.
Sequence pad_to_length(const Sequence& s, std::size_t L);

// One-hot embedding of a padded sequence: L blocks of 21, block i carries a
// single 1 at the token index.
std::vector<double> encode_onehot(const Sequence& s);

// Projects an embedding back to tokens: per block argmax, ties broken toward
// the lowest index so decoding is deterministic. Length must be a multiple of
// 21; non-finite entries raise NumericError.
Sequence decode_argmax(std::span<const double> emb);

// Copy of the sequence with all gap tokens removed.
Sequence strip_gaps(const Sequence& s);

}  // namespace dds::seq
