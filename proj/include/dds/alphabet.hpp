#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "dds/error.hpp"

namespace dds::seq {

// 21-symbol amino-acid alphabet: the 20 canonical residues in alphabetical
// order at indices 0-19, gap '-' fixed at index 20. The gap doubles as the
// padding symbol, so amino-acid indices are stable across file formats.
//
//   index:  0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20
//   symbol: A C D E F G H I K L M  N  P  Q  R  S  T  V  W  Y  -
class Alphabet {
  public:
    static constexpr int kSize = 21;
    static constexpr std::uint8_t kGapIndex = 20;
    static constexpr char kGapChar = '-';

    static const Alphabet& instance() {
        static const Alphabet a;
        return a;
    }

    char symbol(std::uint8_t index) const {
        if (index >= kSize) throw DimensionError("alphabet index out of range: " + std::to_string(index));
        return symbols_[index];
    }

    bool contains(char c) const { return index_of_[static_cast<unsigned char>(c)] >= 0; }

    std::uint8_t index(char c) const {
        const int i = index_of_[static_cast<unsigned char>(c)];
        if (i < 0)
            throw ParseError(std::string("unknown residue letter '") + c +
                             "' (expected uppercase canonical amino acid or '-')");
        return static_cast<std::uint8_t>(i);
    }

  private:
    Alphabet() {
        index_of_.fill(-1);
        for (int i = 0; i < kSize; ++i) index_of_[static_cast<unsigned char>(symbols_[i])] = i;
    }

    static constexpr std::array<char, kSize> symbols_ = {
        'A', 'C', 'D', 'E', 'F', 'G', 'H', 'I', 'K', 'L', 'M',
        'N', 'P', 'Q', 'R', 'S', 'T', 'V', 'W', 'Y', kGapChar};
    std::array<int, 256> index_of_{};
};

}  // namespace dds::seq
