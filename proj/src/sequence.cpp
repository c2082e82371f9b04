#include "dds/sequence.hpp"

#include <cmath>

namespace dds::seq {

Sequence::Sequence(std::vector<std::uint8_t> t) : tokens(std::move(t)) {
    for (const auto tok : tokens)
        if (tok >= Alphabet::kSize)
            throw DimensionError("token index out of range: " + std::to_string(tok));
}

Sequence from_string(const std::string& letters) {
    const auto& alpha = Alphabet::instance();
    std::vector<std::uint8_t> toks;
    toks.reserve(letters.size());
    for (const char c : letters) toks.push_back(alpha.index(c));
    return Sequence(std::move(toks));
}

std::string to_string(const Sequence& s) {
    const auto& alpha = Alphabet::instance();
    std::string out;
    out.reserve(s.tokens.size());
    for (const auto t : s.tokens) out.push_back(alpha.symbol(t));
    return out;
}

Sequence pad_to_length(const Sequence& s, std::size_t L) {
    if (s.length() > L)
        throw DimensionError("sequence of length " + std::to_string(s.length()) +
                             " exceeds fixed length " + std::to_string(L));
    Sequence out = s;
    out.tokens.resize(L, Alphabet::kGapIndex);
    return out;
}

std::vector<double> encode_onehot(const Sequence& s) {
    const std::size_t L = s.length();
    std::vector<double> emb(L * Alphabet::kSize, 0.0);
    for (std::size_t i = 0; i < L; ++i) {
        const auto t = s.tokens[i];
        if (t >= Alphabet::kSize)
            throw DimensionError("token index out of range: " + std::to_string(t));
        emb[i * Alphabet::kSize + t] = 1.0;
    }
    return emb;
}

Sequence decode_argmax(std::span<const double> emb) {
    constexpr std::size_t V = Alphabet::kSize;
    if (emb.size() % V != 0)
        throw DimensionError("embedding length " + std::to_string(emb.size()) +
                             " is not a multiple of " + std::to_string(V));
    const std::size_t L = emb.size() / V;
    std::vector<std::uint8_t> toks(L);
    for (std::size_t i = 0; i < L; ++i) {
        std::size_t best = 0;
        double best_val = emb[i * V];
        for (std::size_t v = 0; v < V; ++v) {
            const double x = emb[i * V + v];
            if (!std::isfinite(x)) throw NumericError("non-finite entry in embedding block " + std::to_string(i));
            if (x > best_val) {  // strict: ties stay at the lowest index
                best_val = x;
                best = v;
            }
        }
        toks[i] = static_cast<std::uint8_t>(best);
    }
    return Sequence(std::move(toks));
}

Sequence strip_gaps(const Sequence& s) {
    std::vector<std::uint8_t> toks;
    toks.reserve(s.tokens.size());
    for (const auto t : s.tokens)
        if (t != Alphabet::kGapIndex) toks.push_back(t);
    return Sequence(std::move(toks));
}

}  // namespace dds::seq
