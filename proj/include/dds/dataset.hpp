#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dds/sequence.hpp"

namespace dds::seq {

enum class Format { kCsv, kFasta };

struct LoadOptions {
    Format format = Format::kCsv;
    std::size_t fixed_length = 0;  // L; every sequence is padded to this
    // Paired mode concatenates a heavy and a light chain, each padded to its
    // own length (defaults follow the AHo-aligned antibody convention).
    bool paired = false;
    std::size_t heavy_length = 149;
    std::size_t light_length = 148;
    bool drop_duplicates = false;
};

struct SequenceDataset {
    std::vector<Sequence> sequences;
    std::size_t fixed_length = 0;
    std::string source;
    std::string split_tag;

    std::size_t size() const { return sequences.size(); }
};

// Reads sequences from CSV (columns `sequence`, or `vh`+`vl` when paired) or
// FASTA (2-line records; paired mode expects alternating `<id>_H` / `<id>_L`
// records with matching ids). All sequences are validated against the
// alphabet, padded to the fixed length, and kept in file order. Lowercase
// residues, unknown letters and overlong sequences raise ParseError /
// DimensionError naming the offending record.
SequenceDataset load_dataset(const std::filesystem::path& path, const LoadOptions& opts);

// Writers used by the CLI and the synthetic benchmark.
void write_sequence_csv(const std::filesystem::path& path, const std::vector<Sequence>& seqs);
void write_fasta(const std::filesystem::path& path, const std::vector<Sequence>& seqs,
                 const std::string& id_prefix);

}  // namespace dds::seq
