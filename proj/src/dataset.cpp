#include "dds/dataset.hpp"

#include <set>
#include <sstream>

#include "dds/io.hpp"

namespace dds::seq {

namespace {

Sequence parse_residues(const std::string& letters, const std::string& where) {
    const auto& alpha = Alphabet::instance();
    std::vector<std::uint8_t> toks;
    toks.reserve(letters.size());
    for (const char c : letters) {
        if (!alpha.contains(c))
            throw ParseError(where + ": unknown residue letter '" + std::string(1, c) + "'");
        toks.push_back(alpha.index(c));
    }
    return Sequence(std::move(toks));
}

Sequence pad_checked(const Sequence& s, std::size_t L, const std::string& where) {
    if (s.length() > L)
        throw DimensionError(where + ": sequence of length " + std::to_string(s.length()) +
                             " exceeds fixed length " + std::to_string(L));
    return pad_to_length(s, L);
}

Sequence make_paired(const std::string& vh, const std::string& vl, const LoadOptions& opts,
                     const std::string& where) {
    Sequence heavy = pad_checked(parse_residues(vh, where + " (heavy)"), opts.heavy_length, where + " (heavy)");
    Sequence light = pad_checked(parse_residues(vl, where + " (light)"), opts.light_length, where + " (light)");
    heavy.tokens.insert(heavy.tokens.end(), light.tokens.begin(), light.tokens.end());
    return heavy;
}

std::vector<Sequence> load_csv(const std::filesystem::path& path, const LoadOptions& opts) {
    const io::Csv csv = io::read_csv(path);
    std::vector<Sequence> out;
    const int seq_col = csv.column("sequence");
    const int vh_col = csv.column("vh");
    const int vl_col = csv.column("vl");
    const bool paired = opts.paired || (seq_col < 0 && vh_col >= 0 && vl_col >= 0);
    if (paired) {
        if (vh_col < 0 || vl_col < 0)
            throw ParseError(path.string() + ": paired CSV requires 'vh' and 'vl' columns");
        if (opts.fixed_length != opts.heavy_length + opts.light_length)
            throw ConfigError("paired fixed_length must equal heavy_length + light_length");
    } else if (seq_col < 0) {
        throw ParseError(path.string() + ": missing 'sequence' column (or 'vh'+'vl' pair)");
    }
    for (std::size_t r = 0; r < csv.rows.size(); ++r) {
        const std::string where = path.string() + ":row " + std::to_string(r + 2);
        if (paired) {
            out.push_back(make_paired(csv.rows[r][vh_col], csv.rows[r][vl_col], opts, where));
        } else {
            out.push_back(pad_checked(parse_residues(csv.rows[r][seq_col], where),
                                      opts.fixed_length, where));
        }
    }
    return out;
}

struct FastaRecord {
    std::string id;
    std::string letters;
};

std::vector<FastaRecord> parse_fasta(const std::filesystem::path& path) {
    const std::string text = io::read_file(path);
    std::vector<FastaRecord> records;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '>') {
            records.push_back({io::trim(line.substr(1)), ""});
        } else {
            if (records.empty())
                throw ParseError(path.string() + ":" + std::to_string(lineno) +
                                 ": sequence data before first '>' header");
            records.back().letters += io::trim(line);
        }
    }
    return records;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::vector<Sequence> load_fasta(const std::filesystem::path& path, const LoadOptions& opts) {
    const auto records = parse_fasta(path);
    std::vector<Sequence> out;
    if (!opts.paired) {
        for (const auto& rec : records) {
            const std::string where = path.string() + ":record '" + rec.id + "'";
            out.push_back(pad_checked(parse_residues(rec.letters, where), opts.fixed_length, where));
        }
        return out;
    }
    if (opts.fixed_length != opts.heavy_length + opts.light_length)
        throw ConfigError("paired fixed_length must equal heavy_length + light_length");
    if (records.size() % 2 != 0)
        throw ParseError(path.string() + ": paired FASTA has an odd number of records");
    for (std::size_t i = 0; i < records.size(); i += 2) {
        const auto& h = records[i];
        const auto& l = records[i + 1];
        if (!ends_with(h.id, "_H") || !ends_with(l.id, "_L") ||
            h.id.substr(0, h.id.size() - 2) != l.id.substr(0, l.id.size() - 2))
            throw ParseError(path.string() + ": records '" + h.id + "' / '" + l.id +
                             "' do not form a matched _H/_L pair");
        out.push_back(make_paired(h.letters, l.letters, opts,
                                  path.string() + ":record '" + h.id + "'"));
    }
    return out;
}

}  // namespace

SequenceDataset load_dataset(const std::filesystem::path& path, const LoadOptions& opts) {
    if (opts.fixed_length == 0) throw ConfigError("fixed_length must be positive");
    SequenceDataset ds;
    ds.fixed_length = opts.fixed_length;
    ds.source = path.string();
    ds.sequences = (opts.format == Format::kCsv) ? load_csv(path, opts) : load_fasta(path, opts);
    if (opts.drop_duplicates) {
        std::set<Sequence> seen;
        std::vector<Sequence> unique;
        unique.reserve(ds.sequences.size());
        for (auto& s : ds.sequences)
            if (seen.insert(s).second) unique.push_back(std::move(s));
        ds.sequences = std::move(unique);
    }
    return ds;
}

void write_sequence_csv(const std::filesystem::path& path, const std::vector<Sequence>& seqs) {
    io::Csv csv;
    csv.header = {"sequence"};
    csv.rows.reserve(seqs.size());
    for (const auto& s : seqs) csv.rows.push_back({to_string(s)});
    io::write_csv(path, csv);
}

void write_fasta(const std::filesystem::path& path, const std::vector<Sequence>& seqs,
                 const std::string& id_prefix) {
    std::ostringstream out;
    for (std::size_t i = 0; i < seqs.size(); ++i)
        out << ">" << id_prefix << i << "\n" << to_string(seqs[i]) << "\n";
    io::write_file_atomic(path, out.str());
}

}  // namespace dds::seq
