#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "pyra/decomposition.hpp"
#include "pyra/pyramidal.hpp"
#include "pyra/report.hpp"

namespace pyra {

/// Raised for malformed input files; the message carries the offending
/// field path or parse position.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Design files: {"v": <int>, "blocks": [[sorted points], ...]}.
// Reads accept any block order and re-canonicalize; writes are canonical.
std::string design_to_json(const Design& d);
Design design_from_json(const std::string& text);
Design load_design(const std::filesystem::path& file);
void save_design(const Design& d, const std::filesystem::path& file);

// Witness files: {"O": [...], "Z": [...], "designO": {...}, "designZ": {...},
// "delta": [[i, j], ...]}. Ambient size and the excluded point are derived.
std::string witness_to_json(const DecompositionWitness& w);
DecompositionWitness witness_from_json(const std::string& text);
DecompositionWitness load_witness(const std::filesystem::path& file);
void save_witness(const DecompositionWitness& w, const std::filesystem::path& file);

// Group files: {"v": <int>, "elements": [[image array], ...]}.
// Certificate files additionally carry {"fixed": [...]}; the orbit table
// is rebuilt on load.
std::string group_to_json(int v, const std::vector<Permutation>& elements);
std::pair<int, std::vector<Permutation>> group_from_json(const std::string& text);
std::string certificate_to_json(const PyramidalCertificate& cert);
PyramidalCertificate certificate_from_json(const std::string& text);
PyramidalCertificate load_certificate(const std::filesystem::path& file);
void save_certificate(const PyramidalCertificate& cert, const std::filesystem::path& file);

/// FNV-1a over the canonical serialization, as fixed-width hex.
std::string content_digest(const std::string& canonical_text);
std::string design_digest(const Design& d);

/// One command execution: named checks with witnesses, input digests and
/// phase timings. Serializes to JSON for --report.
struct RunReport {
    std::string command;
    std::map<std::string, std::string> inputs;  // path -> digest
    Report checks;
    std::map<std::string, double> timing_seconds;

    bool ok() const { return checks.all_passed(); }
    std::string to_json() const;
};

/// Content-addressed store: one design file per entry plus an index.
struct CatalogEntry {
    std::string id;  // digest of the canonical design JSON
    std::string file;
    DesignParams parameters{0, 0, 0};
    std::vector<std::string> tags;
    std::string provenance;  // producing command line
};

class Catalog {
  public:
    explicit Catalog(std::filesystem::path dir);

    /// Inserts (or re-tags) a design; the id is stable under
    /// re-serialization because only the canonical form is hashed.
    CatalogEntry add(const Design& d, const std::vector<std::string>& tags,
                     const std::string& provenance);

    std::vector<CatalogEntry> entries() const;

  private:
    std::filesystem::path dir_;
    std::filesystem::path index_file() const { return dir_ / "index.json"; }
};

}  // namespace pyra
