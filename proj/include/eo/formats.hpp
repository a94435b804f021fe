#pragma once

/*
  Deterministic serialization: stratum tables (CSV, structured JSON, aligned
  text), poset DOT export, and the module document format (read/write).
  Every emitter is byte-deterministic for the same input.
*/

#include <stdexcept>
#include <string>
#include <vector>

#include "eo/dieudonne.hpp"
#include "eo/strata.hpp"

namespace eo::formats {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

enum class TableFormat { csv, structured, aligned };

// Throws std::invalid_argument for unknown tags ("csv", "structured",
// "table"/"aligned").
TableFormat parse_table_format(const std::string& tag);

struct StratumTableRow {
  int g = 0;
  std::string phi;    // "0,1,1"
  int dim = 0;
  int a_number = 0;
  int p_rank = 0;
  std::string w;      // "-2,-1"
  std::string word;   // "0-1-0", empty for the identity
  std::string kraft;  // "FV^1;F^1"

  bool operator==(const StratumTableRow&) const = default;
};

StratumTableRow table_row(const strata::StratumRecord& record);

// Rows are emitted sorted by (dim, phi); CSV header is fixed to
// g,phi,dim,a,f,w,word,kraft. Throws std::invalid_argument on empty input.
std::string emit_table(const std::vector<strata::StratumRecord>& records, TableFormat format);

// Rows of a structured (JSON) table, for the lossless round trip.
std::vector<StratumTableRow> parse_structured_table(const std::string& text);

// One node per stratum labeled "phi | dim", one edge per cover, oriented
// from the smaller stratum to the larger.
std::string emit_dot(const strata::StratumPoset& poset);

// Module documents: JSON with fields p, a (default 1), modulus (iff a > 1),
// n, F, V (optional when a pairing determines it), pairing (optional).
// Matrix entries are residue codes in [0, p^a).
dieudonne::BT1Module read_module(const std::string& text);
std::string write_module(const dieudonne::BT1Module& m);

// Shared text fragments.
std::string phi_string(const strata::ElementarySequence& phi);
std::string psi_string(const strata::FinalSequence& psi);
std::string reduced_word_string(const weyl::SignedPermutation& w, const weyl::CoxeterDescriptor& desc);
std::string kraft_string(const std::vector<strata::KraftWord>& words);

}  // namespace eo::formats
