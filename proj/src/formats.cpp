#include "eo/formats.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace eo::formats {

namespace {

using nlohmann::ordered_json;

std::string join_ints(const std::vector<int>& v, char sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

std::string csv_quote(const std::string& s) { return '"' + s + '"'; }

std::vector<strata::StratumRecord> sorted_records(std::vector<strata::StratumRecord> records) {
  std::sort(records.begin(), records.end(), [](const strata::StratumRecord& a, const strata::StratumRecord& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.phi < b.phi;
  });
  return records;
}

ordered_json row_json(const StratumTableRow& row) {
  ordered_json j;
  j["g"] = row.g;
  j["phi"] = row.phi;
  j["dim"] = row.dim;
  j["a"] = row.a_number;
  j["f"] = row.p_rank;
  j["w"] = row.w;
  j["word"] = row.word;
  j["kraft"] = row.kraft;
  return j;
}

// Residue-coded matrix from a JSON array of arrays.
linalg::Matrix matrix_from_json(const ordered_json& j, const gf::FiniteField& field, int n,
                                const std::string& name) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw ParseError(name + " must be an " + std::to_string(n) + "x" + std::to_string(n) + " array");
  std::vector<linalg::Matrix::Elt> data;
  data.reserve(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    const ordered_json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ParseError(name + " row " + std::to_string(r + 1) + " must have " + std::to_string(n) + " entries");
    for (int c = 0; c < n; ++c) {
      const ordered_json& cell = row[static_cast<std::size_t>(c)];
      if (!cell.is_number_unsigned())
        throw ParseError(name + "[" + std::to_string(r + 1) + "][" + std::to_string(c + 1) +
                         "] must be a nonnegative residue code");
      const std::uint64_t v = cell.get<std::uint64_t>();
      if (!field.is_element(v))
        throw ParseError(name + "[" + std::to_string(r + 1) + "][" + std::to_string(c + 1) + "] = " +
                         std::to_string(v) + " out of range for a field of order " + std::to_string(field.order()));
      data.push_back(v);
    }
  }
  return linalg::Matrix(field, n, n, std::move(data));
}

ordered_json matrix_to_json(const linalg::Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (int r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

TableFormat parse_table_format(const std::string& tag) {
  if (tag == "csv") return TableFormat::csv;
  if (tag == "structured") return TableFormat::structured;
  if (tag == "table" || tag == "aligned") return TableFormat::aligned;
  throw std::invalid_argument("unsupported format tag: " + tag);
}

StratumTableRow table_row(const strata::StratumRecord& record) {
  const weyl::CoxeterDescriptor desc(weyl::Family::C, record.g);
  StratumTableRow row;
  row.g = record.g;
  row.phi = phi_string(record.phi);
  row.dim = record.dim;
  row.a_number = record.a_number;
  row.p_rank = record.p_rank;
  row.w = weyl::to_string(record.w_min);
  row.word = reduced_word_string(record.w_min, desc);
  row.kraft = kraft_string(strata::kraft_words(record.frobenius_perm, record.psi));
  return row;
}

std::string emit_table(const std::vector<strata::StratumRecord>& records, TableFormat format) {
  if (records.empty()) throw std::invalid_argument("no records to emit");
  std::vector<StratumTableRow> rows;
  for (const strata::StratumRecord& record : sorted_records(records)) rows.push_back(table_row(record));

  std::ostringstream os;
  if (format == TableFormat::csv) {
    os << "g,phi,dim,a,f,w,word,kraft\n";
    for (const StratumTableRow& r : rows)
      os << r.g << ',' << csv_quote(r.phi) << ',' << r.dim << ',' << r.a_number << ',' << r.p_rank << ','
         << csv_quote(r.w) << ',' << csv_quote(r.word) << ',' << csv_quote(r.kraft) << '\n';
    return os.str();
  }
  if (format == TableFormat::structured) {
    ordered_json arr = ordered_json::array();
    for (const StratumTableRow& r : rows) arr.push_back(row_json(r));
    return arr.dump(2) + "\n";
  }

  const std::vector<std::string> header = {"g", "phi", "dim", "a", "f", "w", "word", "kraft"};
  std::vector<std::vector<std::string>> cells;
  for (const StratumTableRow& r : rows)
    cells.push_back({std::to_string(r.g), r.phi, std::to_string(r.dim), std::to_string(r.a_number),
                     std::to_string(r.p_rank), r.w, r.word, r.kraft});
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
  }
  auto emit_row = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << "  ";
      os << row[c];
      if (c + 1 < row.size()) os << std::string(width[c] - row[c].size(), ' ');
    }
    os << '\n';
  };
  emit_row(header);
  for (const auto& row : cells) emit_row(row);
  return os.str();
}

std::vector<StratumTableRow> parse_structured_table(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!j.is_array()) throw ParseError("structured table must be a JSON array");
  std::vector<StratumTableRow> rows;
  for (const ordered_json& item : j) {
    StratumTableRow r;
    try {
      r.g = item.at("g").get<int>();
      r.phi = item.at("phi").get<std::string>();
      r.dim = item.at("dim").get<int>();
      r.a_number = item.at("a").get<int>();
      r.p_rank = item.at("f").get<int>();
      r.w = item.at("w").get<std::string>();
      r.word = item.at("word").get<std::string>();
      r.kraft = item.at("kraft").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad table row: ") + e.what());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string emit_dot(const strata::StratumPoset& poset) {
  std::ostringstream os;
  os << "digraph eo_strata {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box];\n";
  for (std::size_t i = 0; i < poset.nodes.size(); ++i)
    os << "  s" << i << " [label=\"" << phi_string(poset.nodes[i].phi) << " | " << poset.nodes[i].dim << "\"];\n";
  for (const auto& [from, to] : poset.cover_edges) os << "  s" << from << " -> s" << to << ";\n";
  os << "}\n";
  return os.str();
}

dieudonne::BT1Module read_module(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!j.is_object()) throw ParseError("module document must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "p" && key != "a" && key != "modulus" && key != "n" && key != "F" && key != "V" && key != "pairing")
      throw ParseError("unknown field: " + key);
  }
  if (!j.contains("p") || !j["p"].is_number_unsigned()) throw ParseError("field p (prime) is required");
  const std::uint64_t p = j["p"].get<std::uint64_t>();
  int a = 1;
  if (j.contains("a")) {
    if (!j["a"].is_number_unsigned()) throw ParseError("field a must be a positive integer");
    a = j["a"].get<int>();
  }
  if (a < 1) throw ParseError("field a must be >= 1");
  if (a > 1 && !j.contains("modulus")) throw ParseError("modulus is required when a > 1");
  if (a == 1 && j.contains("modulus")) throw ParseError("modulus is only allowed when a > 1");

  gf::FiniteField field = [&]() {
    try {
      if (a == 1) return gf::FiniteField(p);
      std::vector<std::uint64_t> modulus;
      for (const ordered_json& c : j["modulus"]) {
        if (!c.is_number_unsigned()) throw ParseError("modulus coefficients must be nonnegative integers");
        modulus.push_back(c.get<std::uint64_t>());
      }
      return gf::FiniteField(p, a, std::move(modulus));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("bad field: ") + e.what());
    }
  }();

  if (!j.contains("n") || !j["n"].is_number_unsigned()) throw ParseError("field n (dimension) is required");
  const int n = j["n"].get<int>();
  if (n < 1) throw ParseError("n must be >= 1");
  if (!j.contains("F")) throw ParseError("field F (matrix) is required");

  dieudonne::SemilinearMap frob{matrix_from_json(j["F"], field, n, "F"), 1};

  std::optional<linalg::Matrix> pairing;
  if (j.contains("pairing")) pairing = matrix_from_json(j["pairing"], field, n, "pairing");

  dieudonne::SemilinearMap versch{linalg::Matrix(field, n, n), -1};
  if (j.contains("V")) {
    versch.matrix = matrix_from_json(j["V"], field, n, "V");
  } else if (pairing) {
    try {
      versch = dieudonne::verschiebung_from_pairing(frob, *pairing);
    } catch (const std::invalid_argument&) {
      throw ParseError("V omitted but the pairing is degenerate; cannot derive V");
    }
  } else {
    throw ParseError("V is required when no pairing is given");
  }

  return dieudonne::BT1Module{std::move(field), n, std::move(frob), std::move(versch), std::move(pairing)};
}

std::string write_module(const dieudonne::BT1Module& m) {
  ordered_json j;
  j["p"] = m.field.characteristic();
  j["a"] = m.field.degree();
  if (m.field.degree() > 1) j["modulus"] = m.field.modulus();
  j["n"] = m.n;
  j["F"] = matrix_to_json(m.frobenius.matrix);
  j["V"] = matrix_to_json(m.verschiebung.matrix);
  if (m.pairing) j["pairing"] = matrix_to_json(*m.pairing);
  return j.dump(2) + "\n";
}

std::string phi_string(const strata::ElementarySequence& phi) { return join_ints(phi.values(), ','); }

std::string psi_string(const strata::FinalSequence& psi) { return join_ints(psi.values(), ','); }

std::string reduced_word_string(const weyl::SignedPermutation& w, const weyl::CoxeterDescriptor& desc) {
  return join_ints(weyl::reduced_word(w, desc), '-');
}

std::string kraft_string(const std::vector<strata::KraftWord>& words) {
  std::ostringstream os;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) os << ';';
    os << words[i].letters << '^' << words[i].multiplicity;
  }
  return os.str();
}

}  // namespace eo::formats
