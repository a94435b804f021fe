#include "eo/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "eo/dieudonne.hpp"
#include "eo/formats.hpp"
#include "eo/strata.hpp"
#include "eo/verify.hpp"
#include "eo/weyl.hpp"

namespace eo::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      const int v = std::stoi(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(what);
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument(what + " must be a comma-separated list of integers, got \"" + text + "\"");
    }
  }
  if (out.empty()) throw std::invalid_argument(what + " must be nonempty");
  return out;
}

// Runs fn(i) for i in [0, count), fanning out to the requested workers.
// Results must be written to per-index slots so the outcome does not depend
// on the thread count.
void parallel_for(int count, int jobs, const std::function<void(int)>& fn) {
  jobs = std::max(1, std::min(jobs, count));
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> threads;
  for (int t = 0; t < jobs; ++t)
    threads.emplace_back([&fn, t, count, jobs] {
      for (int i = t; i < count; i += jobs) fn(i);
    });
  for (std::thread& th : threads) th.join();
}

std::vector<strata::StratumRecord> all_strata(int g, int jobs) {
  const std::vector<strata::ElementarySequence> phis = strata::enumerate_elementary(g);
  std::vector<std::optional<strata::StratumRecord>> slots(phis.size());
  parallel_for(static_cast<int>(phis.size()), jobs,
               [&](int i) { slots[static_cast<std::size_t>(i)] = strata::stratum(phis[static_cast<std::size_t>(i)]); });
  std::vector<strata::StratumRecord> records;
  records.reserve(slots.size());
  for (std::optional<strata::StratumRecord>& slot : slots) records.push_back(std::move(*slot));
  return records;
}

void write_output(const std::string& bytes, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << bytes;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file: " + path);
  file << bytes;
}

int cmd_enumerate(int g, const std::string& format_tag, const std::string& out_path, int jobs, std::ostream& out) {
  const formats::TableFormat format = formats::parse_table_format(format_tag);
  write_output(formats::emit_table(all_strata(g, jobs), format), out_path, out);
  return kExitOk;
}

int cmd_stratum(const std::string& phi_text, std::ostream& out) {
  const strata::ElementarySequence phi(parse_int_list(phi_text, "phi"));
  const strata::StratumRecord record = strata::stratum(phi);
  const weyl::CoxeterDescriptor desc(weyl::Family::C, record.g);
  out << "phi    " << formats::phi_string(record.phi) << "\n";
  out << "psi    " << formats::psi_string(record.psi) << "\n";
  out << "dim    " << record.dim << "\n";
  out << "a      " << record.a_number << "\n";
  out << "f      " << record.p_rank << "\n";
  out << "w_min  " << weyl::to_string(record.w_min) << "\n";
  out << "word   " << formats::reduced_word_string(record.w_min, desc) << "\n";
  out << "kraft  " << formats::kraft_string(strata::kraft_words(record.frobenius_perm, record.psi)) << "\n";
  return kExitOk;
}

int cmd_poset(int g, const std::string& order_tag, const std::string& dot_path, std::ostream& out) {
  strata::PosetOrder order;
  if (order_tag == "pointwise")
    order = strata::PosetOrder::pointwise;
  else if (order_tag == "bruhat")
    order = strata::PosetOrder::bruhat;
  else
    throw std::invalid_argument("unknown order: " + order_tag);

  const strata::StratumPoset poset = strata::eo_poset(g, order);
  if (!dot_path.empty()) write_output(formats::emit_dot(poset), dot_path, out);
  out << "nodes " << poset.nodes.size() << "\n";
  out << "edges " << poset.cover_edges.size() << "\n";
  if (g <= 4) {
    const strata::StratumPoset other =
        strata::eo_poset(g, order == strata::PosetOrder::pointwise ? strata::PosetOrder::bruhat
                                                                   : strata::PosetOrder::pointwise);
    if (poset.cover_edges == other.cover_edges) {
      out << "pointwise vs bruhat: agree\n";
    } else {
      out << "pointwise vs bruhat: DIFFER\n";
      for (const auto& [a, b] : poset.cover_edges)
        if (std::find(other.cover_edges.begin(), other.cover_edges.end(), std::make_pair(a, b)) ==
            other.cover_edges.end())
          out << "  only " << order_tag << ": " << formats::phi_string(poset.nodes[static_cast<std::size_t>(a)].phi)
              << " < " << formats::phi_string(poset.nodes[static_cast<std::size_t>(b)].phi) << "\n";
      for (const auto& [a, b] : other.cover_edges)
        if (std::find(poset.cover_edges.begin(), poset.cover_edges.end(), std::make_pair(a, b)) ==
            poset.cover_edges.end())
          out << "  missing from " << order_tag << ": "
              << formats::phi_string(poset.nodes[static_cast<std::size_t>(a)].phi) << " < "
              << formats::phi_string(poset.nodes[static_cast<std::size_t>(b)].phi) << "\n";
    }
  } else {
    out << "pointwise vs bruhat: not compared (bruhat order supports g <= 4)\n";
  }
  return kExitOk;
}

int cmd_classify(const std::string& module_path, std::ostream& out) {
  std::ifstream file(module_path, std::ios::binary);
  if (!file) throw formats::ParseError("cannot open module file: " + module_path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  const dieudonne::BT1Module m = formats::read_module(buffer.str());

  const std::vector<dieudonne::Violation> violations = dieudonne::validate(m);
  if (!violations.empty()) {
    out << "validation FAILED\n";
    for (const dieudonne::Violation& v : violations) out << "  " << v.rule << ": " << v.witness << "\n";
    return kExitMathFailure;
  }
  out << "validation OK\n";

  const dieudonne::Flag flag = dieudonne::canonical_filtration(m);
  out << "filtration dims ";
  for (std::size_t i = 0; i < flag.size(); ++i) out << (i ? "," : "") << flag[i].rows();
  out << "\n";

  const dieudonne::FinalType ft = dieudonne::final_type(m);
  out << "psi ";
  for (std::size_t i = 0; i < ft.psi.size(); ++i) out << (i ? "," : "") << ft.psi[i];
  out << "\n";
  if (ft.phi) {
    const strata::ElementarySequence& phi = *ft.phi;
    out << "phi " << formats::phi_string(phi) << "\n";
    out << "dim " << strata::dimension(phi) << "\n";
  }
  out << "a " << dieudonne::a_number(m) << "\n";
  out << "f " << dieudonne::p_rank(m) << "\n";
  if (ft.phi) {
    const strata::FinalSequence psi = strata::final_sequence(*ft.phi);
    out << "kraft " << formats::kraft_string(strata::kraft_words(strata::frobenius_permutation(psi), psi)) << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, int max_g, const std::string& primes_text, int jobs, std::ostream& out) {
  verify::Options opts;
  opts.max_g = max_g;
  opts.jobs = jobs;
  opts.primes.clear();
  for (int p : parse_int_list(primes_text, "primes")) {
    if (p < 2) throw std::invalid_argument("primes must be >= 2");
    opts.primes.push_back(static_cast<std::uint64_t>(p));
  }

  bool all_passed = true;
  for (const verify::SuiteResult& result : verify::run_suites(suite, opts)) {
    out << result.name << ": " << (result.passed ? "PASS" : "FAIL") << " (" << result.checks << " checks)\n";
    for (const std::string& failure : result.failures) out << "  " << failure << "\n";
    all_passed = all_passed && result.passed;
  }
  return all_passed ? kExitOk : kExitMathFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ekedahl-Oort stratification combinatorics"};
  app.require_subcommand(1);

  int g = 1;
  std::string format_tag = "table";
  std::string out_path;
  int jobs = 1;
  std::string phi_text;
  std::string order_tag = "pointwise";
  std::string dot_path;
  std::string module_path;
  std::string suite = "all";
  int max_g = 4;
  std::string primes_text = "2";

  CLI::App* enumerate = app.add_subcommand("enumerate", "Tabulate all strata of genus g");
  enumerate->add_option("--g", g, "genus, 1..8")->required()->check(CLI::Range(1, 8));
  enumerate->add_option("--format", format_tag, "csv | structured | table");
  enumerate->add_option("--out", out_path, "write the table to a file instead of stdout");
  enumerate->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));

  CLI::App* stratum = app.add_subcommand("stratum", "Describe the stratum of one elementary sequence");
  stratum->add_option("--phi", phi_text, "comma-separated values, e.g. 0,1,1")->required();

  CLI::App* poset = app.add_subcommand("poset", "Hasse diagram of the stratum poset");
  poset->add_option("--g", g, "genus")->required()->check(CLI::Range(1, 8));
  poset->add_option("--order", order_tag, "pointwise | bruhat");
  poset->add_option("--dot", dot_path, "write DOT output to this path");
  poset->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));

  CLI::App* classify = app.add_subcommand("classify", "Classify a module document");
  classify->add_option("--module", module_path, "path to a module document")->required();

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the self-check suites");
  verify_cmd->add_option("--suite", suite, "all | weyl | strata | dieudonne | census");
  verify_cmd->add_option("--max-g", max_g, "largest genus exercised")->check(CLI::Range(1, 8));
  verify_cmd->add_option("--primes", primes_text, "comma-separated primes, e.g. 2,3");
  verify_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(g, format_tag, out_path, jobs, out);
    if (stratum->parsed()) return cmd_stratum(phi_text, out);
    if (poset->parsed()) return cmd_poset(g, order_tag, dot_path, out);
    if (classify->parsed()) return cmd_classify(module_path, out);
    if (verify_cmd->parsed()) return cmd_verify(suite, max_g, primes_text, jobs, out);
    err << "error: no subcommand\n";
    return kExitUsage;
  } catch (const formats::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kExitMathFailure;
  }
}

}  // namespace eo::cli
