#include "eo/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "eo/dieudonne.hpp"
#include "eo/formats.hpp"
#include "eo/strata.hpp"
#include "eo/weyl.hpp"

namespace eo::verify {

namespace {

struct Recorder {
  SuiteResult result;

  explicit Recorder(std::string name) { result.name = std::move(name); }

  void check(bool ok, const std::string& detail) {
    ++result.checks;
    if (!ok) {
      result.passed = false;
      result.failures.push_back(detail);
    }
  }
};

std::vector<std::int64_t> product_one_plus_q_to_i(int g) {
  std::vector<std::int64_t> poly = {1};
  for (int i = 1; i <= g; ++i) {
    std::vector<std::int64_t> next(poly.size() + static_cast<std::size_t>(i), 0);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k] += poly[k];
      next[k + static_cast<std::size_t>(i)] += poly[k];
    }
    poly = std::move(next);
  }
  return poly;
}

weyl::ParabolicSubset type_a_subset(const weyl::CoxeterDescriptor& desc) {
  std::vector<int> idx;
  for (int i = 1; i < desc.rank; ++i) idx.push_back(i);
  return weyl::ParabolicSubset(desc, std::move(idx));
}

}  // namespace

SuiteResult run_weyl(const Options& opts) {
  Recorder rec("weyl");
  for (int g = 1; g <= std::min(opts.max_g, 4); ++g) {
    weyl::CoxeterDescriptor desc(weyl::Family::C, g);
    for (const auto& [w, dist] : weyl::cayley_bfs(desc)) {
      rec.check(weyl::length(w) == dist, "length mismatch with BFS at g=" + std::to_string(g) + " w=" + to_string(w));
      rec.check(weyl::length(w) == weyl::length(w.inverse()),
                "length(w) != length(w^-1) at g=" + std::to_string(g) + " w=" + to_string(w));
    }
  }
  for (int g = 1; g <= opts.max_g; ++g) {
    weyl::CoxeterDescriptor desc(weyl::Family::C, g);
    weyl::ParabolicSubset j = type_a_subset(desc);
    const auto reps = weyl::min_coset_reps(desc, j);
    rec.check(reps.size() == (1ull << g), "coset representative count != 2^g at g=" + std::to_string(g));
    const auto coeffs = weyl::poincare_quotient(desc, j);
    rec.check(coeffs == product_one_plus_q_to_i(g),
              "Poincare quotient differs from prod(1+q^i) at g=" + std::to_string(g));
  }
  return rec.result;
}

SuiteResult run_strata(const Options& opts) {
  Recorder rec("strata");
  for (int g = 1; g <= opts.max_g; ++g) {
    weyl::CoxeterDescriptor desc(weyl::Family::C, g);
    std::set<weyl::SignedPermutation> seen;
    for (const strata::ElementarySequence& phi : strata::enumerate_elementary(g)) {
      strata::StratumRecord record = strata::stratum(phi);  // throws if l(w_min) != sum(phi)
      rec.check(record.dim == phi.sum(), "dimension mismatch at phi=" + formats::phi_string(phi));
      seen.insert(record.w_min);

      const int n = 2 * g;
      for (int i = 1; i <= n; ++i) {
        rec.check(record.frobenius_perm(i) + record.frobenius_perm(n + 1 - i) == n + 1,
                  "frobenius permutation not symplectic at phi=" + formats::phi_string(phi));
        rec.check(record.coset_perm(i) + record.coset_perm(n + 1 - i) == n + 1,
                  "coset permutation not symplectic at phi=" + formats::phi_string(phi));
      }
      int letters_f = 0, letters_v = 0;
      for (const strata::KraftWord& word : strata::kraft_words(record.frobenius_perm, record.psi)) {
        for (char ch : word.letters) (ch == 'F' ? letters_f : letters_v) += word.multiplicity;
      }
      rec.check(letters_f == g && letters_v == g, "Kraft letter counts differ from g at phi=" + formats::phi_string(phi));
    }
    if (g <= 6) {
      const auto reps = weyl::min_coset_reps(desc, type_a_subset(desc));
      rec.check(seen == std::set<weyl::SignedPermutation>(reps.begin(), reps.end()),
                "phi -> w_min is not a bijection onto the minimal representatives at g=" + std::to_string(g));
    }
  }
  for (int g = 1; g <= std::min(opts.max_g, 4); ++g) {
    const strata::StratumPoset pointwise = strata::eo_poset(g, strata::PosetOrder::pointwise);
    const strata::StratumPoset bruhat = strata::eo_poset(g, strata::PosetOrder::bruhat);
    rec.check(pointwise.cover_edges == bruhat.cover_edges,
              "pointwise and bruhat Hasse diagrams differ at g=" + std::to_string(g));
  }
  return rec.result;
}

SuiteResult run_dieudonne(const Options& opts) {
  Recorder rec("dieudonne");
  std::vector<gf::FiniteField> fields;
  for (std::uint64_t p : opts.primes) {
    fields.emplace_back(p);
    if (p == 2 || p == 3 || p == 5) fields.push_back(gf::FiniteField::with_builtin_modulus(p, 2));
  }
  for (int g = 1; g <= std::min(opts.max_g, 4); ++g) {
    for (const strata::ElementarySequence& phi : strata::enumerate_elementary(g)) {
      for (const gf::FiniteField& field : fields) {
        std::ostringstream tag;
        tag << "phi=" << formats::phi_string(phi) << " over F_" << field.order();
        try {
          dieudonne::BT1Module m = dieudonne::standard_module(phi, field);
          const dieudonne::FinalType ft = dieudonne::final_type(m);
          rec.check(ft.phi && *ft.phi == phi, "final type round trip fails at " + tag.str());
          rec.check(dieudonne::a_number(m) == strata::a_number(phi), "a-number mismatch at " + tag.str());
          rec.check(dieudonne::p_rank(m) == strata::p_rank(phi), "p-rank mismatch at " + tag.str());
        } catch (const std::exception& e) {
          rec.check(false, "exception at " + tag.str() + ": " + e.what());
        }
      }
    }
  }
  return rec.result;
}

SuiteResult run_census(const Options& opts) {
  Recorder rec("census");
  for (std::uint64_t p : opts.primes) {
    if (p > 13) throw std::invalid_argument("census supports primes <= 13");
    const int g_max = p == 2 ? std::min(2, opts.max_g) : 1;
    for (int g = 1; g <= g_max; ++g) {
      gf::FiniteField field(p);
      dieudonne::CensusOptions census_opts;
      census_opts.jobs = opts.jobs;
      std::ostringstream tag;
      tag << "p=" << p << " g=" << g;
      try {
        const dieudonne::CensusResult result = dieudonne::brute_force_census(field, g, census_opts);
        std::set<std::vector<int>> realized;
        for (const auto& [phi, count] : result.counts) realized.insert(phi);
        std::set<std::vector<int>> expected;
        for (const strata::ElementarySequence& phi : strata::enumerate_elementary(g))
          expected.insert(phi.values());
        rec.check(realized == expected, "realized final types differ from the elementary sequences at " + tag.str());
        rec.check(result.valid > 0 && result.valid < result.candidates,
                  "implausible census totals at " + tag.str());
      } catch (const std::invalid_argument& e) {
        rec.check(false, "census failed at " + tag.str() + ": " + e.what());
      }
    }
  }
  return rec.result;
}

std::vector<SuiteResult> run_suites(const std::string& which, const Options& opts) {
  if (which == "weyl") return {run_weyl(opts)};
  if (which == "strata") return {run_strata(opts)};
  if (which == "dieudonne") return {run_dieudonne(opts)};
  if (which == "census") return {run_census(opts)};
  if (which == "all") return {run_weyl(opts), run_strata(opts), run_dieudonne(opts), run_census(opts)};
  throw std::invalid_argument("unknown suite: " + which);
}

}  // namespace eo::verify
