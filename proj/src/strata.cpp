#include "eo/strata.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace eo::strata {

namespace {

weyl::ParabolicSubset type_a_parabolic(int g) {
  weyl::CoxeterDescriptor desc(weyl::Family::C, g);
  std::vector<int> idx;
  for (int i = 1; i < g; ++i) idx.push_back(i);
  return weyl::ParabolicSubset(desc, std::move(idx));
}

std::string canonical_rotation(const std::string& word) {
  std::string best = word;
  for (std::size_t k = 1; k < word.size(); ++k) {
    std::string rot = word.substr(k) + word.substr(0, k);
    if (rot < best) best = rot;
  }
  return best;
}

}  // namespace

ElementarySequence::ElementarySequence(std::vector<int> phi) : phi_(std::move(phi)) {
  if (phi_.empty()) throw std::invalid_argument("phi must have g >= 1 entries");
  int prev = 0;
  for (std::size_t i = 0; i < phi_.size(); ++i) {
    const int v = phi_[i];
    if (v < prev || v > prev + 1) {
      std::ostringstream os;
      if (v > prev + 1)
        os << "phi(" << i + 1 << ")=" << v << " exceeds phi(" << i << ")+1";
      else
        os << "phi(" << i + 1 << ")=" << v << " is below phi(" << i << ")";
      throw std::invalid_argument(os.str());
    }
    prev = v;
  }
}

int ElementarySequence::at(int i) const {
  if (i < 0 || i > g()) throw std::invalid_argument("phi index out of range");
  return i == 0 ? 0 : phi_[i - 1];
}

int ElementarySequence::sum() const {
  int s = 0;
  for (int v : phi_) s += v;
  return s;
}

FinalSequence::FinalSequence(std::vector<int> psi) : psi_(std::move(psi)) {
  if (psi_.empty() || psi_.size() % 2 != 0) throw std::invalid_argument("psi must have 2g entries");
  int prev = 0;
  for (std::size_t i = 0; i < psi_.size(); ++i) {
    const int v = psi_[i];
    if (v < prev || v > prev + 1) throw std::invalid_argument("psi steps must be 0 or 1");
    prev = v;
  }
  const int gg = g();
  for (int i = 0; i <= gg; ++i)
    if (at(2 * gg - i) != at(i) + gg - i) throw std::invalid_argument("psi violates the duality relation");
}

int FinalSequence::at(int i) const {
  if (i < 0 || i > 2 * g()) throw std::invalid_argument("psi index out of range");
  return i == 0 ? 0 : psi_[i - 1];
}

std::vector<ElementarySequence> enumerate_elementary(int g) {
  if (g < 1) throw std::invalid_argument("g must be >= 1");
  if (g > 25) throw std::invalid_argument("g too large for enumeration");
  std::vector<ElementarySequence> out;
  out.reserve(1ull << g);
  for (std::uint64_t bits = 0; bits < (1ull << g); ++bits) {
    std::vector<int> phi(g);
    int c = 0;
    for (int i = 0; i < g; ++i) {
      c += (bits >> i) & 1;
      phi[i] = c;
    }
    out.emplace_back(std::move(phi));
  }
  std::sort(out.begin(), out.end(), [](const ElementarySequence& a, const ElementarySequence& b) {
    const int sa = a.sum(), sb = b.sum();
    return sa != sb ? sa < sb : a < b;
  });
  return out;
}

int dimension(const ElementarySequence& phi) { return phi.sum(); }

int a_number(const ElementarySequence& phi) { return phi.g() - phi.at(phi.g()); }

int p_rank(const ElementarySequence& phi) {
  int f = 0;
  for (int i = 1; i <= phi.g(); ++i)
    if (phi.at(i) == i) f = i;
  return f;
}

FinalSequence final_sequence(const ElementarySequence& phi) {
  const int g = phi.g();
  std::vector<int> psi(2 * g);
  for (int i = 1; i <= g; ++i) psi[i - 1] = phi.at(i);
  for (int j = g + 1; j <= 2 * g; ++j) {
    const int mirrored = 2 * g - j;  // in [0, g)
    psi[j - 1] = (mirrored == 0 ? 0 : psi[mirrored - 1]) + j - g;
  }
  return FinalSequence(std::move(psi));
}

weyl::Permutation frobenius_permutation(const FinalSequence& psi) {
  const int g = psi.g();
  std::vector<int> pi(2 * g);
  for (int i = 1; i <= 2 * g; ++i) pi[i - 1] = psi.rise_at(i) ? psi.at(i) : g + i - psi.at(i);
  return weyl::Permutation(std::move(pi));
}

weyl::Permutation coset_permutation(const FinalSequence& psi) {
  const int g = psi.g();
  std::vector<int> pi(2 * g);
  for (int i = 1; i <= 2 * g; ++i) pi[i - 1] = psi.rise_at(i) ? g + psi.at(i) : i - psi.at(i);
  return weyl::Permutation(std::move(pi));
}

weyl::SignedPermutation to_weyl(const weyl::Permutation& pi_prime) {
  const int n = pi_prime.n();
  if (n % 2 != 0) throw std::invalid_argument("permutation degree must be even");
  const int g = n / 2;
  for (int i = 1; i <= n; ++i)
    if (pi_prime(i) + pi_prime(n + 1 - i) != n + 1)
      throw std::invalid_argument("permutation is not symplectic-symmetric");
  std::vector<int> w(g);
  for (int i = 1; i <= g; ++i) {
    const int v = pi_prime(g + i);
    w[i - 1] = v > g ? v - g : -(g + 1 - v);
  }
  return weyl::SignedPermutation(std::move(w));
}

StratumRecord stratum(const ElementarySequence& phi) {
  const int g = phi.g();
  FinalSequence psi = final_sequence(phi);
  weyl::Permutation pi = frobenius_permutation(psi);
  weyl::Permutation pi_prime = coset_permutation(psi);
  weyl::SignedPermutation w_min = weyl::min_rep(to_weyl(pi_prime), type_a_parabolic(g));
  const int dim = phi.sum();
  if (weyl::length(w_min) != dim) {
    std::ostringstream os;
    os << "dimension formula violated: l(w_min)=" << weyl::length(w_min) << " but sum(phi)=" << dim;
    throw std::logic_error(os.str());
  }
  return StratumRecord{g,   phi,           psi, std::move(pi), std::move(pi_prime), std::move(w_min),
                       dim, a_number(phi), p_rank(phi)};
}

std::vector<KraftWord> kraft_words(const weyl::Permutation& pi, const FinalSequence& psi) {
  if (pi.n() != 2 * psi.g()) throw std::invalid_argument("permutation degree does not match psi");
  if (!(pi == frobenius_permutation(psi)))
    throw std::invalid_argument("permutation is not the one attached to psi");
  std::map<std::string, int> agg;
  for (const std::vector<int>& cycle : pi.cycles()) {
    std::string word;
    for (int i : cycle) word += psi.rise_at(i) ? 'F' : 'V';
    ++agg[canonical_rotation(word)];
  }
  std::vector<KraftWord> out;
  for (const auto& [letters, mult] : agg) out.push_back({letters, mult});
  return out;
}

StratumPoset eo_poset(int g, PosetOrder order) {
  if (g < 1) throw std::invalid_argument("g must be >= 1");
  if (order == PosetOrder::pointwise && g > 8) throw std::invalid_argument("pointwise poset supports g <= 8");
  if (order == PosetOrder::bruhat && g > 4) throw std::invalid_argument("bruhat poset supports g <= 4");

  StratumPoset poset;
  poset.order = order;
  for (const ElementarySequence& phi : enumerate_elementary(g)) poset.nodes.push_back(stratum(phi));

  const int count = static_cast<int>(poset.nodes.size());
  weyl::CoxeterDescriptor desc(weyl::Family::C, g);
  auto leq = [&](int a, int b) {
    if (order == PosetOrder::pointwise) {
      const std::vector<int>& pa = poset.nodes[a].phi.values();
      const std::vector<int>& pb = poset.nodes[b].phi.values();
      for (int i = 0; i < g; ++i)
        if (pa[i] > pb[i]) return false;
      return true;
    }
    return weyl::bruhat_leq(poset.nodes[a].w_min, poset.nodes[b].w_min, desc);
  };

  std::vector<std::vector<bool>> strictly(count, std::vector<bool>(count, false));
  for (int a = 0; a < count; ++a)
    for (int b = 0; b < count; ++b)
      if (a != b && leq(a, b)) strictly[a][b] = true;

  for (int a = 0; a < count; ++a) {
    for (int b = 0; b < count; ++b) {
      if (!strictly[a][b]) continue;
      bool cover = true;
      for (int c = 0; c < count && cover; ++c)
        if (strictly[a][c] && strictly[c][b]) cover = false;
      if (cover) poset.cover_edges.emplace_back(a, b);
    }
  }
  std::sort(poset.cover_edges.begin(), poset.cover_edges.end());
  return poset;
}

std::vector<std::pair<weyl::Permutation, int>> grassmannian_strata(int n, int d) {
  if (n < 1 || n > 9) throw std::invalid_argument("n out of supported range");
  if (d < 0 || d > n) throw std::invalid_argument("d must satisfy 0 <= d <= n");
  if (n == 1) return {{weyl::Permutation::identity(1), 0}};
  weyl::CoxeterDescriptor desc(weyl::Family::A, n - 1);
  std::vector<int> idx;
  for (int i = 1; i < n; ++i)
    if (i != d) idx.push_back(i);
  weyl::ParabolicSubset j(desc, std::move(idx));
  std::vector<std::pair<weyl::Permutation, int>> out;
  for (const weyl::SignedPermutation& w : weyl::min_coset_reps(desc, j))
    out.emplace_back(weyl::Permutation(w.values()), weyl::length(w));
  return out;
}

}  // namespace eo::strata
