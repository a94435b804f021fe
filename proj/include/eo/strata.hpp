#pragma once

/*
  Combinatorics of Ekedahl-Oort strata of principally polarized abelian
  varieties in characteristic p: elementary sequences phi and their final
  extensions psi, the permutations attached to a final filtration, the
  minimal Weyl coset representative and its length (= stratum dimension),
  Kraft words, and the stratum posets.

  The orientation of the Weyl-coset encoding (which parabolic quotient, which
  side) is pinned empirically: stratum() refuses to return a record whose
  representative length disagrees with sum(phi).
*/

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "eo/weyl.hpp"

namespace eo::strata {

// phi : {1..g} -> Z>=0 with phi(0) = 0 and phi(i-1) <= phi(i) <= phi(i-1)+1.
class ElementarySequence {
 public:
  explicit ElementarySequence(std::vector<int> phi);

  int g() const { return static_cast<int>(phi_.size()); }
  int at(int i) const;  // phi(i) for 0 <= i <= g
  const std::vector<int>& values() const { return phi_; }
  int sum() const;

  auto operator<=>(const ElementarySequence&) const = default;

 private:
  std::vector<int> phi_;
};

// psi : {1..2g} -> Z>=0 with 0/1 steps and psi(2g-i) = psi(i) + g - i.
class FinalSequence {
 public:
  explicit FinalSequence(std::vector<int> psi);

  int g() const { return static_cast<int>(psi_.size()) / 2; }
  int at(int i) const;  // psi(i) for 0 <= i <= 2g
  const std::vector<int>& values() const { return psi_; }
  bool rise_at(int i) const { return at(i) == at(i - 1) + 1; }

  auto operator<=>(const FinalSequence&) const = default;

 private:
  std::vector<int> psi_;
};

// All 2^g elementary sequences, sorted by (sum, lexicographic).
std::vector<ElementarySequence> enumerate_elementary(int g);

int dimension(const ElementarySequence& phi);  // sum phi(i)
int a_number(const ElementarySequence& phi);   // g - phi(g)
int p_rank(const ElementarySequence& phi);     // max{i : phi(i) = i}, 0 if none

// psi(i) = phi(i) for i <= g, psi(j) = psi(2g-j) + j - g above.
FinalSequence final_sequence(const ElementarySequence& phi);

// pi(i) = psi(i) on a rise, g + i - psi(i) on a flat. Satisfies
// pi(i) + pi(2g+1-i) = 2g+1.
weyl::Permutation frobenius_permutation(const FinalSequence& psi);

// pi'(i) = g + psi(i) on a rise, i - psi(i) on a flat. Same symmetry.
weyl::Permutation coset_permutation(const FinalSequence& psi);

// Decodes a symplectic-symmetric permutation of {1..2g} into W(C_g):
// w(i) = pi'(g+i) - g when positive side, else -(g+1-pi'(g+i)).
weyl::SignedPermutation to_weyl(const weyl::Permutation& pi_prime);

struct StratumRecord {
  int g;
  ElementarySequence phi;
  FinalSequence psi;
  weyl::Permutation frobenius_perm;
  weyl::Permutation coset_perm;
  weyl::SignedPermutation w_min;
  int dim;
  int a_number;
  int p_rank;
};

// Full pipeline for one stratum. Throws std::logic_error if the attached
// representative violates l(w_min) == sum(phi); that equality is the
// dimension formula and a failure signals a convention bug, not bad input.
StratumRecord stratum(const ElementarySequence& phi);

// Cyclic word over {F, V} in its lexicographically least rotation (F < V).
struct KraftWord {
  std::string letters;
  int multiplicity = 0;
  auto operator<=>(const KraftWord&) const = default;
};

// Cycle decomposition of pi with letter F on rises and V on flats; words are
// canonically rotated, aggregated, and sorted by letters.
std::vector<KraftWord> kraft_words(const weyl::Permutation& pi, const FinalSequence& psi);

enum class PosetOrder { pointwise, bruhat };

struct StratumPoset {
  PosetOrder order;
  std::vector<StratumRecord> nodes;                  // sorted by (dim, phi)
  std::vector<std::pair<int, int>> cover_edges;      // node indices, small -> large, sorted
};

// Hasse diagram of all strata of genus g under the chosen order; pointwise
// compares phi values, bruhat compares minimal representatives.
StratumPoset eo_poset(int g, PosetOrder order);

// Minimal-length representatives of (S_d x S_{n-d})\S_n with their lengths,
// sorted by (length, one-line lexicographic).
std::vector<std::pair<weyl::Permutation, int>> grassmannian_strata(int n, int d);

}  // namespace eo::strata
