#pragma once

/*
  Weyl groups of types A_{n-1} and C_g realized as (signed) permutation
  groups: products, Coxeter length, descents, parabolic quotients, Bruhat
  order and Poincare polynomials of quotients.

  Conventions, fixed once and guarded by the Cayley-BFS oracle:
    - elements are stored in one-line notation, never as reduced words;
    - for C_g the simple reflections are s_0 = sign change in position 1 and
      s_i = transposition of positions (i, i+1) for 1 <= i <= g-1;
    - for A_{n-1} the simple indices are 1..n-1 with the same meaning, acting
      on plain permutations of {1..n};
    - cosets are W_J\W, represented by their unique element without a left
      descent in J.
*/

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace eo::weyl {

enum class Family { A, C };
enum class Side { left, right };

// Coxeter datum: W(A_rank) permutes {1..rank+1}, W(C_rank) signed-permutes
// {1..rank}. degree() is the size of the permuted set.
struct CoxeterDescriptor {
  Family family;
  int rank;

  CoxeterDescriptor(Family family, int rank);

  int degree() const;
  std::vector<int> simple_indices() const;
  bool is_simple_index(int i) const;
  std::uint64_t group_order() const;

  bool operator==(const CoxeterDescriptor&) const = default;
};

// Subset of the simple-reflection indices of a fixed descriptor.
class ParabolicSubset {
 public:
  ParabolicSubset(CoxeterDescriptor desc, std::vector<int> indices);
  static ParabolicSubset full(const CoxeterDescriptor& desc);
  static ParabolicSubset empty(const CoxeterDescriptor& desc);

  const CoxeterDescriptor& descriptor() const { return desc_; }
  const std::vector<int>& indices() const { return indices_; }  // sorted, unique
  bool contains(int i) const;

 private:
  CoxeterDescriptor desc_;
  std::vector<int> indices_;
};

// Element of W(C_g) in one-line notation: w(i) = values[i-1] for 1 <= i <= g,
// extended to negative arguments by w(-i) = -w(i). An element with no
// negative entries is an ordinary permutation; the type-A operations act on
// exactly those.
class SignedPermutation {
 public:
  explicit SignedPermutation(std::vector<int> values);
  static SignedPermutation identity(int rank);
  static SignedPermutation simple_reflection(int rank, int index);

  int rank() const { return static_cast<int>(values_.size()); }
  int operator()(int i) const;  // i in {-rank..-1, 1..rank}
  const std::vector<int>& values() const { return values_; }
  bool is_identity() const;
  bool is_unsigned() const;  // no negative entries
  SignedPermutation inverse() const;

  auto operator<=>(const SignedPermutation&) const = default;

 private:
  std::vector<int> values_;
};

// (u*w)(i) = u(w(i)).
SignedPermutation operator*(const SignedPermutation& u, const SignedPermutation& w);

// Bijection of {1..n} in one-line notation. Carrier for the permutations
// attached to final sequences and for type-A quotient output.
class Permutation {
 public:
  explicit Permutation(std::vector<int> values);
  static Permutation identity(int n);

  int n() const { return static_cast<int>(values_.size()); }
  int operator()(int i) const;  // i in {1..n}
  const std::vector<int>& values() const { return values_; }
  Permutation inverse() const;

  // Cycles in orbit order (i, p(i), p(p(i)), ...); each cycle starts at its
  // smallest member and cycles are listed by increasing smallest member.
  std::vector<std::vector<int>> cycles() const;

  SignedPermutation as_signed() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> values_;
};

// Coxeter length. Closed form: inversions of the one-line word plus the sum
// of |w(i)| over the negative entries; for unsigned elements this is the
// inversion count of type A.
int length(const SignedPermutation& w);

// Graph distance from the identity in the Cayley graph generated by the
// simple reflections of desc. Exhaustive; requires group_order() small.
int cayley_bfs_length(const SignedPermutation& w, const CoxeterDescriptor& desc);

// Every element with its Cayley distance, in BFS discovery order.
std::vector<std::pair<SignedPermutation, int>> cayley_bfs(const CoxeterDescriptor& desc);

// Reduced word as simple-reflection indices, computed by greedy right-descent
// stripping (smallest descent first).
std::vector<int> reduced_word(const SignedPermutation& w, const CoxeterDescriptor& desc);

// Right descents {i : l(w s_i) < l(w)} or left descents {i : l(s_i w) < l(w)},
// sorted ascending.
std::vector<int> descents(const SignedPermutation& w, const CoxeterDescriptor& desc, Side side);

// Unique minimal element of W_J w, reached by stripping left descents in J.
SignedPermutation min_rep(const SignedPermutation& w, const ParabolicSubset& j);

// All elements with no left descent in J: the minimal-length representatives
// of W_J\W, sorted by (length, one-line lexicographic).
std::vector<SignedPermutation> min_coset_reps(const CoxeterDescriptor& desc, const ParabolicSubset& j);

// Coefficient k = number of minimal coset representatives of length k.
std::vector<std::int64_t> poincare_quotient(const CoxeterDescriptor& desc, const ParabolicSubset& j);

// u <= w in Bruhat order, by the lifting property along a fixed greedy
// reduced word of w.
bool bruhat_leq(const SignedPermutation& u, const SignedPermutation& w, const CoxeterDescriptor& desc);

// Streams the whole group in a fixed deterministic order.
void for_each_element(const CoxeterDescriptor& desc, const std::function<void(const SignedPermutation&)>& fn);

std::string to_string(const SignedPermutation& w);  // "-2,-1"
std::string to_string(const Permutation& p);        // "3,1,4,2"
std::ostream& operator<<(std::ostream& os, const SignedPermutation& w);
std::ostream& operator<<(std::ostream& os, const Permutation& p);

}  // namespace eo::weyl
