#pragma once

/*
  Dieudonne modules of BT_1 group schemes over a small finite field k:
  a k-vector space N with a sigma-semilinear F and a sigma^{-1}-semilinear V
  such that ker F = im V and ker V = im F, optionally equipped with a
  nondegenerate alternating pairing satisfying <F x, y> = sigma(<x, V y>).

  Provides validation, the canonical filtration (saturation of {0, N} under
  M -> F(M) and M -> V^{-1}(M)), extraction of the final type, a-number and
  p-rank, construction of the standard module of an elementary sequence, and
  an exhaustive census of F-matrices at tiny parameters.
*/

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eo/gf.hpp"
#include "eo/linalg.hpp"
#include "eo/strata.hpp"

namespace eo::dieudonne {

// T(x) = matrix . sigma^twist(x), so T(lambda x) = sigma^twist(lambda) T(x).
struct SemilinearMap {
  linalg::Matrix matrix;
  int twist;
};

std::vector<linalg::Matrix::Elt> semilinear_apply(const SemilinearMap& t, const std::vector<linalg::Matrix::Elt>& x);

// T(M) for a subspace M, canonical basis. Equals span{T(b) : b basis of M}.
linalg::Matrix semilinear_image(const SemilinearMap& t, const linalg::Matrix& subspace);

// {x : T(x) in M}, canonical basis. Solved via y = sigma^twist(x).
linalg::Matrix semilinear_preimage(const SemilinearMap& t, const linalg::Matrix& subspace);

struct BT1Module {
  gf::FiniteField field;
  int n = 0;
  SemilinearMap frobenius;      // twist +1
  SemilinearMap verschiebung;   // twist -1
  std::optional<linalg::Matrix> pairing;
};

struct Violation {
  std::string rule;
  std::string witness;
};

// Checks every BT1Module invariant; an empty result means valid. Violations
// are data, not errors.
std::vector<Violation> validate(const BT1Module& m);

// The antidiagonal pairing <e_i, e_{n+1-i}> = 1 for i <= g, -1 for i > g.
linalg::Matrix standard_pairing(const gf::FiniteField& field, int g);

// The unique V with <x, V y> = sigma^{-1}(<F x, y>) for a nondegenerate
// pairing.
SemilinearMap verschiebung_from_pairing(const SemilinearMap& frobenius, const linalg::Matrix& pairing);

// Increasing chain 0 = M_0 < ... < M_r = N of canonical bases.
using Flag = std::vector<linalg::Matrix>;

// Smallest set of subspaces containing {0, N} closed under F and V^{-1},
// sorted by dimension. Throws std::logic_error if the saturation is not
// totally ordered, which cannot happen for a valid module.
Flag canonical_filtration(const BT1Module& m);

struct FinalType {
  std::vector<int> psi;                            // psi(1..n), psi(0) = 0 implicit
  std::optional<strata::ElementarySequence> phi;   // present iff the module is polarized
};

// dim F(M_i) along the canonical flag, interpolated to every index; F must
// be zero or injective on each graded piece. For a polarized module the
// restriction to {1..g} is the elementary sequence of the stratum.
FinalType final_type(const BT1Module& m);

int a_number(const BT1Module& m);  // dim(ker F ∩ ker V)
int p_rank(const BT1Module& m);    // dim of the stable image of F

// Standard module of phi over the given field: F maps e_i to e_{pi(i)} on
// rises of psi and to 0 on flats, with the standard pairing and V derived by
// adjointness. Construction is self-checking: the result passes validate()
// and has final type phi.
BT1Module standard_module(const strata::ElementarySequence& phi, const gf::FiniteField& field);

struct CensusOptions {
  int jobs = 1;
  std::uint64_t budget = 1ull << 26;
};

struct CensusResult {
  std::uint64_t candidates = 0;
  std::uint64_t valid = 0;
  std::map<std::vector<int>, std::uint64_t> counts;  // phi values -> number of valid F-matrices
};

// Enumerates every n x n matrix over F_p (n = 2g) as a candidate F, derives
// V from the standard pairing, and buckets the valid modules by final type.
CensusResult brute_force_census(const gf::FiniteField& prime_field, int g, const CensusOptions& opts = {});

}  // namespace eo::dieudonne
