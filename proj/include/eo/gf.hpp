#pragma once

/*
  Small finite fields F_{p^a} with explicit Frobenius. Elements are encoded
  as residue codes: x = sum c_i alpha^i  <->  code = sum c_i p^i with digits
  c_i in [0, p). For prime fields the code is just the residue. Extension
  fields require a monic irreducible modulus, checked by trial factoring at
  construction; a handful of small moduli are built in.
*/

#include <cstdint>
#include <vector>

namespace eo::gf {

class FiniteField {
 public:
  using Elt = std::uint64_t;

  explicit FiniteField(std::uint64_t p);
  FiniteField(std::uint64_t p, int degree, std::vector<std::uint64_t> modulus);

  // F_4, F_8, F_9, F_25. Other extensions need an explicit modulus.
  static FiniteField with_builtin_modulus(std::uint64_t p, int degree);

  std::uint64_t characteristic() const { return p_; }
  int degree() const { return degree_; }
  std::uint64_t order() const { return order_; }
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }  // empty for degree 1

  bool is_element(Elt x) const;

  Elt zero() const { return 0; }
  Elt one() const { return 1; }
  Elt from_int(std::int64_t v) const;  // image of an integer in the prime subfield

  Elt add(Elt a, Elt b) const;
  Elt sub(Elt a, Elt b) const;
  Elt neg(Elt a) const;
  Elt mul(Elt a, Elt b) const;
  Elt inv(Elt a) const;
  Elt pow(Elt a, std::uint64_t e) const;

  // sigma^e with sigma(x) = x^p; e may be negative (sigma has order degree).
  Elt frobenius(Elt x, int e = 1) const;

  std::vector<Elt> elements() const;  // all codes in increasing order

  bool operator==(const FiniteField&) const = default;

 private:
  std::uint64_t p_ = 0;
  int degree_ = 1;
  std::uint64_t order_ = 0;
  std::vector<std::uint64_t> modulus_;  // coefficients c_0..c_degree, monic
};

}  // namespace eo::gf
