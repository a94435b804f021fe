#include "eo/gf.hpp"

#include <algorithm>
#include <stdexcept>

namespace eo::gf {

namespace {

constexpr std::uint64_t kMaxPrime = 1ull << 31;
constexpr std::uint64_t kMaxExtensionOrder = 1ull << 20;

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

using Poly = std::vector<std::uint64_t>;  // coefficients mod p, low degree first

void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// f mod g over F_p, g nonzero.
Poly poly_mod(Poly f, const Poly& g, std::uint64_t p) {
  poly_trim(f);
  const std::size_t dg = g.size() - 1;
  std::uint64_t lead_inv = 1;
  {
    // inverse of g's leading coefficient mod p (p prime)
    std::uint64_t lead = g.back() % p;
    std::uint64_t r = 1, base = lead, e = p - 2;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    lead_inv = r;
  }
  while (f.size() > dg) {
    const std::uint64_t c = f.back() * lead_inv % p;
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      std::uint64_t sub = c * g[i] % p;
      f[shift + i] = (f[shift + i] + p - sub) % p;
    }
    poly_trim(f);
    if (f.empty()) break;
  }
  return f;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& g, std::uint64_t p) {
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(prod), g, p);
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& f, std::uint64_t p) {
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1) return false;
  for (int d = 1; 2 * d <= deg; ++d) {
    // enumerate monic divisor candidates of degree d by counting in base p
    std::uint64_t total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    for (std::uint64_t code = 0; code < total; ++code) {
      Poly g(static_cast<std::size_t>(d) + 1, 0);
      std::uint64_t c = code;
      for (int i = 0; i < d; ++i) {
        g[static_cast<std::size_t>(i)] = c % p;
        c /= p;
      }
      g[static_cast<std::size_t>(d)] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(std::uint64_t p) : p_(p), degree_(1), order_(p) {
  if (p < 2 || p > kMaxPrime || !is_prime(p)) throw std::invalid_argument("characteristic must be a prime <= 2^31");
}

FiniteField::FiniteField(std::uint64_t p, int degree, std::vector<std::uint64_t> modulus)
    : p_(p), degree_(degree), modulus_(std::move(modulus)) {
  if (p < 2 || p > kMaxPrime || !is_prime(p)) throw std::invalid_argument("characteristic must be a prime <= 2^31");
  if (degree_ < 1) throw std::invalid_argument("extension degree must be >= 1");
  if (degree_ == 1) {
    if (!modulus_.empty()) throw std::invalid_argument("prime field takes no modulus");
    order_ = p_;
    return;
  }
  order_ = 1;
  for (int i = 0; i < degree_; ++i) {
    if (order_ > kMaxExtensionOrder / p_) throw std::invalid_argument("extension field too large");
    order_ *= p_;
  }
  if (modulus_.size() != static_cast<std::size_t>(degree_) + 1)
    throw std::invalid_argument("modulus must have degree+1 coefficients");
  for (std::uint64_t& c : modulus_) c %= p_;
  if (modulus_.back() != 1) throw std::invalid_argument("modulus must be monic");
  if (!is_irreducible(modulus_, p_)) throw std::invalid_argument("modulus is reducible");
}

FiniteField FiniteField::with_builtin_modulus(std::uint64_t p, int degree) {
  if (p == 2 && degree == 2) return FiniteField(2, 2, {1, 1, 1});
  if (p == 2 && degree == 3) return FiniteField(2, 3, {1, 1, 0, 1});
  if (p == 3 && degree == 2) return FiniteField(3, 2, {1, 0, 1});
  if (p == 5 && degree == 2) return FiniteField(5, 2, {1, 1, 1});
  throw std::invalid_argument("no built-in modulus for this field; supply one explicitly");
}

bool FiniteField::is_element(Elt x) const {
  // codes are base-p digit strings, so the code space is exactly [0, p^a)
  return x < order_;
}

FiniteField::Elt FiniteField::from_int(std::int64_t v) const {
  const std::int64_t p = static_cast<std::int64_t>(p_);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<Elt>(r);
}

FiniteField::Elt FiniteField::add(Elt a, Elt b) const {
  if (degree_ == 1) return (a + b) % p_;
  Elt out = 0, mult = 1;
  for (int i = 0; i < degree_; ++i) {
    out += (a % p_ + b % p_) % p_ * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return out;
}

FiniteField::Elt FiniteField::neg(Elt a) const {
  if (degree_ == 1) return (p_ - a % p_) % p_;
  Elt out = 0, mult = 1;
  for (int i = 0; i < degree_; ++i) {
    out += (p_ - a % p_) % p_ * mult;
    a /= p_;
    mult *= p_;
  }
  return out;
}

FiniteField::Elt FiniteField::sub(Elt a, Elt b) const { return add(a, neg(b)); }

FiniteField::Elt FiniteField::mul(Elt a, Elt b) const {
  if (degree_ == 1) return a * b % p_;
  Poly pa(static_cast<std::size_t>(degree_)), pb(static_cast<std::size_t>(degree_));
  for (int i = 0; i < degree_; ++i) {
    pa[static_cast<std::size_t>(i)] = a % p_;
    pb[static_cast<std::size_t>(i)] = b % p_;
    a /= p_;
    b /= p_;
  }
  Poly prod = poly_mul_mod(pa, pb, modulus_, p_);
  Elt out = 0, mult = 1;
  for (int i = 0; i < degree_; ++i) {
    out += (static_cast<std::size_t>(i) < prod.size() ? prod[static_cast<std::size_t>(i)] : 0) * mult;
    mult *= p_;
  }
  return out;
}

FiniteField::Elt FiniteField::pow(Elt a, std::uint64_t e) const {
  Elt r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

FiniteField::Elt FiniteField::inv(Elt a) const {
  if (a == 0) throw std::invalid_argument("zero has no inverse");
  return pow(a, order_ - 2);
}

FiniteField::Elt FiniteField::frobenius(Elt x, int e) const {
  int k = e % degree_;
  if (k < 0) k += degree_;
  for (int i = 0; i < k; ++i) x = pow(x, p_);
  return x;
}

std::vector<FiniteField::Elt> FiniteField::elements() const {
  if (order_ > kMaxExtensionOrder) throw std::invalid_argument("field too large to enumerate");
  std::vector<Elt> out;
  out.reserve(order_);
  for (Elt x = 0; x < order_; ++x) out.push_back(x);
  return out;
}

}  // namespace eo::gf
