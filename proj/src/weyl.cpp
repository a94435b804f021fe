#include "eo/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace eo::weyl {

namespace {

// Packing bound for the BFS hash keys: 5 bits per position.
constexpr int kMaxPackedDegree = 12;
constexpr std::uint64_t kBfsOrderLimit = 1ull << 20;

std::uint64_t pack(const std::vector<int>& values) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const int v = values[i];
    const std::uint64_t slot = static_cast<std::uint64_t>(std::abs(v) - 1) | (v < 0 ? 0x10u : 0u);
    key |= slot << (5 * i);
  }
  return key;
}

int length_raw(const int* v, int g) {
  int inv = 0;
  int neg = 0;
  for (int i = 0; i < g; ++i) {
    if (v[i] < 0) neg -= v[i];
    for (int j = i + 1; j < g; ++j)
      if (v[i] > v[j]) ++inv;
  }
  return inv + neg;
}

// Right descent test, O(1): i = 0 iff w(1) < 0, i >= 1 iff w(i) > w(i+1).
// Agrees with the length-comparison definition (covered by tests).
bool right_descent_raw(const int* v, int i) {
  return i == 0 ? v[0] < 0 : v[i - 1] > v[i];
}

// Applies s_i on the right in place: negate position 1 or swap (i, i+1).
void right_mult_simple(std::vector<int>& v, int i) {
  if (i == 0)
    v[0] = -v[0];
  else
    std::swap(v[i - 1], v[i]);
}

// Applies s_j on the left in place: flip the sign of the value +-1, or swap
// the values +-j and +-(j+1).
void left_mult_simple(std::vector<int>& v, int j) {
  for (int& x : v) {
    const int a = std::abs(x);
    if (j == 0) {
      if (a == 1) x = -x;
    } else {
      if (a == j)
        x = x > 0 ? x + 1 : x - 1;
      else if (a == j + 1)
        x = x > 0 ? x - 1 : x + 1;
    }
  }
}

// Streams one-line arrays of the whole group; fn gets a scratch buffer it
// must not retain.
void enumerate_raw(const CoxeterDescriptor& desc, const std::function<void(const std::vector<int>&)>& fn) {
  const int n = desc.degree();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<int> buf(n);
  do {
    if (desc.family == Family::A) {
      fn(perm);
    } else {
      const std::uint64_t masks = 1ull << n;
      for (std::uint64_t mask = 0; mask < masks; ++mask) {
        for (int i = 0; i < n; ++i) buf[i] = (mask >> i) & 1 ? -perm[i] : perm[i];
        fn(buf);
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

void check_same_rank(const SignedPermutation& u, const SignedPermutation& w) {
  if (u.rank() != w.rank()) throw std::invalid_argument("rank mismatch");
}

void check_element_of(const SignedPermutation& w, const CoxeterDescriptor& desc) {
  if (w.rank() != desc.degree()) throw std::invalid_argument("element degree does not match descriptor");
  if (desc.family == Family::A && !w.is_unsigned())
    throw std::invalid_argument("signed element is not in a type-A group");
}

constexpr std::uint64_t kEnumerationLimit = 12'000'000;

}  // namespace

CoxeterDescriptor::CoxeterDescriptor(Family family_, int rank_) : family(family_), rank(rank_) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
}

int CoxeterDescriptor::degree() const { return family == Family::A ? rank + 1 : rank; }

std::vector<int> CoxeterDescriptor::simple_indices() const {
  std::vector<int> out;
  const int lo = family == Family::A ? 1 : 0;
  for (int i = lo; i < lo + rank; ++i) out.push_back(i);
  return out;
}

bool CoxeterDescriptor::is_simple_index(int i) const {
  return family == Family::A ? (i >= 1 && i <= rank) : (i >= 0 && i < rank);
}

std::uint64_t CoxeterDescriptor::group_order() const {
  std::uint64_t f = 1;
  for (int i = 2; i <= degree(); ++i) f *= static_cast<std::uint64_t>(i);
  return family == Family::A ? f : f << rank;
}

ParabolicSubset::ParabolicSubset(CoxeterDescriptor desc, std::vector<int> indices)
    : desc_(desc), indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  for (int i : indices_)
    if (!desc_.is_simple_index(i)) throw std::invalid_argument("parabolic index out of range");
}

ParabolicSubset ParabolicSubset::full(const CoxeterDescriptor& desc) {
  return ParabolicSubset(desc, desc.simple_indices());
}

ParabolicSubset ParabolicSubset::empty(const CoxeterDescriptor& desc) { return ParabolicSubset(desc, {}); }

bool ParabolicSubset::contains(int i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

SignedPermutation::SignedPermutation(std::vector<int> values) : values_(std::move(values)) {
  const int g = rank();
  if (g < 1) throw std::invalid_argument("empty one-line form");
  std::vector<bool> seen(static_cast<std::size_t>(g) + 1, false);
  for (int v : values_) {
    const int a = std::abs(v);
    if (a < 1 || a > g) throw std::invalid_argument("one-line entry out of range");
    if (seen[a]) throw std::invalid_argument("repeated absolute value in one-line form");
    seen[a] = true;
  }
}

SignedPermutation SignedPermutation::identity(int rank) {
  std::vector<int> v(rank);
  std::iota(v.begin(), v.end(), 1);
  return SignedPermutation(std::move(v));
}

SignedPermutation SignedPermutation::simple_reflection(int rank, int index) {
  if (index < 0 || index >= rank) throw std::invalid_argument("simple-reflection index out of range");
  std::vector<int> v(rank);
  std::iota(v.begin(), v.end(), 1);
  if (index == 0)
    v[0] = -1;
  else
    std::swap(v[index - 1], v[index]);
  return SignedPermutation(std::move(v));
}

int SignedPermutation::operator()(int i) const {
  if (i == 0 || std::abs(i) > rank()) throw std::invalid_argument("argument out of range");
  return i > 0 ? values_[i - 1] : -values_[-i - 1];
}

bool SignedPermutation::is_identity() const {
  for (int i = 0; i < rank(); ++i)
    if (values_[i] != i + 1) return false;
  return true;
}

bool SignedPermutation::is_unsigned() const {
  return std::all_of(values_.begin(), values_.end(), [](int v) { return v > 0; });
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> inv(values_.size());
  for (int i = 1; i <= rank(); ++i) {
    const int v = values_[i - 1];
    if (v > 0)
      inv[v - 1] = i;
    else
      inv[-v - 1] = -i;
  }
  return SignedPermutation(std::move(inv));
}

SignedPermutation operator*(const SignedPermutation& u, const SignedPermutation& w) {
  check_same_rank(u, w);
  std::vector<int> out(w.values().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = u(w.values()[i]);
  return SignedPermutation(std::move(out));
}

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int m = n();
  if (m < 1) throw std::invalid_argument("empty permutation");
  std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
  for (int v : values_) {
    if (v < 1 || v > m) throw std::invalid_argument("permutation entry out of range");
    if (seen[v]) throw std::invalid_argument("repeated permutation entry");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

int Permutation::operator()(int i) const {
  if (i < 1 || i > n()) throw std::invalid_argument("argument out of range");
  return values_[i - 1];
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(values_.size());
  for (int i = 1; i <= n(); ++i) inv[values_[i - 1] - 1] = i;
  return Permutation(std::move(inv));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(static_cast<std::size_t>(n()) + 1, false);
  for (int start = 1; start <= n(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cyc;
    for (int i = start; !seen[i]; i = values_[i - 1]) {
      seen[i] = true;
      cyc.push_back(i);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

SignedPermutation Permutation::as_signed() const { return SignedPermutation(values_); }

int length(const SignedPermutation& w) { return length_raw(w.values().data(), w.rank()); }

std::vector<std::pair<SignedPermutation, int>> cayley_bfs(const CoxeterDescriptor& desc) {
  if (desc.group_order() > kBfsOrderLimit) throw std::invalid_argument("rank too large for exhaustive BFS");
  if (desc.degree() > kMaxPackedDegree) throw std::invalid_argument("rank too large for exhaustive BFS");
  std::vector<SignedPermutation> gens;
  for (int i : desc.simple_indices()) gens.push_back(SignedPermutation::simple_reflection(desc.degree(), i));

  std::vector<std::pair<SignedPermutation, int>> out;
  std::unordered_map<std::uint64_t, int> dist;
  std::deque<SignedPermutation> queue;
  SignedPermutation e = SignedPermutation::identity(desc.degree());
  dist.emplace(pack(e.values()), 0);
  out.emplace_back(e, 0);
  queue.push_back(std::move(e));
  while (!queue.empty()) {
    SignedPermutation w = std::move(queue.front());
    queue.pop_front();
    const int dw = dist.at(pack(w.values()));
    for (const SignedPermutation& s : gens) {
      SignedPermutation u = w * s;
      const std::uint64_t key = pack(u.values());
      if (dist.emplace(key, dw + 1).second) {
        out.emplace_back(u, dw + 1);
        queue.push_back(std::move(u));
      }
    }
  }
  return out;
}

int cayley_bfs_length(const SignedPermutation& w, const CoxeterDescriptor& desc) {
  check_element_of(w, desc);
  for (const auto& [u, d] : cayley_bfs(desc))
    if (u == w) return d;
  throw std::logic_error("BFS did not reach the element");  // unreachable for valid input
}

std::vector<int> reduced_word(const SignedPermutation& w, const CoxeterDescriptor& desc) {
  check_element_of(w, desc);
  std::vector<int> word;
  std::vector<int> v = w.values();
  const std::vector<int> simples = desc.simple_indices();
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (int i : simples) {
      if (right_descent_raw(v.data(), i)) {
        right_mult_simple(v, i);
        word.push_back(i);
        stripped = true;
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<int> descents(const SignedPermutation& w, const CoxeterDescriptor& desc, Side side) {
  check_element_of(w, desc);
  std::vector<int> out;
  const int lw = length(w);
  for (int i : desc.simple_indices()) {
    std::vector<int> v = w.values();
    if (side == Side::right)
      right_mult_simple(v, i);
    else
      left_mult_simple(v, i);
    if (length_raw(v.data(), static_cast<int>(v.size())) < lw) out.push_back(i);
  }
  return out;
}

SignedPermutation min_rep(const SignedPermutation& w, const ParabolicSubset& j) {
  check_element_of(w, j.descriptor());
  std::vector<int> v = w.values();
  int lv = length_raw(v.data(), static_cast<int>(v.size()));
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (int idx : j.indices()) {
      std::vector<int> candidate = v;
      left_mult_simple(candidate, idx);
      const int lc = length_raw(candidate.data(), static_cast<int>(candidate.size()));
      if (lc < lv) {
        v = std::move(candidate);
        lv = lc;
        stripped = true;
      }
    }
  }
  return SignedPermutation(std::move(v));
}

std::vector<SignedPermutation> min_coset_reps(const CoxeterDescriptor& desc, const ParabolicSubset& j) {
  if (j.descriptor() != desc) throw std::invalid_argument("parabolic subset built for a different group");
  if (desc.group_order() > kEnumerationLimit) throw std::invalid_argument("rank too large for enumeration");
  std::vector<SignedPermutation> reps;
  // An element u is scanned once; u has no right descent in J iff u^{-1} has
  // no left descent in J, so the representatives are the inverses of the
  // surviving u.
  enumerate_raw(desc, [&](const std::vector<int>& u) {
    for (int idx : j.indices())
      if (right_descent_raw(u.data(), idx)) return;
    reps.push_back(SignedPermutation(u).inverse());
  });
  std::sort(reps.begin(), reps.end(), [](const SignedPermutation& a, const SignedPermutation& b) {
    const int la = length(a), lb = length(b);
    return la != lb ? la < lb : a < b;
  });
  return reps;
}

std::vector<std::int64_t> poincare_quotient(const CoxeterDescriptor& desc, const ParabolicSubset& j) {
  if (j.descriptor() != desc) throw std::invalid_argument("parabolic subset built for a different group");
  if (desc.group_order() > kEnumerationLimit) throw std::invalid_argument("rank too large for enumeration");
  std::vector<std::int64_t> coeff;
  enumerate_raw(desc, [&](const std::vector<int>& u) {
    for (int idx : j.indices())
      if (right_descent_raw(u.data(), idx)) return;
    const int l = length_raw(u.data(), static_cast<int>(u.size()));  // l(u) == l(u^{-1})
    if (static_cast<std::size_t>(l) >= coeff.size()) coeff.resize(static_cast<std::size_t>(l) + 1, 0);
    ++coeff[static_cast<std::size_t>(l)];
  });
  return coeff;
}

bool bruhat_leq(const SignedPermutation& u, const SignedPermutation& w, const CoxeterDescriptor& desc) {
  check_element_of(u, desc);
  check_element_of(w, desc);
  std::vector<int> a = u.values();
  std::vector<int> b = w.values();
  const std::vector<int> simples = desc.simple_indices();
  // Lifting property: for a right descent s of w, u <= w iff min(u, us) <= ws.
  while (true) {
    if (a == b) return true;
    const int la = length_raw(a.data(), static_cast<int>(a.size()));
    const int lb = length_raw(b.data(), static_cast<int>(b.size()));
    if (la >= lb) return false;  // lb > 0 here, so b != e
    for (int i : simples) {
      if (right_descent_raw(b.data(), i)) {
        if (right_descent_raw(a.data(), i)) right_mult_simple(a, i);
        right_mult_simple(b, i);
        break;
      }
    }
  }
}

void for_each_element(const CoxeterDescriptor& desc, const std::function<void(const SignedPermutation&)>& fn) {
  if (desc.group_order() > kEnumerationLimit) throw std::invalid_argument("rank too large for enumeration");
  enumerate_raw(desc, [&](const std::vector<int>& v) { fn(SignedPermutation(v)); });
}

std::string to_string(const SignedPermutation& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.values().size(); ++i) {
    if (i) os << ',';
    os << w.values()[i];
  }
  return os.str();
}

std::string to_string(const Permutation& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.values().size(); ++i) {
    if (i) os << ',';
    os << p.values()[i];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const SignedPermutation& w) { return os << to_string(w); }
std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << to_string(p); }

}  // namespace eo::weyl
