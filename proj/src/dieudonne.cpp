#include "eo/dieudonne.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace eo::dieudonne {

namespace {

using linalg::Matrix;
using Elt = Matrix::Elt;

void check_square(const BT1Module& m) {
  const int n = m.n;
  if (n < 1) throw std::invalid_argument("module dimension must be >= 1");
  if (m.frobenius.matrix.rows() != n || m.frobenius.matrix.cols() != n)
    throw std::invalid_argument("F matrix shape does not match n");
  if (m.verschiebung.matrix.rows() != n || m.verschiebung.matrix.cols() != n)
    throw std::invalid_argument("V matrix shape does not match n");
  if (m.frobenius.twist != 1 || m.verschiebung.twist != -1)
    throw std::invalid_argument("F must have twist +1 and V twist -1");
  if (m.pairing && (m.pairing->rows() != n || m.pairing->cols() != n))
    throw std::invalid_argument("pairing shape does not match n");
}

std::string vec_string(const std::vector<Elt>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

// First nonzero column of a matrix, as a witness vector e_j -> column j.
int first_nonzero_col(const Matrix& m) {
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i)
      if (m.at(i, j) != 0) return j;
  return -1;
}

std::vector<Elt> column(const Matrix& m, int j) {
  std::vector<Elt> out(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) out[static_cast<std::size_t>(i)] = m.at(i, j);
  return out;
}

}  // namespace

std::vector<Elt> semilinear_apply(const SemilinearMap& t, const std::vector<Elt>& x) {
  const gf::FiniteField& f = t.matrix.field();
  if (static_cast<int>(x.size()) != t.matrix.cols()) throw std::invalid_argument("vector length mismatch");
  std::vector<Elt> out(static_cast<std::size_t>(t.matrix.rows()), 0);
  for (int j = 0; j < t.matrix.cols(); ++j) {
    const Elt xj = f.frobenius(x[static_cast<std::size_t>(j)], t.twist);
    if (xj == 0) continue;
    for (int i = 0; i < t.matrix.rows(); ++i)
      out[static_cast<std::size_t>(i)] = f.add(out[static_cast<std::size_t>(i)], f.mul(t.matrix.at(i, j), xj));
  }
  return out;
}

linalg::Matrix semilinear_image(const SemilinearMap& t, const linalg::Matrix& subspace) {
  if (subspace.cols() != t.matrix.cols()) throw std::invalid_argument("ambient dimension mismatch");
  // T(sum l_i b_i) = sum sigma^e(l_i) T(b_i), and sigma^e is onto, so the
  // image of the span is the span of the images.
  linalg::Matrix images(t.matrix.field(), subspace.rows(), t.matrix.rows());
  for (int r = 0; r < subspace.rows(); ++r) {
    const std::vector<Elt> y = semilinear_apply(t, subspace.row(r));
    for (int j = 0; j < images.cols(); ++j) images.set(r, j, y[static_cast<std::size_t>(j)]);
  }
  return linalg::row_space(images);
}

linalg::Matrix semilinear_preimage(const SemilinearMap& t, const linalg::Matrix& subspace) {
  if (subspace.cols() != t.matrix.rows()) throw std::invalid_argument("ambient dimension mismatch");
  // With y = sigma^e(x): A y in M  <=>  (D A) y = 0 for D the annihilator of
  // M, and x = sigma^{-e}(y) entrywise since sigma^{-e} is an automorphism.
  linalg::Matrix d = linalg::null_space(subspace);
  linalg::Matrix y = linalg::null_space(linalg::mul(d, t.matrix));
  return linalg::row_space(linalg::frobenius(y, -t.twist));
}

std::vector<Violation> validate(const BT1Module& m) {
  check_square(m);
  const gf::FiniteField& f = m.field;
  const int n = m.n;
  std::vector<Violation> out;

  // F.V and V.F are plain linear maps: A_F sigma(A_V) and A_V sigma^{-1}(A_F).
  const Matrix fv = linalg::mul(m.frobenius.matrix, linalg::frobenius(m.verschiebung.matrix, 1));
  if (!linalg::is_zero(fv)) {
    const int j = first_nonzero_col(fv);
    out.push_back({"F.V != 0", "F(V(e_" + std::to_string(j + 1) + ")) = " + vec_string(column(fv, j))});
  }
  const Matrix vf = linalg::mul(m.verschiebung.matrix, linalg::frobenius(m.frobenius.matrix, -1));
  if (!linalg::is_zero(vf)) {
    const int j = first_nonzero_col(vf);
    out.push_back({"V.F != 0", "V(F(e_" + std::to_string(j + 1) + ")) = " + vec_string(column(vf, j))});
  }
  const int rank_f = linalg::rank(m.frobenius.matrix);
  const int rank_v = linalg::rank(m.verschiebung.matrix);
  if (rank_f + rank_v != n) {
    out.push_back({"rank F + rank V != n",
                   "rank F = " + std::to_string(rank_f) + ", rank V = " + std::to_string(rank_v) +
                       ", n = " + std::to_string(n)});
  }

  if (m.pairing) {
    const Matrix& p = *m.pairing;
    if (n % 2 != 0) out.push_back({"pairing requires even n", "n = " + std::to_string(n)});
    for (int i = 0; i < n; ++i)
      if (p.at(i, i) != 0) {
        out.push_back({"pairing not alternating", "<e_" + std::to_string(i + 1) + ", e_" + std::to_string(i + 1) +
                                                      "> = " + std::to_string(p.at(i, i))});
        break;
      }
    bool skew = true;
    for (int i = 0; i < n && skew; ++i)
      for (int j = 0; j < n && skew; ++j)
        if (p.at(i, j) != f.neg(p.at(j, i))) {
          out.push_back({"pairing not skew-symmetric",
                         "(i,j) = (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"});
          skew = false;
        }
    if (linalg::rank(p) != n) out.push_back({"pairing degenerate", "rank = " + std::to_string(linalg::rank(p))});

    // <F x, y> = sigma(<x, V y>)  <=>  A_F^T P == sigma(P) sigma(A_V).
    const Matrix lhs = linalg::mul(linalg::transpose(m.frobenius.matrix), p);
    const Matrix rhs = linalg::mul(linalg::frobenius(p, 1), linalg::frobenius(m.verschiebung.matrix, 1));
    if (!(lhs == rhs)) {
      std::string witness;
      for (int i = 0; i < n && witness.empty(); ++i)
        for (int j = 0; j < n && witness.empty(); ++j)
          if (lhs.at(i, j) != rhs.at(i, j))
            witness = "<F e_" + std::to_string(i + 1) + ", e_" + std::to_string(j + 1) + "> = " +
                      std::to_string(lhs.at(i, j)) + " but sigma(<e_" + std::to_string(i + 1) + ", V e_" +
                      std::to_string(j + 1) + ">) = " + std::to_string(rhs.at(i, j));
      out.push_back({"pairing adjointness fails", witness});
    }
  }
  return out;
}

linalg::Matrix standard_pairing(const gf::FiniteField& field, int g) {
  const int n = 2 * g;
  Matrix p(field, n, n);
  for (int i = 1; i <= n; ++i) p.set(i - 1, n - i, i <= g ? field.one() : field.neg(field.one()));
  return p;
}

SemilinearMap verschiebung_from_pairing(const SemilinearMap& frobenius, const linalg::Matrix& pairing) {
  if (frobenius.twist != 1) throw std::invalid_argument("expected twist +1");
  // sigma(A_V) = sigma(P)^{-1} A_F^T P.
  const Matrix sp = linalg::frobenius(pairing, 1);
  const Matrix rhs = linalg::mul(linalg::transpose(frobenius.matrix), pairing);
  const Matrix sv = linalg::solve(sp, rhs);
  return SemilinearMap{linalg::frobenius(sv, -1), -1};
}

Flag canonical_filtration(const BT1Module& m) {
  check_square(m);
  const int n = m.n;
  std::vector<Matrix> members;
  members.push_back(linalg::zero_subspace(m.field, n));
  members.push_back(linalg::full_subspace(m.field, n));
  std::vector<std::size_t> work = {0, 1};
  while (!work.empty()) {
    const Matrix current = members[work.back()];
    work.pop_back();
    for (const Matrix& next :
         {semilinear_image(m.frobenius, current), semilinear_preimage(m.verschiebung, current)}) {
      if (std::find(members.begin(), members.end(), next) == members.end()) {
        // a chain 0 = M_0 < ... < M_r = N has at most n+1 members
        if (members.size() > static_cast<std::size_t>(n) + 1)
          throw std::logic_error("canonical filtration is not totally ordered; module is not a valid BT_1");
        members.push_back(next);
        work.push_back(members.size() - 1);
      }
    }
  }
  std::sort(members.begin(), members.end(), [](const Matrix& a, const Matrix& b) { return a.rows() < b.rows(); });
  for (std::size_t i = 1; i < members.size(); ++i) {
    if (members[i - 1].rows() == members[i].rows() || !linalg::subspace_leq(members[i - 1], members[i]))
      throw std::logic_error("canonical filtration is not totally ordered; module is not a valid BT_1");
  }
  return members;
}

FinalType final_type(const BT1Module& m) {
  const Flag flag = canonical_filtration(m);
  const int n = m.n;
  std::vector<int> dims, fdims;
  for (const Matrix& sub : flag) {
    dims.push_back(sub.rows());
    fdims.push_back(semilinear_image(m.frobenius, sub).rows());
  }
  std::vector<int> psi(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t j = 0; j + 1 < flag.size(); ++j) {
    const int d0 = dims[j], d1 = dims[j + 1];
    const int f0 = fdims[j], f1 = fdims[j + 1];
    const int step = f1 - f0;
    if (step != 0 && step != d1 - d0) {
      std::ostringstream os;
      os << "F is neither zero nor injective on the graded piece of dimensions " << d0 << ".." << d1
         << " (image dimensions " << f0 << ".." << f1 << ")";
      throw std::logic_error(os.str());
    }
    for (int i = d0; i <= d1; ++i) psi[static_cast<std::size_t>(i)] = f0 + (step ? i - d0 : 0);
  }
  FinalType out;
  out.psi.assign(psi.begin() + 1, psi.end());
  if (m.pairing) {
    try {
      const strata::FinalSequence checked(out.psi);  // enforces steps and duality
      out.phi = strata::ElementarySequence(
          std::vector<int>(checked.values().begin(), checked.values().begin() + n / 2));
    } catch (const std::invalid_argument& e) {
      throw std::logic_error(std::string("final type inconsistent with the pairing: ") + e.what());
    }
  }
  return out;
}

int a_number(const BT1Module& m) {
  check_square(m);
  const Matrix zero = linalg::zero_subspace(m.field, m.n);
  const Matrix ker_f = semilinear_preimage(m.frobenius, zero);
  const Matrix ker_v = semilinear_preimage(m.verschiebung, zero);
  return linalg::subspace_intersection(ker_f, ker_v).rows();
}

int p_rank(const BT1Module& m) {
  check_square(m);
  Matrix stable = linalg::full_subspace(m.field, m.n);
  for (int k = 0; k < m.n + 1; ++k) {
    Matrix next = semilinear_image(m.frobenius, stable);
    if (next == stable) break;
    stable = std::move(next);
  }
  return stable.rows();
}

BT1Module standard_module(const strata::ElementarySequence& phi, const gf::FiniteField& field) {
  const int g = phi.g();
  const int n = 2 * g;
  const strata::FinalSequence psi = strata::final_sequence(phi);
  const weyl::Permutation pi = strata::frobenius_permutation(psi);
  Matrix af(field, n, n);
  for (int i = 1; i <= n; ++i)
    if (psi.rise_at(i)) af.set(pi(i) - 1, i - 1, field.one());
  const Matrix pairing = standard_pairing(field, g);
  SemilinearMap frob{std::move(af), 1};
  SemilinearMap versch = verschiebung_from_pairing(frob, pairing);
  BT1Module m{field, n, std::move(frob), std::move(versch), pairing};

  const std::vector<Violation> violations = validate(m);
  if (!violations.empty())
    throw std::logic_error("standard module fails validation: " + violations.front().rule);
  const FinalType ft = final_type(m);
  if (!ft.phi || !(*ft.phi == phi)) throw std::logic_error("standard module does not reproduce its sequence");
  return m;
}

CensusResult brute_force_census(const gf::FiniteField& prime_field, int g, const CensusOptions& opts) {
  if (prime_field.degree() != 1) throw std::invalid_argument("census runs over prime fields only");
  if (g < 1) throw std::invalid_argument("g must be >= 1");
  const std::uint64_t p = prime_field.characteristic();
  const int n = 2 * g;
  const int cells = n * n;

  std::uint64_t candidates = 1;
  for (int i = 0; i < cells; ++i) {
    if (candidates > opts.budget / p) throw std::invalid_argument("census budget exceeded");
    candidates *= p;
  }

  const Matrix pairing = standard_pairing(prime_field, g);
  // Over the prime field sigma = id, so A_V = P^{-1} A_F^T P is a plain
  // linear solve with constant P; precompute P^{-1}.
  const Matrix p_inv = linalg::solve(pairing, Matrix::identity(prime_field, n));

  const int jobs = std::max(1, opts.jobs);
  std::vector<CensusResult> partial(static_cast<std::size_t>(jobs));
  auto worker = [&](int t) {
    CensusResult& local = partial[static_cast<std::size_t>(t)];
    const std::uint64_t lo = candidates * static_cast<std::uint64_t>(t) / jobs;
    const std::uint64_t hi = candidates * (static_cast<std::uint64_t>(t) + 1) / jobs;
    for (std::uint64_t code = lo; code < hi; ++code) {
      std::vector<Elt> entries(static_cast<std::size_t>(cells));
      std::uint64_t c = code;
      for (int i = 0; i < cells; ++i) {
        entries[static_cast<std::size_t>(i)] = c % p;
        c /= p;
      }
      SemilinearMap frob{Matrix(prime_field, n, n, std::move(entries)), 1};
      SemilinearMap versch{linalg::mul(p_inv, linalg::mul(linalg::transpose(frob.matrix), pairing)), -1};
      BT1Module m{prime_field, n, std::move(frob), std::move(versch), pairing};
      if (!validate(m).empty()) continue;
      ++local.valid;
      const FinalType ft = final_type(m);
      ++local.counts[ft.phi->values()];
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker, t);
    for (std::thread& th : threads) th.join();
  }

  CensusResult out;
  out.candidates = candidates;
  for (const CensusResult& part : partial) {
    out.valid += part.valid;
    for (const auto& [phi, count] : part.counts) out.counts[phi] += count;
  }
  return out;
}

}  // namespace eo::dieudonne
