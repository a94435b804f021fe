#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "eo/dieudonne.hpp"

using namespace eo;
using dieudonne::BT1Module;
using dieudonne::SemilinearMap;
using gf::FiniteField;
using linalg::Matrix;
using strata::ElementarySequence;

namespace {

// All vectors in the row span of a canonical basis, by brute-force
// enumeration of coefficient tuples. Ground truth for the semilinear ops.
std::vector<std::vector<Matrix::Elt>> span_vectors(const Matrix& basis) {
  const FiniteField& f = basis.field();
  const auto scalars = f.elements();
  std::vector<std::vector<Matrix::Elt>> out;
  std::vector<std::size_t> digits(static_cast<std::size_t>(basis.rows()), 0);
  while (true) {
    std::vector<Matrix::Elt> v(static_cast<std::size_t>(basis.cols()), 0);
    for (int r = 0; r < basis.rows(); ++r) {
      const Matrix::Elt c = scalars[digits[static_cast<std::size_t>(r)]];
      for (int j = 0; j < basis.cols(); ++j)
        v[static_cast<std::size_t>(j)] =
            f.add(v[static_cast<std::size_t>(j)], f.mul(c, basis.at(r, j)));
    }
    out.push_back(std::move(v));
    int pos = 0;
    while (pos < basis.rows() && ++digits[static_cast<std::size_t>(pos)] == scalars.size()) {
      digits[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == basis.rows()) break;
  }
  return out;
}

BT1Module ordinary_g1(const FiniteField& f) { return dieudonne::standard_module(ElementarySequence({1}), f); }

BT1Module superspecial_g1(const FiniteField& f) { return dieudonne::standard_module(ElementarySequence({0}), f); }

}  // namespace

TEST_CASE("semilinear image and preimage against pointwise evaluation") {
  struct Case {
    FiniteField field;
    int n;
  };
  const std::vector<Case> cases = {{FiniteField(2), 4},
                                   {FiniteField(3), 3},
                                   {FiniteField::with_builtin_modulus(2, 2), 3},
                                   {FiniteField::with_builtin_modulus(3, 2), 2},
                                   {FiniteField::with_builtin_modulus(5, 2), 2}};
  for (const auto& [field, n] : cases) {
    // one deterministic matrix with mixed entries and kernel
    std::vector<Matrix::Elt> data;
    for (int i = 0; i < n * n; ++i) data.push_back(static_cast<Matrix::Elt>((i * 7 + 3) % field.order()));
    for (int twist : {1, -1}) {
      SemilinearMap t{Matrix(field, n, n, data), twist};
      // subspaces: a couple of canonical ones
      std::vector<Matrix> subs = {linalg::zero_subspace(field, n), linalg::full_subspace(field, n)};
      std::vector<Matrix::Elt> row(static_cast<std::size_t>(n), 0);
      row[0] = 1;
      row[static_cast<std::size_t>(n) - 1] = field.from_int(1);
      subs.push_back(linalg::row_space(Matrix(field, 1, n, row)));

      for (const Matrix& m : subs) {
        const Matrix image = dieudonne::semilinear_image(t, m);
        std::set<std::vector<Matrix::Elt>> expected;
        for (const auto& v : span_vectors(m)) expected.insert(dieudonne::semilinear_apply(t, v));
        // every pointwise image lies in the computed span and dimensions agree
        for (const auto& w : expected) CHECK(linalg::subspace_contains(image, w));
        std::size_t count = 1;
        for (int r = 0; r < image.rows(); ++r) count *= field.order();
        CHECK(expected.size() == count);

        const Matrix pre = dieudonne::semilinear_preimage(t, m);
        // exhaustive: x in pre  <=>  T(x) in m
        const auto all = span_vectors(linalg::full_subspace(field, n));
        for (const auto& x : all) {
          const bool in_pre = linalg::subspace_contains(pre, x);
          const bool maps_in = linalg::subspace_contains(m, dieudonne::semilinear_apply(t, x));
          CHECK(in_pre == maps_in);
        }
      }
    }
  }
}

TEST_CASE("semilinear spot check over F_4") {
  // T = diag(alpha, 1) with twist 1 on span((alpha, 0)): T(c * (alpha,0)) =
  // sigma(c) * (alpha^2, 0), so the image is span((1, 0)) after scaling.
  FiniteField f4 = FiniteField::with_builtin_modulus(2, 2);
  SemilinearMap t{Matrix(f4, 2, 2, {2, 0, 0, 1}), 1};
  Matrix sub = linalg::row_space(Matrix(f4, 1, 2, {2, 0}));
  const Matrix image = dieudonne::semilinear_image(t, sub);
  CHECK(image.rows() == 1);
  for (const auto& v : span_vectors(sub)) CHECK(linalg::subspace_contains(image, dieudonne::semilinear_apply(t, v)));
}

TEST_CASE("validate: axioms and witnesses") {
  FiniteField f2(2);
  SUBCASE("F = V = identity violates F.V = 0") {
    BT1Module m{f2, 1, {Matrix::identity(f2, 1), 1}, {Matrix::identity(f2, 1), -1}, std::nullopt};
    const auto violations = dieudonne::validate(m);
    REQUIRE_FALSE(violations.empty());
    bool found = false;
    for (const auto& v : violations) found = found || v.rule == "F.V != 0";
    CHECK(found);
  }
  SUBCASE("rank-1 one-dimensional modules are valid") {
    // F = id, V = 0: ker F = 0 = im V, ker V = N = im F; F acts bijectively
    BT1Module m{f2, 1, {Matrix::identity(f2, 1), 1}, {Matrix(f2, 1, 1), -1}, std::nullopt};
    CHECK(dieudonne::validate(m).empty());
    CHECK(dieudonne::a_number(m) == 0);
    CHECK(dieudonne::p_rank(m) == 1);
    // the mirror image F = 0, V = id
    BT1Module dual{f2, 1, {Matrix(f2, 1, 1), 1}, {Matrix::identity(f2, 1), -1}, std::nullopt};
    CHECK(dieudonne::validate(dual).empty());
    CHECK(dieudonne::a_number(dual) == 0);
    CHECK(dieudonne::p_rank(dual) == 0);
  }
  SUBCASE("ordinary standard module is valid; a flipped adjointness sign is reported") {
    FiniteField f3(3);
    BT1Module m = ordinary_g1(f3);
    CHECK(dieudonne::validate(m).empty());
    // negating V keeps F.V = 0, V.F = 0 and the ranks, but flips the sign on
    // one side of the adjointness identity (char != 2)
    Matrix negated = m.verschiebung.matrix;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) negated.set(i, j, f3.neg(negated.at(i, j)));
    BT1Module flipped{m.field, m.n, m.frobenius, {negated, -1}, m.pairing};
    const auto violations = dieudonne::validate(flipped);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].rule == "pairing adjointness fails");
    CHECK_FALSE(violations[0].witness.empty());
  }
  SUBCASE("degenerate and non-alternating pairings are reported") {
    BT1Module m = ordinary_g1(f2);
    BT1Module degenerate{m.field, m.n, m.frobenius, m.verschiebung, Matrix(f2, 2, 2)};
    bool found = false;
    for (const auto& v : dieudonne::validate(degenerate)) found = found || v.rule == "pairing degenerate";
    CHECK(found);
    BT1Module diag{m.field, m.n, m.frobenius, m.verschiebung, Matrix::identity(f2, 2)};
    found = false;
    for (const auto& v : dieudonne::validate(diag)) found = found || v.rule == "pairing not alternating";
    CHECK(found);
  }
  SUBCASE("shape errors are hard errors") {
    BT1Module m{f2, 2, {Matrix(f2, 1, 1), 1}, {Matrix(f2, 2, 2), -1}, std::nullopt};
    CHECK_THROWS_AS(dieudonne::validate(m), std::invalid_argument);
  }
}

TEST_CASE("standard module matrices for g = 1") {
  FiniteField f2(2);
  SUBCASE("ordinary: F e1 = e1, V e2 = e2") {
    BT1Module m = ordinary_g1(f2);
    CHECK(m.frobenius.matrix == Matrix(f2, 2, 2, {1, 0, 0, 0}));
    CHECK(m.verschiebung.matrix == Matrix(f2, 2, 2, {0, 0, 0, 1}));
  }
  SUBCASE("superspecial: F e1 = 0, F e2 = e1") {
    BT1Module m = superspecial_g1(f2);
    CHECK(m.frobenius.matrix == Matrix(f2, 2, 2, {0, 1, 0, 0}));
  }
  SUBCASE("over F_3 the derived V carries the pairing signs") {
    BT1Module m = superspecial_g1(FiniteField(3));
    // V e2 = -e1
    CHECK(m.verschiebung.matrix == Matrix(FiniteField(3), 2, 2, {0, 2, 0, 0}));
    CHECK(dieudonne::validate(m).empty());
  }
}

TEST_CASE("canonical filtration") {
  FiniteField f2(2);
  SUBCASE("ordinary g=1: 0 < span(e1) < N") {
    const dieudonne::Flag flag = dieudonne::canonical_filtration(ordinary_g1(f2));
    REQUIRE(flag.size() == 3);
    CHECK(flag[0].rows() == 0);
    CHECK(flag[1] == Matrix(f2, 1, 2, {1, 0}));
    CHECK(flag[2].rows() == 2);
  }
  SUBCASE("superspecial g=1: middle member is F(N) = ker F") {
    BT1Module m = superspecial_g1(f2);
    const dieudonne::Flag flag = dieudonne::canonical_filtration(m);
    REQUIRE(flag.size() == 3);
    const Matrix fn = dieudonne::semilinear_image(m.frobenius, linalg::full_subspace(f2, 2));
    const Matrix ker_f = dieudonne::semilinear_preimage(m.frobenius, linalg::zero_subspace(f2, 2));
    CHECK(flag[1] == fn);
    CHECK(fn == ker_f);
  }
  SUBCASE("F(N) and ker V arrive at the first saturation step; flag is stable") {
    for (int g = 1; g <= 3; ++g) {
      for (const ElementarySequence& phi : strata::enumerate_elementary(g)) {
        for (std::uint64_t p : {2ull, 3ull}) {
          BT1Module m = dieudonne::standard_module(phi, FiniteField(p));
          const dieudonne::Flag flag = dieudonne::canonical_filtration(m);
          auto member = [&](const Matrix& sub) {
            return std::find(flag.begin(), flag.end(), sub) != flag.end();
          };
          const Matrix image_f = dieudonne::semilinear_image(m.frobenius, linalg::full_subspace(m.field, m.n));
          const Matrix ker_v = dieudonne::semilinear_preimage(m.verschiebung, linalg::zero_subspace(m.field, m.n));
          CHECK(member(image_f));
          CHECK(image_f == ker_v);  // the BT_1 axiom, so ker V is a member too
          for (const Matrix& sub : flag) {
            CHECK(member(dieudonne::semilinear_image(m.frobenius, sub)));
            CHECK(member(dieudonne::semilinear_preimage(m.verschiebung, sub)));
          }
        }
      }
    }
  }
}

TEST_CASE("final type") {
  FiniteField f2(2);
  {
    const dieudonne::FinalType ft = dieudonne::final_type(ordinary_g1(f2));
    CHECK(ft.psi == std::vector<int>{1, 1});
    REQUIRE(ft.phi.has_value());
    CHECK(ft.phi->values() == std::vector<int>{1});
  }
  {
    const dieudonne::FinalType ft = dieudonne::final_type(superspecial_g1(f2));
    CHECK(ft.psi == std::vector<int>{0, 1});
    CHECK(ft.phi->values() == std::vector<int>{0});
  }
  {
    // unpolarized: strip the pairing, psi still computed, phi absent
    BT1Module m = ordinary_g1(f2);
    m.pairing.reset();
    const dieudonne::FinalType ft = dieudonne::final_type(m);
    CHECK(ft.psi == std::vector<int>{1, 1});
    CHECK_FALSE(ft.phi.has_value());
  }
}

TEST_CASE("round trip: final_type(standard_module(phi)) == phi") {
  const std::vector<FiniteField> fields = {FiniteField(2),
                                           FiniteField(3),
                                           FiniteField(5),
                                           FiniteField::with_builtin_modulus(2, 2),
                                           FiniteField::with_builtin_modulus(3, 2),
                                           FiniteField::with_builtin_modulus(5, 2)};
  for (int g = 1; g <= 3; ++g) {
    for (const ElementarySequence& phi : strata::enumerate_elementary(g)) {
      for (const FiniteField& field : fields) {
        BT1Module m = dieudonne::standard_module(phi, field);  // self-checking constructor
        CHECK(dieudonne::validate(m).empty());
        const dieudonne::FinalType ft = dieudonne::final_type(m);
        REQUIRE(ft.phi.has_value());
        CHECK(*ft.phi == phi);
        CHECK(dieudonne::a_number(m) == strata::a_number(phi));
        CHECK(dieudonne::p_rank(m) == strata::p_rank(phi));
      }
    }
  }
}

TEST_CASE("a-number and p-rank of the g=1 modules") {
  FiniteField f2(2);
  CHECK(dieudonne::a_number(ordinary_g1(f2)) == 0);
  CHECK(dieudonne::p_rank(ordinary_g1(f2)) == 1);
  CHECK(dieudonne::a_number(superspecial_g1(f2)) == 1);
  CHECK(dieudonne::p_rank(superspecial_g1(f2)) == 0);
}

TEST_CASE("census") {
  SUBCASE("p=2, g=1: 16 candidates, 9 valid, types 3 + 6") {
    const dieudonne::CensusResult result = dieudonne::brute_force_census(FiniteField(2), 1);
    CHECK(result.candidates == 16);
    CHECK(result.valid == 9);
    REQUIRE(result.counts.size() == 2);
    CHECK(result.counts.at({0}) == 3);
    CHECK(result.counts.at({1}) == 6);
  }
  SUBCASE("p=3, g=1: 81 candidates, 32 valid, types 8 + 24") {
    const dieudonne::CensusResult result = dieudonne::brute_force_census(FiniteField(3), 1);
    CHECK(result.candidates == 81);
    CHECK(result.valid == 32);
    CHECK(result.counts.at({0}) == 8);
    CHECK(result.counts.at({1}) == 24);
  }
  SUBCASE("worker count does not change the outcome") {
    dieudonne::CensusOptions opts;
    opts.jobs = 4;
    const dieudonne::CensusResult parallel = dieudonne::brute_force_census(FiniteField(3), 1, opts);
    const dieudonne::CensusResult serial = dieudonne::brute_force_census(FiniteField(3), 1);
    CHECK(parallel.valid == serial.valid);
    CHECK(parallel.counts == serial.counts);
  }
  SUBCASE("budget") {
    CHECK_THROWS_AS(dieudonne::brute_force_census(FiniteField(2), 3), std::invalid_argument);
    dieudonne::CensusOptions tiny;
    tiny.budget = 8;
    CHECK_THROWS_AS(dieudonne::brute_force_census(FiniteField(2), 1, tiny), std::invalid_argument);
  }
  SUBCASE("extension fields are rejected") {
    CHECK_THROWS_AS(dieudonne::brute_force_census(FiniteField::with_builtin_modulus(2, 2), 1),
                    std::invalid_argument);
  }
}
