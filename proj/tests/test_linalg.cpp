#include <doctest.h>

#include <vector>

#include "facering/field.hpp"
#include "facering/linalg.hpp"

using namespace facering;

namespace {

template <class F>
void check_rref_invariants(const F& field, const EchelonForm<F>& e) {
  for (std::size_t i = 0; i + 1 < e.pivots.size(); ++i)
    CHECK(e.pivots[i] < e.pivots[i + 1]);
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    CHECK(field.eq(e.rows[i].get(field, e.pivots[i]), field.one()));
    CHECK(e.rows[i].leading().value() == e.pivots[i]);
    for (std::size_t j = 0; j < e.rows.size(); ++j) {
      if (i == j) continue;
      CHECK(field.is_zero(e.rows[j].get(field, e.pivots[i])));
    }
  }
}

template <class F>
void exercise_field(const F& field) {
  Rng rng(12345);

  // rank of a singular matrix
  auto m = Matrix<F>::from_rows(
      field,
      {{field.from_int(1), field.from_int(2)},
       {field.from_int(2), field.from_int(4)}},
      2);
  CHECK(rank(field, m) == 1);

  // rank-nullity and invariants on random matrices
  for (int t = 0; t < 25; ++t) {
    std::size_t nr = 1 + rng.below(8), nc = 1 + rng.below(8);
    Matrix<F> a = random_matrix(field, rng, nr, nc);
    EchelonForm<F> e = rref(field, a);
    check_rref_invariants(field, e);
    EchelonForm<F> ker = kernel_basis(field, a);
    check_rref_invariants(field, ker);
    CHECK(e.rank() + ker.rank() == nc);
    CHECK(image_basis(field, a).rank() == e.rank());
    // kernel vectors really lie in the kernel
    for (const auto& row : ker.rows) {
      auto v = row.to_dense(field);
      for (const auto& img : a.apply(field, v)) CHECK(field.is_zero(img));
    }
  }

  // associativity of apply through a product
  Matrix<F> a = random_matrix(field, rng, 5, 4);
  Matrix<F> b = random_matrix(field, rng, 4, 6);
  auto v = random_vector(field, rng, 6);
  auto lhs = a.mul(field, b).apply(field, v);
  auto rhs = a.apply(field, b.apply(field, v));
  REQUIRE(lhs.size() == rhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i) CHECK(field.eq(lhs[i], rhs[i]));

  // transpose is an involution
  CHECK(a.transpose(field).transpose(field).equals(field, a));

  // solve: consistent system
  auto x = random_vector(field, rng, 4);
  auto rhs_vec = a.apply(field, x);
  auto sol = solve(field, a, rhs_vec);
  REQUIRE(sol.has_value());
  auto back = a.apply(field, *sol);
  for (std::size_t i = 0; i < back.size(); ++i)
    CHECK(field.eq(back[i], rhs_vec[i]));
}

}  // namespace

TEST_CASE("rationals field basics") {
  Rationals q;
  CHECK(q.str(q.inv(q.from_int(-4))) == "-1/4");
  CHECK(q.is_zero(q.add(q.from_int(3), q.from_int(-3))));
  CHECK_THROWS(q.inv(q.zero()));
}

TEST_CASE("prime field basics") {
  PrimeField f(7);
  CHECK(f.eq(f.mul(f.from_int(3), f.from_int(5)), f.one()));
  CHECK(f.eq(f.inv(f.from_int(3)), f.from_int(5)));
  CHECK(f.eq(f.from_int(-1), f.from_int(6)));
  CHECK_THROWS(PrimeField(1));
  CHECK_THROWS(PrimeField(15));
  CHECK(PrimeField(32003).modulus() == 32003);
  CHECK(PrimeField::probably_prime(32003));
  CHECK_FALSE(PrimeField::probably_prime(32001));
}

TEST_CASE("linalg over Q") { exercise_field(Rationals{}); }

TEST_CASE("linalg over F2") { exercise_field(PrimeField{2}); }

TEST_CASE("linalg over F32003") { exercise_field(PrimeField{32003}); }

TEST_CASE("exact pivoting survives fraction growth") {
  Rationals q;
  // Hilbert-style matrix: ill-conditioned numerically, trivial exactly
  std::vector<std::vector<mpq_class>> rows;
  for (int i = 0; i < 5; ++i) {
    std::vector<mpq_class> r;
    for (int j = 0; j < 5; ++j) r.emplace_back(mpq_class(1) / (i + j + 1));
    rows.push_back(r);
  }
  CHECK(rank(q, Matrix<Rationals>::from_rows(q, rows, 5)) == 5);
}

TEST_CASE("quotient space coset coordinates") {
  Rationals q;
  auto sub_gen = Matrix<Rationals>::from_rows(
      q, {{q.from_int(1), q.from_int(1), q.from_int(0)}}, 3);
  QuotientSpace<Rationals> quot(q, rref(q, sub_gen));
  CHECK(quot.ambient_dim() == 3);
  CHECK(quot.dim() == 2);
  CHECK(quot.coset_columns() == std::vector<std::uint32_t>{1, 2});

  RowVec<Rationals> e0(3);
  e0.append_entry(q, 0, q.one());
  auto coords = quot.reduce(q, e0);
  CHECK(coords[0] == mpq_class(-1));
  CHECK(coords[1] == mpq_class(0));

  auto member = RowVec<Rationals>::from_dense(
      q, {q.from_int(2), q.from_int(2), q.from_int(0)});
  auto zero = quot.reduce(q, member);
  CHECK(zero[0] == 0);
  CHECK(zero[1] == 0);
}

TEST_CASE("seeded randomness is reproducible") {
  PrimeField f(101);
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(f.eq(f.random(a), f.random(b)));
  Rng c(43);
  bool differs = false;
  Rng d(42);
  for (int i = 0; i < 100; ++i)
    if (!f.eq(f.random(c), f.random(d))) differs = true;
  CHECK(differs);
}
