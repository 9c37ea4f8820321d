#include <set>

#include "doctest.h"
#include "facering/face_ring.hpp"

using namespace facering;

namespace {

SimplicialComplex load(const std::string& name) {
  return SimplicialComplex::load_file(std::string(FACERING_DATA_DIR) + "/" + name);
}

template <class F>
LinearForm<F> coordinate_form(const F& field, int n, int v) {
  LinearForm<F> e(static_cast<std::size_t>(n), field.zero());
  e[static_cast<std::size_t>(v)] = field.one();
  return e;
}

}  // namespace

TEST_CASE("monomial bases: counts match the face-ring Hilbert function") {
  for (const char* name : {"torus7.cplx", "rp2_6.cplx", "klein8.cplx",
                           "disjoint_union.cplx", "simplex_boundary_3.cplx"}) {
    SimplicialComplex k = load(name);
    for (int i = 0; i <= k.d() + 1; ++i) {
      MonomialBasis b = monomial_basis(k, i);
      CHECK(static_cast<long>(b.size()) == face_ring_dimension(k, i));
      // lex sorted, no duplicates, supports are faces
      std::set<Monomial> seen;
      for (const Monomial& m : b.monos) {
        CHECK(static_cast<int>(m.size()) == i);
        CHECK(k.is_face(monomial_support(m)));
        CHECK(seen.insert(m).second);
      }
      CHECK(std::is_sorted(b.monos.begin(), b.monos.end()));
      for (std::size_t j = 0; j < b.monos.size(); ++j)
        CHECK(*b.find(b.monos[j]) == j);
    }
  }
  SimplicialComplex torus = load("torus7.cplx");
  CHECK(monomial_basis(torus, 2).size() == 28);
  CHECK(monomial_basis(torus, 3).size() == 63);
}

TEST_CASE("coordinate forms on the tetrahedron boundary are not an l.s.o.p.") {
  SimplicialComplex k = simplex_boundary(3);
  Rationals q;
  std::vector<LinearForm<Rationals>> theta;
  for (int v = 0; v < 3; ++v) theta.push_back(coordinate_form(q, k.n(), v));
  // facet {x2,x3,x4} misses x1's column: submatrix rank 2
  CHECK_FALSE(facet_submatrices_full_rank(q, k, theta));
  CHECK_FALSE(verify_lsop(q, k, theta));
}

TEST_CASE("artinian reduction dimensions over Q match known values") {
  Rationals q;
  Rng rng(11);
  struct Row {
    const char* file;
    std::vector<long> dims;
  };
  const Row rows[] = {
      {"torus7.cplx", {1, 4, 10, 1}},
      {"rp2_6.cplx", {1, 3, 6, 0}},
      {"klein8.cplx", {1, 5, 11, 0}},
      {"disjoint_union.cplx", {1, 5, 2, 2}},
      {"simplex_boundary_3.cplx", {1, 1, 1, 1}},
      {"cross_polytope_3.cplx", {1, 3, 3, 1}},
  };
  for (const Row& row : rows) {
    CAPTURE(row.file);
    SimplicialComplex k = load(row.file);
    auto cert = sample_certified_reduction(q, k, rng);
    CHECK(cert.reduction.certified());
    CHECK(cert.reduction.dims() == row.dims);
    CHECK(cert.reduction.dim(0) == 1);
    CHECK(cert.reduction.dim(1) == k.n() - k.d());
    CHECK(cert.reduction.dim(k.d() + 1) == 0);
    CHECK(verify_lsop(q, k, cert.lsop.forms));
  }
}

TEST_CASE("reduction dimensions are seed independent") {
  Rationals q;
  SimplicialComplex k = load("torus7.cplx");
  std::vector<long> expect = {1, 4, 10, 1};
  for (std::uint64_t seed : {3ull, 77ull, 20260819ull}) {
    Rng rng(seed);
    auto cert = sample_certified_reduction(q, k, rng);
    CHECK(cert.reduction.dims() == expect);
  }
}

TEST_CASE("F2 reductions certify where F2 l.s.o.p.s exist") {
  PrimeField f2(2);
  Rng rng(5);
  SimplicialComplex rp2 = load("rp2_6.cplx");
  auto cert = sample_certified_reduction(f2, rp2, rng);
  CHECK(cert.reduction.dims() == std::vector<long>{1, 3, 6, 1});

  SimplicialComplex klein = load("klein8.cplx");
  auto kc = sample_certified_reduction(f2, klein, rng);
  CHECK(kc.reduction.dims() == std::vector<long>{1, 5, 11, 1});
}

TEST_CASE("certification failure reports the seeds it tried") {
  // the 7-vertex torus admits no l.s.o.p. over F2 at all
  PrimeField f2(2);
  SimplicialComplex k = load("torus7.cplx");
  Rng rng(9);
  try {
    sample_certified_reduction(f2, k, rng, 2, 3000);
    FAIL("expected CertificationError");
  } catch (const CertificationError& e) {
    std::string msg = e.what();
    CHECK(msg.find("could not certify l.s.o.p.") != std::string::npos);
    CHECK(msg.find("2 resamples") != std::string::npos);
    CHECK(msg.find("seeds") != std::string::npos);
  }
}

TEST_CASE("socle dimensions match theorem predictions on the corpus") {
  Rationals q;
  PrimeField f2(2);
  Rng rng(13);

  SimplicialComplex torus = load("torus7.cplx");
  auto tc = sample_certified_reduction(q, torus, rng);
  SocleDecomposition<Rationals> ts = socle(tc.reduction);
  CHECK(ts.dims == std::vector<long>{0, 0, 6, 1});
  SoclePrediction tp = socle_prediction(classify(q, torus), torus.d());
  CHECK(tp.applies);
  CHECK(tp.dims == ts.dims);

  SimplicialComplex rp2 = load("rp2_6.cplx");
  auto rc2 = sample_certified_reduction(f2, rp2, rng);
  SocleDecomposition<PrimeField> rs2 = socle(rc2.reduction);
  CHECK(rs2.dims == std::vector<long>{0, 0, 3, 1});
  SoclePrediction rp_pred = socle_prediction(classify(f2, rp2), rp2.d());
  CHECK(rp_pred.applies);  // orientable over F2
  CHECK(rp_pred.dims == rs2.dims);

  auto rcq = sample_certified_reduction(q, rp2, rng);
  SocleDecomposition<Rationals> rsq = socle(rcq.reduction);
  CHECK(rsq.dims == std::vector<long>{0, 0, 6, 0});
  CHECK_FALSE(socle_prediction(classify(q, rp2), rp2.d()).applies);

  SimplicialComplex klein = load("klein8.cplx");
  auto kc = sample_certified_reduction(f2, klein, rng);
  CHECK(socle(kc.reduction).dims == std::vector<long>{0, 0, 6, 1});

  SimplicialComplex disj = load("disjoint_union.cplx");
  auto dc = sample_certified_reduction(q, disj, rng);
  CHECK(socle(dc.reduction).dims == std::vector<long>{0, 3, 0, 2});
  CHECK_FALSE(socle_prediction(classify(q, disj), disj.d()).applies);

  SimplicialComplex sphere = simplex_boundary(4);
  auto sc = sample_certified_reduction(q, sphere, rng);
  CHECK(socle(sc.reduction).dims == std::vector<long>{0, 0, 0, 0, 1});
  SoclePrediction sp = socle_prediction(classify(q, sphere), sphere.d());
  CHECK(sp.applies);
  CHECK(sp.dims == std::vector<long>{0, 0, 0, 0, 1});
}

TEST_CASE("socle kernels are killed by every variable") {
  Rationals q;
  SimplicialComplex k = load("torus7.cplx");
  Rng rng(17);
  auto cert = sample_certified_reduction(q, k, rng);
  const auto& r = cert.reduction;
  SocleDecomposition<Rationals> s = socle(r);
  CHECK(s.dims[static_cast<std::size_t>(r.d())] == r.dim(r.d()));
  for (int i = 0; i < r.d(); ++i) {
    for (const RowVec<Rationals>& gen : s.bases[static_cast<std::size_t>(i)].rows) {
      for (int v = 0; v < k.n(); ++v) {
        std::vector<Rationals::Elem> img =
            r.variable_map(v, i).apply(q, gen.to_dense(q));
        for (const auto& e : img) CHECK(q.is_zero(e));
      }
    }
  }
}

TEST_CASE("multiplication maps are linear in the form and commute") {
  Rationals q;
  SimplicialComplex k = load("rp2_6.cplx");
  Rng rng(23);
  auto cert = sample_certified_reduction(q, k, rng);
  const auto& r = cert.reduction;

  LinearForm<Rationals> w1, w2, sum;
  for (int v = 0; v < k.n(); ++v) {
    w1.push_back(q.random(rng));
    w2.push_back(q.random(rng));
    Rationals::Elem s = q.add(w1.back(), w2.back());
    sum.push_back(s);
  }
  for (int i = 0; i < r.d(); ++i) {
    Matrix<Rationals> m1 = r.multiplication_map(w1, i);
    Matrix<Rationals> m2 = r.multiplication_map(w2, i);
    Matrix<Rationals> ms = r.multiplication_map(sum, i);
    for (std::size_t a = 0; a < ms.nrows(); ++a)
      for (std::size_t b = 0; b < ms.ncols(); ++b)
        CHECK(q.eq(ms.get(q, a, b), q.add(m1.get(q, a, b), m2.get(q, a, b))));
  }
  // x_u then x_v agrees with x_v then x_u
  for (int i = 0; i + 2 <= r.d(); ++i) {
    Matrix<Rationals> uv = r.variable_map(0, i + 1).mul(q, r.variable_map(1, i));
    Matrix<Rationals> vu = r.variable_map(1, i + 1).mul(q, r.variable_map(0, i));
    CHECK(uv.equals(q, vu));
  }
  // the zero form multiplies to the zero map
  LinearForm<Rationals> zero(static_cast<std::size_t>(k.n()), q.zero());
  Matrix<Rationals> mz = r.multiplication_map(zero, 1);
  for (std::size_t a = 0; a < mz.nrows(); ++a)
    for (std::size_t b = 0; b < mz.ncols(); ++b)
      CHECK(q.is_zero(mz.get(q, a, b)));
}

TEST_CASE("normalization pivots on a facet and preserves the quotient") {
  Rationals q;
  SimplicialComplex k = load("torus7.cplx");
  Rng rng(29);
  auto cert = sample_certified_reduction(q, k, rng);
  Face facet = k.facets().front();
  int lead = facet[1];
  Lsop<Rationals> norm = normalize_lsop(q, k, cert.lsop, facet, lead);
  CHECK(norm.normalized);
  CHECK(norm.normalized_facet == facet);

  // unit coefficient at its own pivot vertex, zero at the other facet vertices
  Face order{lead};
  for (int v : facet)
    if (v != lead) order.push_back(v);
  for (std::size_t i = 0; i < norm.forms.size(); ++i) {
    for (std::size_t j = 0; j < order.size(); ++j) {
      Rationals::Elem c = norm.forms[i][static_cast<std::size_t>(order[j])];
      if (i == j)
        CHECK(q.eq(c, q.one()));
      else
        CHECK(q.is_zero(c));
    }
  }

  ArtinianReduction<Rationals> renorm(q, k, norm.forms);
  CHECK(renorm.dims() == cert.reduction.dims());
  CHECK(renorm.certified());

  // idempotent: normalizing again changes nothing
  Lsop<Rationals> again = normalize_lsop(q, k, norm, facet, lead);
  for (std::size_t i = 0; i < norm.forms.size(); ++i)
    for (std::size_t vidx = 0; vidx < norm.forms[i].size(); ++vidx)
      CHECK(q.eq(again.forms[i][vidx], norm.forms[i][vidx]));
}

TEST_CASE("normalization refuses a singular facet submatrix") {
  Rationals q;
  SimplicialComplex k = simplex_boundary(3);
  // forms that ignore vertex 0 entirely: any facet containing 0 is singular
  std::vector<LinearForm<Rationals>> forms;
  for (int t = 1; t <= 3; ++t) forms.push_back(coordinate_form(q, k.n(), t));
  Lsop<Rationals> lsop{forms, 0, false, {}};
  Face facet = {0, 1, 2};
  CHECK(k.is_face(facet));
  CHECK_THROWS_AS(normalize_lsop(q, k, lsop, facet), std::invalid_argument);
}

TEST_CASE("Schenzel's formula matches the certified Hilbert function") {
  Rationals q;
  PrimeField f2(2);
  Rng rng(31);
  struct Row {
    const char* file;
    bool over_f2;
    std::vector<long> expect;
  };
  const Row rows[] = {
      {"torus7.cplx", false, {1, 4, 10, 1}},
      {"rp2_6.cplx", false, {1, 3, 6, 0}},
      {"rp2_6.cplx", true, {1, 3, 6, 1}},
      {"klein8.cplx", true, {1, 5, 11, 1}},
      {"disjoint_union.cplx", false, {1, 5, 2, 2}},
      {"simplex_boundary_3.cplx", false, {1, 1, 1, 1}},
  };
  for (const Row& row : rows) {
    CAPTURE(row.file);
    SimplicialComplex k = load(row.file);
    std::vector<long> pred;
    std::vector<long> computed;
    if (row.over_f2) {
      pred = schenzel_hilbert(f2, k);
      computed = sample_certified_reduction(f2, k, rng).reduction.dims();
    } else {
      pred = schenzel_hilbert(q, k);
      computed = sample_certified_reduction(q, k, rng).reduction.dims();
    }
    CHECK(pred == row.expect);
    CHECK(computed == row.expect);
  }
}

TEST_CASE("Schenzel's formula refuses non-Buchsbaum input with a witness") {
  Rationals q;
  SimplicialComplex k = SimplicialComplex::parse("1 2 3\n3 4\n");
  try {
    schenzel_hilbert(q, k);
    FAIL("expected domain_error");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("not applicable") != std::string::npos);
  }
}
