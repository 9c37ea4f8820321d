#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "facering/complex.hpp"

using facering::Face;
using facering::SimplicialComplex;

namespace {
std::string data_path(const std::string& name) {
  return std::string(FACERING_DATA_DIR) + "/" + name;
}
}  // namespace

TEST_CASE("parse bundled torus") {
  auto k = SimplicialComplex::load_file(data_path("torus7.cplx"));
  CHECK(k.n() == 7);
  CHECK(k.dim() == 2);
  CHECK(k.d() == 3);
  CHECK(k.f_vector() == std::vector<long>{1, 7, 21, 14});
  CHECK(k.h_vector() == std::vector<long>{1, 4, 10, -1});
  CHECK(k.is_pure());
  CHECK(k.is_connected());
}

TEST_CASE("parse rejects empty documents and repeated vertices") {
  CHECK_THROWS_AS(SimplicialComplex::parse("# only a comment\n"),
                  std::runtime_error);
  CHECK_THROWS_AS(SimplicialComplex::parse("a b a\n"), std::runtime_error);
}

TEST_CASE("non-maximal faces are absorbed") {
  auto k = SimplicialComplex::parse("1 2\n1 2 3\n2 3\n");
  CHECK(k.facets().size() == 1);
  CHECK(k.f_vector() == std::vector<long>{1, 3, 3, 1});
}

TEST_CASE("comments and duplicate facets") {
  auto k = SimplicialComplex::parse("x y # a facet\ny z\nx y\n");
  CHECK(k.facets().size() == 2);
  CHECK(k.n() == 3);
}

TEST_CASE("generators") {
  auto s3 = facering::simplex_boundary(3);
  CHECK(s3.f_vector() == std::vector<long>{1, 4, 6, 4});
  CHECK(s3.h_vector() == std::vector<long>{1, 1, 1, 1});

  auto c3 = facering::cross_polytope_boundary(3);
  CHECK(c3.f_vector() == std::vector<long>{1, 6, 12, 8});
  CHECK(c3.h_vector() == std::vector<long>{1, 3, 3, 1});
}

TEST_CASE("suspension of the 4-cycle matches the octahedron") {
  auto square = SimplicialComplex::parse("1 2\n2 3\n3 4\n4 1\n");
  auto susp = facering::suspension(square);
  auto octa = facering::cross_polytope_boundary(3);
  CHECK(susp.f_vector() == octa.f_vector());
  CHECK(susp.h_vector() == octa.h_vector());
  CHECK(susp.is_pure());
  CHECK(susp.is_connected());
}

TEST_CASE("join rejects shared labels") {
  auto a = SimplicialComplex::parse("1 2\n");
  auto b = SimplicialComplex::parse("2 3\n");
  CHECK_THROWS_AS(facering::join_complex(a, b), std::invalid_argument);
}

TEST_CASE("link of a vertex in the torus is a hexagon") {
  auto k = SimplicialComplex::load_file(data_path("torus7.cplx"));
  auto lk = k.link(k.face_of_labels({"1"}));
  CHECK(lk.n() == 6);
  CHECK(lk.dim() == 1);
  CHECK(lk.f_vector() == std::vector<long>{1, 6, 6});
  CHECK(lk.is_connected());
  // labels come from the parent
  CHECK(lk.id_of("1") == -1);
  CHECK(lk.id_of("2") >= 0);
}

TEST_CASE("link of a facet is the empty complex") {
  auto k = facering::simplex_boundary(3);
  auto lk = k.link(k.facets()[0]);
  CHECK(lk.is_empty_complex());
  CHECK(lk.dim() == -1);
  CHECK(lk.d() == 0);
  CHECK(lk.n() == 0);
  CHECK(lk.is_face({}));
}

TEST_CASE("star and contrastar in the tetrahedron boundary") {
  auto k = facering::simplex_boundary(3);
  Face v = k.face_of_labels({"1"});

  auto st = k.star(v);
  CHECK(st.f_vector() == std::vector<long>{1, 4, 6, 3});

  auto cost = k.contrastar(v);
  CHECK(cost.facets().size() == 1);
  CHECK(cost.n() == 3);

  auto cost_edge = k.contrastar(k.face_of_labels({"1", "2"}));
  CHECK(cost_edge.f_vector() == std::vector<long>{1, 4, 5, 2});

  auto void_cx = k.contrastar({});
  CHECK(void_cx.is_void());
  CHECK(void_cx.f_vector() == std::vector<long>{0});
  CHECK_FALSE(void_cx.is_face({}));
}

TEST_CASE("face queries") {
  auto k = SimplicialComplex::load_file(data_path("rp2_6.cplx"));
  CHECK(k.faces(0).size() == 1);
  CHECK(k.faces(1).size() == 6);
  CHECK(k.faces(2).size() == 15);
  CHECK(k.faces(3).size() == 10);
  CHECK(k.faces(4).empty());
  CHECK(k.face_count() == 32);
  CHECK(k.is_face(k.face_of_labels({"1", "2"})));
  CHECK_FALSE(k.is_face({0, 1, 2, 3}));
}

TEST_CASE("disconnected complex is detected") {
  auto k = SimplicialComplex::load_file(data_path("disjoint_union.cplx"));
  CHECK_FALSE(k.is_connected());
  CHECK(k.is_pure());
}
