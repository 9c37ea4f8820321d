#pragma once

#include <string>
#include <vector>

namespace facering {

// A face is a strictly increasing vector of vertex ids.
using Face = std::vector<int>;

// Finite abstract simplicial complex with labeled vertices. Immutable after
// construction; every face of every cardinality is materialized up front, so
// all queries are cheap lookups. Two degenerate complexes are representable:
// the empty complex {emptyset} (facets = {{}}) and the void complex with no
// faces at all (facets = {}), which arises as contrastar(emptyset).
class SimplicialComplex {
 public:
  // Build from facet lists given as label tuples. Non-maximal and duplicate
  // entries are absorbed. A repeated label inside one tuple is an error.
  static SimplicialComplex from_facet_labels(
      const std::vector<std::vector<std::string>>& facet_labels);

  // Parse the text format: one face per line, whitespace-separated labels,
  // '#' starts a comment, blank lines ignored. A document with no faces is
  // an error.
  static SimplicialComplex parse(const std::string& text);
  static SimplicialComplex load_file(const std::string& path);

  bool is_void() const { return facets_.empty(); }
  bool is_empty_complex() const {
    return facets_.size() == 1 && facets_[0].empty();
  }

  int n() const { return static_cast<int>(labels_.size()); }

  // Dimension of the complex; the empty complex has dimension -1.
  int dim() const;

  // Krull dimension of the face ring: dim() + 1.
  int d() const { return dim() + 1; }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_[v]; }
  int id_of(const std::string& label) const;  // -1 when absent

  const std::vector<Face>& facets() const { return facets_; }

  // All faces of the given cardinality, sorted; card 0 yields {emptyset}.
  const std::vector<Face>& faces(int card) const;

  // Total number of faces including the empty face.
  std::size_t face_count() const;

  bool is_face(const Face& f) const;
  bool is_pure() const;
  bool is_connected() const;  // via the 1-skeleton; void and empty are connected

  // f_{j-1} = number of faces of cardinality j; returns (f_{-1}, ..., f_{d-1}).
  std::vector<long> f_vector() const;
  // h_j = sum_i (-1)^(j-i) C(d-i, j-i) f_{i-1}; returns (h_0, ..., h_d).
  std::vector<long> h_vector() const;

  // Subcomplex operators. Labels are inherited from the parent, so vertex
  // identities survive (the link of v in the 7-vertex torus is a hexagon on
  // the other six labels). tau must be a face for link and star.
  SimplicialComplex link(const Face& tau) const;
  SimplicialComplex star(const Face& tau) const;
  // Faces not containing tau; contrastar(emptyset) is the void complex.
  SimplicialComplex contrastar(const Face& tau) const;

  Face face_of_labels(const std::vector<std::string>& ls) const;
  std::vector<std::string> labels_of_face(const Face& f) const;
  std::string face_to_string(const Face& f) const;

  bool operator==(const SimplicialComplex& other) const {
    return labels_ == other.labels_ && facets_ == other.facets_;
  }

 private:
  SimplicialComplex() = default;
  static SimplicialComplex from_facets_ids(std::vector<std::string> labels,
                                           std::vector<Face> facets);
  void build_face_cache();

  std::vector<std::string> labels_;
  std::vector<Face> facets_;
  std::vector<std::vector<Face>> faces_by_card_;
};

// Generators.
SimplicialComplex simplex_boundary(int d);
SimplicialComplex cross_polytope_boundary(int d);
// Join of complexes with disjoint label sets (a shared label is an error).
SimplicialComplex join_complex(const SimplicialComplex& a,
                               const SimplicialComplex& b);
// Join with two fresh cone points labeled "north" and "south".
SimplicialComplex suspension(const SimplicialComplex& k);

}  // namespace facering
