#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "facering/complex.hpp"
#include "facering/field.hpp"
#include "facering/linalg.hpp"
#include "facering/util.hpp"

namespace facering {

namespace detail {

// Simplicial boundary between two chain-group bases given as sorted face
// buckets. Faces absent from the target bucket are projected away, which is
// exactly the relative (pair) boundary when the buckets are filtered.
template <class F>
Matrix<F> boundary_between(const F& field, const std::vector<Face>& from,
                           const std::vector<Face>& to) {
  std::map<Face, std::uint32_t> to_index;
  for (std::size_t i = 0; i < to.size(); ++i)
    to_index.emplace(to[i], static_cast<std::uint32_t>(i));
  std::vector<std::vector<typename F::Elem>> cols;
  cols.reserve(from.size());
  for (const Face& f : from) {
    std::vector<typename F::Elem> col(to.size(), field.zero());
    for (std::size_t i = 0; i < f.size(); ++i) {
      Face sub;
      for (std::size_t j = 0; j < f.size(); ++j)
        if (j != i) sub.push_back(f[j]);
      auto it = to_index.find(sub);
      if (it == to_index.end()) continue;
      col[it->second] =
          (i % 2 == 0) ? field.one() : field.neg(field.one());
    }
    cols.push_back(std::move(col));
  }
  return Matrix<F>::from_columns(field, cols, to.size());
}

// Homology dimensions of a chain family bucketed by cardinality;
// result[c] = dim H_{c-1}. Buckets beyond the vector are empty.
template <class F>
std::vector<long> chain_homology_dims(const F& field,
                                      const std::vector<std::vector<Face>>& buckets) {
  std::size_t top = buckets.size();
  std::vector<std::size_t> ranks(top + 1, 0);
  for (std::size_t c = 1; c < top; ++c) {
    if (buckets[c].empty() || buckets[c - 1].empty()) continue;
    ranks[c] = rank(field, boundary_between(field, buckets[c], buckets[c - 1]));
  }
  std::vector<long> dims(top, 0);
  for (std::size_t c = 0; c < top; ++c)
    dims[c] = static_cast<long>(buckets[c].size()) -
              static_cast<long>(ranks[c]) - static_cast<long>(ranks[c + 1]);
  return dims;
}

}  // namespace detail

// Reduced Betti numbers over the field: result[j] = dim H~_{j-1}(K),
// j = 0..d. The empty face sits in cardinality 0, so the augmentation is
// part of the chain complex and reduced homology falls out directly.
template <class F>
std::vector<long> betti_numbers(const F& field, const SimplicialComplex& k) {
  if (k.is_void()) return {0};
  std::vector<std::vector<Face>> buckets;
  for (int c = 0; c <= k.d(); ++c) buckets.push_back(k.faces(c));
  return detail::chain_homology_dims(field, buckets);
}

// Dimensions of the relative homology of the pair (K, cost tau), computed on
// the chain family of faces containing tau: result[c] = dim H_{c-1}(K, cost tau).
// For tau = emptyset this is reduced homology of K itself.
template <class F>
std::vector<long> relative_homology_dims(const F& field,
                                         const SimplicialComplex& k,
                                         const Face& tau) {
  std::vector<std::vector<Face>> buckets;
  for (int c = 0; c <= k.d(); ++c) {
    std::vector<Face> bucket;
    for (const Face& f : k.faces(c))
      if (std::includes(f.begin(), f.end(), tau.begin(), tau.end()))
        bucket.push_back(f);
    buckets.push_back(std::move(bucket));
  }
  return detail::chain_homology_dims(field, buckets);
}

struct Classification {
  bool pure = false;
  bool connected = false;
  bool buchsbaum = false;
  bool manifold = false;
  bool sphere = false;
  bool orientable = false;
  std::vector<long> betti;         // reduced, index j = dim H~_{j-1}
  std::vector<std::string> notes;  // witnesses for failed properties
};

// Literal link-by-link classification over the given field. Buchsbaum: pure
// and the link of every nonempty face has vanishing reduced homology below
// its top degree. Homology manifold: additionally each such link has the
// homology of a sphere of the matching dimension. Orientability is the
// field-dependent reading: connected manifold with top Betti number 1.
template <class F>
Classification classify(const F& field, const SimplicialComplex& k) {
  Classification c;
  c.betti = betti_numbers(field, k);
  c.pure = k.is_pure();
  c.connected = k.is_connected();
  if (!c.pure) {
    c.notes.push_back("not pure: facets of different dimensions");
    return c;
  }
  if (k.is_void() || k.is_empty_complex()) {
    c.notes.push_back("degenerate complex: no classification attempted");
    return c;
  }
  int d = k.d();
  c.buchsbaum = true;
  c.manifold = true;
  for (int card = 1; card <= d && (c.buchsbaum || c.manifold); ++card) {
    for (const Face& tau : k.faces(card)) {
      std::vector<long> lb = betti_numbers(field, k.link(tau));
      int top = d - card;  // link dimension + 1
      for (int j = 0; j < top; ++j) {
        if (lb[static_cast<std::size_t>(j)] != 0) {
          if (c.buchsbaum) {
            c.buchsbaum = false;
            c.notes.push_back("not Buchsbaum: link of " + k.face_to_string(tau) +
                              " has reduced homology in degree " +
                              std::to_string(j - 1));
          }
          c.manifold = false;
          break;
        }
      }
      if (c.manifold && lb[static_cast<std::size_t>(top)] != 1) {
        c.manifold = false;
        c.notes.push_back("not a homology manifold: link of " +
                          k.face_to_string(tau) + " has top homology of dimension " +
                          std::to_string(lb[static_cast<std::size_t>(top)]));
      }
    }
  }
  if (c.manifold) {
    c.sphere = true;
    for (int j = 0; j <= d && c.sphere; ++j) {
      long expect = (j == d) ? 1 : 0;
      if (c.betti[static_cast<std::size_t>(j)] != expect) {
        c.sphere = false;
        c.notes.push_back("not a homology sphere: reduced Betti " +
                          std::to_string(c.betti[static_cast<std::size_t>(j)]) +
                          " in degree " + std::to_string(j - 1));
      }
    }
  }
  c.orientable = c.connected && c.manifold &&
                 c.betti[static_cast<std::size_t>(d)] == 1;
  if (c.manifold && !c.orientable)
    c.notes.push_back(c.connected ? "manifold but not orientable over " + field.name()
                                  : "manifold but not connected");
  return c;
}

// Graded local cohomology dimensions of the face ring via the filtered-pair
// formula: dim H^j(k[K])_m = sum over nonempty faces sigma of
// count(m, |sigma|) * dim H^(j-1)(K, cost sigma), plus the cost-emptyset
// term at m = 0. count(m, s) counts the monomials of total degree m with
// support exactly sigma (all exponents negative), a composition count.
struct LocalCohomologyTable {
  int d = 0;
  int lo = 0, hi = 0;  // inclusive window of internal degrees m
  std::vector<std::vector<long>> dims;  // dims[j][m - lo], j = 0..d

  long at(int j, int m) const {
    if (j < 0 || j > d || m < lo || m > hi) return 0;
    return dims[static_cast<std::size_t>(j)][static_cast<std::size_t>(m - lo)];
  }

  // True when every module below the top vanishes away from degree 0
  // (within the window); for homology manifolds this is the collapse that
  // turns the general dimension formula into Betti numbers.
  bool below_top_collapsed() const {
    for (int j = 0; j < d; ++j)
      for (int m = lo; m <= hi; ++m)
        if (m != 0 && at(j, m) != 0) return false;
    return true;
  }
};

inline long monomial_support_count(int m, int s) {
  // degree-m monomials with all s support exponents strictly negative
  if (s < 1 || -m < s) return 0;
  return static_cast<long>(binom(-m - 1, s - 1));
}

template <class F>
LocalCohomologyTable local_cohomology(const F& field,
                                      const SimplicialComplex& k, int lo,
                                      int hi) {
  if (lo > hi) throw std::invalid_argument("local_cohomology: empty window");
  LocalCohomologyTable t;
  t.d = k.d();
  t.lo = lo;
  t.hi = hi;
  t.dims.assign(static_cast<std::size_t>(t.d) + 1,
                std::vector<long>(static_cast<std::size_t>(hi - lo) + 1, 0));

  // relative homology vector for every face, keyed by cardinality
  std::vector<std::vector<std::vector<long>>> rel(static_cast<std::size_t>(t.d) + 1);
  for (int card = 0; card <= t.d; ++card)
    for (const Face& tau : k.faces(card))
      rel[static_cast<std::size_t>(card)].push_back(
          relative_homology_dims(field, k, tau));

  for (int j = 0; j <= t.d; ++j) {
    for (int m = lo; m <= hi; ++m) {
      long total = 0;
      for (int card = 1; card <= t.d; ++card) {
        long cnt = monomial_support_count(m, card);
        if (cnt == 0) continue;
        for (const auto& rv : rel[static_cast<std::size_t>(card)])
          total += cnt * rv[static_cast<std::size_t>(j)];
      }
      if (m == 0) total += rel[0][0][static_cast<std::size_t>(j)];
      t.dims[static_cast<std::size_t>(j)][static_cast<std::size_t>(m - lo)] = total;
    }
  }
  return t;
}

}  // namespace facering
