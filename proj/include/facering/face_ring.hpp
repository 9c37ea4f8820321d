#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "facering/complex.hpp"
#include "facering/field.hpp"
#include "facering/homology.hpp"
#include "facering/linalg.hpp"
#include "facering/util.hpp"

namespace facering {

// Monomial in the face ring: vertex ids with multiplicity, sorted ascending.
// The support (set of distinct ids) is a face, or the monomial is zero.
using Monomial = std::vector<int>;

inline Face monomial_support(const Monomial& m) {
  Face s;
  for (int v : m)
    if (s.empty() || s.back() != v) s.push_back(v);
  return s;
}

struct MonomialBasis {
  int degree = 0;
  std::vector<Monomial> monos;  // lex order
  std::map<Monomial, std::uint32_t> index;

  std::size_t size() const { return monos.size(); }

  std::optional<std::uint32_t> find(const Monomial& m) const {
    auto it = index.find(m);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
};

// All degree-i monomials whose support is a face, in lex order. Enumerated
// face by face: for each face of cardinality s <= i, the compositions of i
// into s positive parts give the exponent patterns with that exact support.
inline MonomialBasis monomial_basis(const SimplicialComplex& k, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial_basis: degree must be >= 0");
  MonomialBasis b;
  b.degree = degree;
  if (degree == 0) {
    if (!k.is_void()) b.monos.push_back({});
  } else {
    int maxcard = std::min(degree, k.is_void() ? 0 : k.d());
    for (int card = 1; card <= maxcard; ++card) {
      for (const Face& f : k.faces(card)) {
        // exponent vectors e >= 1 with sum = degree
        std::vector<int> expo(f.size(), 1);
        int rest = degree - card;
        // distribute `rest` extra among positions, lexicographically
        std::vector<int> extra(f.size(), 0);
        // iterate compositions of rest into card nonnegative parts
        std::function<void(std::size_t, int)> go = [&](std::size_t pos, int left) {
          if (pos + 1 == extra.size()) {
            extra[pos] = left;
            Monomial m;
            for (std::size_t t = 0; t < f.size(); ++t)
              for (int c = 0; c < expo[t] + extra[t]; ++c) m.push_back(f[t]);
            b.monos.push_back(std::move(m));
            return;
          }
          for (int take = 0; take <= left; ++take) {
            extra[pos] = take;
            go(pos + 1, left - take);
          }
        };
        go(0, rest);
      }
    }
    std::sort(b.monos.begin(), b.monos.end());
  }
  for (std::size_t i = 0; i < b.monos.size(); ++i)
    b.index.emplace(b.monos[i], static_cast<std::uint32_t>(i));
  return b;
}

// Expected dimension of k[K]_i: sum over j of f_{j-1} * C(i-1, j-1).
inline long face_ring_dimension(const SimplicialComplex& k, int i) {
  if (i == 0) return k.is_void() ? 0 : 1;
  long total = 0;
  std::vector<long> f = k.f_vector();
  for (int j = 1; j < static_cast<int>(f.size()); ++j)
    total += f[static_cast<std::size_t>(j)] * static_cast<long>(binom(i - 1, j - 1));
  return total;
}

template <class F>
using LinearForm = std::vector<typename F::Elem>;

template <class F>
struct Lsop {
  std::vector<LinearForm<F>> forms;  // d linear forms over the vertex ids
  std::uint64_t seed = 0;            // sampling seed that produced the forms
  bool normalized = false;
  Face normalized_facet;             // pivot facet when normalized
};

class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The Artinian reduction k(K) = k[K]/(Theta), degree by degree: per degree
// the ambient monomial basis, the image subspace span{theta_t * m}, and the
// coset basis of standard (non-pivot) monomials. Degrees 0..d+1 are built;
// dim of degree d+1 is the l.s.o.p. certificate.
template <class F>
class ArtinianReduction {
 public:
  using Elem = typename F::Elem;

  ArtinianReduction(const F& field, const SimplicialComplex& k,
                    std::vector<LinearForm<F>> theta)
      : field_(field), k_(k), theta_(std::move(theta)) {
    if (static_cast<int>(theta_.size()) != k_.d())
      throw std::invalid_argument("ArtinianReduction: need exactly d forms");
    for (const auto& th : theta_)
      if (static_cast<int>(th.size()) != k_.n())
        throw std::invalid_argument("ArtinianReduction: form width mismatch");
    int top = k_.d() + 1;
    for (int i = 0; i <= top; ++i) basis_.push_back(monomial_basis(k_, i));
    quot_.resize(static_cast<std::size_t>(top) + 1);
    quot_[0] = QuotientSpace<F>(field_, rref(field_, {}, basis_[0].size()));
    for (int i = 1; i <= top; ++i) {
      std::vector<RowVec<F>> rows;
      const auto& below = basis_[static_cast<std::size_t>(i - 1)];
      rows.reserve(theta_.size() * below.size());
      for (const auto& th : theta_)
        for (const Monomial& m : below.monos)
          rows.push_back(expand_form_times_monomial(th, m, i));
      quot_[static_cast<std::size_t>(i)] =
          QuotientSpace<F>(field_, rref(field_, std::move(rows), basis_[static_cast<std::size_t>(i)].size()));
    }
  }

  const F& field() const { return field_; }
  const SimplicialComplex& complex() const { return k_; }
  const std::vector<LinearForm<F>>& theta() const { return theta_; }
  int d() const { return k_.d(); }

  const MonomialBasis& basis(int i) const {
    return basis_.at(static_cast<std::size_t>(i));
  }
  const QuotientSpace<F>& quotient(int i) const {
    return quot_.at(static_cast<std::size_t>(i));
  }

  // dim k(K)_i; degrees outside the built range are zero only for a
  // certified l.s.o.p., which every sampling path guarantees.
  long dim(int i) const {
    if (i < 0 || i > d() + 1) return 0;
    return static_cast<long>(quot_[static_cast<std::size_t>(i)].dim());
  }

  std::vector<long> dims() const {
    std::vector<long> out;
    for (int i = 0; i <= d(); ++i) out.push_back(dim(i));
    return out;
  }

  bool certified() const { return dim(d() + 1) == 0; }

  // The coset-basis monomial behind coordinate j of degree i.
  const Monomial& coset_monomial(int i, std::size_t j) const {
    const auto& q = quot_[static_cast<std::size_t>(i)];
    return basis_[static_cast<std::size_t>(i)].monos[q.coset_columns()[j]];
  }

  // Expand form * monomial into ambient coordinates of degree deg(m) + 1,
  // with face-support truncation (non-face products vanish in k[K]).
  RowVec<F> expand_form_times_monomial(const LinearForm<F>& w,
                                       const Monomial& m, int target) const {
    std::map<std::uint32_t, Elem> acc;
    accumulate_product(w, m, field_.one(), target, acc);
    return row_from_map(acc, basis_[static_cast<std::size_t>(target)].size());
  }

  // Multiply an ambient polynomial of degree i by a linear form, staying in
  // ambient coordinates of degree i + 1.
  RowVec<F> multiply_ambient(const LinearForm<F>& w, int i,
                             const RowVec<F>& poly) const {
    std::map<std::uint32_t, Elem> acc;
    const auto& from = basis_[static_cast<std::size_t>(i)];
    poly.for_each_nonzero([&](std::uint32_t c, const Elem& coef) {
      accumulate_product(w, from.monos[c], coef, i + 1, acc);
    });
    return row_from_map(acc, basis_[static_cast<std::size_t>(i + 1)].size());
  }

  // Coset coordinates of an ambient degree-i vector.
  std::vector<Elem> reduce(int i, const RowVec<F>& ambient) const {
    return quot_[static_cast<std::size_t>(i)].reduce(field_, ambient);
  }

  // Matrix of multiplication by a linear form on coset bases,
  // k(K)_i -> k(K)_{i+1}. Valid for 0 <= i <= d.
  Matrix<F> multiplication_map(const LinearForm<F>& w, int i) const {
    if (i < 0 || i > d())
      throw std::invalid_argument("multiplication_map: degree out of range");
    const auto& from = quot_[static_cast<std::size_t>(i)];
    const auto& to = quot_[static_cast<std::size_t>(i + 1)];
    std::vector<std::vector<Elem>> cols;
    cols.reserve(from.dim());
    for (std::size_t j = 0; j < from.dim(); ++j) {
      RowVec<F> prod = expand_form_times_monomial(w, coset_monomial(i, j), i + 1);
      cols.push_back(to.reduce(field_, prod));
    }
    return Matrix<F>::from_columns(field_, cols, to.dim());
  }

  // Cached multiplication by a single variable.
  const Matrix<F>& variable_map(int v, int i) const {
    auto key = std::make_pair(v, i);
    auto it = var_cache_.find(key);
    if (it != var_cache_.end()) return it->second;
    LinearForm<F> e(static_cast<std::size_t>(k_.n()), field_.zero());
    e[static_cast<std::size_t>(v)] = field_.one();
    return var_cache_.emplace(key, multiplication_map(e, i)).first->second;
  }

 private:
  void accumulate_product(const LinearForm<F>& w, const Monomial& m,
                          const Elem& coef, int target,
                          std::map<std::uint32_t, Elem>& acc) const {
    const auto& tb = basis_[static_cast<std::size_t>(target)];
    for (int v = 0; v < k_.n(); ++v) {
      const Elem& wv = w[static_cast<std::size_t>(v)];
      if (field_.is_zero(wv)) continue;
      Monomial prod = m;
      prod.insert(std::upper_bound(prod.begin(), prod.end(), v), v);
      if (!k_.is_face(monomial_support(prod))) continue;
      auto idx = tb.find(prod);
      if (!idx)
        throw std::logic_error("internal: face-supported monomial missing from basis");
      Elem add = field_.mul(coef, wv);
      auto [it, fresh] = acc.emplace(*idx, add);
      if (!fresh) it->second = field_.add(it->second, add);
    }
  }

  RowVec<F> row_from_map(const std::map<std::uint32_t, Elem>& acc,
                         std::size_t width) const {
    RowVec<F> row(width);
    for (const auto& [c, v] : acc) {
      if (!field_.is_zero(v)) row.append_entry(field_, c, v);
    }
    return row;
  }

  F field_;
  SimplicialComplex k_;
  std::vector<LinearForm<F>> theta_;
  std::vector<MonomialBasis> basis_;       // 0..d+1
  std::vector<QuotientSpace<F>> quot_;     // 0..d+1
  mutable std::map<std::pair<int, int>, Matrix<F>> var_cache_;
};

// Exact l.s.o.p. prefilter: Theta cuts k[K] down to dimension zero iff for
// every facet sigma the d x |sigma| column submatrix of the coefficient
// matrix has rank |sigma|. Cheap to test, so random draws that cannot work
// are rejected before any reduction is built.
template <class F>
bool facet_submatrices_full_rank(const F& field, const SimplicialComplex& k,
                                 const std::vector<LinearForm<F>>& theta) {
  for (const Face& f : k.facets()) {
    Matrix<F> sub(0, f.size());
    for (const auto& th : theta) {
      std::vector<typename F::Elem> row;
      row.reserve(f.size());
      for (int v : f) row.push_back(th[static_cast<std::size_t>(v)]);
      sub.push_row(RowVec<F>::from_dense(field, row));
    }
    if (rank(field, sub) != f.size()) return false;
  }
  return true;
}

// Certification per the contract: the degree-(d+1) component vanishes.
template <class F>
bool verify_lsop(const F& field, const SimplicialComplex& k,
                 const std::vector<LinearForm<F>>& theta) {
  return ArtinianReduction<F>(field, k, theta).certified();
}

template <class F>
struct CertifiedReduction {
  ArtinianReduction<F> reduction;
  Lsop<F> lsop;
};

// Sample random linear forms until one certifies. Each resample owns a
// derived seed and a budget of prefilter draws; the first draw that passes
// the facet-rank prefilter is certified by the degree-(d+1) dimension check.
// Exhausting every resample raises CertificationError listing the seeds, so
// fields with no l.s.o.p. at all (they exist) fail loudly and cleanly.
template <class F>
CertifiedReduction<F> sample_certified_reduction(const F& field,
                                                 const SimplicialComplex& k,
                                                 Rng& rng, int resamples = 3,
                                                 long max_draws = 200000) {
  int d = k.d();
  int n = k.n();
  std::vector<std::uint64_t> tried;
  for (int r = 0; r < resamples; ++r) {
    std::uint64_t seed = rng.fork();
    tried.push_back(seed);
    Rng local(seed);
    for (long draw = 0; draw < max_draws; ++draw) {
      std::vector<LinearForm<F>> theta(
          static_cast<std::size_t>(d),
          LinearForm<F>(static_cast<std::size_t>(n), field.zero()));
      for (auto& th : theta)
        for (auto& c : th) c = field.random(local);
      if (!facet_submatrices_full_rank(field, k, theta)) continue;
      ArtinianReduction<F> red(field, k, theta);
      if (red.certified())
        return {std::move(red), Lsop<F>{std::move(theta), seed, false, {}}};
      break;  // prefilter passed yet dimension check failed: fresh resample
    }
  }
  std::string msg = "could not certify l.s.o.p. over " + field.name() +
                    " after " + std::to_string(resamples) + " resamples (seeds";
  for (std::uint64_t s : tried) msg += " " + std::to_string(s);
  msg += ")";
  throw CertificationError(msg);
}

template <class F>
Lsop<F> sample_lsop(const F& field, const SimplicialComplex& k, Rng& rng,
                    int resamples = 3, long max_draws = 200000) {
  return sample_certified_reduction(field, k, rng, resamples, max_draws).lsop;
}

// Gaussian elimination of Theta against a facet: afterwards form i reads
// x_{v_i} + sum over j outside the facet. The pivot order follows the given
// facet order; pass lead >= 0 to force that vertex into the first row.
template <class F>
Lsop<F> normalize_lsop(const F& field, const SimplicialComplex& k,
                       const Lsop<F>& lsop, const Face& facet, int lead = -1) {
  int d = k.d();
  int n = k.n();
  if (static_cast<int>(facet.size()) != d)
    throw std::invalid_argument("normalize_lsop: pivot face must be a facet");
  Face order;
  if (lead >= 0) {
    order.push_back(lead);
    for (int v : facet)
      if (v != lead) order.push_back(v);
    if (order.size() != facet.size())
      throw std::invalid_argument("normalize_lsop: lead vertex not in facet");
  } else {
    order = facet;
  }
  std::vector<int> colperm = order;  // facet columns first, then the rest
  std::vector<char> in_facet(static_cast<std::size_t>(n), 0);
  for (int v : facet) in_facet[static_cast<std::size_t>(v)] = 1;
  for (int v = 0; v < n; ++v)
    if (!in_facet[static_cast<std::size_t>(v)]) colperm.push_back(v);

  Matrix<F> m(0, static_cast<std::size_t>(n));
  for (const auto& th : lsop.forms) {
    std::vector<typename F::Elem> row;
    row.reserve(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c)
      row.push_back(th[static_cast<std::size_t>(colperm[static_cast<std::size_t>(c)])]);
    m.push_row(RowVec<F>::from_dense(field, row));
  }
  EchelonForm<F> e = rref(field, m);
  if (e.rank() != static_cast<std::size_t>(d))
    throw std::invalid_argument("normalize_lsop: facet submatrix is singular");
  for (int i = 0; i < d; ++i)
    if (e.pivots[static_cast<std::size_t>(i)] != static_cast<std::uint32_t>(i))
      throw std::invalid_argument("normalize_lsop: facet submatrix is singular");

  Lsop<F> out;
  out.seed = lsop.seed;
  out.normalized = true;
  out.normalized_facet = facet;
  for (int i = 0; i < d; ++i) {
    LinearForm<F> th(static_cast<std::size_t>(n), field.zero());
    for (int c = 0; c < n; ++c)
      th[static_cast<std::size_t>(colperm[static_cast<std::size_t>(c)])] =
          e.rows[static_cast<std::size_t>(i)].get(field, static_cast<std::uint32_t>(c));
    out.forms.push_back(std::move(th));
  }
  return out;
}

// Schenzel's Hilbert-function formula for Buchsbaum complexes:
// h'_i = h_i + C(d,i) * sum_{j=1}^{i-1} (-1)^{i-j-1} * b_{j-1},
// with b the reduced Betti numbers over the same field.
inline std::vector<long> schenzel_transform(const std::vector<long>& h,
                                            const std::vector<long>& betti,
                                            int d) {
  std::vector<long> hp(static_cast<std::size_t>(d) + 1, 0);
  for (int i = 0; i <= d; ++i) {
    long corr = 0;
    for (int j = 1; j <= i - 1; ++j) {
      long b = j < static_cast<int>(betti.size()) ? betti[static_cast<std::size_t>(j)] : 0;
      corr += (((i - j - 1) % 2 == 0) ? 1 : -1) * b;
    }
    hp[static_cast<std::size_t>(i)] =
        h[static_cast<std::size_t>(i)] + static_cast<long>(binom(d, i)) * corr;
  }
  return hp;
}

template <class F>
std::vector<long> schenzel_hilbert(const F& field, const SimplicialComplex& k,
                                   const Classification& cls) {
  (void)field;
  if (!cls.buchsbaum) {
    std::string why = cls.notes.empty() ? "complex is not Buchsbaum" : cls.notes.front();
    throw std::domain_error("Schenzel formula not applicable: " + why);
  }
  return schenzel_transform(k.h_vector(), cls.betti, k.d());
}

template <class F>
std::vector<long> schenzel_hilbert(const F& field, const SimplicialComplex& k) {
  return schenzel_hilbert(field, k, classify(field, k));
}

// Graded socle: per degree the kernel of the stacked multiplication by every
// variable. The top degree is all socle since k(K)_{d+1} = 0.
template <class F>
struct SocleDecomposition {
  std::vector<long> dims;               // degree 0..d
  std::vector<EchelonForm<F>> bases;    // kernels in coset coordinates
};

template <class F>
SocleDecomposition<F> socle(const ArtinianReduction<F>& r) {
  const F& field = r.field();
  SocleDecomposition<F> s;
  for (int i = 0; i <= r.d(); ++i) {
    std::vector<Matrix<F>> blocks;
    blocks.reserve(static_cast<std::size_t>(r.complex().n()));
    for (int v = 0; v < r.complex().n(); ++v)
      blocks.push_back(r.variable_map(v, i));
    Matrix<F> stacked = Matrix<F>::vstack(blocks, static_cast<std::size_t>(r.dim(i)));
    EchelonForm<F> ker = kernel_basis(field, stacked);
    s.dims.push_back(static_cast<long>(ker.rank()));
    s.bases.push_back(std::move(ker));
  }
  return s;
}

// Theorem-predicted socle dimensions, applicable to connected orientable
// homology manifolds over the field: C(d,i) * b_{i-1} below the top and
// dim S_0 = 1 at the top.
struct SoclePrediction {
  bool applies = false;
  std::vector<long> dims;
};

inline SoclePrediction socle_prediction(const Classification& cls, int d) {
  SoclePrediction p;
  p.applies = cls.connected && cls.manifold && cls.orientable;
  if (!p.applies) return p;
  for (int i = 0; i <= d; ++i) {
    if (i == d) {
      p.dims.push_back(1);
    } else {
      long b = i < static_cast<int>(cls.betti.size())
                   ? cls.betti[static_cast<std::size_t>(i)]
                   : 0;
      p.dims.push_back(static_cast<long>(binom(d, i)) * b);
    }
  }
  return p;
}

}  // namespace facering
