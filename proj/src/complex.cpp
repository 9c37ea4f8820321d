#include "facering/complex.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "facering/util.hpp"

namespace facering {

namespace {

// Keep the maximal elements of a set of faces.
std::vector<Face> maximal_faces(std::set<Face> candidates) {
  std::vector<Face> out;
  for (const Face& f : candidates) {
    bool dominated = false;
    for (const Face& g : candidates) {
      if (g.size() <= f.size() || g == f) continue;
      if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets_ids(
    std::vector<std::string> labels, std::vector<Face> facets) {
  SimplicialComplex k;
  std::set<Face> cand(facets.begin(), facets.end());
  k.facets_ = maximal_faces(std::move(cand));

  // Drop labels of vertices that appear in no face, remapping ids densely
  // while preserving order.
  std::vector<char> used(labels.size(), 0);
  for (const Face& f : k.facets_)
    for (int v : f) used[static_cast<std::size_t>(v)] = 1;
  std::vector<int> remap(labels.size(), -1);
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (used[v]) {
      remap[v] = static_cast<int>(k.labels_.size());
      k.labels_.push_back(labels[v]);
    }
  }
  for (Face& f : k.facets_)
    for (int& v : f) v = remap[static_cast<std::size_t>(v)];
  std::sort(k.facets_.begin(), k.facets_.end());

  k.build_face_cache();
  return k;
}

SimplicialComplex SimplicialComplex::from_facet_labels(
    const std::vector<std::vector<std::string>>& facet_labels) {
  std::vector<std::string> labels;
  std::map<std::string, int> id;
  std::vector<Face> facets;
  for (const auto& tuple : facet_labels) {
    Face f;
    for (const std::string& l : tuple) {
      auto it = id.find(l);
      if (it == id.end()) {
        it = id.emplace(l, static_cast<int>(labels.size())).first;
        labels.push_back(l);
      }
      f.push_back(it->second);
    }
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw std::runtime_error("repeated vertex in face: " + join(tuple, " "));
    facets.push_back(std::move(f));
  }
  return from_facets_ids(std::move(labels), std::move(facets));
}

SimplicialComplex SimplicialComplex::parse(const std::string& text) {
  std::vector<std::vector<std::string>> facet_labels;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tuple;
    std::string tok;
    while (ls >> tok) tuple.push_back(tok);
    if (tuple.empty()) continue;
    std::set<std::string> unique(tuple.begin(), tuple.end());
    if (unique.size() != tuple.size())
      throw std::runtime_error("parse error at line " + std::to_string(lineno) +
                               ": repeated vertex in face: " + join(tuple, " "));
    facet_labels.push_back(std::move(tuple));
  }
  if (facet_labels.empty())
    throw std::runtime_error("no faces in input document");
  return from_facet_labels(facet_labels);
}

SimplicialComplex SimplicialComplex::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void SimplicialComplex::build_face_cache() {
  faces_by_card_.clear();
  if (facets_.empty()) return;  // void complex: no faces at all
  std::size_t maxcard = 0;
  for (const Face& f : facets_) maxcard = std::max(maxcard, f.size());
  std::set<Face> all;
  for (const Face& f : facets_) {
    // enumerate subsets; facet sizes are small at desk scale
    std::size_t m = f.size();
    for (std::size_t mask = 0; mask < (1ull << m); ++mask) {
      Face s;
      for (std::size_t i = 0; i < m; ++i)
        if (mask & (1ull << i)) s.push_back(f[i]);
      all.insert(std::move(s));
    }
  }
  faces_by_card_.resize(maxcard + 1);
  for (const Face& f : all) faces_by_card_[f.size()].push_back(f);
  for (auto& bucket : faces_by_card_) std::sort(bucket.begin(), bucket.end());
}

int SimplicialComplex::dim() const {
  if (is_void())
    throw std::logic_error("dim() of the void complex is undefined");
  return static_cast<int>(faces_by_card_.size()) - 2;
}

int SimplicialComplex::id_of(const std::string& label) const {
  for (std::size_t v = 0; v < labels_.size(); ++v)
    if (labels_[v] == label) return static_cast<int>(v);
  return -1;
}

const std::vector<Face>& SimplicialComplex::faces(int card) const {
  static const std::vector<Face> kEmpty;
  if (card < 0 || card >= static_cast<int>(faces_by_card_.size()))
    return kEmpty;
  return faces_by_card_[static_cast<std::size_t>(card)];
}

std::size_t SimplicialComplex::face_count() const {
  std::size_t total = 0;
  for (const auto& bucket : faces_by_card_) total += bucket.size();
  return total;
}

bool SimplicialComplex::is_face(const Face& f) const {
  const auto& bucket = faces(static_cast<int>(f.size()));
  return std::binary_search(bucket.begin(), bucket.end(), f);
}

bool SimplicialComplex::is_pure() const {
  if (facets_.empty()) return true;
  for (const Face& f : facets_)
    if (f.size() != facets_[0].size()) return false;
  return true;
}

bool SimplicialComplex::is_connected() const {
  const auto& verts = faces(1);
  if (verts.size() <= 1) return true;
  std::vector<std::vector<int>> adj(labels_.size());
  for (const Face& e : faces(2)) {
    adj[static_cast<std::size_t>(e[0])].push_back(e[1]);
    adj[static_cast<std::size_t>(e[1])].push_back(e[0]);
  }
  std::vector<char> seen(labels_.size(), 0);
  std::queue<int> q;
  q.push(verts[0][0]);
  seen[static_cast<std::size_t>(verts[0][0])] = 1;
  std::size_t reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        q.push(w);
      }
    }
  }
  return reached == verts.size();
}

std::vector<long> SimplicialComplex::f_vector() const {
  if (is_void()) return {0};
  std::vector<long> f;
  for (const auto& bucket : faces_by_card_)
    f.push_back(static_cast<long>(bucket.size()));
  return f;
}

std::vector<long> SimplicialComplex::h_vector() const {
  int dd = d();
  std::vector<long> f = f_vector();
  std::vector<long> h(static_cast<std::size_t>(dd) + 1, 0);
  for (int j = 0; j <= dd; ++j) {
    long s = 0;
    for (int i = 0; i <= j; ++i) {
      long c = static_cast<long>(binom(dd - i, j - i));
      long fi = i < static_cast<int>(f.size()) ? f[static_cast<std::size_t>(i)] : 0;
      s += ((j - i) % 2 == 0 ? 1 : -1) * c * fi;
    }
    h[static_cast<std::size_t>(j)] = s;
  }
  return h;
}

SimplicialComplex SimplicialComplex::link(const Face& tau) const {
  if (!is_face(tau))
    throw std::invalid_argument("link: tau is not a face");
  std::set<Face> cand;
  for (const Face& f : facets_) {
    if (std::includes(f.begin(), f.end(), tau.begin(), tau.end())) {
      Face rest;
      std::set_difference(f.begin(), f.end(), tau.begin(), tau.end(),
                          std::back_inserter(rest));
      cand.insert(std::move(rest));
    }
  }
  return from_facets_ids(labels_, {cand.begin(), cand.end()});
}

SimplicialComplex SimplicialComplex::star(const Face& tau) const {
  if (!is_face(tau))
    throw std::invalid_argument("star: tau is not a face");
  std::vector<Face> keep;
  for (const Face& f : facets_)
    if (std::includes(f.begin(), f.end(), tau.begin(), tau.end()))
      keep.push_back(f);
  return from_facets_ids(labels_, std::move(keep));
}

SimplicialComplex SimplicialComplex::contrastar(const Face& tau) const {
  if (tau.empty()) {
    // every face contains the empty face, so nothing survives
    return from_facets_ids({}, {});
  }
  if (!is_face(tau))
    throw std::invalid_argument("contrastar: tau is not a face");
  std::set<Face> cand;
  for (const Face& f : facets_) {
    if (!std::includes(f.begin(), f.end(), tau.begin(), tau.end())) {
      cand.insert(f);
    } else {
      // maximal subsets of f avoiding tau: drop one vertex of tau
      for (int v : tau) {
        Face g;
        for (int w : f)
          if (w != v) g.push_back(w);
        cand.insert(std::move(g));
      }
    }
  }
  return from_facets_ids(labels_, {cand.begin(), cand.end()});
}

Face SimplicialComplex::face_of_labels(
    const std::vector<std::string>& ls) const {
  Face f;
  for (const std::string& l : ls) {
    int v = id_of(l);
    if (v < 0) throw std::invalid_argument("unknown vertex label: " + l);
    f.push_back(v);
  }
  std::sort(f.begin(), f.end());
  if (std::adjacent_find(f.begin(), f.end()) != f.end())
    throw std::invalid_argument("repeated vertex label in face");
  return f;
}

std::vector<std::string> SimplicialComplex::labels_of_face(
    const Face& f) const {
  std::vector<std::string> out;
  for (int v : f) out.push_back(labels_[static_cast<std::size_t>(v)]);
  return out;
}

std::string SimplicialComplex::face_to_string(const Face& f) const {
  if (f.empty()) return "{}";
  return "{" + join(labels_of_face(f), " ") + "}";
}

SimplicialComplex simplex_boundary(int d) {
  if (d < 1) throw std::invalid_argument("simplex_boundary: d must be >= 1");
  std::vector<std::string> labels;
  for (int v = 1; v <= d + 1; ++v) labels.push_back(std::to_string(v));
  std::vector<std::vector<std::string>> facets;
  for (int omit = 0; omit <= d; ++omit) {
    std::vector<std::string> f;
    for (int v = 0; v <= d; ++v)
      if (v != omit) f.push_back(labels[static_cast<std::size_t>(v)]);
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facet_labels(facets);
}

SimplicialComplex cross_polytope_boundary(int d) {
  if (d < 1) throw std::invalid_argument("cross_polytope_boundary: d must be >= 1");
  std::vector<std::vector<std::string>> facets;
  for (std::size_t mask = 0; mask < (1ull << d); ++mask) {
    std::vector<std::string> f;
    for (int i = 0; i < d; ++i) {
      int v = (mask & (1ull << i)) ? i + 1 + d : i + 1;
      f.push_back(std::to_string(v));
    }
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facet_labels(facets);
}

SimplicialComplex join_complex(const SimplicialComplex& a,
                               const SimplicialComplex& b) {
  for (const std::string& l : b.labels())
    if (a.id_of(l) >= 0)
      throw std::invalid_argument("join: label sets must be disjoint, got " + l);
  std::vector<std::vector<std::string>> facets;
  for (const Face& fa : a.facets()) {
    for (const Face& fb : b.facets()) {
      std::vector<std::string> f = a.labels_of_face(fa);
      for (const std::string& l : b.labels_of_face(fb)) f.push_back(l);
      facets.push_back(std::move(f));
    }
  }
  if (facets.empty()) {
    // join with the void complex is void; represent via an empty document
    throw std::invalid_argument("join: void operand");
  }
  return SimplicialComplex::from_facet_labels(facets);
}

SimplicialComplex suspension(const SimplicialComplex& k) {
  SimplicialComplex poles = SimplicialComplex::from_facet_labels(
      {{"north"}, {"south"}});
  return join_complex(k, poles);
}

}  // namespace facering
