#pragma once

// Test oracle: decide whether a sequence is an M-vector by searching for a
// witness multicomplex directly, one division-closed level set at a time.
// Exponential in the worst case; intended for short sequences with small
// entries only.

#include <algorithm>
#include <set>
#include <vector>

namespace facering_test {

using Mono = std::vector<int>;  // exponent vector

inline std::vector<Mono> monomials_of_degree(int n, int deg) {
  std::vector<Mono> out;
  Mono cur(static_cast<std::size_t>(n), 0);
  // lexicographic enumeration of weak compositions of deg into n parts
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[static_cast<std::size_t>(pos)] = e;
      self(self, pos + 1, left - e);
    }
  };
  if (n == 0) {
    if (deg == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, deg);
  return out;
}

inline bool divisors_present(const Mono& m, const std::set<Mono>& level_below) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    Mono div = m;
    --div[i];
    if (!level_below.count(div)) return false;
  }
  return true;
}

inline bool mvector_witness_search(const std::vector<long>& seq,
                                   std::size_t level,
                                   const std::set<Mono>& chosen, int n) {
  if (level == seq.size()) return true;
  long want = seq[level];
  if (want == 0) {
    // zero level: all later levels must be zero too
    for (std::size_t j = level; j < seq.size(); ++j)
      if (seq[j] != 0) return false;
    return true;
  }
  std::vector<Mono> cand;
  for (const Mono& m : monomials_of_degree(n, static_cast<int>(level)))
    if (divisors_present(m, chosen)) cand.push_back(m);
  if (static_cast<long>(cand.size()) < want) return false;
  if (level + 1 == seq.size()) return true;  // any size-want subset works

  // choose an exact-size division-closed level and recurse
  std::vector<int> pick(static_cast<std::size_t>(want));
  auto rec = [&](auto&& self, std::size_t slot, std::size_t start) -> bool {
    if (slot == pick.size()) {
      std::set<Mono> next;
      for (int idx : pick) next.insert(cand[static_cast<std::size_t>(idx)]);
      return mvector_witness_search(seq, level + 1, next, n);
    }
    for (std::size_t i = start; i + (pick.size() - slot) <= cand.size(); ++i) {
      pick[slot] = static_cast<int>(i);
      if (self(self, slot + 1, i + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

inline bool is_mvector_bruteforce(const std::vector<long>& seq) {
  if (seq.empty()) return true;
  for (long v : seq)
    if (v < 0) return false;
  if (seq[0] != 1) return false;
  if (seq.size() == 1) return true;
  int n = static_cast<int>(seq[1]);
  std::set<Mono> level1;  // WLOG the first seq[1] variables
  for (int v = 0; v < n; ++v) {
    Mono m(static_cast<std::size_t>(n), 0);
    m[static_cast<std::size_t>(v)] = 1;
    level1.insert(m);
  }
  if (seq.size() == 2) return true;
  if (n == 0) {
    for (std::size_t j = 1; j < seq.size(); ++j)
      if (seq[j] != 0) return false;
    return true;
  }
  return mvector_witness_search(seq, 2, level1, n);
}

}  // namespace facering_test
