#pragma once

// Independent word-problem deciders for Artin-Tits groups of spherical type,
// used to cross-check the Garside normal form. They only see the Coxeter
// matrix, never the Weyl group.

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <random>
#include <set>
#include <vector>

namespace preproj::oracle_braid {

using Coxeter = std::vector<std::vector<int>>;  // 0-based, m[i][i] = 1

// i j i ... with n letters (1-based generators).
inline std::vector<int> alternating(int i, int j, int n) {
  std::vector<int> w;
  for (int k = 0; k < n; ++k) w.push_back(k % 2 == 0 ? i : j);
  return w;
}

// All positive words reachable from `start` by braid-relation rewrites. Rewrites
// preserve length, so the class is finite.
inline std::set<std::vector<int>> positive_class(const std::vector<int>& start, const Coxeter& m) {
  std::set<std::vector<int>> seen{start};
  std::deque<std::vector<int>> queue{start};
  const int r = static_cast<int>(m.size());
  while (!queue.empty()) {
    const auto w = queue.front();
    queue.pop_front();
    for (int i = 1; i <= r; ++i) {
      for (int j = 1; j <= r; ++j) {
        if (i == j) continue;
        const int len = m[i - 1][j - 1];
        const auto lhs = alternating(i, j, len);
        const auto rhs = alternating(j, i, len);
        for (std::size_t p = 0; p + len <= w.size(); ++p) {
          if (!std::equal(lhs.begin(), lhs.end(), w.begin() + p)) continue;
          auto next = w;
          std::copy(rhs.begin(), rhs.end(), next.begin() + p);
          if (seen.insert(next).second) queue.push_back(next);
        }
      }
    }
  }
  return seen;
}

inline bool positive_equal(const std::vector<int>& a, const std::vector<int>& b, const Coxeter& m) {
  if (a.size() != b.size()) return false;
  return positive_class(a, m).count(b) > 0;
}

// Right reversing: x^{-1} y -> v u^{-1} where x v = y u is the relation
// starting with x and y, and x^{-1} x -> empty. Ends in N D^{-1}.
inline std::vector<int> right_reverse(std::vector<int> w, const Coxeter& m) {
  for (;;) {
    std::size_t p = 0;
    while (p + 1 < w.size() && !(w[p] < 0 && w[p + 1] > 0)) ++p;
    if (p + 1 >= w.size()) return w;
    const int x = -w[p], y = w[p + 1];
    std::vector<int> repl;
    if (x != y) {
      const int len = m[x - 1][y - 1] - 1;
      for (int l : alternating(y, x, len)) repl.push_back(l);
      const auto u = alternating(x, y, len);
      for (auto it = u.rbegin(); it != u.rend(); ++it) repl.push_back(-*it);
    }
    w.erase(w.begin() + p, w.begin() + p + 2);
    w.insert(w.begin() + p, repl.begin(), repl.end());
  }
}

// w = 1 iff, writing w ~ N D^{-1}, the word D^{-1} N reverses to nothing.
inline bool trivial(const std::vector<int>& w, const Coxeter& m) {
  const auto nd = right_reverse(w, m);
  std::vector<int> n, d;
  for (int l : nd) (l > 0 ? n : d).push_back(l);
  // d holds D^{-1} already reversed and negated; D^{-1} N is d followed by n.
  std::vector<int> dn = d;
  dn.insert(dn.end(), n.begin(), n.end());
  return right_reverse(dn, m).empty();
}

inline std::vector<int> inverse(const std::vector<int>& w) {
  std::vector<int> out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

inline bool signed_equal(const std::vector<int>& a, const std::vector<int>& b, const Coxeter& m) {
  auto w = inverse(a);
  w.insert(w.end(), b.begin(), b.end());
  return trivial(w, m);
}

inline std::vector<int> random_signed(std::mt19937& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(1, rank), sign(0, 1);
  std::vector<int> w(len(rng));
  for (auto& l : w) l = gen(rng) * (sign(rng) ? 1 : -1);
  return w;
}

// Random relation-preserving edits: free insertions and braid rewrites.
inline std::vector<int> scramble(std::vector<int> w, std::mt19937& rng, const Coxeter& m, int steps) {
  const int r = static_cast<int>(m.size());
  std::uniform_int_distribution<int> gen(1, r), kind(0, 2);
  for (int s = 0; s < steps; ++s) {
    std::uniform_int_distribution<std::size_t> pos(0, w.size());
    const std::size_t p = pos(rng);
    const int i = gen(rng);
    if (kind(rng) == 0) {
      const int sgn = kind(rng) == 0 ? -1 : 1;
      w.insert(w.begin() + p, {sgn * i, -sgn * i});
    } else {
      const int j = gen(rng);
      if (i == j) continue;
      const int len = m[i - 1][j - 1];
      auto lhs = alternating(i, j, len);
      auto rhs = alternating(j, i, len);
      // Insert lhs rhs^{-1}, which is trivial.
      std::vector<int> ins = lhs;
      for (auto it = rhs.rbegin(); it != rhs.rend(); ++it) ins.push_back(-*it);
      if (kind(rng) == 0) ins = inverse(ins);
      w.insert(w.begin() + p, ins.begin(), ins.end());
    }
  }
  return w;
}

}  // namespace preproj::oracle_braid
