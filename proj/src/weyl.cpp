#include "preproj/weyl.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "preproj/errors.hpp"

namespace preproj {

GMatrix reflection_matrix(const DynkinGraph& graph, Vertex i) {
  graph.check_vertex(i);
  GMatrix r = GMatrix::identity(graph.rank());
  r.set(i - 1, i - 1, -1);
  for (Vertex k : graph.neighbours(i)) r.set(k - 1, i - 1, 1);
  return r;
}

GMatrix g_of_word(const DynkinGraph& graph, const Word& word) {
  // r_{i_k} ... r_{i_1} = I r_{i_k} ... r_{i_1}: fold the word from the back.
  GMatrix g = GMatrix::identity(graph.rank());
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    graph.check_vertex(*it);
    g = g.times_reflection(*it - 1, graph.neighbours0(*it - 1));
  }
  return g;
}

GMatrix longest_element_matrix(const DynkinGraph& graph, Word* reduced_word) {
  const int n = graph.rank();
  // v = w(rho) in fundamental-weight coordinates; v_i > 0 iff l(s_i w) > l(w).
  std::vector<std::int64_t> v(n, 1);
  Word applied;
  for (;;) {
    auto it = std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x > 0; });
    if (it == v.end()) break;
    const int i = static_cast<int>(it - v.begin());
    const std::int64_t vi = v[i];
    v[i] = -vi;
    for (int k : graph.neighbours0(i)) v[k] += vi;
    applied.push_back(i + 1);
  }
  // w0 = s_{i_k} ... s_{i_1} for the applied sequence i_1, ..., i_k.
  Word w0_word(applied.rbegin(), applied.rend());
  if (reduced_word) *reduced_word = w0_word;
  return g_of_word(graph, w0_word);
}

GMatrix iota_conjugate(std::span<const Vertex> iota, const GMatrix& g) {
  const int n = g.size();
  GMatrix out(n);
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) out.set(r, c, g(iota[r] - 1, iota[c] - 1));
  }
  return out;
}

Word relabel(const Word& word, std::span<const Vertex> iota) {
  Word out;
  out.reserve(word.size());
  for (Vertex v : word) out.push_back(iota[v - 1]);
  return out;
}

WeylGroup finalize_group(const DynkinGraph& graph, std::vector<GMatrix> mats,
                         std::vector<int> lens, bool parallel) {
  WeylGroup group(graph);
  const std::size_t count = mats.size();
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return mats[a] < mats[b]; });
  group.matrices_.reserve(count);
  group.lengths_.reserve(count);
  for (std::size_t k : order) {
    group.matrices_.push_back(std::move(mats[k]));
    group.lengths_.push_back(lens[k]);
  }

  const int n = graph.rank();
  group.left_.assign(static_cast<std::size_t>(n) * count, 0);
  bool missing = false;
  const auto& sorted = group.matrices_;
  const auto fill = [&](std::size_t w) {
    for (int i = 0; i < n; ++i) {
      const GMatrix c = sorted[w].times_reflection(i, graph.neighbours0(i));
      auto it = std::lower_bound(sorted.begin(), sorted.end(), c);
      if (it == sorted.end() || *it != c) {
        missing = true;
        continue;
      }
      group.left_[static_cast<std::size_t>(i) * count + w] =
          static_cast<std::uint32_t>(it - sorted.begin());
    }
  };
  if (parallel) {
    const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static)
    for (std::int64_t w = 0; w < total; ++w) fill(static_cast<std::size_t>(w));
  } else {
    for (std::size_t w = 0; w < count; ++w) fill(w);
  }
  if (missing) throw InvariantFailure("enumerated set is not closed under the generators");

  auto id = group.find(GMatrix::identity(n));
  if (!id) throw InvariantFailure("identity missing from enumeration");
  group.identity_ = *id;
  const auto max_it = std::max_element(group.lengths_.begin(), group.lengths_.end());
  group.w0_ = static_cast<std::size_t>(max_it - group.lengths_.begin());
  if (std::count(group.lengths_.begin(), group.lengths_.end(), *max_it) != 1) {
    throw InvariantFailure("longest element is not unique");
  }
  return group;
}

WeylGroup enumerate_serial(const DynkinGraph& graph, std::size_t cap) {
  const int n = graph.rank();
  std::unordered_map<GMatrix, int, GMatrixHash> depth;
  std::deque<GMatrix> queue;
  const GMatrix id = GMatrix::identity(n);
  depth.emplace(id, 0);
  queue.push_back(id);
  while (!queue.empty()) {
    GMatrix g = std::move(queue.front());
    queue.pop_front();
    const int d = depth.at(g);
    for (int i = 0; i < n; ++i) {
      GMatrix c = g.times_reflection(i, graph.neighbours0(i));
      if (depth.contains(c)) continue;
      depth.emplace(c, d + 1);
      if (depth.size() > cap) {
        throw CapExceeded("Weyl group of " + graph.name() + " exceeds enumeration cap " +
                              std::to_string(cap) + " (found " + std::to_string(depth.size()) +
                              " elements so far)",
                          depth.size());
      }
      queue.push_back(std::move(c));
    }
  }
  std::vector<GMatrix> mats;
  std::vector<int> lens;
  mats.reserve(depth.size());
  lens.reserve(depth.size());
  for (auto& [g, d] : depth) {
    mats.push_back(g);
    lens.push_back(d);
  }
  return finalize_group(graph, std::move(mats), std::move(lens), false);
}

WeylGroup enumerate(const DynkinGraph& graph, std::size_t cap) {
  const int n = graph.rank();
  std::vector<GMatrix> all;
  std::vector<int> lens;
  std::vector<GMatrix> prev;
  std::vector<GMatrix> cur{GMatrix::identity(n)};
  int level = 0;
  // Level-synchronous BFS. Each level is kept sorted, so membership tests are
  // binary searches and the result does not depend on thread scheduling.
  while (!cur.empty()) {
    for (const auto& g : cur) {
      all.push_back(g);
      lens.push_back(level);
    }
    if (all.size() > cap) {
      throw CapExceeded("Weyl group of " + graph.name() + " exceeds enumeration cap " +
                            std::to_string(cap) + " (found " + std::to_string(all.size()) +
                            " elements so far)",
                        all.size());
    }
    std::vector<GMatrix> next;
    const auto frontier = static_cast<std::int64_t>(cur.size());
#pragma omp parallel
    {
      std::vector<GMatrix> local;
#pragma omp for schedule(static) nowait
      for (std::int64_t k = 0; k < frontier; ++k) {
        for (int i = 0; i < n; ++i) {
          local.push_back(cur[static_cast<std::size_t>(k)].times_reflection(i, graph.neighbours0(i)));
        }
      }
#pragma omp critical
      next.insert(next.end(), std::make_move_iterator(local.begin()),
                  std::make_move_iterator(local.end()));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    // Neighbours of level d lie in level d - 1 or d + 1.
    std::erase_if(next, [&](const GMatrix& g) {
      return std::binary_search(prev.begin(), prev.end(), g) ||
             std::binary_search(cur.begin(), cur.end(), g);
    });
    prev = std::move(cur);
    cur = std::move(next);
    ++level;
  }
  return finalize_group(graph, std::move(all), std::move(lens), true);
}

std::size_t WeylGroup::right(Vertex i, std::size_t w) const {
  const GMatrix g = reflection_matrix(graph_, i) * matrices_[w];
  auto idx = find(g);
  if (!idx) throw InvariantFailure("w s_i not found in group");
  return *idx;
}

std::size_t WeylGroup::left_word(const Word& u, std::size_t w) const {
  for (auto it = u.rbegin(); it != u.rend(); ++it) {
    graph_.check_vertex(*it);
    w = left(*it, w);
  }
  return w;
}

std::optional<std::size_t> WeylGroup::find(const GMatrix& g) const {
  auto it = std::lower_bound(matrices_.begin(), matrices_.end(), g);
  if (it == matrices_.end() || *it != g) return std::nullopt;
  return static_cast<std::size_t>(it - matrices_.begin());
}

Word WeylGroup::reduced_word(std::size_t w) const {
  Word word;
  while (lengths_[w] > 0) {
    for (Vertex i = 1; i <= rank(); ++i) {
      const std::size_t u = left(i, w);
      if (lengths_[u] < lengths_[w]) {
        word.push_back(i);
        w = u;
        break;
      }
    }
  }
  return word;
}

WeylElement WeylGroup::element(std::size_t w) const {
  return WeylElement{matrices_[w], lengths_[w], reduced_word(w)};
}

std::vector<std::size_t> fixed_subgroup(const WeylGroup& group) {
  const auto& iota = group.graph().iota_permutation();
  const auto total = static_cast<std::int64_t>(group.order());
  std::vector<char> fixed(group.order(), 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t w = 0; w < total; ++w) {
    const auto& g = group.matrix(static_cast<std::size_t>(w));
    fixed[static_cast<std::size_t>(w)] = iota_conjugate(iota, g) == g;
  }
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < fixed.size(); ++w) {
    if (fixed[w]) out.push_back(w);
  }
  return out;
}

std::vector<std::size_t> fixed_subgroup_serial(const WeylGroup& group) {
  const auto& iota = group.graph().iota_permutation();
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < group.order(); ++w) {
    if (iota_conjugate(iota, group.matrix(w)) == group.matrix(w)) out.push_back(w);
  }
  return out;
}

std::vector<std::pair<Vertex, CoverDirection>> covers(const WeylGroup& group, std::size_t w) {
  std::vector<std::pair<Vertex, CoverDirection>> out;
  for (Vertex i = 1; i <= group.rank(); ++i) {
    const bool up = group.length(group.left(i, w)) > group.length(w);
    out.emplace_back(i, up ? CoverDirection::Up : CoverDirection::Down);
  }
  return out;
}

int matrix_order(const GMatrix& g, int limit) {
  const GMatrix id = GMatrix::identity(g.size());
  GMatrix p = g;
  for (int k = 1; k <= limit; ++k) {
    if (p == id) return k;
    p = p * g;
  }
  return 0;
}

FoldedWeylGroup::FoldedWeylGroup(const WeylGroup& group, const FoldedGraph& folded)
    : group_(&group), folded_(folded) {
  const int r = folded_.rank();
  std::unordered_map<std::size_t, int> depth;
  std::deque<std::size_t> queue{group.identity()};
  depth.emplace(group.identity(), 0);
  while (!queue.empty()) {
    const std::size_t w = queue.front();
    queue.pop_front();
    for (int i = 0; i < r; ++i) {
      const std::size_t u = group.left_word(folded_.t_words[i], w);
      if (depth.emplace(u, depth.at(w) + 1).second) queue.push_back(u);
    }
  }
  for (const auto& entry : depth) ambient_.push_back(entry.first);
  std::sort(ambient_.begin(), ambient_.end());
  const std::size_t count = ambient_.size();
  lengths_.resize(count);
  for (std::size_t k = 0; k < count; ++k) lengths_[k] = depth.at(ambient_[k]);

  left_.resize(static_cast<std::size_t>(r) * count);
  right_.resize(static_cast<std::size_t>(r) * count);
  for (int i = 0; i < r; ++i) {
    const Word& t = folded_.t_words[i];
    for (std::size_t k = 0; k < count; ++k) {
      left_[static_cast<std::size_t>(i) * count + k] = *local(group.left_word(t, ambient_[k]));
      std::size_t w = ambient_[k];
      for (Vertex s : t) w = group.right(s, w);
      auto loc = local(w);
      if (!loc) throw InvariantFailure("t-subgroup not closed under right multiplication");
      right_[static_cast<std::size_t>(i) * count + k] = *loc;
    }
  }
  identity_ = *local(group.identity());
  longest_ = static_cast<std::size_t>(std::max_element(lengths_.begin(), lengths_.end()) -
                                      lengths_.begin());
}

std::optional<std::size_t> FoldedWeylGroup::local(std::size_t w) const {
  auto it = std::lower_bound(ambient_.begin(), ambient_.end(), w);
  if (it == ambient_.end() || *it != w) return std::nullopt;
  return static_cast<std::size_t>(it - ambient_.begin());
}

std::vector<int> FoldedWeylGroup::reduced_word(std::size_t k) const {
  std::vector<int> word;
  while (lengths_[k] > 0) {
    for (int i = 1; i <= rank(); ++i) {
      const std::size_t u = left(i, k);
      if (lengths_[u] < lengths_[k]) {
        word.push_back(i);
        k = u;
        break;
      }
    }
  }
  return word;
}

std::size_t FoldedWeylGroup::from_word(const std::vector<int>& word) const {
  std::size_t k = identity_;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    folded_.check_vertex(*it);
    k = left(*it, k);
  }
  return k;
}

FoldedPresentationReport verify_folded_presentation(const WeylGroup& group,
                                                    const FoldedGraph& folded) {
  FoldedPresentationReport rep;
  const auto fixed = fixed_subgroup(group);
  const FoldedWeylGroup sub(group, folded);
  rep.fixed_order = fixed.size();
  rep.subgroup_order = sub.order();
  rep.generates_fixed_subgroup = sub.ambient_indices() == fixed;
  if (!rep.generates_fixed_subgroup) {
    rep.counterexample = "subgroup generated by t_i (" + std::to_string(sub.order()) +
                         ") differs from W^iota (" + std::to_string(fixed.size()) + ")";
  }

  rep.relations_hold = true;
  const std::size_t e = group.identity();
  const int r = folded.rank();
  for (int i = 0; i < r && rep.relations_hold; ++i) {
    for (int j = i; j < r; ++j) {
      // Order of t_i t_j, computed through the multiplication table.
      Word tt = folded.t_words[i];
      tt.insert(tt.end(), folded.t_words[j].begin(), folded.t_words[j].end());
      std::size_t w = group.left_word(tt, e);
      int order = 1;
      while (w != e && order <= 12) {
        w = group.left_word(tt, w);
        ++order;
      }
      const int want = i == j ? 1 : folded.coxeter[i][j];
      // (t_i t_i) = e has order 1; t_i itself must be a nontrivial involution.
      const bool ok = order == want && (i != j || group.left_word(folded.t_words[i], e) != e);
      if (!ok) {
        rep.relations_hold = false;
        rep.counterexample = "order of t" + std::to_string(i + 1) + " t" + std::to_string(j + 1) +
                             " is " + std::to_string(order) + ", expected " + std::to_string(want);
        break;
      }
    }
  }

  rep.classified = classify_coxeter(folded.coxeter);
  rep.type_matches = rep.classified && *rep.classified == folded.type;
  if (!rep.type_matches && rep.counterexample.empty()) {
    rep.counterexample = "Coxeter labels classify as " +
                         (rep.classified ? rep.classified->name() : std::string("unknown")) +
                         ", expected " + folded.type.name();
  }
  rep.expected_order = coxeter_group_order(folded.type);
  rep.order_matches = rep.subgroup_order == rep.expected_order && rep.fixed_order == rep.expected_order;
  if (!rep.order_matches && rep.counterexample.empty()) {
    rep.counterexample = "subgroup order " + std::to_string(rep.subgroup_order) + ", expected " +
                         std::to_string(rep.expected_order);
  }
  rep.pass = rep.generates_fixed_subgroup && rep.relations_hold && rep.type_matches &&
             rep.order_matches;
  return rep;
}

}  // namespace preproj
