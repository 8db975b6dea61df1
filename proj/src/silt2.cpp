#include "preproj/silt2.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "preproj/errors.hpp"

namespace preproj {

TwoTermSilting::TwoTermSilting(const WeylGroup& group, std::size_t w) : group_(&group), w_(w) {
  const auto& g = group.matrix(w);
  tilting_ = iota_conjugate(group.graph().iota_permutation(), g) == g;
}

TwoTermSilting silting_of(const WeylGroup& group, std::size_t w) {
  if (w >= group.order()) throw ValidationError("element index out of range");
  return TwoTermSilting(group, w);
}

std::pair<TwoTermSilting, Direction> mutate(const TwoTermSilting& s, Vertex i) {
  const auto& group = s.group();
  group.graph().check_vertex(i);
  const std::size_t u = group.left(i, s.index());
  const Direction dir = group.length(u) > s.length() ? Direction::Left : Direction::Right;
  return {TwoTermSilting(group, u), dir};
}

TiltingAction::TiltingAction(const WeylGroup& group, const FoldedGraph& folded)
    : folded_group_(group, folded) {}

std::pair<TwoTermSilting, Direction> TiltingAction::tilting_mutate(const TwoTermSilting& s,
                                                                   int i) const {
  folded().check_vertex(i);
  if (!s.is_tilting()) throw InvariantFailure("tilting_mutate applied to a non-tilting object");
  const Word& t = folded().t_words[i - 1];
  TwoTermSilting cur = s;
  for (auto it = t.rbegin(); it != t.rend(); ++it) cur = mutate(cur, *it).first;
  if (!cur.is_tilting()) {
    throw InvariantFailure("tilting mutation left 2-tilt at " + group().matrix(cur.index()).to_string());
  }
  const auto before = folded_group_.local(s.index());
  const auto after = folded_group_.local(cur.index());
  if (!before || !after) throw InvariantFailure("tilting object outside the t-subgroup");
  const Direction dir = folded_group_.length(*after) > folded_group_.length(*before)
                            ? Direction::Left
                            : Direction::Right;
  return {cur, dir};
}

std::vector<TwoTermSilting> TiltingAction::tilting_objects() const {
  std::vector<TwoTermSilting> out;
  for (std::size_t w : folded_group_.ambient_indices()) out.emplace_back(group(), w);
  return out;
}

HasseQuiver hasse(const WeylGroup& group, bool restrict_to_tilting) {
  if (restrict_to_tilting) {
    const TiltingAction action(group, fold(group.graph()));
    return hasse(action);
  }
  HasseQuiver q;
  for (std::size_t w = 0; w < group.order(); ++w) q.nodes.emplace_back(group, w);
  for (std::size_t w = 0; w < group.order(); ++w) {
    for (Vertex i = 1; i <= group.rank(); ++i) {
      const std::size_t u = group.left(i, w);
      if (group.length(u) > group.length(w)) q.arrows.push_back({w, u, i});
    }
  }
  return q;
}

HasseQuiver hasse(const TiltingAction& action) {
  const auto& fg = action.folded_group();
  HasseQuiver q;
  q.restricted_to_tilting = true;
  q.nodes = action.tilting_objects();
  for (std::size_t k = 0; k < fg.order(); ++k) {
    for (int i = 1; i <= fg.rank(); ++i) {
      const std::size_t u = fg.left(i, k);
      if (fg.length(u) > fg.length(k)) q.arrows.push_back({k, u, i});
    }
  }
  return q;
}

std::string word_label(const Word& word) {
  if (word.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) s += "·";
    s += "s" + std::to_string(word[k]);
  }
  return s;
}

std::string to_dot(const HasseQuiver& quiver) {
  std::ostringstream os;
  os << "digraph hasse {\n";
  os << "  rankdir=LR;\n";
  for (std::size_t k = 0; k < quiver.nodes.size(); ++k) {
    const auto& node = quiver.nodes[k];
    os << "  n" << k << " [label=\"" << word_label(node.word()) << "\"";
    os << (node.is_tilting() ? ", shape=box" : ", shape=ellipse");
    os << "];\n";
  }
  const std::string prefix = quiver.restricted_to_tilting ? "t" : "s";
  for (const auto& a : quiver.arrows) {
    os << "  n" << a.source << " -> n" << a.target << " [label=\"" << prefix << a.label
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

ClosureReport closure_check(const TiltingAction& action) {
  ClosureReport rep;
  const auto& group = action.group();
  const auto& fg = action.folded_group();
  const auto fixed = fixed_subgroup(group);
  rep.tilting_count = fixed.size();
  const int r = action.folded().rank();

  rep.closed = true;
  for (std::size_t w : fixed) {
    const TwoTermSilting s(group, w);
    for (int i = 1; i <= r; ++i) {
      try {
        auto [t, dir] = action.tilting_mutate(s, i);
        (void)dir;
        if (!std::binary_search(fixed.begin(), fixed.end(), t.index())) rep.closed = false;
      } catch (const InvariantFailure& e) {
        rep.closed = false;
        rep.message = e.what();
      }
    }
  }

  // Orbit of Lambda under the tilting mutations.
  std::vector<char> seen(group.order(), 0);
  std::deque<std::size_t> queue{group.identity()};
  seen[group.identity()] = 1;
  std::size_t orbit = 1;
  while (!queue.empty() && rep.closed) {
    const TwoTermSilting s(group, queue.front());
    queue.pop_front();
    for (int i = 1; i <= r; ++i) {
      const auto t = action.tilting_mutate(s, i).first;
      if (!seen[t.index()]) {
        seen[t.index()] = 1;
        ++orbit;
        queue.push_back(t.index());
      }
    }
  }
  rep.orbit_size = orbit;
  rep.transitive = rep.closed && orbit == fixed.size();

  // u in <t_i> acts by S_w -> S_{uw}; look for a moved point for every u != e.
  rep.faithful = true;
  for (std::size_t k = 0; k < fg.order() && rep.closed; ++k) {
    if (k == fg.identity()) continue;
    const auto word = fg.reduced_word(k);
    bool moves = false;
    for (std::size_t w : fixed) {
      TwoTermSilting s(group, w);
      for (auto it = word.rbegin(); it != word.rend(); ++it) s = action.tilting_mutate(s, *it).first;
      if (s.index() != w) {
        moves = true;
        break;
      }
    }
    if (!moves) {
      rep.faithful = false;
      rep.message = "nontrivial element acts trivially on 2-tilt";
      break;
    }
  }
  rep.pass = rep.closed && rep.transitive && rep.faithful;
  if (!rep.pass && rep.message.empty()) {
    rep.message = "orbit of Lambda has " + std::to_string(orbit) + " of " +
                  std::to_string(fixed.size()) + " tilting objects";
  }
  return rep;
}

}  // namespace preproj
