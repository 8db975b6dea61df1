#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "preproj/weyl.hpp"

namespace preproj {

// Left mutation moves away from Lambda towards Lambda[1] (length goes up).
enum class Direction { Left, Right };

/// A two-term silting complex S_w, identified by its g-matrix g(w).
///
/// A lightweight handle into a WeylGroup, which must outlive it.
class TwoTermSilting {
 public:
  TwoTermSilting(const WeylGroup& group, std::size_t w);

  std::size_t index() const { return w_; }
  const GMatrix& g() const { return group_->matrix(w_); }
  int length() const { return group_->length(w_); }
  Word word() const { return group_->reduced_word(w_); }
  bool is_tilting() const { return tilting_; }
  // S_e = Lambda and S_{w0} = Lambda[1].
  bool is_lambda() const { return w_ == group_->identity(); }
  bool is_shifted_lambda() const { return w_ == group_->w0(); }
  const WeylGroup& group() const { return *group_; }

  friend bool operator==(const TwoTermSilting& a, const TwoTermSilting& b) {
    return a.group_ == b.group_ && a.w_ == b.w_;
  }

 private:
  const WeylGroup* group_;
  std::size_t w_;
  bool tilting_;
};

TwoTermSilting silting_of(const WeylGroup& group, std::size_t w);

// mu_i(S_w) = S_{s_i w}.
std::pair<TwoTermSilting, Direction> mutate(const TwoTermSilting& s, Vertex i);

/// Irreducible tilting mutation: the folded generators t_i acting on 2-tilt.
class TiltingAction {
 public:
  TiltingAction(const WeylGroup& group, const FoldedGraph& folded);

  const WeylGroup& group() const { return folded_group_.group(); }
  const FoldedGraph& folded() const { return folded_group_.folded(); }
  const FoldedWeylGroup& folded_group() const { return folded_group_; }

  // Applies the t-word of folded vertex i letter by letter through mutate.
  // Throws InvariantFailure if s or the result is not tilting.
  std::pair<TwoTermSilting, Direction> tilting_mutate(const TwoTermSilting& s, int i) const;

  std::vector<TwoTermSilting> tilting_objects() const;

 private:
  FoldedWeylGroup folded_group_;
};

struct HasseArrow {
  std::size_t source;  // positions in HasseQuiver::nodes
  std::size_t target;
  int label;  // generator index (s_i, or t_i when restricted)
};

struct HasseQuiver {
  std::vector<TwoTermSilting> nodes;
  std::vector<HasseArrow> arrows;
  bool restricted_to_tilting = false;
};

/// Hasse quiver of 2-silt (or 2-tilt), arrows S_w -> S_{s_i w} whenever the
/// length goes up, so Lambda is the unique source. Nodes follow group order.
HasseQuiver hasse(const WeylGroup& group, bool restrict_to_tilting = false);
HasseQuiver hasse(const TiltingAction& action);

// "s1·s2" for a word in the s_i, "e" for the empty word.
std::string word_label(const Word& word);

// Graphviz digraph; tilting nodes drawn as boxes.
std::string to_dot(const HasseQuiver& quiver);

struct ClosureReport {
  bool pass = false;
  bool closed = false;
  bool transitive = false;
  bool faithful = false;
  std::size_t orbit_size = 0;
  std::size_t tilting_count = 0;
  std::string message;
};

/// 2-tilt is closed under every tilting mutation, the t-orbit of Lambda is
/// all of 2-tilt, and only the identity of <t_i> fixes every point.
ClosureReport closure_check(const TiltingAction& action);

}  // namespace preproj
