#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "preproj/silt2.hpp"
#include "preproj/weyl.hpp"

namespace preproj {

/// A word in the a_i^{+-1}: letter +i is a_i, -i is a_i^{-1}, i 1-based in
/// the folded graph.
struct BraidWord {
  std::vector<int> letters;

  bool is_positive() const;
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Delta^p s_1 ... s_k, left-greedy. Simples are local indices of the
/// FoldedWeylGroup, none of them e or Delta.
struct GarsideNF {
  int delta_power = 0;
  std::vector<std::size_t> simples;

  friend bool operator==(const GarsideNF&, const GarsideNF&) = default;
};

/// Artin-Tits group of the folded graph, a_i a_j a_i ... = a_j a_i a_j ...
/// (m(i, j) letters each side). The simples are the elements of W^iota and
/// Delta lifts its longest element.
class BraidGroup {
 public:
  // `folded` must outlive the BraidGroup.
  explicit BraidGroup(const FoldedWeylGroup& folded);

  const FoldedWeylGroup& folded_group() const { return *fg_; }
  int rank() const { return fg_->rank(); }
  std::size_t delta() const { return fg_->longest(); }

  // Whitespace-separated signed indices, e.g. "1 2 -1".
  BraidWord parse(std::string_view text) const;
  void validate(const BraidWord& word) const;

  GarsideNF normal_form(const BraidWord& word) const;
  bool words_equal(const BraidWord& a, const BraidWord& b) const;

  // (b, c), both positive, with a = b^{-1} c.
  std::pair<BraidWord, BraidWord> split_positive(const BraidWord& a) const;
  // b^{-1} c as a single word.
  static BraidWord recombine(const BraidWord& b, const BraidWord& c);

  BraidWord to_word(const GarsideNF& nf) const;
  // "Delta^p · [t1t2][t1]", or "Delta^p · (empty)" without simples.
  std::string render(const GarsideNF& nf) const;

  // a_i^{+-1} -> t_i, multiplied in W. Returns the ambient WeylGroup index.
  std::size_t project_to_weyl(const BraidWord& word) const;

  // Product of two simples in W^iota (local indices).
  std::size_t multiply(std::size_t u, std::size_t v) const;
  bool left_descent(std::size_t v, int j) const;
  bool right_descent(std::size_t u, int j) const;
  // Delta s Delta^{-1}.
  std::size_t twist(std::size_t s) const { return tau_[s]; }

 private:
  void normalize(GarsideNF& nf) const;

  const FoldedWeylGroup* fg_;
  std::vector<std::size_t> tau_;
  std::vector<int> delta_word_;
};

struct MuResult {
  TwoTermSilting shadow;  // W^iota image of the walk
  bool two_term = true;   // false once a step leaves the two-term window
  std::optional<std::size_t> exit_step;
  std::string note;
};

/// Applies tilting mutation letterwise from Lambda. A step a_i^+ that lowers
/// the folded length (or a_i^- that raises it) leaves the two-term window;
/// from then on only the W^iota shadow is tracked.
MuResult mu_of_braid(const TiltingAction& action, const BraidWord& word);

}  // namespace preproj
