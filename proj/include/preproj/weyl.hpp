#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "preproj/dynkin.hpp"
#include "preproj/gmatrix.hpp"

namespace preproj {

// Matrix of s_i in the contragredient geometric representation: column j is
// e_j for j != i, column i is -e_i plus the neighbours of i.
GMatrix reflection_matrix(const DynkinGraph& graph, Vertex i);

// g(w) = r_{i_k} ... r_{i_1} for w = s_{i_1} ... s_{i_k}. The word need not be
// reduced; the empty word gives the identity.
GMatrix g_of_word(const DynkinGraph& graph, const Word& word);

// Longest element, found without enumerating W by walking up from the
// identity while a left multiplication still increases length (sign test on
// w(rho) in fundamental-weight coordinates). Returns g(w0) and fills
// `reduced_word` if given.
GMatrix longest_element_matrix(const DynkinGraph& graph, Word* reduced_word = nullptr);

// iota(X) = M_iota X M_iota, i.e. X(iota(a), iota(b)) at (a, b).
GMatrix iota_conjugate(std::span<const Vertex> iota, const GMatrix& g);

// Letterwise relabelling s_i -> s_iota(i).
Word relabel(const Word& word, std::span<const Vertex> iota);

struct WeylElement {
  GMatrix g;
  int length = 0;
  Word word;  // lexicographically smallest reduced word
};

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// The finite Weyl group W_Delta, elements keyed by g-matrix.
///
/// Elements are indexed 0..order()-1 in lexicographic order of their
/// column-major matrix entries, so indices are stable across runs and across
/// the serial and parallel enumerators. Left multiplication by every s_i is
/// tabulated.
class WeylGroup {
 public:
  const DynkinGraph& graph() const { return graph_; }
  int rank() const { return graph_.rank(); }
  std::size_t order() const { return matrices_.size(); }

  const GMatrix& matrix(std::size_t w) const { return matrices_[w]; }
  int length(std::size_t w) const { return lengths_[w]; }
  // Index of s_i w.
  std::size_t left(Vertex i, std::size_t w) const {
    return left_[static_cast<std::size_t>(i - 1) * order() + w];
  }
  // Index of w s_i (matrix product and lookup).
  std::size_t right(Vertex i, std::size_t w) const;
  // Index of the element u w, where u is given as a word.
  std::size_t left_word(const Word& u, std::size_t w) const;

  std::optional<std::size_t> find(const GMatrix& g) const;
  std::size_t identity() const { return identity_; }
  std::size_t w0() const { return w0_; }

  Word reduced_word(std::size_t w) const;
  WeylElement element(std::size_t w) const;
  std::size_t from_word(const Word& word) const { return left_word(word, identity_); }

 private:
  friend WeylGroup finalize_group(const DynkinGraph&, std::vector<GMatrix>, std::vector<int>,
                                  bool);

  explicit WeylGroup(const DynkinGraph& graph) : graph_(graph) {}

  DynkinGraph graph_;
  std::vector<GMatrix> matrices_;
  std::vector<int> lengths_;
  std::vector<std::uint32_t> left_;
  std::size_t identity_ = 0;
  std::size_t w0_ = 0;
};

/// Breadth-first closure from the identity under g -> g r_i (w -> s_i w).
/// Frontier expansion and the multiplication table run under OpenMP when
/// available. Throws CapExceeded once more than `cap` elements are found.
WeylGroup enumerate(const DynkinGraph& graph, std::size_t cap = kDefaultEnumerationCap);

// Single-threaded queue-based reference for enumerate; identical output.
WeylGroup enumerate_serial(const DynkinGraph& graph, std::size_t cap = kDefaultEnumerationCap);

// Indices of all w with iota(g(w)) = g(w), ascending.
std::vector<std::size_t> fixed_subgroup(const WeylGroup& group);
std::vector<std::size_t> fixed_subgroup_serial(const WeylGroup& group);

enum class CoverDirection { Up, Down };

// For each i in order, whether l(s_i w) = l(w) + 1 (Up) or l(w) - 1 (Down).
std::vector<std::pair<Vertex, CoverDirection>> covers(const WeylGroup& group, std::size_t w);

// Order of an invertible matrix, searched up to `limit`; 0 if not reached.
int matrix_order(const GMatrix& g, int limit = 64);

/// W^iota as the subgroup generated by the t_i, with its own length function.
///
/// Holds a reference to `group`, which must outlive it. Local indices follow
/// the ascending order of the ambient WeylGroup indices.
class FoldedWeylGroup {
 public:
  FoldedWeylGroup(const WeylGroup& group, const FoldedGraph& folded);

  const WeylGroup& group() const { return *group_; }
  const FoldedGraph& folded() const { return folded_; }
  int rank() const { return folded_.rank(); }
  std::size_t order() const { return ambient_.size(); }

  std::size_t ambient(std::size_t k) const { return ambient_[k]; }
  std::optional<std::size_t> local(std::size_t w) const;
  const std::vector<std::size_t>& ambient_indices() const { return ambient_; }

  int length(std::size_t k) const { return lengths_[k]; }
  // t_i w and w t_i, local indices, i is a 1-based folded vertex.
  std::size_t left(int i, std::size_t k) const {
    return left_[static_cast<std::size_t>(i - 1) * order() + k];
  }
  std::size_t right(int i, std::size_t k) const {
    return right_[static_cast<std::size_t>(i - 1) * order() + k];
  }
  std::size_t identity() const { return identity_; }
  std::size_t longest() const { return longest_; }

  // Lexicographically smallest reduced word in the t_i.
  std::vector<int> reduced_word(std::size_t k) const;
  // Local index of a product t_{i_1} ... t_{i_k}.
  std::size_t from_word(const std::vector<int>& word) const;

 private:
  const WeylGroup* group_;
  FoldedGraph folded_;
  std::vector<std::size_t> ambient_;
  std::vector<int> lengths_;
  std::vector<std::size_t> left_;
  std::vector<std::size_t> right_;
  std::size_t identity_ = 0;
  std::size_t longest_ = 0;
};

struct FoldedPresentationReport {
  bool pass = false;
  bool generates_fixed_subgroup = false;
  bool relations_hold = false;
  bool order_matches = false;
  bool type_matches = false;
  std::size_t subgroup_order = 0;
  std::size_t fixed_order = 0;
  std::uint64_t expected_order = 0;
  std::optional<CoxeterType> classified;
  std::string counterexample;
};

/// Checks that the t_i generate exactly W^iota, that (t_i t_j) has order
/// m(i, j), that the labels describe the tabulated folded type, and that the
/// subgroup has the order of that Coxeter group. Failures are reported.
FoldedPresentationReport verify_folded_presentation(const WeylGroup& group,
                                                    const FoldedGraph& folded);

}  // namespace preproj
