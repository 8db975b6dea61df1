#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "preproj/dynkin.hpp"
#include "preproj/oracle/linalg.hpp"

namespace preproj::oracle {

// The oracle refuses larger graphs; path spaces grow too fast beyond this.
inline constexpr int kOracleMaxRank = 4;

// Edge k = (u, v), u < v, gives arrow 2k: u -> v and its star 2k+1: v -> u.
struct Arrow {
  Vertex source;
  Vertex target;
  bool star;
};

// A standard monomial: a path that is not a leading term of the relation
// ideal. Arrows compose left to right (p q means p, then q).
struct BasisPath {
  Vertex source;
  Vertex target;
  std::vector<int> arrows;

  int degree() const { return static_cast<int>(arrows.size()); }
};

/// The preprojective algebra of a Dynkin graph over F_p, with a basis of
/// paths and dense structure constants.
class Algebra {
 public:
  const DynkinGraph& graph() const { return graph_; }
  int rank() const { return graph_.rank(); }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<BasisPath>& basis() const { return basis_; }

  std::size_t idempotent(Vertex i) const { return idempotent_[i - 1]; }
  std::size_t arrow_element(int a) const { return arrow_element_[a]; }
  // Basis indices of e_from Lambda e_to, ascending.
  const std::vector<std::size_t>& between(Vertex from, Vertex to) const {
    return between_[static_cast<std::size_t>(from - 1) * rank() + (to - 1)];
  }
  int loewy_length() const { return loewy_length_; }

  Vec unit(std::size_t b) const;
  Vec one() const;
  const Vec& mul_basis(std::size_t a, std::size_t b) const {
    return mult_[a * basis_.size() + b];
  }
  Vec mul(const Vec& x, const Vec& y) const;
  // Image in the basis of an arbitrary path.
  Vec reduce_path(Vertex source, const std::vector<int>& arrows) const;

 private:
  friend Algebra build_algebra(const DynkinGraph& graph, int max_rank);
  explicit Algebra(const DynkinGraph& graph) : graph_(graph) {}

  DynkinGraph graph_;
  std::vector<Arrow> arrows_;
  std::vector<BasisPath> basis_;
  std::vector<std::size_t> idempotent_;
  std::vector<std::size_t> arrow_element_;
  std::vector<std::vector<std::size_t>> between_;
  std::vector<Vec> mult_;
  int loewy_length_ = 0;
  // Per degree: every path (as arrow list, keyed with its source) -> coordinates.
  std::vector<std::map<std::pair<Vertex, std::vector<int>>, Vec>> reduction_;
};

/// Graded pieces of the double-quiver path algebra modulo the ideal spanned
/// by p rho_v q, rho_v = sum (a a* - a* a) at v, built degree by degree until
/// a piece vanishes. Throws CapExceeded above `max_rank`.
Algebra build_algebra(const DynkinGraph& graph, int max_rank = kOracleMaxRank);

}  // namespace preproj::oracle
