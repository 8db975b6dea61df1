#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace preproj {

// Vertex labels are 1-based throughout the public API.
using Vertex = int;
using Word = std::vector<Vertex>;

enum class Family { A, B, D, E, F };
enum class Labeling { Figure1, Linear };

std::string to_string(Family f);
std::string to_string(Labeling l);
Family parse_family(std::string_view s);
Labeling parse_labeling(std::string_view s);

struct CoxeterType {
  Family family;
  int rank;

  bool operator==(const CoxeterType&) const = default;
  std::string name() const;  // e.g. "B3"
};

// A simply-laced Dynkin diagram. Immutable after build_dynkin.
class DynkinGraph {
 public:
  DynkinGraph(Family family, int rank, Labeling labeling,
              std::vector<std::pair<Vertex, Vertex>> edges);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  Labeling labeling() const { return labeling_; }
  std::string name() const;

  // Edges as (u, v) with u < v, sorted.
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  bool adjacent(Vertex u, Vertex v) const;
  const std::vector<Vertex>& neighbours(Vertex v) const { return adj_.at(v - 1); }
  // Zero-based neighbour indices of zero-based vertex i, for matrix kernels.
  const std::vector<int>& neighbours0(int i) const { return adj0_[i]; }

  // Nakayama permutation; iota(v) for 1-based v.
  Vertex iota(Vertex v) const { return iota_.at(v - 1); }
  const std::vector<Vertex>& iota_permutation() const { return iota_; }

  void check_vertex(Vertex v) const;

 private:
  friend DynkinGraph build_dynkin(Family, int, Labeling);

  Family family_;
  int rank_;
  Labeling labeling_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::vector<int>> adj0_;
  std::vector<Vertex> iota_;
};

/// Builds A_n, D_n or E_{6,7,8} with the requested vertex naming and computes
/// its Nakayama permutation. `Linear` names the A_n path 1-2-...-n and is
/// rejected for D and E.
DynkinGraph build_dynkin(Family family, int rank, Labeling labeling = Labeling::Figure1);

/// The permutation with w0 s_i w0 = s_iota(i), read off from the longest
/// element of W. Independent of the vertex naming.
std::vector<Vertex> compute_iota(const DynkinGraph& graph);

// Quotient of a Dynkin graph by iota, presented through the elements t_i.
struct FoldedGraph {
  CoxeterType type;
  // Folded vertex k (1-based) is represented by Delta-vertex representatives[k-1],
  // the smallest vertex of its iota-orbit.
  std::vector<Vertex> representatives;
  // coxeter[i][j] = order of t_i t_j (zero-based indices), 1 on the diagonal.
  std::vector<std::vector<int>> coxeter;
  // t-word of each folded vertex as a word in the s_j of W_Delta.
  std::vector<Word> t_words;
  // Support of e_{t_i}: {i} or {i, iota(i)}.
  std::vector<std::vector<Vertex>> e_t_supports;

  int rank() const { return type.rank; }
  int m(int i, int j) const { return coxeter.at(i - 1).at(j - 1); }
  void check_vertex(int i) const;
};

FoldedGraph fold(const DynkinGraph& graph);

// Folded type from the folding table for a given Dynkin type.
CoxeterType expected_folded_type(Family family, int rank);

// Reads off the Coxeter type of a finite irreducible Coxeter matrix with
// labels in {2,3,4}. Rank-1 matrices classify as B1.
std::optional<CoxeterType> classify_coxeter(const std::vector<std::vector<int>>& m);

// |W| for the irreducible finite types used here.
std::uint64_t coxeter_group_order(CoxeterType type);

}  // namespace preproj
