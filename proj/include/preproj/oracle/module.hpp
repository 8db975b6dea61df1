#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "preproj/oracle/algebra.hpp"

namespace preproj::oracle {

/// A finite-dimensional right Lambda-module as a quiver representation:
/// M = sum of M e_v, and arrow a: u -> v acts by the d_u x d_v matrix
/// arrow(a) on row vectors, m -> m a.
class ModuleRep {
 public:
  ModuleRep(const Algebra& algebra, std::vector<int> dims);

  const Algebra& algebra() const { return *alg_; }
  const std::vector<int>& dims() const { return dims_; }
  int dim(Vertex v) const { return dims_[v - 1]; }
  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

  const Mat& arrow(int a) const { return arrows_[a]; }
  Mat& arrow(int a) { return arrows_[a]; }
  // Action of a basis path of Lambda, M e_source -> M e_target.
  Mat act(std::size_t basis_element) const;
  // The relation rho_v acts as zero at every vertex.
  bool satisfies_relations() const;

  std::string tag;

 private:
  const Algebra* alg_;
  std::vector<int> dims_;
  std::vector<Mat> arrows_;
};

// Per-vertex blocks X_v : M e_v -> N e_v, row convention.
using Morphism = std::vector<Mat>;

Morphism compose(const Morphism& f, const Morphism& g);  // first f, then g
bool is_isomorphism(const Morphism& f);

// Lambda_Lambda: vertex v carries Lambda e_v, basis elements ending at v.
ModuleRep regular_module(const Algebra& alg);
// e_i Lambda: vertex v carries e_i Lambda e_v.
ModuleRep projective_module(const Algebra& alg, Vertex i);
ModuleRep simple_module(const Algebra& alg, Vertex i);
ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b);

// Submodule spanned at each vertex by `spaces[v-1]` (rows in M e_v
// coordinates). Throws InvariantFailure if not closed under the arrows.
ModuleRep submodule(const ModuleRep& m, const std::vector<Subspace>& spaces,
                    Morphism* inclusion = nullptr);
ModuleRep quotient(const ModuleRep& m, const std::vector<Subspace>& spaces,
                   Morphism* projection = nullptr);

// Submodule of Lambda_Lambda given by a right ideal (subspace of Lambda).
ModuleRep module_of_right_ideal(const Algebra& alg, const Subspace& ideal);

// rad M = M J at each vertex, and top generators: unit vectors of M e_v
// outside the radical, one per simple summand of the top.
std::vector<Subspace> radical(const ModuleRep& m);
std::vector<int> top_dims(const ModuleRep& m);

/// Basis of Hom(M, N) from the intertwiner equations A^M_a X_v = X_u A^N_a,
/// stored as rows of the flattened blocks in RREF.
struct HomSpace {
  std::vector<int> row_dims, col_dims;  // M and N dimension vectors
  Subspace space;

  int dim() const { return space.dim(); }
  Morphism element(int k) const;
  Morphism combination(const Vec& coeffs) const;
  Vec flatten(const Morphism& f) const;
};

HomSpace hom(const ModuleRep& m, const ModuleRep& n);

/// A map between sums of indecomposable projectives: from the sum of
/// e_{domain[l]} Lambda to the sum of e_{codomain[k]} Lambda. Entry (k, l)
/// lies in e_{codomain[k]} Lambda e_{domain[l]} and the generator of summand
/// l goes to column l, acting by left multiplication.
struct ProjMap {
  std::vector<Vertex> domain;
  std::vector<Vertex> codomain;
  std::vector<Vec> entries;  // codomain.size() x domain.size(), row-major

  const Vec& at(std::size_t k, std::size_t l) const { return entries[k * domain.size() + l]; }
  Vec& at(std::size_t k, std::size_t l) { return entries[k * domain.size() + l]; }
};

// g o f as the matrix product G F.
ProjMap compose(const Algebra& alg, const ProjMap& f, const ProjMap& g);

struct Presentation {
  std::vector<Vertex> p0;  // summands of P^0, from the top of M
  std::vector<Vertex> p1;  // summands of P^1, from the top of the syzygy
  ProjMap map;             // P^1 -> P^0
  std::vector<int> g_vector;
};

// Minimal projective presentation P^1 -> P^0 -> M -> 0 via projective covers.
Presentation min_presentation(const ModuleRep& m);

// Auslander-Reiten translate D Tr M from the minimal presentation.
ModuleRep tau(const ModuleRep& m);
// D Hom_Lambda(M, Lambda), using e_j Hom(M, Lambda) = Hom(M, e_j Lambda).
ModuleRep nakayama(const ModuleRep& m);

/// Isomorphism by dimension vectors, then seeded random elements of Hom(M, N)
/// (a generic element is invertible whenever some element is), then a
/// deterministic greedy rank-raising sweep over the Hom basis.
bool isomorphic(const ModuleRep& m, const ModuleRep& n, std::uint32_t seed = 1);

/// Indecomposable summands by splitting along generalized eigenspaces of
/// random endomorphisms (Fitting decomposition), recursively.
std::vector<ModuleRep> decompose(const ModuleRep& m, std::uint32_t seed = 1);
// Number of isoclasses of indecomposable summands.
int count_nonisomorphic_summands(const ModuleRep& m, std::uint32_t seed = 1);

}  // namespace preproj::oracle
