#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "preproj/oracle/algebra.hpp"
#include "preproj/oracle/module.hpp"
#include "preproj/weyl.hpp"

namespace preproj::oracle {

// I_i = Lambda (1 - e_i) Lambda as a subspace of Lambda.
Subspace ideal_generator(const Algebra& alg, Vertex i);
// span{x y : x in I, y in J}.
Subspace ideal_product(const Algebra& alg, const Subspace& i, const Subspace& j);
// I_{i_1} ... I_{i_k}; throws ValidationError unless the word is reduced.
Subspace ideal_of_word(const Algebra& alg, const WeylGroup& group, const Word& word);
// I_w for every w, indexed like the group, built along length-increasing steps.
std::vector<Subspace> all_ideals(const Algebra& alg, const WeylGroup& group);
// Number of pairs (v, i) with l(v s_i) < l(v) and I_{v s_i} I_i != I_v. Zero
// means, by induction on length, that every reduced word gives I_v.
std::size_t reduced_word_failures(const Algebra& alg, const WeylGroup& group,
                                  const std::vector<Subspace>& ideals);

// e_i I as a subspace of Lambda (coordinates of paths starting at i).
Subspace left_corner(const Algebra& alg, const Subspace& ideal, Vertex i);
ModuleRep ideal_module(const Algebra& alg, const Subspace& ideal);

// Vertices j with e_{iota(j)} I = 0, i.e. the summands of P_w.
std::vector<Vertex> projective_part(const Algebra& alg, const Subspace& ideal);

// Column i: g-vector of e_i I_w, or -e_{iota(i)} when e_i I_w = 0.
GMatrix g_matrix_of_ideal(const Algebra& alg, const Subspace& ideal);
GMatrix g_matrix_oracle(const Algebra& alg, const WeylGroup& group, std::size_t w);

// Hom(M, tau M) = 0.
bool tau_rigid_check(const ModuleRep& m);
// nu(I_w) isomorphic to I_w.
bool nu_stable_check(const Algebra& alg, const Subspace& ideal, std::uint32_t seed = 1);
bool nu_stable_check(const Algebra& alg, const WeylGroup& group, std::size_t w);

/// dim End(S_w) in K^b(proj Lambda) for S_w = (P^1 -> P^0) + P_w[1], with
/// P^1 -> P^0 the minimal presentation of I_w: chain maps modulo homotopy.
int end_dimension(const Algebra& alg, const Subspace& ideal);
// Requires iota(w) = w (ValidationError otherwise).
int end_dimension(const Algebra& alg, const WeylGroup& group, std::size_t w);

struct SupportTauPair {
  Subspace ideal;
  std::vector<Vertex> proj_part;
  GMatrix g;
  bool tau_rigid = false;
  bool hom_from_projective_vanishes = false;
  int summands = 0;  // isoclasses of indecomposable summands of the module

  bool valid(int rank) const {
    return tau_rigid && hom_from_projective_vanishes &&
           summands + static_cast<int>(proj_part.size()) == rank;
  }
};

/// Closes {Lambda} under J -> I_i J, checks each result is support
/// tau-tilting and removes isomorphic duplicates. Independent of WeylGroup.
std::vector<SupportTauPair> enumerate_stt(const Algebra& alg, std::size_t cap = 100000);

struct OracleRecord {
  Word word;
  bool g_matrix_match = false;
  bool nu_stable = false;
  bool iota_fixed = false;
  std::optional<int> end_dim;
};

struct OracleReport {
  std::string type;
  int algebra_dim = 0;
  std::size_t weyl_order = 0;
  std::size_t stt_count = 0;
  std::vector<OracleRecord> records;
  std::size_t g_matrix_failures = 0;
  std::size_t nu_failures = 0;
  std::size_t end_failures = 0;
  std::optional<std::size_t> reduced_word_failures;  // only when requested
  bool pass = false;
};

/// Runs every per-element check; elements are independent and checked in
/// parallel when OpenMP is on, with identical results. `all_reduced_words`
/// adds the reduced_word_failures pass.
OracleReport verify(const Algebra& alg, const WeylGroup& group, bool all_reduced_words = false);

}  // namespace preproj::oracle
