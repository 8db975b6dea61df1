#include "preproj/oracle/oracle.hpp"

#include <algorithm>
#include <deque>

#include "preproj/errors.hpp"

namespace preproj::oracle {

Subspace ideal_generator(const Algebra& alg, Vertex i) {
  alg.graph().check_vertex(i);
  std::vector<Vec> rows;
  const auto& basis = alg.basis();
  for (std::size_t x = 0; x < basis.size(); ++x) {
    if (basis[x].target == i) continue;
    for (std::size_t y = 0; y < basis.size(); ++y) {
      if (basis[y].source != basis[x].target) continue;
      rows.push_back(alg.mul_basis(x, y));
    }
  }
  return span_of(rows, alg.dim());
}

Subspace ideal_product(const Algebra& alg, const Subspace& i, const Subspace& j) {
  std::vector<Vec> rows;
  for (int a = 0; a < i.dim(); ++a)
    for (int b = 0; b < j.dim(); ++b) rows.push_back(alg.mul(i.basis.row_vec(a), j.basis.row_vec(b)));
  return span_of(rows, alg.dim());
}

Subspace ideal_of_word(const Algebra& alg, const WeylGroup& group, const Word& word) {
  const std::size_t w = group.from_word(word);
  if (group.length(w) != static_cast<int>(word.size())) throw ValidationError("word is not reduced");
  Subspace acc = span_of(Mat::identity(alg.dim()));
  for (Vertex i : word) acc = ideal_product(alg, acc, ideal_generator(alg, i));
  return acc;
}

std::vector<Subspace> all_ideals(const Algebra& alg, const WeylGroup& group) {
  std::vector<Subspace> gens;
  for (Vertex i = 1; i <= alg.rank(); ++i) gens.push_back(ideal_generator(alg, i));
  std::vector<std::optional<Subspace>> ideals(group.order());
  ideals[group.identity()] = span_of(Mat::identity(alg.dim()));
  std::deque<std::size_t> queue{group.identity()};
  while (!queue.empty()) {
    const std::size_t w = queue.front();
    queue.pop_front();
    for (Vertex i = 1; i <= alg.rank(); ++i) {
      const std::size_t u = group.left(i, w);
      if (group.length(u) < group.length(w) || ideals[u]) continue;
      ideals[u] = ideal_product(alg, gens[i - 1], *ideals[w]);
      queue.push_back(u);
    }
  }
  std::vector<Subspace> out;
  for (auto& s : ideals) out.push_back(std::move(*s));
  return out;
}

std::size_t reduced_word_failures(const Algebra& alg, const WeylGroup& group,
                                  const std::vector<Subspace>& ideals) {
  std::vector<Subspace> gens;
  for (Vertex i = 1; i <= alg.rank(); ++i) gens.push_back(ideal_generator(alg, i));
  std::size_t failures = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : failures)
  for (std::size_t v = 0; v < group.order(); ++v) {
    for (Vertex i = 1; i <= alg.rank(); ++i) {
      const std::size_t u = group.right(i, v);
      if (group.length(u) > group.length(v)) continue;
      failures += !(ideal_product(alg, ideals[u], gens[i - 1]) == ideals[v]);
    }
  }
  return failures;
}

Subspace left_corner(const Algebra& alg, const Subspace& ideal, Vertex i) {
  std::vector<Vec> rows;
  for (int r = 0; r < ideal.dim(); ++r) {
    Vec x = ideal.basis.row_vec(r);
    for (std::size_t b = 0; b < x.size(); ++b)
      if (alg.basis()[b].source != i) x[b] = 0;
    rows.push_back(std::move(x));
  }
  return span_of(rows, alg.dim());
}

ModuleRep ideal_module(const Algebra& alg, const Subspace& ideal) {
  ModuleRep m = module_of_right_ideal(alg, ideal);
  m.tag = "I";
  return m;
}

std::vector<Vertex> projective_part(const Algebra& alg, const Subspace& ideal) {
  std::vector<Vertex> out;
  for (Vertex i = 1; i <= alg.rank(); ++i)
    if (left_corner(alg, ideal, i).dim() == 0) out.push_back(alg.graph().iota(i));
  std::sort(out.begin(), out.end());
  return out;
}

GMatrix g_matrix_of_ideal(const Algebra& alg, const Subspace& ideal) {
  const int n = alg.rank();
  std::vector<std::int64_t> cols;
  for (Vertex i = 1; i <= n; ++i) {
    const Subspace corner = left_corner(alg, ideal, i);
    std::vector<std::int64_t> col(n, 0);
    if (corner.dim() == 0) {
      col[alg.graph().iota(i) - 1] = -1;
    } else {
      const auto pres = min_presentation(module_of_right_ideal(alg, corner));
      for (int k = 0; k < n; ++k) col[k] = pres.g_vector[k];
    }
    cols.insert(cols.end(), col.begin(), col.end());
  }
  return GMatrix::from_columns(n, cols);
}

GMatrix g_matrix_oracle(const Algebra& alg, const WeylGroup& group, std::size_t w) {
  return g_matrix_of_ideal(alg, ideal_of_word(alg, group, group.reduced_word(w)));
}

bool tau_rigid_check(const ModuleRep& m) {
  if (m.is_zero()) return true;
  return hom(m, tau(m)).dim() == 0;
}

bool nu_stable_check(const Algebra& alg, const Subspace& ideal, std::uint32_t seed) {
  const ModuleRep m = ideal_module(alg, ideal);
  return isomorphic(nakayama(m), m, seed);
}

bool nu_stable_check(const Algebra& alg, const WeylGroup& group, std::size_t w) {
  return nu_stable_check(alg, ideal_of_word(alg, group, group.reduced_word(w)),
                         static_cast<std::uint32_t>(w + 1));
}

namespace {

// Parameters of Hom(sum_l e_{dom[l]} Lambda, sum_k e_{cod[k]} Lambda): one per
// (k, l, basis element of e_{cod[k]} Lambda e_{dom[l]}).
struct EntryParam {
  std::size_t k, l, b;
};

std::vector<EntryParam> params(const Algebra& alg, const std::vector<Vertex>& dom,
                               const std::vector<Vertex>& cod) {
  std::vector<EntryParam> out;
  for (std::size_t k = 0; k < cod.size(); ++k)
    for (std::size_t l = 0; l < dom.size(); ++l)
      for (std::size_t b : alg.between(cod[k], dom[l])) out.push_back({k, l, b});
  return out;
}

}  // namespace

int end_dimension(const Algebra& alg, const Subspace& ideal) {
  const int dim = alg.dim();
  const Presentation pres = min_presentation(ideal_module(alg, ideal));
  std::vector<Vertex> q1 = pres.p1;
  const auto pw = projective_part(alg, ideal);
  q1.insert(q1.end(), pw.begin(), pw.end());
  const std::vector<Vertex>& q0 = pres.p0;
  const std::size_t n1 = q1.size(), n0 = q0.size();

  // d : Q1 -> Q0, entry (l, k), zero on the P_w columns.
  auto d = [&](std::size_t l, std::size_t k) -> Vec {
    if (k < pres.p1.size()) return pres.map.at(l, k);
    return Vec(dim, 0);
  };

  // Chain maps: d phi1 - phi0 d = 0 in Hom(Q1, Q0).
  const auto p1 = params(alg, q1, q1);
  const auto p0 = params(alg, q0, q0);
  const int out_cols = static_cast<int>(n0 * n1) * dim;
  Mat chain(static_cast<int>(p1.size() + p0.size()), out_cols);
  int row = 0;
  for (const auto& p : p1) {  // phi1(k, k') = b
    for (std::size_t l = 0; l < n0; ++l) {
      const Vec v = alg.mul(d(l, p.k), alg.unit(p.b));
      for (int c = 0; c < dim; ++c)
        chain(row, static_cast<int>((l * n1 + p.l) * dim) + c) = fp_add(chain(row, static_cast<int>((l * n1 + p.l) * dim) + c), v[c]);
    }
    ++row;
  }
  for (const auto& p : p0) {  // phi0(l, l') = b
    for (std::size_t k = 0; k < n1; ++k) {
      const Vec v = alg.mul(alg.unit(p.b), d(p.l, k));
      for (int c = 0; c < dim; ++c)
        chain(row, static_cast<int>((p.k * n1 + k) * dim) + c) = fp_sub(chain(row, static_cast<int>((p.k * n1 + k) * dim) + c), v[c]);
    }
    ++row;
  }
  const int chain_dim = chain.rows() - rank(chain);

  // Null-homotopic maps: h : Q0 -> Q1 gives (phi1, phi0) = (h d, d h).
  const auto ph = params(alg, q0, q1);
  const int phi1_cols = static_cast<int>(n1 * n1) * dim;
  Mat htpy(static_cast<int>(ph.size()), phi1_cols + static_cast<int>(n0 * n0) * dim);
  row = 0;
  for (const auto& p : ph) {  // h(k, l) = b
    const Vec hb = alg.unit(p.b);
    for (std::size_t k2 = 0; k2 < n1; ++k2) {  // (h d)(k, k2) = h(k, l) d(l, k2)
      const Vec v = alg.mul(hb, d(p.l, k2));
      for (int c = 0; c < dim; ++c) htpy(row, static_cast<int>((p.k * n1 + k2) * dim) + c) = v[c];
    }
    for (std::size_t l2 = 0; l2 < n0; ++l2) {  // (d h)(l2, l) = d(l2, k) h(k, l)
      const Vec v = alg.mul(d(l2, p.k), hb);
      for (int c = 0; c < dim; ++c) htpy(row, phi1_cols + static_cast<int>((l2 * n0 + p.l) * dim) + c) = v[c];
    }
    ++row;
  }
  return chain_dim - rank(htpy);
}

int end_dimension(const Algebra& alg, const WeylGroup& group, std::size_t w) {
  const auto& g = group.matrix(w);
  if (iota_conjugate(group.graph().iota_permutation(), g) != g) {
    throw ValidationError("end_dimension needs iota(w) = w");
  }
  return end_dimension(alg, ideal_of_word(alg, group, group.reduced_word(w)));
}

std::vector<SupportTauPair> enumerate_stt(const Algebra& alg, std::size_t cap) {
  const int n = alg.rank();
  std::vector<Subspace> gens;
  for (Vertex i = 1; i <= n; ++i) gens.push_back(ideal_generator(alg, i));
  std::vector<Subspace> ideals{span_of(Mat::identity(alg.dim()))};
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    for (Vertex i = 1; i <= n; ++i) {
      Subspace next = ideal_product(alg, gens[i - 1], ideals[k]);
      if (std::find(ideals.begin(), ideals.end(), next) != ideals.end()) continue;
      ideals.push_back(std::move(next));
      if (ideals.size() > cap) throw CapExceeded("ideal closure exceeded the cap", ideals.size());
    }
  }

  std::vector<SupportTauPair> pairs(ideals.size());
  std::vector<ModuleRep> modules;
  for (const auto& ideal : ideals) modules.push_back(ideal_module(alg, ideal));
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    auto& p = pairs[k];
    const ModuleRep& m = modules[k];
    p.ideal = ideals[k];
    p.proj_part = projective_part(alg, ideals[k]);
    p.g = g_matrix_of_ideal(alg, ideals[k]);
    p.tau_rigid = tau_rigid_check(m);
    p.hom_from_projective_vanishes = true;
    for (Vertex j : p.proj_part) p.hom_from_projective_vanishes &= m.dim(j) == 0;  // Hom(e_j Lambda, M) = M e_j
    p.summands = count_nonisomorphic_summands(m, static_cast<std::uint32_t>(k + 1));
  }

  // Drop isomorphic duplicates (none are expected).
  std::vector<SupportTauPair> out;
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    bool dup = false;
    for (std::size_t j : kept) {
      if (pairs[j].proj_part == pairs[k].proj_part && isomorphic(modules[j], modules[k])) {
        dup = true;
        break;
      }
    }
    if (dup) continue;
    kept.push_back(k);
    out.push_back(std::move(pairs[k]));
  }
  return out;
}

OracleReport verify(const Algebra& alg, const WeylGroup& group, bool all_reduced_words) {
  OracleReport rep;
  rep.type = alg.graph().name();
  rep.algebra_dim = alg.dim();
  rep.weyl_order = group.order();
  const auto ideals = all_ideals(alg, group);
  const auto& iota = group.graph().iota_permutation();
  rep.records.resize(group.order());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t w = 0; w < group.order(); ++w) {
    auto& r = rep.records[w];
    r.word = group.reduced_word(w);
    r.g_matrix_match = g_matrix_of_ideal(alg, ideals[w]) == group.matrix(w);
    r.iota_fixed = iota_conjugate(iota, group.matrix(w)) == group.matrix(w);
    r.nu_stable = nu_stable_check(alg, ideals[w], static_cast<std::uint32_t>(w + 1));
    if (r.iota_fixed) r.end_dim = end_dimension(alg, ideals[w]);
  }
  for (const auto& r : rep.records) {
    rep.g_matrix_failures += !r.g_matrix_match;
    rep.nu_failures += r.nu_stable != r.iota_fixed;
    rep.end_failures += r.end_dim && *r.end_dim != alg.dim();
  }
  if (all_reduced_words) rep.reduced_word_failures = reduced_word_failures(alg, group, ideals);
  rep.stt_count = enumerate_stt(alg).size();
  rep.pass = rep.g_matrix_failures == 0 && rep.nu_failures == 0 && rep.end_failures == 0 &&
             rep.reduced_word_failures.value_or(0) == 0 && rep.stt_count == rep.weyl_order;
  return rep;
}

}  // namespace preproj::oracle
