#include "preproj/oracle/algebra.hpp"

#include "preproj/errors.hpp"

namespace preproj::oracle {

Vec Algebra::unit(std::size_t b) const {
  Vec v(basis_.size(), 0);
  v[b] = 1;
  return v;
}

Vec Algebra::one() const {
  Vec v(basis_.size(), 0);
  for (std::size_t e : idempotent_) v[e] = 1;
  return v;
}

Vec Algebra::mul(const Vec& x, const Vec& y) const {
  const std::size_t n = basis_.size();
  Vec out(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    if (!x[a]) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (!y[b]) continue;
      const Fp f = fp_mul(x[a], y[b]);
      const Vec& m = mult_[a * n + b];
      for (std::size_t c = 0; c < n; ++c)
        if (m[c]) out[c] = fp_add(out[c], fp_mul(f, m[c]));
    }
  }
  return out;
}

Vec Algebra::reduce_path(Vertex source, const std::vector<int>& arrows) const {
  if (arrows.empty()) return unit(idempotent(source));
  const std::size_t deg = arrows.size();
  if (deg >= reduction_.size()) return Vec(basis_.size(), 0);
  const auto it = reduction_[deg].find({source, arrows});
  if (it == reduction_[deg].end()) return Vec(basis_.size(), 0);  // not a path
  return it->second;
}

namespace {

struct Path {
  Vertex source;
  Vertex target;
  std::vector<int> arrows;
};

}  // namespace

Algebra build_algebra(const DynkinGraph& graph, int max_rank) {
  if (graph.rank() > max_rank) {
    throw CapExceeded("oracle algebra limited to rank " + std::to_string(max_rank) + ", got " +
                          graph.name(),
                      0);
  }
  Algebra alg(graph);
  const int n = graph.rank();
  for (auto [u, v] : graph.edges()) {
    alg.arrows_.push_back({u, v, false});
    alg.arrows_.push_back({v, u, true});
  }
  const int narrows = static_cast<int>(alg.arrows_.size());

  // rho_x as (coefficient, arrow pair) terms.
  std::vector<std::vector<std::pair<Fp, std::pair<int, int>>>> rho(n + 1);
  for (int e = 0; e < narrows / 2; ++e) {
    const auto& a = alg.arrows_[2 * e];
    rho[a.source].push_back({1, {2 * e, 2 * e + 1}});
    rho[a.target].push_back({fp_neg(1), {2 * e + 1, 2 * e}});
  }

  // all_paths[L] lists every path of length L.
  std::vector<std::vector<Path>> all_paths(1);
  for (Vertex v = 1; v <= n; ++v) all_paths[0].push_back({v, v, {}});
  std::vector<std::vector<Path>> standard;  // standard monomials per degree
  std::vector<std::map<std::pair<Vertex, std::vector<int>>, std::pair<int, Vec>>> local;

  for (int deg = 0;; ++deg) {
    if (deg > 0) {
      std::vector<Path> next;
      for (const auto& p : all_paths[deg - 1]) {
        for (int a = 0; a < narrows; ++a) {
          if (alg.arrows_[a].source != p.target) continue;
          Path q = p;
          q.arrows.push_back(a);
          q.target = alg.arrows_[a].target;
          next.push_back(std::move(q));
        }
      }
      all_paths.push_back(std::move(next));
    }
    const auto& paths = all_paths[deg];
    std::map<std::pair<Vertex, std::vector<int>>, int> index;
    for (std::size_t k = 0; k < paths.size(); ++k) index[{paths[k].source, paths[k].arrows}] = static_cast<int>(k);
    const int np = static_cast<int>(paths.size());

    // Ideal piece: p rho_x q with |p| + |q| = deg - 2.
    std::vector<Vec> gens;
    for (int l1 = 0; l1 + 2 <= deg; ++l1) {
      const int l2 = deg - 2 - l1;
      for (const auto& p : all_paths[l1]) {
        const Vertex x = p.target;
        for (const auto& q : all_paths[l2]) {
          if (q.source != x) continue;
          Vec g(np, 0);
          for (const auto& [coef, pair] : rho[x]) {
            std::vector<int> w = p.arrows;
            w.push_back(pair.first);
            w.push_back(pair.second);
            w.insert(w.end(), q.arrows.begin(), q.arrows.end());
            const int k = index.at({p.source, w});
            g[k] = fp_add(g[k], coef);
          }
          gens.push_back(std::move(g));
        }
      }
    }
    const Subspace ideal = span_of(gens, np);
    const auto free = ideal.free_columns();
    if (free.empty()) {
      alg.loewy_length_ = deg;
      break;
    }
    // Coordinates of every path in terms of the standard monomials of this degree.
    std::vector<Path> std_paths;
    for (int c : free) std_paths.push_back(paths[c]);
    std::map<std::pair<Vertex, std::vector<int>>, std::pair<int, Vec>> red;
    for (int k = 0; k < np; ++k) {
      Vec e(np, 0);
      e[k] = 1;
      const Vec r = ideal.reduce(e);
      Vec coords(free.size());
      for (std::size_t f = 0; f < free.size(); ++f) coords[f] = r[free[f]];
      red[{paths[k].source, paths[k].arrows}] = {deg, std::move(coords)};
    }
    standard.push_back(std::move(std_paths));
    local.push_back(std::move(red));
  }

  // Global basis ordered by degree, then path order.
  std::vector<std::size_t> offset;
  for (const auto& s : standard) {
    offset.push_back(alg.basis_.size());
    for (const auto& p : s) alg.basis_.push_back({p.source, p.target, p.arrows});
  }
  const std::size_t dim = alg.basis_.size();
  alg.reduction_.resize(standard.size());
  for (std::size_t deg = 0; deg < standard.size(); ++deg) {
    for (const auto& [key, val] : local[deg]) {
      Vec v(dim, 0);
      for (std::size_t f = 0; f < val.second.size(); ++f) v[offset[deg] + f] = val.second[f];
      alg.reduction_[deg][key] = std::move(v);
    }
  }

  alg.idempotent_.resize(n);
  alg.arrow_element_.assign(narrows, 0);
  alg.between_.assign(static_cast<std::size_t>(n) * n, {});
  for (std::size_t b = 0; b < dim; ++b) {
    const auto& p = alg.basis_[b];
    if (p.arrows.empty()) alg.idempotent_[p.source - 1] = b;
    if (p.arrows.size() == 1) alg.arrow_element_[p.arrows[0]] = b;
    alg.between_[static_cast<std::size_t>(p.source - 1) * n + (p.target - 1)].push_back(b);
  }

  alg.mult_.assign(dim * dim, Vec(dim, 0));
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      const auto& pa = alg.basis_[a];
      const auto& pb = alg.basis_[b];
      if (pa.target != pb.source) continue;
      std::vector<int> w = pa.arrows;
      w.insert(w.end(), pb.arrows.begin(), pb.arrows.end());
      alg.mult_[a * dim + b] = alg.reduce_path(pa.source, w);
    }
  }
  return alg;
}

}  // namespace preproj::oracle
