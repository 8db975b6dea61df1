#include "preproj/dynkin.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "preproj/errors.hpp"
#include "preproj/weyl.hpp"

namespace preproj {

std::string to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
  }
  return "?";
}

std::string to_string(Labeling l) { return l == Labeling::Figure1 ? "figure1" : "linear"; }

Family parse_family(std::string_view s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "D" || s == "d") return Family::D;
  if (s == "E" || s == "e") return Family::E;
  if (s == "F" || s == "f") return Family::F;
  throw ValidationError("unknown family '" + std::string(s) + "'");
}

Labeling parse_labeling(std::string_view s) {
  if (s == "figure1") return Labeling::Figure1;
  if (s == "linear") return Labeling::Linear;
  throw ValidationError("unknown labeling '" + std::string(s) + "' (expected figure1 or linear)");
}

std::string CoxeterType::name() const { return to_string(family) + std::to_string(rank); }

DynkinGraph::DynkinGraph(Family family, int rank, Labeling labeling,
                         std::vector<std::pair<Vertex, Vertex>> edges)
    : family_(family), rank_(rank), labeling_(labeling), adj_(rank), adj0_(rank) {
  for (auto [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (u < 1 || v > rank || u == v) throw ValidationError("bad edge in Dynkin graph");
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (auto [u, v] : edges_) {
    adj_[u - 1].push_back(v);
    adj_[v - 1].push_back(u);
  }
  for (int i = 0; i < rank; ++i) {
    std::sort(adj_[i].begin(), adj_[i].end());
    for (Vertex v : adj_[i]) adj0_[i].push_back(v - 1);
  }
  iota_.resize(rank);
  std::iota(iota_.begin(), iota_.end(), 1);
}

std::string DynkinGraph::name() const { return to_string(family_) + std::to_string(rank_); }

bool DynkinGraph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = neighbours(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

void DynkinGraph::check_vertex(Vertex v) const {
  if (v < 1 || v > rank_) {
    throw ValidationError("vertex " + std::to_string(v) + " out of range for " + name());
  }
}

namespace {

std::vector<std::pair<Vertex, Vertex>> figure1_edges(Family family, int rank) {
  std::vector<std::pair<Vertex, Vertex>> e;
  switch (family) {
    case Family::A: {
      // n - ... - 2 - 1 - (n+1) - ... - rank
      const int n = (rank + 1) / 2;
      for (int k = 2; k <= n; ++k) e.emplace_back(k - 1, k);
      if (rank > n) e.emplace_back(1, n + 1);
      for (int k = n + 1; k < rank; ++k) e.emplace_back(k, k + 1);
      break;
    }
    case Family::D:
      e.emplace_back(1, 2);
      e.emplace_back(2, rank);
      for (int k = 2; k <= rank - 2; ++k) e.emplace_back(k, k + 1);
      break;
    case Family::E:
      e.emplace_back(1, 2);
      e.emplace_back(2, 3);
      e.emplace_back(3, 4);
      e.emplace_back(2, 5);
      for (int k = 5; k < rank; ++k) e.emplace_back(k, k + 1);
      break;
    default:
      break;
  }
  return e;
}

void validate_type(Family family, int rank) {
  const bool ok = (family == Family::A && rank >= 1) || (family == Family::D && rank >= 4) ||
                  (family == Family::E && rank >= 6 && rank <= 8);
  if (!ok) {
    throw ValidationError("invalid Dynkin type " + to_string(family) + std::to_string(rank));
  }
}

}  // namespace

DynkinGraph build_dynkin(Family family, int rank, Labeling labeling) {
  validate_type(family, rank);
  std::vector<std::pair<Vertex, Vertex>> edges;
  if (labeling == Labeling::Linear) {
    if (family != Family::A) throw ValidationError("linear labeling is only defined for type A");
    for (int k = 1; k < rank; ++k) edges.emplace_back(k, k + 1);
  } else {
    edges = figure1_edges(family, rank);
  }
  DynkinGraph g(family, rank, labeling, std::move(edges));
  g.iota_ = compute_iota(g);
  return g;
}

std::vector<Vertex> compute_iota(const DynkinGraph& graph) {
  const int n = graph.rank();
  const GMatrix w0 = longest_element_matrix(graph);
  std::vector<GMatrix> refl;
  refl.reserve(n);
  for (Vertex i = 1; i <= n; ++i) refl.push_back(reflection_matrix(graph, i));

  std::vector<Vertex> iota(n, 0);
  for (Vertex i = 1; i <= n; ++i) {
    const GMatrix conj = w0 * refl[i - 1] * w0;
    auto it = std::find(refl.begin(), refl.end(), conj);
    if (it == refl.end()) {
      throw InvariantFailure("w0 s_" + std::to_string(i) + " w0 is not a simple reflection");
    }
    iota[i - 1] = static_cast<Vertex>(it - refl.begin()) + 1;
  }
  return iota;
}

void FoldedGraph::check_vertex(int i) const {
  if (i < 1 || i > rank()) {
    throw ValidationError("folded vertex " + std::to_string(i) + " out of range for " +
                          type.name());
  }
}

CoxeterType expected_folded_type(Family family, int rank) {
  validate_type(family, rank);
  switch (family) {
    case Family::A: return {Family::B, (rank + 1) / 2};
    case Family::D:
      if (rank % 2 == 0) return {Family::D, rank};
      return {Family::B, rank - 1};
    case Family::E:
      if (rank == 6) return {Family::F, 4};
      return {Family::E, rank};
    default:
      break;
  }
  throw ValidationError("no folding for " + to_string(family));
}

FoldedGraph fold(const DynkinGraph& graph) {
  FoldedGraph f;
  f.type = expected_folded_type(graph.family(), graph.rank());

  std::set<Vertex> reps;
  for (Vertex v = 1; v <= graph.rank(); ++v) reps.insert(std::min(v, graph.iota(v)));
  f.representatives.assign(reps.begin(), reps.end());

  std::vector<GMatrix> t_matrices;
  for (Vertex i : f.representatives) {
    const Vertex j = graph.iota(i);
    Word t;
    if (i == j) {
      t = {i};
      f.e_t_supports.push_back({i});
    } else {
      t = graph.adjacent(i, j) ? Word{i, j, i} : Word{i, j};
      f.e_t_supports.push_back({i, j});
    }
    t_matrices.push_back(g_of_word(graph, t));
    f.t_words.push_back(std::move(t));
  }

  const int r = static_cast<int>(f.representatives.size());
  if (r != f.type.rank) {
    throw InvariantFailure("number of iota-orbits of " + graph.name() +
                           " does not match the folded rank " + f.type.name());
  }
  f.coxeter.assign(r, std::vector<int>(r, 1));
  for (int a = 0; a < r; ++a) {
    for (int b = a + 1; b < r; ++b) {
      const int m = matrix_order(t_matrices[a] * t_matrices[b]);
      f.coxeter[a][b] = f.coxeter[b][a] = m;
    }
  }
  return f;
}

std::optional<CoxeterType> classify_coxeter(const std::vector<std::vector<int>>& m) {
  const int r = static_cast<int>(m.size());
  if (r == 0) return std::nullopt;
  if (r == 1) return CoxeterType{Family::B, 1};

  std::vector<std::vector<int>> adj(r);
  int edges = 0, fours = 0;
  std::pair<int, int> four_edge{-1, -1};
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(m[i].size()) != r || m[i][i] != 1) return std::nullopt;
    for (int j = i + 1; j < r; ++j) {
      if (m[i][j] != m[j][i]) return std::nullopt;
      if (m[i][j] == 2) continue;
      if (m[i][j] != 3 && m[i][j] != 4) return std::nullopt;
      adj[i].push_back(j);
      adj[j].push_back(i);
      ++edges;
      if (m[i][j] == 4) {
        ++fours;
        four_edge = {i, j};
      }
    }
  }
  if (edges != r - 1) return std::nullopt;
  // Connectivity.
  std::vector<bool> seen(r, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : adj[v]) {
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  if (reached != r) return std::nullopt;

  int branch = -1;
  for (int v = 0; v < r; ++v) {
    if (adj[v].size() > 3) return std::nullopt;
    if (adj[v].size() == 3) {
      if (branch >= 0) return std::nullopt;
      branch = v;
    }
  }

  if (fours == 1) {
    if (branch >= 0) return std::nullopt;
    auto [a, b] = four_edge;
    if (adj[a].size() == 1 || adj[b].size() == 1) return CoxeterType{Family::B, r};
    if (r == 4) return CoxeterType{Family::F, 4};
    return std::nullopt;
  }
  if (fours > 1) return std::nullopt;
  if (branch < 0) return CoxeterType{Family::A, r};

  std::vector<int> arms;
  for (int start : adj[branch]) {
    int len = 1, prev = branch, cur = start;
    while (adj[cur].size() == 2) {
      int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return CoxeterType{Family::D, r};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
    return CoxeterType{Family::E, r};
  }
  return std::nullopt;
}

std::uint64_t coxeter_group_order(CoxeterType type) {
  auto factorial = [](int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  };
  const int n = type.rank;
  switch (type.family) {
    case Family::A: return factorial(n + 1);
    case Family::B: return (std::uint64_t{1} << n) * factorial(n);
    case Family::D: return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case Family::E:
      if (n == 6) return 51840;
      if (n == 7) return 2903040;
      if (n == 8) return 696729600;
      break;
    case Family::F:
      if (n == 4) return 1152;
      break;
  }
  throw ValidationError("no group order for " + type.name());
}

}  // namespace preproj
