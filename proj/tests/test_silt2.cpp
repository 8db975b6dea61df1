#include <algorithm>
#include <set>

#include "doctest.h"
#include "preproj/errors.hpp"
#include "preproj/silt2.hpp"

using namespace preproj;

namespace {

std::vector<DynkinGraph> ranks_under_test() {
  return {build_dynkin(Family::A, 2), build_dynkin(Family::A, 3),
          build_dynkin(Family::A, 3, Labeling::Linear), build_dynkin(Family::A, 4),
          build_dynkin(Family::A, 5), build_dynkin(Family::D, 4), build_dynkin(Family::D, 5),
          build_dynkin(Family::E, 6)};
}

struct Degrees {
  std::vector<int> in, out;
};

Degrees degrees(const HasseQuiver& q) {
  Degrees d{std::vector<int>(q.nodes.size()), std::vector<int>(q.nodes.size())};
  for (const auto& a : q.arrows) {
    ++d.out[a.source];
    ++d.in[a.target];
  }
  return d;
}

// Kahn's algorithm; true iff every node gets removed.
bool acyclic(const HasseQuiver& q) {
  auto d = degrees(q);
  std::vector<std::size_t> stack;
  for (std::size_t k = 0; k < q.nodes.size(); ++k)
    if (d.in[k] == 0) stack.push_back(k);
  std::size_t removed = 0;
  while (!stack.empty()) {
    const auto k = stack.back();
    stack.pop_back();
    ++removed;
    for (const auto& a : q.arrows) {
      if (a.source == k && --d.in[a.target] == 0) stack.push_back(a.target);
    }
  }
  return removed == q.nodes.size();
}

}  // namespace

TEST_CASE("silting_of") {
  const auto a3 = enumerate(build_dynkin(Family::A, 3, Labeling::Linear));
  const auto e = silting_of(a3, a3.identity());
  CHECK(e.is_tilting());
  CHECK(e.is_lambda());
  CHECK_FALSE(silting_of(a3, a3.from_word({1})).is_tilting());
  CHECK(silting_of(a3, a3.from_word({1, 3})).is_tilting());
  CHECK_THROWS_AS(silting_of(a3, a3.order()), ValidationError);

  // Lambda[1]: every g-vector column is a negative unit vector -e_iota(i).
  const auto top = silting_of(a3, a3.w0());
  CHECK(top.is_shifted_lambda());
  const auto& g = top.g();
  for (int c = 0; c < 3; ++c) {
    for (int r = 0; r < 3; ++r) CHECK(g(r, c) == (r + 1 == a3.graph().iota(c + 1) ? -1 : 0));
  }
}

TEST_CASE("mutate") {
  const auto a3 = enumerate(build_dynkin(Family::A, 3, Labeling::Linear));
  auto [s2, dir] = mutate(silting_of(a3, a3.identity()), 2);
  CHECK(s2.index() == a3.from_word({2}));
  CHECK(dir == Direction::Left);
  for (Vertex i = 1; i <= 3; ++i) CHECK(mutate(silting_of(a3, a3.w0()), i).second == Direction::Right);
  CHECK_THROWS_AS(mutate(s2, 4), ValidationError);
}

TEST_CASE("tilting_mutate examples") {
  const auto a2 = enumerate(build_dynkin(Family::A, 2));
  const TiltingAction act2(a2, fold(a2.graph()));
  auto [top, dir] = act2.tilting_mutate(silting_of(a2, a2.identity()), 1);
  CHECK(top.is_shifted_lambda());
  CHECK(dir == Direction::Left);

  const auto a3 = enumerate(build_dynkin(Family::A, 3, Labeling::Linear));
  const TiltingAction act3(a3, fold(a3.graph()));
  const auto& f = act3.folded();
  const auto orbit13 =
      std::find(f.representatives.begin(), f.representatives.end(), 1) - f.representatives.begin();
  auto [s13, d13] = act3.tilting_mutate(silting_of(a3, a3.identity()), static_cast<int>(orbit13) + 1);
  CHECK(s13.index() == a3.from_word({1, 3}));
  CHECK(d13 == Direction::Left);

  CHECK_THROWS_AS(act3.tilting_mutate(silting_of(a3, a3.from_word({1})), 1), InvariantFailure);
  CHECK_THROWS_AS(act3.tilting_mutate(silting_of(a3, a3.identity()), 3), ValidationError);
}

TEST_CASE("tilting iff iota(w) = w, two ways, and the tilting count") {
  for (const auto& g : ranks_under_test()) {
    CAPTURE(g.name());
    const auto group = enumerate(g);
    std::size_t tilting = 0;
    for (std::size_t w = 0; w < group.order(); ++w) {
      const auto s = silting_of(group, w);
      // Relabel the word letterwise; iota(w) = w iff the relabelled word lands on w.
      const bool by_word = group.from_word(relabel(s.word(), g.iota_permutation())) == w;
      CHECK(s.is_tilting() == by_word);
      tilting += s.is_tilting();
    }
    CHECK(tilting == coxeter_group_order(fold(g).type));
  }
}

TEST_CASE("mutation involutions and folded braid relations") {
  for (const auto& g : ranks_under_test()) {
    CAPTURE(g.name());
    const auto group = enumerate(g);
    const TiltingAction action(group, fold(g));
    for (std::size_t w = 0; w < group.order(); ++w) {
      const auto s = silting_of(group, w);
      for (Vertex i = 1; i <= g.rank(); ++i) {
        auto [t, d1] = mutate(s, i);
        auto [back, d2] = mutate(t, i);
        CHECK(back == s);
        CHECK(d1 != d2);
      }
    }
    const int r = action.folded().rank();
    for (const auto& s : action.tilting_objects()) {
      for (int i = 1; i <= r; ++i) {
        auto [t, d1] = action.tilting_mutate(s, i);
        auto [back, d2] = action.tilting_mutate(t, i);
        CHECK(back == s);
        CHECK(d1 != d2);
      }
      for (int i = 1; i <= r; ++i) {
        for (int j = i + 1; j <= r; ++j) {
          const int m = action.folded().m(i, j);
          TwoTermSilting x = s, y = s;
          for (int k = 0; k < m; ++k) {
            x = action.tilting_mutate(x, k % 2 == 0 ? i : j).first;
            y = action.tilting_mutate(y, k % 2 == 0 ? j : i).first;
          }
          CHECK(x == y);
        }
      }
    }
  }
}

TEST_CASE("A3 Hasse quiver") {
  const auto a3 = enumerate(build_dynkin(Family::A, 3));
  const auto q = hasse(a3);
  REQUIRE(q.nodes.size() == 24);
  const auto d = degrees(q);
  std::vector<std::size_t> sources, sinks;
  std::size_t tilting = 0;
  for (std::size_t k = 0; k < 24; ++k) {
    CHECK(d.in[k] + d.out[k] == 3);
    if (d.in[k] == 0) sources.push_back(k);
    if (d.out[k] == 0) sinks.push_back(k);
    tilting += q.nodes[k].is_tilting();
  }
  CHECK(sources == std::vector<std::size_t>{a3.identity()});
  CHECK(sinks == std::vector<std::size_t>{a3.w0()});
  CHECK(tilting == 8);
  CHECK(acyclic(q));

  const auto t = hasse(a3, true);
  CHECK(t.restricted_to_tilting);
  REQUIRE(t.nodes.size() == 8);
  const auto dt = degrees(t);
  for (std::size_t k = 0; k < 8; ++k) {
    CHECK(dt.in[k] + dt.out[k] == 2);
    CHECK(t.nodes[k].is_tilting());
  }
  CHECK(acyclic(t));
}

TEST_CASE("Hasse quiver degrees on all small ranks") {
  for (const auto& g : ranks_under_test()) {
    CAPTURE(g.name());
    const auto group = enumerate(g);
    const TiltingAction action(group, fold(g));
    for (const auto& q : {hasse(group), hasse(action)}) {
      const int want = q.restricted_to_tilting ? action.folded().rank() : g.rank();
      const auto d = degrees(q);
      int sources = 0, sinks = 0;
      for (std::size_t k = 0; k < q.nodes.size(); ++k) {
        CHECK(d.in[k] + d.out[k] == want);
        if (d.in[k] == 0) {
          ++sources;
          CHECK(q.nodes[k].is_lambda());
        }
        if (d.out[k] == 0) {
          ++sinks;
          CHECK(q.nodes[k].is_shifted_lambda());
        }
      }
      CHECK(sources == 1);
      CHECK(sinks == 1);
    }
  }
}

TEST_CASE("A1 Hasse quiver and DOT") {
  const auto a1 = enumerate(build_dynkin(Family::A, 1));
  const auto q = hasse(a1);
  REQUIRE(q.nodes.size() == 2);
  REQUIRE(q.arrows.size() == 1);
  CHECK(q.nodes[q.arrows[0].source].is_lambda());
  CHECK(q.nodes[q.arrows[0].target].is_shifted_lambda());
  const auto dot = to_dot(q);
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("label=\"e\", shape=box") != std::string::npos);
  CHECK(dot.find("label=\"s1\", shape=box") != std::string::npos);
  CHECK(dot.find("[label=\"s1\"];") != std::string::npos);
}

TEST_CASE("DOT output is deterministic and marks tilting nodes") {
  const auto a3 = enumerate(build_dynkin(Family::A, 3, Labeling::Linear));
  const auto dot = to_dot(hasse(a3));
  CHECK(dot == to_dot(hasse(enumerate_serial(a3.graph()))));
  std::size_t boxes = 0;
  for (std::size_t p = dot.find("shape=box"); p != std::string::npos; p = dot.find("shape=box", p + 1))
    ++boxes;
  CHECK(boxes == 8);
  CHECK(dot.find("s1·s3") != std::string::npos);
}

TEST_CASE("closure_check") {
  for (auto [family, rank, orbit] : std::vector<std::tuple<Family, int, std::size_t>>{
           {Family::A, 3, 8}, {Family::A, 5, 48}, {Family::D, 4, 192}, {Family::A, 1, 2}}) {
    const auto g = build_dynkin(family, rank);
    const auto group = enumerate(g);
    const auto rep = closure_check(TiltingAction(group, fold(g)));
    CAPTURE(g.name());
    CHECK(rep.pass);
    CHECK(rep.closed);
    CHECK(rep.transitive);
    CHECK(rep.faithful);
    CHECK(rep.orbit_size == orbit);
    CHECK(rep.tilting_count == orbit);
  }
}
