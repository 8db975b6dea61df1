#include <algorithm>
#include <set>

#include "doctest.h"
#include "preproj/dynkin.hpp"
#include "preproj/errors.hpp"

using namespace preproj;

namespace {

// Nakayama permutation as tabulated for the figure1 vertex names.
std::vector<Vertex> closed_form_iota(Family family, int rank) {
  std::vector<Vertex> iota(rank);
  for (int i = 0; i < rank; ++i) iota[i] = i + 1;
  if (family == Family::A) {
    if (rank % 2 == 1) {
      const int n = (rank + 1) / 2;
      for (int i = 2; i <= n; ++i) {
        iota[i - 1] = i + n - 1;
        iota[i + n - 2] = i;
      }
    } else {
      const int n = rank / 2;
      for (int i = 1; i <= n; ++i) {
        iota[i - 1] = i + n;
        iota[i + n - 1] = i;
      }
    }
  } else if (family == Family::D && rank % 2 == 1) {
    iota[0] = rank;
    iota[rank - 1] = 1;
  } else if (family == Family::E && rank == 6) {
    iota[2] = 5;
    iota[4] = 3;
    iota[3] = 6;
    iota[5] = 4;
  }
  return iota;
}

std::vector<std::pair<Family, int>> all_types() {
  std::vector<std::pair<Family, int>> types;
  for (int n = 1; n <= 8; ++n) types.emplace_back(Family::A, n);
  for (int n = 4; n <= 8; ++n) types.emplace_back(Family::D, n);
  for (int n = 6; n <= 8; ++n) types.emplace_back(Family::E, n);
  return types;
}

}  // namespace

TEST_CASE("figure1 A5 is the path 3-2-1-4-5") {
  const auto g = build_dynkin(Family::A, 5);
  std::vector<std::pair<Vertex, Vertex>> want{{1, 2}, {1, 4}, {2, 3}, {4, 5}};
  CHECK(g.edges() == want);
  CHECK(g.iota(1) == 1);
  CHECK(g.iota(2) == 4);
  CHECK(g.iota(3) == 5);
}

TEST_CASE("linear A3 has iota = (1 3)") {
  const auto g = build_dynkin(Family::A, 3, Labeling::Linear);
  CHECK(g.edges() == std::vector<std::pair<Vertex, Vertex>>{{1, 2}, {2, 3}});
  CHECK(g.iota_permutation() == std::vector<Vertex>{3, 2, 1});
}

TEST_CASE("A1 is a single vertex") {
  const auto g = build_dynkin(Family::A, 1);
  CHECK(g.edges().empty());
  CHECK(g.iota(1) == 1);
}

TEST_CASE("D5 swaps 1 and 5, E7 is fixed") {
  const auto d5 = build_dynkin(Family::D, 5);
  CHECK(d5.iota_permutation() == std::vector<Vertex>{5, 2, 3, 4, 1});
  const auto e7 = build_dynkin(Family::E, 7);
  CHECK(e7.iota_permutation() == std::vector<Vertex>{1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("invalid types and labelings are rejected") {
  CHECK_THROWS_AS(build_dynkin(Family::A, 0), ValidationError);
  CHECK_THROWS_AS(build_dynkin(Family::D, 3), ValidationError);
  CHECK_THROWS_AS(build_dynkin(Family::E, 9), ValidationError);
  CHECK_THROWS_AS(build_dynkin(Family::B, 3), ValidationError);
  CHECK_THROWS_AS(build_dynkin(Family::D, 5, Labeling::Linear), ValidationError);
  CHECK_THROWS_AS(build_dynkin(Family::E, 6, Labeling::Linear), ValidationError);
  CHECK_THROWS_AS(parse_family("G"), ValidationError);
  CHECK_THROWS_AS(parse_labeling("circle"), ValidationError);
}

TEST_CASE("iota from w0 matches the tabulated formulas") {
  for (auto [family, rank] : all_types()) {
    CAPTURE(rank);
    const auto g = build_dynkin(family, rank);
    CHECK(g.iota_permutation() == closed_form_iota(family, rank));
  }
}

TEST_CASE("iota is an involutive graph automorphism and the graph is a tree") {
  for (auto [family, rank] : all_types()) {
    for (auto lab : {Labeling::Figure1, Labeling::Linear}) {
      if (lab == Labeling::Linear && family != Family::A) continue;
      const auto g = build_dynkin(family, rank, lab);
      CAPTURE(g.name());
      CHECK(static_cast<int>(g.edges().size()) == rank - 1);
      for (Vertex v = 1; v <= rank; ++v) CHECK(g.iota(g.iota(v)) == v);
      for (auto [u, v] : g.edges()) CHECK(g.adjacent(g.iota(u), g.iota(v)));
      if ((family == Family::D && rank % 2 == 0) || (family == Family::E && rank >= 7)) {
        for (Vertex v = 1; v <= rank; ++v) CHECK(g.iota(v) == v);
      }
    }
  }
}

TEST_CASE("fold A5, A6, D5, E6 give the listed t-words") {
  auto a5 = fold(build_dynkin(Family::A, 5));
  CHECK(a5.type == CoxeterType{Family::B, 3});
  CHECK(a5.t_words == std::vector<Word>{{1}, {2, 4}, {3, 5}});

  auto a6 = fold(build_dynkin(Family::A, 6));
  CHECK(a6.type == CoxeterType{Family::B, 3});
  CHECK(a6.t_words == std::vector<Word>{{1, 4, 1}, {2, 5}, {3, 6}});

  auto d5 = fold(build_dynkin(Family::D, 5));
  CHECK(d5.type == CoxeterType{Family::B, 4});
  CHECK(d5.t_words == std::vector<Word>{{1, 5}, {2}, {3}, {4}});

  auto e6 = fold(build_dynkin(Family::E, 6));
  CHECK(e6.type == CoxeterType{Family::F, 4});
  CHECK(e6.t_words == std::vector<Word>{{1}, {2}, {3, 5}, {4, 6}});
  CHECK(e6.e_t_supports == std::vector<std::vector<Vertex>>{{1}, {2}, {3, 5}, {4, 6}});
}

TEST_CASE("folded labels: rank equals orbit count, 4 only for B and F") {
  for (auto [family, rank] : all_types()) {
    const auto g = build_dynkin(family, rank);
    const auto f = fold(g);
    CAPTURE(g.name());
    std::set<std::set<Vertex>> orbits;
    for (Vertex v = 1; v <= rank; ++v) orbits.insert({v, g.iota(v)});
    CHECK(f.rank() == static_cast<int>(orbits.size()));
    bool has_four = false;
    for (int i = 1; i <= f.rank(); ++i) {
      CHECK(f.m(i, i) == 1);
      for (int j = 1; j <= f.rank(); ++j) {
        CHECK(f.m(i, j) == f.m(j, i));
        if (i != j) {
          CHECK(f.m(i, j) >= 2);
          CHECK(f.m(i, j) <= 4);
          has_four = has_four || f.m(i, j) == 4;
        }
      }
    }
    if (has_four) CHECK((f.type.family == Family::B || f.type.family == Family::F));
    const auto cls = classify_coxeter(f.coxeter);
    REQUIRE(cls.has_value());
    CHECK(*cls == f.type);
    // t-word shape follows the orbit case split.
    for (int k = 0; k < f.rank(); ++k) {
      const Vertex i = f.representatives[k];
      const Vertex j = g.iota(i);
      if (i == j) {
        CHECK(f.t_words[k] == Word{i});
      } else if (g.adjacent(i, j)) {
        CHECK(f.t_words[k] == Word{i, j, i});
      } else {
        CHECK(f.t_words[k] == Word{i, j});
      }
    }
  }
}

TEST_CASE("folding table") {
  CHECK(expected_folded_type(Family::A, 1).name() == "B1");
  CHECK(expected_folded_type(Family::A, 2).name() == "B1");
  CHECK(expected_folded_type(Family::A, 7).name() == "B4");
  CHECK(expected_folded_type(Family::A, 8).name() == "B4");
  CHECK(expected_folded_type(Family::D, 6).name() == "D6");
  CHECK(expected_folded_type(Family::D, 7).name() == "B6");
  CHECK(expected_folded_type(Family::E, 6).name() == "F4");
  CHECK(expected_folded_type(Family::E, 8).name() == "E8");
}

TEST_CASE("classify_coxeter recognises the small types") {
  using M = std::vector<std::vector<int>>;
  CHECK(classify_coxeter(M{{1, 3}, {3, 1}})->name() == "A2");
  CHECK(classify_coxeter(M{{1, 4}, {4, 1}})->name() == "B2");
  CHECK(classify_coxeter(M{{1, 3, 2, 2}, {3, 1, 4, 2}, {2, 4, 1, 3}, {2, 2, 3, 1}})->name() == "F4");
  CHECK(classify_coxeter(M{{1, 3, 2, 2}, {3, 1, 3, 3}, {2, 3, 1, 2}, {2, 3, 2, 1}})->name() == "D4");
  CHECK_FALSE(classify_coxeter(M{{1, 2}, {2, 1}}).has_value());  // disconnected
  CHECK_FALSE(classify_coxeter(M{{1, 6}, {6, 1}}).has_value());
}

TEST_CASE("group orders") {
  CHECK(coxeter_group_order({Family::A, 3}) == 24);
  CHECK(coxeter_group_order({Family::B, 3}) == 48);
  CHECK(coxeter_group_order({Family::D, 5}) == 1920);
  CHECK(coxeter_group_order({Family::F, 4}) == 1152);
  CHECK(coxeter_group_order({Family::E, 6}) == 51840);
}
