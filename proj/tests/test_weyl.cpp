#include <algorithm>
#include <set>

#include "doctest.h"
#include "preproj/errors.hpp"
#include "preproj/weyl.hpp"

using namespace preproj;

namespace {

GMatrix cols(int n, std::vector<std::int64_t> v) { return GMatrix::from_columns(n, v); }

std::vector<DynkinGraph> small_graphs() {
  return {build_dynkin(Family::A, 2), build_dynkin(Family::A, 3),
          build_dynkin(Family::A, 3, Labeling::Linear), build_dynkin(Family::A, 4),
          build_dynkin(Family::A, 5), build_dynkin(Family::D, 4), build_dynkin(Family::D, 5)};
}

}  // namespace

TEST_CASE("reflection matrices") {
  const auto a2 = build_dynkin(Family::A, 2, Labeling::Linear);
  CHECK(reflection_matrix(a2, 1) == cols(2, {-1, 1, 0, 1}));
  CHECK(reflection_matrix(build_dynkin(Family::A, 1), 1) == cols(1, {-1}));
  CHECK_THROWS_AS(reflection_matrix(a2, 3), ValidationError);

  const auto a3 = build_dynkin(Family::A, 3, Labeling::Linear);
  for (Vertex i = 1; i <= 3; ++i) {
    const auto r = reflection_matrix(a3, i);
    CHECK(r * r == GMatrix::identity(3));
    CHECK(r.determinant() == -1);
  }
}

TEST_CASE("g_of_word") {
  const auto a2 = build_dynkin(Family::A, 2, Labeling::Linear);
  CHECK(g_of_word(a2, {}) == GMatrix::identity(2));
  CHECK(g_of_word(a2, {1}) == reflection_matrix(a2, 1));
  CHECK(g_of_word(a2, {1, 2, 1}) == g_of_word(a2, {2, 1, 2}));
  // Reversal: g(s_1 s_2) = r_2 r_1.
  CHECK(g_of_word(a2, {1, 2}) == reflection_matrix(a2, 2) * reflection_matrix(a2, 1));
  CHECK_THROWS_AS(g_of_word(a2, {0}), ValidationError);
}

TEST_CASE("enumeration orders") {
  const auto a2 = enumerate(build_dynkin(Family::A, 2));
  CHECK(a2.order() == 6);
  CHECK(a2.length(a2.w0()) == 3);
  CHECK(a2.reduced_word(a2.w0()).size() == 3);
  CHECK(enumerate(build_dynkin(Family::A, 3)).order() == 24);
  CHECK(enumerate(build_dynkin(Family::D, 4)).order() == 192);
  CHECK(enumerate(build_dynkin(Family::A, 1)).order() == 2);
}

TEST_CASE("enumeration cap is enforced with a partial count") {
  try {
    enumerate(build_dynkin(Family::A, 4), 50);
    FAIL("expected CapExceeded");
  } catch (const CapExceeded& e) {
    CHECK(e.partial_count() > 50);
    CHECK(e.partial_count() < 120);
  }
  CHECK_THROWS_AS(enumerate_serial(build_dynkin(Family::A, 4), 50), CapExceeded);
}

TEST_CASE("serial and parallel enumeration agree exactly") {
  for (const auto& g : small_graphs()) {
    const auto par = enumerate(g);
    const auto ser = enumerate_serial(g);
    REQUIRE(par.order() == ser.order());
    for (std::size_t w = 0; w < par.order(); ++w) {
      CHECK(par.matrix(w) == ser.matrix(w));
      CHECK(par.length(w) == ser.length(w));
      for (Vertex i = 1; i <= g.rank(); ++i) CHECK(par.left(i, w) == ser.left(i, w));
    }
    CHECK(par.w0() == ser.w0());
    CHECK(fixed_subgroup(par) == fixed_subgroup_serial(ser));
  }
}

TEST_CASE("elements are in lexicographic matrix order and words reproduce matrices") {
  for (const auto& g : small_graphs()) {
    const auto group = enumerate(g);
    for (std::size_t w = 0; w + 1 < group.order(); ++w) CHECK(group.matrix(w) < group.matrix(w + 1));
    for (std::size_t w = 0; w < group.order(); ++w) {
      const auto el = group.element(w);
      CHECK(static_cast<int>(el.word.size()) == el.length);
      CHECK(g_of_word(g, el.word) == el.g);
      const auto det = el.g.determinant();
      CHECK((det == 1 || det == -1));
    }
  }
}

TEST_CASE("iota_conjugate") {
  const auto a3 = build_dynkin(Family::A, 3, Labeling::Linear);
  const auto& iota = a3.iota_permutation();
  const auto r1 = reflection_matrix(a3, 1);
  CHECK(iota_conjugate(iota, r1) == reflection_matrix(a3, 3));
  CHECK(iota_conjugate(iota, iota_conjugate(iota, r1)) == r1);
  const std::vector<Vertex> id{1, 2, 3};
  CHECK(iota_conjugate(id, r1) == r1);
}

TEST_CASE("fixed subgroup sizes") {
  CHECK(fixed_subgroup(enumerate(build_dynkin(Family::A, 2))).size() == 2);
  CHECK(fixed_subgroup(enumerate(build_dynkin(Family::A, 3, Labeling::Linear))).size() == 8);
  CHECK(fixed_subgroup(enumerate(build_dynkin(Family::A, 5))).size() == 48);

  // A2: exhaustive, the fixed elements are e and w0.
  const auto a2 = enumerate(build_dynkin(Family::A, 2));
  const auto fixed = fixed_subgroup(a2);
  CHECK(std::set<std::size_t>(fixed.begin(), fixed.end()) ==
        std::set<std::size_t>{a2.identity(), a2.w0()});
}

TEST_CASE("folded presentation") {
  {
    const auto g = build_dynkin(Family::A, 5);
    const auto rep = verify_folded_presentation(enumerate(g), fold(g));
    CHECK(rep.pass);
    CHECK(rep.subgroup_order == 48);
  }
  {
    const auto g = build_dynkin(Family::D, 5);
    const auto rep = verify_folded_presentation(enumerate(g), fold(g));
    CHECK(rep.pass);
    CHECK(rep.subgroup_order == 384);
    CHECK(rep.classified->name() == "B4");
  }
  {
    const auto g = build_dynkin(Family::E, 6);
    const auto rep = verify_folded_presentation(enumerate(g), fold(g));
    CHECK(rep.pass);
    CHECK(rep.subgroup_order == 1152);
  }
}

TEST_CASE("a wrong label is reported, not thrown") {
  const auto g = build_dynkin(Family::A, 5);
  auto f = fold(g);
  f.coxeter[0][1] = f.coxeter[1][0] = 3;
  const auto rep = verify_folded_presentation(enumerate(g), f);
  CHECK_FALSE(rep.pass);
  CHECK_FALSE(rep.relations_hold);
  CHECK_FALSE(rep.counterexample.empty());
}

TEST_CASE("covers") {
  const auto a2 = enumerate(build_dynkin(Family::A, 2, Labeling::Linear));
  for (auto [i, dir] : covers(a2, a2.identity())) CHECK(dir == CoverDirection::Up);
  for (auto [i, dir] : covers(a2, a2.w0())) CHECK(dir == CoverDirection::Down);
  const auto s1 = a2.from_word({1});
  const auto c = covers(a2, s1);
  REQUIRE(c.size() == 2);
  CHECK(c[0] == std::pair{1, CoverDirection::Down});
  CHECK(c[1] == std::pair{2, CoverDirection::Up});
}

TEST_CASE("longest element by the ascent walk matches enumeration and equals -M_iota") {
  for (const auto& g : small_graphs()) {
    const auto group = enumerate(g);
    Word word;
    const auto w0 = longest_element_matrix(g, &word);
    CHECK(w0 == group.matrix(group.w0()));
    CHECK(static_cast<int>(word.size()) == group.length(group.w0()));
    for (int c = 0; c < g.rank(); ++c) {
      for (int r = 0; r < g.rank(); ++r) {
        CHECK(w0(r, c) == (r + 1 == g.iota(c + 1) ? -1 : 0));
      }
    }
  }
}

TEST_CASE("Weyl-level identities, exhaustive on small types") {
  for (const auto& g : small_graphs()) {
    CAPTURE(g.name());
    const auto group = enumerate(g);
    const auto& iota = g.iota_permutation();
    const auto w0 = group.element(group.w0());
    std::set<GMatrix> distinct;
    for (std::size_t w = 0; w < group.order(); ++w) {
      const auto el = group.element(w);
      distinct.insert(el.g);
      CHECK(iota_conjugate(iota, el.g) == g_of_word(g, relabel(el.word, iota)));
      Word conj = w0.word;
      conj.insert(conj.end(), el.word.begin(), el.word.end());
      conj.insert(conj.end(), w0.word.begin(), w0.word.end());
      CHECK(g_of_word(g, conj) == iota_conjugate(iota, el.g));
      for (Vertex i = 1; i <= g.rank(); ++i) {
        const int d = group.length(group.left(i, w)) - group.length(w);
        CHECK((d == 1 || d == -1));
      }
    }
    CHECK(distinct.size() == coxeter_group_order({Family(g.family()), g.rank()}));
    for (Vertex i = 1; i <= g.rank(); ++i) {
      for (Vertex j = 1; j <= g.rank(); ++j) {
        const int m = i == j ? 1 : (g.adjacent(i, j) ? 3 : 2);
        CHECK(matrix_order(reflection_matrix(g, i) * reflection_matrix(g, j)) == m);
      }
    }
  }
}

TEST_CASE("checked arithmetic") {
  CHECK_THROWS_AS(GMatrix::from_columns(1, std::vector<std::int64_t>{100000}), std::overflow_error);
  GMatrix big = GMatrix::from_columns(2, std::vector<std::int64_t>{30000, 0, 0, 1});
  CHECK_THROWS_AS(big * big, std::overflow_error);
}
