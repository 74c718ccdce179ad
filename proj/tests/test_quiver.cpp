#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "catgsb/presentation.hpp"
#include "catgsb/quiver.hpp"
#include "test_util.hpp"

using namespace catgsb;

namespace {

Word w(const Quiver& q, std::initializer_list<const char*> names) {
  std::vector<EdgeId> edges;
  for (const char* n : names) edges.push_back(*q.find_edge(n));
  return Word::from_edges(q, edges);
}

Quiver single_loop() {
  Quiver q;
  q.add_vertex("v");
  q.add_edge("x", 0, 0);
  return q;
}

}  // namespace

TEST_CASE("compose identities and generators") {
  Presentation delta = build_simplicial(2);
  const Quiver& q = delta.quiver;
  VertexId v0 = *q.find_vertex("0");

  Word id0 = Word::identity(v0);
  CHECK(compose(q, id0, id0) == id0);

  // E(2,1) . E(1,0) : [0] -> [2]
  Word c = compose(q, w(q, {"E(2,1)"}), w(q, {"E(1,0)"}));
  CHECK(c == w(q, {"E(2,1)", "E(1,0)"}));
  CHECK(c.source() == v0);
  CHECK(c.target() == *q.find_vertex("2"));
  CHECK(c.size() == 2);

  // E(1,0) . H(0,0) : [1] -> [1]
  Word d = compose(q, w(q, {"E(1,0)"}), w(q, {"H(0,0)"}));
  CHECK(d.source() == *q.find_vertex("1"));
  CHECK(d.target() == *q.find_vertex("1"));

  // H(0,0) . H(0,0) : endpoint mismatch [1]->[0] twice
  CHECK_THROWS_AS(compose(q, w(q, {"H(0,0)"}), w(q, {"H(0,0)"})), Error);

  // identities are two-sided units
  Word e = w(q, {"E(2,1)", "E(1,0)"});
  CHECK(compose(q, Word::identity(e.target()), e) == e);
  CHECK(compose(q, e, Word::identity(e.source())) == e);
}

TEST_CASE("compose is associative when defined") {
  Presentation delta = build_simplicial(3);
  const Quiver& q = delta.quiver;
  std::mt19937 rng(7);
  auto all01 = enumerate_words(q, *q.find_vertex("0"), *q.find_vertex("1"), 2);
  auto all12 = enumerate_words(q, *q.find_vertex("1"), *q.find_vertex("2"), 2);
  auto all23 = enumerate_words(q, *q.find_vertex("2"), *q.find_vertex("3"), 2);
  for (const Word& a : all23)
    for (const Word& b : all12)
      for (const Word& c : all01)
        CHECK(compose(q, compose(q, a, b), c) == compose(q, a, compose(q, b, c)));
}

TEST_CASE("find_subword_occurrences basics") {
  Presentation delta = build_simplicial(2);
  const Quiver& q = delta.quiver;

  // haystack E(2,0).E(1,1), needle E(1,1): one occurrence with b = id([0])
  auto occ = find_subword_occurrences(q, w(q, {"E(2,0)", "E(1,1)"}),
                                      w(q, {"E(1,1)"}));
  REQUIRE(occ.size() == 1);
  CHECK(occ[0].prefix == w(q, {"E(2,0)"}));
  CHECK(occ[0].suffix == Word::identity(*q.find_vertex("0")));
  CHECK(occ[0].start == 1);

  // whole-word occurrence
  Word whole = w(q, {"H(0,0)", "E(1,0)"});
  auto occ2 = find_subword_occurrences(q, whole, whole);
  REQUIRE(occ2.size() == 1);
  CHECK(occ2[0].prefix == Word::identity(*q.find_vertex("0")));
  CHECK(occ2[0].suffix == Word::identity(*q.find_vertex("0")));

  // identity needle rejected
  CHECK_THROWS_AS(
      find_subword_occurrences(q, whole, Word::identity(*q.find_vertex("0"))),
      Error);
}

TEST_CASE("subword occurrences on a loop match brute force") {
  Quiver q = single_loop();
  Word xxx = w(q, {"x", "x", "x"});
  Word xx = w(q, {"x", "x"});
  auto occ = find_subword_occurrences(q, xxx, xx);
  CHECK(occ.size() == 2);
  for (const auto& o : occ)
    CHECK(compose(q, o.prefix, compose(q, xx, o.suffix)) == xxx);
}

TEST_CASE("occurrence decompositions recompose exactly") {
  Presentation sc = build_cyclic(3, CyclicVariant::SC);
  const Quiver& q = sc.quiver;
  std::mt19937 rng(42);
  int tested = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int nv = static_cast<int>(q.vertex_count());
    auto hays = enumerate_words(q, testutil::rand_int(rng, 0, nv - 1),
                                testutil::rand_int(rng, 0, nv - 1), 5);
    if (hays.empty()) continue;
    const Word& hay = hays[static_cast<std::size_t>(testutil::rand_int(
        rng, 0, static_cast<int>(hays.size()) - 1))];
    if (hay.is_identity()) continue;
    std::size_t lo = static_cast<std::size_t>(
        testutil::rand_int(rng, 0, static_cast<int>(hay.size()) - 1));
    std::size_t hi = static_cast<std::size_t>(
        testutil::rand_int(rng, static_cast<int>(lo) + 1,
                           static_cast<int>(hay.size())));
    Word needle = hay.subword(q, lo, hi);
    for (const auto& o : find_subword_occurrences(q, hay, needle)) {
      CHECK(compose(q, o.prefix, compose(q, needle, o.suffix)) == hay);
      ++tested;
    }
  }
  CHECK(tested > 100);
}

TEST_CASE("overlap_pairs agrees with a brute-force alignment scan") {
  std::mt19937 rng(123);
  for (int trial = 0; trial < 60; ++trial) {
    Presentation pres = testutil::random_presentation(rng);
    const Quiver& q = pres.quiver;
    int nv = static_cast<int>(q.vertex_count());
    std::vector<Word> pool;
    for (int a = 0; a < nv; ++a)
      for (int b = 0; b < nv; ++b) {
        auto ws = enumerate_words(q, a, b, 4);
        for (const Word& x : ws)
          if (!x.is_identity()) pool.push_back(x);
      }
    if (pool.empty()) continue;
    for (int k = 0; k < 20; ++k) {
      const Word& u = pool[static_cast<std::size_t>(
          testutil::rand_int(rng, 0, static_cast<int>(pool.size()) - 1))];
      const Word& v = pool[static_cast<std::size_t>(
          testutil::rand_int(rng, 0, static_cast<int>(pool.size()) - 1))];
      auto got = overlap_pairs(q, u, v);

      // Brute force: inclusions from the occurrence scan, intersections from
      // all suffix/prefix alignment lengths.
      std::size_t expect_incl = find_subword_occurrences(q, u, v).size();
      std::size_t expect_inter = 0;
      for (std::size_t c = 1; c < std::min(u.size(), v.size()); ++c) {
        bool match = true;
        for (std::size_t t = 0; t < c; ++t)
          if (u.edge_at(u.size() - c + t) != v.edge_at(t)) match = false;
        if (match) ++expect_inter;
      }
      std::size_t got_incl = 0, got_inter = 0;
      for (const auto& o : got) {
        if (o.kind == OverlapKind::inclusion) {
          ++got_incl;
          CHECK(o.whole == u);
          CHECK(compose(q, o.prefix, compose(q, v, o.suffix)) == u);
        } else {
          ++got_inter;
          CHECK(compose(q, u, o.suffix) == o.whole);
          CHECK(compose(q, o.prefix, v) == o.whole);
          CHECK(o.whole.size() < u.size() + v.size());
          CHECK(o.suffix.size() < v.size());
          CHECK(o.prefix.size() < u.size());
        }
      }
      CHECK(got_incl == expect_incl);
      CHECK(got_inter == expect_inter);
    }
  }
}

TEST_CASE("overlap_pairs on length-8 loop words matches brute force") {
  Quiver q;
  q.add_vertex("v");
  q.add_edge("x", 0, 0);
  q.add_edge("y", 0, 0);
  q.add_edge("z", 0, 0);
  std::mt19937 rng(2718);
  auto random_word = [&] {
    int len = testutil::rand_int(rng, 1, 8);
    std::vector<EdgeId> edges;
    for (int k = 0; k < len; ++k)
      edges.push_back(testutil::rand_int(rng, 0, 2));
    return Word::from_edges(q, edges);
  };
  for (int trial = 0; trial < 500; ++trial) {
    Word u = random_word();
    Word v = trial % 5 == 0 ? u : random_word();  // include self-overlaps
    auto got = overlap_pairs(q, u, v);
    std::size_t expect_incl = find_subword_occurrences(q, u, v).size();
    std::size_t expect_inter = 0;
    for (std::size_t c = 1; c < std::min(u.size(), v.size()); ++c) {
      bool match = true;
      for (std::size_t t = 0; t < c; ++t)
        if (u.edge_at(u.size() - c + t) != v.edge_at(t)) match = false;
      if (match) ++expect_inter;
    }
    std::size_t got_incl = 0, got_inter = 0;
    for (const auto& o : got) {
      if (o.kind == OverlapKind::inclusion)
        ++got_incl;
      else
        ++got_inter;
      if (o.kind == OverlapKind::intersection) {
        CHECK(compose(q, u, o.suffix) == o.whole);
        CHECK(compose(q, o.prefix, v) == o.whole);
      }
    }
    CHECK(got_incl == expect_incl);
    CHECK(got_inter == expect_inter);
  }
}

TEST_CASE("overlap examples from the truncated families") {
  Presentation sc = build_cyclic(4, CyclicVariant::SC);
  const Quiver& q = sc.quiver;

  // h-leading against f-leading: H(1,0).E(2,1) vs E(2,1).E(1,0) overlap in
  // the middle letter.
  Word u = w(q, {"H(1,0)", "E(2,1)"});
  Word v = w(q, {"E(2,1)", "E(1,0)"});
  auto os = overlap_pairs(q, u, v);
  REQUIRE(os.size() == 1);
  CHECK(os[0].kind == OverlapKind::intersection);
  CHECK(os[0].whole == w(q, {"H(1,0)", "E(2,1)", "E(1,0)"}));

  // rho3 against rho4: T(2)^3 vs T(2).E(2,0)
  Word t3 = w(q, {"T(2)", "T(2)", "T(2)"});
  Word r4 = w(q, {"T(2)", "E(2,0)"});
  auto os2 = overlap_pairs(q, t3, r4);
  REQUIRE(os2.size() == 1);
  CHECK(os2[0].whole == w(q, {"T(2)", "T(2)", "T(2)", "E(2,0)"}));

  // disjoint edges: no overlaps
  Quiver g;
  g.add_vertex("v");
  g.add_edge("x", 0, 0);
  g.add_edge("y", 0, 0);
  g.add_edge("z", 0, 0);
  g.add_edge("t", 0, 0);
  CHECK(overlap_pairs(g, w(g, {"x", "y"}), w(g, {"z", "t"})).empty());
}

TEST_CASE("enumerate_words ordering and counts") {
  Quiver loop = single_loop();
  auto ws = enumerate_words(loop, 0, 0, 3);
  REQUIRE(ws.size() == 4);
  CHECK(ws[0] == Word::identity(0));
  CHECK(ws[1] == w(loop, {"x"}));
  CHECK(ws[2] == w(loop, {"x", "x"}));
  CHECK(ws[3] == w(loop, {"x", "x", "x"}));
  for (std::size_t n = 0; n <= 10; ++n)
    CHECK(enumerate_words(loop, 0, 0, n).size() == n + 1);

  Presentation delta = build_simplicial(2);
  const Quiver& q = delta.quiver;
  // Edges [1] -> [0] in the truncated family: only H(0,0).
  auto down = enumerate_words(q, *q.find_vertex("1"), *q.find_vertex("0"), 1);
  REQUIRE(down.size() == 1);
  CHECK(down[0] == w(q, {"H(0,0)"}));
  // No single edge raises the dimension by two.
  CHECK(enumerate_words(q, *q.find_vertex("0"), *q.find_vertex("2"), 1).empty());
}

TEST_CASE("enumerate_words emits length-then-lex order") {
  Presentation sc = build_cyclic(2, CyclicVariant::SC);
  const Quiver& q = sc.quiver;
  auto ws = enumerate_words(q, *q.find_vertex("1"), *q.find_vertex("1"), 4);
  for (std::size_t k = 1; k < ws.size(); ++k) {
    const Word& a = ws[k - 1];
    const Word& b = ws[k];
    bool ordered = a.size() < b.size() ||
                   (a.size() == b.size() &&
                    std::lexicographical_compare(
                        a.edges().begin(), a.edges().end(),
                        b.edges().begin(), b.edges().end()));
    CHECK(ordered);
  }
}

TEST_CASE("word boundary and max dim helpers") {
  Presentation delta = build_simplicial(3);
  const Quiver& q = delta.quiver;
  Word u = w(q, {"H(1,0)", "E(2,1)", "E(1,0)"});  // [0] -> [1] via [2]
  CHECK(u.boundary(q, 0) == *q.find_vertex("1"));
  CHECK(u.boundary(q, 1) == *q.find_vertex("2"));
  CHECK(u.boundary(q, 2) == *q.find_vertex("1"));
  CHECK(u.boundary(q, 3) == *q.find_vertex("0"));
  CHECK(word_max_dim(q, u) == 2);

  Quiver plain = single_loop();
  CHECK(!word_max_dim(plain, w(plain, {"x"})).has_value());
}
