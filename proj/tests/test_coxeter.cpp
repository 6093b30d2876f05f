#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "bldg/coxeter.hpp"

using namespace bldg;

namespace {

// Independent order formulas for the supported families.
std::size_t expected_order(const CoxeterDiagram& d) {
  std::size_t o = 1;
  switch (d.family) {
    case Family::A:
      for (int k = 2; k <= d.rank + 1; ++k) o *= k;
      return o;
    case Family::B:
    case Family::C:
      for (int k = 2; k <= d.rank; ++k) o *= k;
      return o << d.rank;
    case Family::D:
      for (int k = 2; k <= d.rank; ++k) o *= k;
      return o << (d.rank - 1);
    case Family::I2:
      return 2u * d.i2_order;
  }
  return 0;
}

}  // namespace

TEST_CASE("orders and longest lengths") {
  struct Row {
    const char* name;
    std::size_t order;
    int l0;
  };
  // ℓ(w0) = number of positive roots
  const Row rows[] = {
      {"A1", 2, 1},    {"A2", 6, 3},      {"A3", 24, 6},  {"A4", 120, 10},
      {"B2", 8, 4},    {"C2", 8, 4},      {"B3", 48, 9},  {"C3", 48, 9},
      {"D4", 192, 12}, {"I2:4", 8, 4},    {"I2:6", 12, 6}, {"I2:2", 4, 2},
  };
  for (const auto& r : rows) {
    CAPTURE(r.name);
    WeylGroup g(CoxeterDiagram::parse(r.name));
    CHECK(g.size() == r.order);
    CHECK(g.size() == expected_order(g.diagram()));
    CHECK(g.length(g.longest()) == r.l0);
  }
}

TEST_CASE("A1 trivial") {
  WeylGroup g(CoxeterDiagram::parse("A1"));
  CHECK(g.size() == 2);
  CHECK(g.longest() == g.generator(1));
}

TEST_CASE("longest element is an involution") {
  for (const char* name : {"A2", "A3", "C2", "D4", "I2:6"}) {
    WeylGroup g(CoxeterDiagram::parse(name));
    CHECK(g.multiply_elem(g.longest(), g.longest()) == g.identity());
  }
}

TEST_CASE("w0 central in I2(4)") {
  WeylGroup g(CoxeterDiagram::parse("I2:4"));
  for (int i = 1; i <= 2; ++i) {
    Elem left = g.multiply_elem(g.generator(i), g.longest());
    Elem right = g.multiply(g.longest(), i);
    CHECK(left == right);
  }
}

TEST_CASE("multiply examples in A2") {
  WeylGroup g(CoxeterDiagram::parse("A2"));
  Elem s1 = g.multiply(g.identity(), 1);
  CHECK(g.length(s1) == 1);
  CHECK(g.multiply(s1, 1) == g.identity());
  Elem s1s2 = g.multiply(s1, 2);
  CHECK(g.multiply(s1s2, 1) == g.longest());
  CHECK(g.length(g.multiply(s1s2, 1)) == 3);
  CHECK_THROWS_AS(g.multiply(s1, 3), Error);
}

TEST_CASE("opposition involution") {
  WeylGroup a2(CoxeterDiagram::parse("A2"));
  CHECK(a2.opposition(1) == 2);
  CHECK(a2.opposition(2) == 1);
  WeylGroup a3(CoxeterDiagram::parse("A3"));
  CHECK(a3.opposition(1) == 3);
  CHECK(a3.opposition(2) == 2);
  CHECK(a3.opposition(3) == 1);
  WeylGroup c2(CoxeterDiagram::parse("C2"));
  CHECK(c2.opposition(1) == 1);
  CHECK(c2.opposition(2) == 2);

  for (const char* name : {"A3", "C3", "D4", "I2:6"}) {
    WeylGroup g(CoxeterDiagram::parse(name));
    for (int i = 1; i <= g.rank(); ++i) {
      CHECK(g.opposition(g.opposition(i)) == i);
      for (int j = 1; j <= g.rank(); ++j)
        CHECK(g.diagram().entry(g.opposition(i), g.opposition(j)) == g.diagram().entry(i, j));
      // defining property, checked against the element table
      Elem c = g.multiply_elem(g.multiply(g.longest(), i), g.longest());
      CHECK(c == g.generator(g.opposition(i)));
    }
  }
}

TEST_CASE("parabolic longest elements") {
  WeylGroup a3(CoxeterDiagram::parse("A3"));
  CHECK(a3.parabolic_longest(0) == a3.identity());
  CHECK(a3.parabolic_longest(type_bit(1)) == a3.generator(1));
  Elem s1s3 = a3.multiply(a3.generator(1), 3);
  CHECK(a3.parabolic_longest(type_bit(1) | type_bit(3)) == s1s3);
  CHECK(a3.length(s1s3) == 2);
  CHECK(a3.parabolic_longest(full_types(3)) == a3.longest());
  CHECK_THROWS_AS(a3.parabolic_longest(type_bit(4)), Error);
}

TEST_CASE("length duality via w0, exhaustive at rank <= 4") {
  for (const char* name : {"A2", "A3", "A4", "C2", "C3", "D4", "I2:6"}) {
    WeylGroup g(CoxeterDiagram::parse(name));
    int l0 = g.length(g.longest());
    for (Elem w = 0; w < g.size(); ++w) {
      CHECK(g.length(w) == l0 - g.length(g.multiply_elem(g.longest(), w)));
      CHECK(g.length(g.inverse(w)) == g.length(w));
    }
  }
}

TEST_CASE("canonical form independent of reduced word") {
  // Enumerate all reduced words up to length 4 in A3 and check that words
  // reaching the same element always carry the element's stored length.
  WeylGroup g(CoxeterDiagram::parse("A3"));
  std::map<Elem, std::set<std::vector<int>>> words;
  std::vector<std::pair<Elem, std::vector<int>>> frontier = {{g.identity(), {}}};
  for (int len = 0; len < 4; ++len) {
    std::vector<std::pair<Elem, std::vector<int>>> next;
    for (const auto& [w, wd] : frontier)
      for (int i = 1; i <= g.rank(); ++i) {
        Elem e = g.multiply(w, i);
        if (g.length(e) == len + 1) {
          auto nd = wd;
          nd.push_back(i);
          words[e].insert(nd);
          next.emplace_back(e, nd);
        }
      }
    frontier = std::move(next);
  }
  for (const auto& [e, ws] : words)
    for (const auto& wd : ws) CHECK(static_cast<int>(wd.size()) == g.length(e));
}

TEST_CASE("deletion property spot-check") {
  // For each element w and each non-reduced word w·s_i·s_i obtained by
  // appending a descent twice... instead: take each element's stored word
  // with a generator inserted to make it non-reduced, and verify some
  // length-2 deletion recovers a reduced word of the same element.
  WeylGroup g(CoxeterDiagram::parse("A3"));
  for (Elem w = 0; w < g.size(); ++w) {
    auto base = g.word(w);
    for (int i = 1; i <= g.rank(); ++i) {
      auto ext = base;
      ext.push_back(i);
      if (g.length(g.multiply(w, i)) > g.length(w)) continue;  // still reduced
      bool ok = false;
      for (std::size_t a = 0; a < ext.size() && !ok; ++a)
        for (std::size_t b = a + 1; b < ext.size() && !ok; ++b) {
          Elem e = g.identity();
          for (std::size_t k = 0; k < ext.size(); ++k)
            if (k != a && k != b) e = g.multiply(e, ext[k]);
          if (e == g.multiply(w, i) &&
              static_cast<int>(ext.size()) - 2 == g.length(e))
            ok = true;
        }
      CHECK(ok);
    }
  }
}

TEST_CASE("stored words are reduced and reproduce the element") {
  for (const char* name : {"A3", "C2", "I2:5"}) {
    WeylGroup g(CoxeterDiagram::parse(name));
    for (Elem w = 0; w < g.size(); ++w) {
      Elem e = g.identity();
      for (int i : g.word(w)) e = g.multiply(e, i);
      CHECK(e == w);
      CHECK(static_cast<int>(g.word(w).size()) == g.length(w));
    }
  }
}

TEST_CASE("diagram errors") {
  CHECK_THROWS_AS(CoxeterDiagram::parse("E6"), Error);
  CHECK_THROWS_AS(CoxeterDiagram::parse("A0"), Error);
  CHECK_THROWS_AS(CoxeterDiagram::parse("D3"), Error);
  CHECK_THROWS_AS(CoxeterDiagram::parse("I2:x"), Error);
  // A9 has order 10! = 3628800 > cap
  CHECK_THROWS_AS(WeylGroup(CoxeterDiagram::parse("A9")), Error);
  try {
    WeylGroup g(CoxeterDiagram::parse("A9"));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeLimit);
  }
}

TEST_CASE("irreducibility of built-in diagrams") {
  for (const char* name : {"A2", "A3", "B3", "C2", "D4", "I2:6"})
    CHECK(CoxeterDiagram::parse(name).irreducible());
  CHECK_FALSE(CoxeterDiagram::make(Family::I2, 2, 2).irreducible());
}
