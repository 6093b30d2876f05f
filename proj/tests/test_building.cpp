#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "bldg/building.hpp"
#include "bldg/geometry.hpp"

using namespace bldg;

namespace {

Subspace pt(std::initializer_list<int> v) {
  Vec row;
  for (int x : v) row.push_back(static_cast<std::uint8_t>(x));
  return Subspace::span_of(2, static_cast<int>(row.size()), row);
}

Subspace line(std::initializer_list<int> a, std::initializer_list<int> b) {
  Vec ra, rb;
  for (int x : a) ra.push_back(static_cast<std::uint8_t>(x));
  for (int x : b) rb.push_back(static_cast<std::uint8_t>(x));
  return Subspace(2, static_cast<int>(ra.size()), {ra, rb});
}

Chamber fano_chamber(const Geometry& g, const Subspace& p, const Subspace& l) {
  return g.chamber_of({p, l});
}

}  // namespace

TEST_CASE("thin A2 is a valid building with delta = u^{-1}v") {
  Geometry g = Geometry::build("thin:A2");
  const Building& b = g.building();
  const WeylGroup& w = b.weyl();
  CHECK(b.size() == 6);
  CHECK_FALSE(b.thick());
  for (Chamber u = 0; u < b.size(); ++u)
    for (Chamber v = 0; v < b.size(); ++v)
      CHECK(b.delta(u, v) == w.multiply_elem(w.inverse(static_cast<Elem>(u)),
                                             static_cast<Elem>(v)));
}

TEST_CASE("A2(2) assembles and is thick") {
  Geometry g = Geometry::build("A2:p=2");
  const Building& b = g.building();
  CHECK(b.size() == 21);
  CHECK(b.thick());
  for (int t = 1; t <= 2; ++t) {
    CHECK(b.panels()[t - 1].size() == 7);
    for (const auto& blk : b.panels()[t - 1]) CHECK(blk.size() == 3);
  }
}

TEST_CASE("assembly rejects bad panel data") {
  WeylGroup w(CoxeterDiagram::parse("A2"));
  // singleton block
  CHECK_THROWS_AS(
      Building(w, {{{0, 1}, {2}}, {{0, 2}, {1}}}),
      Error);
  // disconnected: two separate hexagons worth of chambers
  std::vector<std::vector<std::vector<Chamber>>> disc(2);
  for (Chamber c = 0; c < 8; c += 2) {
    disc[0].push_back({c, c + 1});
    disc[1].push_back({c, c + 1});
  }
  CHECK_THROWS_AS(Building(WeylGroup(CoxeterDiagram::parse("A2")), disc), Error);
}

TEST_CASE("corrupted panels surface an AxiomViolation") {
  // force two chambers of a common 2-panel into a common 1-panel as well;
  // their Weyl distance then cannot be well defined
  Geometry g = Geometry::build("A2:p=2");
  auto panels = g.building().panels();
  Chamber d = g.building().panel(0, 2)[1];
  std::size_t b0 = 0, bd = 0;
  for (std::size_t k = 0; k < panels[0].size(); ++k)
    for (Chamber c : panels[0][k]) {
      if (c == 0) b0 = k;
      if (c == d) bd = k;
    }
  for (auto& c : panels[0][bd])
    if (c == d) c = panels[0][b0][2];
  panels[0][b0][2] = d;
  bool threw = false;
  try {
    Building b(WeylGroup(CoxeterDiagram::parse("A2")), panels);
  } catch (const Error& e) {
    threw = true;
    CHECK((e.code() == ErrorCode::AxiomViolation || e.code() == ErrorCode::Disconnected));
  }
  CHECK(threw);
}

TEST_CASE("weyl distance basics") {
  Geometry g = Geometry::build("A2:p=2");
  const Building& b = g.building();
  const WeylGroup& w = b.weyl();
  for (Chamber x = 0; x < b.size(); ++x) CHECK(b.delta(x, x) == w.identity());
  // adjacency across an i-panel gives s_i
  for (int t = 1; t <= 2; ++t)
    for (const auto& blk : b.panels()[t - 1])
      for (Chamber x : blk)
        for (Chamber y : blk)
          if (x != y) CHECK(b.delta(x, y) == w.generator(t));
  // symmetry: delta(y,x) = delta(x,y)^{-1}, exhaustive
  for (Chamber x = 0; x < b.size(); ++x)
    for (Chamber y = 0; y < b.size(); ++y)
      CHECK(b.delta(y, x) == w.inverse(b.delta(x, y)));
  CHECK_THROWS_AS(b.delta(0, 99), Error);
}

TEST_CASE("opposite Fano flags at distance 3") {
  Geometry g = Geometry::build("A2:p=2");
  const Building& b = g.building();
  Chamber x = fano_chamber(g, pt({1, 0, 0}), line({1, 0, 0}, {0, 1, 0}));
  Chamber y = fano_chamber(g, pt({0, 0, 1}), line({0, 0, 1}, {1, 1, 0}));
  CHECK(b.dist(x, y) == 3);
  CHECK(b.is_opposite_chambers(x, y));
}

TEST_CASE("star chambers") {
  Geometry g = Geometry::build("A2:p=2");
  const Building& b = g.building();
  Chamber c = fano_chamber(g, pt({0, 0, 1}), line({0, 0, 1}, {1, 0, 0}));
  CHECK(Simplex(b, c, full_types(2)).star() == std::vector<Chamber>{c});
  Simplex v(b, c, type_bit(1));  // the point vertex ⟨e3⟩
  CHECK(v.star().size() == 3);
  for (Chamber d : v.star()) CHECK(g.flags()[d][0] == pt({0, 0, 1}));
  CHECK(Simplex(b, c, 0).star().size() == 21);
}

TEST_CASE("projection of chambers") {
  Geometry g = Geometry::build("A2:p=2");
  const Building& b = g.building();
  Chamber c = fano_chamber(g, pt({1, 0, 0}), line({1, 0, 0}, {0, 1, 0}));
  Simplex r(b, fano_chamber(g, pt({0, 0, 1}), line({0, 0, 1}, {1, 0, 0})), type_bit(1));
  // gate of St⟨e3⟩ from (⟨e1⟩,⟨e1,e2⟩) is (⟨e3⟩,⟨e1,e3⟩)
  CHECK(proj_chamber(r, c) ==
        fano_chamber(g, pt({0, 0, 1}), line({0, 0, 1}, {1, 0, 0})));
  // projection fixes the star
  for (Chamber d : r.star()) CHECK(proj_chamber(r, d) == d);
}

TEST_CASE("projection of simplices") {
  Geometry g = Geometry::build("A2:p=2");
  const Building& b = g.building();
  Chamber ce3 = fano_chamber(g, pt({0, 0, 1}), line({0, 0, 1}, {1, 0, 0}));
  Chamber ce1 = fano_chamber(g, pt({1, 0, 0}), line({1, 0, 0}, {0, 1, 0}));
  Simplex r(b, ce3, type_bit(1));
  Simplex s(b, ce1, type_bit(1));
  Simplex prj = proj_simplex(r, s);
  CHECK(prj.type() == full_types(2));
  CHECK(prj == Simplex(b, fano_chamber(g, pt({0, 0, 1}), line({0, 0, 1}, {1, 0, 0})),
                       full_types(2)));
  // S in St R projects to itself
  for (Chamber d : r.star()) {
    Simplex t(b, d, full_types(2));
    CHECK(proj_simplex(r, t) == t);
  }
  // empty base simplex: St ∅ = Δ, so everything projects to itself
  Simplex empty(b, 0, 0);
  CHECK(proj_simplex(empty, s) == s);
}

TEST_CASE("opposition counts: 2^{l(w0)} for q = 2") {
  for (const char* spec : {"A2:p=2", "C2:p=2"}) {
    Geometry g = Geometry::build(spec);
    const Building& b = g.building();
    int expected = 1 << b.weyl().length(b.weyl().longest());
    for (Chamber x = 0; x < b.size(); ++x) {
      int n = 0;
      for (Chamber y = 0; y < b.size(); ++y)
        if (b.is_opposite_chambers(x, y)) ++n;
      CHECK(n == expected);
    }
  }
}

TEST_CASE("opposite simplices: literal definition and examples") {
  Geometry g = Geometry::build("A2:p=2");
  const Building& b = g.building();
  Simplex p1(b, fano_chamber(g, pt({1, 0, 0}), line({1, 0, 0}, {0, 1, 0})), type_bit(1));
  Simplex l_far(b, fano_chamber(g, pt({0, 0, 1}), line({0, 0, 1}, {1, 1, 0})), type_bit(2));
  Simplex l_inc(b, fano_chamber(g, pt({1, 0, 0}), line({1, 0, 0}, {0, 1, 0})), type_bit(2));
  CHECK(is_opposite_simplices(p1, l_far));
  CHECK_FALSE(is_opposite_simplices(p1, l_inc));
  // chamber against its w0-partner
  for (Chamber x = 0; x < b.size(); ++x)
    for (Chamber y = 0; y < b.size(); ++y)
      if (b.is_opposite_chambers(x, y))
        CHECK(is_opposite_simplices(Simplex(b, x, full_types(2)),
                                    Simplex(b, y, full_types(2))));
}

TEST_CASE("fast opposition criterion agrees with the literal one") {
  for (const char* spec : {"A2:p=2", "C2:p=2"}) {
    Geometry g = Geometry::build(spec);
    const Building& b = g.building();
    std::vector<Simplex> simplices;
    std::set<std::pair<TypeSet, Chamber>> seen;
    for (TypeSet J = 1; J <= full_types(2); ++J)
      for (Chamber c = 0; c < b.size(); ++c) {
        Simplex s(b, c, J);
        if (seen.insert({J, s.representative()}).second) simplices.push_back(s);
      }
    for (const auto& a : simplices)
      for (const auto& bb : simplices)
        CHECK(is_opposite_simplices(a, bb) == is_opposite_simplices_fast(a, bb));
  }
}

TEST_CASE("opposition inside a star") {
  Geometry g = Geometry::build("A2:p=2");
  const Building& b = g.building();
  Chamber ce3 = fano_chamber(g, pt({0, 0, 1}), line({0, 0, 1}, {1, 0, 0}));
  Simplex r(b, ce3, type_bit(1));
  Simplex c1(b, ce3, full_types(2));
  Simplex c2(b, fano_chamber(g, pt({0, 0, 1}), line({0, 0, 1}, {0, 1, 0})),
             full_types(2));
  CHECK(opposite_in_star(r, c1, c2));
  CHECK_FALSE(opposite_in_star(r, c1, c1));
  // R = ∅ reduces to opposition in Δ
  Simplex empty(b, 0, 0);
  for (Chamber x = 0; x < b.size(); ++x)
    for (Chamber y = 0; y < b.size(); ++y)
      CHECK(opposite_in_star(empty, Simplex(b, x, full_types(2)),
                             Simplex(b, y, full_types(2))) ==
            b.is_opposite_chambers(x, y));
  // NotInStar
  Simplex off_star(b, fano_chamber(g, pt({1, 0, 0}), line({1, 0, 0}, {0, 1, 0})),
                   full_types(2));
  CHECK_THROWS_AS(opposite_in_star(r, off_star, c1), Error);
}

TEST_CASE("opposite transfer in the thin rank-1 building") {
  Geometry g = Geometry::build("thin:A1");
  const Building& b = g.building();
  Simplex x1(b, 0, type_bit(1));
  Simplex x1o(b, 1, type_bit(1));
  CHECK(opposite_transfer(x1, x1o, x1) == x1o);
  CHECK_THROWS_AS(opposite_transfer(x1, x1, x1), Error);
}

TEST_CASE("apartment hulls") {
  Geometry thin = Geometry::build("thin:A2");
  const Building& tb = thin.building();
  for (Chamber x = 0; x < tb.size(); ++x)
    for (Chamber y = 0; y < tb.size(); ++y)
      if (tb.is_opposite_chambers(x, y))
        CHECK(apartment_hull(tb, x, y).size() == 6);

  for (const char* spec : {"A2:p=2", "C2:p=2"}) {
    Geometry g = Geometry::build(spec);
    const Building& b = g.building();
    std::size_t w_order = b.weyl().size();
    for (Chamber x = 0; x < b.size(); ++x)
      for (Chamber y = x + 1; y < b.size(); ++y) {
        if (!b.is_opposite_chambers(x, y)) continue;
        auto hull = apartment_hull(b, x, y);
        CHECK(hull.size() == w_order);
        // thin: every panel meets the hull in exactly 0 or 2 chambers
        std::set<Chamber> hs(hull.begin(), hull.end());
        for (int t = 1; t <= b.rank(); ++t)
          for (const auto& blk : b.panels()[t - 1]) {
            int m = 0;
            for (Chamber c : blk) m += hs.count(c);
            CHECK((m == 0 || m == 2));
          }
      }
  }
  Geometry g = Geometry::build("A2:p=2");
  CHECK_THROWS_AS(apartment_hull(g.building(), 0, 0), Error);
}

TEST_CASE("C2(2) and C2(3) chamber counts") {
  CHECK(Geometry::build("C2:p=2").building().size() == 45);
  CHECK(Geometry::build("C2:p=3").building().size() == 160);
  CHECK(Geometry::build("A3:p=2").building().size() == 315);
}

TEST_CASE("projection distance law on A2(2)") {
  Geometry g = Geometry::build("A2:p=2");
  const Building& b = g.building();
  for (Chamber c = 0; c < b.size(); ++c)
    for (TypeSet J = 1; J <= full_types(2); ++J)
      for (Chamber rc = 0; rc < b.size(); ++rc) {
        Simplex r(b, rc, J);
        if (r.representative() != rc) continue;  // one representative per simplex
        Chamber gate = proj_chamber(r, c);
        for (Chamber z : r.star())
          CHECK(b.dist(c, z) == b.dist(c, gate) + b.dist(gate, z));
      }
}
