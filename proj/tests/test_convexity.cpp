#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "bldg/convexity.hpp"
#include "bldg/geometry.hpp"

using namespace bldg;

TEST_CASE("intervals") {
  Geometry g = Geometry::build("A2:p=2");
  const Building& b = g.building();
  CHECK(interval(b, 5, 5) == std::vector<Chamber>{5});
  // adjacent chambers: the interval is exactly the pair
  for (int t = 1; t <= 2; ++t)
    for (const auto& blk : b.panels()[t - 1])
      for (Chamber x : blk)
        for (Chamber y : blk)
          if (x != y) CHECK(interval(b, x, y).size() == 2);
  for (Chamber x = 0; x < b.size(); ++x)
    for (Chamber y = 0; y < b.size(); ++y)
      if (b.is_opposite_chambers(x, y))
        CHECK(interval(b, x, y) == apartment_hull(b, x, y));
}

TEST_CASE("convex hulls") {
  Geometry g = Geometry::build("A2:p=2");
  const Building& b = g.building();
  CHECK(convex_hull(b, {7}).chambers() == std::vector<Chamber>{7});
  for (Chamber y = 0; y < b.size(); ++y)
    if (b.is_opposite_chambers(0, y)) {
      auto hull = convex_hull(b, {0, y});
      CHECK(hull.size() == 6);
      CHECK(hull.chambers() == apartment_hull(b, 0, y));
    }
  std::vector<Chamber> all(b.size());
  for (Chamber c = 0; c < b.size(); ++c) all[c] = c;
  CHECK(convex_hull(b, all).size() == b.size());
}

TEST_CASE("is_convex") {
  Geometry g = Geometry::build("A2:p=2");
  const Building& b = g.building();
  // residues are convex
  for (Chamber c = 0; c < b.size(); ++c)
    for (TypeSet J = 1; J <= full_types(2); ++J)
      CHECK(is_convex(b, Simplex(b, c, J).star()));
  // an opposite pair without its interval is not
  for (Chamber y = 0; y < b.size(); ++y)
    if (b.is_opposite_chambers(0, y)) {
      CHECK_FALSE(is_convex(b, {0, y}));
      CHECK(is_convex(b, apartment_hull(b, 0, y)));
    }
}

TEST_CASE("hull idempotence and monotonicity, sampled") {
  Geometry g = Geometry::build("C2:p=2");
  const Building& b = g.building();
  std::mt19937_64 rng(0);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Chamber> s, t;
    for (int k = 0; k < 3; ++k) s.push_back(rng() % b.size());
    t = s;
    t.push_back(rng() % b.size());
    auto hs = convex_hull(b, s);
    CHECK(convex_hull(b, hs.chambers()).chambers() == hs.chambers());
    auto ht = convex_hull(b, t);
    CHECK(std::includes(ht.chambers().begin(), ht.chambers().end(),
                        hs.chambers().begin(), hs.chambers().end()));
  }
}

TEST_CASE("projection closure of convex subcomplexes") {
  Geometry g = Geometry::build("A2:p=2");
  const Building& b = g.building();
  // residues and apartments: for all simplex pairs (R,S) of Ω, proj_R(S) ∈ Ω
  std::vector<ConvexChamberSubcomplex> omegas;
  for (Chamber c = 0; c < b.size(); ++c)
    omegas.emplace_back(b, Simplex(b, c, type_bit(1)).star());
  for (Chamber y = 1; y < b.size(); ++y)
    if (b.is_opposite_chambers(0, y)) omegas.emplace_back(b, apartment_hull(b, 0, y));
  for (const auto& omega : omegas) {
    auto simplices = omega.all_simplices();
    for (const auto& r : simplices)
      for (const auto& s : simplices) CHECK(omega.contains(proj_simplex(r, s)));
  }
}

TEST_CASE("fixed subcomplexes") {
  Geometry g = Geometry::build("A2:p=2");
  const Building& b = g.building();

  std::vector<Chamber> ident(b.size());
  for (Chamber c = 0; c < b.size(); ++c) ident[c] = c;
  CHECK(fixed_subcomplex(b, {ident}).size() == b.size());

  MatRows swap12 = {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  auto perm = g.chamber_permutation(swap12);
  auto fixed = fixed_subcomplex(b, {perm});
  // independent oracle: flags literally fixed by the matrix
  std::vector<Chamber> expect;
  for (Chamber c = 0; c < b.size(); ++c)
    if (apply_matrix(g.flags()[c], swap12) == g.flags()[c]) expect.push_back(c);
  CHECK(fixed.chambers() == expect);
  CHECK(is_convex(b, fixed.chambers()));

  // a Singer cycle acts without fixed flags
  MatRows singer = {{0, 0, 1}, {1, 0, 1}, {0, 1, 0}};
  CHECK_THROWS_AS(fixed_subcomplex(b, {g.chamber_permutation(singer)}), Error);

  // sampled matrix automorphisms always yield convex fixed sets
  std::mt19937_64 rng(1);
  int tried = 0;
  while (tried < 15) {
    MatRows m(3, Vec(3, 0));
    for (auto& row : m)
      for (auto& x : row) x = static_cast<std::uint8_t>(rng() % 2);
    if (!mat_invertible(2, m)) continue;
    ++tried;
    try {
      auto f = fixed_subcomplex(b, {g.chamber_permutation(m)});
      CHECK(is_convex(b, f.chambers()));
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::EmptyFixedSet);
    }
  }
}

TEST_CASE("simplices_of_type") {
  Geometry g = Geometry::build("A2:p=2");
  const Building& b = g.building();
  std::vector<Chamber> all(b.size());
  for (Chamber c = 0; c < b.size(); ++c) all[c] = c;
  ConvexChamberSubcomplex whole(b, all);
  CHECK(whole.simplices_of_type(full_types(2)).size() == 21);
  CHECK(whole.simplices_of_type(type_bit(1)).size() == 7);
  CHECK(whole.simplices_of_type(type_bit(2)).size() == 7);

  // the residue of a point vertex contains exactly that type-1 simplex
  Simplex v(b, 0, type_bit(1));
  ConvexChamberSubcomplex res(b, v.star());
  auto pts = res.simplices_of_type(type_bit(1));
  REQUIRE(pts.size() == 1);
  CHECK(pts[0] == v);
  CHECK_THROWS_AS(whole.simplices_of_type(type_bit(5)), Error);
}
