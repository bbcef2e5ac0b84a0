#include <doctest.h>

#include <numeric>
#include <random>
#include <set>
#include <string>

#include "biell/walls.hpp"

using namespace biell;

namespace {

// Brute-force search for same-slope splittings v = v' + v'' with both
// Bogomolov squares nonnegative; returns the primitive sign-normalized xi
// classes they realize. Independent of the enumeration path under test.
std::set<std::pair<std::int64_t, std::int64_t>> realized_walls(const MukaiVector& v,
                                                               std::int64_t coeff_box,
                                                               std::int64_t s_box) {
  std::set<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t rp = 1; rp < v.r; ++rp) {
    const std::int64_t rpp = v.r - rp;
    for (std::int64_t x = -coeff_box; x <= coeff_box; ++x)
      for (std::int64_t y = -coeff_box; y <= coeff_box; ++y) {
        NumClass xi = rp * v.c1 - v.r * NumClass{x, y};
        if (xi.a == 0 && xi.b == 0) continue;
        if (xi.a * xi.b >= 0) continue;  // no ample class is orthogonal to xi
        for (std::int64_t sp = -s_box; sp <= s_box; ++sp) {
          MukaiVector vp{rp, {x, y}, sp};
          MukaiVector vpp{rpp, v.c1 - vp.c1, v.s - sp};
          if (mukai_square(vp) < 0 || mukai_square(vpp) < 0) continue;
          std::int64_t g = std::gcd(xi.a, xi.b);
          NumClass core{xi.a / g, xi.b / g};
          if (core.a < 0) core = -core;
          out.insert({core.a, core.b});
          break;
        }
      }
  }
  return out;
}

}  // namespace

TEST_SUITE("walls") {

TEST_CASE("bogomolov") {
  CHECK(bogomolov_ok({2, {3, 2}, 3}));
  CHECK(!bogomolov_ok({1, {0, 0}, 1}));
  CHECK(bogomolov_ok({3, {0, 0}, 0}));
  CHECK_THROWS_AS(bogomolov_ok({0, {1, 1}, 0}), precondition_error);
}

TEST_CASE("wall enumeration") {
  auto walls = enumerate_walls({2, {1, 1}, 0});
  REQUIRE(walls.size() == 1);
  CHECK(walls[0].xi == NumClass{1, -1});
  CHECK(walls[0].ample_direction == NumClass{1, 1});

  CHECK(enumerate_walls({2, {3, 2}, 3}).empty());  // isotropic: bound is zero
  CHECK_THROWS_AS(enumerate_walls({1, {1, 1}, 0}), precondition_error);
  CHECK_THROWS_AS(enumerate_walls({2, {0, 0}, 1}), precondition_error);  // v^2 < 0

  auto walls2 = enumerate_walls({2, {2, 1}, 0});  // v^2 = 4, bound -xi^2 <= 4
  REQUIRE(walls2.size() == 3);
  CHECK(walls2[0].xi == NumClass{1, -2});
  CHECK(walls2[1].xi == NumClass{1, -1});
  CHECK(walls2[2].xi == NumClass{2, -1});
}

TEST_CASE("an explicit coefficient cap can truncate the enumeration") {
  MukaiVector v{2, {2, 1}, 0};
  CHECK(enumerate_walls(v).size() == 3);
  auto capped = enumerate_walls(v, 1);
  REQUIRE(capped.size() == 1);
  CHECK(capped[0].xi == NumClass{1, -1});
}

TEST_CASE("genericity") {
  MukaiVector v{2, {1, 1}, 0};
  CHECK(is_generic(Polarization{{1, 2}}, v));
  CHECK(!is_generic(Polarization{{1, 1}}, v));
  CHECK(is_generic(Polarization{{7, 7}}, {1, {5, 5}, 2}));  // rank 1: no walls
  CHECK_THROWS_AS(is_generic(Polarization{{0, 1}}, v), precondition_error);

  // Consistency: non-generic exactly on an enumerated wall.
  for (std::int64_t p = 1; p <= 6; ++p)
    for (std::int64_t q = 1; q <= 6; ++q) {
      bool on_wall = false;
      for (const Wall& w : enumerate_walls(v))
        if (intersect(w.xi, {p, q}) == 0) on_wall = true;
      CHECK(is_generic(Polarization{{p, q}}, v) == !on_wall);
    }
}

TEST_CASE("rank-weighted splitting identity on random integer instances") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<std::int64_t> coeff(-30, 30);
  std::uniform_int_distribution<std::int64_t> rank(1, 9);
  for (int i = 0; i < 3000; ++i) {
    MukaiVector vp{rank(rng), {coeff(rng), coeff(rng)}, coeff(rng)};
    MukaiVector vpp{rank(rng), {coeff(rng), coeff(rng)}, coeff(rng)};
    MukaiVector v{vp.r + vpp.r, vp.c1 + vpp.c1, vp.s + vpp.s};
    NumClass xi = vp.r * v.c1 - v.r * vp.c1;
    CHECK(vp.r * vpp.r * mukai_square(v) ==
          v.r * vpp.r * mukai_square(vp) + v.r * vp.r * mukai_square(vpp) -
              self_intersection(xi));
  }
}

TEST_CASE("same-slope splittings stay within the bound and inside the enumeration") {
  for (std::int64_t r : {2, 3})
    for (std::int64_t a = -3; a <= 3; ++a)
      for (std::int64_t b = -3; b <= 3; ++b)
        for (std::int64_t s = -4; s <= 4; ++s) {
          MukaiVector v{r, {a, b}, s};
          std::int64_t vsq = mukai_square(v);
          if (vsq < 0 || vsq > 12) continue;
          auto walls = enumerate_walls(v);
          std::set<std::pair<std::int64_t, std::int64_t>> enumerated;
          for (const Wall& w : walls) enumerated.insert({w.xi.a, w.xi.b});
          for (auto [x, y] : realized_walls(v, 6, 40)) {
            CHECK(4 * (-self_intersection(NumClass{x, y})) <= r * r * vsq);
            CHECK(enumerated.count({x, y}) == 1);
          }
        }

  // For v = (2, (1,1), 0) the enumeration is exactly the realized set.
  MukaiVector v{2, {1, 1}, 0};
  auto realized = realized_walls(v, 8, 60);
  auto walls = enumerate_walls(v);
  REQUIRE(realized.size() == walls.size());
  for (const Wall& w : walls) CHECK(realized.count({w.xi.a, w.xi.b}) == 1);
}

TEST_CASE("moduli nonemptiness") {
  NonemptinessVerdict ok = moduli_nonempty({2, {3, 2}, 3}, Polarization{{1, 1}}, SurfaceType(2));
  CHECK(ok.nonempty);
  CHECK(ok.stable_nonempty == Tristate::unknown);

  NonemptinessVerdict neg = moduli_nonempty({1, {0, 0}, 1}, Polarization{{2, 3}}, SurfaceType(1));
  CHECK(!neg.nonempty);
  CHECK(neg.stable_nonempty == Tristate::no);

  NonemptinessVerdict divisible =
      moduli_nonempty({3, {3, 3}, 3}, Polarization{{1, 2}}, SurfaceType(4));
  CHECK(divisible.nonempty);
  CHECK(divisible.stable_nonempty == Tristate::no);
  CHECK(divisible.reason == "isotropic-divisible-no-mu-stable");

  // A polarization on a wall is rejected, naming the wall.
  try {
    moduli_nonempty({2, {1, 1}, 0}, Polarization{{1, 1}}, SurfaceType(1));
    CHECK(false);
  } catch (const precondition_error& e) {
    CHECK(std::string(e.what()).find("(1,-1)") != std::string::npos);
  }
}

TEST_CASE("component count") {
  MukaiVector v{2, {3, 2}, 1};
  CHECK(component_count(v, SurfaceType(5)).count == 3);
  CHECK(component_count(v, SurfaceType(6)).count == 1);
  CHECK(component_count(v, SurfaceType(4)).count == 1);  // torsion-free shortcut
  CHECK(component_count(v, SurfaceType(7)).count == 1);
  CHECK_THROWS_AS(component_count(v, SurfaceType(3)), precondition_error);  // gcd(2,4) = 2
  // Types 1 and 2 have ord(omega) = 2, so gcd(r, ord) = 2 and the
  // coprimality hypothesis fails; the count is refused rather than asserted.
  CHECK_THROWS_AS(component_count(v, SurfaceType(1)), precondition_error);
  CHECK_THROWS_AS(component_count(v, SurfaceType(2)), precondition_error);

  CHECK_THROWS_AS(component_count({1, {3, 2}, 1}, SurfaceType(5)), precondition_error);
  CHECK_THROWS_AS(component_count({2, {2, 4}, 1}, SurfaceType(5)), precondition_error);
  CHECK_THROWS_AS(component_count({2, {3, 2}, 3}, SurfaceType(5)), precondition_error);  // v^2 = 0

  // The count never depends on the polarization (no H in the signature), and
  // rank 3 on type 5 is rejected for gcd(3, 3) = 3 while type 1 accepts it.
  MukaiVector w{3, {4, 5}, 1};
  CHECK(component_count(w, SurfaceType(1)).count == 4);
  CHECK(component_count(w, SurfaceType(2)).count == 2);
  CHECK(component_count(w, SurfaceType(3)).count == 2);
  CHECK_THROWS_AS(component_count(w, SurfaceType(5)), precondition_error);
}

TEST_CASE("isotropic weak brill-noether criterion") {
  MukaiVector v{2, {3, 2}, 3};
  CHECK(isotropic_wbn(v, 1, SurfaceType(7)).satisfied);
  CHECK(!isotropic_wbn(v, 4, SurfaceType(1)).satisfied);
  CHECK(isotropic_wbn({1, {1, 2}, 2}, 2, SurfaceType(3)).satisfied);

  CHECK_THROWS_AS(isotropic_wbn({2, {2, 2}, 2}, 1, SurfaceType(1)), precondition_error);
  CHECK_THROWS_AS(isotropic_wbn({2, {3, 2}, 1}, 1, SurfaceType(1)), precondition_error);
  CHECK_THROWS_AS(isotropic_wbn({1, {0, 3}, 0}, 1, SurfaceType(1)), precondition_error);
}

}  // TEST_SUITE
