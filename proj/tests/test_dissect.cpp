#include <algorithm>
#include <random>

#include "doctest.h"
#include "equicut/dissect.hpp"
#include "equicut/error.hpp"
#include "equicut/io.hpp"
#include "equicut/literal.hpp"

using namespace equicut;

namespace {

Point pt(const Rational& x, const Rational& y) { return {TowerReal(x), TowerReal(y)}; }

std::vector<Triangle> reference_triangles() {
  return {
      Triangle(TowerReal(Rational(7, 8)), TowerReal(Rational(3, 4))),
      Triangle(TowerReal(1), TowerReal(1)),
      Triangle(parse_number("1/2*sqrt(2)"), parse_number("1/2*sqrt(2)")),
      Triangle(TowerReal(Rational(1, 2)), parse_number("1/2*sqrt(3)")),
      Triangle(parse_number("2/5*sqrt(5)"), parse_number("1/5*sqrt(5)")),
  };
}

// A lattice cell is upward when it is a translate of the scaled region:
// some vertex p has p + e1 and p + e2 among the vertices.
bool is_upward(const PlacedTriangle& t, const Point& e1, const Point& e2) {
  for (const Point& p : t.vertices()) {
    bool has1 = false, has2 = false;
    for (const Point& q : t.vertices()) {
      has1 = has1 || q == p + e1;
      has2 = has2 || q == p + e2;
    }
    if (has1 && has2) return true;
  }
  return false;
}

// Altitude cut of the right isosceles triangle, then each half cut along its
// own altitude.
Dissection altitude_dissection() {
  const Triangle t(parse_number("1/2*sqrt(2)"), parse_number("1/2*sqrt(2)"));
  Dissection d = standard_dissection(t, 2);
  const Point a = pt(0, 0), b = pt(1, 0), c = pt(Rational(1, 2), Rational(1, 2)), m = pt(Rational(1, 2), 0);
  const Point f1 = pt(Rational(1, 4), Rational(1, 4)), f2 = pt(Rational(3, 4), Rational(1, 4));
  d.pieces = {PlacedTriangle(a, m, f1), PlacedTriangle(m, c, f1), PlacedTriangle(m, b, f2), PlacedTriangle(m, f2, c)};
  return d;
}

}  // namespace

TEST_CASE("standard dissection counts and areas") {
  for (const Triangle& t : reference_triangles()) {
    for (std::size_t n = 1; n <= 6; ++n) {
      const Dissection d = standard_dissection(t, n);
      REQUIRE(d.pieces.size() == n * n);
      const Point e1 = (d.region[1] - d.region[0]).scaled(TowerReal(Rational(1, static_cast<long>(n))));
      const Point e2 = (d.region[2] - d.region[0]).scaled(TowerReal(Rational(1, static_cast<long>(n))));
      const auto up = std::count_if(d.pieces.begin(), d.pieces.end(),
                                    [&](const PlacedTriangle& p) { return is_upward(p, e1, e2); });
      REQUIRE(static_cast<std::size_t>(up) == n * (n + 1) / 2);
      const VerificationReport r = verify_dissection(d);
      REQUIRE(r.valid);
      REQUIRE(is_standard(d).standard);
      // Piece side to region side, squared, is 1/n^2.
      REQUIRE(d.pieces[0].sorted_squared_sides()[2] * TowerReal(static_cast<long>(n * n)) ==
              d.region.sorted_squared_sides()[2]);
    }
  }
  CHECK_THROWS_AS(standard_dissection(reference_triangles()[0], 0), Error);
}

TEST_CASE("n = 1 is the region itself") {
  const Triangle t = reference_triangles()[0];
  const Dissection d = standard_dissection(t, 1);
  REQUIRE(d.pieces.size() == 1);
  CHECK(d.pieces[0].vertices() == d.region.vertices());
}

TEST_CASE("equilateral n = 2") {
  const Dissection d = standard_dissection(Triangle(TowerReal(1), TowerReal(1)), 2);
  const Point e1 = (d.region[1] - d.region[0]).scaled(TowerReal(Rational(1, 2)));
  const Point e2 = (d.region[2] - d.region[0]).scaled(TowerReal(Rational(1, 2)));
  int up = 0;
  for (const auto& p : d.pieces) up += is_upward(p, e1, e2);
  CHECK(up == 3);
  CHECK(d.pieces.size() - up == 1);
}

TEST_CASE("scalene n = 3 area matches Heron") {
  const Triangle t(TowerReal(Rational(7, 8)), TowerReal(Rational(3, 4)));
  const Dissection d = standard_dissection(t, 3);
  CHECK(d.pieces.size() == 9);
  TowerReal total;
  for (const auto& p : d.pieces) total += p.area();
  // Heron: 16 area^2 = (a+b+c)(-a+b+c)(a-b+c)(a+b-c).
  const Rational a(7, 8), b(3, 4), c(1);
  const Rational heron16 = (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c);
  CHECK(total * total * TowerReal(16) == TowerReal(heron16));
}

TEST_CASE("verifier rejects perturbations") {
  const Triangle t(TowerReal(Rational(7, 8)), TowerReal(Rational(3, 4)));
  const Dissection base = standard_dissection(t, 4);

  SUBCASE("translated piece") {
    Dissection d = base;
    const Point shift = pt(Rational(1, 1000), 0);
    const PlacedTriangle& p = d.pieces[5];
    d.pieces[5] = PlacedTriangle(p[0] + shift, p[1] + shift, p[2] + shift);
    const VerificationReport r = verify_dissection(d);
    CHECK_FALSE(r.valid);
    CHECK(std::any_of(r.failures.begin(), r.failures.end(),
                      [](const Failure& f) { return f.kind == FailureKind::PieceOverlap; }));
  }
  SUBCASE("deleted piece") {
    Dissection d = base;
    d.pieces.erase(d.pieces.begin() + 3);
    const VerificationReport r = verify_dissection(d);
    CHECK_FALSE(r.valid);
    REQUIRE(r.failures.size() == 1);
    CHECK(r.failures[0].kind == FailureKind::AreaMismatch);
  }
  SUBCASE("single vertex shifts") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<std::size_t> piece(0, base.pieces.size() - 1);
    std::uniform_int_distribution<int> vertex(0, 2), dir(0, 3);
    for (int i = 0; i < 100; ++i) {
      Dissection d = base;
      const std::size_t k = piece(rng);
      std::array<Point, 3> v = d.pieces[k].vertices();
      const Rational eps(1, 1000);
      const int dd = dir(rng);
      Point& target = v[static_cast<std::size_t>(vertex(rng))];
      target = target + (dd < 2 ? pt(dd == 0 ? eps : -eps, 0) : pt(0, dd == 2 ? eps : -eps));
      if (orientation(v[0], v[1], v[2]) == 0) continue;
      d.pieces[k] = PlacedTriangle(v[0], v[1], v[2]);
      REQUIRE_FALSE(verify_dissection(d).valid);
    }
  }
}

TEST_CASE("direct-only congruence") {
  // Isosceles pieces coincide with their mirror images.
  const Dissection alt = altitude_dissection();
  CHECK(verify_dissection(alt, {true}).valid);
  // The lattice uses translations and half-turns only.
  const Triangle scalene(TowerReal(Rational(7, 8)), TowerReal(Rational(3, 4)));
  CHECK(verify_dissection(standard_dissection(scalene, 3), {true}).valid);
}

TEST_CASE("is_standard") {
  const Triangle t(TowerReal(Rational(7, 8)), TowerReal(Rational(3, 4)));
  Dissection d = standard_dissection(t, 5);
  CHECK(is_standard(d).standard);
  std::mt19937_64 rng(13);
  std::shuffle(d.pieces.begin(), d.pieces.end(), rng);
  CHECK(is_standard(d).standard);

  const Dissection alt = altitude_dissection();
  CHECK(verify_dissection(alt).valid);
  CHECK_FALSE(is_standard(alt).standard);

  Dissection five = standard_dissection(t, 2);
  five.pieces.push_back(five.pieces[0]);
  const StandardCheck c = is_standard(five);
  CHECK_FALSE(c.standard);
  CHECK(c.reason.find("perfect square") != std::string::npos);
}

TEST_CASE("json round trip and svg") {
  const Triangle t(parse_number("1/2*sqrt(2)"), parse_number("1/2*sqrt(2)"));
  for (std::size_t n : {1, 3}) {
    const Dissection d = standard_dissection(t, n);
    const std::string json = dissection_to_json(d);
    const Dissection back = dissection_from_json(json);
    CHECK(verify_dissection(back).valid);
    CHECK(dissection_to_json(back) == json);
    const std::string svg = dissection_to_svg(d);
    std::size_t polygons = 0;
    for (std::size_t pos = svg.find("<polygon"); pos != std::string::npos; pos = svg.find("<polygon", pos + 1)) {
      ++polygons;
    }
    CHECK(polygons == n * n + 1);
  }
  const std::string alt = dissection_to_json(altitude_dissection());
  CHECK(dissection_to_json(dissection_from_json(alt)) == alt);

  CHECK_THROWS_AS(dissection_from_json("{"), Error);
  CHECK_THROWS_AS(dissection_from_json(R"J({"region": {"sides": ["1", "1", "2"]}, "declaredTile": {"sides": ["1","1","1"]}, "pieces": []})J"),
                  Error);
  CHECK_THROWS_AS(dissection_from_json(R"J({"region": {"sides": ["1", "1", "1"]}, "declaredTile": {"sides": ["1","1","sqrt(-1)"]}, "pieces": []})J"),
                  Error);
}
