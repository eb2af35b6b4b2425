#include <algorithm>

#include "doctest.h"
#include "equicut/error.hpp"
#include "equicut/literal.hpp"
#include "equicut/search.hpp"

using namespace equicut;

namespace {

Triangle tri(const char* a, const char* b) { return Triangle(parse_number(a), parse_number(b)); }

Point pt(const char* x, const char* y) { return {parse_number(x), parse_number(y)}; }

using Triple = std::array<Point, 3>;

std::vector<Triple> normalized(const std::vector<PlacedTriangle>& pieces) {
  std::vector<Triple> out;
  for (const PlacedTriangle& p : pieces) {
    Triple t = p.vertices();
    std::sort(t.begin(), t.end(), lex_less);
    out.push_back(t);
  }
  std::sort(out.begin(), out.end(), [](const Triple& s, const Triple& t) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (!(s[i] == t[i])) return lex_less(s[i], t[i]);
    }
    return false;
  });
  return out;
}

bool same_pieces(const Dissection& d, const Dissection& e) {
  const auto s = normalized(d.pieces);
  const auto t = normalized(e.pieces);
  if (s.size() != t.size()) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (!(s[i][j] == t[i][j])) return false;
    }
  }
  return true;
}

bool contains(const SearchResult& r, const Dissection& d) {
  return std::any_of(r.dissections.begin(), r.dissections.end(), [&](const Dissection& e) { return same_pieces(d, e); });
}

SearchResult search(const Triangle& t, std::size_t m) { return search_dissections(SearchSpec{t, similar_tile(t, m), m}); }

std::vector<Triangle> reference_triangles() {
  return {tri("7/8", "3/4"), tri("1", "1"), tri("1/2*sqrt(2)", "1/2*sqrt(2)"), tri("1/2", "1/2*sqrt(3)"),
          tri("2/5*sqrt(5)", "1/5*sqrt(5)")};
}

Dissection make(const Triangle& t, const std::array<TowerReal, 3>& tile, const std::vector<Triple>& pieces) {
  Dissection d{t.exact_sides(), canonical_region(t), {}, tile};
  for (const Triple& p : pieces) d.pieces.emplace_back(p[0], p[1], p[2]);
  return d;
}

}  // namespace

TEST_CASE("scalene region admits only the standard dissection for m = 2..6") {
  const Triangle t = tri("7/8", "3/4");
  const std::array<std::uint64_t, 5> nodes{3, 4, 9, 17, 23};
  for (std::size_t m = 2; m <= 6; ++m) {
    const SearchResult r = search(t, m);
    CHECK(r.complete);
    CHECK(r.nodes == nodes[m - 2]);
    if (m == 4) {
      REQUIRE(r.dissections.size() == 1);
      CHECK(is_standard(r.dissections[0]).standard);
    } else {
      CHECK(r.dissections.empty());
    }
  }
}

TEST_CASE("right isosceles into two: the altitude cut") {
  const Triangle t = tri("1/2*sqrt(2)", "1/2*sqrt(2)");
  const auto tile = similar_tile(t, 2);
  // A two-piece dissection is a cevian; equal areas put its foot at the
  // midpoint of the opposite side. Check the three cevians by hand.
  const PlacedTriangle region = canonical_region(t);
  const auto& v = region.vertices();
  std::vector<Dissection> oracle;
  for (std::size_t k = 0; k < 3; ++k) {
    const Point& apex = v[k];
    const Point& p = v[(k + 1) % 3];
    const Point& q = v[(k + 2) % 3];
    const Point mid = (p + q).scaled(TowerReal(Rational(1, 2)));
    const Dissection d = make(t, tile, {Triple{apex, p, mid}, Triple{apex, mid, q}});
    if (verify_dissection(d).valid) oracle.push_back(d);
  }
  REQUIRE(oracle.size() == 1);
  const SearchResult r = search(t, 2);
  CHECK(r.complete);
  REQUIRE(r.dissections.size() == 1);
  CHECK(same_pieces(r.dissections[0], oracle[0]));
  CHECK_FALSE(is_standard(r.dissections[0]).standard);
}

TEST_CASE("equilateral into three center pieces") {
  const Triangle t = tri("1", "1");
  const std::array<TowerReal, 3> tile{parse_number("1/3*sqrt(3)"), parse_number("1/3*sqrt(3)"), TowerReal(1)};
  const Point a = pt("0", "0"), b = pt("1", "0"), c = pt("1/2", "1/2*sqrt(3)"), o = pt("1/2", "1/6*sqrt(3)");
  const Dissection oracle = make(t, tile, {Triple{a, b, o}, Triple{b, c, o}, Triple{c, a, o}});
  REQUIRE(verify_dissection(oracle).valid);

  const auto runs = search_for_count(t, 3, {tile});
  REQUIRE(runs.size() == 2);
  CHECK(runs[0].label == "similar");
  CHECK(runs[0].result.dissections.empty());
  CHECK(runs[1].label == "extra 1");
  CHECK_FALSE(runs[1].skipped);
  CHECK(runs[1].result.complete);
  CHECK(contains(runs[1].result, oracle));
}

TEST_CASE("30-60-90 into three similar pieces") {
  const SearchResult r = search(tri("1/2", "1/2*sqrt(3)"), 3);
  CHECK(r.complete);
  CHECK(r.dissections.size() == 1);
}

TEST_CASE("right isosceles into four: standard and altitude twice") {
  const Triangle t = tri("1/2*sqrt(2)", "1/2*sqrt(2)");
  const SearchResult r = search(t, 4);
  CHECK(r.complete);
  REQUIRE(r.dissections.size() == 2);
  const auto standard = std::count_if(r.dissections.begin(), r.dissections.end(),
                                      [](const Dissection& d) { return is_standard(d).standard; });
  CHECK(standard == 1);
  const Point a = pt("0", "0"), b = pt("1", "0"), c = pt("1/2", "1/2"), m = pt("1/2", "0");
  const Point p = pt("1/4", "1/4"), q = pt("3/4", "1/4");
  const Dissection altitude =
      make(t, similar_tile(t, 4), {Triple{a, m, p}, Triple{m, c, p}, Triple{m, b, q}, Triple{m, q, c}});
  REQUIRE(verify_dissection(altitude).valid);
  CHECK(contains(r, altitude));
}

TEST_CASE("legs 1 and 2 into five") {
  const Triangle t = tri("2/5*sqrt(5)", "1/5*sqrt(5)");
  const Dissection oracle = make(t, similar_tile(t, 5),
                                 {Triple{pt("0", "0"), pt("1/5", "0"), pt("1/5", "2/5")},
                                  Triple{pt("1/5", "0"), pt("3/5", "0"), pt("1/5", "1/5")},
                                  Triple{pt("3/5", "0"), pt("1", "0"), pt("3/5", "1/5")},
                                  Triple{pt("1/5", "1/5"), pt("3/5", "1/5"), pt("1/5", "2/5")},
                                  Triple{pt("3/5", "0"), pt("3/5", "1/5"), pt("1/5", "1/5")}});
  REQUIRE(verify_dissection(oracle).valid);
  const SearchResult r = search(t, 5);
  CHECK(r.complete);
  CHECK(r.dissections.size() >= 1);
  CHECK(contains(r, oracle));
}

TEST_CASE("standard dissection is always found for n = 1, 2, 3") {
  for (const Triangle& t : reference_triangles()) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto runs = search_for_count(t, n * n);
      REQUIRE(runs.size() == 1);
      CHECK(runs[0].result.complete);
      CHECK(contains(runs[0].result, standard_dissection(t, n)));
      for (const Dissection& d : runs[0].result.dissections) CHECK(verify_dissection(d).valid);
    }
  }
}

TEST_CASE("determinism across runs and worker counts") {
  for (const auto& [t, m] : {std::pair{tri("1/2*sqrt(2)", "1/2*sqrt(2)"), std::size_t{8}},
                             std::pair{tri("2/5*sqrt(5)", "1/5*sqrt(5)"), std::size_t{5}}}) {
    SearchSpec spec{t, similar_tile(t, m), m};
    const SearchResult base = search_dissections(spec);
    for (unsigned workers : {1u, 2u, 4u}) {
      spec.workers = workers;
      const SearchResult r = search_dissections(spec);
      CHECK(r.nodes == base.nodes);
      CHECK(r.candidates == base.candidates);
      REQUIRE(r.dissections.size() == base.dissections.size());
      for (std::size_t k = 0; k < r.dissections.size(); ++k) {
        CHECK(normalized(r.dissections[k].pieces).size() == normalized(base.dissections[k].pieces).size());
        CHECK(same_pieces(r.dissections[k], base.dissections[k]));
      }
    }
  }
}

TEST_CASE("disabling a prune never removes results") {
  for (const Triangle& t : reference_triangles()) {
    for (std::size_t m = 2; m <= 4; ++m) {
      SearchSpec spec{t, similar_tile(t, m), m};
      const SearchResult base = search_dissections(spec);
      for (int rule = 0; rule < 3; ++rule) {
        SearchSpec loose = spec;
        loose.prunes.angle_fit = rule != 0;
        loose.prunes.remainder = rule != 1;
        loose.prunes.overshoot = rule != 2;
        const SearchResult r = search_dissections(loose);
        CHECK(r.candidates >= base.candidates);
        CHECK(r.nodes >= base.nodes);
        REQUIRE(r.dissections.size() == base.dissections.size());
        for (std::size_t k = 0; k < r.dissections.size(); ++k) CHECK(same_pieces(r.dissections[k], base.dissections[k]));
      }
    }
  }
}

TEST_CASE("symmetry quotient") {
  const Triangle t = tri("1/2*sqrt(2)", "1/2*sqrt(2)");
  SearchSpec spec{t, similar_tile(t, 8), 8};
  const SearchResult raw = search_dissections(spec);
  spec.symmetry_quotient = true;
  const SearchResult quotient = search_dissections(spec);
  // Altitude first, then each half cut standard or by its altitude; the two
  // mixed choices are mirror images.
  CHECK(raw.dissections.size() == 4);
  CHECK(quotient.dissections.size() == 3);
  for (const Dissection& d : quotient.dissections) CHECK(contains(raw, d));
}

TEST_CASE("reflections off") {
  // Every tile with a mirror-symmetric shape is unaffected.
  const Triangle t = tri("1/2*sqrt(2)", "1/2*sqrt(2)");
  SearchSpec spec{t, similar_tile(t, 4), 4};
  spec.allow_reflections = false;
  CHECK(search_dissections(spec).dissections.size() == 2);
  // The scalene standard dissection uses direct copies only; the mirror-image
  // tile has none.
  const Triangle s = tri("7/8", "3/4");
  SearchSpec direct{s, similar_tile(s, 4), 4};
  direct.allow_reflections = false;
  const SearchResult found = search_dissections(direct);
  REQUIRE(found.dissections.size() == 1);
  CHECK(is_standard(found.dissections[0]).standard);
  std::swap(direct.tile[1], direct.tile[2]);
  CHECK(search_dissections(direct).dissections.empty());
  direct.allow_reflections = true;
  CHECK(search_dissections(direct).dissections.size() == 1);
}

TEST_CASE("limits") {
  const Triangle t = tri("1/2*sqrt(2)", "1/2*sqrt(2)");
  SearchSpec spec{t, similar_tile(t, 8), 8};
  spec.limits.max_nodes = 5;
  const SearchResult few = search_dissections(spec);
  CHECK_FALSE(few.complete);
  CHECK(few.nodes <= 6);

  spec.limits = {};
  spec.limits.max_results = 1;
  const SearchResult one = search_dissections(spec);
  CHECK_FALSE(one.complete);
  CHECK(one.dissections.size() == 1);
}

TEST_CASE("area mismatch and invalid input") {
  const Triangle t = tri("7/8", "3/4");
  const SearchResult r = search_dissections(SearchSpec{t, similar_tile(t, 3), 4});
  CHECK(r.area_mismatch);
  CHECK(r.dissections.empty());

  const auto runs = search_for_count(t, 4, {{TowerReal(1), TowerReal(1), TowerReal(1)},
                                            {TowerReal(1), TowerReal(1), TowerReal(3)}});
  REQUIRE(runs.size() == 3);
  CHECK(runs[1].skipped);
  CHECK_FALSE(runs[1].notice.empty());
  CHECK(runs[2].skipped);

  CHECK_THROWS_AS(search_dissections(SearchSpec{t, similar_tile(t, 4), 0}), Error);
  CHECK_THROWS_AS(search_dissections(SearchSpec{sample_triangle(1, SampleMode::UniformM), similar_tile(t, 4), 4}),
                  Error);
}
