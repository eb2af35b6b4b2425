// Acceptance gate: one PASS/FAIL line per criterion; exit status 1 when any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "equicut/boundary.hpp"
#include "equicut/dissect.hpp"
#include "equicut/error.hpp"
#include "equicut/literal.hpp"
#include "equicut/relations.hpp"
#include "equicut/search.hpp"
#include "support/generators.hpp"
#include "support/regions.hpp"

using namespace equicut;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  // Records the first failing check.
  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

Triangle tri(const char* a, const char* b) { return Triangle(parse_number(a), parse_number(b)); }

Point pt(const char* x, const char* y) { return {parse_number(x), parse_number(y)}; }

std::vector<Triangle> reference_triangles() {
  return {tri("7/8", "3/4"), tri("1", "1"), tri("1/2*sqrt(2)", "1/2*sqrt(2)"), tri("1/2", "1/2*sqrt(3)"),
          tri("2/5*sqrt(5)", "1/5*sqrt(5)")};
}

SearchResult search(const Triangle& t, std::size_t m) { return search_dissections(SearchSpec{t, similar_tile(t, m), m}); }

bool has_kind(const VerificationReport& r, FailureKind k) {
  return std::any_of(r.failures.begin(), r.failures.end(), [k](const Failure& f) { return f.kind == k; });
}

std::vector<std::array<Point, 3>> normalized(const Dissection& d) {
  std::vector<std::array<Point, 3>> out;
  for (const PlacedTriangle& p : d.pieces) {
    std::array<Point, 3> v = p.vertices();
    std::sort(v.begin(), v.end(), lex_less);
    out.push_back(v);
  }
  std::sort(out.begin(), out.end(), [](const auto& s, const auto& t) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (!(s[i] == t[i])) return lex_less(s[i], t[i]);
    }
    return false;
  });
  return out;
}

bool same_pieces(const Dissection& d, const Dissection& e) {
  const auto s = normalized(d);
  const auto t = normalized(e);
  if (s.size() != t.size()) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (!(s[i][j] == t[i][j])) return false;
    }
  }
  return true;
}

bool contains_witness(const RelationReport& r, const std::string& text) {
  return std::any_of(r.witnesses.begin(), r.witnesses.end(),
                     [&](const Witness& w) { return to_string(w.coefficients) == text; });
}

Outcome standard_generator() {
  Outcome o;
  for (const Triangle& t : reference_triangles()) {
    const TowerReal region_area = canonical_region(t).area();
    for (std::size_t n = 1; n <= 10; ++n) {
      const Dissection d = standard_dissection(t, n);
      const std::string tag = "n = " + std::to_string(n);
      o.require(d.pieces.size() == n * n, tag + ": piece count");
      TowerReal sum;
      for (const PlacedTriangle& p : d.pieces) sum += p.area();
      o.require(sum == region_area, tag + ": area sum");
      o.require(verify_dissection(d).valid, tag + ": verifier");
      o.require(is_standard(d).standard, tag + ": is_standard");
    }
  }
  return o;
}

Outcome verifier_soundness() {
  Outcome o;
  std::mt19937_64 rng(2024);
  const auto triangles = reference_triangles();
  std::uniform_int_distribution<std::size_t> pick_triangle(0, triangles.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_order(2, 5);
  std::uniform_int_distribution<int> pick_vertex(0, 2), pick_dir(0, 3);
  const Rational eps(1, 1000);
  int made = 0;
  for (int i = 0; made < 100; ++i) {
    const Triangle& t = triangles[pick_triangle(rng)];
    const std::size_t n = pick_order(rng);
    Dissection d = standard_dissection(t, n);
    std::uniform_int_distribution<std::size_t> pick_piece(0, d.pieces.size() - 1);
    const std::size_t k = pick_piece(rng);
    FailureKind expected;
    switch (i % 3) {
      case 0: {
        std::array<Point, 3> v = d.pieces[k].vertices();
        const int dir = pick_dir(rng);
        const Point shift = dir < 2 ? Point{TowerReal(dir == 0 ? eps : -eps), TowerReal(0)}
                                    : Point{TowerReal(0), TowerReal(dir == 2 ? eps : -eps)};
        Point& target = v[static_cast<std::size_t>(pick_vertex(rng))];
        target = target + shift;
        if (orientation(v[0], v[1], v[2]) == 0) continue;
        d.pieces[k] = PlacedTriangle(v[0], v[1], v[2]);
        expected = FailureKind::CongruenceMismatch;
        break;
      }
      case 1:
        d.pieces.erase(d.pieces.begin() + static_cast<std::ptrdiff_t>(k));
        expected = FailureKind::AreaMismatch;
        break;
      default: {
        // The piece at the same lattice position of the next finer order.
        const Dissection finer = standard_dissection(t, n + 1);
        d.pieces[k] = finer.pieces[k];
        expected = FailureKind::CongruenceMismatch;
        break;
      }
    }
    ++made;
    const VerificationReport r = verify_dissection(d);
    o.require(!r.valid, "corruption " + std::to_string(made) + " accepted");
    o.require(has_kind(r, expected),
              "corruption " + std::to_string(made) + ": missing " + std::string(to_string(expected)));
  }
  return o;
}

Outcome scalene_uniqueness() {
  Outcome o;
  const Triangle t = tri("7/8", "3/4");
  const std::array<std::uint64_t, 5> nodes{3, 4, 9, 17, 23};
  std::size_t total = 0;
  std::string counts;
  for (std::size_t m = 2; m <= 6; ++m) {
    const SearchResult r = search(t, m);
    total += r.dissections.size();
    counts += (counts.empty() ? "" : ",") + std::to_string(r.nodes);
    o.require(r.complete, "m = " + std::to_string(m) + " incomplete");
    o.require(r.nodes == nodes[m - 2], "m = " + std::to_string(m) + " node count " + std::to_string(r.nodes));
    if (m == 4) {
      o.require(r.dissections.size() == 1 && is_standard(r.dissections[0]).standard, "m = 4 is not the standard one");
    }
  }
  o.require(total == 1, "total " + std::to_string(total));
  if (o.pass) o.detail = "nodes " + counts;
  return o;
}

Outcome two_pieces() {
  Outcome o;
  const SearchResult iso = search(tri("1/2*sqrt(2)", "1/2*sqrt(2)"), 2);
  const SearchResult sca = search(tri("7/8", "3/4"), 2);
  o.require(iso.complete && iso.dissections.size() == 1, "right isosceles count");
  o.require(sca.complete && sca.dissections.empty(), "scalene count");
  return o;
}

Outcome three_pieces() {
  Outcome o;
  const std::array<TowerReal, 3> center{parse_number("1/3*sqrt(3)"), parse_number("1/3*sqrt(3)"), TowerReal(1)};
  const auto eq = search_for_count(tri("1", "1"), 3, {center});
  std::size_t eq_found = 0;
  for (const TileSearch& ts : eq) {
    if (!ts.skipped) eq_found += ts.result.dissections.size();
  }
  o.require(eq_found >= 1, "equilateral with center tile");
  const SearchResult half = search(tri("1/2", "1/2*sqrt(3)"), 3);
  o.require(half.dissections.size() >= 1, "30-60-90");
  const SearchResult sca = search(tri("7/8", "3/4"), 3);
  o.require(sca.complete && sca.dissections.empty(), "scalene");
  return o;
}

Outcome four_pieces() {
  Outcome o;
  const SearchResult r = search(tri("1/2*sqrt(2)", "1/2*sqrt(2)"), 4);
  std::size_t valid = 0, non_standard = 0;
  for (const Dissection& d : r.dissections) {
    valid += verify_dissection(d).valid;
    non_standard += !is_standard(d).standard;
  }
  o.require(valid >= 2, "valid count " + std::to_string(valid));
  o.require(non_standard >= 1, "no non-standard dissection");
  return o;
}

Outcome five_pieces() {
  Outcome o;
  const Triangle t = tri("2/5*sqrt(5)", "1/5*sqrt(5)");
  Dissection oracle{t.exact_sides(), canonical_region(t), {}, similar_tile(t, 5)};
  std::sort(oracle.tile.begin(), oracle.tile.end());
  const std::vector<std::array<Point, 3>> pieces{
      {pt("0", "0"), pt("1/5", "0"), pt("1/5", "2/5")},
      {pt("1/5", "0"), pt("3/5", "0"), pt("1/5", "1/5")},
      {pt("3/5", "0"), pt("1", "0"), pt("3/5", "1/5")},
      {pt("1/5", "1/5"), pt("3/5", "1/5"), pt("1/5", "2/5")},
      {pt("3/5", "0"), pt("3/5", "1/5"), pt("1/5", "1/5")}};
  for (const auto& p : pieces) oracle.pieces.emplace_back(p[0], p[1], p[2]);
  o.require(verify_dissection(oracle).valid, "oracle rejected by the verifier");
  const SearchResult r = search(t, 5);
  o.require(r.dissections.size() >= 1, "search found nothing");
  o.require(std::any_of(r.dissections.begin(), r.dissections.end(),
                        [&](const Dissection& d) { return same_pieces(d, oracle); }),
            "oracle not rediscovered");
  if (o.pass) o.detail = std::to_string(r.dissections.size()) + " found";
  return o;
}

void check_loop(Outcome& o, const BoundaryLoop& loop, const std::string& tag) {
  for (int s : loop.steps) o.require(s == -2 || s == -1 || s == 1 || s == 2, tag + ": step " + std::to_string(s));
  o.require(clock_turning(loop) == 6, tag + ": turning");
  o.require(find_lemma_pattern(loop).has_value(), tag + ": no pattern");
}

Outcome boundary_suite() {
  Outcome o;
  std::size_t small = 0;
  for (const LatticeRegion& r : testing::all_small_regions(4, 6)) {
    if (!is_simply_connected(r)) continue;
    ++small;
    check_loop(o, extract_boundary(r)[0], "small region " + format_region(r));
  }
  std::mt19937_64 rng(77);
  for (int k = 0; k < 200; ++k) {
    const int n = 6 + k % 5;
    const std::size_t size = 7 + static_cast<std::size_t>(k % 30);
    const LatticeRegion r = testing::random_simply_connected_region(rng, n, size);
    const auto loops = extract_boundary(r);
    o.require(loops.size() == 1, "random region has " + std::to_string(loops.size()) + " loops");
    check_loop(o, loops[0], "random region " + std::to_string(k));
  }
  if (o.pass) o.detail = std::to_string(small) + " small + 200 random regions";
  return o;
}

// Independent recheck: every coefficient triple in the box excludes zero at
// 256 bits.
bool angles_certified_none(const Triangle& t, int h) {
  const TriangleAngles a = angles_from_sides(t);
  const Interval x = a.alpha.enclose(256), y = a.beta.enclose(256), z = a.gamma.enclose(256);
  for (int p = -h; p <= h; ++p) {
    for (int q = -h; q <= h; ++q) {
      const Interval s = x.scaled(p) + y.scaled(q);
      for (int r = -h; r <= h; ++r) {
        if (p == 0 && q == 0 && r == 0) continue;
        if ((s + z.scaled(r)).contains_zero()) return false;
      }
    }
  }
  return true;
}

bool sides_certified_none(const Triangle& t, int h, const std::vector<long>& basis) {
  std::vector<Interval> roots;
  for (long d : basis) roots.push_back(Interval(Rational(d), 256).sqrt());
  std::vector<Interval> coeffs{Interval(Rational(0), 256)};
  for (const Interval& root : roots) {
    for (int n = -h; n <= h; ++n) {
      if (n != 0) coeffs.push_back(root.scaled(n));
    }
  }
  const Interval a = t.a().enclose(256), b = t.b().enclose(256);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (i == 0 && j == 0) continue;
      const Interval s = coeffs[i] * a + coeffs[j] * b;
      for (const Interval& c : coeffs) {
        if ((s + c).contains_zero()) return false;
      }
    }
  }
  return true;
}

Outcome relation_finder() {
  Outcome o;
  o.require(contains_witness(angle_relation_report(tri("1", "1"), 1), "(1, -1, 0)"), "equilateral at H = 1");
  o.require(contains_witness(angle_relation_report(tri("1/2", "1/2*sqrt(3)"), 2), "(2, -1, 0)"), "30-60-90 at H = 2");

  const std::vector<long> basis{1, 2, 3, 5};
  int none1 = 0, none2 = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Triangle t = sample_triangle(seed, SampleMode::UniformM);
    const RelationReport r1 = angle_relation_report(t, 12);
    const RelationReport r2 = side_relation_report(t, 8, basis);
    const std::string tag = "seed " + std::to_string(seed);
    if (r1.status == RelationStatus::NoneUpToHeight) {
      ++none1;
      o.require(r1.undecided.empty() && r1.witnesses.empty(), tag + ": angle report inconsistent");
      o.require(angles_certified_none(t, 12), tag + ": angle recheck found an enclosure containing zero");
    }
    if (r2.status == RelationStatus::NoneUpToHeight) {
      ++none2;
      o.require(r2.undecided.empty() && r2.witnesses.empty(), tag + ": side report inconsistent");
      if (seed <= 5) o.require(sides_certified_none(t, 8, basis), tag + ": side recheck found zero");
    }
  }
  o.require(none1 >= 99, "angles: " + std::to_string(none1) + "/100");
  o.require(none2 >= 99, "sides: " + std::to_string(none2) + "/100");
  if (o.pass) o.detail = "angles " + std::to_string(none1) + "/100, sides " + std::to_string(none2) + "/100";
  return o;
}

Outcome exact_kernel() {
  Outcome o;
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 1000; ++i) {
    const KElement x = testing::random_kelement(rng), y = testing::random_kelement(rng),
                   z = testing::random_kelement(rng);
    o.require((x + y) + z == x + (y + z) && (x * y) * z == x * (y * z), "KElement associativity");
    o.require(x + y == y + x && x * y == y * x, "KElement commutativity");
    o.require(x * (y + z) == x * y + x * z, "KElement distributivity");
    o.require(x - x == KElement() && (x.is_zero() || x * x.inverse() == KElement(1)), "KElement inverses");
  }
  const testing::TowerPool pool;
  for (int i = 0; i < 500; ++i) {
    const TowerReal x = testing::random_tower_real(rng, pool), y = testing::random_tower_real(rng, pool),
                    z = testing::random_tower_real(rng, pool);
    o.require((x + y) + z == x + (y + z) && (x * y) * z == x * (y * z), "TowerReal associativity");
    o.require(x + y == y + x && x * y == y * x, "TowerReal commutativity");
    o.require(x * (y + z) == x * y + x * z, "TowerReal distributivity");
    o.require((x - x).is_zero() && (x.is_zero() || x * x.inverse() == TowerReal(1)), "TowerReal inverses");
  }
  for (int i = 0; i < 500; ++i) {
    const std::string text = testing::random_literal(rng);
    const TowerReal x = parse_number(text);
    const std::string canon = format_number(x);
    const TowerReal y = parse_number(canon);
    o.require(x == y && format_number(y) == canon, "literal round trip: " + text);
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
  double budget_seconds;  // 0: none
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "standard generator, 5 triangles x n = 1..10", standard_generator, 10.0},
      {2, "verifier rejects 100 corruptions by category", verifier_soundness, 0},
      {3, "scalene m = 2..6 yields only the standard m = 4 dissection", scalene_uniqueness, 300.0},
      {4, "m = 2: right isosceles 1, scalene 0", two_pieces, 0},
      {5, "m = 3: equilateral with center tile, 30-60-90, scalene 0", three_pieces, 0},
      {6, "m = 4 right isosceles: >= 2 valid, one non-standard", four_pieces, 0},
      {7, "legs 1, 2 into five: oracle valid and rediscovered", five_pieces, 0},
      {8, "boundary turning and lemma pattern on lattice regions", boundary_suite, 0},
      {9, "relation finder instances and sampled triangles", relation_finder, 0},
      {10, "exact kernel field axioms and literal round trip", exact_kernel, 0},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
      o.require(false, "over the time budget");
      if (o.detail.empty()) o.detail = "over the time budget";
    }
    failed += !o.pass;
    std::printf("%s %2d %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, seconds,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
