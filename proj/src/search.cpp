#include "equicut/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>

#include "equicut/error.hpp"

namespace equicut {

namespace {

using Clock = std::chrono::steady_clock;

struct PointLess {
  bool operator()(const Point& p, const Point& q) const { return lex_less(p, q); }
};

// Directed frontier edge with the uncovered region on its left.
struct FEdge {
  Point a;
  Point b;
  Point unit;
};

struct Box {
  double x0, y0, x1, y1;
};

struct Piece {
  PlacedTriangle tri;
  // Counterclockwise edges.
  std::array<FEdge, 3> edges;
  Box box;
};

// A convex or reflex frontier corner.
struct Corner {
  Point at;
  Turn angle;
  Point out_unit;
  TowerReal out_length_sq;
  bool next_convex = false;
};

TowerReal heron16(const std::array<TowerReal, 3>& s) {
  const TowerReal x = s[0] * s[0], y = s[1] * s[1], z = s[2] * s[2];
  return 2 * (x * y + y * z + z * x) - (x * x + y * y + z * z);
}

std::array<TowerReal, 3> sorted(std::array<TowerReal, 3> s) {
  std::sort(s.begin(), s.end(), [](const TowerReal& p, const TowerReal& q) { return compare(p, q) < 0; });
  return s;
}

Box box_of(const PlacedTriangle& t) {
  Box b{HUGE_VAL, HUGE_VAL, -HUGE_VAL, -HUGE_VAL};
  for (const Point& p : t.vertices()) {
    const Interval x = p.x.enclose(64), y = p.y.enclose(64);
    b.x0 = std::min(b.x0, x.lower());
    b.y0 = std::min(b.y0, y.lower());
    b.x1 = std::max(b.x1, x.upper());
    b.y1 = std::max(b.y1, y.upper());
  }
  return b;
}

bool boxes_meet(const Box& s, const Box& t) { return s.x0 < t.x1 && t.x0 < s.x1 && s.y0 < t.y1 && t.y0 < s.y1; }

// Sum of two angles below 2pi, as a turn.
Turn add(const Turn& s, const Turn& t) { return {s.dot * t.dot - s.cross * t.cross, s.dot * t.cross + s.cross * t.dot}; }

bool same_direction(const Point& u, const Point& v) { return u == v; }

using PieceKey = std::array<Point, 3>;
using DissectionKey = std::vector<PieceKey>;

PieceKey piece_key(const PlacedTriangle& t) {
  PieceKey k = t.vertices();
  std::sort(k.begin(), k.end(), lex_less);
  return k;
}

int compare_keys(const PieceKey& s, const PieceKey& t) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (const int c = compare(s[i], t[i]); c != 0) return c;
  }
  return 0;
}

bool key_less(const DissectionKey& s, const DissectionKey& t) {
  for (std::size_t i = 0; i < std::min(s.size(), t.size()); ++i) {
    if (const int c = compare_keys(s[i], t[i]); c != 0) return c < 0;
  }
  return s.size() < t.size();
}

DissectionKey dissection_key(const std::vector<PlacedTriangle>& pieces) {
  DissectionKey k;
  for (const PlacedTriangle& p : pieces) k.push_back(piece_key(p));
  std::sort(k.begin(), k.end(), [](const PieceKey& s, const PieceKey& t) { return compare_keys(s, t) < 0; });
  return k;
}

// Tile with counterclockwise edge lengths s[0], s[1], s[2], edge 0 on the
// positive x-axis.
struct Prototype {
  std::array<Point, 3> v;
  // Edge k runs v[k] -> v[k+1].
  std::array<Point, 3> unit;
  std::array<TowerReal, 3> length_sq;
  std::array<Turn, 3> angle;
  Turn min_angle;
};

Prototype make_prototype(const std::array<TowerReal, 3>& s) {
  const TowerReal x = (s[0] * s[0] + s[2] * s[2] - s[1] * s[1]) / (2 * s[0]);
  const TowerReal y = sqrt_adjoin(s[2] * s[2] - x * x);
  Prototype p;
  p.v = {Point{TowerReal(0), TowerReal(0)}, Point{s[0], TowerReal(0)}, Point{x, y}};
  for (std::size_t k = 0; k < 3; ++k) {
    const Point d = p.v[(k + 1) % 3] - p.v[k];
    p.unit[k] = d.scaled(s[k].inverse());
    p.length_sq[k] = s[k] * s[k];
  }
  for (std::size_t k = 0; k < 3; ++k) p.angle[k] = turn(p.v[(k + 1) % 3] - p.v[k], p.v[(k + 2) % 3] - p.v[k]);
  p.min_angle = p.angle[0];
  for (const Turn& a : p.angle) {
    if (compare(a, p.min_angle) < 0) p.min_angle = a;
  }
  return p;
}

// Removes a piece from the uncovered region: overlapping same-direction edges
// cancel, the rest of the piece boundary enters reversed.
void subtract(std::vector<FEdge>& frontier, const Piece& piece) {
  for (const FEdge& pe : piece.edges) {
    const Point& p = pe.a;
    const Point& w = pe.unit;
    const TowerReal length = dot(pe.b - p, w);
    std::vector<std::pair<TowerReal, TowerReal>> rest{{TowerReal(0), length}};
    std::vector<FEdge> next;
    next.reserve(frontier.size() + 2);
    for (FEdge& fe : frontier) {
      if (!same_direction(fe.unit, w) || cross(w, fe.a - p).sign() != 0) {
        next.push_back(std::move(fe));
        continue;
      }
      const TowerReal sa = dot(fe.a - p, w);
      const TowerReal sb = dot(fe.b - p, w);
      const TowerReal lo = std::max(sa, TowerReal(0));
      const TowerReal hi = std::min(sb, length);
      if (lo >= hi) {
        next.push_back(std::move(fe));
        continue;
      }
      if (sa < lo) next.push_back({fe.a, p + w.scaled(lo), w});
      if (hi < sb) next.push_back({p + w.scaled(hi), fe.b, w});
      std::vector<std::pair<TowerReal, TowerReal>> left;
      for (auto& [r0, r1] : rest) {
        if (r1 <= lo || r0 >= hi) {
          left.emplace_back(r0, r1);
          continue;
        }
        if (r0 < lo) left.emplace_back(r0, lo);
        if (hi < r1) left.emplace_back(hi, r1);
      }
      rest = std::move(left);
    }
    for (const auto& [r0, r1] : rest) next.push_back({p + w.scaled(r1), p + w.scaled(r0), -w});
    frontier = std::move(next);
  }
}

// Corners of every frontier loop. At a pinch vertex the walk takes the first
// outgoing edge clockwise from the reversed incoming edge.
std::vector<Corner> corners(const std::vector<FEdge>& edges) {
  std::map<Point, std::vector<std::size_t>, PointLess> out;
  for (std::size_t k = 0; k < edges.size(); ++k) out[edges[k].a].push_back(k);
  std::vector<std::size_t> order(edges.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t s, std::size_t t) {
    if (const int c = compare(edges[s].a, edges[t].a); c != 0) return c < 0;
    return lex_less(edges[s].b, edges[t].b);
  });
  std::vector<bool> used(edges.size(), false);
  std::vector<Corner> result;
  for (std::size_t start : order) {
    if (used[start]) continue;
    std::vector<std::size_t> loop;
    std::size_t e = start;
    do {
      if (used[e]) throw std::logic_error("frontier edges do not form closed loops");
      used[e] = true;
      loop.push_back(e);
      const Point back = -edges[e].unit;
      const auto& options = out.at(edges[e].b);
      std::optional<std::size_t> best;
      std::optional<Turn> best_turn;
      for (std::size_t o : options) {
        const Turn t = turn(edges[o].unit, back);
        if (!best || compare(t, *best_turn) < 0) {
          best = o;
          best_turn = t;
        }
      }
      e = *best;
    } while (e != start);

    std::vector<Corner> here;
    const std::size_t n = loop.size();
    for (std::size_t i = 0; i < n; ++i) {
      const FEdge& in = edges[loop[(i + n - 1) % n]];
      const FEdge& outgoing = edges[loop[i]];
      if (same_direction(in.unit, outgoing.unit)) continue;
      here.push_back({outgoing.a, turn(outgoing.unit, -in.unit), outgoing.unit, TowerReal(0), false});
    }
    for (std::size_t i = 0; i < here.size(); ++i) {
      const Corner& next = here[(i + 1) % here.size()];
      here[i].out_length_sq = squared_distance(here[i].at, next.at);
      here[i].next_convex = next.angle.cross.sign() > 0;
    }
    result.insert(result.end(), here.begin(), here.end());
  }
  return result;
}

struct State {
  std::vector<FEdge> frontier;
  std::vector<Piece> pieces;
};

class Searcher {
 public:
  explicit Searcher(const SearchSpec& spec)
      : spec_(spec),
        region_sides_(spec.region.exact_sides()),
        region_(canonical_region(spec.region)),
        tile_(sorted(spec.tile)),
        proto_(make_prototype(spec.tile)) {
    deadline_ = spec.limits.time_budget.count() > 0 ? Clock::now() + spec.limits.time_budget : Clock::time_point::max();

    // Region edges A -> B -> C -> A have lengths 1, a, b.
    const auto& v = region_.vertices();
    const std::array<TowerReal, 3> len{TowerReal(1), region_sides_[0], region_sides_[1]};
    for (std::size_t k = 0; k < 3; ++k) {
      const Point d = v[(k + 1) % 3] - v[k];
      root_.frontier.push_back({v[k], v[(k + 1) % 3], d.scaled(len[k].inverse())});
    }
  }

  SearchResult run() {
    SearchResult result;
    std::vector<std::vector<PlacedTriangle>> found;
    {
      ++nodes_;
      const std::vector<Piece> children = expand(root_);
      std::vector<std::vector<std::vector<PlacedTriangle>>> per_child(children.size());
      unsigned workers = spec_.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : spec_.workers;
      workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(children.size(), 1)));
      std::atomic<std::size_t> next{0};
      std::exception_ptr failure;
      std::mutex failure_mutex;
      const auto work = [&] {
        try {
          for (std::size_t k = next++; k < children.size(); k = next++) {
            State s = root_;
            place(s, children[k]);
            dfs(s, per_child[k]);
          }
        } catch (...) {
          const std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          stop_ = true;
        }
      };
      if (workers <= 1) {
        work();
      } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
      }
      if (failure) std::rethrow_exception(failure);
      for (auto& list : per_child) {
        for (auto& d : list) found.push_back(std::move(d));
      }
    }
    result.nodes = nodes_;
    result.candidates = candidates_;
    result.complete = !limited_;

    std::vector<std::pair<DissectionKey, std::vector<PlacedTriangle>>> keyed;
    for (auto& pieces : found) keyed.emplace_back(dissection_key(pieces), std::move(pieces));
    std::sort(keyed.begin(), keyed.end(), [](const auto& s, const auto& t) { return key_less(s.first, t.first); });
    if (spec_.symmetry_quotient) keyed = quotient(std::move(keyed));
    for (auto& [key, pieces] : keyed) {
      Dissection d{region_sides_, region_, {}, tile_};
      for (const PieceKey& k : key) d.pieces.emplace_back(k[0], k[1], k[2]);
      if (!verify_dissection(d).valid) throw std::logic_error("search produced a dissection that fails verification");
      result.dissections.push_back(std::move(d));
    }
    return result;
  }

 private:
  bool out_of_budget() {
    if (stop_) return true;
    const auto& lim = spec_.limits;
    if ((lim.max_nodes && nodes_ >= lim.max_nodes) || (lim.max_results && results_ >= lim.max_results) ||
        Clock::now() > deadline_) {
      limited_ = true;
      stop_ = true;
    }
    return stop_;
  }

  void dfs(State& s, std::vector<std::vector<PlacedTriangle>>& out) {
    if (out_of_budget()) return;
    ++nodes_;
    if (s.pieces.size() == spec_.pieces) {
      std::vector<PlacedTriangle> tris;
      for (const Piece& p : s.pieces) tris.push_back(p.tri);
      out.push_back(std::move(tris));
      ++results_;
      return;
    }
    for (const Piece& child : expand(s)) {
      State t = s;
      place(t, child);
      dfs(t, out);
      if (stop_) return;
    }
  }

  static void place(State& s, const Piece& p) {
    subtract(s.frontier, p);
    s.pieces.push_back(p);
  }

  // Candidate pieces at the canonical corner that survive the enabled prunes
  // and lie inside the uncovered region.
  std::vector<Piece> expand(const State& s) {
    const std::vector<Corner> cs = corners(s.frontier);
    if (cs.empty()) return {};
    const Corner* c = &cs[0];
    for (const Corner& d : cs) {
      const int k = compare(d.angle, c->angle);
      if (k < 0 || (k == 0 && lex_less(d.at, c->at))) c = &d;
    }
    const PruneOptions& prune = spec_.prunes;
    std::vector<Piece> out;
    for (std::size_t k = 0; k < 3; ++k) {
      const Turn& phi = proto_.angle[k];
      if (prune.angle_fit && compare(phi, c->angle) > 0) continue;
      if (prune.remainder && compare(phi, c->angle) != 0 && compare(add(phi, proto_.min_angle), c->angle) > 0) continue;
      for (bool reflect : {false, true}) {
        if (reflect && !spec_.allow_reflections) continue;
        // Direct: edge k lies along the outgoing edge. Reflected: the mirror
        // image of edge k+2, which also ends at corner k.
        const std::size_t along = reflect ? (k + 2) % 3 : k;
        if (prune.overshoot && c->next_convex && proto_.length_sq[along] > c->out_length_sq) continue;
        Point f = proto_.unit[along];
        if (reflect) f = Point{-f.x, f.y};
        Isometry iso;
        iso.cos = dot(f, c->out_unit);
        iso.sin = cross(f, c->out_unit);
        iso.reflect = reflect;
        iso.translation = c->at - iso.apply_linear(proto_.v[k]);
        Piece piece = make_piece(iso);
        const PieceKey key = piece_key(piece.tri);
        if (std::any_of(out.begin(), out.end(),
                        [&](const Piece& q) { return compare_keys(piece_key(q.tri), key) == 0; })) {
          continue;
        }
        ++candidates_;
        if (!fits(s, piece)) continue;
        out.push_back(std::move(piece));
      }
    }
    return out;
  }

  Piece make_piece(const Isometry& iso) const {
    std::array<Point, 3> w;
    for (std::size_t j = 0; j < 3; ++j) w[j] = iso.apply(proto_.v[j]);
    std::array<FEdge, 3> edges;
    for (std::size_t j = 0; j < 3; ++j) {
      const Point u = iso.apply_linear(proto_.unit[j]);
      edges[j] = iso.reflect ? FEdge{w[(j + 1) % 3], w[j], -u} : FEdge{w[j], w[(j + 1) % 3], u};
    }
    PlacedTriangle tri(w[0], w[1], w[2]);
    const Box box = box_of(tri);
    return {std::move(tri), std::move(edges), box};
  }

  bool fits(const State& s, const Piece& piece) const {
    for (const Point& p : piece.tri.vertices()) {
      if (point_in_triangle(p, region_) == Containment::Outside) return false;
    }
    for (const Piece& q : s.pieces) {
      if (boxes_meet(piece.box, q.box) && interiors_overlap(piece.tri, q.tri)) return false;
    }
    return true;
  }

  // Isometries of the region onto itself.
  std::vector<Isometry> symmetries() const {
    std::vector<Isometry> group;
    const auto& v = region_.vertices();
    std::array<std::size_t, 3> perm{0, 1, 2};
    do {
      for (bool reflect : {false, true}) {
        try {
          const Isometry g = isometry_mapping_segment({v[0], v[1]}, {v[perm[0]], v[perm[1]]}, reflect);
          if (g.apply(v[2]) == v[perm[2]]) group.push_back(g);
        } catch (const Error&) {
        }
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return group;
  }

  std::vector<std::pair<DissectionKey, std::vector<PlacedTriangle>>> quotient(
      std::vector<std::pair<DissectionKey, std::vector<PlacedTriangle>>> keyed) const {
    const std::vector<Isometry> group = symmetries();
    std::vector<DissectionKey> seen;
    std::vector<std::pair<DissectionKey, std::vector<PlacedTriangle>>> kept;
    for (auto& entry : keyed) {
      DissectionKey best = entry.first;
      for (const Isometry& g : group) {
        std::vector<PlacedTriangle> image;
        for (const PlacedTriangle& p : entry.second) image.push_back(g.apply(p));
        DissectionKey k = dissection_key(image);
        if (key_less(k, best)) best = std::move(k);
      }
      const bool dup = std::any_of(seen.begin(), seen.end(), [&](const DissectionKey& k) {
        return !key_less(k, best) && !key_less(best, k);
      });
      if (dup) continue;
      seen.push_back(std::move(best));
      kept.push_back(std::move(entry));
    }
    return kept;
  }

  const SearchSpec& spec_;
  std::array<TowerReal, 3> region_sides_;
  PlacedTriangle region_;
  std::array<TowerReal, 3> tile_;
  Prototype proto_;
  State root_;
  Clock::time_point deadline_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<std::uint64_t> candidates_{0};
  std::atomic<std::size_t> results_{0};
  std::atomic<bool> stop_{false};
  std::atomic<bool> limited_{false};
};

void validate_tile(const std::array<TowerReal, 3>& tile) {
  const auto s = sorted(tile);
  if (s[0].sign() <= 0 || (s[0] + s[1] - s[2]).sign() <= 0) {
    throw Error(ErrorCode::InvalidArgument, "tile sides violate the strict triangle inequality");
  }
}

}  // namespace

SearchResult search_dissections(const SearchSpec& spec) {
  if (!spec.region.is_exact()) throw Error(ErrorCode::InvalidArgument, "search needs an exact region");
  if (spec.pieces == 0) throw Error(ErrorCode::InvalidArgument, "search needs at least one piece");
  validate_tile(spec.tile);
  const auto sides = spec.region.exact_sides();
  const TowerReal m(static_cast<long>(spec.pieces));
  if (heron16(sides) != m * m * heron16(spec.tile)) {
    SearchResult r;
    r.area_mismatch = true;
    return r;
  }
  return Searcher(spec).run();
}

std::array<TowerReal, 3> similar_tile(const Triangle& region, std::size_t m) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "piece count must be at least 1");
  const TowerReal scale = sqrt_adjoin(TowerReal(static_cast<long>(m))).inverse();
  const auto [a, b, c] = region.exact_sides();
  return {c * scale, a * scale, b * scale};
}

std::vector<TileSearch> search_for_count(const Triangle& region, std::size_t m,
                                         const std::vector<std::array<TowerReal, 3>>& extra_tiles,
                                         const CountSearchOptions& options) {
  std::vector<std::pair<std::string, std::array<TowerReal, 3>>> tiles{{"similar", similar_tile(region, m)}};
  for (std::size_t k = 0; k < extra_tiles.size(); ++k) tiles.emplace_back("extra " + std::to_string(k + 1), extra_tiles[k]);
  std::vector<TileSearch> out;
  for (auto& [label, tile] : tiles) {
    TileSearch ts{tile, label, false, "", {}};
    try {
      validate_tile(tile);
    } catch (const Error& e) {
      ts.skipped = true;
      ts.notice = e.what();
      out.push_back(std::move(ts));
      continue;
    }
    SearchSpec spec{region, tile, m, options.allow_reflections, options.symmetry_quotient, options.limits, {},
                    options.workers};
    ts.result = search_dissections(spec);
    if (ts.result.area_mismatch) {
      ts.skipped = true;
      ts.notice = "tile area times " + std::to_string(m) + " differs from the region area";
    }
    out.push_back(std::move(ts));
  }
  return out;
}

}  // namespace equicut
