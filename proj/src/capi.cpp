#include "equicut/equicut.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "equicut/boundary.hpp"
#include "equicut/dissect.hpp"
#include "equicut/error.hpp"
#include "equicut/io.hpp"
#include "equicut/literal.hpp"
#include "equicut/relations.hpp"
#include "equicut/search.hpp"
#include "json.hpp"

struct eqc_triangle {
  equicut::Triangle value;
};

struct eqc_dissection {
  equicut::Dissection value;
};

struct eqc_search {
  std::vector<equicut::TileSearch> runs;
};

struct eqc_region {
  equicut::LatticeRegion value;
};

namespace {

using json = nlohmann::ordered_json;
using namespace equicut;

thread_local std::string last_error;

eqc_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return EQC_ERR_PARSE;
    case ErrorCode::NegativeRadicand: return EQC_ERR_NEGATIVE_RADICAND;
    case ErrorCode::DivisionByZero: return EQC_ERR_DIVISION_BY_ZERO;
    case ErrorCode::FactorizationBound: return EQC_ERR_FACTORIZATION_BOUND;
    case ErrorCode::InvalidArgument: return EQC_ERR_INVALID_ARGUMENT;
    case ErrorCode::Degenerate: return EQC_ERR_DEGENERATE;
    case ErrorCode::LengthMismatch: return EQC_ERR_LENGTH_MISMATCH;
    case ErrorCode::Io: return EQC_ERR_IO;
  }
  return EQC_ERR_INTERNAL;
}

eqc_status fail(eqc_status s, const std::string& what) {
  last_error = what;
  return s;
}

// Runs f, translating exceptions into a status and the thread's last error.
template <class F>
eqc_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return EQC_OK;
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(EQC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(EQC_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define EQC_REQUIRE(ptr) \
  if (!(ptr)) return fail(EQC_ERR_NULL_ARGUMENT, "null argument: " #ptr)

json report_json(const RelationReport& r) {
  json j;
  j["status"] = to_string(r.status);
  j["height"] = r.height;
  j["combinations"] = r.combinations;
  json witnesses = json::array();
  for (const Witness& w : r.witnesses) {
    json c = json::array();
    for (const KElement& k : w.coefficients) c.push_back(k.to_string());
    witnesses.push_back({{"coefficients", c}, {"certification", to_string(w.certification)}});
  }
  j["witnesses"] = witnesses;
  json undecided = json::array();
  for (const CoefficientVector& v : r.undecided) {
    json c = json::array();
    for (const KElement& k : v) c.push_back(k.to_string());
    undecided.push_back(c);
  }
  j["undecided"] = undecided;
  return j;
}

json sides_json(const std::array<TowerReal, 3>& s) {
  json j = json::array();
  for (const TowerReal& x : s) j.push_back(format_number(x));
  return j;
}

std::array<TowerReal, 3> parse_tile(const std::string& text) {
  std::array<TowerReal, 3> out;
  std::size_t start = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    const std::size_t comma = text.find(',', start);
    if ((k < 2) != (comma != std::string::npos)) {
      throw Error(ErrorCode::Parse, "tile must be three comma-separated numbers: " + text);
    }
    out[k] = parse_number(std::string_view(text).substr(start, k < 2 ? comma - start : std::string::npos));
    start = comma + 1;
  }
  return out;
}

}  // namespace

extern "C" {

const char* eqc_version(void) { return "1.0.0"; }

const char* eqc_status_name(eqc_status status) {
  switch (status) {
    case EQC_OK: return "ok";
    case EQC_ERR_PARSE: return "parse error";
    case EQC_ERR_NEGATIVE_RADICAND: return "negative radicand";
    case EQC_ERR_DIVISION_BY_ZERO: return "division by zero";
    case EQC_ERR_FACTORIZATION_BOUND: return "factorization bound exceeded";
    case EQC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case EQC_ERR_DEGENERATE: return "degenerate input";
    case EQC_ERR_LENGTH_MISMATCH: return "length mismatch";
    case EQC_ERR_IO: return "i/o error";
    case EQC_ERR_NULL_ARGUMENT: return "null argument";
    case EQC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* eqc_last_error(void) { return last_error.c_str(); }

void eqc_string_free(char* s) { std::free(s); }

eqc_status eqc_triangle_parse(const char* a, const char* b, eqc_triangle** out) {
  EQC_REQUIRE(a);
  EQC_REQUIRE(b);
  EQC_REQUIRE(out);
  return guarded([&] { *out = new eqc_triangle{Triangle(parse_number(a), parse_number(b))}; });
}

eqc_status eqc_triangle_sample(uint64_t seed, eqc_sample_mode mode, eqc_triangle** out, uint64_t* attempts) {
  EQC_REQUIRE(out);
  if (mode != EQC_SAMPLE_UNIFORM_M && mode != EQC_SAMPLE_UNIFORM_N) {
    return fail(EQC_ERR_INVALID_ARGUMENT, "unknown sample mode");
  }
  return guarded([&] {
    SampleInfo info;
    *out = new eqc_triangle{
        sample_triangle(seed, mode == EQC_SAMPLE_UNIFORM_M ? SampleMode::UniformM : SampleMode::UniformN, &info)};
    if (attempts) *attempts = info.attempts;
  });
}

void eqc_triangle_free(eqc_triangle* t) { delete t; }

int eqc_triangle_is_exact(const eqc_triangle* t) { return t && t->value.is_exact() ? 1 : 0; }

eqc_status eqc_triangle_describe(const eqc_triangle* t, char** out) {
  EQC_REQUIRE(t);
  EQC_REQUIRE(out);
  return guarded([&] {
    const Triangle& tri = t->value;
    json j;
    j["tier"] = tri.is_exact() ? "exact" : "numeric";
    if (tri.is_exact()) {
      j["sides"] = sides_json(tri.exact_sides());
    } else {
      j["sides"] = json::array({tri.a().approx(), tri.b().approx(), 1.0});
    }
    const TriangleAngles angles = angles_from_sides(tri);
    const double to_deg = 180.0 / std::acos(-1.0);
    j["angles_deg"] = json::array({angles.alpha.approx() * to_deg, angles.beta.approx() * to_deg,
                                   angles.gamma.approx() * to_deg});
    if (angles.cosines) {
      j["cosines"] = sides_json(*angles.cosines);
    } else {
      j["cosines"] = nullptr;
    }
    *out = dup(j.dump());
  });
}

eqc_status eqc_analyze(const eqc_triangle* t, int angle_height, int side_height, const long* basis, size_t basis_len,
                       long precision_bits, char** out) {
  EQC_REQUIRE(t);
  EQC_REQUIRE(out);
  if (basis_len > 0) EQC_REQUIRE(basis);
  return guarded([&] {
    std::vector<long> radicands(basis, basis + basis_len);
    if (radicands.empty()) radicands = {1};
    json j;
    j["angles"] = report_json(angle_relation_report(t->value, angle_height, precision_bits));
    j["sides"] = report_json(side_relation_report(t->value, side_height, radicands, precision_bits));
    *out = dup(j.dump());
  });
}

eqc_status eqc_standard_dissection(const eqc_triangle* t, unsigned n, eqc_dissection** out) {
  EQC_REQUIRE(t);
  EQC_REQUIRE(out);
  return guarded([&] { *out = new eqc_dissection{standard_dissection(t->value, n)}; });
}

eqc_status eqc_dissection_from_json(const char* text, eqc_dissection** out) {
  EQC_REQUIRE(text);
  EQC_REQUIRE(out);
  return guarded([&] { *out = new eqc_dissection{dissection_from_json(text)}; });
}

eqc_status eqc_dissection_to_json(const eqc_dissection* d, char** out) {
  EQC_REQUIRE(d);
  EQC_REQUIRE(out);
  return guarded([&] { *out = dup(dissection_to_json(d->value)); });
}

eqc_status eqc_dissection_to_svg(const eqc_dissection* d, char** out) {
  EQC_REQUIRE(d);
  EQC_REQUIRE(out);
  return guarded([&] { *out = dup(dissection_to_svg(d->value)); });
}

size_t eqc_dissection_piece_count(const eqc_dissection* d) { return d ? d->value.pieces.size() : 0; }

void eqc_dissection_free(eqc_dissection* d) { delete d; }

eqc_status eqc_dissection_verify(const eqc_dissection* d, int direct_only, int* valid, char** out) {
  EQC_REQUIRE(d);
  EQC_REQUIRE(valid);
  return guarded([&] {
    const VerificationReport r = verify_dissection(d->value, VerifyOptions{direct_only != 0});
    if (out) {
      json failures = json::array();
      for (const Failure& f : r.failures) {
        json item;
        item["kind"] = to_string(f.kind);
        item["piece"] = f.piece == Failure::npos ? json(nullptr) : json(f.piece);
        item["other"] = f.other == Failure::npos ? json(nullptr) : json(f.other);
        item["detail"] = f.detail;
        failures.push_back(item);
      }
      *out = dup(json{{"valid", r.valid}, {"failures", failures}}.dump());
    }
    *valid = r.valid ? 1 : 0;
  });
}

eqc_status eqc_dissection_is_standard(const eqc_dissection* d, int* standard, char** reason) {
  EQC_REQUIRE(d);
  EQC_REQUIRE(standard);
  return guarded([&] {
    const StandardCheck c = is_standard(d->value);
    if (reason) *reason = dup(c.reason);
    *standard = c.standard ? 1 : 0;
  });
}

void eqc_search_options_default(eqc_search_options* options) {
  if (!options) return;
  *options = eqc_search_options{1, 1, 0, 0, 0, 0, 1};
}

eqc_status eqc_search_run(const eqc_triangle* region, const eqc_search_options* options,
                          const char* const* extra_tiles, size_t extra_count, eqc_search** out) {
  EQC_REQUIRE(region);
  EQC_REQUIRE(options);
  EQC_REQUIRE(out);
  if (extra_count > 0) EQC_REQUIRE(extra_tiles);
  return guarded([&] {
    std::vector<std::array<TowerReal, 3>> extra;
    for (size_t k = 0; k < extra_count; ++k) {
      if (!extra_tiles[k]) throw Error(ErrorCode::InvalidArgument, "null extra tile");
      extra.push_back(parse_tile(extra_tiles[k]));
    }
    CountSearchOptions o;
    o.allow_reflections = options->allow_reflections != 0;
    o.symmetry_quotient = options->symmetry_quotient != 0;
    o.limits.max_nodes = options->max_nodes;
    o.limits.max_results = static_cast<std::size_t>(options->max_results);
    o.limits.time_budget = std::chrono::milliseconds(options->time_budget_ms);
    o.workers = options->workers;
    *out = new eqc_search{search_for_count(region->value, options->pieces, extra, o)};
  });
}

size_t eqc_search_run_count(const eqc_search* s) { return s ? s->runs.size() : 0; }

eqc_status eqc_search_run_summary(const eqc_search* s, size_t run, char** out) {
  EQC_REQUIRE(s);
  EQC_REQUIRE(out);
  if (run >= s->runs.size()) return fail(EQC_ERR_INVALID_ARGUMENT, "run index out of range");
  return guarded([&] {
    const TileSearch& ts = s->runs[run];
    json j;
    j["label"] = ts.label;
    j["tile"] = sides_json(ts.tile);
    j["skipped"] = ts.skipped;
    j["notice"] = ts.notice;
    j["complete"] = ts.result.complete;
    j["nodes"] = ts.result.nodes;
    j["candidates"] = ts.result.candidates;
    j["count"] = ts.result.dissections.size();
    *out = dup(j.dump());
  });
}

size_t eqc_search_dissection_count(const eqc_search* s, size_t run) {
  return s && run < s->runs.size() ? s->runs[run].result.dissections.size() : 0;
}

eqc_status eqc_search_dissection(const eqc_search* s, size_t run, size_t index, eqc_dissection** out) {
  EQC_REQUIRE(s);
  EQC_REQUIRE(out);
  if (run >= s->runs.size() || index >= s->runs[run].result.dissections.size()) {
    return fail(EQC_ERR_INVALID_ARGUMENT, "dissection index out of range");
  }
  return guarded([&] { *out = new eqc_dissection{s->runs[run].result.dissections[index]}; });
}

void eqc_search_free(eqc_search* s) { delete s; }

eqc_status eqc_region_parse(const char* text, eqc_region** out) {
  EQC_REQUIRE(text);
  EQC_REQUIRE(out);
  return guarded([&] { *out = new eqc_region{parse_region(text)}; });
}

void eqc_region_free(eqc_region* r) { delete r; }

eqc_status eqc_region_boundary(const eqc_region* r, char** out) {
  EQC_REQUIRE(r);
  EQC_REQUIRE(out);
  return guarded([&] {
    const LatticeRegion& region = r->value;
    const auto loops = extract_boundary(region);
    json j;
    j["n"] = region.n();
    j["cells"] = region.cells().size();
    j["edge_connected"] = region.edge_connected();
    j["simply_connected"] = is_simply_connected(region);
    json items = json::array();
    for (const BoundaryLoop& loop : loops) {
      json item;
      item["outer"] = loop.outer;
      json vertices = json::array();
      for (const LatticePoint& p : loop.vertices) vertices.push_back({p.i, p.j});
      item["vertices"] = vertices;
      item["steps"] = loop.steps;
      json angles = json::array();
      for (AngleClass a : loop.angles) angles.push_back(a == AngleClass::Convex ? "convex" : "reflex");
      item["angles"] = angles;
      item["turning"] = clock_turning(loop);
      if (const auto p = find_lemma_pattern(loop)) {
        item["pattern"] = {{"kind", to_string(p->kind)}, {"index", p->index}};
      } else {
        item["pattern"] = nullptr;
      }
      items.push_back(item);
    }
    j["loops"] = items;
    *out = dup(j.dump());
  });
}

eqc_status eqc_region_svg(const eqc_region* r, const eqc_triangle* t, char** out) {
  EQC_REQUIRE(r);
  EQC_REQUIRE(out);
  return guarded([&] {
    const Triangle tri = t ? t->value : Triangle(TowerReal(1), TowerReal(1));
    *out = dup(region_to_svg(r->value, extract_boundary(r->value), tri));
  });
}

}  // extern "C"
