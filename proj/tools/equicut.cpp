// Command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "equicut/equicut.h"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr int kOk = 0;
constexpr int kFalsified = 1;
constexpr int kUsage = 2;

// Aborts the command with exit code 2 and a message.
struct UsageError {
  std::string message;
};

void check(eqc_status s, const std::string& what) {
  if (s != EQC_OK) throw UsageError{what + ": " + eqc_status_name(s) + ": " + eqc_last_error()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  eqc_string_free(s);
  return out;
}

struct TriangleDeleter {
  void operator()(eqc_triangle* t) const { eqc_triangle_free(t); }
};
struct DissectionDeleter {
  void operator()(eqc_dissection* d) const { eqc_dissection_free(d); }
};
struct SearchDeleter {
  void operator()(eqc_search* s) const { eqc_search_free(s); }
};
struct RegionDeleter {
  void operator()(eqc_region* r) const { eqc_region_free(r); }
};
using TrianglePtr = std::unique_ptr<eqc_triangle, TriangleDeleter>;
using DissectionPtr = std::unique_ptr<eqc_dissection, DissectionDeleter>;
using SearchPtr = std::unique_ptr<eqc_search, SearchDeleter>;
using RegionPtr = std::unique_ptr<eqc_region, RegionDeleter>;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

TrianglePtr parse_region_flag(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw UsageError{"--region expects a,b (the third side is 1): " + text};
  eqc_triangle* t = nullptr;
  check(eqc_triangle_parse(parts[0].c_str(), parts[1].c_str(), &t), "--region " + text);
  return TrianglePtr(t);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError{"cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw UsageError{"cannot write " + path.string()};
}

void make_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw UsageError{"cannot create " + dir.string() + ": " + ec.message()};
}

long default_precision() {
  const char* env = std::getenv("EQUICUT_PRECISION_BITS");
  if (!env || !*env) return 256;
  char* end = nullptr;
  const long bits = std::strtol(env, &end, 10);
  if (*end != '\0' || bits < 64 || bits > 4096) {
    throw UsageError{std::string("EQUICUT_PRECISION_BITS must be an integer in [64, 4096]: ") + env};
  }
  return bits;
}

std::string join(const json& items) {
  std::string out = "(";
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k) out += ", ";
    out += items[k].get<std::string>();
  }
  return out + ")";
}

void print_report(const std::string& title, const json& r) {
  std::cout << title << ": " << r["status"].get<std::string>() << " (" << r["combinations"] << " combinations)\n";
  for (const auto& w : r["witnesses"]) {
    std::cout << "  witness " << join(w["coefficients"]) << " [" << w["certification"].get<std::string>() << "]\n";
  }
  for (const auto& u : r["undecided"]) std::cout << "  undecided " << join(u) << "\n";
}

// Decimal rendering of a describe() side entry, which is a literal or a double.
std::string side_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void print_triangle(const json& d) {
  std::cout << "triangle: a = " << side_text(d["sides"][0]) << ", b = " << side_text(d["sides"][1]) << ", c = 1 ("
            << d["tier"].get<std::string>() << ")\n";
  std::cout << "angles (deg):";
  for (const auto& a : d["angles_deg"]) std::cout << " " << a.get<double>();
  std::cout << "\n";
  if (!d["cosines"].is_null()) std::cout << "cosines: " << join(d["cosines"]) << "\n";
}

json describe(const eqc_triangle* t) {
  char* out = nullptr;
  check(eqc_triangle_describe(t, &out), "describe");
  return json::parse(take(out));
}

json analyze(const eqc_triangle* t, int angle_height, int side_height, const std::vector<long>& basis, long bits) {
  char* out = nullptr;
  check(eqc_analyze(t, angle_height, side_height, basis.data(), basis.size(), bits, &out), "analyze");
  return json::parse(take(out));
}

bool is_hit(const json& report) {
  const std::string s = report["status"];
  return s == "FoundCertified" || s == "FoundCandidate";
}

// Writes JSON and SVG; the JSON is reloaded and verified. Returns validity.
bool emit(const eqc_dissection* d, const fs::path& stem) {
  char* text = nullptr;
  check(eqc_dissection_to_json(d, &text), "to_json");
  const std::string doc = take(text);
  char* svg = nullptr;
  check(eqc_dissection_to_svg(d, &svg), "to_svg");
  write_file(stem.string() + ".json", doc);
  write_file(stem.string() + ".svg", take(svg));
  eqc_dissection* raw = nullptr;
  check(eqc_dissection_from_json(read_file(stem.string() + ".json").c_str(), &raw), "reload");
  DissectionPtr back(raw);
  int valid = 0;
  check(eqc_dissection_verify(back.get(), 0, &valid, nullptr), "verify");
  return valid == 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact dissections of triangles into congruent triangles"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(eqc_version()));

  std::string region;
  int height = 0;
  int angle_height = 2;
  int side_height = 2;
  std::vector<long> basis{1};
  long precision = 0;
  bool as_json = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "Angle and side commensurability reports");
  analyze_cmd->add_option("--region", region, "Sides a,b with c = 1")->required();
  analyze_cmd->add_option("--height", height, "Coefficient height for both reports")->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--angle-height", angle_height, "Height for the angle report")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  analyze_cmd->add_option("--side-height", side_height, "Height for the side report")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  analyze_cmd->add_option("--basis", basis, "Squarefree radicands for side coefficients")->delimiter(',');
  analyze_cmd->add_option("--precision", precision, "Starting interval precision in bits")
      ->check(CLI::Range(64L, 4096L));
  analyze_cmd->add_flag("--json", as_json, "Print the raw JSON report");

  unsigned n = 1;
  std::string out_dir = ".";
  auto* standard_cmd = app.add_subcommand("standard", "Write the n^2-piece lattice dissection");
  standard_cmd->add_option("--region", region, "Sides a,b with c = 1")->required();
  standard_cmd->add_option("--n", n, "Subdivision order")->required()->check(CLI::Range(1u, 1000u));
  standard_cmd->add_option("--out", out_dir, "Output directory")->capture_default_str();

  std::string file;
  bool direct_only = false;
  auto* verify_cmd = app.add_subcommand("verify", "Verify a dissection JSON file");
  verify_cmd->add_option("file", file, "Dissection JSON")->required();
  verify_cmd->add_flag("--direct-only", direct_only, "Reject mirrored pieces");
  verify_cmd->add_flag("--json", as_json, "Print the raw JSON report");

  std::size_t pieces = 0;
  std::vector<std::string> tiles;
  bool no_reflections = false;
  bool quotient = false;
  std::uint64_t max_nodes = 0;
  std::uint64_t max_results = 0;
  std::uint64_t time_budget_ms = 0;
  unsigned workers = 1;
  long expect = -1;
  std::string search_out;
  auto* search_cmd = app.add_subcommand("search", "Exhaustive search for dissections into m congruent pieces");
  search_cmd->add_option("--region", region, "Sides a,b with c = 1")->required();
  search_cmd->add_option("--pieces", pieces, "Piece count m")->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--tile", tiles, "Extra tile s1,s2,s3 in counterclockwise order")->take_all();
  search_cmd->add_flag("--no-reflections", no_reflections, "Allow only rotated and translated copies");
  search_cmd->add_flag("--quotient-symmetry", quotient, "One result per orbit of the region symmetry group");
  search_cmd->add_option("--max-nodes", max_nodes, "Node limit, 0 for none");
  search_cmd->add_option("--max-results", max_results, "Result limit, 0 for none");
  search_cmd->add_option("--time-budget-ms", time_budget_ms, "Time limit, 0 for none");
  search_cmd->add_option("--workers", workers, "Worker threads, 0 for all cores")->capture_default_str();
  search_cmd->add_option("--out", search_out, "Directory for JSON and SVG of every result");
  search_cmd->add_option("--expect", expect, "Exit 1 unless the total result count matches")
      ->check(CLI::NonNegativeNumber);

  std::string svg_out;
  auto* boundary_cmd = app.add_subcommand("boundary", "Boundary loops of a lattice region");
  boundary_cmd->add_option("file", file, "Region text file")->required();
  boundary_cmd->add_option("--svg", svg_out, "Write an SVG rendering");
  boundary_cmd->add_option("--region", region, "Render on the triangle a,b,1 instead of the equilateral one");
  boundary_cmd->add_flag("--json", as_json, "Print the raw JSON report");

  std::uint64_t count = 100;
  std::uint64_t seed = 1;
  std::string mode = "uniform-M";
  auto* sample_cmd = app.add_subcommand("sample", "Relation hit rate over random triangles");
  sample_cmd->add_option("--count", count, "Number of samples")->capture_default_str()->check(CLI::PositiveNumber);
  sample_cmd->add_option("--seed", seed, "First seed; sample k uses seed + k")->capture_default_str();
  sample_cmd->add_option("--mode", mode, "uniform-M or uniform-N")
      ->capture_default_str()
      ->check(CLI::IsMember({"uniform-M", "uniform-N"}, CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze_cmd) {
      if (height > 0) angle_height = side_height = height;
      const long bits = precision > 0 ? precision : default_precision();
      TrianglePtr t = parse_region_flag(region);
      const json d = describe(t.get());
      const json r = analyze(t.get(), angle_height, side_height, basis, bits);
      if (as_json) {
        std::cout << json{{"triangle", d}, {"relations", r}}.dump(2) << "\n";
      } else {
        print_triangle(d);
        print_report("angles (H=" + std::to_string(angle_height) + ")", r["angles"]);
        std::string b;
        for (long x : basis) b += (b.empty() ? "" : ", ") + std::to_string(x);
        print_report("sides (H=" + std::to_string(side_height) + ", basis {" + b + "})", r["sides"]);
      }
      return kOk;
    }

    if (*standard_cmd) {
      TrianglePtr t = parse_region_flag(region);
      eqc_dissection* raw = nullptr;
      check(eqc_standard_dissection(t.get(), n, &raw), "standard");
      DissectionPtr d(raw);
      make_dir(out_dir);
      const fs::path stem = fs::path(out_dir) / ("standard_n" + std::to_string(n));
      const bool valid = emit(d.get(), stem);
      std::cout << stem.string() << ".json: " << eqc_dissection_piece_count(d.get()) << " pieces, "
                << (valid ? "valid" : "INVALID") << "\n";
      return valid ? kOk : kFalsified;
    }

    if (*verify_cmd) {
      eqc_dissection* raw = nullptr;
      check(eqc_dissection_from_json(read_file(file).c_str(), &raw), file);
      DissectionPtr d(raw);
      int valid = 0;
      char* report = nullptr;
      check(eqc_dissection_verify(d.get(), direct_only ? 1 : 0, &valid, &report), "verify");
      const json r = json::parse(take(report));
      int standard = 0;
      char* reason = nullptr;
      check(eqc_dissection_is_standard(d.get(), &standard, &reason), "is_standard");
      const std::string why = take(reason);
      if (as_json) {
        json out = r;
        out["pieces"] = eqc_dissection_piece_count(d.get());
        out["standard"] = standard == 1;
        out["standard_reason"] = why;
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << file << ": " << (valid ? "valid" : "invalid") << ", " << eqc_dissection_piece_count(d.get())
                  << " pieces, " << (standard ? "standard" : "not standard");
        if (!standard && !why.empty()) std::cout << " (" << why << ")";
        std::cout << "\n";
        for (const auto& f : r["failures"]) {
          std::cout << "  " << f["kind"].get<std::string>();
          if (!f["piece"].is_null()) std::cout << " piece " << f["piece"];
          if (!f["other"].is_null()) std::cout << " other " << f["other"];
          std::cout << ": " << f["detail"].get<std::string>() << "\n";
        }
      }
      return valid ? kOk : kFalsified;
    }

    if (*search_cmd) {
      TrianglePtr t = parse_region_flag(region);
      eqc_search_options o;
      eqc_search_options_default(&o);
      o.pieces = pieces;
      o.allow_reflections = no_reflections ? 0 : 1;
      o.symmetry_quotient = quotient ? 1 : 0;
      o.max_nodes = max_nodes;
      o.max_results = max_results;
      o.time_budget_ms = time_budget_ms;
      o.workers = workers;
      std::vector<const char*> extra;
      for (const auto& s : tiles) extra.push_back(s.c_str());
      eqc_search* raw = nullptr;
      check(eqc_search_run(t.get(), &o, extra.data(), extra.size(), &raw), "search");
      SearchPtr s(raw);
      if (!search_out.empty()) make_dir(search_out);
      std::size_t total = 0;
      bool all_valid = true;
      for (std::size_t run = 0; run < eqc_search_run_count(s.get()); ++run) {
        char* summary = nullptr;
        check(eqc_search_run_summary(s.get(), run, &summary), "summary");
        const json j = json::parse(take(summary));
        std::cout << j["label"].get<std::string>() << " tile " << join(j["tile"]) << ": ";
        if (j["skipped"].get<bool>()) {
          std::cout << "skipped (" << j["notice"].get<std::string>() << ")\n";
          continue;
        }
        const std::size_t found = j["count"];
        total += found;
        std::cout << found << " dissection(s), " << j["nodes"] << " nodes, "
                  << (j["complete"].get<bool>() ? "complete" : "INCOMPLETE") << "\n";
        for (std::size_t k = 0; k < found; ++k) {
          eqc_dissection* draw = nullptr;
          check(eqc_search_dissection(s.get(), run, k, &draw), "dissection");
          DissectionPtr d(draw);
          int standard = 0;
          check(eqc_dissection_is_standard(d.get(), &standard, nullptr), "is_standard");
          std::cout << "  #" << k << (standard ? " standard" : " non-standard");
          if (!search_out.empty()) {
            const fs::path stem = fs::path(search_out) / ("search_run" + std::to_string(run) + "_" + std::to_string(k));
            const bool valid = emit(d.get(), stem);
            all_valid = all_valid && valid;
            std::cout << " -> " << stem.string() << ".json" << (valid ? "" : " INVALID");
          }
          std::cout << "\n";
        }
      }
      std::cout << "total: " << total << "\n";
      if (!all_valid) return kFalsified;
      if (expect >= 0 && total != static_cast<std::size_t>(expect)) {
        std::cout << "expected " << expect << " dissection(s)\n";
        return kFalsified;
      }
      return kOk;
    }

    if (*boundary_cmd) {
      eqc_region* raw = nullptr;
      check(eqc_region_parse(read_file(file).c_str(), &raw), file);
      RegionPtr r(raw);
      char* report = nullptr;
      check(eqc_region_boundary(r.get(), &report), "boundary");
      const json j = json::parse(take(report));
      bool holds = true;
      for (const auto& loop : j["loops"]) {
        if (!loop["outer"].get<bool>()) continue;
        holds = holds && loop["turning"] == 6 && (!j["simply_connected"].get<bool>() || !loop["pattern"].is_null());
      }
      if (as_json) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << j["cells"] << " cells, n = " << j["n"] << ", "
                  << (j["simply_connected"].get<bool>() ? "simply connected" : "not simply connected") << "\n";
        for (const auto& loop : j["loops"]) {
          std::cout << (loop["outer"].get<bool>() ? "outer" : "hole") << " loop, turning " << loop["turning"] << "\n";
          for (std::size_t k = 0; k < loop["vertices"].size(); ++k) {
            std::cout << "  (" << loop["vertices"][k][0] << ", " << loop["vertices"][k][1] << ") "
                      << loop["angles"][k].get<std::string>() << " " << loop["steps"][k] << "\n";
          }
          if (loop["pattern"].is_null()) {
            std::cout << "  pattern: none\n";
          } else {
            std::cout << "  pattern: " << loop["pattern"]["kind"].get<std::string>() << " at "
                      << loop["pattern"]["index"] << "\n";
          }
        }
      }
      if (!svg_out.empty()) {
        TrianglePtr t;
        if (!region.empty()) t = parse_region_flag(region);
        char* svg = nullptr;
        check(eqc_region_svg(r.get(), t.get(), &svg), "svg");
        write_file(svg_out, take(svg));
      }
      return holds ? kOk : kFalsified;
    }

    if (*sample_cmd) {
      const eqc_sample_mode m = (mode == "uniform-N" || mode == "uniform-n") ? EQC_SAMPLE_UNIFORM_N : EQC_SAMPLE_UNIFORM_M;
      const std::vector<long> sample_basis{1, 2, 3, 5};
      const long bits = default_precision();
      std::uint64_t angle_hits = 0, side_hits = 0, undecided = 0, attempts = 0;
      for (std::uint64_t k = 0; k < count; ++k) {
        eqc_triangle* raw = nullptr;
        std::uint64_t tries = 0;
        check(eqc_triangle_sample(seed + k, m, &raw, &tries), "sample");
        TrianglePtr t(raw);
        attempts += tries;
        const json r = analyze(t.get(), 12, 8, sample_basis, bits);
        angle_hits += is_hit(r["angles"]);
        side_hits += is_hit(r["sides"]);
        undecided += (r["angles"]["status"] == "Undecided") + (r["sides"]["status"] == "Undecided");
      }
      std::cout << "samples " << count << " (" << mode << ", seeds " << seed << ".." << seed + count - 1
                << ", acceptance " << static_cast<double>(count) / static_cast<double>(attempts) << ")\n";
      std::cout << "hits: angles (H=12) " << angle_hits << "/" << count << ", sides (H=8, basis {1, 2, 3, 5}) "
                << side_hits << "/" << count << ", undecided " << undecided << "\n";
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
