#include "equicut/relations.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "equicut/error.hpp"

namespace equicut {

namespace {

constexpr std::size_t kMaxValues = 6;
// An enclosure at kMaxPrecision inside [-kCandidateRadius, kCandidateRadius]
// is treated as a zero candidate; a wider one is undecided.
constexpr double kCandidateRadius = 1e-300;

// n * sqrt(d); n == 0 is the zero coefficient.
struct Option {
  long n = 0;
  long d = 1;
};

double down(double x) { return std::nextafter(x, -HUGE_VAL); }
double up(double x) { return std::nextafter(x, HUGE_VAL); }

class Enumerator {
 public:
  explicit Enumerator(const RelationQuery& q) : query_(q), enclosures_(q.values.size()) {
    options_.push_back({});
    for (long n = 1; n <= q.height; ++n) {
      for (long d : q.basis_radicands) {
        options_.push_back({n, d});
        options_.push_back({-n, d});
      }
    }
    all_exact_ = std::all_of(q.values.begin(), q.values.end(), [](const Quantity& v) { return v.is_exact(); });
    // Rigorous double bounds of every product coefficient * value.
    bounds_.resize(q.values.size());
    for (std::size_t i = 0; i < q.values.size(); ++i) {
      for (std::size_t o = 0; o < options_.size(); ++o) {
        const Interval p = coefficient(o, q.precision_bits) * value(i, q.precision_bits);
        bounds_[i].push_back(p.is_finite() ? std::pair{p.lower(), p.upper()} : std::pair{-HUGE_VAL, HUGE_VAL});
      }
    }
  }

  RelationReport run() {
    RelationReport report;
    report.height = query_.height;
    std::vector<std::size_t> pick(query_.values.size(), 0);
    const auto recurse = [&](auto&& self, std::size_t k) -> void {
      if (k == pick.size()) {
        if (admissible(pick)) {
          ++report.combinations;
          classify(pick, report);
        }
        return;
      }
      for (std::size_t o = 0; o < options_.size(); ++o) {
        pick[k] = o;
        self(self, k + 1);
      }
    };
    recurse(recurse, 0);
    return report;
  }

 private:
  bool admissible(const std::vector<std::size_t>& pick) const {
    long g = 0;
    long first = 0;
    for (std::size_t o : pick) {
      const long n = options_[o].n;
      if (n != 0 && first == 0) first = n;
      g = std::gcd(g, n);
    }
    if (first <= 0 || g != 1) return false;
    if (query_.mask == RelationMask::LeadingPairNonzero && pick.size() >= 2 && pick[0] == 0 && pick[1] == 0) {
      return false;
    }
    return true;
  }

  void classify(const std::vector<std::size_t>& pick, RelationReport& report) {
    // Fast path: summed double bounds, widened one ulp per addition.
    double lo = 0;
    double hi = 0;
    for (std::size_t i = 0; i < pick.size(); ++i) {
      const auto& [l, h] = bounds_[i][pick[i]];
      lo = i == 0 ? l : down(lo + l);
      hi = i == 0 ? h : up(hi + h);
    }
    if (lo > 0 || hi < 0) return;

    Interval sum;
    for (Precision bits = query_.precision_bits;; bits = std::min(2 * bits, kMaxPrecision)) {
      sum = combination(pick, bits);
      if (!sum.contains_zero()) return;
      if (bits == kMaxPrecision) break;
    }
    if (all_exact_) {
      TowerReal exact;
      for (std::size_t i = 0; i < pick.size(); ++i) {
        if (pick[i] != 0) exact += coefficient_tower(pick[i]) * query_.values[i].exact();
      }
      if (exact.sign() == 0) report.witnesses.push_back({to_vector(pick), Certification::Exact});
      return;
    }
    if (sum.is_finite() && sum.lower() >= -kCandidateRadius && sum.upper() <= kCandidateRadius) {
      report.witnesses.push_back({to_vector(pick), Certification::IntervalOnly});
    } else {
      report.undecided.push_back(to_vector(pick));
    }
  }

  Interval combination(const std::vector<std::size_t>& pick, Precision bits) {
    Interval sum(Rational(0), bits);
    for (std::size_t i = 0; i < pick.size(); ++i) {
      if (pick[i] != 0) sum = sum + coefficient(pick[i], bits) * value(i, bits);
    }
    return sum;
  }

  const Interval& value(std::size_t i, Precision bits) {
    auto it = enclosures_[i].find(bits);
    if (it == enclosures_[i].end()) it = enclosures_[i].emplace(bits, query_.values[i].enclose(bits)).first;
    return it->second;
  }

  Interval coefficient(std::size_t o, Precision bits) const {
    const Option& opt = options_[o];
    if (opt.d == 1) return Interval(Rational(opt.n), bits);
    return Interval(Rational(opt.n), bits) * Interval(Rational(opt.d), bits).sqrt();
  }

  TowerReal coefficient_tower(std::size_t o) {
    auto it = towers_.find(o);
    if (it == towers_.end()) it = towers_.emplace(o, to_kelement(o).to_tower()).first;
    return it->second;
  }

  KElement to_kelement(std::size_t o) const {
    const Option& opt = options_[o];
    if (opt.n == 0) return KElement();
    return KElement::sqrt_of(Integer(opt.d), Rational(opt.n));
  }

  CoefficientVector to_vector(const std::vector<std::size_t>& pick) const {
    CoefficientVector out;
    for (std::size_t o : pick) out.push_back(to_kelement(o));
    return out;
  }

  const RelationQuery& query_;
  std::vector<Option> options_;
  bool all_exact_ = false;
  std::vector<std::vector<std::pair<double, double>>> bounds_;
  std::vector<std::map<Precision, Interval>> enclosures_;
  std::map<std::size_t, TowerReal> towers_;
};

bool coefficient_less(const CoefficientVector& x, const CoefficientVector& y) {
  for (std::size_t k = 0; k < std::min(x.size(), y.size()); ++k) {
    const int c = compare(x[k].to_tower(), y[k].to_tower());
    if (c != 0) return c < 0;
  }
  return x.size() < y.size();
}

void finish(RelationReport& report) {
  std::sort(report.witnesses.begin(), report.witnesses.end(),
            [](const Witness& a, const Witness& b) { return coefficient_less(a.coefficients, b.coefficients); });
  std::sort(report.undecided.begin(), report.undecided.end(), coefficient_less);
  const bool exact = std::any_of(report.witnesses.begin(), report.witnesses.end(),
                                 [](const Witness& w) { return w.certification == Certification::Exact; });
  if (exact) {
    report.status = RelationStatus::FoundCertified;
  } else if (!report.witnesses.empty()) {
    report.status = RelationStatus::FoundCandidate;
  } else if (!report.undecided.empty()) {
    report.status = RelationStatus::Undecided;
  } else {
    report.status = RelationStatus::NoneUpToHeight;
  }
}

void validate(const RelationQuery& q) {
  if (q.values.empty() || q.values.size() > kMaxValues) {
    throw Error(ErrorCode::InvalidArgument, "relation query needs 1 to 6 values");
  }
  if (q.height < 1) throw Error(ErrorCode::InvalidArgument, "relation height must be at least 1");
  if (q.precision_bits < 64 || q.precision_bits > kMaxPrecision) {
    throw Error(ErrorCode::InvalidArgument, "precision must lie in [64, " + std::to_string(kMaxPrecision) + "] bits");
  }
  if (q.basis_radicands.empty()) throw Error(ErrorCode::InvalidArgument, "radicand basis is empty");
  std::set<long> seen;
  for (long d : q.basis_radicands) {
    if (d < 1 || !is_squarefree(Integer(d)) || !seen.insert(d).second) {
      throw Error(ErrorCode::InvalidArgument, "basis radicand " + std::to_string(d) + " is not a new squarefree natural");
    }
  }
}

// Every radicand of x lies in the basis.
bool over_basis(const KElement& x, const std::vector<long>& basis) {
  return std::all_of(x.terms().begin(), x.terms().end(), [&](const auto& term) {
    return term.first.fits_slong_p() && std::find(basis.begin(), basis.end(), term.first.get_si()) != basis.end();
  });
}

}  // namespace

const char* to_string(RelationStatus s) {
  switch (s) {
    case RelationStatus::FoundCertified: return "FoundCertified";
    case RelationStatus::FoundCandidate: return "FoundCandidate";
    case RelationStatus::NoneUpToHeight: return "NoneUpToHeight";
    case RelationStatus::Undecided: return "Undecided";
  }
  return "?";
}

const char* to_string(Certification c) { return c == Certification::Exact ? "exact" : "interval-only"; }

std::string to_string(const CoefficientVector& q) {
  std::string out = "(";
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (k) out += ", ";
    out += q[k].to_string();
  }
  return out + ")";
}

RelationReport find_relations(const RelationQuery& query) {
  validate(query);
  RelationReport report = Enumerator(query).run();
  finish(report);
  return report;
}

RelationReport angle_relation_report(const Triangle& t, int height, Precision bits) {
  const TriangleAngles angles = angles_from_sides(t);
  RelationQuery q;
  q.values = {angles.alpha, angles.beta, angles.gamma};
  q.height = height;
  q.precision_bits = bits;
  return find_relations(q);
}

RelationReport side_relation_report(const Triangle& t, int height, const std::vector<long>& basis_radicands,
                                    Precision bits) {
  RelationQuery q;
  q.values = {t.a(), t.b(), Quantity(TowerReal(1))};
  q.height = height;
  q.basis_radicands = basis_radicands;
  q.precision_bits = bits;
  q.mask = RelationMask::LeadingPairNonzero;
  validate(q);

  RelationReport direct;
  direct.height = height;
  for (std::size_t k = 0; k < 2; ++k) {
    if (!q.values[k].is_exact()) continue;
    const auto side = KElement::from_tower(q.values[k].exact());
    if (!side || !over_basis(*side, basis_radicands)) continue;
    CoefficientVector w{KElement(), KElement(), -*side};
    w[k] = KElement(1);
    direct.witnesses.push_back({std::move(w), Certification::Exact});
  }
  if (!direct.witnesses.empty()) {
    finish(direct);
    return direct;
  }
  return find_relations(q);
}

}  // namespace equicut
