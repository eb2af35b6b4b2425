#include "equicut/interval.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "equicut/error.hpp"

namespace equicut {

namespace {

// Scratch MPFR value with RAII cleanup.
struct Scratch {
  mpfr_t v;
  explicit Scratch(Precision bits) { mpfr_init2(v, bits); }
  ~Scratch() { mpfr_clear(v); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;
};

Precision joint(const Interval& a, const Interval& b) {
  return std::max(a.precision(), b.precision());
}

void set_min(mpfr_t dst, const mpfr_t a, const mpfr_t b) {
  mpfr_set(dst, mpfr_cmp(a, b) <= 0 ? a : b, MPFR_RNDD);
}

void set_max(mpfr_t dst, const mpfr_t a, const mpfr_t b) {
  mpfr_set(dst, mpfr_cmp(a, b) >= 0 ? a : b, MPFR_RNDU);
}

}  // namespace

Interval::Interval(Precision bits) {
  mpfr_init2(lo_, bits);
  mpfr_init2(hi_, bits);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Rational& q, Precision bits) {
  mpfr_init2(lo_, bits);
  mpfr_init2(hi_, bits);
  mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& other) {
  mpfr_init2(lo_, other.precision());
  mpfr_init2(hi_, other.precision());
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept {
  mpfr_init2(lo_, MPFR_PREC_MIN);
  mpfr_init2(hi_, MPFR_PREC_MIN);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    mpfr_set_prec(lo_, other.precision());
    mpfr_set_prec(hi_, other.precision());
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  if (this != &other) {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::pi(Precision bits) {
  Interval r(bits);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  Interval r(joint(a, b));
  set_min(r.lo_, a.lo_, b.lo_);
  set_max(r.hi_, a.hi_, b.hi_);
  return r;
}

Interval Interval::entire(Precision bits) {
  Interval r(bits);
  mpfr_set_inf(r.lo_, -1);
  mpfr_set_inf(r.hi_, 1);
  return r;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(joint(a, b));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(joint(a, b));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  const Precision bits = joint(a, b);
  Interval r(bits);
  Scratch lo(bits);
  Scratch hi(bits);
  Scratch t(bits);
  const mpfr_srcptr xs[2] = {a.lo_, a.hi_};
  const mpfr_srcptr ys[2] = {b.lo_, b.hi_};
  bool first = true;
  for (mpfr_srcptr x : xs) {
    for (mpfr_srcptr y : ys) {
      mpfr_mul(t.v, x, y, MPFR_RNDD);
      if (mpfr_nan_p(t.v)) mpfr_set_inf(t.v, -1);  // 0 * inf
      if (first || mpfr_cmp(t.v, lo.v) < 0) mpfr_set(lo.v, t.v, MPFR_RNDD);
      mpfr_mul(t.v, x, y, MPFR_RNDU);
      if (mpfr_nan_p(t.v)) mpfr_set_inf(t.v, 1);
      if (first || mpfr_cmp(t.v, hi.v) > 0) mpfr_set(hi.v, t.v, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_set(r.lo_, lo.v, MPFR_RNDD);
  mpfr_set(r.hi_, hi.v, MPFR_RNDU);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  const Precision bits = joint(a, b);
  if (b.contains_zero()) return Interval::entire(bits);
  Interval r(bits);
  Scratch lo(bits);
  Scratch hi(bits);
  Scratch t(bits);
  const mpfr_srcptr xs[2] = {a.lo_, a.hi_};
  const mpfr_srcptr ys[2] = {b.lo_, b.hi_};
  bool first = true;
  for (mpfr_srcptr x : xs) {
    for (mpfr_srcptr y : ys) {
      mpfr_div(t.v, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t.v, lo.v) < 0) mpfr_set(lo.v, t.v, MPFR_RNDD);
      mpfr_div(t.v, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t.v, hi.v) > 0) mpfr_set(hi.v, t.v, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_set(r.lo_, lo.v, MPFR_RNDD);
  mpfr_set(r.hi_, hi.v, MPFR_RNDU);
  return r;
}

Interval Interval::operator-() const {
  Interval r(precision());
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval Interval::scaled(long k) const {
  Interval r(precision());
  if (k >= 0) {
    mpfr_mul_si(r.lo_, lo_, k, MPFR_RNDD);
    mpfr_mul_si(r.hi_, hi_, k, MPFR_RNDU);
  } else {
    mpfr_mul_si(r.lo_, hi_, k, MPFR_RNDD);
    mpfr_mul_si(r.hi_, lo_, k, MPFR_RNDU);
  }
  return r;
}

Interval Interval::sqrt() const {
  if (mpfr_sgn(hi_) < 0) throw Error(ErrorCode::NegativeRadicand, "sqrt of negative interval");
  Interval r(precision());
  if (mpfr_sgn(lo_) <= 0) {
    mpfr_set_zero(r.lo_, 1);
  } else {
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  }
  mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::acos() const {
  const Precision bits = precision();
  Scratch lo(bits);
  Scratch hi(bits);
  mpfr_set(lo.v, lo_, MPFR_RNDD);
  mpfr_set(hi.v, hi_, MPFR_RNDU);
  if (mpfr_cmp_si(lo.v, -1) < 0) mpfr_set_si(lo.v, -1, MPFR_RNDD);
  if (mpfr_cmp_si(hi.v, 1) > 0) mpfr_set_si(hi.v, 1, MPFR_RNDU);
  if (mpfr_cmp(lo.v, hi.v) > 0) throw Error(ErrorCode::InvalidArgument, "acos argument outside [-1, 1]");
  Interval r(bits);
  mpfr_acos(r.lo_, hi.v, MPFR_RNDD);
  mpfr_acos(r.hi_, lo.v, MPFR_RNDU);
  return r;
}

Interval Interval::sin() const {
  const Precision bits = precision();
  const Interval p = pi(bits);
  Interval r(bits);
  if (mpfr_sgn(lo_) < 0 || mpfr_cmp(hi_, p.lo_) > 0) {
    mpfr_set_si(r.lo_, -1, MPFR_RNDD);
    mpfr_set_si(r.hi_, 1, MPFR_RNDU);
    return r;
  }
  Interval half(bits);
  mpfr_div_2ui(half.lo_, p.lo_, 1, MPFR_RNDD);
  mpfr_div_2ui(half.hi_, p.hi_, 1, MPFR_RNDU);
  Scratch a(bits);
  Scratch b(bits);
  if (mpfr_cmp(hi_, half.lo_) < 0) {
    mpfr_sin(r.lo_, lo_, MPFR_RNDD);
    mpfr_sin(r.hi_, hi_, MPFR_RNDU);
  } else if (mpfr_cmp(lo_, half.hi_) > 0) {
    mpfr_sin(r.lo_, hi_, MPFR_RNDD);
    mpfr_sin(r.hi_, lo_, MPFR_RNDU);
  } else {
    mpfr_sin(a.v, lo_, MPFR_RNDD);
    mpfr_sin(b.v, hi_, MPFR_RNDD);
    set_min(r.lo_, a.v, b.v);
    mpfr_set_si(r.hi_, 1, MPFR_RNDU);
  }
  if (mpfr_sgn(r.lo_) < 0) mpfr_set_zero(r.lo_, 1);
  return r;
}

Interval Interval::cos() const {
  const Precision bits = precision();
  const Interval p = pi(bits);
  Interval r(bits);
  if (mpfr_sgn(lo_) < 0 || mpfr_cmp(hi_, p.lo_) > 0) {
    mpfr_set_si(r.lo_, -1, MPFR_RNDD);
    mpfr_set_si(r.hi_, 1, MPFR_RNDU);
    return r;
  }
  mpfr_cos(r.lo_, hi_, MPFR_RNDD);
  mpfr_cos(r.hi_, lo_, MPFR_RNDU);
  return r;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
bool Interval::certainly_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::certainly_negative() const { return mpfr_sgn(hi_) < 0; }

bool Interval::contains(const Interval& other) const {
  return mpfr_cmp(lo_, other.lo_) <= 0 && mpfr_cmp(hi_, other.hi_) >= 0;
}

bool Interval::is_finite() const { return mpfr_number_p(lo_) != 0 && mpfr_number_p(hi_) != 0; }

double Interval::lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::mid() const {
  Scratch m(precision() + 1);
  mpfr_add(m.v, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m.v, m.v, 1, MPFR_RNDN);
  return mpfr_get_d(m.v, MPFR_RNDN);
}

double Interval::radius_from_mid() const {
  const double m = mid();
  Scratch md(precision() + 64);
  mpfr_set_d(md.v, m, MPFR_RNDN);
  Scratch a(precision() + 64);
  Scratch b(precision() + 64);
  mpfr_sub(a.v, hi_, md.v, MPFR_RNDU);
  mpfr_sub(b.v, md.v, lo_, MPFR_RNDU);
  const double ra = mpfr_get_d(a.v, MPFR_RNDU);
  const double rb = mpfr_get_d(b.v, MPFR_RNDU);
  return std::max({ra, rb, 0.0});
}

double Interval::width() const {
  Scratch w(precision() + 1);
  mpfr_sub(w.v, hi_, lo_, MPFR_RNDU);
  return mpfr_get_d(w.v, MPFR_RNDU);
}

std::string Interval::to_string(int digits) const {
  auto render = [digits](const mpfr_t x, mpfr_rnd_t rnd) {
    std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), rnd == MPFR_RNDD ? "%.*RDg" : "%.*RUg", digits, x);
    return std::string(buf.data());
  };
  return "[" + render(lo_, MPFR_RNDD) + ", " + render(hi_, MPFR_RNDU) + "]";
}

}  // namespace equicut
