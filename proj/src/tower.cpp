#include "equicut/tower.hpp"

#include <algorithm>
#include <utility>

#include "equicut/error.hpp"

namespace equicut {

namespace {

using Coeffs = std::vector<Rational>;
using CSpan = std::span<const Rational>;

bool all_zero(CSpan x) {
  return std::all_of(x.begin(), x.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Coeffs add(CSpan x, CSpan y) {
  Coeffs r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

Coeffs sub(CSpan x, CSpan y) {
  Coeffs r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

Coeffs neg(CSpan x) {
  Coeffs r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = -x[i];
  return r;
}

Coeffs scale(CSpan x, const Rational& k) {
  Coeffs r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] * k;
  return r;
}

Coeffs concat(Coeffs lo, const Coeffs& hi) {
  lo.insert(lo.end(), hi.begin(), hi.end());
  return lo;
}

Coeffs padded(CSpan x, std::size_t size) {
  Coeffs r(x.begin(), x.end());
  r.resize(size);
  return r;
}

std::size_t size_at(const TowerLevel* level) {
  return std::size_t{1} << (level ? level->depth : 0);
}

// All of the following take the level whose generator is the top of the
// coefficient layout (null for Q) and spans of size 2^depth.

Coeffs mul(const TowerLevel* level, CSpan x, CSpan y) {
  if (!level) return {x[0] * y[0]};
  const std::size_t h = x.size() / 2;
  const TowerLevel* parent = level->parent.get();
  const CSpan p1 = x.first(h), q1 = x.subspan(h);
  const CSpan p2 = y.first(h), q2 = y.subspan(h);
  const bool q1z = all_zero(q1);
  const bool q2z = all_zero(q2);
  if (q1z && q2z) return padded(mul(parent, p1, p2), x.size());
  if (q1z) return concat(mul(parent, p1, p2), mul(parent, p1, q2));
  if (q2z) return concat(mul(parent, p1, p2), mul(parent, q1, p2));
  Coeffs pp = mul(parent, p1, p2);
  Coeffs qq = mul(parent, q1, q2);
  // Karatsuba for the cross term.
  Coeffs cross = mul(parent, add(p1, q1), add(p2, q2));
  cross = sub(sub(cross, pp), qq);
  Coeffs qqr = mul(parent, qq, level->radicand);
  return concat(add(pp, qqr), cross);
}

int level_sign(const TowerLevel* level, CSpan x) {
  if (!level) return sign(x[0]);
  const std::size_t h = x.size() / 2;
  const TowerLevel* parent = level->parent.get();
  const CSpan p = x.first(h), q = x.subspan(h);
  const int sq = level_sign(parent, q);
  const int sp = level_sign(parent, p);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // Opposite signs: compare p^2 with q^2 r. They differ because sqrt(r) is not
  // in the parent field.
  const Coeffs d = sub(mul(parent, p, p), mul(parent, mul(parent, q, q), level->radicand));
  return sp * level_sign(parent, d);
}

Coeffs level_inverse(const TowerLevel* level, CSpan x) {
  if (!level) {
    if (sgn(x[0]) == 0) throw Error(ErrorCode::DivisionByZero, "division by zero");
    return {1 / x[0]};
  }
  const std::size_t h = x.size() / 2;
  const TowerLevel* parent = level->parent.get();
  const CSpan p = x.first(h), q = x.subspan(h);
  if (all_zero(q)) return padded(level_inverse(parent, p), x.size());
  const Coeffs d = sub(mul(parent, p, p), mul(parent, mul(parent, q, q), level->radicand));
  const Coeffs dinv = level_inverse(parent, d);
  return concat(mul(parent, p, dinv), neg(mul(parent, q, dinv)));
}

// Nonnegative square root of x inside the field of `level`, if one exists.
// Complete: if (c + d sqrt s)^2 = a + b sqrt s then a^2 - b^2 s is the square of
// c^2 - d^2 s, so c^2 = (a +- t)/2 with t = sqrt(a^2 - b^2 s).
std::optional<Coeffs> sqrt_in(const TowerLevel* level, CSpan x) {
  if (!level) {
    auto r = rational_sqrt(x[0]);
    if (!r) return std::nullopt;
    return Coeffs{*r};
  }
  const int sx = level_sign(level, x);
  if (sx < 0) return std::nullopt;
  if (sx == 0) return Coeffs(x.size());
  const std::size_t h = x.size() / 2;
  const TowerLevel* parent = level->parent.get();
  const CSpan a = x.first(h), b = x.subspan(h);
  const CSpan s = level->radicand;
  if (all_zero(b)) {
    if (auto c = sqrt_in(parent, a)) return padded(*c, x.size());
    // a = d^2 s
    const Coeffs ratio = mul(parent, a, level_inverse(parent, s));
    if (auto d = sqrt_in(parent, ratio)) return concat(Coeffs(h), *d);
    return std::nullopt;
  }
  const Coeffs disc = sub(mul(parent, a, a), mul(parent, mul(parent, b, b), s));
  const auto t = sqrt_in(parent, disc);
  if (!t) return std::nullopt;
  const Rational half(1, 2);
  for (const Coeffs& c2 : {scale(add(a, *t), half), scale(sub(a, *t), half)}) {
    const auto c = sqrt_in(parent, c2);
    if (!c || all_zero(*c)) continue;
    const Coeffs d = mul(parent, b, level_inverse(parent, scale(*c, Rational(2))));
    Coeffs root = concat(*c, d);
    if (level_sign(level, root) < 0) root = neg(root);
    if (mul(level, root, root) == Coeffs(x.begin(), x.end())) return root;
  }
  return std::nullopt;
}

const TowerLevel* ancestor(const TowerLevel* t, std::size_t d) {
  while (t && t->depth > d) t = t->parent.get();
  return t;
}

bool structurally_equal(const TowerLevel* a, const TowerLevel* b) {
  while (true) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->depth != b->depth) return false;
    if (a->radicand != b->radicand) return false;
    a = a->parent.get();
    b = b->parent.get();
  }
}

// Images of the generators of some tower inside `target`, each padded to the
// target's coefficient size.
struct Embedding {
  Tower target;
  std::vector<Coeffs> images;

  void grow_to(Tower t) {
    target = std::move(t);
    for (Coeffs& img : images) img.resize(size_at(target.get()));
  }
};

Coeffs map_into(const TowerLevel* source, CSpan x, const Embedding& emb) {
  const std::size_t n = size_at(emb.target.get());
  if (!source) return padded(x.first(1), n);
  const std::size_t h = x.size() / 2;
  const Coeffs mp = map_into(source->parent.get(), x.first(h), emb);
  const CSpan q = x.subspan(h);
  if (all_zero(q)) return mp;
  const Coeffs mq = map_into(source->parent.get(), q, emb);
  return add(mp, mul(emb.target.get(), mq, emb.images[source->depth - 1]));
}

Coeffs generator(std::size_t index, std::size_t size) {
  Coeffs g(size);
  g[std::size_t{1} << index] = 1;
  return g;
}

// Embeds tower `b` into an extension of `a`; `a` stays a prefix of the result.
Embedding merge(const Tower& a, const Tower& b) {
  Embedding emb{a, {}};
  const std::size_t da = depth(a);
  const std::size_t db = depth(b);
  std::size_t shared = 0;
  for (std::size_t d = std::min(da, db); d > 0; --d) {
    if (structurally_equal(ancestor(a.get(), d), ancestor(b.get(), d))) {
      shared = d;
      break;
    }
  }
  for (std::size_t i = 0; i < shared; ++i) emb.images.push_back(generator(i, size_at(a.get())));
  for (std::size_t i = shared + 1; i <= db; ++i) {
    const TowerLevel* level = ancestor(b.get(), i);
    const Coeffs rad = map_into(level->parent.get(), level->radicand, emb);
    if (auto root = sqrt_in(emb.target.get(), rad)) {
      emb.images.push_back(std::move(*root));
      continue;
    }
    const std::size_t d = depth(emb.target);
    auto next = std::make_shared<TowerLevel>(TowerLevel{emb.target, rad, d + 1});
    emb.grow_to(std::move(next));
    emb.images.push_back(generator(d, size_at(emb.target.get())));
  }
  return emb;
}

struct Unified {
  Tower tower;
  Coeffs x;
  Coeffs y;
};

Unified unify(const TowerReal& x, const TowerReal& y) {
  const Tower& tx = x.tower();
  const Tower& ty = y.tower();
  if (tx == ty) return {tx, Coeffs(x.coeffs().begin(), x.coeffs().end()), Coeffs(y.coeffs().begin(), y.coeffs().end())};
  const std::size_t dx = depth(tx);
  const std::size_t dy = depth(ty);
  if (dx >= dy && structurally_equal(ancestor(tx.get(), dy), ty.get())) {
    return {tx, Coeffs(x.coeffs().begin(), x.coeffs().end()), padded(y.coeffs(), x.coeffs().size())};
  }
  if (dy > dx && structurally_equal(ancestor(ty.get(), dx), tx.get())) {
    return {ty, padded(x.coeffs(), y.coeffs().size()), Coeffs(y.coeffs().begin(), y.coeffs().end())};
  }
  const bool x_deeper = dx >= dy;
  const TowerReal& big = x_deeper ? x : y;
  const TowerReal& small = x_deeper ? y : x;
  const Embedding emb = merge(big.tower(), small.tower());
  const std::size_t n = size_at(emb.target.get());
  Coeffs bc = padded(big.coeffs(), n);
  Coeffs sc = map_into(small.tower().get(), small.coeffs(), emb);
  if (x_deeper) return {emb.target, std::move(bc), std::move(sc)};
  return {emb.target, std::move(sc), std::move(bc)};
}

}  // namespace

std::size_t depth(const Tower& t) { return t ? t->depth : 0; }

bool same_tower(const Tower& a, const Tower& b) { return structurally_equal(a.get(), b.get()); }

TowerReal::TowerReal(Tower tower, std::vector<Rational> coeffs)
    : tower_(std::move(tower)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != size_at(tower_.get()))
    throw Error(ErrorCode::InvalidArgument, "coefficient count does not match tower depth");
  trim();
}

void TowerReal::trim() {
  while (tower_) {
    const std::size_t h = coeffs_.size() / 2;
    if (!all_zero(CSpan(coeffs_).subspan(h))) break;
    coeffs_.resize(h);
    tower_ = tower_->parent;
  }
}

bool TowerReal::is_zero() const { return !tower_ && sgn(coeffs_[0]) == 0; }

const Rational& TowerReal::as_rational() const {
  if (tower_) throw Error(ErrorCode::InvalidArgument, "value is not rational");
  return coeffs_[0];
}

int TowerReal::sign() const { return level_sign(tower_.get(), coeffs_); }

TowerReal operator+(const TowerReal& x, const TowerReal& y) {
  if (!x.tower_ && !y.tower_) return TowerReal(x.coeffs_[0] + y.coeffs_[0]);
  Unified u = unify(x, y);
  return TowerReal(u.tower, add(u.x, u.y));
}

TowerReal operator-(const TowerReal& x, const TowerReal& y) {
  if (!x.tower_ && !y.tower_) return TowerReal(x.coeffs_[0] - y.coeffs_[0]);
  Unified u = unify(x, y);
  return TowerReal(u.tower, sub(u.x, u.y));
}

TowerReal operator*(const TowerReal& x, const TowerReal& y) {
  if (!x.tower_ && !y.tower_) return TowerReal(x.coeffs_[0] * y.coeffs_[0]);
  if (!y.tower_) return TowerReal(x.tower_, scale(x.coeffs_, y.coeffs_[0]));
  if (!x.tower_) return TowerReal(y.tower_, scale(y.coeffs_, x.coeffs_[0]));
  Unified u = unify(x, y);
  return TowerReal(u.tower, mul(u.tower.get(), u.x, u.y));
}

TowerReal operator/(const TowerReal& x, const TowerReal& y) {
  if (y.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  if (!y.tower_) return TowerReal(x.tower_, scale(x.coeffs_, 1 / y.coeffs_[0]));
  return x * y.inverse();
}

TowerReal TowerReal::operator-() const { return TowerReal(tower_, neg(coeffs_)); }

TowerReal TowerReal::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  return TowerReal(tower_, level_inverse(tower_.get(), coeffs_));
}

bool operator==(const TowerReal& x, const TowerReal& y) {
  if (x.tower_ == y.tower_) return x.coeffs_ == y.coeffs_;
  return (x - y).is_zero();
}

int compare(const TowerReal& x, const TowerReal& y) {
  if (!x.tower_ && !y.tower_) {
    const int c = cmp(x.coeffs_[0], y.coeffs_[0]);
    return (c > 0) - (c < 0);
  }
  return (x - y).sign();
}

Interval TowerReal::enclose(Precision bits) const {
  std::vector<const TowerLevel*> chain;
  for (const TowerLevel* t = tower_.get(); t; t = t->parent.get()) chain.push_back(t);
  std::reverse(chain.begin(), chain.end());
  // Generators are evaluated with a guard margin; nested square roots lose a
  // little accuracy at each level.
  const Precision work = bits + 32 * static_cast<Precision>(chain.size());
  std::vector<Interval> gens;
  gens.reserve(chain.size());
  auto eval = [&](auto&& self, std::size_t d, CSpan x) -> Interval {
    if (d == 0) return Interval(x[0], work);
    const std::size_t h = x.size() / 2;
    Interval p = self(self, d - 1, x.first(h));
    const CSpan q = x.subspan(h);
    if (all_zero(q)) return p;
    return p + self(self, d - 1, q) * gens[d - 1];
  };
  for (std::size_t i = 0; i < chain.size(); ++i) {
    gens.push_back(eval(eval, i, chain[i]->radicand).sqrt());
  }
  return eval(eval, chain.size(), coeffs_);
}

double TowerReal::approx() const { return enclose(128).mid(); }

TowerReal TowerReal::lifted_to(const Tower& target) const {
  if (tower_ == target) return *this;
  if (!structurally_equal(ancestor(target.get(), depth()), tower_.get()))
    throw Error(ErrorCode::InvalidArgument, "target tower does not extend this value's tower");
  TowerReal r;
  r.tower_ = target;
  r.coeffs_ = padded(coeffs_, size_at(target.get()));
  return r;  // deliberately untrimmed
}

std::optional<TowerReal> sqrt_in_tower(const TowerReal& x) {
  auto r = sqrt_in(x.tower().get(), x.coeffs());
  if (!r) return std::nullopt;
  return TowerReal(x.tower(), std::move(*r));
}

TowerReal sqrt_adjoin(const TowerReal& x, std::uint64_t trial_bound) {
  const int s = x.sign();
  if (s < 0) throw Error(ErrorCode::NegativeRadicand, "square root of a negative number");
  if (s == 0) return TowerReal();
  if (x.is_rational()) {
    const Rational& q = x.as_rational();
    const SquarefreeSplit split = squarefree_split(q.get_num() * q.get_den(), trial_bound);
    const Rational coef = make_rational(split.root, q.get_den());
    if (split.kernel == 1) return TowerReal(coef);
    auto level = std::make_shared<TowerLevel>(TowerLevel{nullptr, {Rational(split.kernel)}, 1});
    return TowerReal(level, {Rational(0), coef});
  }
  if (auto r = sqrt_in_tower(x)) return *r;
  const std::size_t d = x.depth();
  auto level = std::make_shared<TowerLevel>(
      TowerLevel{x.tower(), std::vector<Rational>(x.coeffs().begin(), x.coeffs().end()), d + 1});
  return TowerReal(level, generator(d, size_at(level.get())));
}

Tower common_tower(std::span<const TowerReal> values) {
  Tower acc;
  for (const TowerReal& v : values) {
    if (!v.tower() || v.tower() == acc) continue;
    if (depth(acc) >= v.depth() && structurally_equal(ancestor(acc.get(), v.depth()), v.tower().get())) continue;
    if (v.depth() > depth(acc) && structurally_equal(ancestor(v.tower().get(), depth(acc)), acc.get())) {
      acc = v.tower();
      continue;
    }
    acc = merge(acc, v.tower()).target;
  }
  return acc;
}

void unify_towers(std::span<TowerReal> values) {
  const Tower common = common_tower(values);
  for (TowerReal& v : values) {
    if (!v.tower()) continue;
    const Embedding emb = merge(common, v.tower());
    // `common` already contains every field, so no level is added.
    // Trimming walks parent pointers, so the result sits on common's chain.
    v = TowerReal(emb.target, map_into(v.tower().get(), v.coeffs(), emb));
  }
}

}  // namespace equicut
