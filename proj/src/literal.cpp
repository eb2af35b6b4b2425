#include "equicut/literal.hpp"

#include <cctype>
#include <cstdio>
#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "equicut/error.hpp"

namespace equicut {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  TowerReal parse() {
    TowerReal v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::Parse, what + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"",
                pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  TowerReal expr() {
    TowerReal acc = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc = acc + term();
      } else if (peek('-')) {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  TowerReal term() {
    TowerReal acc = factor();
    while (peek('*')) {
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  TowerReal factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      TowerReal v = expr();
      expect(')');
      return v;
    }
    if (text_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      expect('(');
      const std::size_t arg_pos = pos_;
      TowerReal arg = expr();
      expect(')');
      if (arg.sign() < 0) {
        throw Error(ErrorCode::NegativeRadicand,
                    "negative sqrt argument at position " + std::to_string(arg_pos) + " in \"" + std::string(text_) + "\"",
                    arg_pos);
      }
      return sqrt_adjoin(arg);
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return rational();
    fail("expected a number, 'sqrt' or '('");
  }

  TowerReal rational() {
    std::string lit;
    if (text_[pos_] == '-') {
      lit += '-';
      ++pos_;
    }
    const std::string num = digits();
    lit += num;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const std::size_t den_pos = pos_;
      const std::string den = digits();
      if (den.find_first_not_of('0') == std::string::npos) {
        pos_ = den_pos;
        fail("zero denominator");
      }
      lit += '/' + den;
    }
    return TowerReal(parse_rational(lit));
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

struct TermKey {
  std::vector<std::string> nested;
  Integer kernel;

  friend bool operator<(const TermKey& a, const TermKey& b) {
    if (a.nested != b.nested) {
      // Fewer nested factors first, so the rational part leads.
      if (a.nested.size() != b.nested.size()) return a.nested.size() < b.nested.size();
      return a.nested < b.nested;
    }
    return a.kernel < b.kernel;
  }
};

bool radicand_is_rational(const TowerLevel& level) {
  for (std::size_t i = 1; i < level.radicand.size(); ++i) {
    if (sgn(level.radicand[i]) != 0) return false;
  }
  return true;
}

}  // namespace

TowerReal parse_number(std::string_view text) { return Parser(text).parse(); }

std::string format_number(const TowerReal& x) {
  std::vector<const TowerLevel*> levels(x.depth());
  for (const TowerLevel* t = x.tower().get(); t; t = t->parent.get()) levels[t->depth - 1] = t;
  std::vector<std::string> nested_text(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (!radicand_is_rational(*levels[i])) {
      nested_text[i] = "sqrt(" + format_number(TowerReal(levels[i]->parent, levels[i]->radicand)) + ")";
    }
  }

  std::map<TermKey, Rational> terms;
  const auto coeffs = x.coeffs();
  for (std::size_t mask = 0; mask < coeffs.size(); ++mask) {
    if (sgn(coeffs[mask]) == 0) continue;
    TermKey key;
    Rational prod(1);
    for (std::size_t bit = 0; bit < levels.size(); ++bit) {
      if (((mask >> bit) & 1U) == 0) continue;
      if (nested_text[bit].empty()) {
        prod *= levels[bit]->radicand[0];
      } else {
        key.nested.push_back(nested_text[bit]);
      }
    }
    std::sort(key.nested.begin(), key.nested.end());
    const SquarefreeSplit split = squarefree_split(prod.get_num() * prod.get_den());
    key.kernel = split.kernel;
    terms[key] += coeffs[mask] * make_rational(split.root, prod.get_den());
  }

  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms) {
    if (sgn(c) == 0) continue;
    std::vector<std::string> radicals;
    if (key.kernel != 1) radicals.push_back("sqrt(" + key.kernel.get_str() + ")");
    radicals.insert(radicals.end(), key.nested.begin(), key.nested.end());
    const bool negative = sgn(c) < 0;
    const Rational mag = negative ? Rational(-c) : c;
    std::string body;
    if (radicals.empty()) {
      body = to_string(mag);
    } else {
      if (mag != 1) body = to_string(mag) + "*";
      for (std::size_t i = 0; i < radicals.size(); ++i) body += (i ? "*" : "") + radicals[i];
    }
    if (first) {
      // The grammar only allows a leading minus on a rational.
      if (negative) out += (radicals.empty() || mag != 1) ? "-" : "-1*";
    } else {
      out += negative ? " - " : " + ";
    }
    out += body;
    first = false;
  }
  return first ? "0" : out;
}

std::string format_decimal(const TowerReal& x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x.approx());
  return buf;
}

}  // namespace equicut
