#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "hh/bmodule.hpp"
#include "hh/errors.hpp"

namespace hh::bmod {

LoweringPolynomial::LoweringPolynomial(std::vector<Term> terms) : terms_(std::move(terms)) { normalize(); }

LoweringPolynomial LoweringPolynomial::one() { return LoweringPolynomial({Term{1, {}}}); }

void LoweringPolynomial::normalize() {
  std::map<std::vector<int>, Rational> acc;
  for (auto& t : terms_) acc[t.word] += t.coef;
  terms_.clear();
  for (auto& [w, c] : acc)
    if (!c.is_zero()) terms_.push_back({c, w});
  if (terms_.size() > 1) {
    auto deg = [](const std::vector<int>& w) {
      std::vector<int> d(10, 0);
      for (int x : w) ++d.at(x);
      return d;
    };
    auto d0 = deg(terms_[0].word);
    for (const auto& t : terms_)
      if (deg(t.word) != d0) throw InvalidArgument("lowering polynomial is not weight-homogeneous");
  }
}

namespace {

struct Parser {
  std::string_view s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && (std::isspace(static_cast<unsigned char>(s[pos])) || s[pos] == '*')) ++pos;
  }
  bool at_end() {
    skip();
    return pos >= s.size();
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw InvalidArgument("cannot parse polynomial '" + std::string(s) + "' at " + std::to_string(pos) + ": " + msg);
  }
  long number() {
    std::size_t b = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (b == pos) fail("expected a number");
    return std::stol(std::string(s.substr(b, pos - b)));
  }
  int letter() {
    ++pos;  // 'f'
    if (pos < s.size() && s[pos] == '_') ++pos;
    int idx;
    if (pos < s.size() && s[pos] == '{') {
      ++pos;
      idx = static_cast<int>(number());
      if (pos >= s.size() || s[pos] != '}') fail("expected '}'");
      ++pos;
    } else {
      if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected generator index");
      idx = s[pos++] - '0';
    }
    if (idx < 1) fail("generator index must be positive");
    return idx;
  }
};

}  // namespace

LoweringPolynomial LoweringPolynomial::parse(std::string_view s) {
  Parser p{s};
  std::vector<Term> terms;
  bool first = true;
  while (!p.at_end()) {
    Rational sign = 1;
    if (s[p.pos] == '+' || s[p.pos] == '-') {
      if (s[p.pos] == '-') sign = -1;
      ++p.pos;
      p.skip();
    } else if (!first) {
      p.fail("expected '+' or '-'");
    }
    first = false;
    Rational coef = 1;
    bool have = false;
    if (p.pos < s.size() && std::isdigit(static_cast<unsigned char>(s[p.pos]))) {
      long num = p.number();
      long den = 1;
      if (p.pos < s.size() && s[p.pos] == '/') {
        ++p.pos;
        den = p.number();
      }
      coef = Rational(num, den);
      have = true;
    }
    std::vector<int> word;
    for (;;) {
      p.skip();
      if (p.pos >= s.size() || s[p.pos] != 'f') break;
      int idx = p.letter();
      long e = 1;
      if (p.pos < s.size() && s[p.pos] == '^') {
        ++p.pos;
        e = p.number();
      }
      for (long k = 0; k < e; ++k) word.push_back(idx);
      have = true;
    }
    if (!have) p.fail("empty term");
    terms.push_back({sign * coef, word});
  }
  if (terms.empty()) p.fail("empty polynomial");
  return LoweringPolynomial(terms);
}

std::vector<int> LoweringPolynomial::degree(int m) const {
  std::vector<int> d(m - 1, 0);
  if (terms_.empty()) return d;
  for (int x : terms_[0].word) {
    if (x > m - 1) throw InvalidArgument("generator f" + std::to_string(x) + " out of range");
    ++d[x - 1];
  }
  return d;
}

Weight LoweringPolynomial::weight(const roots::RootSystemA& sys) const {
  Weight w = sys.zero();
  auto d = degree(sys.m());
  for (int i = 1; i < sys.m(); ++i) w += d[i - 1] * sys.simple_root(i);
  return w;
}

LoweringPolynomial LoweringPolynomial::reversed() const {
  std::vector<Term> t = terms_;
  for (auto& x : t) std::reverse(x.word.begin(), x.word.end());
  return LoweringPolynomial(t);
}

LoweringPolynomial LoweringPolynomial::operator*(const LoweringPolynomial& o) const {
  std::vector<Term> t;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      auto w = a.word;
      w.insert(w.end(), b.word.begin(), b.word.end());
      t.push_back({a.coef * b.coef, w});
    }
  return LoweringPolynomial(t);
}

LoweringPolynomial LoweringPolynomial::operator+(const LoweringPolynomial& o) const {
  std::vector<Term> t = terms_;
  t.insert(t.end(), o.terms_.begin(), o.terms_.end());
  return LoweringPolynomial(t);
}

LoweringPolynomial LoweringPolynomial::scaled(const Rational& c) const {
  std::vector<Term> t = terms_;
  for (auto& x : t) x.coef *= c;
  return LoweringPolynomial(t);
}

bool LoweringPolynomial::operator==(const LoweringPolynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t k = 0; k < terms_.size(); ++k)
    if (terms_[k].coef != o.terms_[k].coef || terms_[k].word != o.terms_[k].word) return false;
  return true;
}

std::string LoweringPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    Rational c = t.coef;
    if (c.sign() < 0) {
      os << (k ? " - " : "-");
      c = -c;
    } else if (k) {
      os << " + ";
    }
    if (c != 1 || t.word.empty()) os << c;
    std::size_t i = 0;
    while (i < t.word.size()) {
      std::size_t j = i;
      while (j < t.word.size() && t.word[j] == t.word[i]) ++j;
      if (t.word[i] < 10)
        os << "f" << t.word[i];
      else
        os << "f{" << t.word[i] << "}";
      if (j - i > 1) os << "^" << (j - i);
      i = j;
    }
  }
  return os.str();
}

}  // namespace hh::bmod
