#include "hh/cli/expr.hpp"

#include <cctype>

#include "hh/springer.hpp"

namespace hh::cli {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Expr parse() {
    Expr e = sum();
    skip();
    if (p_ != s_.size()) fail("unexpected '" + std::string(s_.substr(p_, 1)) + "'");
    return e;
  }

 private:
  std::string_view s_;
  std::size_t p_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(p_, msg); }

  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  bool eat(std::string_view tok) {
    skip();
    if (s_.substr(p_, tok.size()) == tok) {
      p_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view tok) {
    if (!eat(tok)) fail("expected '" + std::string(tok) + "'");
  }
  int integer() {
    skip();
    std::size_t start = p_;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
    if (start == p_) fail("expected an integer");
    if (p_ - start > 4) {
      p_ = start;
      fail("integer too large");
    }
    return std::stoi(std::string(s_.substr(start, p_ - start)));
  }
  bool word_follows(std::string_view w) {
    skip();
    if (s_.substr(p_, w.size()) != w) return false;
    std::size_t q = p_ + w.size();
    return q >= s_.size() || !(std::isalnum(static_cast<unsigned char>(s_[q])) || s_[q] == '_');
  }

  Expr sum() {
    Expr e = tensor();
    while (eat("(+)") || eat("⊕") || eat("+")) e = Expr{Expr::Op::Sum, "", 0, 0, {std::move(e), tensor()}};
    return e;
  }
  Expr tensor() {
    Expr e = unary();
    while (eat("(x)") || eat("⊗")) e = Expr{Expr::Op::Tensor, "", 0, 0, {std::move(e), unary()}};
    return e;
  }
  Expr power(Expr::Op op) {
    std::size_t at = p_;
    int k = integer();
    if (k > kMaxPower) {
      p_ = at;
      fail("power " + std::to_string(k) + " exceeds " + std::to_string(kMaxPower));
    }
    expect("(");
    Expr inner = sum();
    expect(")");
    return Expr{op, "", k, 0, {std::move(inner)}};
  }
  Expr unary() {
    if (eat("wedge^") || eat("Λ^") || eat("∧^")) return power(Expr::Op::Wedge);
    if (eat("sym^") || eat("S^")) return power(Expr::Op::Sym);
    if (word_follows("dual")) {
      eat("dual");
      expect("(");
      Expr inner = sum();
      expect(")");
      return Expr{Expr::Op::Dual, "", 0, 0, {std::move(inner)}};
    }
    Expr e = primary();
    if (eat("^*")) e = Expr{Expr::Op::Dual, "", 0, 0, {std::move(e)}};
    return e;
  }
  Expr primary() {
    skip();
    if (p_ >= s_.size()) fail("unexpected end of input");
    if (s_.substr(p_, 2) == "V(") {
      p_ += 2;
      int k = integer();
      expect(",");
      int r = integer();
      expect(")");
      return Expr{Expr::Op::V, "", k, r, {}};
    }
    if (eat("(")) {
      Expr e = sum();
      expect(")");
      return e;
    }
    for (std::string_view a : {"trivial", "g", "b", "n", "u"})
      if (word_follows(a)) {
        p_ += a.size();
        return Expr{Expr::Op::Atom, std::string(a), 0, 0, {}};
      }
    fail("expected an atom (g, b, n, u, trivial), V(k,r) or '('");
  }
};

int prec(const Expr& e) {
  switch (e.op) {
    case Expr::Op::Sum: return 0;
    case Expr::Op::Tensor: return 1;
    default: return 2;
  }
}

std::string wrap(const Expr& e, bool paren) { return paren ? "(" + render_expr(e) + ")" : render_expr(e); }

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string render_expr(const Expr& e) {
  switch (e.op) {
    case Expr::Op::Atom: return e.atom;
    case Expr::Op::V: return "V(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
    case Expr::Op::Wedge: return "wedge^" + std::to_string(e.a) + "(" + render_expr(e.kids[0]) + ")";
    case Expr::Op::Sym: return "sym^" + std::to_string(e.a) + "(" + render_expr(e.kids[0]) + ")";
    case Expr::Op::Dual: return "dual(" + render_expr(e.kids[0]) + ")";
    case Expr::Op::Tensor:
    case Expr::Op::Sum: {
      int p = prec(e);
      // binary operators parse left-assoc, so a right child of equal precedence needs parens
      std::string op = e.op == Expr::Op::Sum ? " (+) " : " (x) ";
      return wrap(e.kids[0], prec(e.kids[0]) < p) + op + wrap(e.kids[1], prec(e.kids[1]) <= p);
    }
  }
  return {};
}

bmod::BModule evaluate(const Expr& e, int m) {
  switch (e.op) {
    case Expr::Op::Atom:
      if (e.atom == "g") return bmod::adjoint_g(m);
      if (e.atom == "b") return bmod::sub_b(m);
      if (e.atom == "n") return bmod::sub_n(m);
      if (e.atom == "u") return bmod::quotient_u(m);
      return bmod::trivial(m);
    case Expr::Op::V: return springer::build_vk_component(m, e.a, e.b).module;
    case Expr::Op::Wedge: return bmod::wedge(evaluate(e.kids[0], m), e.a);
    case Expr::Op::Sym: return bmod::sym(evaluate(e.kids[0], m), e.a);
    case Expr::Op::Dual: return bmod::dual(evaluate(e.kids[0], m));
    case Expr::Op::Tensor: return bmod::tensor(evaluate(e.kids[0], m), evaluate(e.kids[1], m));
    case Expr::Op::Sum: return bmod::direct_sum(evaluate(e.kids[0], m), evaluate(e.kids[1], m));
  }
  throw InvalidArgument("bad expression");
}

}  // namespace hh::cli
