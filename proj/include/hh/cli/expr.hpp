#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hh/bmodule.hpp"
#include "hh/errors.hpp"

namespace hh::cli {

// Bundle expressions.
//   sum     := tensor (('(+)' | '+' | '⊕') tensor)*
//   tensor  := unary (('(x)' | '⊗') unary)*
//   unary   := ('wedge^' | 'Λ^' | '∧^') INT '(' sum ')'
//            | ('sym^' | 'S^') INT '(' sum ')'
//            | 'dual' '(' sum ')'
//            | primary ('^*')?
//   primary := 'g' | 'b' | 'n' | 'u' | 'trivial' | 'V(' INT ',' INT ')' | '(' sum ')'
struct Expr {
  enum class Op { Atom, V, Wedge, Sym, Dual, Tensor, Sum };
  Op op = Op::Atom;
  std::string atom;  // for Atom
  int a = 0, b = 0;  // V(a,b), or the power for Wedge/Sym
  std::vector<Expr> kids;

  bool operator==(const Expr&) const = default;
};

class ParseError : public InvalidArgument {
 public:
  ParseError(std::size_t pos, const std::string& msg)
      : InvalidArgument("at position " + std::to_string(pos) + ": " + msg), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

constexpr int kMaxPower = 64;

Expr parse_expr(std::string_view text);
// Canonical ASCII form; parse_expr(render_expr(e)) == e.
std::string render_expr(const Expr& e);
bmod::BModule evaluate(const Expr& e, int m);

}  // namespace hh::cli
