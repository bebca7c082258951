#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "hh/cli/cache.hpp"
#include "hh/cli/commands.hpp"
#include "hh/cli/expr.hpp"
#include "hh/cli/render.hpp"
#include "hh/cli/verify.hpp"

using namespace hh;
using namespace hh::cli;
namespace fs = std::filesystem;

namespace {

Expr random_expr(std::mt19937& rng, int depth) {
  int pick = depth <= 0 ? static_cast<int>(rng() % 2) : static_cast<int>(rng() % 7);
  static const char* atoms[] = {"g", "b", "n", "u", "trivial"};
  switch (pick) {
    case 0: return Expr{Expr::Op::Atom, atoms[rng() % 5], 0, 0, {}};
    case 1: return Expr{Expr::Op::V, "", static_cast<int>(rng() % 4), static_cast<int>(rng() % 4), {}};
    case 2: return Expr{Expr::Op::Wedge, "", static_cast<int>(rng() % 4), 0, {random_expr(rng, depth - 1)}};
    case 3: return Expr{Expr::Op::Sym, "", static_cast<int>(rng() % 4), 0, {random_expr(rng, depth - 1)}};
    case 4: return Expr{Expr::Op::Dual, "", 0, 0, {random_expr(rng, depth - 1)}};
    case 5: return Expr{Expr::Op::Tensor, "", 0, 0, {random_expr(rng, depth - 1), random_expr(rng, depth - 1)}};
    default: return Expr{Expr::Op::Sum, "", 0, 0, {random_expr(rng, depth - 1), random_expr(rng, depth - 1)}};
  }
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("hh-test-" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("grammar and precedence") {
    auto e = parse_expr("wedge^2(n) (x) u");
    CHECK(e.op == Expr::Op::Tensor);
    CHECK(e.kids[0].op == Expr::Op::Wedge);
    CHECK(e.kids[0].a == 2);
    CHECK(parse_expr("Λ^2(n) ⊗ u") == e);
    CHECK(parse_expr("∧^2(n)⊗u") == e);
    auto s = parse_expr("g (+) n (x) u");
    CHECK(s.op == Expr::Op::Sum);
    CHECK(s.kids[1].op == Expr::Op::Tensor);
    CHECK(parse_expr("g + n ⊗ u") == s);
    CHECK(parse_expr("n^*") == parse_expr("dual(n)"));
    CHECK(parse_expr("V(2,1)").op == Expr::Op::V);
    CHECK(parse_expr("S^2(u)") == parse_expr("sym^2(u)"));
    CHECK(render_expr(parse_expr("(g (x) n) (x) u")) == "g (x) n (x) u");
    CHECK(render_expr(parse_expr("g (x) (n (x) u)")) == "g (x) (n (x) u)");
  }

  TEST_CASE("parse errors carry positions") {
    auto pos = [](const std::string& s) {
      try {
        parse_expr(s);
      } catch (const ParseError& e) {
        return static_cast<long>(e.position());
      }
      return -1L;
    };
    CHECK(pos("n (x) ") == 6);
    CHECK(pos("wedge^(n)") == 6);
    CHECK(pos("q") == 0);
    CHECK(pos("n u") == 2);
    CHECK(pos("V(1,") == 4);
    CHECK(pos("(n (x) u") == 8);
    CHECK(pos("wedge^99(n)") == 6);
    CHECK(pos("nn") == 0);
  }

  TEST_CASE("render then parse gives the same tree") {
    std::mt19937 rng(5);
    for (int t = 0; t < 300; ++t) {
      auto e = random_expr(rng, 4);
      CHECK(parse_expr(render_expr(e)) == e);
    }
  }

  TEST_CASE("evaluation") {
    CHECK(evaluate(parse_expr("n (x) u"), 3).dim() == 9);
    CHECK(evaluate(parse_expr("g (+) trivial"), 3).dim() == 9);
    CHECK(evaluate(parse_expr("V(1,1)"), 3).character() == bmod::sub_n(3).character());
    CHECK(evaluate(parse_expr("dual(u)"), 4).character() == bmod::sub_n(4).character());
  }

  TEST_CASE("json round trip and other formats") {
    for (int m : {2, 3}) {
      auto d = bgg::hodge_diamond(m);
      CHECK(parse_json(render_json(d)) == d);
      CHECK(render_json(parse_json(render_json(d))) == render_json(d));
    }
    auto d = bgg::hodge_diamond(3);
    CHECK(render_csv(d).rfind("i,j,h\n0,0,1\n", 0) == 0);
    CHECK(render_latex(d).find("1 & 2 & 2 & 1") != std::string::npos);
    CHECK(render_pretty(d).find("total 16") != std::string::npos);
    CHECK_THROWS_AS(parse_json("{\"m\": 2}"), InvalidArgument);
    CHECK_THROWS_AS(parse_json("{\"m\":2,\"entries\":[{\"i\":0,\"j\":0,\"h\":1}],\"total\":5}"), InvalidArgument);
  }

  TEST_CASE("fingerprints are stable and key-order independent") {
    auto a = nlohmann::json::parse(R"({"m":3,"method":"bgg","command":"diamond"})");
    auto b = nlohmann::json::parse(R"({"command":"diamond","m":3,"method":"bgg"})");
    CHECK(fingerprint(a) == fingerprint(b));
    CHECK(fingerprint(a).size() == 16);
    b["m"] = 4;
    CHECK(fingerprint(a) != fingerprint(b));
    // FNV-1a reference values of "{}" and "[]"
    CHECK(fingerprint(nlohmann::json::object()) == "08f44b07b5901a25");
    CHECK(fingerprint(nlohmann::json::array()) == "09612b07b5ecb5a5");
  }

  TEST_CASE("cached results equal fresh ones") {
    TempDir tmp;
    RunOptions opt;
    opt.cache_dir = tmp.path;
    for (int m : {2, 3}) {
      std::ostringstream fresh, cached, bypass, err;
      CHECK(cmd_diamond(m, "bgg", "json", opt, fresh, err) == kOk);
      CHECK(cmd_diamond(m, "bgg", "json", opt, cached, err) == kOk);
      RunOptions nc = opt;
      nc.use_cache = false;
      CHECK(cmd_diamond(m, "bgg", "json", nc, bypass, err) == kOk);
      CHECK(fresh.str() == cached.str());
      CHECK(bypass.str() == fresh.str());
      CHECK(err.str().find("cached") != std::string::npos);
    }
    std::ostringstream a, b, err;
    CHECK(cmd_cohomology("n (x) u", 3, "rho", "bgg", "pretty", opt, a, err) == kOk);
    CHECK(cmd_cohomology("n ⊗ u", 3, "1,1", "bgg", "pretty", opt, b, err) == kOk);
    CHECK(a.str() == "(0,2,0,0)\n");
    CHECK(b.str() == a.str());
    std::size_t files = 0;
    for (const auto& f : fs::directory_iterator(tmp.path)) {
      CHECK(f.path().extension() == ".json");
      ++files;
    }
    CHECK(files == 3);
  }

  TEST_CASE("command outputs and exit codes") {
    RunOptions opt;
    opt.use_cache = false;
    std::ostringstream out, err;
    CHECK(cmd_cohomology("n ⊗ u", 3, "0", "bgg", "pretty", opt, out, err) == kOk);
    CHECK(out.str() == "(1,0,0,0)\n");
    out.str("");
    CHECK(cmd_cohomology("wedge^2(n) (x) u", 3, "0", "both", "pretty", opt, out, err) == kOk);
    CHECK(out.str() == "(0,3,0,0)  [bgg]\n(0,3,0,0)  [ce]\n");
    out.str("");
    CHECK(cmd_cohomology("trivial", 4, "0", "bgg", "pretty", opt, out, err) == kOk);
    CHECK(out.str() == "(1,0,0,0,0,0,0)\n");
    out.str("");
    err.str("");
    CHECK(cmd_cohomology("n (x", 3, "0", "bgg", "pretty", opt, out, err) == kError);
    CHECK(out.str().empty());
    CHECK(err.str().find("position") != std::string::npos);
    CHECK(cmd_cohomology("n", 3, "-1,0", "bgg", "pretty", opt, out, err) == kError);
    CHECK(cmd_diamond(3, "bgg", "yaml", opt, out, err) == kError);
    out.str("");
    CHECK(cmd_diamond(2, "both", "pretty", opt, out, err) == kOk);
    CHECK(out.str().find("agreement 3/3 entries") != std::string::npos);
    out.str("");
    CHECK(cmd_compare_dc(3, opt, out, err) == kOk);
    CHECK(out.str().find("full match, 16 = 16") != std::string::npos);
    out.str("");
    CHECK(cmd_verify(2, "all", opt, out, err) == kOk);
    CHECK(out.str().find("FAIL") == std::string::npos);
  }

  TEST_CASE("weights on the command line") {
    CHECK(parse_weight("0", 3) == roots::Weight::zero(3));
    CHECK(parse_weight("rho", 4) == roots::Weight({1, 1, 1}));
    CHECK(parse_weight("theta", 4) == roots::Weight({1, 0, 1}));
    CHECK(parse_weight("(2, 0)", 3) == roots::Weight({2, 0}));
    CHECK_THROWS_AS(parse_weight("1", 3), InvalidArgument);
    CHECK_THROWS_AS(parse_weight("1,x", 3), InvalidArgument);
  }
}
