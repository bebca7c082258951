#include "hh/cli/commands.hpp"

#include <chrono>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "hh/bgg.hpp"
#include "hh/ce_oracle.hpp"
#include "hh/cli/cache.hpp"
#include "hh/cli/expr.hpp"
#include "hh/cli/render.hpp"
#include "hh/cli/verify.hpp"
#include "hh/coinvariants.hpp"
#include "hh/errors.hpp"

namespace hh::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::optional<Cache> open_cache(const RunOptions& opt) {
  if (!opt.use_cache) return std::nullopt;
  return Cache(opt.cache_dir.empty() ? Cache::default_dir() : opt.cache_dir);
}

json diamond_to_json(const bgg::HodgeDiamond& d) { return json::parse(render_json(d)); }

std::string dims_str(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << ")";
  return os.str();
}

bgg::HodgeDiamond compute_diamond(int m, const std::string& method, const RunOptions& opt, std::ostream& err) {
  json req{{"command", "diamond"}, {"m", m}, {"method", method}};
  auto cache = open_cache(opt);
  if (cache)
    if (auto hit = cache->get(req)) {
      auto d = parse_json(hit->dump());
      for (const auto& [ij, h] : d.entries)
        err << "entry (" << ij.first << "," << ij.second << ") method=" << method << " cached h=" << h << "\n";
      return d;
    }
  auto t0 = Clock::now();
  bgg::HodgeDiamond d;
  if (method == "bgg") {
    bgg::DiamondOptions o;
    o.jobs = opt.jobs;
    o.log = [&](const bgg::EntryLog& l) {
      err << "entry (" << l.i << "," << l.j << ") method=bgg V(" << l.k << "," << l.r << ")";
      if (l.mirrored) {
        err << " mirrored from (" << l.i << "," << 2 * (m * (m - 1) / 2) - l.j << ")\n";
        return;
      }
      err << " window=" << l.window_weights << " terms=" << dims_str(l.term_dims) << " " << std::fixed
          << std::setprecision(3) << l.seconds << "s\n";
      err.unsetf(std::ios::floatfield);
    };
    d = bgg::hodge_diamond(m, o);
  } else if (method == "ce") {
    d = ce_diamond(m, opt.jobs, [&](int i, int j, double s) {
      err << "entry (" << i << "," << j << ") method=ce V(" << j << "," << (i + j) / 2 << ") " << std::fixed
          << std::setprecision(3) << s << "s\n";
      err.unsetf(std::ios::floatfield);
    });
  } else {
    throw InvalidArgument("unknown method " + method);
  }
  if (cache) cache->put(req, diamond_to_json(d), since(t0));
  return d;
}

template <class F>
int guarded(std::ostream& err, F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
}

}  // namespace

roots::Weight parse_weight(const std::string& text, int m) {
  roots::RootSystemA sys(m);
  if (text == "0" || text == "zero") return sys.zero();
  if (text == "rho") return sys.rho();
  if (text == "theta") return sys.fundamental(1) + sys.fundamental(m - 1);
  std::string s;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ') s += c;
  std::vector<int> c;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      std::size_t used = 0;
      c.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw InvalidArgument("");
    } catch (const std::exception&) {
      throw InvalidArgument("bad weight '" + text + "'");
    }
  }
  if (static_cast<int>(c.size()) != m - 1)
    throw InvalidArgument("weight '" + text + "' needs " + std::to_string(m - 1) + " coordinates");
  return roots::Weight(c);
}

int cmd_diamond(int m, const std::string& method, const std::string& format, const RunOptions& opt, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    render(bgg::HodgeDiamond{}, format);  // reject a bad format before computing
    if (method != "both") {
      out << render(compute_diamond(m, method, opt, err), format);
      return static_cast<int>(kOk);
    }
    auto a = compute_diamond(m, "bgg", opt, err);
    auto b = compute_diamond(m, "ce", opt, err);
    out << render(a, format);
    int bad = 0;
    std::ostringstream rep;
    for (const auto& [ij, h] : a.entries) {
      long g = b.at(ij.first, ij.second);
      if (g != h) ++bad;
      rep << "agreement (" << ij.first << "," << ij.second << ") bgg=" << h << " ce=" << g << (g == h ? " ok" : " MISMATCH")
          << "\n";
    }
    rep << "agreement " << a.entries.size() - bad << "/" << a.entries.size() << " entries, totals " << a.total()
        << " vs " << b.total() << "\n";
    // keep json/csv on stdout machine-readable
    (format == "pretty" || format == "latex" ? out : err) << rep.str();
    return static_cast<int>(bad ? kMismatch : kOk);
  });
}

int cmd_cohomology(const std::string& expr, int m, const std::string& lam_text, const std::string& method,
                   const std::string& format, const RunOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (format != "pretty" && format != "json") throw InvalidArgument("cohomology formats are pretty and json");
    Expr e = parse_expr(expr);
    auto lam = parse_weight(lam_text, m);
    if (!lam.is_dominant()) throw NotDominant(lam.str() + " is not dominant");
    auto run = [&](const std::string& meth) {
      json req{{"command", "cohomology"}, {"expr", render_expr(e)}, {"m", m}, {"lam", lam.c}, {"method", meth}};
      auto cache = open_cache(opt);
      if (cache)
        if (auto hit = cache->get(req)) {
          err << "cohomology " << render_expr(e) << " method=" << meth << " cached\n";
          return *hit;
        }
      auto t0 = Clock::now();
      auto E = evaluate(e, m);
      json res;
      if (meth == "bgg") {
        auto p = bgg::multiplicity(E, lam, opt.jobs);
        res = {{"dims", p.dims}, {"route", p.route}};
      } else if (meth == "ce") {
        res = {{"dims", ce::ce_cohomology(E, lam, ce::kDefaultBudget, opt.jobs)}, {"route", "ce"}};
      } else {
        throw InvalidArgument("unknown method " + meth);
      }
      err << "cohomology " << render_expr(e) << " dim=" << E.dim() << " method=" << meth << " route=" << res["route"].get<std::string>()
          << " " << std::fixed << std::setprecision(3) << since(t0) << "s\n";
      err.unsetf(std::ios::floatfield);
      if (cache) cache->put(req, res, since(t0));
      return res;
    };
    std::vector<std::string> methods = method == "both" ? std::vector<std::string>{"bgg", "ce"} : std::vector{method};
    std::vector<json> results;
    for (const auto& meth : methods) results.push_back(run(meth));
    bool agree = results.front()["dims"] == results.back()["dims"];
    if (format == "json") {
      json j{{"expr", render_expr(e)}, {"m", m}, {"lam", lam.c}, {"tool_version", kToolVersion}};
      for (std::size_t k = 0; k < methods.size(); ++k) j[methods[k]] = results[k];
      out << j.dump(2) << "\n";
    } else {
      for (std::size_t k = 0; k < methods.size(); ++k)
        out << dims_str(results[k]["dims"].get<std::vector<std::size_t>>())
            << (methods.size() > 1 ? "  [" + methods[k] + "]" : "") << "\n";
    }
    if (!agree) err << "bgg and ce disagree\n";
    return static_cast<int>(agree ? kOk : kMismatch);
  });
}

int cmd_compare_dc(int m, const RunOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto D = compute_diamond(m, "bgg", opt, err);
    auto t0 = Clock::now();
    auto dc = coinv::dc_table(m, 0, opt.jobs);
    err << "dc_table m=" << m << " total=" << dc.total() << " " << std::fixed << std::setprecision(3) << since(t0) << "s\n";
    err.unsetf(std::ios::floatfield);
    auto E = coinv::expected_diamond_from_dc(m, dc);
    int n = m * (m - 1) / 2, bad = 0;
    out << "   i   j      h  dc(a,b)      d  match\n";
    for (const auto& [ij, h] : D.entries) {
      auto [i, j] = ij;
      long d = E.at(i, j);
      if (d != h) ++bad;
      out << std::setw(4) << i << std::setw(4) << j << std::setw(7) << h << "  (" << n - (i + j) / 2 << ","
          << (j - i) / 2 << ")" << std::setw(7) << d << "  " << (d == h ? "yes" : "NO") << "\n";
    }
    // DC entries that the diamond cannot see would break the correspondence too
    long dc_total = dc.total();
    out << (bad || dc_total != D.total() ? "mismatch" : "full match") << ", " << D.total() << " = " << dc_total << "\n";
    return static_cast<int>(bad || dc_total != D.total() ? kMismatch : kOk);
  });
}

int cmd_verify(int m, const std::string& suite, const RunOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
      throw InvalidArgument("unknown suite " + suite);
    int failed = 0, total = 0;
    run_suite(m, suite, opt.jobs, [&](const Check& c) {
      ++total;
      if (!c.ok) ++failed;
      out << (c.ok ? "PASS " : "FAIL ") << c.suite << ": " << c.name << " [" << std::fixed << std::setprecision(3)
          << c.seconds << "s]";
      out.unsetf(std::ios::floatfield);
      if (!c.ok) out << " -- " << c.detail;
      out << "\n";
    });
    out << total - failed << "/" << total << " checks passed\n";
    return static_cast<int>(failed ? kMismatch : kOk);
  });
}

}  // namespace hh::cli
