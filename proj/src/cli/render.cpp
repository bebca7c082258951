#include "hh/cli/render.hpp"

#include <json.hpp>
#include <sstream>

#include "hh/errors.hpp"

namespace hh::cli {

using nlohmann::json;

std::string render_json(const bgg::HodgeDiamond& d) {
  json j;
  j["m"] = d.m;
  j["entries"] = json::array();
  for (const auto& [ij, h] : d.entries) j["entries"].push_back({{"i", ij.first}, {"j", ij.second}, {"h", h}});
  j["total"] = d.total();
  j["tool_version"] = kToolVersion;
  return j.dump(2) + "\n";
}

bgg::HodgeDiamond parse_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("bad diamond JSON: ") + e.what());
  }
  bgg::HodgeDiamond d;
  try {
    d.m = j.at("m").get<int>();
    for (const auto& e : j.at("entries")) d.entries[{e.at("i").get<int>(), e.at("j").get<int>()}] = e.at("h").get<long>();
    if (j.contains("total") && j["total"].get<long>() != d.total()) throw InvalidArgument("total does not match entries");
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("bad diamond JSON: ") + e.what());
  }
  return d;
}

std::string render_csv(const bgg::HodgeDiamond& d) {
  std::ostringstream os;
  os << "i,j,h\n";
  for (const auto& [ij, h] : d.entries) os << ij.first << "," << ij.second << "," << h << "\n";
  return os.str();
}

std::string render_latex(const bgg::HodgeDiamond& d) {
  // same layout as the printed tables: row i+j = 2t, column j-i = 2c, footer with the column labels
  int n = d.n();
  std::ostringstream os;
  os << "\\begin{array}{|c||" << std::string(n + 1, 'c') << "|}\\hline\n";
  for (int t = 0; t <= n; ++t) {
    os << "  \\scriptstyle{j+i=" << 2 * t << "}";
    for (int c = 0; c <= n; ++c) {
      os << " & ";
      if (c <= t) os << d.at(t - c, t + c);
    }
    os << " \\\\ \\hline\n";
  }
  os << "  \\scriptstyle{h^{i,j}}";
  for (int c = 0; c <= n; ++c) os << " & \\scriptstyle{j-i=" << 2 * c << "}";
  os << " \\\\ \\hline\n\\end{array}\n";
  return os.str();
}

std::string render_pretty(const bgg::HodgeDiamond& d) {
  auto rows = d.rows();
  std::size_t w = 1;
  for (const auto& r : rows)
    for (long x : r) w = std::max(w, std::to_string(x).size());
  std::ostringstream os;
  os << "sl_" << d.m << " formal Hodge diamond (row t: i+j = 2t, left to right j-i = 0, 2, ...)\n";
  for (std::size_t t = 0; t < rows.size(); ++t) {
    os << "  t=" << t << ":";
    for (long x : rows[t]) {
      std::string s = std::to_string(x);
      os << " " << std::string(w - s.size(), ' ') << s;
    }
    os << "\n";
  }
  os << "total " << d.total() << "\n";
  return os.str();
}

std::string render(const bgg::HodgeDiamond& d, std::string_view format) {
  if (format == "json") return render_json(d);
  if (format == "csv") return render_csv(d);
  if (format == "latex") return render_latex(d);
  if (format == "pretty") return render_pretty(d);
  throw InvalidArgument("unknown format " + std::string(format));
}

}  // namespace hh::cli
