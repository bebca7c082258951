#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hh/bgg.hpp"

namespace hh::cli {

struct Check {
  std::string suite, name;
  bool ok = false;
  std::string detail;
  double seconds = 0;
};

using CheckSink = std::function<void(const Check&)>;

// Diamond entry through the CE complex of the full component (no window, no mirroring).
long ce_hodge_entry(int m, int i, int j);
bgg::HodgeDiamond ce_diamond(int m, int jobs = 1, const std::function<void(int, int, double)>& log = {});

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> s{"complex", "duality", "sl2", "oracle", "bwb", "structure"};
  return s;
}

// Runs one suite ("all" runs every suite). Each finished check goes to sink.
std::vector<Check> run_suite(int m, const std::string& suite, int jobs = 1, const CheckSink& sink = {});

}  // namespace hh::cli
