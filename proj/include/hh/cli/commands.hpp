#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "hh/rootdata.hpp"

namespace hh::cli {

enum ExitCode { kOk = 0, kError = 1, kMismatch = 2 };

struct RunOptions {
  int jobs = 1;
  bool use_cache = true;
  std::filesystem::path cache_dir;  // empty: Cache::default_dir()
};

// "0", "rho", "theta", "a,b,..." or "(a,b,...)" in fundamental coordinates
roots::Weight parse_weight(const std::string& text, int m);

int cmd_diamond(int m, const std::string& method, const std::string& format, const RunOptions& opt, std::ostream& out,
                std::ostream& err);
int cmd_cohomology(const std::string& expr, int m, const std::string& lam, const std::string& method,
                   const std::string& format, const RunOptions& opt, std::ostream& out, std::ostream& err);
int cmd_compare_dc(int m, const RunOptions& opt, std::ostream& out, std::ostream& err);
int cmd_verify(int m, const std::string& suite, const RunOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace hh::cli
