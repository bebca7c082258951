#include "hh/cli/cache.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>
#include <unistd.h>

#include "hh/cli/render.hpp"

namespace hh::cli {

namespace fs = std::filesystem;
using nlohmann::json;

std::string fingerprint(const json& request) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : request.dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

fs::path Cache::default_dir() {
  if (const char* e = std::getenv("SPRINGER_HH_CACHE"); e && *e) return e;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return fs::path(x) / "springer-hh";
  if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".cache" / "springer-hh";
  return fs::temp_directory_path() / "springer-hh";
}

fs::path Cache::path_for(const json& request) const { return dir_ / (fingerprint(request) + ".json"); }

std::optional<json> Cache::get(const json& request) const {
  std::ifstream in(path_for(request));
  if (!in) return std::nullopt;
  try {
    json rec = json::parse(in);
    // a hash collision or stale version is a miss
    if (rec.at("request") != request || rec.at("tool_version") != kToolVersion) return std::nullopt;
    return rec.at("result");
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

void Cache::put(const json& request, const json& result, double seconds) const {
  static std::atomic<unsigned> counter{0};
  std::error_code ec;
  fs::create_directories(dir_, ec);
  json rec{{"fingerprint", fingerprint(request)},
           {"request", request},
           {"result", result},
           {"tool_version", kToolVersion},
           {"seconds", seconds}};
  std::ostringstream tmpname;
  tmpname << fingerprint(request) << ".tmp." << ::getpid() << "." << std::hash<std::thread::id>{}(std::this_thread::get_id())
          << "." << counter++;
  fs::path tmp = dir_ / tmpname.str();
  {
    std::ofstream out(tmp);
    if (!out) return;  // an unwritable cache only costs recomputation
    out << rec.dump(2) << "\n";
    if (!out) {
      fs::remove(tmp, ec);
      return;
    }
  }
  fs::rename(tmp, path_for(request), ec);
  if (ec) fs::remove(tmp, ec);
}

}  // namespace hh::cli
