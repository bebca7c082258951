#include "hh/coinvariants.hpp"

#include <future>

#include "hh/errors.hpp"
#include "hh/exactla.hpp"

namespace hh::coinv {

namespace {

using Mono = std::vector<std::uint8_t>;

// all exponent vectors of length n and total degree d
void compositions(int n, int d, std::vector<std::uint8_t>& cur, std::vector<Mono>& out) {
  if (static_cast<int>(cur.size()) == n - 1) {
    cur.push_back(static_cast<std::uint8_t>(d));
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int a = d; a >= 0; --a) {
    cur.push_back(static_cast<std::uint8_t>(a));
    compositions(n, d - a, cur, out);
    cur.pop_back();
  }
}

// monomials in s sets of m variables (set k occupies slots k*m..k*m+m-1) with multidegree deg
std::vector<Mono> monomials(int m, const std::vector<int>& deg) {
  std::vector<Mono> acc{Mono{}};
  for (int d : deg) {
    std::vector<Mono> part, cur_out;
    std::vector<std::uint8_t> cur;
    compositions(m, d, cur, part);
    for (const auto& a : acc)
      for (const auto& p : part) {
        Mono x = a;
        x.insert(x.end(), p.begin(), p.end());
        cur_out.push_back(std::move(x));
      }
    acc = std::move(cur_out);
  }
  return acc;
}

// dimension of the quotient in multidegree deg; generators are diagonal power sums of
// multidegree e with 1 <= |e| <= gmax
long slice_dim(int m, const std::vector<int>& deg, int gmax) {
  int s = static_cast<int>(deg.size());
  auto target = monomials(m, deg);
  std::map<Mono, exactla::Index> index;
  for (std::size_t k = 0; k < target.size(); ++k) index[target[k]] = static_cast<exactla::Index>(k);
  exactla::Echelon ech(target.size());
  int total = 0;
  for (int d : deg) total += d;
  if (total == 0) return 1;
  for (int g = std::min(gmax, total); g >= 1; --g) {
    std::vector<Mono> gens;
    std::vector<std::uint8_t> cur;
    compositions(s, g, cur, gens);
    for (const auto& e : gens) {
      std::vector<int> rest(s);
      bool ok = true;
      for (int k = 0; k < s; ++k) {
        rest[k] = deg[k] - e[k];
        if (rest[k] < 0) ok = false;
      }
      if (!ok) continue;
      for (const auto& mono : monomials(m, rest)) {
        std::vector<exactla::Entry> row;
        for (int t = 0; t < m; ++t) {
          Mono x = mono;
          for (int k = 0; k < s; ++k) x[k * m + t] += e[k];
          row.push_back({index.at(x), Rational(1)});
        }
        ech.insert(exactla::SparseVector::from_entries(std::move(row)));
        if (ech.rank() == target.size()) return 0;
      }
    }
  }
  return static_cast<long>(target.size() - ech.rank());
}

}  // namespace

long BigradedTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

long BigradedTable::total() const {
  long t = 0;
  for (const auto& [k, v] : entries) t += v;
  return t;
}

int BigradedTable::max_degree() const {
  int d = 0;
  for (const auto& [k, v] : entries)
    if (v) d = std::max(d, k.first + k.second);
  return d;
}

BigradedTable dc_table(int m, int extra, int jobs) {
  if (m < 1) throw InvalidArgument("m must be positive");
  if (m > 5) throw BudgetExceeded("dc_table limited to m <= 5");
  BigradedTable t;
  for (int d = 0;; ++d) {
    std::vector<std::future<long>> fut;
    std::vector<long> vals(d + 1);
    for (int i = 0; i <= d; ++i) {
      auto task = [m, i, d, extra] { return slice_dim(m, {i, d - i}, m + extra); };
      if (jobs > 1)
        fut.push_back(std::async(std::launch::async, task));
      else
        vals[i] = task();
    }
    for (int i = 0; i <= d && jobs > 1; ++i) vals[i] = fut[i].get();
    bool any = false;
    for (int i = 0; i <= d; ++i)
      if (vals[i]) {
        t.entries[{i, d - i}] = vals[i];
        any = true;
      }
    // the algebra is generated in degree one, so an empty degree ends it
    if (!any) break;
  }
  return t;
}

long dc_entry_for(int m, const BigradedTable& dc, int i, int j) {
  if ((i + j) % 2) throw OddParity("i+j must be even, got (" + std::to_string(i) + "," + std::to_string(j) + ")");
  int n = m * (m - 1) / 2;
  return dc.at(n - (i + j) / 2, (j - i) / 2);
}

bgg::HodgeDiamond expected_diamond_from_dc(int m, const BigradedTable& dc) {
  bgg::HodgeDiamond D;
  D.m = m;
  for (auto [i, j] : bgg::diamond_positions(m)) D.entries[{i, j}] = dc_entry_for(m, dc, i, j);
  return D;
}

bgg::HodgeDiamond expected_diamond_from_dc(int m) { return expected_diamond_from_dc(m, dc_table(m)); }

std::vector<long> coinvariant_table(int m) {
  if (m < 1) throw InvalidArgument("m must be positive");
  std::vector<long> out;
  for (int d = 0;; ++d) {
    long v = slice_dim(m, {d}, m);
    if (!v) break;
    out.push_back(v);
  }
  return out;
}

}  // namespace hh::coinv
