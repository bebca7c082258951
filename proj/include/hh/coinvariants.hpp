#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hh/bgg.hpp"

namespace hh::coinv {

struct BigradedTable {
  std::map<std::pair<int, int>, long> entries;

  long at(int i, int j) const;
  long total() const;
  int max_degree() const;
  bool operator==(const BigradedTable&) const = default;
};

// Bigraded Hilbert table of C[x,y] / (p_{a,b} : 1 <= a+b <= m + extra).
BigradedTable dc_table(int m, int extra = 0, int jobs = 1);

// h^{i,j} = dc(C(m,2) - (i+j)/2, (j-i)/2)
bgg::HodgeDiamond expected_diamond_from_dc(int m, const BigradedTable& dc);
bgg::HodgeDiamond expected_diamond_from_dc(int m);
long dc_entry_for(int m, const BigradedTable& dc, int i, int j);

// Graded dims of C[x_1..x_m] / (p_1, ..., p_m).
std::vector<long> coinvariant_table(int m);

}  // namespace hh::coinv
