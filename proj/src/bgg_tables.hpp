#pragma once

#include <vector>

namespace hh::bgg::detail {

struct Cell {
  const char* row;
  const char* col;
  const char* poly;
};

const std::vector<Cell>& table(int m);

}  // namespace hh::bgg::detail
