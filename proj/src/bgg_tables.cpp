#include "bgg_tables.hpp"

namespace hh::bgg::detail {

// Free-module arrows x -> x*u from node `col` (length j+1) to node `row` (length j).
// Node names are reduced words; "e" is the identity.

const std::vector<Cell>& table(int m) {
  static const std::vector<Cell> sl2 = {
      {"e", "1", "f1"},
  };
  static const std::vector<Cell> sl3 = {
      {"e", "1", "f1"},
      {"e", "2", "f2"},
      {"1", "21", "f2^2"},
      {"1", "12", "-2f1f2 + f2f1"},
      {"2", "12", "f1^2"},
      {"2", "21", "-2f2f1 + f1f2"},
      {"21", "121", "f1"},
      {"12", "121", "f2"},
  };
  static const std::vector<Cell> sl4 = {
      // d0
      {"e", "1", "f1"},
      {"e", "2", "f2"},
      {"e", "3", "f3"},
      // d1
      {"1", "21", "-f2^2"},
      {"1", "12", "2f1f2 - f2f1"},
      {"1", "31", "-f3"},
      {"2", "21", "2f2f1 - f1f2"},
      {"2", "12", "-f1^2"},
      {"2", "32", "f3^2"},
      {"2", "23", "f3f2 - 2f2f3"},
      {"3", "31", "f1"},
      {"3", "32", "f2f3 - 2f3f2"},
      {"3", "23", "f2^2"},
      // d2
      {"21", "121", "-f1"},
      {"21", "321", "f3^3"},
      {"21", "231", "3f2f3 - 2f3f2"},
      {"12", "121", "-f2"},
      {"12", "312", "f3^2"},
      {"12", "123", "6f1f2f3 - 4f2f1f3 - 3f1f3f2 + 2f3f2f1"},
      {"31", "321", "-f3^2f2^2 - 4f3f2f3f2 - 2f2f3f2f3 + 6f3f2^2f3"},
      {"31", "231", "-f2^3"},
      {"31", "312", "4f1f3f2 - 2f3f2f1 - 2f1f2f3 + f2f3f1"},
      {"31", "123", "f1^2f2^2 + 4f1f2f1f2 + 2f2f1f2f1 - 6f1f2^2f1"},
      {"32", "321", "-6f3f2f1 + 4f2f1f3 + 3f1f3f2 - 2f1f2f3"},
      {"32", "312", "f1^2"},
      {"32", "232", "f2"},
      {"23", "231", "3f2f1 - 2f1f2"},
      {"23", "123", "-f1^3"},
      {"23", "232", "f3"},
      // d3
      {"121", "1321", "-f3^3"},
      {"121", "1231", "6f1f2f3 - 4f1f3f2 - 3f2f1f3 + 2f3f2f1"},
      {"121", "2312", "f2^2f3^2 + 4f2f3f2f3 + 2f3f2f3f2 - 6f2f3^2f2"},
      {"321", "1321", "-f1"},
      {"321", "2321", "f2"},
      {"231", "2321", "-f3^2"},
      {"231", "1231", "f1^2"},
      {"231", "2312", "4f2f1f3 - 2f1f2f3 - 2f3f2f1 + f1f3f2"},
      {"312", "1321", "2f2f3 - 3f3f2"},
      {"312", "2312", "f2^3"},
      {"312", "1232", "2f2f1 - 3f1f2"},
      {"123", "1231", "f2"},
      {"123", "1232", "f3"},
      {"232", "2321", "6f3f2f1 - 4f1f3f2 - 3f2f1f3 + 2f1f2f3"},
      {"232", "2312", "-f2^2f1^2 - 4f2f1f2f1 - 2f1f2f1f2 + 6f2f1^2f2"},
      {"232", "1232", "f1^3"},
      // d4
      {"1321", "23121", "f2^2"},
      {"1321", "12321", "f2f1 - 2f1f2"},
      {"2321", "23121", "2f2f1 - f1f2"},
      {"2321", "12321", "-f1^2"},
      {"1231", "12321", "-f3^2"},
      {"1231", "21232", "f3f2 - 2f2f3"},
      {"2312", "23121", "f3"},
      {"2312", "21232", "f1"},
      {"1232", "12321", "2f3f2 - f2f3"},
      {"1232", "21232", "f2^2"},
      // d5
      {"23121", "123121", "-f1"},
      {"12321", "123121", "-f2"},
      {"21232", "123121", "f3"},
  };
  static const std::vector<Cell> none;
  switch (m) {
    case 2: return sl2;
    case 3: return sl3;
    case 4: return sl4;
    default: return none;
  }
}

}  // namespace hh::bgg::detail
