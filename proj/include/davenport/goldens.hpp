#pragma once

// Reference values. Sample sequences use signed representatives
// ([-1] is p-1); MultisetSeq::parse accepts them directly.

#include <cstdint>
#include <string>
#include <vector>

namespace davenport::golden {

// s1^2 + λ s2 over F_p.
struct LambdaRow {
  std::uint32_t p;
  std::uint32_t lambda;
  std::uint32_t d;
  std::uint64_t m_count;
  std::vector<std::string> samples;
};

inline const std::vector<LambdaRow>& table1() {
  static const std::vector<LambdaRow> rows = {
      {3, 1, 3, 1, {"[1][2]"}},
      {5, 1, 7, 2, {"[1]^3[4]^3", "[2]^3[3]^3"}},
      {5, 2, 6, 4, {"[1]^2[2]^2[4]", "[1]^2[2][3]^2"}},
      {5, 3, 4, 4, {"[1][2][3]", "[1][2][4]"}},
      {7, 1, 7, 15, {"[1]^5[3]", "[1]^3[6]^3"}},
      {7, 2, 8, 6, {"[1]^4[5]^3", "[2]^4[3]^3"}},
      {7, 3, 8, 12, {"[1]^3[3]^3[5]", "[2]^2[4]^3[6]^2"}},
      {7, 4, 5, 9, {"[1]^2[2]^2", "[3]^2[4]^2"}},
      {7, 5, 5, 9, {"[1][2][3][5]", "[2][3][4][6]"}},
      {11, 1, 13, 40, {"[1]^9[3]^3", "[2]^9[6]^2[7]"}},
      {11, 2, 12, 50, {"[1]^8[4]^3", "[2]^8[5]^2[8]"}},
      {11, 3, 12, 10, {"[1]^6[7]^2[8]^3", "[2]^2[5]^6[7]^3"}},
      {11, 4, 11, 15, {"[1]^6[6]^4", "[3]^5[8]^5"}},
      {11, 5, 11, 10, {"[1]^5[2]^5", "[3]^5[7]^5"}},
      {11, 6, 11, 10, {"[1]^4[4]^3[10]^3", "[4]^4[5]^3[7]^3"}},
      {11, 7, 9, 10, {"[1]^3[5]^3[7]^2", "[4]^3[6]^2[9]^3"}},
      {11, 8, 8, 60, {"[1]^2[2]^2[3][5][6]", "[3][6]^2[7]^2[8]^2"}},
      {11, 9, 6, 60, {"[1][2][3][4][7]", "[4][5][6][7][9]"}},
  };
  return rows;
}

// Lower bounds p + s for s1^2 + s2 + s1, s the run of residues 1..s.
struct BoundRow {
  std::uint32_t p;
  std::uint32_t lower;
};

inline const std::vector<BoundRow>& table2() {
  static const std::vector<BoundRow> rows = {
      {5, 6}, {7, 9}, {11, 12}, {13, 14}, {17, 19}, {23, 27}, {29, 30}, {31, 33}, {71, 77}, {311, 321},
  };
  return rows;
}

// Exact values for s1^2 + s2 + s1.
struct ExactRow {
  std::uint32_t p;
  std::uint32_t d;
  std::uint64_t m_count;
  std::vector<std::string> samples;
  bool extended;  // slower tier
};

inline const std::vector<ExactRow>& table3() {
  static const std::vector<ExactRow> rows = {
      {3, 3, 1, {"[-1]^2"}, false},
      {5, 6, 2, {"[1][-1]^4", "[3][-1]^4"}, false},
      {7, 9, 3, {"[1]^2[-1]^6", "[1][5][-1]^6", "[5]^2[-1]^6"}, false},
      {11, 12, 8, {"[1]^8[2]^3", "[3][-1]^10"}, false},
      {13, 15, 6, {"[1]^10[7]^4", "[1][2][-1]^12"}, false},
      {17, 19, 16, {"[2]^2[-1]^16", "[2][7][-1]^16"}, false},
      {19, 21, 22, {"[1]^16[3]^4", "[2][4][-1]^18"}, false},
      {23, 27, 25, {"[1]^4[-1]^22", "[1]^3[-2][-1]^22"}, true},
      {29, 31, 54, {"[1]^26[12][13]^3", "[6]^12[10]^18", "[1][3][-1]^28"}, true},
      {31, 34, 54, {"[1][11]^2[-1]^30", "[7][8][22][-1]^30"}, true},
  };
  return rows;
}

}  // namespace davenport::golden
