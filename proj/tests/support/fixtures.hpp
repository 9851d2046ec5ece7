#pragma once

// The three-row team and the six-world model shared by several tests.

#include "inclogic/inclogic.hpp"

namespace inclogic::testing {

// Rows s1 = (1,0,0), s2 = (1,1,1), s3 = (0,1,0) over (p, q, r).
inline PropTeam sample_team() { return PropTeam({"p", "q", "r"}, {{1, 0, 0}, {1, 1, 1}, {0, 1, 0}}); }

inline Bits sample_row(int i) {
  switch (i) {
    case 1: return {1, 0, 0};
    case 2: return {1, 1, 1};
    default: return {0, 1, 0};
  }
}

inline PropTeam sample_subteam(std::initializer_list<int> rows) {
  std::vector<Bits> out;
  for (int i : rows) out.push_back(sample_row(i));
  return PropTeam({"p", "q", "r"}, std::move(out));
}

inline KripkeModel sample_model() {
  return KripkeModel::from_names({"w1", "w2", "w3", "s1", "s2", "s3"},
                                 {{"w1", "s1"}, {"w1", "s2"}, {"w2", "s2"}, {"w3", "s3"}, {"w3", "s2"}},
                                 {{"p", {"s1", "s2"}}, {"q", {"s2", "s3"}}, {"r", {"s2"}}});
}

inline const char* guarded_disjunction() { return "(p & [p <= r]) | (q & [q <= r])"; }

}  // namespace inclogic::testing
