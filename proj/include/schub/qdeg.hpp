#pragma once

#include <string>
#include <vector>

#include "schub/curve_ops.hpp"
#include "schub/weyl.hpp"

namespace schub {

struct degree_answer {
  int d = 0;
  parts witness;             // lambda^d in the space's native partition model
  std::vector<parts> chain;  // lambda^1 .. lambda^d (diagram algorithm only)
};

// The partition model the minimum-degree theorems are stated in:
// P(k,n) for family A, P'(k,2n) for submaximal B/C, Lambda for k = n B/C.
model native_model(const space& sp);
// lambda^d in that model.
parts native_nbhd(const space& sp, const parts& lam, int d);

// Smallest d >= 0 with lambda^d contained in mu; inputs in the native model.
degree_answer min_degree_diagram(const space& sp, const parts& lam,
                                 const parts& mu);

// Smallest d >= 0 with v <= min-rep(u . z_d W_P); independent of the diagram
// formulas except for the final witness conversion.
degree_answer min_degree_oracle(const space& sp, const window& u,
                                const window& v);

struct verify_report {
  std::string space_name;
  long long pairs = 0;
  long long mismatches = 0;
  std::vector<std::string> first_mismatches;  // capped sample for diagnostics
  long long millis = 0;
};

// Runs both algorithms on every ordered pair of classes of sp and reports
// disagreements (expected none). threads = 0 means hardware concurrency.
// Refuses spaces with letters() > max_letters.
verify_report cross_verify(const space& sp, int threads = 0,
                           int max_letters = 12);

// Every valid space of the given families with letters() <= max_letters.
std::vector<space> all_spaces(int max_letters);

}  // namespace schub
