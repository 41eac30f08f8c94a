#pragma once

#include <iosfwd>
#include <string>

#include "canon/rhythm.hpp"

namespace canon {

/// Row counts of the exported ILP, by constraint family.
struct LpRowCounts {
  int tiling = 0;       // t_j
  int y_bands = 0;      // yb_d_i, each written as a _lo/_hi pair
  int z_bands = 0;      // zb_d_i, each written as a _lo/_hi pair
  int link = 0;         // u_d_i: y + z - u = 0
  int aperiodic = 0;    // ap_d: sum_i u_d_i <= d - 1
  int binaries = 0;

  [[nodiscard]] int total_rows() const { return tiling + 2 * y_bands + 2 * z_bands + link + aperiodic; }
};

/**
 * Writes the ILP model of the aperiodic tiling complements problem in CPLEX LP
 * format: constant objective, circulant equality rows, the y/z band rows with
 * coefficient n/d, the y + z = u rows and the sum u <= d - 1 rows. All
 * variables are binary. A is canonicalized first.
 */
LpRowCounts export_lp(const Rhythm& a, std::ostream& out);
std::string to_lp(const Rhythm& a);

}  // namespace canon
