#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "canon/encoder.hpp"

namespace canon {

class DimacsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bare CNF formula, as read from any DIMACS file.
struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;
};

/**
 * Writes the instance as DIMACS CNF.
 *
 * Comment lines before the header record the rhythm and the variable layout
 * ("c x i -> id", "c y d i -> id", "c z d i -> id", "c u d i -> id") so that
 * import_dimacs can rebuild an equal CnfInstance.
 */
void export_dimacs(const CnfInstance& inst, std::ostream& out);
std::string to_dimacs(const CnfInstance& inst);

/// Inverse of export_dimacs; requires the metadata comments.
CnfInstance import_dimacs(std::istream& in);

/// Plain DIMACS reader; comments are ignored.
CnfFormula read_dimacs(std::istream& in);
void write_dimacs(const CnfFormula& formula, std::ostream& out);

}  // namespace canon
