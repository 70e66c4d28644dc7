#pragma once

#include <string>
#include <vector>

#include "aq/quantizer.hpp"

namespace aq {

// Text form of a commutator table plus a coproduct table:
//
//   bialgebra su2
//   generators H X Y
//   order 4
//   [degree D]            graded presentations only
//   gauge analytic
//   coproduct X : z^1 * 1 * H (x) X
//   bracket X Y : z^0 * 2 * H
//   # diag coproduct 2 X unknowns 5 rank 2 kernel 3
struct Dump {
  std::string name;
  std::vector<std::string> generators;
  int order = 0;
  int degree = -1;
  std::string gauge = "analytic";
  CommutatorTable commutators;
  CoproductTable coproducts;
  std::vector<OrderDiagnostics> diagnostics;

  Truncation truncation() const { return {order, degree}; }
  friend bool operator==(const Dump&, const Dump&) = default;
};

std::string render_dump(const Dump& d);
Dump parse_dump(const std::string& text);  // throws ParseError
Dump read_dump_file(const std::string& path);

Dump to_dump(const DeformationResult& r);
// Rebuilds the bialgebra from the z^0 brackets and the z^1 coproduct terms.
DeformationResult to_result(const Dump& d);
bool operator==(const DeformationResult& a, const DeformationResult& b);

// Term-level differences: "- ..." only in a, "+ ..." only in b, "! ..." for
// header mismatches. Gauge, name and diagnostics are not compared.
std::vector<std::string> diff_dumps(const Dump& a, const Dump& b);

}  // namespace aq
