#pragma once

#include <string>
#include <vector>

#include "aq/quantizer.hpp"

namespace aq {

struct Violation {
  std::string category;  // shape, coassociativity, homomorphism, counit, parity, jacobi, classical, gauge
  std::string subject;   // generator or pair
  int order = 0;
  std::string term;      // first offending term, canonical rendering
};

struct HopfReport {
  std::vector<Violation> violations;
  bool empty() const { return violations.empty(); }
  bool flags(const std::string& category, int order = -1) const;
  std::string render() const;
};

// Recomputes every residual of r through its truncation order. The gauge
// category (zero-preferred columns) is checked only for the analytic gauge.
HopfReport verify_hopf(const DeformationResult& r);

}  // namespace aq
