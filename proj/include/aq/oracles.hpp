#pragma once

#include <string>
#include <variant>
#include <vector>

#include "aq/bialgebra.hpp"
#include "aq/quantizer.hpp"

namespace aq {

enum class ClosedFormKind {
  ExpPrimitivePair,        // e^{zL} (x) X + X (x) e^{-zL}
  SinhOverZ,               // sinh(zL)/z
  SinhOverSinh,            // sinh(zL)/sinh(z)
  SinhHalfCoshLinear,      // (2/z) sinh(z/2) cosh(z(L + c)) X
  U3F13Coproduct,          // Delta(F13), or Delta(F31) when lowering
  U3F13QCommutant,         // e^{z/2} F12 F23 - e^{-z/2} F23 F12
  U3F13F31Commutator,      // [F13, F31] as printed
};

std::string closed_form_kind_id(ClosedFormKind k);
ClosedFormKind parse_closed_form_kind(const std::string& id);

struct ClosedForm {
  ClosedFormKind kind = ClosedFormKind::SinhOverZ;
  LinearForm form;      // L, a combination of commuting generators
  Rational constant = 0;
  int generator = -1;   // X for the pair and cosh kinds
  Rational scale = 1;   // overall factor
  bool lowering = false;
};

using Expansion = std::variant<SeriesElement, TensorSeries>;

// Taylor expansion through z^N. Products are normal ordered with `table`,
// which must cover z^N; the u3 kinds assume the builtin u3 generator order.
Expansion expand(const ClosedForm& c, int order, const CommutatorTable& table);

// Taylor coefficients through z^N.
std::vector<Rational> exp_coefficients(int order, const Rational& s = 1);
std::vector<Rational> sinh_over_z_coefficients(int order, const Rational& s = 1);  // sinh(s z)/z
std::vector<Rational> z_over_sinh_coefficients(int order);

// Hopf data of the closed formulas, expanded through z^N.
DeformationResult builtin_reference(const std::string& name, int order);
std::vector<std::string> builtin_reference_names();

// Residual terms of the two q-Serre combinations and the two F13'
// q-commutation identities, using r's commutator table through z^N.
std::vector<std::string> check_qserre(const DeformationResult& r, int order);

}  // namespace aq
