#pragma once

#include <string>

#include "fano/bundle.hpp"

namespace fano {

// Stable text form of bundle expressions, e.g.
//   S[1,0]U* (x) S[1,0,0]Q (x) O(-3)  printed as  S[1,0]U* ⊗ S[1,0,0]Q ⊗ O(-3)
// Atoms are separated by ⊕ and may carry a multiplicity suffix ^m; a
// multi-factor atom with a multiplicity is parenthesized. The structure
// sheaf prints as O.
std::string atom_to_string(const IrredBundle& e);
std::string expr_to_string(const BundleExpr& e);

// Parser for the same grammar. Accepted factors: S[c1,...]U*, S[c1,...]Q,
// O, O(t). Factors are joined by ⊗, summands by ⊕; ^m repeats a summand.
BundleExpr parse_expr(GrSpec gr, const std::string& text);

} // namespace fano
