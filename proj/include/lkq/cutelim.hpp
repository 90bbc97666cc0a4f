#pragma once

#include "lkq/calculus.hpp"

#include <stdexcept>

namespace lkq {

// The input is not a proof, so there is no cut-free proof of its root to return.
class ParaproofInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Cut-free derivation with exactly d's root. Cuts are removed topmost first by
// the usual permutation and principal reductions; cases with no local
// reduction are re-derived by a search confined to the cut's own background
// and defeater set.
// Throws InvalidDerivation or ParaproofInput.
Derivation eliminate_cut(const Derivation& d, BackgroundPolicy policy = BackgroundPolicy::Recorded);

// Every formula in the tree is a subformula of one in the root sequent.
// Defeater members are not checked.
bool is_analytic(const Derivation& d);

}  // namespace lkq
