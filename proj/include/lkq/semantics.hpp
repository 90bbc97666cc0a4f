#pragma once

#include "lkq/formula.hpp"

#include <map>
#include <string>
#include <vector>

namespace lkq {

using Valuation = std::map<std::string, bool>;

// Largest number of distinct atoms an oracle query may mention.
inline constexpr std::size_t kMaxAtoms = 24;

// Throws std::out_of_range when v misses an atom of f.
bool evaluate(const Valuation& v, const Dwff& f);

// No valuation makes all of X true and all of Y false. Single-conclusion
// entailment X |= B is mc_entails(X, {B}).
bool mc_entails(const std::vector<Dwff>& X, const std::vector<Dwff>& Y);
bool sc_entails(const std::vector<Dwff>& X, const Dwff& B);
bool satisfiable(const std::vector<Dwff>& X);
bool equivalent(const Dwff& a, const Dwff& b);

bool question_sound_under(const Valuation& v, const EFormula& q);
// Q is sound relative to X iff X mc-entails dQ.
bool sound_relative_to(const std::vector<Dwff>& X, const EFormula& q);

bool evokes(const std::vector<Dwff>& X, const EFormula& q);
bool implies_erotetic(const EFormula& q, const std::vector<Dwff>& X, const EFormula& q1);
bool implies_regular(const EFormula& q, const std::vector<Dwff>& X, const EFormula& q1);
bool implies_regular_pure(const EFormula& q, const EFormula& q1);

}  // namespace lkq
