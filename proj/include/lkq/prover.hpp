#pragma once

#include "lkq/calculus.hpp"

#include <optional>
#include <string_view>

namespace lkq {

struct ProverOptions {
    std::optional<std::size_t> bound;  // default_bound(goal) when unset
    bool use_qr2 = true;
    bool use_ql2 = true;
    BackgroundPolicy policy = BackgroundPolicy::Recorded;
};

// What a search may put into the background and defeater sets of the
// sequents it builds. A missing background means anything goes.
struct Constraints {
    std::optional<FormulaSet> background;
    DefeaterSet defeaters;
};

struct SearchResult {
    std::optional<Derivation> derivation;  // concludes exactly ant |- succ
    std::size_t bound = 0;
    bool exhaustive = false;  // failure holds for every depth, not just this bound
};

struct Verdict {
    enum class Kind { Proof, Defeated, NotDerivable };
    Kind kind = Kind::NotDerivable;
    Sequent goal;
    std::optional<Derivation> derivation;
    std::size_t bound = 0;
    bool exhaustive = false;
};

std::string_view verdict_name(Verdict::Kind k);

// 2 x (d-wff nodes of antecedent and succedent) + question constituents.
std::size_t default_bound(const Sequent& s);

// Cut-free backward search for ant |- succ. The conclusion's background and
// defeater set are whatever the rules used force, within the constraints.
SearchResult search(const FormulaSet& ant, const FormulaSet& succ, const Constraints& c,
                    const ProverOptions& opts = {});

// Derivation with root exactly goal, if one is found within the bound.
std::optional<Derivation> derive(const Sequent& goal, const ProverOptions& opts = {});

Verdict prove(const Sequent& goal, const ProverOptions& opts = {});

// . | X |-<{{A1},...,{An}}> ?{A1,...,An}
Verdict prove_evocation(const std::vector<Dwff>& X, const EFormula& q,
                        const ProverOptions& opts = {});

// Sigma, [A], [B] | X, ?A |-<{}> ?B, with Sigma whatever the derivation found needs.
Verdict prove_regular_implication(const EFormula& q, const std::vector<Dwff>& X,
                                  const EFormula& q1, const ProverOptions& opts = {});

// Defeat by derivation: some X in S is derivable from the declarativized
// left-hand side, with an empty defeater set and any background.
bool is_defeated_by_search(const Sequent& s, const ProverOptions& opts = {});

}  // namespace lkq
