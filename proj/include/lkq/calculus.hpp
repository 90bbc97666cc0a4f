#pragma once

#include "lkq/sequent.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lkq {

enum class Rule {
    Axiom, Cut, LW, RW, DE, BE,
    ConjL, ConjR, DisjL, DisjR, ImplL, ImplR, NegL, NegR,
    QR1, QL1, QR2, QL2,
};

std::string_view rule_name(Rule r);
std::optional<Rule> rule_from_name(std::string_view name);

// Witness data making a rule application checkable.
//   formula   principal formula; cut formula for Cut; added formula for LW/RW/BE
//   answers   QR1 active constituents (kept separately so a malformed list can be reported)
//   implying  QR2/QL2: the antecedent question ?[A|n]
//   targets   QR2/QL2: for each B_j, the index of the A_i its premise concludes
//   added     DE: the defeater set joined to the premise's
struct Annotation {
    std::optional<Formula> formula;
    std::vector<Dwff> answers;
    std::optional<EFormula> implying;
    std::vector<std::size_t> targets;
    DefeaterSet added;

    friend bool operator==(const Annotation&, const Annotation&) = default;
};

struct Derivation {
    Rule rule = Rule::Axiom;
    Sequent conclusion;
    Annotation annotation;
    std::vector<Derivation> premises;

    friend bool operator==(const Derivation&, const Derivation&) = default;
};

using Path = std::vector<std::size_t>;

struct Violation {
    Path path;
    std::string message;
};

std::string path_text(const Path& p);

// Recorded: every background entry a rule adds is required, exactly.
// Optional: rules may leave those entries out. Only used for comparison;
// Recorded is the calculus.
enum class BackgroundPolicy { Recorded, Optional };

std::optional<std::string> validate_step(Rule rule, const std::vector<Sequent>& premises,
                                         const Sequent& conclusion, const Annotation& ann,
                                         BackgroundPolicy policy = BackgroundPolicy::Recorded);

std::vector<Violation> validate_derivation(const Derivation& d,
                                           BackgroundPolicy policy = BackgroundPolicy::Recorded);

class InvalidDerivation : public std::invalid_argument {
public:
    explicit InvalidDerivation(std::vector<Violation> v);
    const std::vector<Violation>& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

struct Classification {
    bool proof = true;
    std::vector<Path> defeated;
};

// Throws InvalidDerivation when the tree does not validate.
Classification classify(const Derivation& d, BackgroundPolicy policy = BackgroundPolicy::Recorded);
// No validation; just the defeated nodes.
std::vector<Path> defeated_nodes(const Derivation& d);

// The smallest conclusion the rule licenses from these premises (no context
// beyond what the premises carry). Throws std::invalid_argument if the rule
// does not apply.
Sequent conclude(Rule rule, const std::vector<Sequent>& premises, const Annotation& ann,
                 BackgroundPolicy policy = BackgroundPolicy::Recorded);

Derivation make_node(Rule rule, std::vector<Derivation> premises, Annotation ann,
                     BackgroundPolicy policy = BackgroundPolicy::Recorded);
Derivation axiom(const Dwff& p);

// LW/RW/BE/DE steps taking d's conclusion up to target, which must contain it.
Derivation pad_to(Derivation d, const Sequent& target);
// Only LW/RW steps, up to the given antecedent and succedent.
Derivation weaken_to(Derivation d, const FormulaSet& ant, const FormulaSet& succ);

bool contains_rule(const Derivation& d, Rule r);
std::size_t count_rule(const Derivation& d, Rule r);
std::size_t node_count(const Derivation& d);
std::size_t height(const Derivation& d);

// Machine-readable form: {"rule", "conclusion", "annotation", "premises"}.
std::string to_json(const Derivation& d);
Derivation from_json(std::string_view text);

// Indented human-readable tree, conclusion first.
std::string render_tree(const Derivation& d);

}  // namespace lkq
