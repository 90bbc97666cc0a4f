#pragma once

#include "lkq/prover.hpp"

#include <stdexcept>

namespace lkq {

// X |- ?{A1, ..., An}: declarative antecedent, one question on the right.
struct ESequent {
    DwffSet antecedent;
    EFormula succedent;

    std::string text() const;
    friend bool operator==(const ESequent&, const ESequent&) = default;
};

// `<antecedent> |- <question>`, `.` for an empty antecedent.
ESequent parse_esequent(std::string_view text);

bool complementary(const Dwff& a, const Dwff& b);
bool is_pmce_axiom(const ESequent& s);

enum class PmceRule { R1, R2, R3, R4 };
std::string_view pmce_rule_name(PmceRule r);
std::optional<PmceRule> pmce_rule_from_name(std::string_view name);

class PmceViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// R2 needs the replacement formula C, R4 the target question.
struct PmceWitness {
    std::optional<Dwff> formula;
    std::optional<EFormula> question;
};

// The rules act on the last constituent (R1, R2) exactly as schematized;
// reorder with R4 first to work elsewhere. Throws PmceViolation.
ESequent apply_pmce_rule(PmceRule rule, const std::vector<ESequent>& premises,
                         const PmceWitness& witness = {});

// . | X |-<{{A1},...,{An}}> ?{A1,...,An}
Sequent lk_correlate(const ESequent& s);

struct Correlate {
    Sequent sequent;
    std::optional<Derivation> proof;  // set when sequent is provable
};

// Searches for a derivation of X |- ?Q, first with an empty background, then
// with whatever background the rules force. The sequent is the conclusion
// reached; it is provable when undefeated.
Correlate find_correlate(const ESequent& s, const ProverOptions& opts = {});

// No provable variant with a strictly smaller background or defeater set.
// Exponential; rejects more than 4 answers or background entries beyond 8.
bool is_minimal_correlate(const Sequent& s, const ProverOptions& opts = {});

}  // namespace lkq
