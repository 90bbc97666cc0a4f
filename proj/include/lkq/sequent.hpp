#pragma once

#include "lkq/formula.hpp"

#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace lkq {

using FormulaSet = std::set<Formula>;
using DwffSet = std::set<Dwff>;

// A finite set of nonempty finite sets of d-wffs.
class DefeaterSet {
public:
    using Members = std::set<DwffSet>;

    DefeaterSet() = default;
    DefeaterSet(std::initializer_list<DwffSet> members);

    void insert(DwffSet member);  // throws std::invalid_argument on an empty member
    void insert(const DefeaterSet& other);

    bool empty() const { return members_.empty(); }
    std::size_t size() const { return members_.size(); }
    bool contains(const DwffSet& m) const { return members_.count(m) != 0; }
    bool subset_of(const DefeaterSet& other) const;

    Members::const_iterator begin() const { return members_.begin(); }
    Members::const_iterator end() const { return members_.end(); }
    const Members& members() const { return members_; }

    std::string text() const;

    friend bool operator==(const DefeaterSet&, const DefeaterSet&) = default;

private:
    Members members_;
};

DefeaterSet united(const DefeaterSet& a, const DefeaterSet& b);

// {{A1}, ..., {An}} for a question's constituents.
DefeaterSet answer_singletons(const EFormula& q);

struct Sequent {
    FormulaSet background;
    FormulaSet antecedent;
    DefeaterSet defeaters;
    FormulaSet succedent;

    std::string text() const;

    friend bool operator==(const Sequent&, const Sequent&) = default;
};

// `<bg> | <ant> |- <{{..},..}> <succ>`; `.` is an empty list, `{}` no defeaters.
Sequent parse_sequent(std::string_view text);
std::string render_sequent(const Sequent& s);

std::string render_list(const FormulaSet& fs);
FormulaSet parse_list(std::string_view text);
DefeaterSet parse_defeaters(std::string_view text);

FormulaSet united(const FormulaSet& a, const FormulaSet& b);
bool subset_of(const FormulaSet& a, const FormulaSet& b);
bool all_declarative(const FormulaSet& fs);

DwffSet declarativize(const FormulaSet& g);
std::vector<Dwff> as_vector(const DwffSet& s);

// Semantic route: some X in S is mc-entailed by the declarativized
// background-and-antecedent. The derivation-search route lives in prover.hpp.
bool is_defeated(const Sequent& s);
bool compatible(const FormulaSet& g, const DefeaterSet& S);

}  // namespace lkq
