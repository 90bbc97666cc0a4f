#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lkq {

enum class Connective { Atom, Neg, Conj, Disj, Impl };

enum class ParseErrorKind { Syntax, TooFewAnswers, EquiformAnswers, NestedQuestion };

class ParseError : public std::invalid_argument {
public:
    ParseError(ParseErrorKind kind, std::size_t position, const std::string& what);

    ParseErrorKind kind() const noexcept { return kind_; }
    std::size_t position() const noexcept { return position_; }

private:
    ParseErrorKind kind_;
    std::size_t position_;
};

std::string_view error_kind_name(ParseErrorKind kind);

// Declarative formula. Immutable; identity is the canonical rendering.
class Dwff {
public:
    static Dwff atom(std::string name);
    static Dwff neg(Dwff a);
    static Dwff conj(Dwff a, Dwff b);
    static Dwff disj(Dwff a, Dwff b);
    static Dwff impl(Dwff a, Dwff b);

    Connective op() const;
    bool is_atom() const { return op() == Connective::Atom; }
    bool is_literal() const;

    const std::string& name() const;  // atoms only
    const Dwff& lhs() const;          // operand of ~, left operand otherwise
    const Dwff& rhs() const;

    const std::string& text() const;
    std::size_t size() const;  // node count

    friend bool operator==(const Dwff& a, const Dwff& b) { return a.text() == b.text(); }
    friend std::strong_ordering operator<=>(const Dwff& a, const Dwff& b)
    {
        return a.text().compare(b.text()) <=> 0;
    }

private:
    struct Node;
    explicit Dwff(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static Dwff binary(Connective op, Dwff a, Dwff b);
    std::shared_ptr<const Node> node_;
};

// ?{A1, ..., An}: n >= 2, pairwise distinct constituents, order significant.
class EFormula {
public:
    explicit EFormula(std::vector<Dwff> answers);

    const std::vector<Dwff>& answers() const { return answers_; }
    std::size_t arity() const { return answers_.size(); }
    const std::string& text() const { return text_; }

    friend bool operator==(const EFormula& a, const EFormula& b) { return a.text_ == b.text_; }
    friend std::strong_ordering operator<=>(const EFormula& a, const EFormula& b)
    {
        return a.text_.compare(b.text_) <=> 0;
    }

private:
    std::vector<Dwff> answers_;
    std::string text_;
};

class Formula {
public:
    Formula(Dwff d) : value_(std::move(d)) {}
    Formula(EFormula q) : value_(std::move(q)) {}

    bool is_question() const { return std::holds_alternative<EFormula>(value_); }
    bool is_declarative() const { return !is_question(); }
    const Dwff& dwff() const { return std::get<Dwff>(value_); }
    const EFormula& question() const { return std::get<EFormula>(value_); }

    const std::string& text() const
    {
        return is_question() ? question().text() : dwff().text();
    }

    friend bool operator==(const Formula& a, const Formula& b) { return a.text() == b.text(); }
    friend std::strong_ordering operator<=>(const Formula& a, const Formula& b)
    {
        return a.text().compare(b.text()) <=> 0;
    }

private:
    std::variant<Dwff, EFormula> value_;
};

Formula parse_formula(std::string_view text);
Dwff parse_dwff(std::string_view text);
EFormula parse_question(std::string_view text);

std::string render_formula(const Formula& f);

const std::vector<Dwff>& direct_answers(const EFormula& q);

// A1 \/ ... \/ An, left-associated.
Dwff declarative_disjunction(const EFormula& q);

// Subformulas of f, f included. Constituents of a question count as its subformulas.
std::set<Formula> subformulas(const Formula& f);
std::set<std::string> atoms(const Dwff& d);

bool is_identifier(std::string_view name);

}  // namespace lkq
