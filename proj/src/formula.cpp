#include "lkq/formula.hpp"

#include <cctype>

namespace lkq {

ParseError::ParseError(ParseErrorKind kind, std::size_t position, const std::string& what)
    : std::invalid_argument(what), kind_(kind), position_(position)
{
}

std::string_view error_kind_name(ParseErrorKind kind)
{
    switch (kind) {
    case ParseErrorKind::Syntax: return "syntax error";
    case ParseErrorKind::TooFewAnswers: return "too few constituents";
    case ParseErrorKind::EquiformAnswers: return "equiform constituents";
    case ParseErrorKind::NestedQuestion: return "nested question";
    }
    return "error";
}

struct Dwff::Node {
    Connective op = Connective::Atom;
    std::string name;
    std::vector<Dwff> kids;
    std::string text;
    std::size_t size = 1;
};

bool is_identifier(std::string_view name)
{
    if (name.empty() || !std::islower(static_cast<unsigned char>(name[0])))
        return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

Dwff Dwff::atom(std::string name)
{
    if (!is_identifier(name))
        throw ParseError(ParseErrorKind::Syntax, 0, "invalid atom name '" + name + "'");
    auto n = std::make_shared<Node>();
    n->op = Connective::Atom;
    n->text = name;
    n->name = std::move(name);
    return Dwff(std::move(n));
}

Dwff Dwff::neg(Dwff a)
{
    auto n = std::make_shared<Node>();
    n->op = Connective::Neg;
    n->text = "~" + a.text();
    n->size = a.size() + 1;
    n->kids.push_back(std::move(a));
    return Dwff(std::move(n));
}

Dwff Dwff::binary(Connective op, Dwff a, Dwff b)
{
    static constexpr const char* infix[] = {"", "", " /\\ ", " \\/ ", " -> "};
    auto n = std::make_shared<Node>();
    n->op = op;
    n->text = "(" + a.text() + infix[static_cast<int>(op)] + b.text() + ")";
    n->size = a.size() + b.size() + 1;
    n->kids.push_back(std::move(a));
    n->kids.push_back(std::move(b));
    return Dwff(std::move(n));
}

Dwff Dwff::conj(Dwff a, Dwff b) { return binary(Connective::Conj, std::move(a), std::move(b)); }
Dwff Dwff::disj(Dwff a, Dwff b) { return binary(Connective::Disj, std::move(a), std::move(b)); }
Dwff Dwff::impl(Dwff a, Dwff b) { return binary(Connective::Impl, std::move(a), std::move(b)); }

Connective Dwff::op() const { return node_->op; }
const std::string& Dwff::name() const { return node_->name; }
const Dwff& Dwff::lhs() const { return node_->kids.at(0); }
const Dwff& Dwff::rhs() const { return node_->kids.at(1); }
const std::string& Dwff::text() const { return node_->text; }
std::size_t Dwff::size() const { return node_->size; }

bool Dwff::is_literal() const
{
    return is_atom() || (op() == Connective::Neg && lhs().is_atom());
}

EFormula::EFormula(std::vector<Dwff> answers) : answers_(std::move(answers))
{
    if (answers_.size() < 2)
        throw ParseError(ParseErrorKind::TooFewAnswers, 0,
                         "a question needs at least two constituents");
    std::set<Dwff> seen;
    for (const auto& a : answers_)
        if (!seen.insert(a).second)
            throw ParseError(ParseErrorKind::EquiformAnswers, 0,
                             "equiform constituents: " + a.text());
    text_ = "?{";
    for (std::size_t i = 0; i < answers_.size(); ++i) {
        if (i) text_ += ", ";
        text_ += answers_[i].text();
    }
    text_ += "}";
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Formula formula()
    {
        skip();
        if (peek('?')) {
            EFormula q = question();
            expect_end();
            return q;
        }
        Dwff d = impl();
        expect_end();
        return d;
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;

    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool peek(char c) const { return i_ < s_.size() && s_[i_] == c; }
    bool peek(std::string_view tok) const { return s_.substr(i_, tok.size()) == tok; }

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError(ParseErrorKind::Syntax, i_,
                         msg + " at position " + std::to_string(i_));
    }

    void expect(std::string_view tok)
    {
        skip();
        if (!peek(tok)) fail("expected '" + std::string(tok) + "'");
        i_ += tok.size();
    }

    void expect_end()
    {
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    }

    EFormula question()
    {
        std::size_t start = i_;
        expect("?");
        expect("{");
        std::vector<Dwff> answers;
        for (;;) {
            answers.push_back(impl());
            skip();
            if (peek(',')) {
                ++i_;
                continue;
            }
            break;
        }
        expect("}");
        try {
            return EFormula(std::move(answers));
        } catch (const ParseError& e) {
            throw ParseError(e.kind(), start,
                             std::string(e.what()) + " at position " + std::to_string(start));
        }
    }

    Dwff impl()
    {
        Dwff a = disj();
        skip();
        if (peek("->")) {
            i_ += 2;
            return Dwff::impl(a, impl());
        }
        return a;
    }

    Dwff disj()
    {
        Dwff a = conj();
        for (;;) {
            skip();
            if (!peek("\\/")) return a;
            i_ += 2;
            a = Dwff::disj(a, conj());
        }
    }

    Dwff conj()
    {
        Dwff a = unary();
        for (;;) {
            skip();
            if (!peek("/\\")) return a;
            i_ += 2;
            a = Dwff::conj(a, unary());
        }
    }

    Dwff unary()
    {
        skip();
        if (i_ >= s_.size()) fail("unexpected end of input");
        char c = s_[i_];
        if (c == '~') {
            ++i_;
            return Dwff::neg(unary());
        }
        if (c == '(') {
            ++i_;
            Dwff d = impl();
            expect(")");
            return d;
        }
        if (c == '?')
            throw ParseError(ParseErrorKind::NestedQuestion, i_,
                             "nested question at position " + std::to_string(i_));
        if (std::islower(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
                ++i_;
            return Dwff::atom(std::string(s_.substr(start, i_ - start)));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).formula(); }

Dwff parse_dwff(std::string_view text)
{
    Formula f = parse_formula(text);
    if (f.is_question())
        throw ParseError(ParseErrorKind::Syntax, 0, "expected a declarative formula");
    return f.dwff();
}

EFormula parse_question(std::string_view text)
{
    Formula f = parse_formula(text);
    if (!f.is_question())
        throw ParseError(ParseErrorKind::Syntax, 0, "expected a question");
    return f.question();
}

std::string render_formula(const Formula& f) { return f.text(); }

const std::vector<Dwff>& direct_answers(const EFormula& q) { return q.answers(); }

Dwff declarative_disjunction(const EFormula& q)
{
    const auto& as = q.answers();
    Dwff d = as.front();
    for (std::size_t i = 1; i < as.size(); ++i) d = Dwff::disj(d, as[i]);
    return d;
}

static void collect(const Dwff& d, std::set<Formula>& out)
{
    if (!out.insert(d).second) return;
    if (d.is_atom()) return;
    collect(d.lhs(), out);
    if (d.op() != Connective::Neg) collect(d.rhs(), out);
}

std::set<Formula> subformulas(const Formula& f)
{
    std::set<Formula> out;
    if (f.is_question()) {
        out.insert(f);
        for (const auto& a : f.question().answers()) collect(a, out);
    } else {
        collect(f.dwff(), out);
    }
    return out;
}

static void collect_atoms(const Dwff& d, std::set<std::string>& out)
{
    if (d.is_atom()) {
        out.insert(d.name());
        return;
    }
    collect_atoms(d.lhs(), out);
    if (d.op() != Connective::Neg) collect_atoms(d.rhs(), out);
}

std::set<std::string> atoms(const Dwff& d)
{
    std::set<std::string> out;
    collect_atoms(d, out);
    return out;
}

}  // namespace lkq
