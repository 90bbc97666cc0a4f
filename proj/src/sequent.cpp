#include "lkq/sequent.hpp"

#include "lkq/semantics.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace lkq {

DefeaterSet::DefeaterSet(std::initializer_list<DwffSet> members)
{
    for (const auto& m : members) insert(m);
}

void DefeaterSet::insert(DwffSet member)
{
    if (member.empty()) throw std::invalid_argument("defeater sets may not contain the empty set");
    members_.insert(std::move(member));
}

void DefeaterSet::insert(const DefeaterSet& other)
{
    members_.insert(other.members_.begin(), other.members_.end());
}

bool DefeaterSet::subset_of(const DefeaterSet& other) const
{
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                         members_.end());
}

std::string DefeaterSet::text() const
{
    std::string out = "{";
    bool first = true;
    for (const auto& m : members_) {
        if (!first) out += ",";
        first = false;
        out += "{";
        bool inner = true;
        for (const auto& d : m) {
            if (!inner) out += ", ";
            inner = false;
            out += d.text();
        }
        out += "}";
    }
    return out + "}";
}

DefeaterSet united(const DefeaterSet& a, const DefeaterSet& b)
{
    DefeaterSet out = a;
    out.insert(b);
    return out;
}

DefeaterSet answer_singletons(const EFormula& q)
{
    DefeaterSet out;
    for (const auto& a : q.answers()) out.insert(DwffSet{a});
    return out;
}

std::string render_list(const FormulaSet& fs)
{
    if (fs.empty()) return ".";
    std::string out;
    for (const auto& f : fs) {
        if (!out.empty()) out += ", ";
        out += f.text();
    }
    return out;
}

std::string render_sequent(const Sequent& s)
{
    return render_list(s.background) + " | " + render_list(s.antecedent) + " |- <" +
           s.defeaters.text() + "> " + render_list(s.succedent);
}

std::string Sequent::text() const { return render_sequent(*this); }

namespace {

std::string_view trim(std::string_view s, std::size_t* offset = nullptr)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    if (offset) *offset += b;
    return s.substr(b, e - b);
}

[[noreturn]] void syntax(std::size_t pos, const std::string& msg)
{
    throw ParseError(ParseErrorKind::Syntax, pos, msg + " at position " + std::to_string(pos));
}

// Splits on commas outside parentheses and braces; records piece offsets.
std::vector<std::pair<std::string_view, std::size_t>> split_top(std::string_view s, std::size_t base)
{
    std::vector<std::pair<std::string_view, std::size_t>> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(' || c == '{') ++depth;
        else if (c == ')' || c == '}') --depth;
        else if (c == ',' && depth == 0) {
            out.emplace_back(s.substr(start, i - start), base + start);
            start = i + 1;
        }
        if (depth < 0) syntax(base + i, "unbalanced '" + std::string(1, c) + "'");
    }
    out.emplace_back(s.substr(start), base + start);
    return out;
}

Formula parse_at(std::string_view s, std::size_t base)
{
    try {
        return parse_formula(s);
    } catch (const ParseError& e) {
        std::string msg = e.what();
        auto cut = msg.rfind(" at position ");
        if (cut != std::string::npos) msg.resize(cut);
        std::size_t pos = base + e.position();
        throw ParseError(e.kind(), pos, msg + " at position " + std::to_string(pos));
    }
}

FormulaSet parse_list_at(std::string_view text, std::size_t base)
{
    std::size_t off = base;
    std::string_view t = trim(text, &off);
    FormulaSet out;
    if (t.empty() || t == ".") return out;
    for (auto [piece, at] : split_top(t, off)) {
        std::size_t o = at;
        std::string_view p = trim(piece, &o);
        if (p.empty()) syntax(o, "empty list item");
        out.insert(parse_at(p, o));
    }
    return out;
}

DefeaterSet parse_defeaters_at(std::string_view text, std::size_t base)
{
    std::size_t off = base;
    std::string_view t = trim(text, &off);
    if (t.size() < 2 || t.front() != '{' || t.back() != '}')
        syntax(off, "defeater set must be written {{...},...}");
    std::size_t inner_off = off + 1;
    std::string_view inner = trim(t.substr(1, t.size() - 2), &inner_off);
    DefeaterSet out;
    if (inner.empty()) return out;
    for (auto [piece, at] : split_top(inner, inner_off)) {
        std::size_t o = at;
        std::string_view p = trim(piece, &o);
        if (p.size() < 2 || p.front() != '{' || p.back() != '}')
            syntax(o, "defeater member must be written {A, ...}");
        FormulaSet fs = parse_list_at(p.substr(1, p.size() - 2), o + 1);
        DwffSet m;
        for (const auto& f : fs) {
            if (f.is_question()) syntax(o, "defeater members must be declarative");
            m.insert(f.dwff());
        }
        if (m.empty()) syntax(o, "empty defeater member");
        out.insert(std::move(m));
    }
    return out;
}

}  // namespace

FormulaSet parse_list(std::string_view text) { return parse_list_at(text, 0); }

DefeaterSet parse_defeaters(std::string_view text) { return parse_defeaters_at(text, 0); }

Sequent parse_sequent(std::string_view text)
{
    std::size_t turnstile = text.find("|-");
    if (turnstile == std::string_view::npos) syntax(text.size(), "expected '|-'");
    std::string_view left = text.substr(0, turnstile);
    std::size_t bar = left.find('|');
    if (bar == std::string_view::npos) syntax(0, "expected '|' between background and antecedent");
    if (left.find('|', bar + 1) != std::string_view::npos)
        syntax(left.find('|', bar + 1), "unexpected '|'");

    Sequent s;
    s.background = parse_list_at(left.substr(0, bar), 0);
    s.antecedent = parse_list_at(left.substr(bar + 1), bar + 1);

    std::size_t i = turnstile + 2;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size() || text[i] != '<') syntax(i, "expected '<' before the defeater set");
    std::size_t open = ++i;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size() || text[i] != '{') syntax(i, "expected '{'");
    int depth = 0;
    for (; i < text.size(); ++i) {
        if (text[i] == '{') ++depth;
        else if (text[i] == '}' && --depth == 0) break;
    }
    if (depth != 0) syntax(text.size(), "unterminated defeater set");
    std::size_t close = i + 1;
    s.defeaters = parse_defeaters_at(text.substr(open, close - open), open);
    i = close;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size() || text[i] != '>') syntax(i, "expected '>' after the defeater set");
    s.succedent = parse_list_at(text.substr(i + 1), i + 1);
    return s;
}

FormulaSet united(const FormulaSet& a, const FormulaSet& b)
{
    FormulaSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

bool subset_of(const FormulaSet& a, const FormulaSet& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool all_declarative(const FormulaSet& fs)
{
    return std::all_of(fs.begin(), fs.end(), [](const Formula& f) { return f.is_declarative(); });
}

DwffSet declarativize(const FormulaSet& g)
{
    DwffSet out;
    for (const auto& f : g)
        out.insert(f.is_question() ? declarative_disjunction(f.question()) : f.dwff());
    return out;
}

std::vector<Dwff> as_vector(const DwffSet& s) { return {s.begin(), s.end()}; }

bool compatible(const FormulaSet& g, const DefeaterSet& S)
{
    if (S.empty()) return true;
    auto lhs = as_vector(declarativize(g));
    for (const auto& x : S)
        if (mc_entails(lhs, as_vector(x))) return false;
    return true;
}

bool is_defeated(const Sequent& s)
{
    return !compatible(united(s.background, s.antecedent), s.defeaters);
}

}  // namespace lkq
