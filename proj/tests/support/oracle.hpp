#pragma once

// Reference semantics for tests. Truth tables are bit vectors over at most
// six atoms, built straight from the formula tree; nothing here calls into
// lkq's semantics module.

#include "lkq/formula.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using Table = std::uint64_t;

class Universe {
public:
    explicit Universe(const std::vector<lkq::Dwff>& fs)
    {
        for (const auto& f : fs) collect(f);
        if (index_.size() > 6) throw std::length_error("oracle: more than six atoms");
        rows_ = 1u << index_.size();
        full_ = rows_ == 64 ? ~Table{0} : ((Table{1} << rows_) - 1);
    }

    Table table(const lkq::Dwff& f) const
    {
        using lkq::Connective;
        switch (f.op()) {
        case Connective::Atom: {
            std::size_t bit = index_.at(f.name());
            Table t = 0;
            for (unsigned row = 0; row < rows_; ++row)
                if ((row >> bit) & 1u) t |= Table{1} << row;
            return t;
        }
        case Connective::Neg: return ~table(f.lhs()) & full_;
        case Connective::Conj: return table(f.lhs()) & table(f.rhs());
        case Connective::Disj: return table(f.lhs()) | table(f.rhs());
        case Connective::Impl: return (~table(f.lhs()) | table(f.rhs())) & full_;
        }
        return 0;
    }

    Table all(const std::vector<lkq::Dwff>& X) const
    {
        Table t = full_;
        for (const auto& f : X) t &= table(f);
        return t;
    }

    Table any(const std::vector<lkq::Dwff>& Y) const
    {
        Table t = 0;
        for (const auto& f : Y) t |= table(f);
        return t;
    }

    Table full() const { return full_; }

private:
    void collect(const lkq::Dwff& f)
    {
        if (f.is_atom()) {
            index_.emplace(f.name(), index_.size());
            return;
        }
        collect(f.lhs());
        if (f.op() != lkq::Connective::Neg) collect(f.rhs());
    }

    std::map<std::string, std::size_t> index_;
    unsigned rows_ = 1;
    Table full_ = 1;
};

inline std::vector<lkq::Dwff> join(std::vector<lkq::Dwff> a, const std::vector<lkq::Dwff>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline bool entails(const std::vector<lkq::Dwff>& X, const std::vector<lkq::Dwff>& Y)
{
    Universe u(join(X, Y));
    return (u.all(X) & ~u.any(Y) & u.full()) == 0;
}

inline bool evokes(const std::vector<lkq::Dwff>& X, const lkq::EFormula& q)
{
    if (!entails(X, q.answers())) return false;
    for (const auto& a : q.answers())
        if (entails(X, {a})) return false;
    return true;
}

inline bool implies_regular(const lkq::EFormula& q, const std::vector<lkq::Dwff>& X,
                            const lkq::EFormula& q1)
{
    for (const auto& a : q.answers())
        if (!entails(join(X, {a}), q1.answers())) return false;
    for (const auto& b : q1.answers()) {
        bool some = false;
        for (const auto& a : q.answers())
            some = some || entails(join(X, {b}), {a});
        if (!some) return false;
    }
    return true;
}

// Defeat on declarative content: some member of S is mc-entailed.
inline bool defeated(const std::vector<lkq::Dwff>& lhs, const std::vector<std::vector<lkq::Dwff>>& S)
{
    for (const auto& x : S)
        if (entails(lhs, x)) return true;
    return false;
}

}  // namespace oracle
