#pragma once

#include "lkq/sequent.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace gen {

class Gen {
public:
    explicit Gen(std::uint32_t seed, int atoms = 3) : rng_(seed), atoms_(atoms) {}

    int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
    bool coin() { return below(2) == 0; }

    lkq::Dwff atom()
    {
        static const char* names[] = {"p", "q", "r", "s", "t", "u"};
        return lkq::Dwff::atom(names[below(atoms_)]);
    }

    lkq::Dwff literal() { return coin() ? atom() : lkq::Dwff::neg(atom()); }

    lkq::Dwff dwff(int depth)
    {
        if (depth <= 0 || below(3) == 0) return atom();
        switch (below(4)) {
        case 0: return lkq::Dwff::neg(dwff(depth - 1));
        case 1: return lkq::Dwff::conj(dwff(depth - 1), dwff(depth - 1));
        case 2: return lkq::Dwff::disj(dwff(depth - 1), dwff(depth - 1));
        default: return lkq::Dwff::impl(dwff(depth - 1), dwff(depth - 1));
        }
    }

    // n pairwise distinct d-wffs; fewer if the pool runs dry.
    std::vector<lkq::Dwff> distinct(int n, int depth)
    {
        std::vector<lkq::Dwff> out;
        for (int tries = 0; static_cast<int>(out.size()) < n && tries < 50; ++tries) {
            auto d = dwff(depth);
            if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
        }
        return out;
    }

    lkq::EFormula question(int max_answers, int depth)
    {
        for (;;) {
            auto a = distinct(2 + below(max_answers - 1), depth);
            if (a.size() >= 2) return lkq::EFormula(a);
        }
    }

    lkq::DefeaterSet defeaters(int max_members, int depth)
    {
        lkq::DefeaterSet s;
        int n = 1 + below(max_members);
        for (int i = 0; i < n; ++i) {
            auto m = distinct(1 + below(2), depth);
            s.insert(lkq::DwffSet(m.begin(), m.end()));
        }
        return s;
    }

    lkq::FormulaSet formulas(int max, int depth, bool questions)
    {
        lkq::FormulaSet out;
        int n = below(max + 1);
        for (int i = 0; i < n; ++i) {
            if (questions && below(4) == 0)
                out.insert(question(3, depth > 0 ? depth - 1 : 0));
            else
                out.insert(dwff(depth));
        }
        return out;
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
    int atoms_;
};

inline std::vector<lkq::Dwff> declarative(const lkq::FormulaSet& fs)
{
    std::vector<lkq::Dwff> out;
    for (const auto& f : fs) {
        if (f.is_question())
            out.push_back(lkq::declarative_disjunction(f.question()));
        else
            out.push_back(f.dwff());
    }
    return out;
}

inline std::vector<std::vector<lkq::Dwff>> members(const lkq::DefeaterSet& s)
{
    std::vector<std::vector<lkq::Dwff>> out;
    for (const auto& m : s) out.emplace_back(m.begin(), m.end());
    return out;
}

}  // namespace gen
