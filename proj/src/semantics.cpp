#include "lkq/semantics.hpp"

#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace lkq {

namespace {

// Truth tables over the atoms of one query, 64 valuations per word.
class Tables {
public:
    explicit Tables(const std::vector<const Dwff*>& fs)
    {
        std::set<std::string> names;
        for (const Dwff* f : fs) {
            auto a = atoms(*f);
            names.insert(a.begin(), a.end());
        }
        if (names.size() > kMaxAtoms)
            throw std::invalid_argument("instance mentions " + std::to_string(names.size()) +
                                        " atoms; the oracle is limited to " +
                                        std::to_string(kMaxAtoms));
        int i = 0;
        for (const auto& n : names) index_[n] = i++;
        k_ = names.size();
        words_ = k_ <= 6 ? 1 : (std::size_t{1} << (k_ - 6));
        mask_ = k_ >= 6 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (1u << k_)) - 1);
    }

    using Row = std::vector<std::uint64_t>;

    const Row& table(const Dwff& f)
    {
        auto it = memo_.find(f.text());
        if (it != memo_.end()) return it->second;
        Row r(words_);
        switch (f.op()) {
        case Connective::Atom: {
            std::size_t i = index_.at(f.name());
            if (i < 6) {
                static constexpr std::uint64_t pat[6] = {
                    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
                    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
                for (auto& w : r) w = pat[i];
            } else {
                for (std::size_t w = 0; w < words_; ++w)
                    r[w] = ((w >> (i - 6)) & 1) ? ~std::uint64_t{0} : 0;
            }
            break;
        }
        case Connective::Neg: {
            const Row& a = table(f.lhs());
            for (std::size_t w = 0; w < words_; ++w) r[w] = ~a[w];
            break;
        }
        default: {
            const Row& a = table(f.lhs());
            const Row& b = table(f.rhs());
            for (std::size_t w = 0; w < words_; ++w) {
                switch (f.op()) {
                case Connective::Conj: r[w] = a[w] & b[w]; break;
                case Connective::Disj: r[w] = a[w] | b[w]; break;
                default: r[w] = ~a[w] | b[w]; break;
                }
            }
        }
        }
        r[0] &= mask_;
        return memo_.emplace(f.text(), std::move(r)).first->second;
    }

    Row all() const
    {
        Row r(words_, ~std::uint64_t{0});
        r[0] &= mask_;
        return r;
    }

    std::size_t words() const { return words_; }
    std::uint64_t mask() const { return mask_; }

private:
    std::map<std::string, std::size_t> index_;
    std::size_t k_ = 0;
    std::size_t words_ = 1;
    std::uint64_t mask_ = 0;
    std::unordered_map<std::string, Row> memo_;
};

std::vector<const Dwff*> pointers(const std::vector<Dwff>& a, const std::vector<Dwff>& b)
{
    std::vector<const Dwff*> out;
    for (const auto& f : a) out.push_back(&f);
    for (const auto& f : b) out.push_back(&f);
    return out;
}

}  // namespace

bool evaluate(const Valuation& v, const Dwff& f)
{
    switch (f.op()) {
    case Connective::Atom: {
        auto it = v.find(f.name());
        if (it == v.end()) throw std::out_of_range("valuation misses atom " + f.name());
        return it->second;
    }
    case Connective::Neg: return !evaluate(v, f.lhs());
    case Connective::Conj: return evaluate(v, f.lhs()) && evaluate(v, f.rhs());
    case Connective::Disj: return evaluate(v, f.lhs()) || evaluate(v, f.rhs());
    case Connective::Impl: return !evaluate(v, f.lhs()) || evaluate(v, f.rhs());
    }
    return false;
}

bool mc_entails(const std::vector<Dwff>& X, const std::vector<Dwff>& Y)
{
    Tables t(pointers(X, Y));
    auto counter = t.all();
    for (const auto& f : X) {
        const auto& r = t.table(f);
        for (std::size_t w = 0; w < counter.size(); ++w) counter[w] &= r[w];
    }
    for (const auto& f : Y) {
        const auto& r = t.table(f);
        for (std::size_t w = 0; w < counter.size(); ++w) counter[w] &= ~r[w];
    }
    for (auto w : counter)
        if (w) return false;
    return true;
}

bool sc_entails(const std::vector<Dwff>& X, const Dwff& B) { return mc_entails(X, {B}); }

bool satisfiable(const std::vector<Dwff>& X) { return !mc_entails(X, {}); }

bool equivalent(const Dwff& a, const Dwff& b)
{
    return sc_entails({a}, b) && sc_entails({b}, a);
}

bool question_sound_under(const Valuation& v, const EFormula& q)
{
    return evaluate(v, declarative_disjunction(q));
}

bool sound_relative_to(const std::vector<Dwff>& X, const EFormula& q)
{
    return mc_entails(X, q.answers());
}

bool evokes(const std::vector<Dwff>& X, const EFormula& q)
{
    if (!sound_relative_to(X, q)) return false;
    for (const auto& a : q.answers())
        if (sc_entails(X, a)) return false;
    return true;
}

static std::vector<Dwff> with(std::vector<Dwff> X, const Dwff& extra)
{
    X.push_back(extra);
    return X;
}

bool implies_erotetic(const EFormula& q, const std::vector<Dwff>& X, const EFormula& q1)
{
    for (const auto& a : q.answers())
        if (!mc_entails(with(X, a), q1.answers())) return false;
    const auto& dq = q.answers();
    const std::size_t n = dq.size();
    for (const auto& b : q1.answers()) {
        bool found = false;
        // Nonempty proper subsets only.
        for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n) && !found; ++mask) {
            std::vector<Dwff> sub;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1) sub.push_back(dq[i]);
            found = mc_entails(with(X, b), sub);
        }
        if (!found) return false;
    }
    return true;
}

bool implies_regular(const EFormula& q, const std::vector<Dwff>& X, const EFormula& q1)
{
    for (const auto& a : q.answers())
        if (!mc_entails(with(X, a), q1.answers())) return false;
    for (const auto& b : q1.answers()) {
        bool found = false;
        for (const auto& a : q.answers())
            if ((found = sc_entails(with(X, b), a))) break;
        if (!found) return false;
    }
    return true;
}

bool implies_regular_pure(const EFormula& q, const EFormula& q1)
{
    return implies_regular(q, {}, q1);
}

}  // namespace lkq
