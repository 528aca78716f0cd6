#pragma once

#include "bcm/rational.hpp"

#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bcm {

/// Ordered list of named variables, shared between all polynomials over it.
using VarSet = std::shared_ptr<const std::vector<std::string>>;

inline VarSet make_varset(std::vector<std::string> names) {
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

/// z1..zN, l1..lN  (positions 0..N-1 and N..2N-1).
inline VarSet zl_vars(int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back("z" + std::to_string(i));
    for (int i = 1; i <= n; ++i) v.push_back("l" + std::to_string(i));
    return make_varset(std::move(v));
}

/// x1..xN, y1..yN, used as a commutative workspace when expanding
/// normally-ordered products.
inline VarSet xy_vars(int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i) v.push_back("y" + std::to_string(i));
    return make_varset(std::move(v));
}

inline bool same_varset(const VarSet& a, const VarSet& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

using Monomial = std::vector<int>;

/// Graded lexicographic order: total degree first, then lex with the earlier
/// variable more significant.  Maps iterate ascending; canonical output walks
/// the map backwards so the leading term comes first.
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        long ta = std::accumulate(a.begin(), a.end(), 0L);
        long tb = std::accumulate(b.begin(), b.end(), 0L);
        if (ta != tb) return ta < tb;
        return a < b;
    }
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// A default-constructed value is the zero polynomial over no particular
/// variable set; it absorbs into any ring operation.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexLess>;

    MultiPoly() = default;
    explicit MultiPoly(VarSet vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(const VarSet& vars, const Rational& c) {
        MultiPoly p(vars);
        if (!c.is_zero()) p.terms_[Monomial(vars->size(), 0)] = c;
        return p;
    }

    static MultiPoly var(const VarSet& vars, int index, int power = 1) {
        MultiPoly p(vars);
        Monomial m(vars->size(), 0);
        m[index] = power;
        p.terms_[std::move(m)] = Rational(1);
        return p;
    }

    const VarSet& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        return terms_.size() == 1 && total_deg(terms_.begin()->first) == 0;
    }

    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw std::domain_error("polynomial is not constant");
        return terms_.begin()->second;
    }

    int degree() const {
        if (terms_.empty()) return -1;
        return static_cast<int>(total_deg(terms_.rbegin()->first));
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MultiPoly operator-() const {
        MultiPoly r(vars_);
        for (auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        const VarSet& vs = merged_vars(a, b);
        MultiPoly r(vs);
        r.terms_ = a.terms_;
        for (auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        const VarSet& vs = merged_vars(a, b);
        MultiPoly r(vs);
        r.terms_ = a.terms_;
        for (auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        const VarSet& vs = merged_vars(a, b);
        MultiPoly r(vs);
        for (auto& [ma, ca] : a.terms_) {
            for (auto& [mb, cb] : b.terms_) {
                Monomial m(ma);
                for (size_t k = 0; k < m.size(); ++k) m[k] += mb[k];
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }

    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly scaled(const Rational& c) const {
        if (c.is_zero()) return MultiPoly(vars_);
        MultiPoly r(vars_);
        for (auto& [m, k] : terms_) r.terms_[m] = k * c;
        return r;
    }

    MultiPoly pow(int e) const {
        if (e < 0) throw std::invalid_argument("negative polynomial power");
        if (!vars_) {
            if (e == 0) throw std::logic_error("1 has no variable set here");
            return MultiPoly();
        }
        MultiPoly r = constant(vars_, Rational(1));
        for (int i = 0; i < e; ++i) r *= *this;
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// Substitution var_k -> var_{pos[k]} (0-indexed positions, a bijection).
    MultiPoly substitute_positions(const std::vector<int>& pos) const {
        MultiPoly r(vars_);
        for (auto& [m, c] : terms_) {
            Monomial m2(m.size(), 0);
            for (size_t k = 0; k < m.size(); ++k) m2[pos[k]] += m[k];
            r.add_term(m2, c);
        }
        return r;
    }

    /// Substitution var_a -> var_b (exponent transfer, not a bijection).
    MultiPoly merge_var_into(int a, int b) const {
        MultiPoly r(vars_);
        for (auto& [m, c] : terms_) {
            Monomial m2(m);
            m2[b] += m2[a];
            m2[a] = 0;
            r.add_term(m2, c);
        }
        return r;
    }

    /// Full evaluation at rational points, one value per variable.
    Rational evaluate(const std::vector<Rational>& vals) const {
        if (vars_ && vals.size() != vars_->size())
            throw std::invalid_argument("evaluation arity mismatch");
        Rational acc(0);
        for (auto& [m, c] : terms_) {
            Rational t = c;
            for (size_t k = 0; k < m.size(); ++k)
                if (m[k] != 0) t *= vals[k].pow(m[k]);
            acc += t;
        }
        return acc;
    }

    /// Evaluation into any commutative ring T.
    template <typename T>
    T evaluate_with(const std::vector<T>& vals, const T& one) const {
        T acc{};
        for (auto& [m, c] : terms_) {
            T t = scale(one, c);
            for (size_t k = 0; k < m.size(); ++k)
                for (int e = 0; e < m[k]; ++e) t = t * vals[k];
            acc = acc + t;
        }
        return acc;
    }

    /// Terms whose total degree equals the polynomial degree.
    MultiPoly top_part() const {
        MultiPoly r(vars_);
        int d = degree();
        for (auto& [m, c] : terms_)
            if (total_deg(m) == d) r.terms_[m] = c;
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Rational& c = it->second;
            if (!first) os << (c < Rational(0) ? " - " : " + ");
            else if (c < Rational(0)) os << "-";
            first = false;
            Rational a = c < Rational(0) ? -c : c;
            bool unit = a.is_one() && total_deg(it->first) > 0;
            if (!unit) os << a.str();
            bool any = false;
            for (size_t k = 0; k < it->first.size(); ++k) {
                if (it->first[k] == 0) continue;
                if (any || !unit) os << "*";
                os << (*vars_)[k];
                if (it->first[k] > 1) os << "^" << it->first[k];
                any = true;
            }
        }
        return os.str();
    }

    static long total_deg(const Monomial& m) {
        return std::accumulate(m.begin(), m.end(), 0L);
    }

private:
    static const VarSet& merged_vars(const MultiPoly& a, const MultiPoly& b) {
        if (!a.vars_) {
            if (!a.terms_.empty()) throw std::logic_error("nonzero polynomial without variables");
            return b.vars_;
        }
        if (!b.vars_) {
            if (!b.terms_.empty()) throw std::logic_error("nonzero polynomial without variables");
            return a.vars_;
        }
        if (!same_varset(a.vars_, b.vars_))
            throw std::invalid_argument("variable-set mismatch");
        return a.vars_;
    }

    VarSet vars_;
    TermMap terms_;
};

inline MultiPoly scale(const MultiPoly& p, const Rational& c) { return p.scaled(c); }

/// Exact quotient of p by (var_a - var_b); throws std::domain_error when the
/// division is not exact.  Uses v_a^k = (v_a - v_b) * sum v_a^m v_b^{k-1-m} + v_b^k.
inline MultiPoly divide_linear(const MultiPoly& p, int a, int b) {
    if (!p.merge_var_into(a, b).is_zero())
        throw std::domain_error("division by linear binomial is not exact");
    MultiPoly q(p.vars());
    for (auto& [m, c] : p.terms()) {
        int k = m[a];
        if (k == 0) continue;
        for (int mm = 0; mm < k; ++mm) {
            Monomial t(m);
            t[a] = mm;
            t[b] += k - 1 - mm;
            q.add_term(t, c);
        }
    }
    return q;
}

}  // namespace bcm
