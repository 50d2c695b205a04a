#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "mpoly/rational.hpp"

namespace mpoly {

/// Sparse univariate polynomial with integer coefficients, exponent -> coeff.
/// Holds degree polynomials D_G(t): the coefficient of t^i counts vertices
/// of degree i.
class UniPoly {
public:
    using Terms = std::map<Int, Int>;

    UniPoly() = default;

    static UniPoly constant(Int c) {
        UniPoly p;
        p.add_term(0, c);
        return p;
    }

    void add_term(Int exp, Int coeff) {
        if (coeff == 0) return;
        if (exp < 0) throw std::invalid_argument("negative exponent in UniPoly");
        auto it = terms_.find(exp);
        if (it == terms_.end()) {
            terms_.emplace(exp, coeff);
        } else {
            it->second = checked_add(it->second, coeff);
            if (it->second == 0) terms_.erase(it);
        }
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational evaluate(const Rational& t) const {
        Rational acc(0);
        for (const auto& [e, c] : terms_) acc += Rational(c) * t.pow(e);
        return acc;
    }

    UniPoly derivative() const {
        UniPoly d;
        for (const auto& [e, c] : terms_)
            if (e > 0) d.add_term(e - 1, checked_mul(c, e));
        return d;
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        UniPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    std::string to_text(const std::string& var = "t") const;

private:
    Terms terms_;
};

/// Sparse bivariate polynomial, exponent pair (a,b) -> nonzero integer
/// coefficient. M-polynomials additionally keep every pair with a <= b;
/// canonical_m_form() folds stray pairs into that convention.
class BiPoly {
public:
    using Key = std::pair<Int, Int>;
    using Terms = std::map<Key, Int>;

    BiPoly() = default;

    static BiPoly constant(Int c) { return monomial(0, 0, c); }

    static BiPoly monomial(Int a, Int b, Int c) {
        BiPoly p;
        p.add_term(a, b, c);
        return p;
    }

    void add_term(Int a, Int b, Int coeff) {
        if (coeff == 0) return;
        if (a < 0 || b < 0) throw std::invalid_argument("negative exponent in BiPoly");
        auto it = terms_.find({a, b});
        if (it == terms_.end()) {
            terms_.emplace(Key{a, b}, coeff);
        } else {
            it->second = checked_add(it->second, coeff);
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Accumulate with the exponents put in M-order (min, max) first.
    void add_term_ordered(Int a, Int b, Int coeff) {
        if (a <= b)
            add_term(a, b, coeff);
        else
            add_term(b, a, coeff);
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    friend BiPoly operator+(const BiPoly& p, const BiPoly& q) {
        BiPoly r = p;
        for (const auto& [k, c] : q.terms_) r.add_term(k.first, k.second, c);
        return r;
    }

    friend BiPoly operator-(const BiPoly& p, const BiPoly& q) {
        BiPoly r = p;
        for (const auto& [k, c] : q.terms_) r.add_term(k.first, k.second, checked_sub(0, c));
        return r;
    }

    friend BiPoly operator*(const BiPoly& p, const BiPoly& q) {
        BiPoly r;
        for (const auto& [kp, cp] : p.terms_)
            for (const auto& [kq, cq] : q.terms_)
                r.add_term(checked_add(kp.first, kq.first), checked_add(kp.second, kq.second),
                           checked_mul(cp, cq));
        return r;
    }

    BiPoly& operator+=(const BiPoly& o) { return *this = *this + o; }

    BiPoly scaled(Int factor) const {
        BiPoly r;
        for (const auto& [k, c] : terms_) r.add_term(k.first, k.second, checked_mul(c, factor));
        return r;
    }

    /// p(x^a, y^b): term exponents scale coordinate-wise. Requires a,b >= 1.
    BiPoly substitute_powers(Int a, Int b) const {
        if (a < 1 || b < 1) throw std::invalid_argument("substitute_powers requires positive powers");
        BiPoly r;
        for (const auto& [k, c] : terms_)
            r.add_term(checked_mul(k.first, a), checked_mul(k.second, b), c);
        return r;
    }

    /// Both exponents shifted by (da, db); used for monomial prefactors x^j y^j.
    BiPoly shifted(Int da, Int db) const {
        BiPoly r;
        for (const auto& [k, c] : terms_)
            r.add_term(checked_add(k.first, da), checked_add(k.second, db), c);
        return r;
    }

    /// d((xy)^k): univariate term (i, c) becomes (i*k, i*k, c).
    static BiPoly lift_diagonal(const UniPoly& d, Int k) {
        if (k < 1) throw std::invalid_argument("lift_diagonal requires k >= 1");
        BiPoly r;
        for (const auto& [e, c] : d.terms()) {
            Int s = checked_mul(e, k);
            r.add_term(s, s, c);
        }
        return r;
    }

    enum class Var { x, y };

    /// Embed d(t) as d(x) or d(y).
    static BiPoly split_univariate(const UniPoly& d, Var v) {
        BiPoly r;
        for (const auto& [e, c] : d.terms())
            v == Var::x ? r.add_term(e, 0, c) : r.add_term(0, e, c);
        return r;
    }

    Rational evaluate(const Rational& x0, const Rational& y0) const {
        Rational acc(0);
        for (const auto& [k, c] : terms_) acc += Rational(c) * x0.pow(k.first) * y0.pow(k.second);
        return acc;
    }

    /// Fold every term (a,b) with a > b into (b,a), merging coefficients.
    BiPoly canonical_m_form() const {
        BiPoly r;
        for (const auto& [k, c] : terms_) r.add_term_ordered(k.first, k.second, c);
        return r;
    }

    bool is_m_canonical() const {
        for (const auto& [k, c] : terms_)
            if (k.first > k.second) return false;
        return true;
    }

    std::string to_text(const std::string& xv = "x", const std::string& yv = "y") const;
    std::string to_json() const;
    std::string to_latex() const;

private:
    Terms terms_;
};

namespace detail {

inline void append_power(std::ostringstream& out, const std::string& var, Int exp, bool braces) {
    if (exp == 0) return;
    out << ' ' << var;
    if (exp == 1) return;
    if (braces)
        out << "^{" << exp << '}';
    else
        out << '^' << exp;
}

}  // namespace detail

inline std::string BiPoly::to_text(const std::string& xv, const std::string& yv) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        std::ostringstream part;
        detail::append_power(part, xv, k.first, false);
        detail::append_power(part, yv, k.second, false);
        std::string vars = part.str();
        if (c != 1 || vars.empty())
            out << c << vars;
        else
            out << vars.substr(1);
    }
    return out.str();
}

inline std::string BiPoly::to_json() const {
    std::ostringstream out;
    out << "{\"terms\":[";
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) out << ',';
        first = false;
        out << "{\"i\":" << k.first << ",\"j\":" << k.second << ",\"c\":" << c << '}';
    }
    out << "]}";
    return out.str();
}

inline std::string BiPoly::to_latex() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        std::ostringstream part;
        detail::append_power(part, "x", k.first, true);
        detail::append_power(part, "y", k.second, true);
        std::string vars = part.str();
        if (c != 1 || vars.empty())
            out << c << vars;
        else
            out << vars.substr(1);
    }
    return out.str();
}

inline std::string UniPoly::to_text(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        std::ostringstream part;
        detail::append_power(part, var, e, false);
        std::string vars = part.str();
        if (c != 1 || vars.empty())
            out << c << vars;
        else
            out << vars.substr(1);
    }
    return out.str();
}

}  // namespace mpoly
