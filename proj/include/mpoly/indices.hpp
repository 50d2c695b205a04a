#pragma once

#include <array>
#include <initializer_list>
#include <map>
#include <optional>
#include <string_view>
#include <utility>

#include "mpoly/bipoly.hpp"
#include "mpoly/degree_counts.hpp"
#include "mpoly/graph.hpp"

namespace mpoly {

/// Bivariate polynomial with exact rational coefficients; the carrier for
/// the operator calculus, where the S operators introduce fractions.
class RationalBiPoly {
public:
    using Key = std::pair<Int, Int>;
    using Terms = std::map<Key, Rational>;

    RationalBiPoly() = default;
    explicit RationalBiPoly(const BiPoly& p) {
        for (const auto& [k, c] : p.terms()) terms_.emplace(k, Rational(c));
    }

    void add_term(Int a, Int b, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find({a, b});
        if (it == terms_.end()) {
            terms_.emplace(Key{a, b}, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const Terms& terms() const { return terms_; }

    Rational evaluate(const Rational& x0, const Rational& y0) const {
        Rational acc(0);
        for (const auto& [k, c] : terms_) acc += c * x0.pow(k.first) * y0.pow(k.second);
        return acc;
    }

    RationalBiPoly scaled(const Rational& f) const {
        RationalBiPoly r;
        for (const auto& [k, c] : terms_) r.add_term(k.first, k.second, c * f);
        return r;
    }

    friend RationalBiPoly operator+(const RationalBiPoly& p, const RationalBiPoly& q) {
        RationalBiPoly r = p;
        for (const auto& [k, c] : q.terms_) r.add_term(k.first, k.second, c);
        return r;
    }

private:
    Terms terms_;
};

enum class MOp { Dx, Dy, Sx, Sy, J };

/// Dx/Dy multiply each term by its exponent, Sx/Sy divide the coefficient
/// by it (error on zero exponent), J substitutes y := x.
inline RationalBiPoly apply_operator(const RationalBiPoly& p, MOp op) {
    RationalBiPoly r;
    for (const auto& [k, c] : p.terms()) {
        switch (op) {
            case MOp::Dx: r.add_term(k.first, k.second, c * Rational(k.first)); break;
            case MOp::Dy: r.add_term(k.first, k.second, c * Rational(k.second)); break;
            case MOp::Sx:
                if (k.first == 0)
                    throw std::domain_error("non-integrable term: zero x-exponent under Sx");
                r.add_term(k.first, k.second, c * Rational(1, k.first));
                break;
            case MOp::Sy:
                if (k.second == 0)
                    throw std::domain_error("non-integrable term: zero y-exponent under Sy");
                r.add_term(k.first, k.second, c * Rational(1, k.second));
                break;
            case MOp::J: r.add_term(checked_add(k.first, k.second), 0, c); break;
        }
    }
    return r;
}

inline RationalBiPoly apply_operator(const BiPoly& p, MOp op) {
    return apply_operator(RationalBiPoly(p), op);
}

namespace detail {

inline Rational chain_at_one(const BiPoly& p, std::initializer_list<MOp> ops,
                             const Rational& scale) {
    RationalBiPoly q(p);
    for (MOp op : ops) q = apply_operator(q, op);
    return q.evaluate(Rational(1), Rational(1)) * scale;
}

}  // namespace detail

enum class IndexKind {
    first_zagreb,
    second_zagreb,
    modified_second_zagreb,
    forgotten,
    symmetric_division,
    harmonic,
    inverse_sum_indegree,
};

constexpr std::array<IndexKind, 7> kAllIndexKinds = {
    IndexKind::first_zagreb,
    IndexKind::second_zagreb,
    IndexKind::modified_second_zagreb,
    IndexKind::forgotten,
    IndexKind::symmetric_division,
    IndexKind::harmonic,
    IndexKind::inverse_sum_indegree,
};

inline const char* to_string(IndexKind k) {
    switch (k) {
        case IndexKind::first_zagreb: return "first_zagreb";
        case IndexKind::second_zagreb: return "second_zagreb";
        case IndexKind::modified_second_zagreb: return "modified_second_zagreb";
        case IndexKind::forgotten: return "forgotten";
        case IndexKind::symmetric_division: return "symmetric_division";
        case IndexKind::harmonic: return "harmonic";
        case IndexKind::inverse_sum_indegree: return "inverse_sum_indegree";
    }
    return "?";
}

inline std::optional<IndexKind> parse_index_kind(std::string_view s) {
    for (IndexKind k : kAllIndexKinds)
        if (s == to_string(k)) return k;
    return std::nullopt;
}

/// Index from the M-polynomial by operator calculus, evaluated at (1,1).
/// The pipeline per tag is fixed configuration; adding an index means
/// adding a row here.
inline Rational index_value(const BiPoly& p, IndexKind kind) {
    using detail::chain_at_one;
    switch (kind) {
        case IndexKind::first_zagreb:
            return chain_at_one(p, {MOp::Dx}, 1) + chain_at_one(p, {MOp::Dy}, 1);
        case IndexKind::second_zagreb:
            return chain_at_one(p, {MOp::Dx, MOp::Dy}, 1);
        case IndexKind::modified_second_zagreb:
            return chain_at_one(p, {MOp::Sx, MOp::Sy}, 1);
        case IndexKind::forgotten:
            return chain_at_one(p, {MOp::Dx, MOp::Dx}, 1) +
                   chain_at_one(p, {MOp::Dy, MOp::Dy}, 1);
        case IndexKind::symmetric_division:
            return chain_at_one(p, {MOp::Sy, MOp::Dx}, 1) +
                   chain_at_one(p, {MOp::Sx, MOp::Dy}, 1);
        case IndexKind::harmonic:
            return chain_at_one(p, {MOp::J, MOp::Sx}, 2);
        case IndexKind::inverse_sum_indegree:
            return chain_at_one(p, {MOp::Dx, MOp::Dy, MOp::J, MOp::Sx}, 1);
    }
    throw std::invalid_argument("unknown index kind");
}

/// The same index straight from edge/vertex degree sums; the independent
/// cross-check for index_value.
inline Rational index_direct(const Graph& g, IndexKind kind) {
    const auto deg = g.degree_sequence();
    if (kind == IndexKind::first_zagreb) {
        Rational acc(0);
        for (int d : deg) acc += Rational(checked_mul(d, d));
        return acc;
    }
    Rational acc(0);
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u)) {
            if (u >= v) continue;
            const Int du = deg[static_cast<std::size_t>(u)];
            const Int dv = deg[static_cast<std::size_t>(v)];
            switch (kind) {
                case IndexKind::second_zagreb: acc += Rational(checked_mul(du, dv)); break;
                case IndexKind::modified_second_zagreb:
                    acc += Rational(1, checked_mul(du, dv));
                    break;
                case IndexKind::forgotten:
                    acc += Rational(checked_add(checked_mul(du, du), checked_mul(dv, dv)));
                    break;
                case IndexKind::symmetric_division:
                    acc += Rational(checked_add(checked_mul(du, du), checked_mul(dv, dv)),
                                    checked_mul(du, dv));
                    break;
                case IndexKind::harmonic: acc += Rational(2, checked_add(du, dv)); break;
                case IndexKind::inverse_sum_indegree:
                    acc += Rational(checked_mul(du, dv), checked_add(du, dv));
                    break;
                case IndexKind::first_zagreb: break;
            }
        }
    return acc;
}

}  // namespace mpoly
