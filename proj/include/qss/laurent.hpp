#pragma once

/**
 * @file laurent.hpp
 * @brief Exact arithmetic in Z[v, v^-1] and its fraction field Q(v).
 *
 * LaurentPoly stores a sorted list of (exponent, coefficient) pairs with no
 * zero coefficients, so equality is structural. RationalFn keeps a canonical
 * reduced form: numerator and denominator coprime in Z[v], denominator with
 * nonzero constant term and positive leading coefficient.
 *
 * The symbol q used throughout the library is v^2.
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qss {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class LaurentPoly {
public:
    using Term = std::pair<int, BigInt>;

    LaurentPoly() = default;
    LaurentPoly(long c) {  // NOLINT: implicit integer constants are convenient
        if (c != 0) terms_.emplace_back(0, BigInt(c));
    }
    explicit LaurentPoly(const BigInt& c) {
        if (c != 0) terms_.emplace_back(0, c);
    }
    LaurentPoly(std::initializer_list<Term> ts) {
        std::map<int, BigInt> acc;
        for (const auto& [e, c] : ts) acc[e] += c;
        for (auto& [e, c] : acc)
            if (c != 0) terms_.emplace_back(e, std::move(c));
    }

    static LaurentPoly monomial(int exponent, BigInt coeff = 1) {
        LaurentPoly p;
        if (coeff != 0) p.terms_.emplace_back(exponent, std::move(coeff));
        return p;
    }
    /// v^k
    static LaurentPoly v(int k = 1) { return monomial(k); }
    /// q^k = v^(2k)
    static LaurentPoly q(int k = 1) { return monomial(2 * k); }
    /// (-q)^k
    static LaurentPoly neg_q(int k) { return monomial(2 * k, (k % 2 == 0) ? 1 : -1); }

    /// Build from a map exponent -> coefficient, dropping zeros.
    static LaurentPoly from_map(const std::map<int, BigInt>& m) {
        LaurentPoly p;
        for (const auto& [e, c] : m)
            if (c != 0) p.terms_.emplace_back(e, c);
        return p;
    }

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    int min_exponent() const {
        if (is_zero()) throw std::domain_error("min_exponent of zero polynomial");
        return terms_.front().first;
    }
    int max_exponent() const {
        if (is_zero()) throw std::domain_error("max_exponent of zero polynomial");
        return terms_.back().first;
    }
    const BigInt& leading_coefficient() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return terms_.back().second;
    }

    BigInt coefficient(int e) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                   [](const Term& t, int x) { return t.first < x; });
        if (it != terms_.end() && it->first == e) return it->second;
        return 0;
    }

    /// True when the polynomial is a single term c v^e with c = +-1.
    bool is_unit() const {
        return terms_.size() == 1 && (terms_[0].second == 1 || terms_[0].second == -1);
    }

    /// All exponents strictly negative (membership in v^-1 Z[v^-1]).
    bool in_negative_part() const { return is_zero() || terms_.back().first < 0; }

    LaurentPoly bar() const {
        LaurentPoly p;
        p.terms_.reserve(terms_.size());
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
            p.terms_.emplace_back(-it->first, it->second);
        return p;
    }

    /// Multiply by v^k.
    LaurentPoly shift(int k) const {
        LaurentPoly p = *this;
        for (auto& t : p.terms_) t.first += k;
        return p;
    }

    /// Substitute v -> v^k (k may be negative); used for P(q) -> P(v^2) and P(q^-1).
    LaurentPoly substitute_power(int k) const {
        if (k == 0) {
            BigInt s = 0;
            for (const auto& t : terms_) s += t.second;
            return LaurentPoly(s);
        }
        std::map<int, BigInt> m;
        for (const auto& [e, c] : terms_) m[e * k] += c;
        return from_map(m);
    }

    /// Part with exponents < 0.
    LaurentPoly negative_part() const {
        LaurentPoly p;
        for (const auto& t : terms_)
            if (t.first < 0) p.terms_.push_back(t);
        return p;
    }

    LaurentPoly operator-() const {
        LaurentPoly p = *this;
        for (auto& t : p.terms_) t.second = -t.second;
        return p;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        return merge(a, b, false);
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        return merge(a, b, true);
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (b.terms_.size() == 1) return a.scale_term(b.terms_[0]);
        if (a.terms_.size() == 1) return b.scale_term(a.terms_[0]);
        const int lo = a.min_exponent() + b.min_exponent();
        const int hi = a.max_exponent() + b.max_exponent();
        std::vector<BigInt> dense(static_cast<std::size_t>(hi - lo + 1));
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) dense[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
        LaurentPoly p;
        for (std::size_t i = 0; i < dense.size(); ++i)
            if (dense[i] != 0) p.terms_.emplace_back(lo + static_cast<int>(i), std::move(dense[i]));
        return p;
    }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// Total order used only for canonical sorting (not a ring order).
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ < b.terms_; }

    LaurentPoly pow(unsigned k) const {
        LaurentPoly result(1), base = *this;
        while (k) {
            if (k & 1U) result *= base;
            base *= base;
            k >>= 1U;
        }
        return result;
    }

    /// Exact division; throws if `d` does not divide `*this` in Z[v, v^-1].
    LaurentPoly divide_exact(const LaurentPoly& d) const;

    /// Evaluate at a rational point (v0 != 0).
    BigRational evaluate(const BigRational& v0) const {
        BigRational acc = 0;
        for (const auto& [e, c] : terms_) {
            BigRational p = 1;
            const BigRational base = e >= 0 ? v0 : BigRational(1) / v0;
            for (int i = 0; i < std::abs(e); ++i) p *= base;
            acc += BigRational(c) * p;
        }
        return acc;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            if (e == 0) {
                os << mag;
                continue;
            }
            if (mag != 1) os << mag << "*";
            os << "v";
            if (e != 1) os << "^" << e;
        }
        return os.str();
    }

private:
    std::vector<Term> terms_;

    LaurentPoly scale_term(const Term& t) const {
        LaurentPoly p;
        p.terms_.reserve(terms_.size());
        for (const auto& [e, c] : terms_) p.terms_.emplace_back(e + t.first, c * t.second);
        return p;
    }

    static LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
        LaurentPoly p;
        p.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto i = a.terms_.begin();
        auto j = b.terms_.begin();
        while (i != a.terms_.end() || j != b.terms_.end()) {
            if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
                p.terms_.push_back(*i++);
            } else if (i == a.terms_.end() || j->first < i->first) {
                p.terms_.emplace_back(j->first, subtract ? BigInt(-j->second) : j->second);
                ++j;
            } else {
                BigInt c = subtract ? BigInt(i->second - j->second) : BigInt(i->second + j->second);
                if (c != 0) p.terms_.emplace_back(i->first, std::move(c));
                ++i;
                ++j;
            }
        }
        return p;
    }
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

namespace detail {

// Dense integer polynomials in v (ascending coefficients), used for gcd work.
using Dense = std::vector<BigInt>;

inline void trim(Dense& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline BigInt content(const Dense& a) {
    BigInt g = 0;
    for (const auto& c : a) g = boost::multiprecision::gcd(g, c);
    return g;
}

inline Dense primitive_part(const Dense& a) {
    Dense r = a;
    const BigInt g = content(a);
    if (g > 1)
        for (auto& c : r) c /= g;
    return r;
}

/// Pseudo-remainder of a by b (b nonzero).
inline Dense pseudo_remainder(Dense a, const Dense& b) {
    const std::size_t db = b.size() - 1;
    const BigInt& lb = b.back();
    while (!a.empty() && a.size() - 1 >= db) {
        const BigInt la = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (auto& c : a) c *= lb;
        for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
        trim(a);
    }
    return a;
}

inline Dense gcd(Dense a, Dense b) {
    trim(a);
    trim(b);
    if (a.empty()) return b.empty() ? Dense{} : primitive_part(b);
    if (b.empty()) return primitive_part(a);
    const BigInt cg = boost::multiprecision::gcd(content(a), content(b));
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        Dense r = pseudo_remainder(a, b);
        a = std::move(b);
        b = r.empty() ? Dense{} : primitive_part(r);
    }
    for (auto& c : a) c *= cg;
    if (a.back() < 0)
        for (auto& c : a) c = -c;
    return a;
}

/// Exact division in Z[v]; returns false if not exact.
inline bool divide(const Dense& a, const Dense& b, Dense& quotient) {
    Dense rem = a;
    trim(rem);
    quotient.clear();
    if (rem.empty()) return true;
    if (rem.size() < b.size()) return false;
    quotient.assign(rem.size() - b.size() + 1, 0);
    const BigInt& lb = b.back();
    while (!rem.empty() && rem.size() >= b.size()) {
        const BigInt& la = rem.back();
        if (la % lb != 0) return false;
        const BigInt c = la / lb;
        const std::size_t shift = rem.size() - b.size();
        quotient[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) rem[i + shift] -= c * b[i];
        trim(rem);
    }
    return rem.empty();
}

/// Split p = v^e * D(v) with D(0) != 0.
inline std::pair<int, Dense> to_dense(const LaurentPoly& p) {
    if (p.is_zero()) return {0, {}};
    const int lo = p.min_exponent();
    Dense d(static_cast<std::size_t>(p.max_exponent() - lo + 1));
    for (const auto& [e, c] : p.terms()) d[static_cast<std::size_t>(e - lo)] = c;
    return {lo, d};
}

inline LaurentPoly from_dense(const Dense& d, int shift) {
    std::map<int, BigInt> m;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0) m[static_cast<int>(i) + shift] = d[i];
    return LaurentPoly::from_map(m);
}

}  // namespace detail

inline LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) return {};
    auto [ea, da] = detail::to_dense(*this);
    auto [eb, db] = detail::to_dense(d);
    detail::Dense quo;
    if (!detail::divide(da, db, quo)) throw std::domain_error("inexact Laurent division");
    return detail::from_dense(quo, ea - eb);
}

/// Element of Q(v) in canonical reduced form.
class RationalFn {
public:
    RationalFn() : num_(), den_(1) {}
    RationalFn(long c) : num_(c), den_(1) {}  // NOLINT
    RationalFn(LaurentPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT
    RationalFn(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("RationalFn with zero denominator");
        normalize();
    }

    const LaurentPoly& numerator() const noexcept { return num_; }
    const LaurentPoly& denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_laurent() const { return den_ == LaurentPoly(1); }

    /// The value as a Laurent polynomial; throws if the denominator is not a unit monomial.
    LaurentPoly to_laurent() const {
        if (!den_.is_unit()) throw std::domain_error("rational function is not a Laurent polynomial");
        return num_ * LaurentPoly::monomial(-den_.min_exponent(), den_.leading_coefficient());
    }

    RationalFn bar() const { return RationalFn(num_.bar(), den_.bar()); }
    RationalFn inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        return RationalFn(den_, num_);
    }

    RationalFn operator-() const {
        RationalFn r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
        if (a.den_ == b.den_) return RationalFn(a.num_ + b.num_, a.den_);
        return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
        if (a.is_laurent() && b.is_laurent()) return RationalFn(a.num_ * b.num_);
        return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b) { return a * b.inverse(); }
    RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
    RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
    RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }

    friend bool operator==(const RationalFn&, const RationalFn&) = default;

    BigRational evaluate(const BigRational& v0) const { return num_.evaluate(v0) / den_.evaluate(v0); }

    std::string to_string() const {
        if (is_laurent()) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    LaurentPoly num_;
    LaurentPoly den_;

    void normalize() {
        if (num_.is_zero()) {
            den_ = LaurentPoly(1);
            return;
        }
        auto [en, dn] = detail::to_dense(num_);
        auto [ed, dd] = detail::to_dense(den_);
        const detail::Dense g = detail::gcd(dn, dd);
        detail::Dense qn, qd;
        detail::divide(dn, g, qn);
        detail::divide(dd, g, qd);
        if (qd.back() < 0) {
            for (auto& c : qn) c = -c;
            for (auto& c : qd) c = -c;
        }
        num_ = detail::from_dense(qn, en - ed);
        den_ = detail::from_dense(qd, 0);
    }
};

inline std::ostream& operator<<(std::ostream& os, const RationalFn& r) { return os << r.to_string(); }

/// Sum over w in the Young subgroup S_lambda of q^{l(w)}: product of q-factorials.
inline LaurentPoly poincare(std::span<const int> parts) {
    LaurentPoly result(1);
    for (int part : parts) {
        LaurentPoly qint;  // [i]_q = 1 + q + ... + q^{i-1}
        for (int i = 1; i <= part; ++i) {
            qint += LaurentPoly::q(i - 1);
            result *= qint;
        }
    }
    return result;
}

}  // namespace qss
