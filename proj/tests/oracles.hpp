#pragma once

// Brute-force reference computations and random generators shared by the test suites.
// Nothing here is used by the library itself.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "qss/qss.hpp"

namespace oracle {

using qss::Composition;
using qss::HeckeElement;
using qss::LaurentPoly;
using qss::Permutation;

inline std::mt19937& rng() {
    static std::mt19937 gen(20240611u);
    return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline LaurentPoly random_laurent(int max_terms = 4, int max_exp = 5, int max_coeff = 9) {
    std::map<int, qss::BigInt> m;
    const int terms = uniform(0, max_terms);
    for (int i = 0; i < terms; ++i) m[uniform(-max_exp, max_exp)] += uniform(-max_coeff, max_coeff);
    return LaurentPoly::from_map(m);
}

inline Permutation random_permutation(int r) {
    std::vector<int> v(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(v.begin(), v.end(), rng());
    return Permutation(v);
}

inline HeckeElement random_hecke(int r, int terms = 3) {
    HeckeElement h(r);
    for (int i = 0; i < terms; ++i) h.add(random_permutation(r), random_laurent(2, 3, 4));
    return h;
}

/// Number of inversions by direct pair scan.
inline int inversions(const Permutation& w) {
    int l = 0;
    for (int i = 1; i <= w.rank(); ++i)
        for (int j = i + 1; j <= w.rank(); ++j)
            if (w(i) > w(j)) ++l;
    return l;
}

/// Bruhat order via subwords of one fixed reduced word of y.
inline bool bruhat_subword(const Permutation& x, const Permutation& y) {
    const auto word = y.reduced_word();
    const std::size_t L = word.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << L); ++mask) {
        Permutation p = Permutation::identity(y.rank());
        for (std::size_t i = 0; i < L; ++i)
            if (mask & (std::size_t{1} << i)) p = p.right_mult(word[i]);
        if (p == x) return true;
    }
    return false;
}

/// The double coset S_nu w S_rho as a set.
inline std::set<Permutation> double_coset(const Composition& nu, const Permutation& w, const Composition& rho) {
    std::set<Permutation> out;
    const auto L = qss::young_subgroup(nu);
    const auto R = qss::young_subgroup(rho);
    for (const auto& a : L)
        for (const auto& b : R) out.insert(a * w * b);
    return out;
}

inline Permutation longest_of(const std::set<Permutation>& s) {
    return *std::max_element(s.begin(), s.end(),
                             [](const Permutation& a, const Permutation& b) { return a.length() < b.length(); });
}
inline Permutation shortest_of(const std::set<Permutation>& s) {
    return *std::min_element(s.begin(), s.end(),
                             [](const Permutation& a, const Permutation& b) { return a.length() < b.length(); });
}

/// Subgroup intersection S_a ∩ d S_b d^{-1} is trivial, by enumeration.
inline bool trivial_intersection(const Composition& a, const Permutation& d, const Composition& b) {
    const auto A = qss::young_subgroup(a);
    std::set<Permutation> Aset(A.begin(), A.end());
    for (const auto& x : qss::young_subgroup(b)) {
        const Permutation c = d * x * d.inverse();
        if (!c.is_identity() && Aset.count(c)) return false;
    }
    return true;
}

/// Σ_{w ∈ S_lambda} q^{l(w)} by enumeration.
inline LaurentPoly poincare_bruteforce(const Composition& lambda) {
    LaurentPoly p;
    for (const auto& w : qss::young_subgroup(lambda)) p += LaurentPoly::q(inversions(w));
    return p;
}

inline qss::BigInt factorial(int n) {
    qss::BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

/// Number of standard tableaux by the hook length formula.
inline qss::BigInt hook_length_count(const Composition& lambda) {
    const Composition lam = lambda.trimmed();
    const Composition tr = lam.transpose();
    qss::BigInt denom = 1;
    for (std::size_t i = 0; i < lam.size(); ++i)
        for (int j = 0; j < lam[i]; ++j) denom *= (lam[i] - j - 1) + (tr[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
    return factorial(lam.total()) / denom;
}

/// KL basis by solving the bar-invariance system in the normalized basis T~_w = v^{-l(w)} T_w:
/// C_w = Σ_x p_{x,w} T~_x with p_{w,w} = 1, p_{x,w} ∈ v^{-1}Z[v^{-1}].
/// Returns P_{x,w}(v^2) = v^{l(w)-l(x)} p_{x,w}.
class UnitriangularKL {
public:
    explicit UnitriangularKL(int r) : perms_(qss::all_permutations(r)) {
        std::sort(perms_.begin(), perms_.end(), [](const Permutation& a, const Permutation& b) {
            return a.length() != b.length() ? a.length() < b.length() : a < b;
        });
        for (std::size_t i = 0; i < perms_.size(); ++i) index_[perms_[i]] = i;
        // R~_{x,y}: bar(T~_y) = Σ_x R~_{x,y} T~_x
        R_.assign(perms_.size(), std::vector<LaurentPoly>(perms_.size()));
        for (std::size_t j = 0; j < perms_.size(); ++j) {
            const Permutation& y = perms_[j];
            const HeckeElement b = qss::bar(HeckeElement::basis(y, LaurentPoly::v(-y.length())));
            for (const auto& [x, c] : b.terms()) R_[index_.at(x)][j] = c.shift(x.length());
        }
    }

    /// P_{x,w}(v^2) for all x, given w.
    std::map<Permutation, LaurentPoly> column(const Permutation& w) const {
        const std::size_t jw = index_.at(w);
        std::vector<LaurentPoly> p(perms_.size());
        p[jw] = LaurentPoly(1);
        for (std::size_t ii = jw; ii-- > 0;) {
            if (!qss::bruhat_leq(perms_[ii], w)) continue;
            LaurentPoly rhs;
            for (std::size_t k = ii + 1; k <= jw; ++k)
                if (!p[k].is_zero() && !R_[ii][k].is_zero()) rhs += R_[ii][k] * p[k].bar();
            p[ii] = rhs.negative_part();
        }
        std::map<Permutation, LaurentPoly> out;
        for (std::size_t i = 0; i <= jw; ++i)
            if (!p[i].is_zero()) out[perms_[i]] = p[i].shift(w.length() - perms_[i].length());
        return out;
    }

    const std::vector<Permutation>& elements() const { return perms_; }

private:
    std::vector<Permutation> perms_;
    std::map<Permutation, std::size_t> index_;
    std::vector<std::vector<LaurentPoly>> R_;
};

}  // namespace oracle
