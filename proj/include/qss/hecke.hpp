#pragma once

// The Hecke algebra H(S_r) over Z[v, v^-1] in the T-basis, with
// T_s^2 = (q-1) T_s + q and q = v^2. Kazhdan–Lusztig polynomials and the C/B
// bases, parabolic (anti)symmetrizers, the trace form and KL cells.

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxeter.hpp"
#include "laurent.hpp"
#include "super.hpp"

namespace qss {

class HeckeElement {
public:
    using Terms = std::map<Permutation, LaurentPoly>;

    explicit HeckeElement(int r = 0) : r_(r) {}
    HeckeElement(int r, Terms terms) : r_(r) {
        for (auto& [w, c] : terms) add(w, c);
    }

    /// T_w
    static HeckeElement basis(const Permutation& w, LaurentPoly c = 1) {
        HeckeElement h(w.rank());
        h.add(w, c);
        return h;
    }
    static HeckeElement one(int r) { return basis(Permutation::identity(r)); }

    int rank() const noexcept { return r_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    LaurentPoly coefficient(const Permutation& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? LaurentPoly() : it->second;
    }

    void add(const Permutation& w, const LaurentPoly& c) {
        if (c.is_zero()) return;
        if (w.rank() != r_) throw std::invalid_argument("HeckeElement: rank mismatch");
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    HeckeElement& operator+=(const HeckeElement& o) {
        check(o);
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    HeckeElement& operator-=(const HeckeElement& o) {
        check(o);
        for (const auto& [w, c] : o.terms_) add(w, -c);
        return *this;
    }
    friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
    friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
    friend HeckeElement operator*(const LaurentPoly& s, const HeckeElement& a) {
        HeckeElement out(a.r_);
        if (s.is_zero()) return out;
        for (const auto& [w, c] : a.terms_) out.terms_.emplace(w, s * c);
        return out;
    }
    HeckeElement operator-() const { return LaurentPoly(-1) * *this; }

    /// this * T_{s_k}
    HeckeElement times_simple(int k) const {
        HeckeElement out(r_);
        const LaurentPoly qm1 = LaurentPoly::q(1) - LaurentPoly(1);
        const LaurentPoly q = LaurentPoly::q(1);
        for (const auto& [w, c] : terms_) {
            const Permutation ws = w.right_mult(k);
            if (!w.has_right_descent(k)) {
                out.add(ws, c);
            } else {
                out.add(w, qm1 * c);
                out.add(ws, q * c);
            }
        }
        return out;
    }
    /// T_{s_k} * this
    HeckeElement simple_times(int k) const {
        HeckeElement out(r_);
        const LaurentPoly qm1 = LaurentPoly::q(1) - LaurentPoly(1);
        const LaurentPoly q = LaurentPoly::q(1);
        for (const auto& [w, c] : terms_) {
            const Permutation sw = w.left_mult(k);
            if (!w.has_left_descent(k)) {
                out.add(sw, c);
            } else {
                out.add(w, qm1 * c);
                out.add(sw, q * c);
            }
        }
        return out;
    }

    friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
        a.check(b);
        HeckeElement out(a.r_);
        for (const auto& [y, c] : b.terms_) {
            HeckeElement t = a;
            for (int k : y.reduced_word()) t = t.times_simple(k);
            out += c * t;
        }
        return out;
    }

    friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
        return a.r_ == b.r_ && a.terms_ == b.terms_;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [w, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.to_string() + ")T" + w.to_string();
        }
        return s;
    }

private:
    int r_;
    Terms terms_;

    void check(const HeckeElement& o) const {
        if (o.r_ != r_) throw std::invalid_argument("HeckeElement: rank mismatch");
    }
};

inline std::ostream& operator<<(std::ostream& os, const HeckeElement& h) { return os << h.to_string(); }

inline HeckeElement t_multiply(const HeckeElement& a, const HeckeElement& b) { return a * b; }

namespace detail {
/// bar(T_w) = T_{w^-1}^{-1}, memoized per permutation.
inline const HeckeElement& bar_of_basis(const Permutation& w) {
    static std::mutex mu;
    static std::map<Permutation, HeckeElement> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
    }
    HeckeElement result(w.rank());
    if (w.is_identity()) {
        result = HeckeElement::one(w.rank());
    } else {
        // w = w' s with l(w') < l(w): bar(T_w) = bar(T_w') (q^-1 T_s + (q^-1 - 1))
        int k = 1;
        while (!w.has_right_descent(k)) ++k;
        const HeckeElement prev = bar_of_basis(w.right_mult(k));
        const LaurentPoly qi = LaurentPoly::q(-1);
        result = qi * prev.times_simple(k) + (qi - LaurentPoly(1)) * prev;
    }
    std::lock_guard<std::mutex> lock(mu);
    return memo.emplace(w, std::move(result)).first->second;
}
}  // namespace detail

/// The semilinear bar involution v -> v^-1, T_w -> T_{w^-1}^{-1}.
inline HeckeElement bar(const HeckeElement& h) {
    HeckeElement out(h.rank());
    for (const auto& [w, c] : h.terms()) out += c.bar() * detail::bar_of_basis(w);
    return out;
}

/// Σ_{w ∈ S_λ} coeff(w) T_w
inline HeckeElement parabolic_sum(const Composition& lambda, const std::function<LaurentPoly(const Permutation&)>& coeff) {
    HeckeElement h(lambda.total());
    for (const auto& w : young_subgroup(lambda)) h.add(w, coeff(w));
    return h;
}

/// x_λ = Σ_{w ∈ S_{λ*}} T_w
inline HeckeElement x_elem(const BiComposition& lm) {
    return parabolic_sum(lm.even_star(), [](const Permutation&) { return LaurentPoly(1); });
}
/// y_μ = Σ_{w ∈ S_{*μ}} (-q)^{-l(w)} T_w
inline HeckeElement y_elem(const BiComposition& lm) {
    return parabolic_sum(lm.odd_star(), [](const Permutation& w) { return LaurentPoly::neg_q(-w.length()); });
}

struct ParabolicElements {
    HeckeElement x, y, x_prime, y_prime;
};

/// x_λ, y_μ, x'_λ = v^{-l(w_{0,λ})} x_λ, y'_μ = v^{l(w_{0,μ})} y_μ.
inline ParabolicElements parabolic_elements(const BiComposition& lm) {
    ParabolicElements p{x_elem(lm), y_elem(lm), HeckeElement(), HeckeElement()};
    p.x_prime = LaurentPoly::v(-lm.even.longest_length()) * p.x;
    p.y_prime = LaurentPoly::v(lm.odd.longest_length()) * p.y;
    return p;
}

/// Coefficient of T_1 in ab.
inline LaurentPoly trace_form(const HeckeElement& a, const HeckeElement& b) {
    return (a * b).coefficient(Permutation::identity(a.rank()));
}

/// Memoized Kazhdan–Lusztig data for S_r: C_w in the T-basis, P_{y,w} in Z[q], μ(y,w).
class KLTable {
public:
    explicit KLTable(int r) : r_(r) {
        if (r < 0) throw std::invalid_argument("negative rank");
    }

    int rank() const noexcept { return r_; }

    /// C_w = v^{-l(w)} Σ_{y<=w} P_{y,w}(v^2) T_y.
    const HeckeElement& C(const Permutation& w) const {
        std::lock_guard<std::recursive_mutex> lock(mu_);
        auto it = c_.find(w);
        if (it != c_.end()) return it->second;
        return c_.emplace(w, compute(w)).first->second;
    }

    /// P_{y,w} as a polynomial in q (exponents are powers of q).
    LaurentPoly P(const Permutation& y, const Permutation& w) const {
        const LaurentPoly c = C(w).coefficient(y);
        if (c.is_zero()) return {};
        std::map<int, BigInt> m;
        const LaurentPoly shifted = c.shift(w.length());
        for (const auto& [e, coeff] : shifted.terms()) {
            if (e % 2 != 0) throw std::logic_error("odd exponent in a KL polynomial");
            m[e / 2] = coeff;
        }
        return LaurentPoly::from_map(m);
    }

    /// μ(y,w): coefficient of q^{(l(w)-l(y)-1)/2} in P_{y,w} for y < w, else 0.
    BigInt mu(const Permutation& y, const Permutation& w) const {
        const int d = w.length() - y.length();
        if (d <= 0 || d % 2 == 0) return 0;
        // the v-coefficient of C_w at T_y is v^{-l(w)} P(v^2); q^{(d-1)/2} corresponds to v^{-l(y)-1}
        return C(w).coefficient(y).coefficient(-y.length() - 1);
    }

    /// Inject a precomputed C_w (used by the cache loader).
    void seed(const Permutation& w, HeckeElement c) const {
        std::lock_guard<std::recursive_mutex> lock(mu_);
        c_.insert_or_assign(w, std::move(c));
    }

    std::size_t cached() const {
        std::lock_guard<std::recursive_mutex> lock(mu_);
        return c_.size();
    }

private:
    int r_;
    mutable std::recursive_mutex mu_;
    mutable std::map<Permutation, HeckeElement> c_;

    HeckeElement compute(const Permutation& w) const {
        if (w.is_identity()) return HeckeElement::one(r_);
        int k = 1;
        while (!w.has_left_descent(k)) ++k;
        const Permutation sw = w.left_mult(k);
        // C_s C_{sw}, with C_s = v^{-1}(T_1 + T_s)
        const HeckeElement& c_sw = C(sw);
        HeckeElement result = LaurentPoly::v(-1) * (c_sw + c_sw.simple_times(k));
        for (const auto& [y, coeff] : c_sw.terms()) {
            if (y == sw || !y.has_left_descent(k)) continue;
            const BigInt m = mu(y, sw);
            if (m != 0) result -= LaurentPoly(m) * C(y);
        }
        return result;
    }
};

/// B_w = Σ_y ε_y ε_w v^{l(w)} v^{-2l(y)} bar(P_{y,w}) T_y.
inline HeckeElement b_basis(const Permutation& w, const KLTable& table) {
    HeckeElement out(w.rank());
    const int lw = w.length();
    for (const auto& [y, c] : table.C(w).terms()) {
        const int ly = y.length();
        const LaurentPoly P = c.shift(lw);  // P_{y,w}(v^2)
        const LaurentPoly sign((lw + ly) % 2 == 0 ? 1 : -1);
        out.add(y, sign * P.bar().shift(lw - 2 * ly));
    }
    return out;
}

inline HeckeElement kl_basis(const Permutation& w, const KLTable& table) { return table.C(w); }
inline LaurentPoly kl_polynomial(const Permutation& y, const Permutation& w, const KLTable& table) {
    return table.P(y, w);
}

/// Expand an element in the C-basis: peel off the longest support element repeatedly.
inline std::map<Permutation, LaurentPoly> to_c_basis(HeckeElement h, const KLTable& table) {
    std::map<Permutation, LaurentPoly> out;
    while (!h.is_zero()) {
        const Permutation* best = nullptr;
        int best_len = -1;
        for (const auto& [w, c] : h.terms()) {
            const int l = w.length();
            if (l > best_len) {
                best_len = l;
                best = &w;
            }
        }
        const Permutation w = *best;
        const LaurentPoly coeff = h.coefficient(w).shift(best_len);
        out[w] += coeff;
        h -= coeff * table.C(w);
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

/// Cells of S_r: class index per permutation (indexed as in all_permutations(r)).
struct KLCells {
    std::vector<Permutation> elements;
    std::vector<int> left, right, two_sided;
    /// leq_left[i][j]: elements[i] <=_L elements[j]
    std::vector<std::vector<bool>> leq_left, leq_right;
};

namespace detail {
inline std::vector<std::vector<bool>> transitive_closure(std::vector<std::vector<bool>> reach) {
    const std::size_t N = reach.size();
    for (std::size_t i = 0; i < N; ++i) reach[i][i] = true;
    for (std::size_t k = 0; k < N; ++k)
        for (std::size_t i = 0; i < N; ++i)
            if (reach[i][k])
                for (std::size_t j = 0; j < N; ++j)
                    if (reach[k][j]) reach[i][j] = true;
    return reach;
}
/// Class labels of the equivalence "i <= j and j <= i", numbered by first occurrence.
inline std::vector<int> classes_of(const std::vector<std::vector<bool>>& leq) {
    const std::size_t N = leq.size();
    std::vector<int> label(N, -1);
    int next = 0;
    for (std::size_t i = 0; i < N; ++i) {
        if (label[i] >= 0) continue;
        for (std::size_t j = i; j < N; ++j)
            if (leq[i][j] && leq[j][i]) label[j] = next;
        ++next;
    }
    return label;
}
}  // namespace detail

/// KL cells of S_r from the left-multiplication graph: y <=_L w when C_y occurs in C_s C_w.
inline KLCells kl_cells(int r, const KLTable& table) {
    KLCells cells;
    cells.elements = all_permutations(r);
    const std::size_t N = cells.elements.size();
    std::map<Permutation, std::size_t> index;
    for (std::size_t i = 0; i < N; ++i) index[cells.elements[i]] = i;
    // edge[y][w]: C_y appears in C_s C_w for some s
    std::vector<std::vector<bool>> edge(N, std::vector<bool>(N, false));
    for (std::size_t j = 0; j < N; ++j) {
        const HeckeElement& cw = table.C(cells.elements[j]);
        for (int k = 1; k < r; ++k) {
            const HeckeElement prod = LaurentPoly::v(-1) * (cw + cw.simple_times(k));
            for (const auto& [y, c] : to_c_basis(prod, table)) edge[index.at(y)][j] = true;
        }
    }
    // y <=_L w iff reachable: leq[y][w]
    auto reach = detail::transitive_closure(edge);
    cells.leq_left = reach;
    // right preorder: y <=_R w iff y^-1 <=_L w^-1
    cells.leq_right.assign(N, std::vector<bool>(N, false));
    std::vector<std::size_t> inv(N);
    for (std::size_t i = 0; i < N; ++i) inv[i] = index.at(cells.elements[i].inverse());
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) cells.leq_right[i][j] = reach[inv[i]][inv[j]];
    std::vector<std::vector<bool>> both(N, std::vector<bool>(N, false));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) both[i][j] = cells.leq_left[i][j] || cells.leq_right[i][j];
    const auto lr = detail::transitive_closure(both);
    cells.left = detail::classes_of(cells.leq_left);
    cells.right = detail::classes_of(cells.leq_right);
    cells.two_sided = detail::classes_of(lr);
    return cells;
}

}  // namespace qss
