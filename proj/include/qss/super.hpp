#pragma once

// Super index sets: weights Λ(m|n,r), hook partitions, the matrix set M(m|n,r),
// the trivial-intersection property and the signed coset representatives.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "coxeter.hpp"

namespace qss {

/// λ|μ with λ having m parts (even) and μ having n parts (odd).
struct BiComposition {
    Composition even;
    Composition odd;

    int m() const { return static_cast<int>(even.size()); }
    int n() const { return static_cast<int>(odd.size()); }
    int total() const { return even.total() + odd.total(); }

    /// λ ∨ μ
    Composition joined() const { return join(even, odd); }
    /// λ* = λ ∨ 1^{r-|λ|}
    Composition even_star() const {
        return join(even, Composition(std::vector<int>(static_cast<std::size_t>(odd.total()), 1)));
    }
    /// *μ = 1^{r-|μ|} ∨ μ
    Composition odd_star() const {
        return join(Composition(std::vector<int>(static_cast<std::size_t>(even.total()), 1)), odd);
    }

    friend auto operator<=>(const BiComposition&, const BiComposition&) = default;

    std::string to_string() const {
        auto list = [](const Composition& c) {
            std::string s;
            for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
            return s;
        };
        return list(even) + "|" + list(odd);
    }

    /// Parse "a,b|c,d" (either side may be empty).
    static BiComposition parse(const std::string& text) {
        const auto bar = text.find('|');
        if (bar == std::string::npos) throw std::invalid_argument("bi-composition needs '|': " + text);
        auto parse_side = [](const std::string& s) {
            std::vector<int> v;
            std::stringstream ss(s);
            std::string tok;
            while (std::getline(ss, tok, ','))
                if (!tok.empty()) v.push_back(std::stoi(tok));
            return Composition(v);
        };
        return {parse_side(text.substr(0, bar)), parse_side(text.substr(bar + 1))};
    }
};

/// Split a composition of length m+n into λ|μ.
inline BiComposition split(const Composition& c, int m) {
    const auto& p = c.parts();
    return {Composition(std::vector<int>(p.begin(), p.begin() + m)),
            Composition(std::vector<int>(p.begin() + m, p.end()))};
}

/// 0 for an even index i <= m, 1 otherwise (1-based i).
inline int hat(int i, int m) { return i <= m ? 0 : 1; }

/// Element of M(m|n,r).
class SuperMatrix {
public:
    SuperMatrix() = default;
    SuperMatrix(int m, int n, IntMatrix entries) : m_(m), n_(n), a_(std::move(entries)) {
        if (m < 0 || n < 0 || m + n == 0) throw std::invalid_argument("profile needs m+n > 0");
        if (a_.rows != m + n || a_.cols != m + n) throw std::invalid_argument("matrix size does not match profile");
        for (int i = 0; i < m + n; ++i)
            for (int j = 0; j < m + n; ++j) {
                const int x = a_(i, j);
                if (x < 0) throw std::invalid_argument("negative entry");
                if (hat(i + 1, m) + hat(j + 1, m) == 1 && x > 1)
                    throw std::invalid_argument("parity violation: mixed-parity entry exceeds 1");
            }
    }
    SuperMatrix(int m, int n, const std::vector<std::vector<int>>& rows) : SuperMatrix(m, n, IntMatrix(rows)) {}

    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    int r() const { return a_.total(); }
    const IntMatrix& entries() const noexcept { return a_; }
    int operator()(int i, int j) const { return a_(i, j); }

    BiComposition ro() const { return split(Composition(a_.row_sums()), m_); }
    BiComposition co() const { return split(Composition(a_.col_sums()), m_); }
    /// Â = |μ| + |η| mod 2.
    int parity() const { return (ro().odd.total() + co().odd.total()) % 2; }

    SuperMatrix transpose() const { return SuperMatrix(m_, n_, a_.transpose()); }
    bool is_diagonal() const {
        for (int i = 0; i < a_.rows; ++i)
            for (int j = 0; j < a_.cols; ++j)
                if (i != j && a_(i, j) != 0) return false;
        return true;
    }

    static SuperMatrix diagonal(const BiComposition& w) {
        const int N = w.m() + w.n();
        IntMatrix A(N, N);
        const Composition j = w.joined();
        for (int i = 0; i < N; ++i) A(i, i) = j[static_cast<std::size_t>(i)];
        return SuperMatrix(w.m(), w.n(), A);
    }

    friend auto operator<=>(const SuperMatrix&, const SuperMatrix&) = default;

    std::string to_string() const {
        std::string s = "[";
        for (int i = 0; i < a_.rows; ++i) {
            s += i ? ",[" : "[";
            for (int j = 0; j < a_.cols; ++j) s += (j ? "," : "") + std::to_string(a_(i, j));
            s += "]";
        }
        return s + "]";
    }

private:
    int m_ = 0, n_ = 0;
    IntMatrix a_;
};

namespace detail {
inline void compositions_rec(int parts, int remaining, std::vector<int>& cur, std::vector<Composition>& out) {
    if (static_cast<int>(cur.size()) == parts - 1) {
        cur.push_back(remaining);
        out.emplace_back(cur);
        cur.pop_back();
        return;
    }
    for (int x = remaining; x >= 0; --x) {
        cur.push_back(x);
        compositions_rec(parts, remaining - x, cur, out);
        cur.pop_back();
    }
}
inline void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Composition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int x = std::min(remaining, max_part); x >= 1; --x) {
        cur.push_back(x);
        partitions_rec(remaining - x, x, cur, out);
        cur.pop_back();
    }
}
}  // namespace detail

/// All compositions of r with exactly `parts` parts, descending lexicographic order.
inline std::vector<Composition> compositions(int parts, int r) {
    std::vector<Composition> out;
    if (parts == 0) {
        if (r == 0) out.emplace_back(std::vector<int>{});
        return out;
    }
    std::vector<int> cur;
    detail::compositions_rec(parts, r, cur, out);
    return out;
}

/// Partitions of r, descending lexicographic order.
inline std::vector<Composition> partitions(int r) {
    std::vector<Composition> out;
    std::vector<int> cur;
    detail::partitions_rec(r, r, cur, out);
    return out;
}

/// Λ(m|n,r) in descending lexicographic order of λ∨μ.
inline std::vector<BiComposition> enumerate_weights(int m, int n, int r) {
    if (m < 0 || n < 0 || m + n <= 0 || r < 0) throw std::invalid_argument("need m,n >= 0, m+n > 0, r >= 0");
    std::vector<BiComposition> out;
    for (const auto& c : compositions(m + n, r)) out.push_back(split(c, m));
    return out;
}

/// Λ⁺(r)_{m|n}: partitions with λ_{m+1} <= n, descending lexicographic order.
inline std::vector<Composition> enumerate_hooks(int m, int n, int r) {
    std::vector<Composition> out;
    for (const auto& p : partitions(r))
        if (static_cast<int>(p.size()) <= m || p[static_cast<std::size_t>(m)] <= n) out.push_back(p);
    return out;
}

inline bool is_hook(const Composition& lambda, int m, int n) {
    const Composition t = lambda.trimmed();
    return t.is_partition() && (static_cast<int>(t.size()) <= m || t[static_cast<std::size_t>(m)] <= n);
}

/// (λ', λ'') of a hook partition: λ' = first m parts, λ'' = transpose of the rest, padded to n parts.
inline BiComposition hook_split(const Composition& lambda, int m, int n) {
    if (!is_hook(lambda, m, n)) throw std::invalid_argument("not an (m,n)-hook partition");
    std::vector<int> first, rest;
    for (std::size_t i = 0; i < lambda.size(); ++i) (static_cast<int>(i) < m ? first : rest).push_back(lambda[i]);
    while (static_cast<int>(first.size()) < m) first.push_back(0);
    Composition t = Composition(rest).trimmed().transpose();
    std::vector<int> second = t.parts();
    while (static_cast<int>(second.size()) < n) second.push_back(0);
    return {Composition(first), Composition(second)};
}

/// M(m|n,r) in lexicographic order of the row-major entry vectors.
inline std::vector<SuperMatrix> enumerate_matrices(int m, int n, int r) {
    if (m < 0 || n < 0 || m + n <= 0 || r < 0) throw std::invalid_argument("need m,n >= 0, m+n > 0, r >= 0");
    const int N = m + n;
    std::vector<SuperMatrix> out;
    IntMatrix A(N, N);
    std::vector<int> cap(static_cast<std::size_t>(N * N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) cap[static_cast<std::size_t>(i * N + j)] = hat(i + 1, m) + hat(j + 1, m) == 1 ? 1 : r;
    // ascending lexicographic: smallest value first at each cell
    auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
        if (pos + 1 == A.a.size()) {
            if (remaining <= cap[pos]) {
                A.a[pos] = remaining;
                out.emplace_back(m, n, A);
            }
            return;
        }
        for (int x = 0; x <= std::min(remaining, cap[pos]); ++x) {
            A.a[pos] = x;
            self(self, pos + 1, remaining - x);
        }
        A.a[pos] = 0;
    };
    rec(rec, 0, r);
    return out;
}

/// Σ_k C(m²+n²+k−1, k) C(2mn, r−k).
inline boost::multiprecision::cpp_int rank_formula(int m, int n, int r) {
    using boost::multiprecision::cpp_int;
    auto binom = [](long a, long b) -> cpp_int {
        if (b < 0 || a < 0 || b > a) return 0;
        cpp_int c = 1;
        for (long i = 1; i <= b; ++i) c = c * (a - b + i) / i;
        return c;
    };
    cpp_int total = 0;
    const long e = static_cast<long>(m) * m + static_cast<long>(n) * n;
    for (int k = 0; k <= r; ++k) {
        const cpp_int first = (e == 0) ? cpp_int(k == 0 ? 1 : 0) : binom(e + k - 1, k);
        total += first * binom(2L * m * n, r - k);
    }
    return total;
}

/// Trivial-intersection property for d in D_{λ|μ, ξ|η}: every mixed-parity block
/// |R_i ∩ d R_j| is at most 1.
inline bool tip_check(const BiComposition& lm, const Permutation& d, const BiComposition& xe) {
    const Composition nu = lm.joined(), rho = xe.joined();
    const IntMatrix A = jmath(nu, d, rho);  // throws for non-minimal d
    const int m = lm.m();
    if (xe.m() != m) throw std::invalid_argument("profile mismatch");
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j)
            if (hat(i + 1, m) + hat(j + 1, m) == 1 && A(i, j) > 1) return false;
    return true;
}

enum class SignedVariant { pm, mp };

/// w_A^{+,-} (pm) or w_A^{-,+} (mp).
inline Permutation signed_words(const SuperMatrix& A, SignedVariant variant) {
    const int N = A.m() + A.n();
    std::vector<bool> rev(static_cast<std::size_t>(N)), up(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) {
        const bool even = i < A.m();
        rev[static_cast<std::size_t>(i)] = variant == SignedVariant::pm ? even : !even;
        up[static_cast<std::size_t>(i)] = variant == SignedVariant::pm ? even : !even;
    }
    return pseudo_matrix_word(A.entries(), rev, up);
}

/// Membership in D^{+,-}_{λ|μ,ξ|η} via descents.
inline bool in_D_pm(const BiComposition& lm, const Permutation& x, const BiComposition& xe) {
    return is_max_left(lm.even_star(), x) && is_min_left(lm.odd_star(), x) && is_max_right(x, xe.even_star()) &&
           is_min_right(x, xe.odd_star());
}
inline bool in_D_mp(const BiComposition& lm, const Permutation& x, const BiComposition& xe) {
    return is_min_left(lm.even_star(), x) && is_max_left(lm.odd_star(), x) && is_min_right(x, xe.even_star()) &&
           is_max_right(x, xe.odd_star());
}

struct DoubleCosetData {
    Permutation d;       ///< w_A^-
    Permutation d_star;  ///< longest element of S_{λ*} d S_{ξ*}
    Permutation star_d;  ///< longest element of S_{*μ} d S_{*η}
    Composition alpha;   ///< S_{α*} = d⁻¹ S_{λ*} d ∩ S_{ξ*}
    Composition beta;    ///< S_{*β} = d⁻¹ S_{*μ} d ∩ S_{*η}
};

inline DoubleCosetData double_coset_data(const SuperMatrix& A) {
    const int N = A.m() + A.n();
    std::vector<int> alpha, beta;
    for (int j = 0; j < N; ++j)
        for (int i = 0; i < N; ++i) (j < A.m() ? alpha : beta).push_back(A(i, j));
    return {coset_words(A.entries(), WordVariant::minus), signed_words(A, SignedVariant::pm),
            signed_words(A, SignedVariant::mp), Composition(alpha), Composition(beta)};
}

/// Composition whose Young subgroup is generated by the given simple reflections.
inline Composition composition_from_generators(int r, const std::vector<int>& gens) {
    std::vector<bool> in(static_cast<std::size_t>(r + 1), false);
    for (int k : gens) in[static_cast<std::size_t>(k)] = true;
    std::vector<int> parts;
    int run = 1;
    for (int k = 1; k < r; ++k) {
        if (in[static_cast<std::size_t>(k)]) {
            ++run;
        } else {
            parts.push_back(run);
            run = 1;
        }
    }
    if (r > 0) parts.push_back(run);
    return Composition(parts);
}

/// Young subgroup d⁻¹ S_nu d ∩ S_rho for d minimal in its (S_nu, S_rho) double coset,
/// returned as a composition of r.
inline Composition intersect_parabolic(const Composition& nu, const Permutation& d, const Composition& rho) {
    std::vector<int> gens;
    for (int k : rho.generators())
        if (d(k + 1) == d(k) + 1 && nu.block_of(d(k)) == nu.block_of(d(k + 1))) gens.push_back(k);
    return composition_from_generators(d.rank(), gens);
}

}  // namespace qss
