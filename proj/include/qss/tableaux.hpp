#pragma once

// Young tableaux, Robinson–Schensted insertion, semistandard supertableaux and
// the RSK super-correspondence between M(m|n,r) and pairs of supertableaux.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "coxeter.hpp"
#include "super.hpp"

namespace qss {

/// Row-wise integer grid; rows have weakly decreasing lengths.
using Tableau = std::vector<std::vector<int>>;

inline Composition shape(const Tableau& t) {
    std::vector<int> s;
    for (const auto& row : t) s.push_back(static_cast<int>(row.size()));
    return Composition(s);
}

/// t^λ: 1..r filled along rows.
inline Tableau row_tableau(const Composition& lambda) {
    Tableau t;
    int next = 1;
    const Composition lam = lambda.trimmed();
    for (int p : lam.parts()) {
        std::vector<int> row;
        for (int i = 0; i < p; ++i) row.push_back(next++);
        t.push_back(row);
    }
    return t;
}

/// t_λ: 1..r filled down columns.
inline Tableau column_tableau(const Composition& lambda) {
    const Composition lam = lambda.trimmed();
    Tableau t(lam.size());
    for (std::size_t i = 0; i < lam.size(); ++i) t[i].assign(static_cast<std::size_t>(lam[i]), 0);
    int next = 1;
    const Composition tr = lam.transpose();
    for (std::size_t c = 0; c < tr.size(); ++c)
        for (int rr = 0; rr < tr[c]; ++rr) t[static_cast<std::size_t>(rr)][c] = next++;
    return t;
}

/// w(t): apply w to every entry.
inline Tableau permute_entries(const Permutation& w, const Tableau& t) {
    Tableau out = t;
    for (auto& row : out)
        for (int& x : row) x = w(x);
    return out;
}

inline bool is_standard(const Tableau& t) {
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < t[i].size(); ++j) {
            if (j + 1 < t[i].size() && t[i][j] >= t[i][j + 1]) return false;
            if (i + 1 < t.size() && j < t[i + 1].size() && t[i][j] >= t[i + 1][j]) return false;
        }
    return true;
}

/// Robinson–Schensted row insertion of w(1), ..., w(r): (P, Q).
inline std::pair<Tableau, Tableau> rs(const Permutation& w) {
    Tableau P, Q;
    for (int k = 1; k <= w.rank(); ++k) {
        int x = w(k);
        std::size_t row = 0;
        while (true) {
            if (row == P.size()) {
                P.push_back({x});
                Q.push_back({k});
                break;
            }
            auto& R = P[row];
            auto it = std::upper_bound(R.begin(), R.end(), x);
            if (it == R.end()) {
                R.push_back(x);
                Q[row].push_back(k);
                break;
            }
            std::swap(*it, x);
            ++row;
        }
    }
    return {P, Q};
}

/// Inverse of rs: the permutation with insertion tableau P and recording tableau Q.
inline Permutation rs_inverse(Tableau P, Tableau Q) {
    if (shape(P) != shape(Q)) throw std::invalid_argument("rs_inverse: shapes differ");
    int r = 0;
    for (const auto& row : P) r += static_cast<int>(row.size());
    std::vector<int> w(static_cast<std::size_t>(r), 0);
    for (int k = r; k >= 1; --k) {
        // locate k in Q (it is at the end of some row)
        std::size_t row = Q.size();
        for (std::size_t i = 0; i < Q.size(); ++i)
            if (!Q[i].empty() && Q[i].back() == k) row = i;
        if (row == Q.size()) throw std::invalid_argument("rs_inverse: Q is not standard");
        Q[row].pop_back();
        int x = P[row].back();
        P[row].pop_back();
        while (row > 0) {
            --row;
            auto& R = P[row];
            // largest entry smaller than x
            auto it = std::lower_bound(R.begin(), R.end(), x);
            if (it == R.begin()) throw std::invalid_argument("rs_inverse: P is not standard");
            --it;
            std::swap(*it, x);
        }
        w[static_cast<std::size_t>(k - 1)] = x;
        while (!P.empty() && P.back().empty()) {
            P.pop_back();
            Q.pop_back();
        }
    }
    return Permutation(w);
}

/// All standard tableaux of shape lambda.
inline std::vector<Tableau> standard_tableaux(const Composition& lambda) {
    const Composition lam = lambda.trimmed();
    const int r = lam.total();
    std::vector<Tableau> out;
    Tableau t(lam.size());
    auto rec = [&](auto&& self, int k) -> void {
        if (k > r) {
            out.push_back(t);
            return;
        }
        for (std::size_t i = 0; i < lam.size(); ++i) {
            const std::size_t len = t[i].size();
            if (static_cast<int>(len) >= lam[i]) continue;
            if (i > 0 && t[i - 1].size() <= len) continue;
            t[i].push_back(k);
            self(self, k + 1);
            t[i].pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

/// Semistandard λ-supertableau of content μ|ν: entries ≤ m strict down columns,
/// entries > m strict along rows, weakly increasing rows and columns.
inline bool is_semistandard_super(const Tableau& t, int m) {
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < t[i].size(); ++j) {
            const int x = t[i][j];
            if (j + 1 < t[i].size()) {
                const int y = t[i][j + 1];
                if (y < x || (y == x && x > m)) return false;
            }
            if (i + 1 < t.size() && j < t[i + 1].size()) {
                const int y = t[i + 1][j];
                if (y < x || (y == x && x <= m)) return false;
            }
        }
    return true;
}

inline std::vector<int> content(const Tableau& t, int entries) {
    std::vector<int> c(static_cast<std::size_t>(entries), 0);
    for (const auto& row : t)
        for (int x : row) {
            if (x < 1 || x > entries) throw std::invalid_argument("tableau entry out of range");
            ++c[static_cast<std::size_t>(x - 1)];
        }
    return c;
}

/// T^sss(shape, content): cell-by-cell backtracking in row-major order.
inline std::vector<Tableau> enumerate_supertableaux(const Composition& shape_, const BiComposition& cont) {
    const Composition lam = shape_.trimmed();
    const int m = cont.m();
    const Composition c = cont.joined();
    if (lam.total() != c.total()) throw std::invalid_argument("content size differs from shape size");
    std::vector<int> left = c.parts();
    std::vector<Tableau> out;
    Tableau t(lam.size());
    auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
        if (i == lam.size()) {
            out.push_back(t);
            return;
        }
        if (static_cast<int>(j) == lam[i]) {
            self(self, i + 1, 0);
            return;
        }
        for (int x = 1; x <= static_cast<int>(c.size()); ++x) {
            if (left[static_cast<std::size_t>(x - 1)] == 0) continue;
            if (j > 0) {
                const int l = t[i][j - 1];
                if (x < l || (x == l && x > m)) continue;
            }
            if (i > 0) {
                const int u = t[i - 1][j];
                if (x < u || (x == u && x <= m)) continue;
            }
            --left[static_cast<std::size_t>(x - 1)];
            t[i].push_back(x);
            self(self, i, j + 1);
            t[i].pop_back();
            ++left[static_cast<std::size_t>(x - 1)];
        }
    };
    rec(rec, 0, 0);
    return out;
}

/// The unique supertableau 𝔗_λ of content λ'|λ''.
inline Tableau canonical_supertableau(const Composition& lambda, int m, int n) {
    auto ts = enumerate_supertableaux(lambda, hook_split(lambda, m, n));
    if (ts.size() != 1) throw std::logic_error("canonical supertableau is not unique");
    return ts.front();
}

/// w_T for T of shape λ and content c: w_T(t^c) has in row i the sorted entries of w(t^λ)
/// at the positions of the entries i of T.
inline Permutation w_T(const Permutation& w, const Tableau& T, const Composition& c) {
    const Tableau wt = permute_entries(w, row_tableau(shape(T)));
    std::vector<std::vector<int>> rows(c.size());
    for (std::size_t i = 0; i < T.size(); ++i)
        for (std::size_t j = 0; j < T[i].size(); ++j) {
            const int e = T[i][j];
            if (e < 1 || e > static_cast<int>(c.size())) throw std::invalid_argument("tableau entry outside content");
            rows[static_cast<std::size_t>(e - 1)].push_back(wt[i][j]);
        }
    std::vector<int> img;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (static_cast<int>(rows[k].size()) != c[k]) throw std::invalid_argument("content mismatch");
        std::sort(rows[k].begin(), rows[k].end());
        img.insert(img.end(), rows[k].begin(), rows[k].end());
    }
    return Permutation(img);
}

/// T^{λ,c}_w(x): entry at (i,j) is the block (1-based) of x⁻¹(a) in c, where a is the (i,j) entry of w(t^λ).
inline Tableau tableau_of(const Permutation& w, const Composition& lambda, const Permutation& x, const Composition& c) {
    const Tableau wt = permute_entries(w, row_tableau(lambda));
    const Permutation xi = x.inverse();
    Tableau T = wt;
    for (auto& row : T)
        for (int& a : row) a = static_cast<int>(c.block_of(xi(a))) + 1;
    return T;
}

/// (w_{0,λ})_T · w_{0,μ*} for T of shape λ and content μ|ν.
inline Permutation tableau_word(const Tableau& T, const Composition& lambda, const BiComposition& cont) {
    if (shape(T).trimmed() != lambda.trimmed()) throw std::invalid_argument("tableau shape mismatch");
    const auto c = content(T, cont.m() + cont.n());
    if (c != cont.joined().parts()) throw std::invalid_argument("content mismatch");
    return w_T(longest_element(lambda.trimmed()), T, cont.joined()) * longest_element(cont.even_star());
}

struct SuperTableauPair {
    Composition nu;
    Tableau S;
    Tableau T;
    friend bool operator==(const SuperTableauPair&, const SuperTableauPair&) = default;
};

/// Read the supertableau determined by x in D^{+,-}_{ν|0, c} ∩ ϖ_ν.
inline Tableau supertableau_from_word(const Permutation& x, const Composition& nu, const BiComposition& c) {
    const Permutation w0nu = longest_element(nu);
    const Permutation z = x * longest_element(c.even_star());  // (w_{0,ν})_S
    return tableau_of(w0nu, nu, z, c.joined());
}

/// ∂(A) = (S, T) via w_A^{+,-} ↦ (P, Q) ↦ (x, y).
inline SuperTableauPair rsk_super(const SuperMatrix& A) {
    const Permutation w = signed_words(A, SignedVariant::pm);
    const auto [P, Q] = rs(w);
    const Composition nu = shape(P).transpose();
    const Tableau t = column_tableau(shape(P));
    const Permutation x = rs_inverse(P, t).inverse();
    const Permutation y = rs_inverse(t, Q);
    return {nu, supertableau_from_word(x, nu, A.ro()), supertableau_from_word(y, nu, A.co())};
}

/// ∂⁻¹: w ⟷ (Q(x), Q(y)) with x = (w_{0,ν})_S w_{0,λ*}, y = (w_{0,ν})_T w_{0,ξ*}.
inline SuperMatrix rsk_super_inverse(const Tableau& S, const Tableau& T, const BiComposition& row_content,
                                     const BiComposition& col_content) {
    const Composition nu = shape(S);
    if (shape(T) != nu) throw std::invalid_argument("supertableaux of different shapes");
    const int m = row_content.m(), n = row_content.n();
    if (!is_semistandard_super(S, m) || !is_semistandard_super(T, m))
        throw std::invalid_argument("not a semistandard supertableau");
    const Permutation x = tableau_word(S, nu, row_content);
    const Permutation y = tableau_word(T, nu, col_content);
    const Permutation w = rs_inverse(rs(x).second, rs(y).second);
    return SuperMatrix(m, n, coset_matrix(row_content.joined(), w, col_content.joined()));
}

}  // namespace qss
