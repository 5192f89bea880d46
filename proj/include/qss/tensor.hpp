#pragma once

// The tensor superspace V(m|n)^{⊗r} with the right Hecke action through the
// R-matrix, the isomorphism f onto ⊕ x_λ y_μ H, and the commutant computations
// behind the double centralizer property.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coxeter.hpp"
#include "hecke.hpp"
#include "laurent.hpp"
#include "linalg.hpp"
#include "schur.hpp"
#include "super.hpp"

namespace qss {

using MultiIndex = std::vector<int>;

class TensorVector {
public:
    using Terms = std::map<MultiIndex, LaurentPoly>;

    TensorVector() = default;
    static TensorVector basis(const MultiIndex& i, LaurentPoly c = 1) {
        TensorVector x;
        x.add(i, std::move(c));
        return x;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    LaurentPoly coefficient(const MultiIndex& i) const {
        auto it = terms_.find(i);
        return it == terms_.end() ? LaurentPoly() : it->second;
    }

    void add(const MultiIndex& i, const LaurentPoly& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(i, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TensorVector& operator+=(const TensorVector& o) {
        for (const auto& [i, c] : o.terms_) add(i, c);
        return *this;
    }
    friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
    friend TensorVector operator-(TensorVector a, const TensorVector& b) { return a += LaurentPoly(-1) * b; }
    friend TensorVector operator*(const LaurentPoly& s, const TensorVector& x) {
        TensorVector out;
        for (const auto& [i, c] : x.terms_) out.add(i, s * c);
        return out;
    }
    friend bool operator==(const TensorVector&, const TensorVector&) = default;

private:
    Terms terms_;
};

/// Summand-wise element of ⊕_{λ|μ} x_λ y_μ H.
using TensorImage = std::map<BiComposition, HeckeElement>;

class TensorSpace {
public:
    TensorSpace(int m, int n, int r) : m_(m), n_(n), r_(r) {
        if (m < 0 || n < 0 || m + n == 0 || r < 1) throw std::invalid_argument("invalid (m,n,r) for tensor space");
        MultiIndex cur(static_cast<std::size_t>(r), 1);
        const int N = m + n;
        while (true) {
            index_.emplace(cur, basis_.size());
            basis_.push_back(cur);
            int k = r - 1;
            while (k >= 0 && cur[static_cast<std::size_t>(k)] == N) cur[static_cast<std::size_t>(k--)] = 1;
            if (k < 0) break;
            ++cur[static_cast<std::size_t>(k)];
        }
    }

    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    int r() const noexcept { return r_; }
    /// I(m|n,r) in lexicographic order.
    const std::vector<MultiIndex>& basis() const noexcept { return basis_; }
    std::size_t dim() const noexcept { return basis_.size(); }

    std::size_t index(const MultiIndex& i) const {
        auto it = index_.find(i);
        if (it == index_.end()) throw std::invalid_argument("index out of profile");
        return it->second;
    }

    int hat(int c) const { return c <= m_ ? 0 : 1; }

    BiComposition weight(const MultiIndex& i) const {
        index(i);
        std::vector<int> cnt(static_cast<std::size_t>(m_ + n_), 0);
        for (int c : i) ++cnt[static_cast<std::size_t>(c - 1)];
        return split(Composition(cnt), m_);
    }

    /// i_{λ|μ} = (1^{λ_1}, ..., m^{λ_m}, (m+1)^{μ_1}, ...)
    MultiIndex standard_index(const BiComposition& lm) const {
        MultiIndex out;
        const auto parts = lm.joined().parts();
        for (std::size_t c = 0; c < parts.size(); ++c) out.insert(out.end(), static_cast<std::size_t>(parts[c]), static_cast<int>(c + 1));
        return out;
    }

    /// The d ∈ D_{λ|μ} with i = i_{λ|μ} d, i.e. i_k = (i_{λ|μ})_{d(k)}.
    Permutation coset_element(const MultiIndex& i) const {
        const auto parts = weight(i).joined().parts();
        std::vector<int> next(parts.size(), 0);
        int start = 0;
        for (std::size_t c = 0; c < parts.size(); ++c) {
            next[c] = start + 1;
            start += parts[c];
        }
        std::vector<int> d;
        for (int c : i) d.push_back(next[static_cast<std::size_t>(c - 1)]++);
        return Permutation(d);
    }

    /// d̂ = Σ_{k<l, i_k > i_l} î_k î_l
    int dhat(const MultiIndex& i) const {
        int s = 0;
        for (std::size_t k = 0; k < i.size(); ++k)
            for (std::size_t l = k + 1; l < i.size(); ++l)
                if (i[k] > i[l]) s += hat(i[k]) * hat(i[l]);
        return s;
    }

    /// e_i 𝒯_k = e_i Ř_k, 1 <= k <= r-1.
    TensorVector r_matrix_act(const TensorVector& x, int k) const {
        if (k < 1 || k >= r_) throw std::invalid_argument("generator index out of range");
        TensorVector out;
        const std::size_t a = static_cast<std::size_t>(k - 1), b = static_cast<std::size_t>(k);
        for (const auto& [i, coeff] : x.terms()) {
            const int c = i[a], d = i[b];
            if (c == d) {
                out.add(i, coeff * (c <= m_ ? LaurentPoly::v(1) : -LaurentPoly::v(-1)));
                continue;
            }
            MultiIndex swapped = i;
            std::swap(swapped[a], swapped[b]);
            const LaurentPoly sign(hat(c) * hat(d) == 1 ? -1 : 1);
            out.add(swapped, coeff * sign);
            if (c > d) out.add(i, coeff * (LaurentPoly::v(1) - LaurentPoly::v(-1)));
        }
        return out;
    }

    /// x · h, with T_k acting as v Ř_k along a reduced word of each T_w.
    TensorVector hecke_action(const TensorVector& x, const HeckeElement& h) const {
        if (h.rank() != r_) throw std::invalid_argument("Hecke element of the wrong rank");
        TensorVector out;
        for (const auto& [w, c] : h.terms()) {
            TensorVector y = x;
            for (int k : w.reduced_word()) y = LaurentPoly::v(1) * r_matrix_act(y, k);
            out += c * y;
        }
        return out;
    }

    /// f: (-1)^{d̂} e_{i_{λ|μ} d} ↦ x_λ y_μ 𝒯_d
    TensorImage iso_f(const TensorVector& x) const {
        TensorImage out;
        for (const auto& [i, c] : x.terms()) {
            const BiComposition lm = weight(i);
            const Permutation d = coset_element(i);
            const LaurentPoly sign(dhat(i) % 2 == 0 ? 1 : -1);
            HeckeElement h = x_elem(lm) * y_elem(lm) * HeckeElement::basis(d, LaurentPoly::v(-d.length()));
            auto [it, inserted] = out.try_emplace(lm, HeckeElement(r_));
            it->second += (sign * c) * h;
        }
        for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
        return out;
    }

    /// f^{-1}; throws if a summand is not in x_λ y_μ H.
    TensorVector iso_f_inverse(const TensorImage& y) const {
        TensorVector out;
        for (const auto& [lm, h] : y) {
            if (lm.m() != m_ || lm.n() != n_ || lm.total() != r_) throw std::invalid_argument("summand outside the profile");
            const HeckeElement xy = x_elem(lm) * y_elem(lm);
            const MultiIndex j = standard_index(lm);
            HeckeElement rest = h;
            for (const auto& d : coset_reps(lm.joined(), CosetVariant::min)) {
                const LaurentPoly c = h.coefficient(d);
                if (c.is_zero()) continue;
                // h ∋ c T_d = (c v^{l(d)}) 𝒯_d
                rest -= xy * HeckeElement::basis(d, c);
                MultiIndex i(j.size());
                for (std::size_t k = 0; k < j.size(); ++k) i[k] = j[static_cast<std::size_t>(d(static_cast<int>(k + 1)) - 1)];
                const LaurentPoly sign(dhat(i) % 2 == 0 ? 1 : -1);
                out.add(i, sign * c.shift(d.length()));
            }
            if (!rest.is_zero()) throw std::invalid_argument("element is not in x_lambda y_mu H");
        }
        return out;
    }

    /// Matrix of 𝒯_k in the row-vector convention: row i holds e_i 𝒯_k.
    Matrix<LaurentPoly> r_matrix(int k) const {
        Matrix<LaurentPoly> M(dim(), std::vector<LaurentPoly>(dim()));
        for (std::size_t a = 0; a < dim(); ++a) {
            const TensorVector row = r_matrix_act(TensorVector::basis(basis_[a]), k);
            for (const auto& [j, c] : row.terms()) M[a][index(j)] = c;
        }
        return M;
    }

    /// The operator f^{-1} ∘ φ_A ∘ f.
    Matrix<LaurentPoly> phi_operator(const SchurAlgebra& S, const SuperMatrix& A) const {
        Matrix<LaurentPoly> M(dim(), std::vector<LaurentPoly>(dim()));
        const CosetEntry& e = S.entry(A);
        for (std::size_t a = 0; a < dim(); ++a) {
            if (weight(basis_[a]) != e.co) continue;
            TensorImage img;
            for (const auto& [lm, h] : iso_f(TensorVector::basis(basis_[a]))) {
                // h = x_ξ y_η g with g = ±𝒯_d; φ_A sends it to T_A g
                const Permutation d = coset_element(basis_[a]);
                const LaurentPoly g = h.coefficient(d);
                img[e.ro] = e.T * HeckeElement::basis(d, g);
            }
            const TensorVector row = iso_f_inverse(img);
            for (const auto& [j, c] : row.terms()) M[a][index(j)] = c;
        }
        return M;
    }

private:
    int m_, n_, r_;
    std::vector<MultiIndex> basis_;
    std::map<MultiIndex, std::size_t> index_;
};

namespace detail {
inline Matrix<BigRational> specialise(const Matrix<LaurentPoly>& M, const BigRational& v0) {
    Matrix<BigRational> out(M.size(), std::vector<BigRational>(M.empty() ? 0 : M[0].size()));
    for (std::size_t i = 0; i < M.size(); ++i)
        for (std::size_t j = 0; j < M[i].size(); ++j)
            if (!M[i][j].is_zero()) out[i][j] = M[i][j].evaluate(v0);
    return out;
}
inline Matrix<RationalFn> to_rational(const Matrix<LaurentPoly>& M) {
    Matrix<RationalFn> out(M.size(), std::vector<RationalFn>(M.empty() ? 0 : M[0].size()));
    for (std::size_t i = 0; i < M.size(); ++i)
        for (std::size_t j = 0; j < M[i].size(); ++j) out[i][j] = RationalFn(M[i][j]);
    return out;
}

/// Linear system Φ G = G Φ for every G, in the N² unknowns Φ[a][c] (index a*N+c).
template <class F>
Matrix<F> commutant_system(const std::vector<Matrix<F>>& gens, std::size_t N) {
    Matrix<F> rows;
    for (const auto& G : gens)
        for (std::size_t a = 0; a < N; ++a)
            for (std::size_t b = 0; b < N; ++b) {
                std::vector<F> row(N * N, F(0));
                bool any = false;
                for (std::size_t c = 0; c < N; ++c) {
                    if (!field_is_zero(G[c][b])) {
                        row[a * N + c] = row[a * N + c] + G[c][b];
                        any = true;
                    }
                    if (!field_is_zero(G[a][c])) {
                        row[c * N + b] = row[c * N + b] - G[a][c];
                        any = true;
                    }
                }
                if (any) rows.push_back(std::move(row));
            }
    return rows;
}

template <class F>
Matrix<F> unflatten(const std::vector<F>& x, std::size_t N) {
    Matrix<F> M(N, std::vector<F>(N));
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t c = 0; c < N; ++c) M[a][c] = x[a * N + c];
    return M;
}
}  // namespace detail

/// The two evaluation points used for generic-rank certification.
inline std::pair<BigRational, BigRational> default_points() { return {BigRational(7, 3), BigRational(11, 5)}; }

/// dim End_H(V^{⊗r}); dual-point specialisation unless `symbolic`, which solves over Q(v).
inline std::size_t commutant_dimension(const TensorSpace& V, bool symbolic = false) {
    const std::size_t N = V.dim();
    std::vector<Matrix<LaurentPoly>> gens;
    for (int k = 1; k < V.r(); ++k) gens.push_back(V.r_matrix(k));
    if (symbolic) {
        std::vector<Matrix<RationalFn>> g;
        for (const auto& G : gens) g.push_back(detail::to_rational(G));
        return N * N - rank(detail::commutant_system(g, N));
    }
    const auto [p0, p1] = default_points();
    std::size_t dims[2];
    for (int t = 0; t < 2; ++t) {
        std::vector<Matrix<BigRational>> g;
        for (const auto& G : gens) g.push_back(detail::specialise(G, t == 0 ? p0 : p1));
        dims[t] = N * N - rank(detail::commutant_system(g, N));
    }
    if (dims[0] != dims[1]) throw std::runtime_error("commutant dimension differs between evaluation points");
    return dims[0];
}

/// Matrices of T_w (w ∈ S_r) at v = v0, in the order of all_permutations.
inline std::vector<Matrix<BigRational>> hecke_operators(const TensorSpace& V, const BigRational& v0) {
    std::vector<Matrix<BigRational>> R;
    for (int k = 1; k < V.r(); ++k) R.push_back(detail::specialise(V.r_matrix(k), v0));
    std::map<Permutation, Matrix<BigRational>> op;
    Matrix<BigRational> id(V.dim(), std::vector<BigRational>(V.dim()));
    for (std::size_t i = 0; i < V.dim(); ++i) id[i][i] = 1;
    op.emplace(Permutation::identity(V.r()), id);
    std::vector<Permutation> frontier{Permutation::identity(V.r())};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& w : frontier)
            for (int k = 1; k < V.r(); ++k) {
                const Permutation ws = w.right_mult(k);
                if (ws.length() < w.length() || op.count(ws)) continue;
                // T_{ws} = T_w T_s, and T_s acts as v Ř_s
                Matrix<BigRational> M = multiply(op.at(w), R[static_cast<std::size_t>(k - 1)]);
                for (auto& row : M)
                    for (auto& x : row) x *= v0;
                op.emplace(ws, std::move(M));
                next.push_back(ws);
            }
        frontier = std::move(next);
    }
    std::vector<Matrix<BigRational>> out;
    for (const auto& w : all_permutations(V.r())) out.push_back(op.at(w));
    return out;
}

/// dim of the image of H in End(V^{⊗r}), certified at two points.
inline std::size_t hecke_image_dimension(const TensorSpace& V) {
    const auto [p0, p1] = default_points();
    std::size_t dims[2];
    for (int t = 0; t < 2; ++t) {
        Matrix<BigRational> rows;
        for (const auto& M : hecke_operators(V, t == 0 ? p0 : p1)) {
            std::vector<BigRational> flat;
            for (const auto& row : M) flat.insert(flat.end(), row.begin(), row.end());
            rows.push_back(std::move(flat));
        }
        dims[t] = rank(rows);
    }
    if (dims[0] != dims[1]) throw std::runtime_error("image dimension differs between evaluation points");
    return dims[0];
}

/// dim of the commutant of End_H(V^{⊗r}), computed at v0.
inline std::size_t bicommutant_dimension(const TensorSpace& V, const BigRational& v0 = BigRational(7, 3)) {
    const std::size_t N = V.dim();
    std::vector<Matrix<BigRational>> gens;
    for (int k = 1; k < V.r(); ++k) gens.push_back(detail::specialise(V.r_matrix(k), v0));
    const auto basis = kernel(detail::commutant_system(gens, N), N * N);
    std::vector<Matrix<BigRational>> comm;
    for (const auto& x : basis) comm.push_back(detail::unflatten(x, N));
    return N * N - rank(detail::commutant_system(comm, N));
}

}  // namespace qss
