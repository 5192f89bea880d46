#pragma once

// The quantum Schur superalgebra S(m|n,r). A homomorphism x_ξ y_η H -> x_λ y_μ H is
// stored through the image of its generator, so φ_A is "T_A" and the composition
// φ_A ∘ φ_B is T_A h_B where T_B = x_ξ y_η h_B.

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "coxeter.hpp"
#include "hecke.hpp"
#include "laurent.hpp"
#include "linalg.hpp"
#include "super.hpp"

namespace qss {

enum class SchurBasis { phi, theta, theta_prime };
enum class Product { super, compose };

/// Finitely supported combination of basis elements indexed by super matrices.
template <class Coeff>
class BasicSchurElement {
public:
    using Terms = std::map<SuperMatrix, Coeff>;

    BasicSchurElement() = default;
    explicit BasicSchurElement(SchurBasis basis) : basis_(basis) {}

    static BasicSchurElement basis_element(const SuperMatrix& A, SchurBasis basis = SchurBasis::phi) {
        BasicSchurElement e(basis);
        e.add(A, Coeff(1));
        return e;
    }

    SchurBasis basis() const noexcept { return basis_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Coeff coefficient(const SuperMatrix& A) const {
        auto it = terms_.find(A);
        return it == terms_.end() ? Coeff() : it->second;
    }

    void add(const SuperMatrix& A, const Coeff& c) {
        if (c.is_zero()) return;
        if (!terms_.empty() && (terms_.begin()->first.m() != A.m() || terms_.begin()->first.n() != A.n() ||
                                terms_.begin()->first.r() != A.r()))
            throw std::invalid_argument("Schur element: profile or degree mismatch");
        auto [it, inserted] = terms_.try_emplace(A, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    BasicSchurElement& operator+=(const BasicSchurElement& o) {
        check(o);
        for (const auto& [A, c] : o.terms_) add(A, c);
        return *this;
    }
    BasicSchurElement& operator-=(const BasicSchurElement& o) {
        check(o);
        for (const auto& [A, c] : o.terms_) add(A, Coeff(0) - c);
        return *this;
    }
    friend BasicSchurElement operator+(BasicSchurElement a, const BasicSchurElement& b) { return a += b; }
    friend BasicSchurElement operator-(BasicSchurElement a, const BasicSchurElement& b) { return a -= b; }
    friend BasicSchurElement operator*(const Coeff& s, const BasicSchurElement& a) {
        BasicSchurElement out(a.basis_);
        for (const auto& [A, c] : a.terms_) out.add(A, s * c);
        return out;
    }
    friend bool operator==(const BasicSchurElement& a, const BasicSchurElement& b) {
        return a.basis_ == b.basis_ && a.terms_ == b.terms_;
    }

    /// Parity of a homogeneous element; throws if mixed.
    int parity() const {
        int p = -1;
        for (const auto& [A, c] : terms_) {
            if (p >= 0 && A.parity() != p) throw std::domain_error("element is not homogeneous");
            p = A.parity();
        }
        return p < 0 ? 0 : p;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [A, c] : terms_) s += (s.empty() ? "" : " + ") + ("(" + c.to_string() + ")*" + A.to_string());
        return s;
    }

private:
    SchurBasis basis_ = SchurBasis::phi;
    Terms terms_;

    void check(const BasicSchurElement& o) const {
        if (o.basis_ != basis_ && !o.is_zero() && !is_zero())
            throw std::invalid_argument("Schur element: basis tag mismatch");
    }
};

using SchurElement = BasicSchurElement<LaurentPoly>;
using SchurElementQ = BasicSchurElement<RationalFn>;

/// τ(φ_A) = φ_{A^T}, extended linearly.
template <class Coeff>
BasicSchurElement<Coeff> tau(const BasicSchurElement<Coeff>& x) {
    BasicSchurElement<Coeff> out(x.basis());
    for (const auto& [A, c] : x.terms()) out.add(A.transpose(), c);
    return out;
}

/// h with T_D = x_λ y_μ h for d minimal in S_{λ|μ} d S_{ξ|η}:
/// h = T_d Σ (-q)^{-l(v)} T_u T_v over u|v ∈ S_{ξ|η} ∩ D_{α|β}.
inline HeckeElement coset_tail(const BiComposition& lm, const Permutation& d, const BiComposition& xe) {
    const int r = d.rank();
    if (lm.total() != r || xe.total() != r) throw std::invalid_argument("degree mismatch");
    if (!is_min_double(lm.joined(), d, xe.joined())) throw std::invalid_argument("d is not a minimal double coset representative");
    const Composition alpha_star = intersect_parabolic(lm.even_star(), d, xe.even_star());
    const Composition beta_star = intersect_parabolic(lm.odd_star(), d, xe.odd_star());
    std::vector<Permutation> us, vs;
    for (const auto& u : young_subgroup(xe.even_star()))
        if (is_min_left(alpha_star, u)) us.push_back(u);
    for (const auto& v : young_subgroup(xe.odd_star()))
        if (is_min_left(beta_star, v)) vs.push_back(v);
    HeckeElement sum(r);
    // u and v move disjoint sets of positions, so T_u T_v = T_{uv}
    for (const auto& u : us)
        for (const auto& v : vs) sum.add(u * v, LaurentPoly::neg_q(-v.length()));
    return HeckeElement::basis(d) * sum;
}

/// T_D for D = S_{λ|μ} d S_{ξ|η}; vanishes when a trivial-intersection property fails.
inline HeckeElement t_D(const BiComposition& lm, const Permutation& d, const BiComposition& xe) {
    return x_elem(lm) * y_elem(lm) * coset_tail(lm, d, xe);
}

/// Double-coset data of one A ∈ M(m|n,r).
struct CosetEntry {
    SuperMatrix A;
    BiComposition ro, co;
    DoubleCosetData data;
    Permutation w_plus;  ///< longest element of the double coset
    HeckeElement tail;   ///< T_A = x_λ y_μ tail
    HeckeElement T;      ///< T_A
    int scale = 0;       ///< 𝒯_A = v^scale T_A
    int phi_tilde = 0;   ///< φ̃_A = v^phi_tilde φ_A
};

/// One (λ|μ, ξ|η) block: r_{C,D}, r*_{C,D} indexed by position in `basis`.
struct BarMatrix {
    std::vector<SuperMatrix> basis;
    Matrix<LaurentPoly> r, r_star;
};

enum class CanonicalFlavor { C, C_prime };

struct CanonicalBlock {
    std::vector<SuperMatrix> basis;
    Matrix<LaurentPoly> p;              ///< 𝖢_D = Σ_C p[C][D] 𝒯_C (resp. 𝒯′_C)
    std::vector<HeckeElement> elements;  ///< 𝖢_D (resp. 𝖢′_D) in the T-basis
};

class SchurAlgebra {
public:
    SchurAlgebra(int m, int n, int r) : SchurAlgebra(m, n, r, std::make_shared<KLTable>(r)) {}

    SchurAlgebra(int m, int n, int r, std::shared_ptr<const KLTable> table)
        : m_(m), n_(n), r_(r), table_(std::move(table)) {
        if (m < 0 || n < 0 || m + n == 0 || r < 0) throw std::invalid_argument("invalid (m,n,r)");
        if (table_->rank() != r) throw std::invalid_argument("KL table rank differs from r");
        basis_ = enumerate_matrices(m, n, r);
        weights_ = enumerate_weights(m, n, r);
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            index_.emplace(basis_[i], i);
            blocks_[{basis_[i].ro(), basis_[i].co()}].push_back(basis_[i]);
        }
    }

    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    int r() const noexcept { return r_; }
    const KLTable& kl() const noexcept { return *table_; }
    const std::vector<SuperMatrix>& basis() const noexcept { return basis_; }
    const std::vector<BiComposition>& weights() const noexcept { return weights_; }

    std::size_t index(const SuperMatrix& A) const {
        auto it = index_.find(A);
        if (it == index_.end()) throw std::invalid_argument("matrix not in M(m|n,r): " + A.to_string());
        return it->second;
    }

    /// M(m|n,r)_{λ|μ,ξ|η} in enumeration order.
    const std::vector<SuperMatrix>& block(const BiComposition& lm, const BiComposition& xe) const {
        static const std::vector<SuperMatrix> empty;
        auto it = blocks_.find({lm, xe});
        return it == blocks_.end() ? empty : it->second;
    }

    const CosetEntry& entry(const SuperMatrix& A) const {
        std::lock_guard<std::recursive_mutex> lock(mu_);
        auto it = entries_.find(A);
        if (it != entries_.end()) return it->second;
        index(A);
        CosetEntry e{A, A.ro(), A.co(), double_coset_data(A), coset_words(A.entries(), WordVariant::plus),
                     HeckeElement(r_), HeckeElement(r_), 0, 0};
        e.tail = coset_tail(e.ro, e.data.d, e.co);
        e.T = x_elem(e.ro) * y_elem(e.ro) * e.tail;
        e.scale = -e.data.d_star.length() + e.data.star_d.length() - e.data.d.length();
        e.phi_tilde = e.scale + e.co.even.longest_length() - e.co.odd.longest_length();
        return entries_.emplace(A, std::move(e)).first->second;
    }

    HeckeElement t_D(const SuperMatrix& A) const { return entry(A).T; }
    /// 𝒯_D = v^{-l(d*)} v^{l(*d)-l(d)} T_D
    HeckeElement st_D(const SuperMatrix& A) const { return LaurentPoly::v(entry(A).scale) * entry(A).T; }
    /// 𝒯′_D = y′_μ 𝒯_{D*} y′_η with 𝒯_{D*} = v^{-l(d*)} Σ_{x ∈ S_{λ*} d S_{ξ*}} T_x
    HeckeElement st_prime_D(const SuperMatrix& A) const {
        const CosetEntry& e = entry(A);
        std::set<Permutation> coset;
        const auto left = young_subgroup(e.ro.even_star()), right = young_subgroup(e.co.even_star());
        for (const auto& a : left)
            for (const auto& b : right) coset.insert(a * e.data.d * b);
        HeckeElement sum(r_);
        for (const auto& x : coset) sum.add(x, LaurentPoly::v(-e.data.d_star.length()));
        return parabolic_elements(e.ro).y_prime * sum * parabolic_elements(e.co).y_prime;
    }

    /// Coefficients a_C with h = Σ a_C T_C over the block; throws if h lies outside that span.
    std::map<SuperMatrix, LaurentPoly> expand_T(const BiComposition& lm, const BiComposition& xe,
                                                const HeckeElement& h) const {
        std::map<SuperMatrix, LaurentPoly> out;
        HeckeElement rest = h;
        for (const auto& C : block(lm, xe)) {
            const LaurentPoly a = h.coefficient(entry(C).data.d);
            if (a.is_zero()) continue;
            out.emplace(C, a);
            rest -= a * entry(C).T;
        }
        if (!rest.is_zero()) throw std::logic_error("element is not in the span of the T_D of its block");
        return out;
    }

    /// D ≤ D′ inside one block, via Bruhat order on the shortest representatives.
    bool leq(const SuperMatrix& C, const SuperMatrix& D) const {
        return bruhat_leq(entry(C).data.d, entry(D).data.d);
    }

    /// φ_A ∘ φ_B in the φ-basis.
    const SchurElement& compose(const SuperMatrix& A, const SuperMatrix& B) const {
        std::lock_guard<std::recursive_mutex> lock(mu_);
        auto key = std::make_pair(A, B);
        auto it = compose_.find(key);
        if (it != compose_.end()) return it->second;
        SchurElement out;
        const CosetEntry& a = entry(A);
        const CosetEntry& b = entry(B);
        if (a.co == b.ro)
            for (const auto& [C, c] : expand_T(a.ro, b.co, a.T * b.tail)) out.add(C, c);
        return compose_.emplace(key, std::move(out)).first->second;
    }

    /// Bilinear extension of compose, with the sign (-1)^{ÂB̂} for the super product.
    template <class Coeff>
    BasicSchurElement<Coeff> multiply(const BasicSchurElement<Coeff>& x, const BasicSchurElement<Coeff>& y,
                                      Product product = Product::super) const {
        if (x.basis() != SchurBasis::phi || y.basis() != SchurBasis::phi)
            throw std::invalid_argument("products are taken in the phi basis");
        BasicSchurElement<Coeff> out;
        for (const auto& [A, a] : x.terms())
            for (const auto& [B, b] : y.terms()) {
                const SchurElement& ab = compose(A, B);
                if (ab.is_zero()) continue;
                Coeff s = a * b;
                if (product == Product::super && A.parity() * B.parity() == 1) s = Coeff(0) - s;
                for (const auto& [C, c] : ab.terms()) out.add(C, s * Coeff(c));
            }
        return out;
    }

    SchurElement phi(const SuperMatrix& A) const {
        index(A);
        return SchurElement::basis_element(A);
    }

    const BarMatrix& bar_matrix(const BiComposition& lm, const BiComposition& xe) const {
        std::lock_guard<std::recursive_mutex> lock(mu_);
        auto it = bar_.find({lm, xe});
        if (it != bar_.end()) return it->second;
        BarMatrix out;
        out.basis = block(lm, xe);
        const std::size_t N = out.basis.size();
        out.r.assign(N, std::vector<LaurentPoly>(N));
        out.r_star.assign(N, std::vector<LaurentPoly>(N));
        std::vector<LaurentPoly> prime_factor(N);
        for (std::size_t i = 0; i < N; ++i) prime_factor[i] = prime_scale(out.basis[i]);
        for (std::size_t j = 0; j < N; ++j) {
            const auto a = expand_T(lm, xe, qss::bar(st_D(out.basis[j])));
            const auto a_star = expand_T(lm, xe, qss::bar(st_prime_D(out.basis[j])));
            for (std::size_t i = 0; i < N; ++i) {
                const SuperMatrix& C = out.basis[i];
                if (auto f = a.find(C); f != a.end()) out.r[i][j] = f->second.shift(-entry(C).scale);
                if (auto f = a_star.find(C); f != a_star.end())
                    out.r_star[i][j] = f->second.divide_exact(prime_factor[i]);
            }
        }
        return bar_.emplace(std::make_pair(lm, xe), std::move(out)).first->second;
    }

    /// 𝒯′_D = c · T_D; returns c (checked to be a scalar multiple).
    LaurentPoly prime_scale(const SuperMatrix& D) const {
        const HeckeElement tp = st_prime_D(D);
        const LaurentPoly c = tp.coefficient(entry(D).data.d);
        if (!(tp - c * entry(D).T).is_zero()) throw std::logic_error("T'_D is not a multiple of T_D");
        return c;
    }

    const CanonicalBlock& canonical_basis(const BiComposition& lm, const BiComposition& xe,
                                          CanonicalFlavor flavor = CanonicalFlavor::C) const {
        std::lock_guard<std::recursive_mutex> lock(mu_);
        auto key = std::make_tuple(lm, xe, flavor);
        auto it = canonical_.find(key);
        if (it != canonical_.end()) return it->second;
        const BarMatrix& bm = bar_matrix(lm, xe);
        const auto& R = flavor == CanonicalFlavor::C ? bm.r : bm.r_star;
        CanonicalBlock out;
        out.basis = bm.basis;
        out.p = unitriangular_solve(out.basis, R);
        const std::size_t N = out.basis.size();
        for (std::size_t j = 0; j < N; ++j) {
            HeckeElement c(r_);
            for (std::size_t i = 0; i < N; ++i) {
                if (out.p[i][j].is_zero()) continue;
                c += out.p[i][j] * (flavor == CanonicalFlavor::C ? st_D(out.basis[i]) : st_prime_D(out.basis[i]));
            }
            out.elements.push_back(std::move(c));
        }
        return canonical_.emplace(key, std::move(out)).first->second;
    }

    /// 𝖢′_D = y′_μ C_{d*} y′_η computed directly from the KL basis.
    HeckeElement c_prime_direct(const SuperMatrix& D) const {
        const CosetEntry& e = entry(D);
        return parabolic_elements(e.ro).y_prime * table_->C(e.data.d_star) * parabolic_elements(e.co).y_prime;
    }

    /// The extended bar involution on S(m|n,r), written in the φ-basis.
    SchurElement bar(const SchurElement& x) const {
        SchurElement out;
        for (const auto& [D, c] : x.terms()) {
            const CosetEntry& e = entry(D);
            const BarMatrix& bm = bar_matrix(e.ro, e.co);
            const std::size_t j = position(bm.basis, D);
            for (std::size_t i = 0; i < bm.basis.size(); ++i) {
                if (bm.r[i][j].is_zero()) continue;
                out.add(bm.basis[i], c.bar() * bm.r[i][j].shift(e.phi_tilde + entry(bm.basis[i]).phi_tilde));
            }
        }
        return out;
    }

    /// φ̃_D in the φ-basis.
    SchurElement phi_tilde(const SuperMatrix& A) const { return LaurentPoly::v(entry(A).phi_tilde) * phi(A); }

    /// Θ_D = Σ_C p_{C,D} φ̃_C.
    SchurElement theta(const SuperMatrix& D) const {
        const CosetEntry& e = entry(D);
        const CanonicalBlock& cb = canonical_basis(e.ro, e.co, CanonicalFlavor::C);
        const std::size_t j = position(cb.basis, D);
        SchurElement out;
        for (std::size_t i = 0; i < cb.basis.size(); ++i)
            if (!cb.p[i][j].is_zero()) out.add(cb.basis[i], cb.p[i][j].shift(entry(cb.basis[i]).phi_tilde));
        return out;
    }

    /// Θ′_D, defined by x′_ξ y′_η ↦ 𝖢′_D.
    SchurElement theta_prime(const SuperMatrix& D) const {
        const CosetEntry& e = entry(D);
        const int shift = e.co.even.longest_length() - e.co.odd.longest_length();
        SchurElement out;
        for (const auto& [C, c] : expand_T(e.ro, e.co, c_prime_direct(D))) out.add(C, c.shift(shift));
        return out;
    }

    /// Coordinates of x in the Θ′-basis (over Q(v)).
    SchurElementQ to_theta_prime(const SchurElement& x) const {
        std::map<std::pair<BiComposition, BiComposition>, std::vector<SuperMatrix>> touched;
        for (const auto& [A, c] : x.terms()) touched[{A.ro(), A.co()}].push_back(A);
        SchurElementQ out(SchurBasis::theta_prime);
        for (const auto& [key, mats] : touched) {
            const auto& blk = block(key.first, key.second);
            const Matrix<RationalFn>& inv = theta_prime_inverse(key.first, key.second);
            for (std::size_t i = 0; i < blk.size(); ++i) {
                RationalFn s;
                for (std::size_t j = 0; j < blk.size(); ++j) {
                    const LaurentPoly c = x.coefficient(blk[j]);
                    if (!c.is_zero() && !inv[i][j].is_zero()) s = s + inv[i][j] * RationalFn(c);
                }
                out.add(blk[i], s);
            }
        }
        return out;
    }

    /// Θ′_A Θ′_B expanded in the Θ′-basis: the structure constants f_{A,B,C}.
    const SchurElementQ& theta_prime_product(const SuperMatrix& A, const SuperMatrix& B,
                                             Product product = Product::compose) const {
        std::lock_guard<std::recursive_mutex> lock(mu_);
        auto key = std::make_tuple(A, B, product);
        auto it = theta_products_.find(key);
        if (it != theta_products_.end()) return it->second;
        SchurElementQ out(SchurBasis::theta_prime);
        if (A.co() == B.ro()) out = to_theta_prime(multiply(theta_prime(A), theta_prime(B), product));
        return theta_products_.emplace(key, std::move(out)).first->second;
    }

private:
    int m_, n_, r_;
    std::shared_ptr<const KLTable> table_;
    std::vector<SuperMatrix> basis_;
    std::vector<BiComposition> weights_;
    std::map<SuperMatrix, std::size_t> index_;
    std::map<std::pair<BiComposition, BiComposition>, std::vector<SuperMatrix>> blocks_;

    mutable std::recursive_mutex mu_;
    mutable std::map<SuperMatrix, CosetEntry> entries_;
    mutable std::map<std::pair<SuperMatrix, SuperMatrix>, SchurElement> compose_;
    mutable std::map<std::pair<BiComposition, BiComposition>, BarMatrix> bar_;
    mutable std::map<std::tuple<BiComposition, BiComposition, CanonicalFlavor>, CanonicalBlock> canonical_;
    mutable std::map<std::pair<BiComposition, BiComposition>, Matrix<RationalFn>> theta_inv_;
    mutable std::map<std::tuple<SuperMatrix, SuperMatrix, Product>, SchurElementQ> theta_products_;

    static std::size_t position(const std::vector<SuperMatrix>& v, const SuperMatrix& A) {
        auto it = std::find(v.begin(), v.end(), A);
        if (it == v.end()) throw std::logic_error("matrix missing from its block");
        return static_cast<std::size_t>(it - v.begin());
    }

    // bar-fixed unitriangular basis: p_{C,D} - bar(p_{C,D}) = Σ_{C<E≤D} r_{C,E} bar(p_{E,D})
    Matrix<LaurentPoly> unitriangular_solve(const std::vector<SuperMatrix>& basis, const Matrix<LaurentPoly>& R) const {
        const std::size_t N = basis.size();
        std::vector<std::size_t> order(N);
        for (std::size_t i = 0; i < N; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return entry(basis[a]).w_plus.length() > entry(basis[b]).w_plus.length();
        });
        Matrix<LaurentPoly> p(N, std::vector<LaurentPoly>(N));
        for (std::size_t j = 0; j < N; ++j) {
            p[j][j] = LaurentPoly(1);
            for (std::size_t i : order) {
                if (i == j) continue;
                LaurentPoly s;
                for (std::size_t k = 0; k < N; ++k)
                    if (k != i && !R[i][k].is_zero() && !p[k][j].is_zero()) s += R[i][k] * p[k][j].bar();
                if (!(s + s.bar()).is_zero()) throw std::logic_error("bar matrix is not an involution");
                p[i][j] = s.negative_part();
            }
        }
        return p;
    }

    const Matrix<RationalFn>& theta_prime_inverse(const BiComposition& lm, const BiComposition& xe) const {
        std::lock_guard<std::recursive_mutex> lock(mu_);
        auto it = theta_inv_.find({lm, xe});
        if (it != theta_inv_.end()) return it->second;
        const auto& blk = block(lm, xe);
        const std::size_t N = blk.size();
        Matrix<RationalFn> M(N, std::vector<RationalFn>(N));
        for (std::size_t j = 0; j < N; ++j) {
            const SchurElement t = theta_prime(blk[j]);
            for (std::size_t i = 0; i < N; ++i) M[i][j] = RationalFn(t.coefficient(blk[i]));
        }
        return theta_inv_.emplace(std::make_pair(lm, xe), inverse(M)).first->second;
    }
};

}  // namespace qss
