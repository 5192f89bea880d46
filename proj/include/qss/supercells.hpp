#pragma once

// Super cells of M(m|n,r), the cellular structure of the Θ′-basis, cell modules Δ(ν)
// and the canonical basis of the tensor space seen through E(m|n,r).

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hecke.hpp"
#include "linalg.hpp"
#include "schur.hpp"
#include "super.hpp"
#include "tableaux.hpp"

namespace qss {

struct CellPartition {
    std::vector<SuperMatrix> elements;
    std::vector<int> left, right, two_sided;
    /// Only filled by the definition method: leq_left[i][j] means elements[i] <=_L elements[j].
    std::vector<std::vector<bool>> leq_left, leq_right, leq_two_sided;
};

enum class CellMethod { definition, rsk };

/// True when two labelings induce the same equivalence relation.
inline bool same_partition(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    std::map<int, int> ab, ba;
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto [x, okx] = ab.emplace(a[i], b[i]);
        auto [y, oky] = ba.emplace(b[i], a[i]);
        if (x->second != b[i] || y->second != a[i]) return false;
    }
    return true;
}

namespace detail {
template <class Key>
std::vector<int> label_by(const std::vector<Key>& keys) {
    std::map<Key, int> ids;
    std::vector<int> out;
    for (const auto& k : keys) out.push_back(ids.emplace(k, static_cast<int>(ids.size())).first->second);
    return out;
}
}  // namespace detail

/// Left/right/two-sided super cells; `kl` must be the KL cells of S_r.
inline CellPartition cell_partition(int m, int n, int r, CellMethod method, const KLCells& kl) {
    CellPartition out;
    out.elements = enumerate_matrices(m, n, r);
    const std::size_t N = out.elements.size();
    if (method == CellMethod::rsk) {
        std::vector<Tableau> S, T;
        std::vector<Composition> nu;
        for (const auto& A : out.elements) {
            const auto p = rsk_super(A);
            S.push_back(p.S);
            T.push_back(p.T);
            nu.push_back(p.nu);
        }
        out.left = detail::label_by(T);
        out.right = detail::label_by(S);
        out.two_sided = detail::label_by(nu);
        return out;
    }
    std::map<Permutation, std::size_t> pos;
    for (std::size_t i = 0; i < kl.elements.size(); ++i) pos[kl.elements[i]] = i;
    std::map<SuperMatrix, std::size_t> idx;
    for (std::size_t i = 0; i < N; ++i) idx[out.elements[i]] = i;
    std::vector<std::size_t> w(N), t(N);
    std::vector<BiComposition> co(N);
    for (std::size_t i = 0; i < N; ++i) {
        w[i] = pos.at(signed_words(out.elements[i], SignedVariant::pm));
        co[i] = out.elements[i].co();
        t[i] = idx.at(out.elements[i].transpose());
    }
    out.leq_left.assign(N, std::vector<bool>(N, false));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) out.leq_left[i][j] = co[i] == co[j] && kl.leq_left[w[i]][w[j]];
    out.leq_right.assign(N, std::vector<bool>(N, false));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) out.leq_right[i][j] = out.leq_left[t[i]][t[j]];
    std::vector<std::vector<bool>> both(N, std::vector<bool>(N, false));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) both[i][j] = out.leq_left[i][j] || out.leq_right[i][j];
    out.leq_two_sided = detail::transitive_closure(both);
    out.left = detail::classes_of(out.leq_left);
    out.right = detail::classes_of(out.leq_right);
    out.two_sided = detail::classes_of(out.leq_two_sided);
    return out;
}

inline CellPartition cell_partition(int m, int n, int r, CellMethod method) {
    KLTable table(r);
    return cell_partition(m, n, r, method, kl_cells(r, table));
}

/// |I(ν)| = Σ_{λ|μ} |T^sss(ν, λ|μ)|, the dimension of Δ(ν).
inline std::size_t cell_module_dimension(const Composition& nu, int m, int n) {
    std::size_t d = 0;
    for (const auto& lm : enumerate_weights(m, n, nu.total())) d += enumerate_supertableaux(nu, lm).size();
    return d;
}

/// f^ν, the number of standard tableaux of shape ν.
inline std::size_t specht_dimension(const Composition& nu) { return standard_tableaux(nu).size(); }

/// Λ⁺(r)_{m|n} in the filtration order: dominance refined by lexicographically largest first.
inline std::vector<Composition> filtration_order(int m, int n, int r) {
    auto hooks = enumerate_hooks(m, n, r);
    std::sort(hooks.begin(), hooks.end(), [](const Composition& a, const Composition& b) { return b < a; });
    return hooks;
}

inline BiComposition content_of(const Tableau& t, int m, int n) {
    return split(Composition(content(t, m + n)), m);
}

/// Rescaled Θ′_A sending x_ξ y_η (rather than x′_ξ y′_η) to 𝖢′_A; τ swaps these exactly.
inline SchurElement theta_balanced(const SchurAlgebra& S, const SuperMatrix& A) {
    const BiComposition co = A.co();
    return LaurentPoly::v(co.odd.longest_length() - co.even.longest_length()) * S.theta_prime(A);
}

struct CellularReport {
    bool lemma_triangular = true;  ///< f_{A,B,C} ≠ 0 implies C ≤_L B and C ≤_R A
    bool modulo_law = true;        ///< surviving terms sit in the left cell of B and right cell of A
    bool dominance_vanishing = true;  ///< λ ▷ ν forces the product into S^{▷ν}
    bool independent = true;       ///< coefficients do not depend on T′
    bool tau_swap = true;          ///< τ(Θ″^ν_{S,T}) = Θ″^ν_{T,S}
    std::size_t products = 0;
    std::string counterexample;

    bool ok() const { return lemma_triangular && modulo_law && dominance_vanishing && independent && tau_swap; }
};

/// Cellularity of the Θ′-basis, with products taken by composition.
inline CellularReport cellular_check(const SchurAlgebra& S, const CellPartition& cells,
                                     const std::vector<std::pair<SuperMatrix, SuperMatrix>>* pairs = nullptr) {
    CellularReport rep;
    std::map<SuperMatrix, std::size_t> idx;
    for (std::size_t i = 0; i < cells.elements.size(); ++i) idx[cells.elements[i]] = i;
    std::map<SuperMatrix, SuperTableauPair> rs;
    for (const auto& A : S.basis()) rs.emplace(A, rsk_super(A));
    auto fail = [&](bool& flag, const std::string& what) {
        if (flag && rep.counterexample.empty()) rep.counterexample = what;
        flag = false;
    };
    for (const auto& A : S.basis())
        if (!(tau(theta_balanced(S, A)) == theta_balanced(S, A.transpose())))
            fail(rep.tau_swap, "tau " + A.to_string());

    std::vector<std::pair<SuperMatrix, SuperMatrix>> all;
    if (!pairs) {
        for (const auto& A : S.basis())
            for (const auto& B : S.basis()) all.emplace_back(A, B);
        pairs = &all;
    }
    std::map<std::pair<SuperMatrix, Tableau>, std::map<Tableau, RationalFn>> seen;
    for (const auto& [A, B] : *pairs) {
        const SchurElementQ& f = S.theta_prime_product(A, B, Product::compose);
        ++rep.products;
        const auto& ra = rs.at(A);
        const auto& rb = rs.at(B);
        const std::string where = A.to_string() + " * " + B.to_string();
        std::map<Tableau, RationalFn> reduced;
        for (const auto& [C, c] : f.terms()) {
            const std::size_t ci = idx.at(C), ai = idx.at(A), bi = idx.at(B);
            if (!cells.leq_left.empty() && (!cells.leq_left[ci][bi] || !cells.leq_right[ci][ai]))
                fail(rep.lemma_triangular, where);
            const auto& rc = rs.at(C);
            if (rc.nu == rb.nu) {
                if (rc.T != rb.T) fail(rep.modulo_law, where);
                if (ra.nu == rb.nu && rc.S != ra.S) fail(rep.modulo_law, where);
                if (ra.nu != rb.nu && dominates(ra.nu, rb.nu)) fail(rep.dominance_vanishing, where);
                reduced.emplace(rc.S, c);
            } else if (!dominates(rc.nu, rb.nu)) {
                fail(rep.modulo_law, where);
            }
        }
        auto [it, inserted] = seen.emplace(std::make_pair(A, rb.S), reduced);
        if (!inserted && it->second != reduced) fail(rep.independent, where);
    }
    return rep;
}

/// Δ(ν)_T: basis I(ν) (supertableaux S of shape ν), acted on through Θ′ structure constants mod S^{▷ν}.
struct CellModule {
    Composition nu;
    Tableau T;
    std::vector<Tableau> basis;
    std::map<SuperMatrix, Matrix<RationalFn>> action;  ///< ρ(Θ′_A), column j = image of basis[j]

    std::size_t dim() const { return basis.size(); }
};

inline std::vector<Tableau> cell_index_set(const Composition& nu, int m, int n) {
    std::vector<Tableau> out;
    for (const auto& lm : enumerate_weights(m, n, nu.total()))
        for (auto& t : enumerate_supertableaux(nu, lm)) out.push_back(std::move(t));
    return out;
}

/// Generators used for the cell-module action: diagonal matrices and those whose row and
/// column weights differ by moving one unit between adjacent slots.
inline std::vector<SuperMatrix> cell_module_generators(const SchurAlgebra& S) {
    std::vector<SuperMatrix> out;
    for (const auto& A : S.basis()) {
        if (A.is_diagonal()) {
            out.push_back(A);
            continue;
        }
        const auto a = A.ro().joined().parts(), b = A.co().joined().parts();
        std::vector<int> diff;
        for (std::size_t i = 0; i < a.size(); ++i) diff.push_back(a[i] - b[i]);
        int nonzero = 0;
        bool adjacent = false;
        for (std::size_t i = 0; i < diff.size(); ++i) {
            if (diff[i] != 0) ++nonzero;
            if (i + 1 < diff.size() && std::abs(diff[i]) == 1 && diff[i] + diff[i + 1] == 0) adjacent = true;
        }
        // A must also differ from a diagonal by a single off-diagonal unit
        int off = 0;
        for (int i = 0; i < A.m() + A.n(); ++i)
            for (int j = 0; j < A.m() + A.n(); ++j)
                if (i != j) off += A(i, j);
        if (nonzero == 2 && adjacent && off == 1) out.push_back(A);
    }
    return out;
}

/// Δ(ν)_T with T ∈ I(ν); the default T is the canonical supertableau of content ν'|ν''.
/// The action is computed for every basis element when r <= 3 and for the generators otherwise.
inline CellModule cell_module(const SchurAlgebra& S, const Composition& nu, const Tableau* T = nullptr) {
    const int m = S.m(), n = S.n();
    if (nu.total() != S.r() || !is_hook(nu, m, n)) throw std::invalid_argument("not a hook partition of r");
    CellModule mod;
    mod.nu = nu.trimmed();
    mod.T = T ? *T : canonical_supertableau(mod.nu, m, n);
    mod.basis = cell_index_set(mod.nu, m, n);
    std::map<Tableau, std::size_t> where;
    for (std::size_t i = 0; i < mod.basis.size(); ++i) where[mod.basis[i]] = i;
    if (!where.count(mod.T)) throw std::invalid_argument("T is not in I(nu)");
    const BiComposition tc = content_of(mod.T, m, n);
    std::vector<SuperMatrix> cols;
    for (const auto& s : mod.basis) cols.push_back(rsk_super_inverse(s, mod.T, content_of(s, m, n), tc));
    const auto acting = S.r() <= 3 ? S.basis() : cell_module_generators(S);
    const std::size_t d = mod.basis.size();
    for (const auto& A : acting) {
        Matrix<RationalFn> M(d, std::vector<RationalFn>(d));
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& [C, c] : S.theta_prime_product(A, cols[j], Product::compose).terms()) {
                const auto p = rsk_super(C);
                if (p.nu != mod.nu) continue;
                if (p.T != mod.T) throw std::logic_error("cell module action leaves the left cell");
                M[where.at(p.S)][j] = c;
            }
        mod.action.emplace(A, std::move(M));
    }
    return mod;
}

/// ρ(x) for x in the φ-basis, via Θ′ coordinates. Needs ρ of every Θ′_A in the support.
inline Matrix<RationalFn> represent(const SchurAlgebra& S, const CellModule& mod, const SchurElement& x) {
    const std::size_t d = mod.dim();
    Matrix<RationalFn> out(d, std::vector<RationalFn>(d));
    const SchurElementQ coords = S.to_theta_prime(x);
    for (const auto& [A, c] : coords.terms()) {
        auto it = mod.action.find(A);
        if (it == mod.action.end()) throw std::invalid_argument("no action recorded for " + A.to_string());
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (!it->second[i][j].is_zero()) out[i][j] = out[i][j] + c * it->second[i][j];
    }
    return out;
}

/// rank ρ(φ_{diag(λ|μ)}) for every λ|μ: the weight-space dimensions of Δ(ν).
inline std::vector<std::size_t> weight_dimensions(const SchurAlgebra& S, const CellModule& mod) {
    std::vector<std::size_t> out;
    for (const auto& lm : S.weights()) out.push_back(rank(represent(S, mod, S.phi(SuperMatrix::diagonal(lm)))));
    return out;
}

struct IdempotentReport {
    int m_prime = 0, n_prime = 0;
    std::size_t tsp_size = 0;
    bool ev_bijective = true;        ///< {T_A : A ∈ M_tsp} is a basis of ⊕ x_λ y_μ H
    bool bases_coincide = true;      ///< 𝖢_D = 𝖢′_D and Θ_D = Θ′_D on M_tsp
    bool section_dimensions = true;  ///< |section ν| = dim Δ(ν) f^ν
    bool filtration_stable = true;   ///< Θ_A E_i ⊆ E_i
    bool l_stable = true;            ///< L(ν) is closed under the Θ_A
    std::vector<std::pair<Composition, std::size_t>> sections;
    std::string counterexample;

    bool ok() const { return ev_bijective && bases_coincide && section_dimensions && filtration_stable && l_stable; }
};

/// E(m|n,r) inside S(m′|n′,r) with m′ = m and n′ = max(n, r-m) when m+n < r.
inline IdempotentReport idempotent_picture(int m, int n, int r, const BigRational& v0 = BigRational(7, 3)) {
    IdempotentReport rep;
    rep.m_prime = m;
    rep.n_prime = m + n >= r ? n : std::max(n, r - m);
    const SchurAlgebra S(rep.m_prime, rep.n_prime, r);
    auto embed = [&](const BiComposition& lm) {
        std::vector<int> odd = lm.odd.parts();
        odd.resize(static_cast<std::size_t>(rep.n_prime), 0);
        return BiComposition{lm.even, Composition(odd)};
    };
    std::set<BiComposition> small;
    for (const auto& lm : enumerate_weights(m, n, r)) small.insert(embed(lm));
    std::vector<int> ones(static_cast<std::size_t>(rep.m_prime + rep.n_prime), 0);
    for (int i = 0; i < r; ++i) ones[static_cast<std::size_t>(i)] = 1;
    const BiComposition omega = split(Composition(ones), rep.m_prime);

    std::vector<SuperMatrix> tsp;
    for (const auto& A : S.basis())
        if (A.co() == omega && small.count(A.ro())) tsp.push_back(A);
    rep.tsp_size = tsp.size();
    auto fail = [&](bool& flag, const std::string& what) {
        if (flag && rep.counterexample.empty()) rep.counterexample = what;
        flag = false;
    };

    // ev: φ_A ↦ T_A, one weight space at a time
    const auto perms = all_permutations(r);
    for (const auto& lm : small) {
        std::vector<const SuperMatrix*> part;
        for (const auto& A : tsp)
            if (A.ro() == lm) part.push_back(&A);
        const std::size_t expect = coset_reps(lm.joined(), CosetVariant::min).size();
        Matrix<BigRational> rows;
        for (const auto* A : part) {
            std::vector<BigRational> row;
            for (const auto& w : perms) row.push_back(S.t_D(*A).coefficient(w).evaluate(v0));
            rows.push_back(std::move(row));
        }
        if (part.size() != expect || rank(rows) != expect) fail(rep.ev_bijective, "ev at " + lm.to_string());
    }

    for (const auto& D : tsp) {
        const auto& cb = S.canonical_basis(D.ro(), D.co(), CanonicalFlavor::C);
        const auto& cbp = S.canonical_basis(D.ro(), D.co(), CanonicalFlavor::C_prime);
        const std::size_t j =
            static_cast<std::size_t>(std::find(cb.basis.begin(), cb.basis.end(), D) - cb.basis.begin());
        if (!(cb.elements[j] == cbp.elements[j])) fail(rep.bases_coincide, "C vs C' at " + D.to_string());
        if (!(S.theta(D) == S.theta_prime(D))) fail(rep.bases_coincide, "Theta vs Theta' at " + D.to_string());
    }

    const auto order = filtration_order(m, n, r);
    std::map<Composition, std::size_t> rank_of;
    for (std::size_t i = 0; i < order.size(); ++i) rank_of[order[i]] = i;
    std::map<SuperMatrix, SuperTableauPair> rs;
    for (const auto& A : S.basis()) rs.emplace(A, rsk_super(A));
    std::map<Composition, std::size_t> count;
    for (const auto& D : tsp) ++count[rs.at(D).nu];
    for (const auto& nu : order) {
        const std::size_t expect = cell_module_dimension(nu, m, n) * specht_dimension(nu);
        rep.sections.emplace_back(nu, count[nu]);
        if (count[nu] != expect) fail(rep.section_dimensions, "section " + nu.to_string());
    }

    for (const auto& A : S.basis()) {
        if (!small.count(A.ro()) || !small.count(A.co())) continue;
        const SchurElement ta = S.theta(A);
        for (const auto& D : tsp) {
            if (A.co() != D.ro()) continue;
            const auto& rd = rs.at(D);
            const SchurElementQ prod = S.to_theta_prime(S.multiply(ta, S.theta(D), Product::compose));
            for (const auto& [C, c] : prod.terms()) {
                const auto& rc = rs.at(C);
                if (!rank_of.count(rc.nu) || rank_of.at(rc.nu) > rank_of.at(rd.nu))
                    fail(rep.filtration_stable, A.to_string() + " * " + D.to_string());
                // L(ν) is one left cell of the section; checking every T covers t^ν
                if (rc.nu == rd.nu && rc.T != rd.T) fail(rep.l_stable, A.to_string() + " * " + D.to_string());
            }
        }
    }
    return rep;
}

}  // namespace qss
