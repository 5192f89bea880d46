#pragma once

// Verification suites behind `qss verify`. Each check yields one record; a suite
// passes when every record does.

#include <algorithm>
#include <future>
#include <sstream>
#include <string>
#include <vector>

#include "supercells.hpp"
#include "tensor.hpp"

namespace qss {

struct CheckResult {
    std::string suite;
    std::string check;
    bool pass = true;
    std::string expected;
    std::string got;
    std::string counterexample;
};

namespace detail {

inline CheckResult count_check(const std::string& suite, const std::string& check, const std::string& expected,
                               const std::string& got) {
    return {suite, check, expected == got, expected, got, {}};
}

inline CheckResult flag_check(const std::string& suite, const std::string& check, std::size_t failures,
                              const std::string& first_failure) {
    return {suite, check, failures == 0, "0 failures", std::to_string(failures) + " failures",
            failures ? first_failure : std::string{}};
}

inline std::string bigint_string(const BigInt& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

}  // namespace detail

/// |M(m|n,r)| against the rank formula, and against Σ (dim Δ(ν))².
inline std::vector<CheckResult> verify_dims(int m, int n, int r) {
    const std::string suite = "dims";
    const std::size_t M = enumerate_matrices(m, n, r).size();
    std::vector<CheckResult> out;
    out.push_back(detail::count_check(suite, "rank_formula", detail::bigint_string(rank_formula(m, n, r)),
                                      std::to_string(M)));
    std::size_t sum = 0;
    for (const auto& nu : enumerate_hooks(m, n, r)) {
        const std::size_t d = cell_module_dimension(nu, m, n);
        sum += d * d;
    }
    out.push_back(detail::count_check(suite, "cell_module_squares", std::to_string(M), std::to_string(sum)));
    return out;
}

/// ∂ and ∂⁻¹ are mutually inverse bijections M(m|n,r) ↔ pairs of supertableaux.
inline std::vector<CheckResult> verify_rsk(int m, int n, int r) {
    const std::string suite = "rsk";
    const auto M = enumerate_matrices(m, n, r);
    std::size_t bad_round = 0;
    std::string first;
    std::set<std::tuple<Composition, Tableau, Tableau>> images;
    for (const auto& A : M) {
        const SuperTableauPair p = rsk_super(A);
        images.emplace(p.nu, p.S, p.T);
        const SuperMatrix back = rsk_super_inverse(p.S, p.T, A.ro(), A.co());
        if (back != A) {
            if (!bad_round) first = A.to_string();
            ++bad_round;
        }
    }
    // pairs of supertableaux of one hook shape with contents in Λ(m|n,r)
    std::size_t pairs = 0;
    const auto weights = enumerate_weights(m, n, r);
    for (const auto& nu : enumerate_hooks(m, n, r)) {
        std::size_t k = 0;
        for (const auto& c : weights) k += enumerate_supertableaux(nu, c).size();
        pairs += k * k;
    }
    std::vector<CheckResult> out;
    out.push_back(detail::flag_check(suite, "inverse_round_trip", bad_round, first));
    out.push_back(detail::count_check(suite, "injective", std::to_string(M.size()), std::to_string(images.size())));
    out.push_back(detail::count_check(suite, "surjective", std::to_string(pairs), std::to_string(M.size())));
    return out;
}

/// Bar-matrix identities and bar invariance of the canonical bases, block by block.
inline std::vector<CheckResult> verify_bar(int m, int n, int r) {
    const std::string suite = "bar";
    const SchurAlgebra S(m, n, r);
    std::size_t diag = 0, rr = 0, tt = 0, c_fixed = 0, c_tri = 0, c_prime = 0, theta_fixed = 0, remark = 0;
    std::string f_diag, f_rr, f_tt, f_fixed, f_tri, f_prime, f_theta, f_remark;
    auto note = [](std::size_t& count, std::string& first, const std::string& what) {
        if (!count) first = what;
        ++count;
    };
    auto beta_factor = [&](const SuperMatrix& A) {
        const Composition& beta = S.entry(A).data.beta;
        return LaurentPoly::v(beta.longest_length()) * poincare(beta.parts()).bar();
    };
    for (const auto& A : S.basis())
        if (S.st_prime_D(A) != beta_factor(A) * S.st_D(A)) note(tt, f_tt, A.to_string());
    for (const auto& lm : S.weights())
        for (const auto& xe : S.weights()) {
            const BarMatrix& bm = S.bar_matrix(lm, xe);
            const std::size_t N = bm.basis.size();
            if (!N) continue;
            const CanonicalBlock& cb = S.canonical_basis(lm, xe, CanonicalFlavor::C);
            const CanonicalBlock& cbp = S.canonical_basis(lm, xe, CanonicalFlavor::C_prime);
            // 𝖢 = 𝖢′ is expected when the column weight is ω, i.e. every part is at most 1
            const auto cj = xe.joined().parts();
            const bool one_sided = std::all_of(cj.begin(), cj.end(), [](int p) { return p <= 1; });
            for (std::size_t i = 0; i < N; ++i) {
                const SuperMatrix& C = bm.basis[i];
                if (bm.r[i][i] != LaurentPoly(1)) note(diag, f_diag, C.to_string());
                for (std::size_t j = 0; j < N; ++j) {
                    const SuperMatrix& D = bm.basis[j];
                    const Composition& bD = S.entry(D).data.beta;
                    const RationalFn lhs(bm.r_star[i][j] * beta_factor(C));
                    const RationalFn rhs = RationalFn(bm.r[i][j]) *
                                           RationalFn(LaurentPoly::v(-bD.longest_length()) * poincare(bD.parts()));
                    if (lhs != rhs) note(rr, f_rr, C.to_string() + " " + D.to_string());
                    const LaurentPoly& p = cb.p[i][j];
                    const bool ok = i == j ? p == LaurentPoly(1)
                                           : p.is_zero() || (p.negative_part() == p && S.leq(C, D));
                    if (!ok) note(c_tri, f_tri, C.to_string() + " " + D.to_string());
                }
                if (qss::bar(cb.elements[i]) != cb.elements[i]) note(c_fixed, f_fixed, C.to_string());
                if (cbp.elements[i] != S.c_prime_direct(C)) note(c_prime, f_prime, C.to_string());
                if (one_sided && cb.elements[i] != cbp.elements[i]) note(remark, f_remark, C.to_string());
                const SchurElement th = S.theta(C);
                if (S.bar(th) != th) note(theta_fixed, f_theta, C.to_string());
            }
        }
    return {detail::flag_check(suite, "r_diagonal", diag, f_diag),
            detail::flag_check(suite, "r_r_star", rr, f_rr),
            detail::flag_check(suite, "T_T_prime", tt, f_tt),
            detail::flag_check(suite, "C_bar_invariant", c_fixed, f_fixed),
            detail::flag_check(suite, "C_unitriangular", c_tri, f_tri),
            detail::flag_check(suite, "C_prime_direct", c_prime, f_prime),
            detail::flag_check(suite, "C_equals_C_prime_at_omega", remark, f_remark),
            detail::flag_check(suite, "Theta_bar_invariant", theta_fixed, f_theta)};
}

/// Cells by definition against RSK fibres, cellularity of Θ′, and cell-module dimensions.
inline std::vector<CheckResult> verify_cellular(int m, int n, int r) {
    const std::string suite = "cellular";
    const KLTable table(r);
    const KLCells kc = kl_cells(r, table);
    const CellPartition def = cell_partition(m, n, r, CellMethod::definition, kc);
    const CellPartition fib = cell_partition(m, n, r, CellMethod::rsk, kc);
    std::vector<CheckResult> out;
    auto agree = [&](const std::string& name, const std::vector<int>& a, const std::vector<int>& b) {
        out.push_back(detail::flag_check(suite, name, same_partition(a, b) ? 0 : 1, "partitions differ"));
    };
    agree("left_cells_rsk", def.left, fib.left);
    agree("right_cells_rsk", def.right, fib.right);
    agree("two_sided_cells_rsk", def.two_sided, fib.two_sided);
    const SchurAlgebra S(m, n, r);
    const CellularReport rep = cellular_check(S, def);
    out.push_back({suite, "cellular_basis", rep.ok(), "triangular, modulo law, dominance, independent, tau swap",
                   std::string(rep.lemma_triangular ? "1" : "0") + (rep.modulo_law ? "1" : "0") +
                       (rep.dominance_vanishing ? "1" : "0") + (rep.independent ? "1" : "0") +
                       (rep.tau_swap ? "1" : "0"),
                   rep.counterexample});
    std::size_t sum = 0;
    for (const auto& nu : enumerate_hooks(m, n, r)) {
        const CellModule mod = cell_module(S, nu);
        if (mod.dim() != cell_module_dimension(nu, m, n))
            out.push_back({suite, "cell_module_dimension", false, std::to_string(cell_module_dimension(nu, m, n)),
                           std::to_string(mod.dim()), nu.to_string()});
        sum += mod.dim() * mod.dim();
    }
    out.push_back(detail::count_check(suite, "sum_of_squares", std::to_string(S.basis().size()), std::to_string(sum)));
    return out;
}

/// Ř relations, H-linearity of f, commutant, image of H and its bicommutant.
inline std::vector<CheckResult> verify_tensor(int m, int n, int r, bool symbolic = false) {
    const std::string suite = "tensor";
    const TensorSpace V(m, n, r);
    std::vector<CheckResult> out;
    std::vector<Matrix<LaurentPoly>> R;
    for (int k = 1; k < r; ++k) R.push_back(V.r_matrix(k));
    const std::size_t N = V.dim();
    auto scaled_identity = [N](const LaurentPoly& c) {
        Matrix<LaurentPoly> I(N, std::vector<LaurentPoly>(N));
        for (std::size_t i = 0; i < N; ++i) I[i][i] = c;
        return I;
    };
    auto plus = [N](Matrix<LaurentPoly> a, const Matrix<LaurentPoly>& b) {
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) a[i][j] += b[i][j];
        return a;
    };
    std::size_t quad = 0, braid = 0;
    for (std::size_t k = 0; k < R.size(); ++k) {
        // (Ř - v)(Ř + v⁻¹) = 0
        const auto a = plus(R[k], scaled_identity(-LaurentPoly::v(1)));
        const auto b = plus(R[k], scaled_identity(LaurentPoly::v(-1)));
        if (multiply(a, b) != scaled_identity(LaurentPoly())) ++quad;
        for (std::size_t l = k + 1; l < R.size(); ++l) {
            if (l == k + 1) {
                if (multiply(multiply(R[k], R[l]), R[k]) != multiply(multiply(R[l], R[k]), R[l])) ++braid;
            } else if (multiply(R[k], R[l]) != multiply(R[l], R[k])) {
                ++braid;
            }
        }
    }
    out.push_back(detail::flag_check(suite, "quadratic_relation", quad, "quadratic relation fails"));
    out.push_back(detail::flag_check(suite, "braid_relations", braid, "braid relation fails"));
    std::size_t linear = 0;
    std::string first;
    for (const auto& i : V.basis()) {
        const TensorVector e = TensorVector::basis(i);
        for (int k = 1; k < r; ++k) {
            TensorImage rhs = V.iso_f(e);
            for (auto& [lm, h] : rhs) h = LaurentPoly::v(-1) * h.times_simple(k);
            if (V.iso_f(V.r_matrix_act(e, k)) != rhs) {
                if (!linear) {
                    first = "i=";
                    for (int c : i) first += std::to_string(c);
                    first += " k=" + std::to_string(k);
                }
                ++linear;
            }
        }
    }
    out.push_back(detail::flag_check(suite, "f_H_linear", linear, first));
    const std::size_t M = enumerate_matrices(m, n, r).size();
    out.push_back(detail::count_check(suite, symbolic ? "commutant_dimension_symbolic" : "commutant_dimension",
                                      std::to_string(M), std::to_string(commutant_dimension(V, symbolic))));
    std::size_t hooks = 0;
    for (const auto& nu : enumerate_hooks(m, n, r)) hooks += specht_dimension(nu) * specht_dimension(nu);
    const std::size_t image = hecke_image_dimension(V);
    out.push_back(detail::count_check(suite, "hecke_image_dimension", std::to_string(hooks), std::to_string(image)));
    out.push_back(
        detail::count_check(suite, "bicommutant_dimension", std::to_string(image), std::to_string(bicommutant_dimension(V))));
    return out;
}

inline const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> names{"dims", "rsk", "bar", "cellular", "tensor"};
    return names;
}

/// Runs the selected suite ("all" runs every suite concurrently; records come back in suite order).
inline std::vector<CheckResult> verify(const std::string& suite, int m, int n, int r, bool symbolic = false) {
    auto run_one = [=](const std::string& s) -> std::vector<CheckResult> {
        if (s == "dims") return verify_dims(m, n, r);
        if (s == "rsk") return verify_rsk(m, n, r);
        if (s == "bar") return verify_bar(m, n, r);
        if (s == "cellular") return verify_cellular(m, n, r);
        if (s == "tensor") return verify_tensor(m, n, r, symbolic);
        throw std::invalid_argument("unknown suite: " + s);
    };
    if (suite != "all") return run_one(suite);
    std::vector<std::future<std::vector<CheckResult>>> jobs;
    for (const auto& s : verify_suites()) jobs.push_back(std::async(std::launch::async, run_one, s));
    std::vector<CheckResult> out;
    for (auto& j : jobs) {
        auto part = j.get();
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace qss
