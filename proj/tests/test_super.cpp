#include <gtest/gtest.h>

#include "oracles.hpp"

using qss::BiComposition;
using qss::Composition;
using qss::Permutation;
using qss::SuperMatrix;

namespace {
const SuperMatrix kWorked(1, 2, {{2, 0, 1}, {1, 2, 0}, {1, 2, 1}});

// M(m|n,r) rebuilt from minimal double coset representatives that pass the subgroup TIP test
std::set<SuperMatrix> matrices_via_double_cosets(int m, int n, int r) {
    std::set<SuperMatrix> out;
    for (const auto& lm : qss::enumerate_weights(m, n, r))
        for (const auto& xe : qss::enumerate_weights(m, n, r)) {
            const Composition nu = lm.joined(), rho = xe.joined();
            for (const auto& d : qss::all_permutations(r)) {
                if (!qss::is_min_double(nu, d, rho)) continue;
                if (!oracle::trivial_intersection(lm.even_star(), d, xe.odd_star())) continue;
                if (!oracle::trivial_intersection(lm.odd_star(), d, xe.even_star())) continue;
                out.insert(SuperMatrix(m, n, qss::jmath(nu, d, rho)));
            }
        }
    return out;
}
}  // namespace

TEST(Weights, SmallListing) {
    const auto w = qss::enumerate_weights(1, 1, 2);
    ASSERT_EQ(w.size(), 3u);
    EXPECT_EQ(w[0].to_string(), "2|0");
    EXPECT_EQ(w[1].to_string(), "1|1");
    EXPECT_EQ(w[2].to_string(), "0|2");
    EXPECT_EQ(BiComposition::parse("3|3,4").joined(), Composition({3, 3, 4}));
    EXPECT_THROW(BiComposition::parse("3,3"), std::invalid_argument);
    const BiComposition lm = BiComposition::parse("2|1,1");
    EXPECT_EQ(lm.even_star(), Composition({2, 1, 1}));
    EXPECT_EQ(lm.odd_star(), Composition({1, 1, 1, 1}));
    EXPECT_EQ(BiComposition::parse("1|3").odd_star(), Composition({1, 3}));
}

TEST(Hooks, SmallListing) {
    const auto h = qss::enumerate_hooks(1, 1, 2);
    ASSERT_EQ(h.size(), 2u);
    EXPECT_EQ(h[0], Composition({2}));
    EXPECT_EQ(h[1], Composition({1, 1}));
    EXPECT_EQ(qss::enumerate_hooks(1, 1, 3).size(), 3u);
    EXPECT_FALSE(qss::is_hook(Composition({2, 2}), 1, 1));
    EXPECT_EQ(qss::hook_split(Composition({4, 4, 3, 2, 2, 1}), 2, 4).to_string(), "4,4|4,3,1,0");
    EXPECT_EQ(qss::hook_split(Composition({3, 3, 1}), 1, 3).to_string(), "3|2,1,1");
}

TEST(SuperMatrixType, ParityConstraintAndData) {
    EXPECT_THROW(SuperMatrix(1, 1, {{0, 2}, {0, 0}}), std::invalid_argument);
    EXPECT_THROW(SuperMatrix(1, 1, {{0, 1, 0}, {0, 0, 0}}), std::invalid_argument);
    EXPECT_EQ(kWorked.ro().to_string(), "3|3,4");
    EXPECT_EQ(kWorked.co().to_string(), "4|4,2");
    EXPECT_EQ(kWorked.parity(), (7 + 6) % 2);
    EXPECT_EQ(kWorked.r(), 10);
    EXPECT_EQ(kWorked.transpose().ro(), kWorked.co());
}

TEST(Matrices, CountsAndOrder) {
    const auto M = qss::enumerate_matrices(1, 1, 2);
    EXPECT_EQ(M.size(), 8u);
    EXPECT_TRUE(std::is_sorted(M.begin(), M.end(), [](const SuperMatrix& a, const SuperMatrix& b) {
        return a.entries().a < b.entries().a;
    }));
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= 2; ++n)
            for (int r = 1; r <= 5; ++r) {
                const auto all = qss::enumerate_matrices(m, n, r);
                EXPECT_EQ(qss::BigInt(all.size()), qss::rank_formula(m, n, r)) << m << n << r;
                EXPECT_EQ(std::set<SuperMatrix>(all.begin(), all.end()).size(), all.size());
            }
    EXPECT_EQ(qss::rank_formula(1, 0, 2), 1);
}

TEST(Matrices, RestrictedJmathIsBijective) {
    for (auto [m, n, r] : {std::tuple{1, 1, 2}, std::tuple{1, 1, 3}, std::tuple{2, 1, 3}}) {
        const auto all = qss::enumerate_matrices(m, n, r);
        EXPECT_EQ(matrices_via_double_cosets(m, n, r), std::set<SuperMatrix>(all.begin(), all.end()));
    }
}

TEST(Tip, Examples) {
    const BiComposition even = BiComposition::parse("2|0"), odd = BiComposition::parse("0|2");
    EXPECT_TRUE(qss::tip_check(even, Permutation::identity(2), even));
    EXPECT_FALSE(qss::tip_check(even, Permutation::identity(2), odd));
    EXPECT_TRUE(qss::tip_check(kWorked.ro(), Permutation({1, 2, 4, 7, 5, 6, 8, 9, 3, 10}), kWorked.co()));
    EXPECT_THROW(qss::tip_check(even, Permutation({2, 1}), even), std::invalid_argument);
}

TEST(Tip, MatchesSubgroupIntersection) {
    for (int r = 1; r <= 4; ++r)
        for (const auto& lm : qss::enumerate_weights(2, 1, r))
            for (const auto& xe : qss::enumerate_weights(2, 1, r))
                for (const auto& d : qss::all_permutations(r)) {
                    if (!qss::is_min_double(lm.joined(), d, xe.joined())) continue;
                    const bool expect = oracle::trivial_intersection(lm.even_star(), d, xe.odd_star()) &&
                                        oracle::trivial_intersection(lm.odd_star(), d, xe.even_star());
                    EXPECT_EQ(qss::tip_check(lm, d, xe), expect);
                    if (lm.odd.total() == 0 && xe.odd.total() == 0) {
                        EXPECT_TRUE(expect);
                    }
                }
}

TEST(SignedWords, WorkedExample) {
    EXPECT_EQ(qss::signed_words(kWorked, qss::SignedVariant::pm), Permutation({7, 4, 3, 2, 5, 6, 8, 9, 1, 10}));
    EXPECT_EQ(qss::signed_words(kWorked, qss::SignedVariant::mp), Permutation({1, 2, 6, 10, 9, 8, 5, 4, 7, 3}));
}

TEST(SignedWords, DescentFamiliesAndUniqueness) {
    for (auto [m, n, r] : {std::tuple{2, 1, 4}, std::tuple{1, 1, 3}, std::tuple{1, 2, 3}}) {
        for (const auto& A : qss::enumerate_matrices(m, n, r)) {
            const auto lm = A.ro(), xe = A.co();
            const Permutation pm = qss::signed_words(A, qss::SignedVariant::pm);
            const Permutation mp = qss::signed_words(A, qss::SignedVariant::mp);
            EXPECT_TRUE(qss::in_D_pm(lm, pm, xe)) << A.to_string();
            EXPECT_TRUE(qss::in_D_mp(lm, mp, xe)) << A.to_string();
            EXPECT_EQ(qss::SuperMatrix(m, n, qss::coset_matrix(lm.joined(), pm, xe.joined())), A);
            EXPECT_EQ(qss::SuperMatrix(m, n, qss::coset_matrix(lm.joined(), mp, xe.joined())), A);
            // the double coset contains exactly one element of each signed family
            const Permutation d = qss::coset_words(A.entries(), qss::WordVariant::minus);
            int count_pm = 0, count_mp = 0;
            for (const auto& x : oracle::double_coset(lm.joined(), d, xe.joined())) {
                count_pm += qss::in_D_pm(lm, x, xe);
                count_mp += qss::in_D_mp(lm, x, xe);
            }
            EXPECT_EQ(count_pm, 1);
            EXPECT_EQ(count_mp, 1);
        }
    }
}

TEST(SignedWords, DiagonalCase) {
    for (const auto& lm : qss::enumerate_weights(2, 1, 4)) {
        const SuperMatrix D = SuperMatrix::diagonal(lm);
        EXPECT_EQ(qss::signed_words(D, qss::SignedVariant::pm), qss::longest_element(lm.even_star()));
        EXPECT_EQ(qss::signed_words(D, qss::SignedVariant::mp), qss::longest_element(lm.odd_star()));
    }
}

TEST(DoubleCosetData, LengthIdentities) {
    for (auto [m, n, r] : {std::tuple{1, 1, 3}, std::tuple{2, 1, 3}, std::tuple{1, 2, 4}}) {
        for (const auto& A : qss::enumerate_matrices(m, n, r)) {
            const auto D = qss::double_coset_data(A);
            const auto lm = A.ro(), xe = A.co();
            const Permutation wplus = qss::coset_words(A.entries(), qss::WordVariant::plus);
            const int lhs = wplus.length();
            EXPECT_EQ(lhs, lm.even.longest_length() + lm.odd.longest_length() + D.d.length() +
                               xe.even.longest_length() - D.alpha.longest_length() + xe.odd.longest_length() -
                               D.beta.longest_length());
            EXPECT_EQ(lhs, D.d_star.length() + D.star_d.length() - D.d.length());
            // d* is the longest element of S_{λ*} d S_{ξ*}, *d of S_{*μ} d S_{*η}
            EXPECT_EQ(D.d_star, oracle::longest_of(oracle::double_coset(lm.even_star(), D.d, xe.even_star())));
            EXPECT_EQ(D.star_d, oracle::longest_of(oracle::double_coset(lm.odd_star(), D.d, xe.odd_star())));
            // S_{α*} and S_{*β} are the stated intersections
            const Composition ones_a(std::vector<int>(static_cast<std::size_t>(xe.odd.total()), 1));
            const Composition ones_b(std::vector<int>(static_cast<std::size_t>(xe.even.total()), 1));
            EXPECT_EQ(qss::join(D.alpha, ones_a).generators(),
                      qss::intersect_parabolic(lm.even_star(), D.d, xe.even_star()).generators());
            EXPECT_EQ(qss::join(ones_b, D.beta).generators(),
                      qss::intersect_parabolic(lm.odd_star(), D.d, xe.odd_star()).generators());
        }
    }
}

TEST(DoubleCosetData, DiagonalIsParabolic) {
    for (const auto& lm : qss::enumerate_weights(1, 2, 3)) {
        const auto D = qss::double_coset_data(SuperMatrix::diagonal(lm));
        EXPECT_TRUE(D.d.is_identity());
        auto nonzero = [](const Composition& c) {
            std::vector<int> v;
            for (int p : c.parts())
                if (p) v.push_back(p);
            return v;
        };
        EXPECT_EQ(nonzero(D.alpha), nonzero(lm.even));
        EXPECT_EQ(nonzero(D.beta), nonzero(lm.odd));
    }
}

TEST(IntersectParabolic, MatchesEnumeration) {
    for (int r = 2; r <= 5; ++r)
        for (const auto& nu : qss::compositions(2, r))
            for (const auto& rho : qss::compositions(3, r))
                for (const auto& d : qss::all_permutations(r)) {
                    if (!qss::is_min_double(nu, d, rho)) continue;
                    const Composition c = qss::intersect_parabolic(nu, d, rho);
                    std::set<Permutation> lhs;
                    const auto S = qss::young_subgroup(nu);
                    std::set<Permutation> Sset(S.begin(), S.end());
                    for (const auto& x : qss::young_subgroup(rho))
                        if (Sset.count(d * x * d.inverse())) lhs.insert(x);
                    const auto Y = qss::young_subgroup(c);
                    EXPECT_EQ(lhs, std::set<Permutation>(Y.begin(), Y.end()));
                }
}
