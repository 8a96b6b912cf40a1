#include <doctest.h>

#include <random>

#include "bpp/combinat.hpp"
#include "bpp/polyring.hpp"
#include "bpp/symexpand.hpp"

using namespace bpp;
using combinat::Partition;
using polyring::MultiPoly;

namespace {

// Independent oracle: the tableau-generating-function definition of the
// Schur polynomial, summed over an explicit SSYT enumeration.
MultiPoly schur_by_ssyt(const Partition& lam, int n) {
    MultiPoly f = MultiPoly::zero(n);
    for (const auto& t : combinat::ssyt_enumerate(lam, n))
        f.add_term(0, t.content(n), {}, 1);
    return f;
}

// Reference expansion: literal leading-term peeling, subtracting whole
// Schur polynomials one at a time.
std::map<Partition, Int> schur_expand_naive(MultiPoly f) {
    int n = f.nx();
    std::map<Partition, Int> out;
    while (!f.is_zero()) {
        auto terms = f.sorted_terms();
        const auto& lead = terms.back();  // ascending order: last is lex-max
        Partition lam(lead.x);
        out[lam] = lead.coeff;
        f = f - symexpand::schur_poly(lam, n).scaled(lead.coeff);
    }
    return out;
}

}  // namespace

TEST_CASE("schur_poly examples") {
    for (int n = 1; n <= 4; ++n) {
        MultiPoly want = MultiPoly::one(n);
        for (int i = 1; i <= n; ++i) want = want * MultiPoly::var_x(i, n);
        CHECK(symexpand::schur_poly(Partition(std::vector<int>(n, 1)), n) ==
              want);
    }
    MultiPoly s21 = symexpand::schur_poly(Partition({2, 1}), 3);
    CHECK(s21.term_count() == 7);  // 8 tableaux, two sharing content (1,1,1)
    CHECK(s21.coeff(0, {1, 1, 1}, {}) == 2);
    CHECK(s21.evaluate_all_ones() == 8);
    CHECK(symexpand::schur_poly(Partition({1, 1, 1}), 2).is_zero());
    CHECK(symexpand::schur_poly(Partition(), 3) == MultiPoly::one(3));
}

TEST_CASE("bialternant agrees with the SSYT sum") {
    for (int n = 1; n <= 5; ++n)
        for (int size = 0; size <= 8; ++size)
            for (const auto& lam : combinat::partitions_of(size, n)) {
                CHECK(symexpand::schur_poly(lam, n) == schur_by_ssyt(lam, n));
                // principal specialization counts the tableaux
                CHECK(symexpand::schur_poly(lam, n).evaluate_all_ones() ==
                      Int(combinat::ssyt_enumerate(lam, n).size()));
            }
}

TEST_CASE("antisymmetrize") {
    // the staircase-shifted monomial antisymmetrizes to the Schur polynomial
    for (const auto& mu : {Partition(), Partition({1}), Partition({2, 1}),
                           Partition({3, 1, 1})}) {
        int n = 3;
        std::vector<int> e(n);
        for (int i = 0; i < n; ++i) e[i] = mu.part(i) + n - 1 - i;
        MultiPoly mono = MultiPoly::monomial(1, 0, e, {}, n, 0);
        CHECK(symexpand::antisymmetrize(mono, n) == symexpand::schur_poly(mu, n));
    }
    // repeated exponents annihilate
    MultiPoly f = MultiPoly::monomial(1, 0, {1, 1}, {}, 2, 0);
    CHECK(symexpand::antisymmetrize(f, 2).is_zero());
    CHECK(symexpand::antisymmetrize(MultiPoly::one(1), 1) == MultiPoly::one(1));
}

TEST_CASE("is_symmetric") {
    CHECK(symexpand::is_symmetric(MultiPoly::var_x(1, 2) +
                                  MultiPoly::var_x(2, 2)));
    CHECK_FALSE(symexpand::is_symmetric(MultiPoly::var_x(1, 2)));
    // the product over all 2-subsets is S_4-stable
    std::vector<MultiPoly> forms;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            forms.push_back(MultiPoly::var_x(i, 4) + MultiPoly::var_x(j, 4));
    CHECK(symexpand::is_symmetric(polyring::expand_linear_forms(forms, 4, 0)));
}

TEST_CASE("schur_expand examples") {
    // e_2(X_3) = s_{(1,1)}
    MultiPoly e2 = MultiPoly::var_x(1, 3) * MultiPoly::var_x(2, 3) +
                   MultiPoly::var_x(1, 3) * MultiPoly::var_x(3, 3) +
                   MultiPoly::var_x(2, 3) * MultiPoly::var_x(3, 3);
    auto exp = symexpand::schur_expand(e2);
    REQUIRE(exp.terms.size() == 1);
    CHECK(exp.coeff(Partition({1, 1})) == 1);

    // B_{3,2} = s_{(2,1)}
    MultiPoly b32 = (MultiPoly::var_x(1, 3) + MultiPoly::var_x(2, 3)) *
                    (MultiPoly::var_x(1, 3) + MultiPoly::var_x(3, 3)) *
                    (MultiPoly::var_x(2, 3) + MultiPoly::var_x(3, 3));
    auto expb = symexpand::schur_expand(b32);
    REQUIRE(expb.terms.size() == 1);
    CHECK(expb.coeff(Partition({2, 1})) == 1);

    // the n = 3 staircase product: 1 + 2s_1 + s_2 + 2s_11 + s_21
    std::vector<MultiPoly> forms;
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            forms.push_back(MultiPoly::one(3) + MultiPoly::var_x(i, 3) +
                            MultiPoly::var_x(j, 3));
    auto expn3 =
        symexpand::schur_expand(polyring::expand_linear_forms(forms, 3, 0));
    CHECK(expn3.terms.size() == 5);
    CHECK(expn3.coeff(Partition()) == 1);
    CHECK(expn3.coeff(Partition({1})) == 2);
    CHECK(expn3.coeff(Partition({2})) == 1);
    CHECK(expn3.coeff(Partition({1, 1})) == 2);
    CHECK(expn3.coeff(Partition({2, 1})) == 1);

    CHECK_THROWS_AS(symexpand::schur_expand(MultiPoly::var_x(1, 2)),
                    std::invalid_argument);
}

TEST_CASE("schur_expand round trip on random nonnegative combinations") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        std::map<Partition, Int> coeffs;
        for (int pick = 0; pick < 4; ++pick) {
            int size = static_cast<int>(rng() % 9);
            auto lams = combinat::partitions_of(size, n);
            const Partition& lam = lams[rng() % lams.size()];
            coeffs[lam] += static_cast<int>(rng() % 5);
        }
        MultiPoly f = MultiPoly::zero(n);
        for (const auto& [lam, c] : coeffs)
            f = f + symexpand::schur_poly(lam, n).scaled(c);
        auto exp = symexpand::schur_expand(f);
        for (const auto& [lam, c] : coeffs)
            CHECK(exp.coeff(lam) == c);
        for (const auto& [lam, c] : exp.terms) CHECK(coeffs[lam] == c);
        CHECK(exp.reconstruct() == f);
    }
}

TEST_CASE("schur_expand matches literal leading-term peeling") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 2 + static_cast<int>(rng() % 2);
        // random symmetric polynomial: mix of Schur polynomials with signs
        MultiPoly f = MultiPoly::zero(n);
        for (int pick = 0; pick < 3; ++pick) {
            int size = static_cast<int>(rng() % 6);
            auto lams = combinat::partitions_of(size, n);
            const Partition& lam = lams[rng() % lams.size()];
            int c = static_cast<int>(rng() % 7) - 3;
            f = f + symexpand::schur_poly(lam, n).scaled(c);
        }
        CHECK(symexpand::schur_expand(f).terms == schur_expand_naive(f));
    }

    // also on an inhomogeneous product
    auto f = polyring::expand_linear_forms(
        std::vector<MultiPoly>{
            MultiPoly::one(3) + MultiPoly::var_x(1, 3) + MultiPoly::var_x(2, 3),
            MultiPoly::one(3) + MultiPoly::var_x(1, 3) + MultiPoly::var_x(3, 3),
            MultiPoly::one(3) + MultiPoly::var_x(2, 3) + MultiPoly::var_x(3, 3)},
        3, 0);
    CHECK(symexpand::schur_expand(f).terms == schur_expand_naive(f));
}

TEST_CASE("schur_expand allows negative coefficients") {
    int n = 2;
    MultiPoly f = symexpand::schur_poly(Partition({2}), n) -
                  symexpand::schur_poly(Partition({1, 1}), n);
    auto exp = symexpand::schur_expand(f);
    CHECK(exp.coeff(Partition({2})) == 1);
    CHECK(exp.coeff(Partition({1, 1})) == -1);
    combinat::Partition bad;
    Int bad_coeff;
    CHECK_FALSE(exp.is_positive(&bad, &bad_coeff));
    CHECK(bad == Partition({1, 1}));
    CHECK(bad_coeff == -1);
}

TEST_CASE("antisymmetrized products are symmetric") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 2 + static_cast<int>(rng() % 2);
        MultiPoly g = MultiPoly::zero(n);
        for (int t = 0; t < 3; ++t) {
            std::vector<int> e(n);
            for (int i = 0; i < n; ++i) e[i] = rng() % 3;
            g.add_term(0, e, {}, static_cast<int>(rng() % 5) - 2);
        }
        CHECK(symexpand::is_symmetric(symexpand::antisymmetrize(
            g * symexpand::cached_vandermonde(n), n)));
    }
}

TEST_CASE("double_schur_expand") {
    // x_1 + y_1 with n = m = 1
    MultiPoly f = MultiPoly::var_x(1, 1, 1) + MultiPoly::var_y(1, 1, 1);
    auto exp = symexpand::double_schur_expand(f);
    CHECK(exp.terms.size() == 2);
    CHECK(exp.coeff(Partition({1}), Partition()) == 1);
    CHECK(exp.coeff(Partition(), Partition({1})) == 1);

    // dual Cauchy: coefficient 1 exactly on pairs (lambda, complement')
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m) {
            std::vector<MultiPoly> forms;
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= m; ++j)
                    forms.push_back(MultiPoly::var_x(i, n, m) +
                                    MultiPoly::var_y(j, n, m));
            auto dc = symexpand::double_schur_expand(
                polyring::expand_linear_forms(forms, n, m));
            std::map<std::pair<Partition, Partition>, Int> want;
            for (const auto& lam :
                 combinat::partitions_inside(Partition(std::vector<int>(n, m)))) {
                std::vector<int> comp;
                for (int i = n - 1; i >= 0; --i) comp.push_back(m - lam.part(i));
                want[{lam, Partition(comp).conjugate()}] = 1;
            }
            CHECK(dc.terms == want);
        }

    CHECK_THROWS_AS(symexpand::double_schur_expand(MultiPoly::var_x(1, 2, 1)),
                    std::invalid_argument);
}

TEST_CASE("fundamental quasisymmetric polynomials") {
    // F_emptyset = h_2(X_2)
    MultiPoly h2 = MultiPoly::zero(2);
    h2.add_term(0, {2, 0}, {}, 1);
    h2.add_term(0, {1, 1}, {}, 1);
    h2.add_term(0, {0, 2}, {}, 1);
    CHECK(symexpand::fundamental_qsym({}, 2) == h2);

    MultiPoly x1x2 = MultiPoly::monomial(1, 0, {1, 1}, {}, 2, 0);
    CHECK(symexpand::fundamental_qsym({1}, 2) == x1x2);

    // sum over derangements of S_3: F_{2} + F_{1} = s_{(2,1)}(X_3)
    MultiPoly sum = symexpand::fundamental_qsym({2}, 3) +
                    symexpand::fundamental_qsym({1}, 3);
    CHECK(sum == symexpand::schur_poly(Partition({2, 1}), 3));

    CHECK_THROWS_AS(symexpand::fundamental_qsym({3}, 3), std::invalid_argument);
}
