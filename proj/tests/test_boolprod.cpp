#include <doctest.h>

#include "bpp/boolprod.hpp"
#include "bpp/lascoux.hpp"

using namespace bpp;
using combinat::Partition;
using polyring::MultiPoly;

TEST_CASE("colex subset order") {
    auto s = boolprod::colex_subsets(4, 2);
    REQUIRE(s.size() == 6);
    CHECK(s[0] == std::vector<int>{1, 2});
    CHECK(s[1] == std::vector<int>{1, 3});
    CHECK(s[2] == std::vector<int>{2, 3});
    CHECK(s[3] == std::vector<int>{1, 4});
    CHECK(s[5] == std::vector<int>{3, 4});
}

TEST_CASE("boolean_product") {
    // B_{4,2} is the displayed six-factor product
    MultiPoly direct = MultiPoly::one(4);
    int pairs[6][2] = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    for (auto& pr : pairs)
        direct = direct * (MultiPoly::var_x(pr[0], 4) + MultiPoly::var_x(pr[1], 4));
    CHECK(boolprod::boolean_product(4, 2) == direct);

    for (int n = 1; n <= 5; ++n) {
        MultiPoly want = MultiPoly::one(n);
        for (int i = 1; i <= n; ++i) want = want * MultiPoly::var_x(i, n);
        CHECK(boolprod::boolean_product(n, 1) == want);
    }
    MultiPoly e1 = MultiPoly::var_x(1, 3) + MultiPoly::var_x(2, 3) +
                   MultiPoly::var_x(3, 3);
    CHECK(boolprod::boolean_product(3, 3) == e1);
    CHECK_THROWS_AS(boolprod::boolean_product(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(boolprod::boolean_product(3, 4), std::invalid_argument);
}

TEST_CASE("boolean_total") {
    CHECK(boolprod::boolean_total(1) == MultiPoly::var_x(1, 1));
    MultiPoly n2 = MultiPoly::var_x(1, 2) * MultiPoly::var_x(2, 2) *
                   (MultiPoly::var_x(1, 2) + MultiPoly::var_x(2, 2));
    CHECK(boolprod::boolean_total(2) == n2);
    CHECK(boolprod::boolean_total(2).total_degree() == 3);

    auto res = boolprod::check_schur_positive(boolprod::boolean_total(3));
    CHECK(res.positive);
    CHECK(boolprod::boolean_total(3).total_degree() == 7);
}

TEST_CASE("boolean_q gradings") {
    MultiPoly bq2 = boolprod::boolean_q(2);
    MultiPoly h1 = MultiPoly::var_x(1, 2) + MultiPoly::var_x(2, 2);
    MultiPoly e2 = MultiPoly::var_x(1, 2) * MultiPoly::var_x(2, 2);
    CHECK(bq2.q_coefficient(0) == h1 * h1);
    CHECK(bq2.q_coefficient(1) == h1 * h1);
    CHECK(bq2.q_coefficient(2) == e2);

    // q = 0 specialization is h_1(X_n)^n
    for (int n = 1; n <= 4; ++n) {
        MultiPoly e1 = MultiPoly::zero(n);
        for (int i = 1; i <= n; ++i) e1 = e1 + MultiPoly::var_x(i, n);
        MultiPoly power = MultiPoly::one(n);
        for (int i = 0; i < n; ++i) power = power * e1;
        CHECK(boolprod::boolean_q(n).specialize_q(0) == power);
    }

    // q = -1 specialization recovers B_{n,n-1}
    for (int n = 2; n <= 4; ++n)
        CHECK(boolprod::boolean_q(n).specialize_q(-1) ==
              boolprod::boolean_product(n, n - 1));
}

TEST_CASE("q-grade of boolean_q is e_j h_1^{n-j}") {
    for (int n = 1; n <= 6; ++n) {
        MultiPoly bq = boolprod::boolean_q(n);
        MultiPoly e1 = MultiPoly::zero(n);
        for (int i = 1; i <= n; ++i) e1 = e1 + MultiPoly::var_x(i, n);
        for (int j = 0; j <= n; ++j) {
            MultiPoly ej = symexpand::schur_poly(Partition(std::vector<int>(j, 1)), n);
            MultiPoly want = ej;
            for (int i = 0; i < n - j; ++i) want = want * e1;
            CHECK(bq.q_coefficient(j) == want);
        }
    }
}

TEST_CASE("boolean_q_abstract") {
    auto g = boolprod::boolean_q_abstract(2);
    schurbasis::GradedSchurSeries want;
    want.add(0, 0, Partition({2}), 1);
    want.add(0, 0, Partition({1, 1}), 1);
    want.add(1, 0, Partition({2}), 1);
    want.add(1, 0, Partition({1, 1}), 1);
    want.add(2, 0, Partition({1, 1}), 1);
    CHECK(g == want);

    // restriction matches the concrete q-grading for n <= 5
    for (int n = 1; n <= 5; ++n) {
        auto series = boolprod::boolean_q_abstract(n);
        MultiPoly bq = boolprod::boolean_q(n);
        for (int j = 0; j <= n; ++j) {
            schurbasis::SchurVector grade = schurbasis::as_vector(series.q_slice(j));
            CHECK(schurbasis::restrict_to_vars(grade, n) == bq.q_coefficient(j));
        }
    }
}

TEST_CASE("bivariate_boolean") {
    MultiPoly single = boolprod::bivariate_boolean(2, 2, 2, 2);
    MultiPoly want = MultiPoly::var_x(1, 2, 2) + MultiPoly::var_x(2, 2, 2) +
                     MultiPoly::var_y(1, 2, 2) + MultiPoly::var_y(2, 2, 2);
    CHECK(single == want);

    // n=2, k=2, m=2, l=1: (x1+x2+y1)(x1+x2+y2)
    MultiPoly f = boolprod::bivariate_boolean(2, 2, 2, 1);
    MultiPoly xsum = MultiPoly::var_x(1, 2, 2) + MultiPoly::var_x(2, 2, 2);
    CHECK(f == (xsum + MultiPoly::var_y(1, 2, 2)) *
                   (xsum + MultiPoly::var_y(2, 2, 2)));

    // dual Cauchy special case k = l = 1
    MultiPoly dc = boolprod::bivariate_boolean(2, 1, 2, 1);
    CHECK(dc.total_degree() == 4);
    auto exp = symexpand::double_schur_expand(dc);
    CHECK(exp.is_positive());

    // setting the y variables to zero recovers the one-alphabet product
    for (int n = 2; n <= 3; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(boolprod::bivariate_boolean(n, k, 1, 1).set_y_zero() ==
                  boolprod::boolean_product(n, k));

    // positivity of the double expansion for small parameters
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= n; ++k)
            for (int m = 1; m <= 3; ++m)
                for (int l = 1; l <= m; ++l)
                    CHECK(symexpand::double_schur_expand(
                              boolprod::bivariate_boolean(n, k, m, l))
                              .is_positive());

    CHECK_THROWS_AS(boolprod::bivariate_boolean(2, 3, 2, 1),
                    std::invalid_argument);
}

TEST_CASE("check_schur_positive") {
    auto res = boolprod::check_schur_positive(boolprod::boolean_product(5, 2));
    CHECK(res.positive);
    CHECK(res.expansion.terms.size() == 1);
    CHECK(res.expansion.coeff(Partition({4, 3, 2, 1})) == 1);

    MultiPoly bad = symexpand::schur_poly(Partition({2}), 2) -
                    symexpand::schur_poly(Partition({1, 1}), 2);
    auto resbad = boolprod::check_schur_positive(bad);
    CHECK_FALSE(resbad.positive);
    CHECK(resbad.violation_shape == Partition({1, 1}));
    CHECK(resbad.violation_coeff == -1);

    CHECK(boolprod::check_schur_positive(boolprod::boolean_product(5, 3)).positive);
}
