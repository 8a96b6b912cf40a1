#include <doctest.h>

#include <algorithm>
#include <random>

#include "bpp/boolprod.hpp"
#include "bpp/chern.hpp"
#include "bpp/lascoux.hpp"

using namespace bpp;
using chern::BundleExpr;
using chern::LinForm;
using combinat::Partition;
using polyring::MultiPoly;

namespace {

// test-only oracles on a combined alphabet: direct subset / multiset sums
MultiPoly e_direct(int d, int nx, int ny) {
    int total = nx + ny;
    MultiPoly acc = MultiPoly::zero(nx, ny);
    std::vector<int> idx(d);
    auto var = [&](int i) {
        return i < nx ? MultiPoly::var_x(i + 1, nx, ny)
                      : MultiPoly::var_y(i - nx + 1, nx, ny);
    };
    auto rec = [&](auto&& self, int pos, int lo) -> void {
        if (pos == d) {
            MultiPoly m = MultiPoly::one(nx, ny);
            for (int i : idx) m = m * var(i);
            acc = acc + m;
            return;
        }
        for (int i = lo; i < total; ++i) {
            idx[pos] = i;
            self(self, pos + 1, i + 1);
        }
    };
    if (d <= total) rec(rec, 0, 0);
    return acc;
}

}  // namespace

TEST_CASE("chern roots of basic expressions") {
    auto wedge24 = chern::chern_roots(BundleExpr::wedge(2, BundleExpr::base("E", 4)));
    CHECK(wedge24.rank() == 6);
    CHECK(wedge24.nx == 4);
    CHECK(wedge24.ny == 0);
    std::multiset<std::vector<long>> got;
    for (const auto& f : wedge24.forms) got.insert(f.x);
    std::multiset<std::vector<long>> want;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            std::vector<long> v(4, 0);
            v[i] = v[j] = 1;
            want.insert(v);
        }
    CHECK(got == want);

    auto sum = chern::chern_roots(
        BundleExpr::sum(BundleExpr::base("E", 2), BundleExpr::base("F", 3)));
    CHECK(sum.rank() == 5);
    CHECK(sum.nx == 2);
    CHECK(sum.ny == 3);
}

TEST_CASE("schur functor roots use the corrected SSYT multiset") {
    auto r = chern::chern_roots(
        BundleExpr::schur(Partition({2, 1}), BundleExpr::base("E", 3)));
    REQUIRE(r.rank() == 8);
    std::multiset<std::vector<long>> got;
    for (const auto& f : r.forms) got.insert(f.x);
    // contents of the eight SSYT of shape (2,1) with entries <= 3
    std::multiset<std::vector<long>> want{
        {2, 1, 0}, {1, 2, 0}, {2, 0, 1}, {1, 1, 1},
        {1, 1, 1}, {0, 2, 1}, {1, 0, 2}, {0, 1, 2}};
    CHECK(got == want);
    CHECK(got.count({1, 1, 1}) == 2);
    CHECK(got.count({0, 2, 1}) == 1);
    CHECK(got.count({0, 1, 2}) == 1);
}

TEST_CASE("rank arithmetic on random expressions") {
    std::mt19937 rng(321);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + static_cast<int>(rng() % 3);
        int m = 1 + static_cast<int>(rng() % 3);
        auto a = BundleExpr::base("E", n);
        auto b = BundleExpr::base("F", m);
        CHECK(chern::chern_roots(BundleExpr::sum(a, b)).rank() == n + m);
        CHECK(chern::chern_roots(BundleExpr::tensor(a, b)).rank() == n * m);
        std::vector<Partition> shapes = {Partition({1}), Partition({2}),
                                         Partition({1, 1}), Partition({2, 1})};
        const Partition& lam = shapes[rng() % shapes.size()];
        CHECK(chern::chern_roots(BundleExpr::schur(lam, a)).rank() ==
              static_cast<int>(combinat::ssyt_enumerate(lam, n).size()));
    }
}

TEST_CASE("rank bound enforcement") {
    auto big = BundleExpr::tensor(BundleExpr::base("E", 9), BundleExpr::base("F", 8));
    CHECK_THROWS_AS(chern::chern_roots(big), std::domain_error);
    CHECK(chern::chern_roots(big, 72).rank() == 72);
}

TEST_CASE("schur functors compose over tensor and schur children") {
    // wedge^2 of a tensor: roots are pairwise sums of the child roots
    auto e = BundleExpr::wedge(
        2, BundleExpr::tensor(BundleExpr::base("E", 2), BundleExpr::base("F", 2)));
    auto r = chern::chern_roots(e);
    CHECK(r.rank() == 6);  // C(4,2)

    // sym^2 on top of wedge^2
    auto nested =
        BundleExpr::sym(2, BundleExpr::wedge(2, BundleExpr::base("E", 3)));
    CHECK(chern::chern_roots(nested).rank() == 6);  // multisets of 2 from 3
}

TEST_CASE("plethysm of named elements") {
    // e_{C(n,k)} at wedge^k recovers the Boolean product polynomial
    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k <= n; ++k) {
            auto roots =
                chern::chern_roots(BundleExpr::wedge(k, BundleExpr::base("E", n)));
            CHECK(chern::pleth_e(roots.rank(), roots) ==
                  boolprod::boolean_product(n, k));
        }

    // s_(1) is the sum of the roots
    auto r = chern::chern_roots(
        BundleExpr::schur(Partition({2, 1}), BundleExpr::base("E", 2)));
    MultiPoly sum = MultiPoly::zero(r.nx, r.ny);
    for (const auto& f : r.forms) sum = sum + f.to_poly(r.nx, r.ny);
    CHECK(chern::pleth_s(Partition({1}), r) == sum);
    CHECK(chern::pleth_p(1, r) == sum);

    // bivariate Boolean products are e_d at a tensor of wedges
    for (int n = 2; n <= 3; ++n)
        for (int m = 2; m <= 3; ++m) {
            auto e = BundleExpr::tensor(BundleExpr::wedge(2, BundleExpr::base("E", n)),
                                        BundleExpr::base("F", m));
            auto roots = chern::chern_roots(e);
            CHECK(chern::pleth_e(roots.rank(), roots) ==
                  boolprod::bivariate_boolean(n, 2, m, 1));
        }
    {
        auto e = BundleExpr::tensor(BundleExpr::wedge(2, BundleExpr::base("E", 3)),
                                    BundleExpr::wedge(2, BundleExpr::base("F", 3)));
        auto roots = chern::chern_roots(e);
        CHECK(roots.rank() == 9);
        CHECK(chern::pleth_e(9, roots) == boolprod::bivariate_boolean(3, 2, 3, 2));
    }

    // the bundle-level entry point matches the root-level one
    auto wedge23 = BundleExpr::wedge(2, BundleExpr::base("E", 3));
    CHECK(chern::chern_plethysm(
              schurbasis::SchurVector::single(Partition({2, 1})), wedge23) ==
          chern::pleth_s(Partition({2, 1}), chern::chern_roots(wedge23)));

    // out-of-range degrees vanish
    auto base2 = chern::chern_roots(BundleExpr::base("E", 2));
    CHECK(chern::pleth_e(3, base2).is_zero());
    CHECK(chern::pleth_e(0, base2) == MultiPoly::one(2));
}

TEST_CASE("plethysm on direct sums is evaluation on the joint alphabet") {
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m) {
            auto roots = chern::chern_roots(
                BundleExpr::sum(BundleExpr::base("E", n), BundleExpr::base("F", m)));
            for (int d = 0; d <= n + m; ++d)
                CHECK(chern::pleth_e(d, roots) == e_direct(d, n, m));
        }
}

TEST_CASE("jacobi-trudi evaluations agree with direct schur polynomials") {
    // on a plain base bundle, s_lambda at the roots is s_lambda(X_n)
    for (int n = 1; n <= 4; ++n) {
        auto roots = chern::chern_roots(BundleExpr::base("E", n));
        for (int size = 0; size <= 5; ++size)
            for (const auto& lam : combinat::partitions_of(size))
                CHECK(chern::pleth_s(lam, roots) == symexpand::schur_poly(lam, n));
    }
}

TEST_CASE("total chern classes") {
    CHECK(chern::total_chern(BundleExpr::base("E", 1)) ==
          MultiPoly::one(1) + MultiPoly::var_x(1, 1));
    for (int n = 1; n <= 4; ++n) {
        CHECK(chern::total_chern(BundleExpr::wedge(2, BundleExpr::base("E", n))) ==
              lascoux::wedge_product_poly(n));
        CHECK(chern::total_chern(BundleExpr::sym(2, BundleExpr::base("E", n))) ==
              lascoux::sym_product_poly(n));
    }
}

TEST_CASE("pragacz positivity") {
    auto res = chern::pragacz_check(
        Partition(std::vector<int>(3, 1)),
        BundleExpr::wedge(2, BundleExpr::base("E", 3)));
    CHECK(res.positive);
    CHECK_FALSE(res.two_alphabets);
    // lambda = (1^{C(n,k)}) at wedge^k is the Boolean product expansion
    auto b32 = symexpand::schur_expand(boolprod::boolean_product(3, 2));
    CHECK(res.single == b32);

    auto sym22 =
        chern::pragacz_check(Partition({2}), BundleExpr::sym(2, BundleExpr::base("E", 2)));
    CHECK(sym22.positive);

    auto dual = chern::pragacz_check(
        Partition({2}), BundleExpr::tensor(BundleExpr::base("E", 2),
                                           BundleExpr::base("F", 2)));
    CHECK(dual.two_alphabets);
    CHECK(dual.positive);
}

TEST_CASE("bundle DSL") {
    auto e = chern::parse_bundle("wedge(2, E:4)");
    CHECK(chern::chern_roots(e).rank() == 6);
    auto nested = chern::parse_bundle(
        " tensor( schur([2,1], E:3), oplus(F:2, F:2) ) ");
    CHECK(chern::chern_roots(nested).rank() == 32);
    CHECK(chern::parse_bundle("sym(2, E:3)")->to_string() ==
          "schur([2], E:3)");

    try {
        chern::parse_bundle("wedge(2 E:4)");
        CHECK(false);
    } catch (const std::invalid_argument& err) {
        CHECK(std::string(err.what()).find("offset") != std::string::npos);
    }
    CHECK_THROWS_AS(chern::parse_bundle("frob(2, E:4)"), std::invalid_argument);
    CHECK_THROWS_AS(chern::parse_bundle("E:0"), std::invalid_argument);
    CHECK_THROWS_AS(chern::parse_bundle("schur([1,2], E:3)"),
                    std::invalid_argument);
    // three distinct bundles are rejected at root computation
    auto three = chern::parse_bundle("oplus(E:1, oplus(F:1, G:1))");
    CHECK_THROWS_AS(chern::chern_roots(three), std::invalid_argument);
    // inconsistent ranks for one name
    auto incons = chern::parse_bundle("oplus(E:1, E:2)");
    CHECK_THROWS_AS(chern::chern_roots(incons), std::invalid_argument);
}

TEST_CASE("degree law") {
    auto roots = chern::chern_roots(BundleExpr::wedge(2, BundleExpr::base("E", 4)));
    for (int d = 1; d <= 4; ++d) {
        CHECK(chern::pleth_e(d, roots).total_degree() == d);
        CHECK(chern::pleth_h(d, roots).total_degree() == d);
        CHECK(chern::pleth_p(d, roots).total_degree() == d);
    }
    CHECK(chern::pleth_s(Partition({2, 1}), roots).total_degree() == 3);
}
