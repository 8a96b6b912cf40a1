#include <doctest.h>

#include <algorithm>
#include <set>

#include "bpp/combinat.hpp"

using namespace bpp;
using combinat::Partition;
using combinat::Permutation;
using combinat::Tableau;

TEST_CASE("partition basics and ordering") {
    Partition p({3, 1});
    CHECK(p.size() == 4);
    CHECK(p.length() == 2);
    CHECK(p.part(0) == 3);
    CHECK(p.part(5) == 0);
    CHECK(Partition({2, 1}).contains(Partition({1, 1})));
    CHECK_FALSE(Partition({2, 1}).contains(Partition({1, 1, 1})));
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    CHECK(Partition::staircase(3) == Partition({3, 2, 1}));
    CHECK(Partition::staircase(0) == Partition());
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({0, -1}), std::invalid_argument);
    // trailing zeros are stripped, not an error
    CHECK(Partition({2, 1, 0, 0}) == Partition({2, 1}));

    // graded lex: by size, then lexicographically descending parts
    CHECK(Partition() < Partition({1}));
    CHECK(Partition({2}) < Partition({1, 1}));
    CHECK(Partition({1, 1}) < Partition({2, 1}));
}

TEST_CASE("partitions_inside enumerations") {
    CHECK(combinat::partitions_inside(Partition()) ==
          std::vector<Partition>{Partition()});
    CHECK(combinat::partitions_inside(Partition({2, 1})) ==
          std::vector<Partition>{Partition(), Partition({1}), Partition({2}),
                                 Partition({1, 1}), Partition({2, 1})});
    CHECK(combinat::partitions_inside(Partition({1, 1})) ==
          std::vector<Partition>{Partition(), Partition({1}),
                                 Partition({1, 1})});
}

TEST_CASE("ssyt enumeration") {
    // the shape (2,1), entries <= 3 case has exactly 8 tableaux
    auto t21 = combinat::ssyt_enumerate(Partition({2, 1}), 3);
    CHECK(t21.size() == 8);
    for (const auto& t : t21) CHECK(t.is_semistandard());
    int content111 = 0;
    for (const auto& t : t21)
        if (t.content(3) == std::vector<int>{1, 1, 1}) ++content111;
    CHECK(content111 == 2);

    CHECK(combinat::ssyt_enumerate(Partition({1}), 1).size() == 1);
    // (3,1) with entries <= 2, enumerated by hand: 112/2, 111/2, 122/2
    CHECK(combinat::ssyt_enumerate(Partition({3, 1}), 2).size() == 3);
    // too-long shapes have no fillings
    CHECK(combinat::ssyt_enumerate(Partition({1, 1, 1}), 2).empty());
    // empty shape has the empty filling
    CHECK(combinat::ssyt_enumerate(Partition(), 4).size() == 1);

    // row-reading lexicographic order
    auto words = [](const Tableau& t) {
        std::vector<int> w;
        for (const auto& r : t.rows) w.insert(w.end(), r.begin(), r.end());
        return w;
    };
    for (size_t i = 0; i + 1 < t21.size(); ++i)
        CHECK(words(t21[i]) < words(t21[i + 1]));
}

TEST_CASE("standard tableaux and statistics") {
    auto syt3 = combinat::syt_enumerate(3);
    CHECK(syt3.size() == 4);
    std::multiset<int> majs;
    std::multiset<std::vector<int>> shapes;
    for (const auto& info : syt3) {
        majs.insert(info.maj);
        shapes.insert(info.tableau.shape.parts());
    }
    CHECK(majs == std::multiset<int>{0, 1, 2, 3});
    CHECK(shapes == std::multiset<std::vector<int>>{
                        {3}, {2, 1}, {2, 1}, {1, 1, 1}});

    // the (3,3,1) tableau with rows {1,2,5}, {3,4,6}, {7}: descents {2,5,6}
    // and major index 13; locate it in the full enumeration
    Tableau fig{Partition({3, 3, 1}), {{1, 2, 5}, {3, 4, 6}, {7}}};
    CHECK(fig.is_standard());
    bool found = false;
    for (const auto& info : combinat::syt_enumerate(7)) {
        if (info.tableau.rows != fig.rows) continue;
        found = true;
        CHECK(info.descents == std::vector<int>{2, 5, 6});
        CHECK(info.maj == 13);
        CHECK(info.des() == 3);
        CHECK(info.ascents(false) == std::vector<int>{1, 3, 4});
        CHECK(info.ascents(true) == std::vector<int>{1, 3, 4, 7});
    }
    CHECK(found);

    CHECK(combinat::syt_enumerate(1).size() == 1);
    CHECK(combinat::syt_enumerate(1)[0].maj == 0);
    CHECK(combinat::syt_enumerate(0).size() == 1);
    CHECK(combinat::syt_enumerate(0)[0].maj == 0);
}

TEST_CASE("smallest ascent with n artificially an ascent") {
    Tableau column{Partition({1, 1}), {{1}, {2}}};
    CHECK(combinat::smallest_ascent(column) == 2);
    Tableau row{Partition({2}), {{1, 2}}};
    CHECK(combinat::smallest_ascent(row) == 1);
    Tableau t{Partition({2, 1}), {{1, 3}, {2}}};
    CHECK(combinat::smallest_ascent(t) == 2);
}

TEST_CASE("vertical strip extensions") {
    CHECK(combinat::vertical_strip_extensions(Partition(), 0, Partition()) ==
          std::vector<Partition>{Partition()});
    CHECK(combinat::vertical_strip_extensions(Partition(), 1, Partition({1})) ==
          std::vector<Partition>{Partition({1})});
    // a single box is always a vertical strip, so both extensions count
    CHECK(combinat::vertical_strip_extensions(Partition({1}), 1,
                                              Partition({2, 1})) ==
          std::vector<Partition>{Partition({2}), Partition({1, 1})});
    // one-box growth = addable corners or a new row
    auto oneboxes = combinat::vertical_strip_extensions(
        Partition({2, 1}), 1, Partition({5, 5, 5, 5}));
    CHECK(oneboxes == std::vector<Partition>{Partition({3, 1}),
                                             Partition({2, 2}),
                                             Partition({2, 1, 1})});
}

TEST_CASE("derangements") {
    CHECK(combinat::derangements(1).empty());
    auto d2 = combinat::derangements(2);
    REQUIRE(d2.size() == 1);
    CHECK(d2[0].word() == std::vector<int>{2, 1});
    auto d3 = combinat::derangements(3);
    REQUIRE(d3.size() == 2);
    std::set<std::vector<int>> words;
    for (const auto& w : d3) words.insert(w.word());
    CHECK(words == std::set<std::vector<int>>{{2, 3, 1}, {3, 1, 2}});
    // subfactorial counts
    CHECK(combinat::derangements(4).size() == 9);
    CHECK(combinat::derangements(5).size() == 44);
    CHECK(combinat::derangements(6).size() == 265);
}

TEST_CASE("permutation statistics") {
    Permutation w({3, 1, 2});
    CHECK(w.sign() == 1);
    CHECK(w.cycle_type() == Partition({3}));
    CHECK(Permutation({2, 1, 3}).sign() == -1);
    CHECK(Permutation({2, 1, 4, 3}).cycle_type() == Partition({2, 2}));
    CHECK(Permutation({3, 1, 2}).descent_set() == std::vector<int>{1});

    // factorization applied as successive generators reproduces the word
    for (const auto& v : Permutation::all(4)) {
        std::vector<int> img(4);
        for (int i = 1; i <= 4; ++i) img[i - 1] = i;
        // acting on positions: generators permute entries of the one-line id
        for (int g : v.adjacent_transposition_word())
            std::swap(img[g - 1], img[g]);
        // img = one-line of permutation acting on positions
        std::vector<int> expect(4);
        for (int i = 1; i <= 4; ++i) expect[v(i) - 1] = i;
        CHECK(img == expect);
    }
}

TEST_CASE("Murnaghan-Nakayama characters") {
    // trivial and sign characters
    for (const auto& rho : combinat::partitions_of(5)) {
        CHECK(combinat::mn_character(Partition({5}), rho) == 1);
        int sign = 1;
        for (int part : rho.parts())
            if (part % 2 == 0) sign = -sign;
        CHECK(combinat::mn_character(Partition({1, 1, 1, 1, 1}), rho) == sign);
    }
    CHECK(combinat::mn_character(Partition({1, 1}), Partition({2})) == -1);
    CHECK(combinat::mn_character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
    CHECK(combinat::mn_character(Partition({2, 1}), Partition({3})) == -1);
    CHECK(combinat::mn_character(Partition({2, 1}), Partition({2, 1})) == 0);
    CHECK_THROWS_AS(combinat::mn_character(Partition({2}), Partition({3})),
                    std::invalid_argument);

    // dimension: chi^lambda(1^n) equals the standard tableau count (hook
    // lengths and explicit enumeration agree), for n <= 6
    for (int n = 0; n <= 6; ++n) {
        std::map<std::vector<int>, int> by_shape;
        for (const auto& info : combinat::syt_enumerate(n))
            ++by_shape[info.tableau.shape.parts()];
        Int square_sum = 0;
        for (const auto& lam : combinat::partitions_of(n)) {
            Int f = combinat::mn_character(lam, Partition(std::vector<int>(n, 1)));
            CHECK(f == combinat::syt_count(lam));
            CHECK(f == by_shape[lam.parts()]);
            square_sum += f * f;
        }
        CHECK(square_sum == factorial(n));
    }

    // hook-length square sum reaches n! through n = 7
    {
        Int square_sum = 0;
        for (const auto& lam : combinat::partitions_of(7))
            square_sum += combinat::syt_count(lam) * combinat::syt_count(lam);
        CHECK(square_sum == factorial(7));
        CHECK(combinat::syt_enumerate(7).size() == 232);
    }

    // orthogonality of rows of the character table for n <= 5
    for (int n = 1; n <= 5; ++n) {
        auto lams = combinat::partitions_of(n);
        for (const auto& l1 : lams)
            for (const auto& l2 : lams) {
                Int sum = 0;
                for (const auto& rho : lams) {
                    Int cls = factorial(n) / combinat::centralizer_order(rho);
                    sum += cls * combinat::mn_character(l1, rho) *
                           combinat::mn_character(l2, rho);
                }
                CHECK(sum == (l1 == l2 ? factorial(n) : Int(0)));
            }
    }
}

TEST_CASE("cycle type representatives and centralizers") {
    for (const auto& rho : combinat::partitions_of(6)) {
        auto w = combinat::permutation_with_cycle_type(rho);
        CHECK(w.cycle_type() == rho);
    }
    CHECK(combinat::centralizer_order(Partition({1, 1, 1})) == 6);
    CHECK(combinat::centralizer_order(Partition({3})) == 3);
    CHECK(combinat::centralizer_order(Partition({2, 1})) == 2);
}
