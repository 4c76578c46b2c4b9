#include <doctest.h>

#include <stdexcept>

#include "dendric/catalog.hpp"
#include "dendric/desub.hpp"
#include "dendric/morphisms.hpp"
#include "helpers.hpp"

using namespace dendric;

TEST_CASE("apply and compose") {
    Alphabet ab("01");
    Morphism fib(ab, ab, {"01", "0"});
    CHECK(fib.apply("01") == "010");

    Morphism c11 = compose(cat_c1(), cat_c1());
    CHECK(c11 == cat_alpha());  // c1 squared

    Morphism trib = compose(cat_alpha(), perm_by_name("231").to_morphism());
    CHECK(trib.image('1') == "12");
    CHECK(trib.image('2') == "13");
    CHECK(trib.image('3') == "1");
}

TEST_CASE("incidence matrices") {
    IncidenceMatrix a = cat_alpha().incidence_matrix();
    CHECK(a.m == std::vector<std::vector<long long>>{{1, 1, 1}, {0, 1, 0}, {0, 0, 1}});

    IncidenceMatrix id = Permutation::identity(ternary_alphabet()).to_morphism().incidence_matrix();
    CHECK(id.m == std::vector<std::vector<long long>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});

    IncidenceMatrix d1 = cat_delta(1).incidence_matrix();
    CHECK(d1.m == std::vector<std::vector<long long>>{{1, 1, 1}, {0, 1, 1}, {0, 1, 2}});
}

TEST_CASE("incidence of a composition is the matrix product") {
    auto check = [](const Morphism& s, const Morphism& t) {
        CHECK(compose(s, t).incidence_matrix() == matrix_product(s.incidence_matrix(), t.incidence_matrix()));
    };
    check(cat_beta(), cat_gamma());
    check(cat_delta(2), cat_eta());
    check(cat_zeta(3), compose(cat_alpha(), cat_beta()));
}

TEST_CASE("properness flags") {
    Properness b = cat_beta().properness();
    CHECK(b.strongly_left);
    CHECK(b.first_letter == '1');
    CHECK_FALSE(b.right);

    Morphism abar2 = ar_alpha_bar(ternary_alphabet(), '2');
    Properness p = abar2.properness();
    CHECK(p.strongly_right);
    CHECK(p.last_letter == '2');
    CHECK_FALSE(p.left);

    Alphabet two("12");
    Morphism ident(two, two, {"1", "2"});
    Properness q = ident.properness();
    CHECK_FALSE(q.left);
    CHECK_FALSE(q.right);
}

TEST_CASE("right conjugate") {
    Morphism abar = cat_alpha().right_conjugate();
    CHECK(abar.image('1') == "1");
    CHECK(abar.image('2') == "21");
    CHECK(abar.image('3') == "31");

    Alphabet one("1");
    Morphism tiny(one, one, {"1"});
    CHECK(tiny.right_conjugate() == tiny);

    Morphism gbar = cat_gamma().right_conjugate();
    CHECK(gbar.image('2') == "21");
    CHECK(gbar.image('3') == "231");

    // defining identity sigma(a) ell = ell sigma_bar(a)
    for (const Morphism& m : {cat_beta(), cat_delta(2), cat_zeta(1), cat_eta()}) {
        Morphism bar = m.right_conjugate();
        char ell = *m.properness().first_letter;
        for (int i = 0; i < 3; ++i) {
            char a = ternary_alphabet().letter(i);
            CHECK(m.image(a) + ell == ell + bar.image(a));
        }
    }
}

TEST_CASE("catalog morphisms match their definitions") {
    CHECK(cat_zeta(2).image('1') == "133");
    CHECK(cat_zeta(2).image('2') == "12");
    CHECK(cat_zeta(2).image('3') == "1333");

    CHECK(cat_c2().image('1') == "2");
    CHECK(cat_c2().image('2') == "13");
    CHECK(cat_c2().image('3') == "3");

    Morphism abar3 = ar_alpha_bar(ternary_alphabet(), '3');
    CHECK(abar3.image('1') == "13");
    CHECK(abar3.image('2') == "23");
    CHECK(abar3.image('3') == "3");
}

TEST_CASE("expression grammar") {
    CHECK(parse_morphism_expr("a") == cat_alpha());
    CHECK(parse_morphism_expr("d2") == cat_delta(2));
    CHECK(parse_morphism_expr("p213.g") == compose(perm_by_name("213").to_morphism(), cat_gamma()));
    CHECK(parse_morphism_expr("p132.e.p321") ==
          compose(compose(perm_by_name("132").to_morphism(), cat_eta()), perm_by_name("321").to_morphism()));
    CHECK(parse_morphism_expr("arb2.ar1").image('3') == "1232");
    CHECK_THROWS_AS(parse_morphism_expr("q7"), std::invalid_argument);
    CHECK_THROWS_AS(parse_morphism_expr("d100", 64), std::invalid_argument);
}

TEST_CASE("JSON round trip") {
    Morphism m = cat_delta(2);
    Morphism back = morphism_from_json(morphism_to_json(m));
    CHECK(back == m);
}

TEST_CASE("injectivity via the code test") {
    CHECK(cat_alpha().is_injective());
    CHECK(cat_beta().is_injective());
    CHECK(cat_gamma().is_injective());
    CHECK(cat_delta(3).is_injective());
    CHECK(cat_zeta(2).is_injective());
    CHECK(cat_eta().is_injective());
    CHECK(cat_c1().is_injective());
    CHECK(cat_c2().is_injective());

    Alphabet ab("12");
    CHECK(Morphism(ab, ab, {"12", "1"}).is_injective());        // {12, 1} is a code
    CHECK_FALSE(Morphism(ab, ab, {"1", "1"}).is_injective());   // repeated image
    CHECK_FALSE(Morphism(ab, ab, {"1", "11"}).is_injective());  // 11 = 1.1
    CHECK_FALSE(Morphism(Alphabet("123"), ab, {"1", "12", "21"}).is_injective());  // 1.21 = 12.1
}

TEST_CASE("common affixes against the tables") {
    auto affixes = [](const Morphism& m) { return common_affixes(m); };
    CHECK(affixes(cat_beta()) == std::make_pair(std::vector<std::string>{"", "2"}, std::vector<std::string>{"1"}));
    CHECK(affixes(cat_delta(1)) == std::make_pair(std::vector<std::string>{"", "3"}, std::vector<std::string>{"1", "123"}));
    CHECK(affixes(cat_alpha()) == std::make_pair(std::vector<std::string>{""}, std::vector<std::string>{"1"}));
}

TEST_CASE("ar_factorize on catalog members") {
    auto f = ar_factorize(cat_alpha());
    REQUIRE(f.has_value());
    CHECK(f->bar_letters.empty());
    CHECK(f->ell == '1');
    CHECK(f->pi.is_identity());

    CHECK_FALSE(ar_factorize(cat_gamma()).has_value());
    CHECK_FALSE(ar_factorize(cat_beta()).has_value());
    CHECK_FALSE(ar_factorize(cat_delta(1)).has_value());
    CHECK_FALSE(ar_factorize(cat_zeta(2)).has_value());
    CHECK_FALSE(ar_factorize(cat_eta()).has_value());

    Morphism m = parse_morphism_expr("arb2.ar1");
    CHECK(m.image('1') == "12");
    CHECK(m.image('2') == "122");
    CHECK(m.image('3') == "1232");
    auto g = ar_factorize(m);
    REQUIRE(g.has_value());
    CHECK(g->bar_letters == std::vector<char>{'2'});
    CHECK(g->ell == '1');
    CHECK(g->pi.is_identity());
    CHECK(ar_compose(ternary_alphabet(), *g) == m);
}

TEST_CASE("ar_factorize round trips on random compositions") {
    dendric::testing::Rng rng(0x5eed1);
    const Alphabet& a = ternary_alphabet();
    for (int trial = 0; trial < 50; ++trial) {
        char ell = a.letter(rng.below(3));
        int n = rng.below(4);
        ArFactorization f;
        f.ell = ell;
        for (int i = 0; i < n; ++i) {
            char c = a.letter(rng.below(3));
            while (c == ell) c = a.letter(rng.below(3));
            f.bar_letters.push_back(c);
        }
        std::string images = a.symbols();
        for (int i = 0; i < 5; ++i) std::swap(images[static_cast<size_t>(rng.below(3))], images[static_cast<size_t>(rng.below(3))]);
        f.pi = Permutation::from_images(a, images);
        Morphism m = ar_compose(a, f);
        CHECK(is_universally_dendric_preserving(m));
        auto back = ar_factorize(m);
        REQUIRE(back.has_value());
        CHECK(ar_compose(a, *back) == m);
    }
}

TEST_CASE("ternary decomposition") {
    auto l = decompose_ternary(parse_morphism_expr("p213.d2.p132"));
    REQUIRE(l.has_value());
    CHECK(l->pre == 2);
    CHECK(l->kind == CoreKind::Delta);
    CHECK(l->k == 2);
    CHECK(l->post == 1);
    CHECK(label_morphism(*l) == parse_morphism_expr("p213.d2.p132"));

    auto alpha_twin = decompose_ternary(compose(compose(perm_by_name("132").to_morphism(), cat_alpha()),
                                                perm_by_name("132").to_morphism()));
    REQUIRE(alpha_twin.has_value());
    CHECK(alpha_twin->pre == 0);  // canonical form folds the alpha symmetry
    CHECK(alpha_twin->post == 0);

    CHECK_FALSE(decompose_ternary(cat_c1()).has_value());
    CHECK(label_expr(TernaryLabel{1, CoreKind::Eta, 0, 5}) == "p132.e.p321");
}
