#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "dendric/cassaigne.hpp"
#include "dendric/extensions.hpp"
#include "dendric/sadic.hpp"
#include "helpers.hpp"

using namespace dendric;

TEST_CASE("bounded primitivity criterion") {
    auto seq = [](const std::string& s) { return CassaigneSequence::parse(s); };
    CHECK(is_primitive_cassaigne(seq("121212121212"), 12));       // (c1 c2)^6
    CHECK_FALSE(is_primitive_cassaigne(seq("11111111"), 8));      // (c1^2)^4
    CHECK_FALSE(is_primitive_cassaigne(seq("21111111111"), 10));  // c2 c1^10, window 10
    CHECK(is_primitive_cassaigne(seq("112"), 3));
    CHECK_FALSE(is_primitive_cassaigne(seq("211"), 3));
}

TEST_CASE("the six products compose exactly") {
    CHECK(sc_product_morphism(ScProduct::C11) == cat_alpha());
    CHECK(sc_product_morphism(ScProduct::C22) ==
          Morphism(ternary_alphabet(), ternary_alphabet(), {"13", "23", "3"}));
    CHECK(sc_product_morphism(ScProduct::C122) ==
          Morphism(ternary_alphabet(), ternary_alphabet(), {"12", "132", "2"}));
    CHECK(sc_product_morphism(ScProduct::C211) ==
          Morphism(ternary_alphabet(), ternary_alphabet(), {"2", "213", "23"}));
    CHECK(sc_product_morphism(ScProduct::C121) ==
          Morphism(ternary_alphabet(), ternary_alphabet(), {"13", "132", "12"}));
    CHECK(sc_product_morphism(ScProduct::C212) ==
          Morphism(ternary_alphabet(), ternary_alphabet(), {"23", "213", "13"}));

    // the exact products are conjugates of the recorded catalog expressions:
    // c22 = p321 . bar(a) . p321 while its label reads p321 . a . p321
    Morphism abar = cat_alpha().right_conjugate();
    Morphism wrapped = compose(compose(perm_by_name("321").to_morphism(), abar), perm_by_name("321").to_morphism());
    CHECK(sc_product_morphism(ScProduct::C22) == wrapped);
    CHECK(sc_product_morphism(ScProduct::C211) == label_morphism(sc_label(ScProduct::C211)));
    CHECK(sc_product_morphism(ScProduct::C121) == label_morphism(sc_label(ScProduct::C121)));
    Morphism etabar = cat_eta().right_conjugate();
    CHECK(sc_product_morphism(ScProduct::C212) ==
          compose(compose(perm_by_name("321").to_morphism(), etabar), perm_by_name("231").to_morphism()));
    Morphism gammabar = cat_gamma().right_conjugate();
    CHECK(sc_product_morphism(ScProduct::C122) ==
          compose(compose(perm_by_name("213").to_morphism(), gammabar), perm_by_name("231").to_morphism()));
}

TEST_CASE("greedy product recoding") {
    auto rep = sc_representation(CassaigneSequence::parse("11"));
    REQUIRE(rep.products == std::vector<ScProduct>{ScProduct::C11});
    CHECK(rep.trailing.empty());

    rep = sc_representation(CassaigneSequence::parse("22"));
    CHECK(rep.products == std::vector<ScProduct>{ScProduct::C22});

    rep = sc_representation(CassaigneSequence::parse("1212"));
    CHECK(rep.products == std::vector<ScProduct>{ScProduct::C121});
    CHECK(rep.trailing == "2");

    rep = sc_representation(CassaigneSequence::parse("1221121"));
    CHECK(rep.products == std::vector<ScProduct>{ScProduct::C122, ScProduct::C11});
    CHECK(rep.trailing == "21");

    rep = sc_representation(CassaigneSequence::parse("212211"));
    CHECK(rep.products == std::vector<ScProduct>{ScProduct::C212, ScProduct::C211});
}

TEST_CASE("recoding composition equality on random words") {
    dendric::testing::Rng rng(0xfeed);
    for (int trial = 0; trial < 40; ++trial) {
        std::string w;
        int len = 2 + rng.below(11);
        for (int i = 0; i < len; ++i) w += rng.below(2) ? '2' : '1';
        CassaigneSequence seq{w};
        ScRepresentation rep = sc_representation(seq);
        size_t consumed = w.size() - rep.trailing.size();
        std::string parsed;
        for (ScProduct p : rep.products) parsed += sc_cword(p);
        CHECK(parsed == w.substr(0, consumed));
        if (!rep.products.empty()) {
            std::vector<Morphism> emitted, original;
            for (ScProduct p : rep.products) emitted.push_back(sc_product_morphism(p));
            for (size_t i = 0; i < consumed; ++i) original.push_back(w[i] == '1' ? cat_c1() : cat_c2());
            CHECK(compose(emitted) == compose(original));
        }
    }
}

TEST_CASE("Cassaigne shifts from primitive windows are dendric") {
    // c1 c2 repeated is the primitive staple
    std::vector<Morphism> cycle{cat_c1(), cat_c2()};
    DirectiveSequence ds({}, cycle);
    FiniteLanguage l = language_of_level(ds, 1, 40, 22).language;
    AuditReport audit = dendricity_audit(l, 20);
    CHECK(audit.pass);
    for (int n = 0; n <= 20; ++n) CHECK(l.complexity(n) == 2 * n + 1);
}

TEST_CASE("class closure of primitive Cassaigne shifts") {
    auto closure = cassaigne_class_closure();
    CHECK(std::find(closure.begin(), closure.end(), ClassLabel{3, 2}) != closure.end());
    CHECK(std::find(closure.begin(), closure.end(), ClassLabel{2, 1}) != closure.end());
    CHECK(std::find(closure.begin(), closure.end(), ClassLabel{2, 2}) != closure.end());
    CHECK(std::find(closure.begin(), closure.end(), ClassLabel{3, 1}) == closure.end());
    CHECK(std::find(closure.begin(), closure.end(), ClassLabel{3, 3}) == closure.end());
}

TEST_CASE("single eta-shaped word admits no interval exchange path") {
    ClassGraph giet = build_g_iet();
    auto closure = cassaigne_class_closure();
    StateConstraint constraint = [&](int vertex, int xi) {
        ClassLabel c = apply_perm(perm(xi), giet.vertices[static_cast<size_t>(vertex)]);
        return std::find(closure.begin(), closure.end(), c) != closure.end();
    };
    std::vector<Morphism> prefix{label_morphism(sc_label(ScProduct::C121))};  // p132.e.p231
    CHECK_FALSE(equivalent_path_exists(prefix, giet, constraint));
    // without the reachable-class restriction a one-step path does exist
    CHECK(equivalent_path_exists(prefix, giet));
}

TEST_CASE("bounded disjointness report") {
    DisjointnessReport r = disjointness_check(3);
    CHECK(r.pass());
    CHECK(r.words_checked == 6 + 36 + 216);
    CHECK(r.primitive_compatible > 0);
}
