#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "dendric/iet.hpp"
#include "dendric/sadic.hpp"
#include "dendric/ternary.hpp"
#include "helpers.hpp"

using namespace dendric;
using dendric::testing::Rng;

namespace {

Rational q(long long n, long long d) { return Rational(BigInt(n), BigInt(d)); }

Iet rotation_third() { return make_iet({q(1, 2), q(1, 4), q(1, 4)}, "123/231"); }

std::vector<Rational> random_lambda(Rng& rng) {
    for (;;) {
        long long a = 1 + rng.below(40), b = 1 + rng.below(40), c = 1 + rng.below(40);
        if (a == b || b == c || a == c) continue;
        long long s = a + b + c;
        return {q(a, s), q(b, s), q(c, s)};
    }
}

}  // namespace

TEST_CASE("exact application and bijectivity") {
    Iet t = rotation_third();
    CHECK(iet_apply(t, q(0, 1)) == q(1, 2));  // the rotation x -> x + 1/2
    CHECK(iet_apply(t, q(1, 2)) == q(0, 1));
    CHECK(iet_apply(t, q(3, 4)) == q(1, 4));
    CHECK_THROWS_AS(iet_apply(t, q(1, 1)), std::out_of_range);

    // T(I_1) = J_1 endpoints
    CHECK(iet_apply(t, q(0, 1)) == q(1, 2));
    CHECK(iet_apply(t, q(49, 100)) == q(99, 100));
}

TEST_CASE("normalize and reflect") {
    Iet t = make_iet({q(1, 2), q(1, 4), q(1, 4)}, "123/231", q(1, 3));
    Iet n = normalize(t);
    CHECK(n.lo == q(0, 1));
    CHECK(n.hi == q(1, 1));
    CHECK(n.lambda[0] == q(1, 2));

    Iet r = reflect(reflect(t));
    CHECK(r.top == t.top);
    CHECK(r.bottom == t.bottom);
    CHECK(reflect(t).pair_str() == "321/132");
}

TEST_CASE("indecomposable pairs") {
    CHECK(indecomposable(make_iet({q(1, 2), q(1, 4), q(1, 4)}, "123/231").top,
                         make_iet({q(1, 2), q(1, 4), q(1, 4)}, "123/231").bottom));
    Iet same = make_iet({q(1, 2), q(1, 4), q(1, 4)}, "123/123");
    CHECK_FALSE(indecomposable(same.top, same.bottom));
    Iet mixed = make_iet({q(1, 2), q(1, 4), q(1, 4)}, "123/312");
    CHECK(indecomposable(mixed.top, mixed.bottom));
}

TEST_CASE("coding cylinders by exact refinement") {
    Iet t = rotation_third();
    FiniteLanguage l = coding_factors(t, 2);
    CHECK(l.all_words(1) == std::vector<std::string>{"", "1", "2", "3"});
    CHECK(l.contains("12"));   // I_1 meets T^{-1}(I_2)
    CHECK_FALSE(l.contains("11"));  // the rotation leaves I_1 immediately
}

TEST_CASE("regular coding has complexity 2n + 1 on the checked range") {
    Iet t = make_iet({q(8655, 9791), q(741, 9791), q(395, 9791)}, "123/231");
    REQUIRE(is_regular_up_to(t, 40));
    FiniteLanguage l = coding_factors(t, 10);
    for (int n = 0; n <= 10; ++n) CHECK(l.complexity(n) == 2 * n + 1);
}

TEST_CASE("regularity detection") {
    // lambda = (1 - 2a, a, a) with 123/312 hits mu_2 = T(mu_1) immediately
    Iet bad = make_iet({q(3, 5), q(1, 5), q(1, 5)}, "123/312");
    CHECK_FALSE(is_regular_up_to(bad, 1));

    Iet good = make_iet({q(8655, 9791), q(741, 9791), q(395, 9791)}, "123/231");
    CHECK(is_regular_up_to(good, 25));
    CHECK_FALSE(is_regular_up_to(make_iet({q(6, 17), q(7, 17), q(4, 17)}, "123/231"), 40));

    CHECK(is_regular_up_to(bad, 0));  // vacuous window
}

TEST_CASE("Rauzy induction edges") {
    // lambda1 < lambda2 keeps the pair and cuts the first cell
    Iet t1 = make_iet({q(1, 4), q(2, 4), q(1, 4)}, "123/231");
    auto r1 = rauzy_induction(t1, Side::L);
    REQUIRE(std::holds_alternative<RauzyStep>(r1));
    const auto& s1 = std::get<RauzyStep>(r1);
    CHECK(s1.sigma == Morphism(ternary_alphabet(), ternary_alphabet(), {"21", "2", "3"}));
    CHECK(s1.next.pair_str() == "123/231");
    CHECK(s1.next.lambda == std::vector<Rational>{q(1, 4), q(1, 4), q(1, 4)});
    CHECK(s1.next.lo == q(1, 4));

    // lambda3 < lambda1 on the right goes to 132/231
    Iet t2 = make_iet({q(2, 4), q(1, 4), q(1, 8)}, "123/231", q(0, 1));
    auto r2 = rauzy_induction(t2, Side::R);
    REQUIRE(std::holds_alternative<RauzyStep>(r2));
    CHECK(std::get<RauzyStep>(r2).sigma == Morphism(ternary_alphabet(), ternary_alphabet(), {"1", "2", "13"}));
    CHECK(std::get<RauzyStep>(r2).next.pair_str() == "132/231");

    // self loop at 321/132 with lambda3 > lambda1
    Iet t3 = make_iet({q(1, 8), q(2, 8), q(5, 8)}, "321/132");
    auto r3 = rauzy_induction(t3, Side::L);
    REQUIRE(std::holds_alternative<RauzyStep>(r3));
    CHECK(std::get<RauzyStep>(r3).sigma == Morphism(ternary_alphabet(), ternary_alphabet(), {"13", "2", "3"}));
    CHECK(std::get<RauzyStep>(r3).next.pair_str() == "321/132");

    // equality is a connection
    Iet tie = make_iet({q(1, 3), q(1, 3), q(1, 3)}, "123/231");
    CHECK(std::holds_alternative<Connection>(rauzy_induction(tie, Side::L)));
}

TEST_CASE("induction agrees with the induced-map oracle") {
    Rng rng(0xabcdef);
    int done = 0;
    while (done < 12) {
        auto lambda = random_lambda(rng);
        Iet t = make_iet(lambda, done % 2 ? "132/231" : "123/231");
        for (Side side : {Side::L, Side::R}) {
            auto r = rauzy_induction(t, side);
            if (!std::holds_alternative<RauzyStep>(r)) continue;
            const auto& step = std::get<RauzyStep>(r);
            Iet oracle = induced_on_interval(t, step.next.lo, step.next.hi);
            CHECK(same_map(step.next, oracle));
        }
        ++done;
    }
}

TEST_CASE("compositions of inductions equal direct induced maps") {
    Iet t = make_iet({q(6, 17), q(7, 17), q(4, 17)}, "123/231");
    Iet current = t;
    for (Side side : {Side::L, Side::R, Side::L}) {
        auto r = rauzy_induction(current, side);
        REQUIRE(std::holds_alternative<RauzyStep>(r));
        current = std::get<RauzyStep>(r).next;
    }
    Iet oracle = induced_on_interval(t, current.lo, current.hi);
    CHECK(same_map(current, oracle));
}

TEST_CASE("induced map on the whole support is the map itself") {
    Iet t = rotation_third();
    CHECK(same_map(t, induced_on_interval(t, t.lo, t.hi)));
}

TEST_CASE("induced map on the first cylinder matches the alpha case") {
    Iet t = make_iet({q(5, 9), q(3, 9), q(1, 9)}, "123/231");
    Iet induced = induced_on_interval(t, q(0, 1), q(5, 9));
    Iet predicted = make_iet({q(1, 9), q(3, 9), q(1, 9)}, "123/231");
    CHECK(same_map(induced, predicted));
}

TEST_CASE("coding of an induced cylinder is the derived language") {
    Iet t = make_iet({q(8655, 9791), q(741, 9791), q(395, 9791)}, "123/231");
    REQUIRE(is_regular_up_to(t, 60));
    FiniteLanguage coding = coding_factors(t, 36);
    DerivedLanguage derived = derived_language(coding, '1');

    Iet induced = induced_on_interval(t, q(0, 1), q(8655, 9791));  // I_1
    int h = std::min(derived.language.horizon(), 8);
    FiniteLanguage induced_coding = coding_factors(induced, h);
    bool matched = false;
    for (int p = 0; p < 6 && !matched; ++p) {
        std::string from = "123", to;
        for (char c : from) to += perm(p).apply(c);
        FiniteLanguage relabeled = induced_coding.relabeled(from, to, ternary_alphabet());
        bool ok = true;
        for (int n = 0; n <= h && ok; ++n) ok = relabeled.words_of_length(n) == derived.language.words_of_length(n);
        matched = ok;
    }
    CHECK(matched);
}

TEST_CASE("expansion of the worked example") {
    Iet t = make_iet({q(5, 9), q(3, 9), q(1, 9)}, "123/231");
    Expansion e = iet_expansion(t, 10);
    REQUIRE(!e.steps.empty());
    CHECK(label_expr(e.steps[0].label) == "a");
    CHECK(e.connection_at == 2);  // lambda becomes (1/9, 3/9, 1/9): ratio hits an integer
}

TEST_CASE("expansion picks the eta case") {
    Iet t = make_iet({q(4, 10), q(3, 10), q(3, 10)}, "123/231");
    Expansion e = iet_expansion(t, 1);
    REQUIRE(!e.steps.empty());
    CHECK(label_expr(e.steps[0].label) == "p132.e.p321");
}

TEST_CASE("expansion labels a path in the interval exchange graph") {
    Rng rng(0x77aa);
    ClassGraph giet = build_g_iet();
    int produced = 0;
    while (produced < 10) {
        Iet t = make_iet(random_lambda(rng), "123/231");
        Expansion e = iet_expansion(t, 12);
        if (e.steps.size() < 3) continue;
        std::vector<Morphism> prefix;
        for (const auto& s : e.steps) prefix.push_back(s.sigma);
        PathCheckResult r = path_check(prefix, giet);
        CHECK(r.accepted);
        ++produced;
    }
}

TEST_CASE("rational data reaches a connection") {
    Rng rng(0x1234);
    for (int i = 0; i < 8; ++i) {
        Iet t = make_iet(random_lambda(rng), "123/231");
        Expansion e = iet_expansion(t, 512);
        CHECK(e.connection_at.has_value());
    }
}

TEST_CASE("frequency vectors") {
    CHECK(frequencies({}, 0) == std::vector<Rational>{q(1, 3), q(1, 3), q(1, 3)});
    CHECK(frequencies({cat_alpha()}, 1) == std::vector<Rational>{q(3, 5), q(1, 5), q(1, 5)});
}

TEST_CASE("expansion frequencies refine toward the length vector") {
    Iet t = make_iet({q(8655, 9791), q(741, 9791), q(395, 9791)}, "123/231");
    Expansion e = iet_expansion(t, 14);
    REQUIRE(e.steps.size() >= 8);
    std::vector<Morphism> prefix;
    for (const auto& s : e.steps) prefix.push_back(s.sigma);
    auto l1_to_lambda = [&](int n) {
        auto f = frequencies(prefix, n);
        Rational dist(0);
        for (int i = 0; i < 3; ++i) dist = dist + (f[static_cast<size_t>(i)] - t.lambda[static_cast<size_t>(i)]).abs();
        return dist;
    };
    CHECK(l1_to_lambda(static_cast<int>(prefix.size())) <= l1_to_lambda(4));
}

TEST_CASE("coding consistency through one induction") {
    Rng rng(0x9e3779b9);
    int done = 0;
    while (done < 6) {
        Iet t = make_iet(random_lambda(rng), "123/231");
        auto r = rauzy_induction(t, Side::L);
        if (!std::holds_alternative<RauzyStep>(r)) continue;
        const auto& step = std::get<RauzyStep>(r);
        FiniteLanguage outer = coding_factors(t, 12);
        FiniteLanguage inner = coding_factors(step.next, 16);
        FiniteLanguage image = step.sigma.apply_language(inner, 12);
        for (int n = 0; n <= 12; ++n) CHECK(outer.words_of_length(n) == image.words_of_length(n));
        ++done;
    }
}

TEST_CASE("a connection is preceded by a complexity deficit") {
    // rational data always reaches a connection; the coding complexity must
    // fall short of 2n + 1 within a modest window
    for (auto lambda : {std::vector<Rational>{q(1, 3), q(1, 3), q(1, 3)},
                        std::vector<Rational>{q(2, 7), q(4, 7), q(1, 7)},
                        std::vector<Rational>{q(6, 17), q(7, 17), q(4, 17)}}) {
        Iet t = make_iet(lambda, "123/231");
        Expansion e = iet_expansion(t, 64);
        REQUIRE(e.connection_at.has_value());
        FiniteLanguage coding = coding_factors(t, 40);
        bool deficit = false;
        for (int n = 1; n <= 40 && !deficit; ++n) deficit = coding.complexity(n) < 2 * n + 1;
        CHECK(deficit);
    }
}
