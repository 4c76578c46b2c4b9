#include <doctest.h>

#include <stdexcept>

#include "dendric/extensions.hpp"
#include "helpers.hpp"

using namespace dendric;
using dendric::testing::fibonacci_language;
using dendric::testing::tribonacci_language;

namespace {
ExtensionGraph graph_of(std::initializer_list<std::pair<char, char>> edges) {
    ExtensionGraph g;
    for (auto [a, b] : edges) {
        g.edges.insert({a, b});
        g.left.insert(a);
        g.right.insert(b);
    }
    return g;
}
}  // namespace

TEST_CASE("Fibonacci extension graphs") {
    FiniteLanguage fib = fibonacci_language(12);

    ExtensionGraph eps = extension_graph(fib, "");
    CHECK(eps == graph_of({{'0', '0'}, {'0', '1'}, {'1', '0'}}));
    CHECK(is_tree(eps));

    ExtensionGraph zero = extension_graph(fib, "0");
    CHECK(zero == graph_of({{'0', '1'}, {'1', '0'}, {'1', '1'}}));
    CHECK(is_tree(zero));

    ExtensionGraph one = extension_graph(fib, "1");
    CHECK(one == graph_of({{'0', '0'}}));
    CHECK(is_tree(one));
}

TEST_CASE("tree recognition") {
    CHECK_FALSE(is_tree(graph_of({{'0', '0'}, {'0', '1'}, {'1', '0'}, {'1', '1'}})));  // 4-cycle
    CHECK(is_tree(graph_of({{'0', '1'}})));
    CHECK_FALSE(is_connected(graph_of({{'1', '1'}, {'2', '2'}})));
    CHECK(is_acyclic(graph_of({{'1', '1'}, {'2', '2'}})));
}

TEST_CASE("bilateral multiplicity") {
    FiniteLanguage fib = fibonacci_language(8);
    CHECK(bilateral_multiplicity(extension_graph(fib, "")) == 0);
    CHECK(bilateral_multiplicity(graph_of({{'0', '0'}, {'0', '1'}, {'1', '0'}, {'1', '1'}})) == 1);
    CHECK(bilateral_multiplicity(graph_of({{'0', '1'}})) == 0);
}

TEST_CASE("word classification") {
    FiniteLanguage fib = fibonacci_language(8);
    WordClass eps = classify_word(fib, "");
    CHECK(eps.bispecial);
    CHECK(eps.ordinary);
    CHECK(eps.dendric);

    WordClass one = classify_word(fib, "1");
    CHECK_FALSE(one.left_special);
    CHECK_FALSE(one.right_special);

    // bispecial, dendric, but not ordinary (a path through all six vertices)
    FiniteLanguage host = dendric::testing::language_of({parse_morphism_expr("d1")}, {parse_morphism_expr("a.p231")}, 10);
    ExtensionGraph eg = extension_graph(host, "");
    CHECK(eg == graph_of({{'1', '1'}, {'1', '2'}, {'2', '3'}, {'3', '1'}, {'3', '3'}}));
    WordClass cls = classify_word(host, "");
    CHECK(cls.bispecial);
    CHECK_FALSE(cls.ordinary);
    CHECK(cls.dendric);
}

TEST_CASE("dendricity audit") {
    FiniteLanguage trib = tribonacci_language(18);
    AuditReport good = dendricity_audit(trib, 15);
    CHECK(good.pass);
    CHECK(good.non_dendric.empty());

    FiniteLanguage full = factors(Alphabet("01"), "0001101110010110", 4);  // full shift factors
    AuditReport bad = dendricity_audit(full, 2);
    CHECK_FALSE(bad.pass);
    REQUIRE(!bad.non_dendric.empty());
    CHECK(bad.non_dendric.front() == "@");
}

TEST_CASE("complexity differences telescope through extension sets") {
    FiniteLanguage trib = tribonacci_language(14);
    for (int n = 0; n + 1 <= 11; ++n) {
        long long right_sum = 0, left_sum = 0;
        for (const auto& w : trib.words_of_length(n)) {
            ExtensionGraph g = extension_graph(trib, w);
            right_sum += static_cast<long long>(g.right.size()) - 1;
            left_sum += static_cast<long long>(g.left.size()) - 1;
        }
        CHECK(trib.complexity(n + 1) - trib.complexity(n) == right_sum);
        CHECK(trib.complexity(n + 1) - trib.complexity(n) == left_sum);
    }
}

TEST_CASE("graph dump and dot export") {
    ExtensionGraph g = graph_of({{'1', '2'}});
    CHECK(dump(g) == "left: 1\nright: 2\n1-2\n");
    CHECK(to_dot(g).find("L1 -- R2") != std::string::npos);
}

TEST_CASE("horizon guards are hard errors") {
    FiniteLanguage fib = fibonacci_language(4);
    CHECK_THROWS_AS(extension_graph(fib, "010"), std::out_of_range);
    CHECK_THROWS_AS(extension_graph(fib, "11"), std::invalid_argument);  // not a member
    CHECK_THROWS_AS(dendricity_audit(fib, 3), std::out_of_range);
}
