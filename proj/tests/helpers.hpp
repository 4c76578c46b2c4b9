#ifndef DENDRIC_TEST_HELPERS_HPP
#define DENDRIC_TEST_HELPERS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dendric/catalog.hpp"
#include "dendric/sadic.hpp"
#include "dendric/words.hpp"

namespace dendric::testing {

// deterministic 64-bit generator for reproducible batches
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
};

inline FiniteLanguage fibonacci_language(int horizon, int depth = 40) {
    Alphabet ab("01");
    Morphism fib(ab, ab, {"01", "0"});
    DirectiveSequence ds({}, {fib});
    return language_of_level(ds, 1, depth, horizon).language;
}

inline FiniteLanguage tribonacci_language(int horizon, int depth = 48) {
    DirectiveSequence ds({}, {parse_morphism_expr("a.p231")});
    return language_of_level(ds, 1, depth, horizon).language;
}

// a language whose empty-word extension graph is the beta template
inline FiniteLanguage beta_case_language(int horizon, int depth = 48) {
    DirectiveSequence ds({parse_morphism_expr("b")}, {parse_morphism_expr("a.p231")});
    return language_of_level(ds, 1, depth, horizon).language;
}

inline FiniteLanguage language_of(const std::vector<Morphism>& head, const std::vector<Morphism>& cycle, int horizon,
                                  int depth = 64) {
    DirectiveSequence ds(head, cycle);
    return language_of_level(ds, 1, depth, horizon).language;
}

}  // namespace dendric::testing

#endif
