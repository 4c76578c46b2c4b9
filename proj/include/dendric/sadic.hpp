#ifndef DENDRIC_SADIC_HPP
#define DENDRIC_SADIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "dendric/morphisms.hpp"
#include "dendric/words.hpp"

namespace dendric {

// Finite or eventually-periodic sequence of morphisms sigma_1, sigma_2, ...
// (1-based; sigma_n maps level n+1 words to level n words).
class DirectiveSequence {
public:
    DirectiveSequence(std::vector<Morphism> head, std::vector<Morphism> cycle = {});
    static DirectiveSequence parse(const std::string& file_content, int k_cap = 64);

    const Morphism& at(int n) const;  // 1-based
    bool eventually_periodic() const { return !cycle_.empty(); }
    int head_length() const { return static_cast<int>(head_.size()); }
    int available_length() const;  // head length when finite, INT_MAX otherwise
    const std::vector<Morphism>& head() const { return head_; }
    const std::vector<Morphism>& cycle() const { return cycle_; }
    std::vector<Morphism> prefix(int n) const;

private:
    std::vector<Morphism> head_, cycle_;
};

struct LevelLanguage {
    FiniteLanguage language;
    bool stabilized = false;
    int levels_used = 0;
};

// Union over N <= depth of the factors (length <= horizon) of sigma_[n,N)(a).
LevelLanguage language_of_level(const DirectiveSequence& ds, int level, int depth, int horizon);

bool is_primitive_window(const DirectiveSequence& ds, int n, int N);
// smallest N <= limit with a positive window product, or nullopt
std::optional<int> primitive_window_end(const DirectiveSequence& ds, int n, int limit);

struct ReturnWordSet {
    std::string base;
    std::vector<std::string> words;  // canonical order: length, then lex
    bool certified = false;
};

ReturnWordSet return_words(const FiniteLanguage& l, const std::string& w);

struct DerivedLanguage {
    Morphism coding;  // fresh letters {1..#R} -> return words, canonical order
    FiniteLanguage language;
};

// Derivation with respect to a letter; requires a certified return word set.
DerivedLanguage derived_language(const FiniteLanguage& l, char letter);

}  // namespace dendric

#endif
