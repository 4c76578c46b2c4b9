#ifndef DENDRIC_WORDS_HPP
#define DENDRIC_WORDS_HPP

#include <string>
#include <unordered_set>
#include <vector>

namespace dendric {

// Letters are single characters; canonical order is declaration order,
// not character order, so {1,2,3} and {0,1} behave as written.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::string symbols);

    int size() const { return static_cast<int>(symbols_.size()); }
    char letter(int rank) const { return symbols_[static_cast<size_t>(rank)]; }
    int rank(char c) const;
    bool contains(char c) const { return rank(c) >= 0; }
    bool contains_word(const std::string& w) const;
    const std::string& symbols() const { return symbols_; }

    bool operator==(const Alphabet& o) const { return symbols_ == o.symbols_; }
    bool operator!=(const Alphabet& o) const { return !(*this == o); }

private:
    std::string symbols_;
};

// (length, then lexicographic by alphabet rank)
bool word_less(const Alphabet& a, const std::string& u, const std::string& v);

// Factorial, horizon-bounded word set.  Members are exactly the factors of
// the generator words of length <= horizon; factorial closure is automatic.
class FiniteLanguage {
public:
    FiniteLanguage(Alphabet alphabet, int horizon);
    static FiniteLanguage from_words(Alphabet alphabet, int horizon, std::vector<std::string> words);

    const Alphabet& alphabet() const { return alphabet_; }
    int horizon() const { return horizon_; }
    const std::vector<std::string>& generators() const { return generators_; }

    bool contains(const std::string& w) const;
    // distinct member words of length n, sorted by alphabet order
    std::vector<std::string> words_of_length(int n) const;
    long long complexity(int n) const;  // p(n); throws std::out_of_range past horizon
    std::vector<std::string> all_words(int max_len) const;  // sorted (length, lex)

    bool covers_alphabet() const;  // every letter occurs in some member
    FiniteLanguage relabeled(const std::string& from, const std::string& to, Alphabet new_alphabet) const;

    // UTF-8 dump, one word per line, epsilon rendered as "@"
    std::string dump(int max_len) const;

private:
    Alphabet alphabet_;
    int horizon_ = 0;
    std::vector<std::string> generators_;  // deduplicated, none empty
};

// all distinct factors of w of length <= n
FiniteLanguage factors(const Alphabet& alphabet, const std::string& w, int n);

struct RauzyEdge {
    std::string from, to;
    char label;  // the letter a with u b = a v
    bool operator==(const RauzyEdge& o) const = default;
};

struct RauzyGraph {
    int order = 0;
    std::vector<std::string> vertices;
    std::vector<RauzyEdge> edges;
};

RauzyGraph rauzy_graph(const FiniteLanguage& language, int n);
bool strongly_connected(const RauzyGraph& g);

}  // namespace dendric

#endif
