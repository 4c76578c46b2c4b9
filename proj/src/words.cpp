#include "dendric/words.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace dendric {

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
    if (symbols_.size() < 1) throw std::invalid_argument("alphabet must not be empty");
    for (size_t i = 0; i < symbols_.size(); ++i) {
        for (size_t j = i + 1; j < symbols_.size(); ++j) {
            if (symbols_[i] == symbols_[j]) throw std::invalid_argument("duplicate symbol in alphabet");
        }
    }
}

int Alphabet::rank(char c) const {
    auto pos = symbols_.find(c);
    return pos == std::string::npos ? -1 : static_cast<int>(pos);
}

bool Alphabet::contains_word(const std::string& w) const {
    for (char c : w) {
        if (!contains(c)) return false;
    }
    return true;
}

bool word_less(const Alphabet& a, const std::string& u, const std::string& v) {
    if (u.size() != v.size()) return u.size() < v.size();
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i] != v[i]) return a.rank(u[i]) < a.rank(v[i]);
    }
    return false;
}

FiniteLanguage::FiniteLanguage(Alphabet alphabet, int horizon)
    : alphabet_(std::move(alphabet)), horizon_(horizon) {
    if (horizon < 0) throw std::invalid_argument("horizon must be >= 0");
}

FiniteLanguage FiniteLanguage::from_words(Alphabet alphabet, int horizon, std::vector<std::string> words) {
    FiniteLanguage lang(std::move(alphabet), horizon);
    std::unordered_set<std::string> seen;
    for (auto& w : words) {
        if (w.empty()) continue;
        if (!lang.alphabet_.contains_word(w)) throw std::invalid_argument("word uses letter outside alphabet: " + w);
        if (seen.insert(w).second) lang.generators_.push_back(std::move(w));
    }
    return lang;
}

bool FiniteLanguage::contains(const std::string& w) const {
    if (static_cast<int>(w.size()) > horizon_) return false;
    if (w.empty()) return true;
    for (const auto& g : generators_) {
        if (g.find(w) != std::string::npos) return true;
    }
    return false;
}

std::vector<std::string> FiniteLanguage::words_of_length(int n) const {
    if (n < 0 || n > horizon_) throw std::out_of_range("length exceeds language horizon");
    if (n == 0) return {""};
    std::set<std::string> out;
    for (const auto& g : generators_) {
        if (static_cast<int>(g.size()) < n) continue;
        for (size_t i = 0; i + n <= g.size(); ++i) out.insert(g.substr(i, static_cast<size_t>(n)));
    }
    std::vector<std::string> v(out.begin(), out.end());
    std::sort(v.begin(), v.end(), [&](const std::string& a, const std::string& b) { return word_less(alphabet_, a, b); });
    return v;
}

long long FiniteLanguage::complexity(int n) const {
    return static_cast<long long>(words_of_length(n).size());
}

std::vector<std::string> FiniteLanguage::all_words(int max_len) const {
    if (max_len > horizon_) throw std::out_of_range("length exceeds language horizon");
    std::vector<std::string> out;
    for (int n = 0; n <= max_len; ++n) {
        auto w = words_of_length(n);
        out.insert(out.end(), w.begin(), w.end());
    }
    return out;
}

bool FiniteLanguage::covers_alphabet() const {
    std::set<char> seen;
    for (const auto& g : generators_) seen.insert(g.begin(), g.end());
    return static_cast<int>(seen.size()) == alphabet_.size();
}

FiniteLanguage FiniteLanguage::relabeled(const std::string& from, const std::string& to, Alphabet new_alphabet) const {
    if (from.size() != to.size()) throw std::invalid_argument("relabeling maps must have equal size");
    std::vector<std::string> gens = generators_;
    for (auto& g : gens) {
        for (auto& c : g) {
            auto pos = from.find(c);
            if (pos == std::string::npos) throw std::invalid_argument("letter missing from relabeling");
            c = to[pos];
        }
    }
    return from_words(std::move(new_alphabet), horizon_, std::move(gens));
}

std::string FiniteLanguage::dump(int max_len) const {
    std::string out;
    for (const auto& w : all_words(max_len)) {
        out += w.empty() ? "@" : w;
        out += '\n';
    }
    return out;
}

FiniteLanguage factors(const Alphabet& alphabet, const std::string& w, int n) {
    if (n < 0) throw std::invalid_argument("factor length must be >= 0");
    std::string trimmed = w;
    if (static_cast<int>(trimmed.size()) > n) {
        // keep only length-n windows as generators; shorter factors follow
        std::vector<std::string> windows;
        for (size_t i = 0; i + n <= trimmed.size(); ++i) windows.push_back(trimmed.substr(i, static_cast<size_t>(n)));
        return FiniteLanguage::from_words(alphabet, n, std::move(windows));
    }
    return FiniteLanguage::from_words(alphabet, n, {trimmed});
}

RauzyGraph rauzy_graph(const FiniteLanguage& language, int n) {
    if (n + 1 > language.horizon()) throw std::out_of_range("Rauzy graph order exceeds language horizon");
    RauzyGraph g;
    g.order = n;
    g.vertices = language.words_of_length(n);
    for (const auto& w : language.words_of_length(n + 1)) {
        // w = u b = a v
        g.edges.push_back({w.substr(0, static_cast<size_t>(n)), w.substr(1), w[0]});
    }
    return g;
}

bool strongly_connected(const RauzyGraph& g) {
    if (g.vertices.empty()) return true;
    std::map<std::string, std::vector<std::string>> fwd, bwd;
    for (const auto& e : g.edges) {
        fwd[e.from].push_back(e.to);
        bwd[e.to].push_back(e.from);
    }
    auto reach = [&](const std::map<std::string, std::vector<std::string>>& adj) {
        std::set<std::string> seen{g.vertices.front()};
        std::vector<std::string> stack{g.vertices.front()};
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            auto it = adj.find(v);
            if (it == adj.end()) continue;
            for (const auto& w : it->second) {
                if (seen.insert(w).second) stack.push_back(w);
            }
        }
        return seen.size() == g.vertices.size();
    };
    return reach(fwd) && reach(bwd);
}

}  // namespace dendric
