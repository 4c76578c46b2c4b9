#include "dendric/sadic.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "dendric/catalog.hpp"

namespace dendric {

DirectiveSequence::DirectiveSequence(std::vector<Morphism> head, std::vector<Morphism> cycle)
    : head_(std::move(head)), cycle_(std::move(cycle)) {
    if (head_.empty() && cycle_.empty()) throw std::invalid_argument("empty directive sequence");
    int n = available_length() == INT_MAX ? head_length() + 2 * static_cast<int>(cycle_.size()) : head_length();
    for (int i = 1; i < n; ++i) {
        if (at(i).domain() != at(i + 1).codomain()) {
            throw std::invalid_argument("directive sequence alphabets are not compatible at position " + std::to_string(i));
        }
    }
}

DirectiveSequence DirectiveSequence::parse(const std::string& content, int k_cap) {
    std::vector<Morphism> head, cycle;
    bool in_cycle = false;
    std::istringstream in(content);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) line.pop_back();
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.erase(line.begin());
        if (line.empty()) continue;
        if (line.rfind("repeat:", 0) == 0) {
            in_cycle = true;
            line = line.substr(7);
            while (!line.empty() && line.front() == ' ') line.erase(line.begin());
            if (line.empty()) continue;
        }
        Morphism m = line.front() == '{' ? morphism_from_json(line) : parse_morphism_expr(line, k_cap);
        (in_cycle ? cycle : head).push_back(std::move(m));
    }
    return DirectiveSequence(std::move(head), std::move(cycle));
}

const Morphism& DirectiveSequence::at(int n) const {
    if (n < 1) throw std::invalid_argument("directive sequence indices are 1-based");
    size_t i = static_cast<size_t>(n - 1);
    if (i < head_.size()) return head_[i];
    if (cycle_.empty()) throw std::out_of_range("directive sequence exhausted");
    return cycle_[(i - head_.size()) % cycle_.size()];
}

int DirectiveSequence::available_length() const { return cycle_.empty() ? head_length() : INT_MAX; }

std::vector<Morphism> DirectiveSequence::prefix(int n) const {
    std::vector<Morphism> out;
    for (int i = 1; i <= n; ++i) out.push_back(at(i));
    return out;
}

namespace {

// first/last letter and inner adjacent pairs of a composed image; enough to
// follow junction structure without materializing deep images
struct ImageShape {
    char first = 0, last = 0;
    std::set<std::pair<char, char>> pairs;
    bool operator==(const ImageShape& o) const = default;
    bool operator<(const ImageShape& o) const {
        return std::tie(first, last, pairs) < std::tie(o.first, o.last, o.pairs);
    }
};

}  // namespace

LevelLanguage language_of_level(const DirectiveSequence& ds, int level, int depth, int horizon) {
    if (level < 1) throw std::invalid_argument("level must be >= 1");
    if (depth <= level) throw std::invalid_argument("depth must exceed the level");
    int last_index = ds.available_length() == INT_MAX ? depth : std::min(depth, ds.available_length() + 1);
    if (last_index <= level) throw std::invalid_argument("directive sequence too short for this level");

    const Alphabet& alpha = ds.at(level).codomain();
    std::unordered_set<std::string> windows;
    auto harvest_word = [&](const std::string& img) {
        if (static_cast<int>(img.size()) <= horizon) {
            windows.insert(img);
        } else {
            for (size_t i = 0; i + static_cast<size_t>(horizon) <= img.size(); ++i) {
                windows.insert(img.substr(i, static_cast<size_t>(horizon)));
            }
        }
    };

    // phase 1: compose sigma_[level,N) until every image covers the horizon
    std::vector<std::string> images;
    Alphabet current;  // A_N
    int base = 0;      // N once reached
    int used = level;
    for (int N = level + 1; N <= last_index; ++N) {
        const Morphism& step = ds.at(N - 1);
        if (N == level + 1) {
            current = step.domain();
            images = step.images();
        } else {
            const Alphabet& next = step.domain();
            std::vector<std::string> lifted(static_cast<size_t>(next.size()));
            for (int a = 0; a < next.size(); ++a) {
                for (char c : step.image(next.letter(a))) {
                    lifted[static_cast<size_t>(a)] += images[static_cast<size_t>(current.rank(c))];
                }
            }
            images = std::move(lifted);
            current = next;
        }
        used = N;
        size_t min_len = SIZE_MAX;
        for (const auto& img : images) min_len = std::min(min_len, img.size());
        if (min_len >= static_cast<size_t>(horizon)) {
            base = N;
            break;
        }
        // short levels are cheap to keep; they are subsumed later anyway
        for (const auto& img : images) harvest_word(img);
    }

    if (base == 0) {
        // the sequence ran out before the images covered the horizon
        for (const auto& img : images) harvest_word(img);
        std::vector<std::string> gens(windows.begin(), windows.end());
        return {FiniteLanguage::from_words(alpha, horizon, std::move(gens)), false, used};
    }

    // phase 2: adjacent-pair fixpoint at the base level; a window of length
    // <= horizon in any deeper image spans at most two base images, so the
    // realized junction pairs determine the language exactly
    std::set<std::pair<char, char>> realized;
    std::map<char, ImageShape> shapes;
    for (int a = 0; a < current.size(); ++a) {
        char c = current.letter(a);
        shapes[c] = {c, c, {}};
    }
    Alphabet walk = current;
    bool stabilized = false;
    std::set<std::pair<int, std::pair<std::vector<std::string>, std::set<std::pair<char, char>>>>> seen;
    for (int M = base; M < last_index; ++M) {
        const Morphism& step = ds.at(M);
        const Alphabet& next = step.domain();
        std::map<char, ImageShape> lifted;
        for (int a = 0; a < next.size(); ++a) {
            ImageShape shape;
            const std::string& w = step.image(next.letter(a));
            for (size_t i = 0; i < w.size(); ++i) {
                const ImageShape& part = shapes.at(w[i]);
                if (i == 0) shape.first = part.first;
                if (i > 0) shape.pairs.insert({shapes.at(w[i - 1]).last, part.first});
                shape.pairs.insert(part.pairs.begin(), part.pairs.end());
                shape.last = part.last;
            }
            lifted[next.letter(a)] = std::move(shape);
        }
        shapes = std::move(lifted);
        walk = next;
        for (const auto& [c, shape] : shapes) {
            (void)c;
            realized.insert(shape.pairs.begin(), shape.pairs.end());
        }
        if (ds.eventually_periodic()) {
            // provable convergence: the per-phase shape state repeated
            int phase = M - ds.head_length() >= 0 ? (M - ds.head_length()) % static_cast<int>(ds.cycle().size()) : -1;
            std::vector<std::string> key;
            for (const auto& [c, shape] : shapes) {
                std::string enc(1, c);
                enc += shape.first;
                enc += shape.last;
                for (auto [x, y] : shape.pairs) {
                    enc += x;
                    enc += y;
                }
                key.push_back(std::move(enc));
            }
            if (!seen.insert({phase, {key, realized}}).second) {
                stabilized = true;
                break;
            }
        }
    }
    if (!ds.eventually_periodic()) stabilized = true;  // the finite union was computed in full

    // phase 3: per-letter windows and junction windows over realized pairs
    for (const auto& img : images) harvest_word(img);
    for (const auto& [b, c] : realized) {
        const std::string& left = images[static_cast<size_t>(current.rank(b))];
        const std::string& right = images[static_cast<size_t>(current.rank(c))];
        // windows straddling the junction
        size_t span = static_cast<size_t>(horizon);
        size_t from = left.size() >= span - 1 ? left.size() - (span - 1) : 0;
        std::string joined = left.substr(from) + right.substr(0, span - 1);
        harvest_word(joined);
    }

    std::vector<std::string> gens(windows.begin(), windows.end());
    return {FiniteLanguage::from_words(alpha, horizon, std::move(gens)), stabilized, used};
}

namespace {
// saturating product keeps positivity decidable for long windows
std::vector<std::vector<long long>> sat_product(const std::vector<std::vector<long long>>& a,
                                                const std::vector<std::vector<long long>>& b) {
    constexpr long long kCap = 1'000'000'000'000'000LL;
    std::vector<std::vector<long long>> r(a.size(), std::vector<long long>(b[0].size(), 0));
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < b[k].size(); ++j) {
                if (b[k][j] == 0) continue;
                long long add = (a[i][k] > kCap / b[k][j]) ? kCap : a[i][k] * b[k][j];
                r[i][j] = std::min(kCap, r[i][j] + add);
            }
        }
    }
    return r;
}
}  // namespace

bool is_primitive_window(const DirectiveSequence& ds, int n, int N) {
    if (n >= N) throw std::invalid_argument("window needs n < N");
    if (ds.available_length() != INT_MAX && N - 1 > ds.available_length()) return false;
    std::vector<std::vector<long long>> prod = ds.at(n).incidence_matrix().m;
    for (int i = n + 1; i < N; ++i) prod = sat_product(prod, ds.at(i).incidence_matrix().m);
    for (const auto& row : prod) {
        for (long long v : row) {
            if (v <= 0) return false;
        }
    }
    return true;
}

std::optional<int> primitive_window_end(const DirectiveSequence& ds, int n, int limit) {
    for (int N = n + 1; N <= limit; ++N) {
        if (ds.available_length() != INT_MAX && N - 1 > ds.available_length()) break;
        if (is_primitive_window(ds, n, N)) return N;
    }
    return std::nullopt;
}

ReturnWordSet return_words(const FiniteLanguage& l, const std::string& w) {
    if (w.empty()) throw std::invalid_argument("return words need a non-empty base word");
    if (!l.contains(w)) throw std::invalid_argument("base word not in language: " + w);

    ReturnWordSet out;
    out.base = w;
    std::unordered_set<std::string> seen;
    for (const auto& g : l.generators()) {
        std::vector<size_t> occ;
        for (size_t pos = g.find(w); pos != std::string::npos; pos = g.find(w, pos + 1)) occ.push_back(pos);
        for (size_t i = 0; i + 1 < occ.size(); ++i) {
            size_t len = occ[i + 1] - occ[i];
            if (len + w.size() > static_cast<size_t>(l.horizon())) continue;  // rw must itself be a member
            std::string r = g.substr(occ[i], len);
            if (seen.insert(r).second) out.words.push_back(r);
        }
    }
    std::sort(out.words.begin(), out.words.end(),
              [&](const std::string& a, const std::string& b) { return word_less(l.alphabet(), a, b); });

    size_t max_r = 0;
    for (const auto& r : out.words) max_r = std::max(max_r, r.size());
    bool horizon_ok = !out.words.empty() &&
                      static_cast<size_t>(l.horizon()) >= std::max(2 * max_r, max_r + w.size());
    bool successors_ok = true;
    for (const auto& g : l.generators()) {
        std::vector<size_t> occ;
        for (size_t pos = g.find(w); pos != std::string::npos; pos = g.find(w, pos + 1)) occ.push_back(pos);
        for (size_t i = 0; i < occ.size() && successors_ok; ++i) {
            if (occ[i] + w.size() + max_r > g.size()) continue;  // too close to the edge to judge
            bool has_successor = i + 1 < occ.size() && occ[i + 1] - occ[i] <= max_r;
            if (!has_successor) successors_ok = false;
        }
        if (!successors_ok) break;
    }
    out.certified = horizon_ok && successors_ok;
    return out;
}

DerivedLanguage derived_language(const FiniteLanguage& l, char letter) {
    ReturnWordSet rs = return_words(l, std::string(1, letter));
    if (!rs.certified) throw std::invalid_argument("return word set is not certified at this horizon");
    if (rs.words.size() > 9) throw std::invalid_argument("derived alphabets beyond 9 letters are not supported");

    std::string fresh;
    for (size_t i = 0; i < rs.words.size(); ++i) fresh += static_cast<char>('1' + i);
    Alphabet derived_alpha(fresh);
    Morphism coding(derived_alpha, l.alphabet(), rs.words);

    size_t max_r = 0;
    for (const auto& r : rs.words) max_r = std::max(max_r, r.size());
    int derived_horizon = static_cast<int>((static_cast<size_t>(l.horizon()) - 1) / max_r);

    std::vector<std::string> gens;
    for (const auto& g : l.generators()) {
        std::vector<size_t> occ;
        for (size_t pos = g.find(letter); pos != std::string::npos; pos = g.find(letter, pos + 1)) occ.push_back(pos);
        if (occ.size() < 2) continue;
        std::string d;
        for (size_t i = 0; i + 1 < occ.size(); ++i) {
            std::string seg = g.substr(occ[i], occ[i + 1] - occ[i]);
            auto it = std::find(rs.words.begin(), rs.words.end(), seg);
            if (it == rs.words.end()) throw std::logic_error("segment is not a discovered return word: " + seg);
            d += static_cast<char>('1' + (it - rs.words.begin()));
        }
        gens.push_back(std::move(d));
    }
    return {std::move(coding), FiniteLanguage::from_words(derived_alpha, derived_horizon, std::move(gens))};
}

}  // namespace dendric
