#include "dendric/cassaigne.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dendric {

CassaigneSequence CassaigneSequence::parse(const std::string& literal) {
    CassaigneSequence s;
    for (char c : literal) {
        if (c == '1' || c == '2') {
            s.symbols += c;
        } else if (c != ' ') {
            throw std::invalid_argument("Cassaigne literals use only 1 and 2");
        }
    }
    if (s.symbols.empty()) throw std::invalid_argument("empty Cassaigne sequence");
    return s;
}

std::vector<Morphism> CassaigneSequence::morphisms() const {
    std::vector<Morphism> out;
    for (char c : symbols) out.push_back(c == '1' ? cat_c1() : cat_c2());
    return out;
}

bool is_primitive_cassaigne(const CassaigneSequence& seq, int window) {
    if (window > static_cast<int>(seq.symbols.size())) throw std::invalid_argument("window exceeds sequence length");
    const std::string& s = seq.symbols;
    size_t begin = s.size() - static_cast<size_t>(window);
    for (size_t start = begin; start + 2 <= s.size(); ++start) {
        size_t len = s.size() - start;
        if (len % 2 != 0) continue;
        bool doubled = true;
        for (size_t i = start; i + 1 < s.size(); i += 2) {
            if (s[i] != s[i + 1]) {
                doubled = false;
                break;
            }
        }
        if (doubled) return false;
    }
    return true;
}

std::string sc_product_name(ScProduct p) {
    switch (p) {
        case ScProduct::C11: return "c11";
        case ScProduct::C22: return "c22";
        case ScProduct::C122: return "c122";
        case ScProduct::C211: return "c211";
        case ScProduct::C121: return "c121";
        case ScProduct::C212: return "c212";
    }
    return "?";
}

std::string sc_cword(ScProduct p) {
    switch (p) {
        case ScProduct::C11: return "11";
        case ScProduct::C22: return "22";
        case ScProduct::C122: return "122";
        case ScProduct::C211: return "211";
        case ScProduct::C121: return "121";
        case ScProduct::C212: return "212";
    }
    return "";
}

Morphism sc_product_morphism(ScProduct p) {
    std::vector<Morphism> chain;
    for (char c : sc_cword(p)) chain.push_back(c == '1' ? cat_c1() : cat_c2());
    return compose(chain);
}

TernaryLabel sc_label(ScProduct p) {
    switch (p) {
        case ScProduct::C11: return {0, CoreKind::Alpha, 0, 0};   // a
        case ScProduct::C22: return {5, CoreKind::Alpha, 0, 5};   // p321 a p321
        case ScProduct::C122: return {2, CoreKind::Gamma, 0, 3};  // p213 g p231
        case ScProduct::C211: return {3, CoreKind::Beta, 0, 1};   // p231 b p132
        case ScProduct::C121: return {1, CoreKind::Eta, 0, 3};    // p132 e p231
        case ScProduct::C212: return {5, CoreKind::Eta, 0, 3};    // p321 e p231
    }
    throw std::invalid_argument("bad product");
}

ScRepresentation sc_representation(const CassaigneSequence& seq) {
    ScRepresentation out;
    const std::string& s = seq.symbols;
    size_t i = 0;
    std::vector<Morphism> consumed;
    while (i < s.size()) {
        if (i + 1 >= s.size()) {
            out.trailing = s.substr(i);
            break;
        }
        ScProduct p;
        size_t advance;
        if (s[i] == s[i + 1]) {
            p = s[i] == '1' ? ScProduct::C11 : ScProduct::C22;
            advance = 2;
        } else {
            if (i + 2 >= s.size()) {
                out.trailing = s.substr(i);  // a mixed pair needs a third symbol
                break;
            }
            std::string triple = s.substr(i, 3);
            if (triple == "122") p = ScProduct::C122;
            else if (triple == "211") p = ScProduct::C211;
            else if (triple == "121") p = ScProduct::C121;
            else p = ScProduct::C212;
            advance = 3;
        }
        out.products.push_back(p);
        for (size_t j = i; j < i + advance; ++j) consumed.push_back(s[j] == '1' ? cat_c1() : cat_c2());
        i += advance;
    }
    // recomposition contract
    if (!out.products.empty()) {
        std::vector<Morphism> emitted;
        for (ScProduct p : out.products) emitted.push_back(sc_product_morphism(p));
        if (compose(emitted) != compose(consumed)) throw std::logic_error("product recoding broke composition equality");
    }
    return out;
}

std::vector<ClassLabel> cassaigne_class_closure() {
    // transport of classes through the bar-free expressions; a greatest
    // fixpoint starting from all labels over-approximates the classes of
    // primitive Cassaigne shifts (sound for pruning, never for acceptance)
    std::set<ClassLabel> current;
    for (int l = 0; l <= 3; ++l) {
        for (int r = 0; r <= 3; ++r) current.insert({l, r});
    }
    const std::vector<ScProduct> non_alpha{ScProduct::C122, ScProduct::C211, ScProduct::C121, ScProduct::C212};
    for (;;) {
        std::set<ClassLabel> next;
        for (ScProduct p : non_alpha) {
            for (const auto& c : current) {
                try {
                    next.insert(class_image(c, sc_label(p)));
                } catch (const ConditionViolation&) {
                }
            }
        }
        // alpha-shaped products preserve classes, so closing under the
        // non-alpha transports alone is the productive part
        if (next == current) break;
        current = std::move(next);
    }
    return {current.begin(), current.end()};
}

namespace {

bool is_alpha_cored(ScProduct p) { return p == ScProduct::C11 || p == ScProduct::C22; }

std::string word_cword(const std::vector<ScProduct>& word) {
    std::string s;
    for (ScProduct p : word) s += sc_cword(p);
    return s;
}

}  // namespace

DisjointnessReport disjointness_check(int max_len) {
    if (max_len < 1) throw std::invalid_argument("max_len must be >= 1");
    DisjointnessReport report;
    report.max_len = max_len;

    ClassGraph giet = build_g_iet();
    std::vector<ClassLabel> closure = cassaigne_class_closure();
    StateConstraint constraint = [&](int vertex, int xi) {
        ClassLabel c = apply_perm(perm(xi), giet.vertices[static_cast<size_t>(vertex)]);
        return std::find(closure.begin(), closure.end(), c) != closure.end();
    };

    const std::vector<ScProduct> all{ScProduct::C11,  ScProduct::C22,  ScProduct::C122,
                                     ScProduct::C211, ScProduct::C121, ScProduct::C212};
    std::vector<std::vector<ScProduct>> frontier{{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::vector<ScProduct>> next;
        for (const auto& base : frontier) {
            for (ScProduct p : all) {
                auto word = base;
                word.push_back(p);
                ++report.words_checked;

                CassaigneSequence cs{word_cword(word)};
                bool compatible = is_primitive_cassaigne(cs, static_cast<int>(cs.symbols.size()));
                if (compatible) ++report.primitive_compatible;

                bool all_alpha = std::all_of(word.begin(), word.end(), is_alpha_cored);
                CheckStatus ar = all_alpha ? (compatible ? CheckStatus::Counterexample : CheckStatus::UndecidedAtBound)
                                           : CheckStatus::Excluded;

                CheckStatus iet = CheckStatus::UndecidedAtBound;
                if (compatible) {
                    std::vector<Morphism> prefix;
                    for (ScProduct q : word) prefix.push_back(label_morphism(sc_label(q)));
                    iet = equivalent_path_exists(prefix, giet, constraint) ? CheckStatus::Counterexample
                                                                           : CheckStatus::Excluded;
                }

                if (ar == CheckStatus::Counterexample || iet == CheckStatus::Counterexample) {
                    report.counterexamples.push_back({word, ar, iet});
                }
                next.push_back(std::move(word));
            }
        }
        frontier = std::move(next);
    }
    return report;
}

}  // namespace dendric
