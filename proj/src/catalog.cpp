#include "dendric/catalog.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dendric {

const Alphabet& ternary_alphabet() {
    static const Alphabet a("123");
    return a;
}

namespace {
Morphism ternary(std::vector<std::string> images) {
    return Morphism(ternary_alphabet(), ternary_alphabet(), std::move(images));
}
std::string rep(char c, int n) { return std::string(static_cast<size_t>(n), c); }
}  // namespace

Morphism cat_alpha() { return ternary({"1", "12", "13"}); }
Morphism cat_beta() { return ternary({"1", "12", "132"}); }
Morphism cat_gamma() { return ternary({"1", "12", "123"}); }
Morphism cat_delta(int k) {
    if (k < 1) throw std::invalid_argument("delta requires k >= 1");
    return ternary({"1", "12" + rep('3', k), "12" + rep('3', k + 1)});
}
Morphism cat_zeta(int k) {
    if (k < 1) throw std::invalid_argument("zeta requires k >= 1");
    return ternary({"1" + rep('3', k), "12", "1" + rep('3', k + 1)});
}
Morphism cat_eta() { return ternary({"13", "12", "123"}); }

Morphism ar_alpha(const Alphabet& a, char letter) {
    if (!a.contains(letter)) throw std::invalid_argument("AR letter outside alphabet");
    std::vector<std::string> imgs;
    for (int i = 0; i < a.size(); ++i) {
        char b = a.letter(i);
        imgs.push_back(b == letter ? std::string(1, letter) : std::string{letter, b});
    }
    return Morphism(a, a, std::move(imgs));
}

Morphism ar_alpha_bar(const Alphabet& a, char letter) {
    if (!a.contains(letter)) throw std::invalid_argument("AR letter outside alphabet");
    std::vector<std::string> imgs;
    for (int i = 0; i < a.size(); ++i) {
        char b = a.letter(i);
        imgs.push_back(b == letter ? std::string(1, letter) : std::string{b, letter});
    }
    return Morphism(a, a, std::move(imgs));
}

Morphism cat_c1() { return ternary({"1", "13", "2"}); }
Morphism cat_c2() { return ternary({"2", "13", "3"}); }

const std::vector<Permutation>& ternary_permutations() {
    static const std::vector<Permutation> perms = [] {
        std::vector<Permutation> v;
        for (const char* s : {"123", "132", "213", "231", "312", "321"}) {
            v.push_back(Permutation::from_images(ternary_alphabet(), s));
        }
        return v;
    }();
    return perms;
}

const Permutation& perm(int index) { return ternary_permutations().at(static_cast<size_t>(index)); }

int perm_index(const Permutation& p) {
    const auto& all = ternary_permutations();
    for (size_t i = 0; i < all.size(); ++i) {
        if (all[i] == p) return static_cast<int>(i);
    }
    throw std::invalid_argument("not a ternary permutation");
}

Permutation perm_by_name(const std::string& images) { return Permutation::from_images(ternary_alphabet(), images); }

namespace {

Morphism parse_atom(const std::string& atom, int k_cap) {
    if (atom.empty()) throw std::invalid_argument("empty atom in morphism expression");
    if (atom == "a") return cat_alpha();
    if (atom == "b") return cat_beta();
    if (atom == "g") return cat_gamma();
    if (atom == "e") return cat_eta();
    if (atom == "c1") return cat_c1();
    if (atom == "c2") return cat_c2();
    if (atom[0] == 'd' || atom[0] == 'z') {
        int k = std::stoi(atom.substr(1));
        if (k > k_cap) throw std::invalid_argument("k exceeds configured cap in atom " + atom);
        return atom[0] == 'd' ? cat_delta(k) : cat_zeta(k);
    }
    if (atom[0] == 'p') {
        return perm_by_name(atom.substr(1)).to_morphism();
    }
    if (atom.rfind("arb", 0) == 0) return ar_alpha_bar(ternary_alphabet(), atom.at(3));
    if (atom.rfind("ar", 0) == 0) return ar_alpha(ternary_alphabet(), atom.at(2));
    throw std::invalid_argument("unknown morphism atom: " + atom);
}

}  // namespace

Morphism parse_morphism_expr(const std::string& expr, int k_cap) {
    std::vector<Morphism> chain;
    size_t start = 0;
    while (start <= expr.size()) {
        size_t dot = expr.find('.', start);
        std::string atom = expr.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
        // trim spaces
        while (!atom.empty() && atom.front() == ' ') atom.erase(atom.begin());
        while (!atom.empty() && atom.back() == ' ') atom.pop_back();
        if (!atom.empty()) chain.push_back(parse_atom(atom, k_cap));
        if (dot == std::string::npos) break;
        start = dot + 1;
    }
    if (chain.empty()) throw std::invalid_argument("empty morphism expression");
    return compose(chain);
}

Morphism morphism_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    std::string dom, cod;
    if (j.contains("domain")) {
        for (const auto& s : j["domain"]) dom += s.get<std::string>();
    }
    if (j.contains("codomain")) {
        for (const auto& s : j["codomain"]) cod += s.get<std::string>();
    }
    std::map<char, std::string> images;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() == "domain" || it.key() == "codomain") continue;
        if (it.key().size() != 1) throw std::invalid_argument("morphism keys must be single letters");
        images[it.key()[0]] = it.value().get<std::string>();
    }
    if (dom.empty()) {
        for (const auto& [a, w] : images) dom += a;
    }
    if (cod.empty()) {
        std::string seen;
        for (const auto& [a, w] : images) {
            for (char c : w) {
                if (seen.find(c) == std::string::npos) seen += c;
            }
        }
        std::sort(seen.begin(), seen.end());
        cod = seen;
    }
    Alphabet domain(dom), codomain(cod);
    std::vector<std::string> imgs;
    for (int i = 0; i < domain.size(); ++i) {
        auto it = images.find(domain.letter(i));
        if (it == images.end()) throw std::invalid_argument("missing image for a domain letter");
        imgs.push_back(it->second);
    }
    return Morphism(std::move(domain), std::move(codomain), std::move(imgs));
}

std::string morphism_to_json(const Morphism& m) {
    nlohmann::json j;
    nlohmann::json dom = nlohmann::json::array(), cod = nlohmann::json::array();
    for (int i = 0; i < m.domain().size(); ++i) dom.push_back(std::string(1, m.domain().letter(i)));
    for (int i = 0; i < m.codomain().size(); ++i) cod.push_back(std::string(1, m.codomain().letter(i)));
    j["domain"] = dom;
    j["codomain"] = cod;
    for (int i = 0; i < m.domain().size(); ++i) j[std::string(1, m.domain().letter(i))] = m.images()[static_cast<size_t>(i)];
    return j.dump();
}

std::string core_name(CoreKind k) {
    switch (k) {
        case CoreKind::Alpha: return "a";
        case CoreKind::Beta: return "b";
        case CoreKind::Gamma: return "g";
        case CoreKind::Delta: return "d";
        case CoreKind::Zeta: return "z";
        case CoreKind::Eta: return "e";
    }
    return "?";
}

Morphism core_morphism(CoreKind kind, int k) {
    switch (kind) {
        case CoreKind::Alpha: return cat_alpha();
        case CoreKind::Beta: return cat_beta();
        case CoreKind::Gamma: return cat_gamma();
        case CoreKind::Delta: return cat_delta(k);
        case CoreKind::Zeta: return cat_zeta(k);
        case CoreKind::Eta: return cat_eta();
    }
    throw std::invalid_argument("bad core kind");
}

bool TernaryLabel::matches(const TernaryLabel& concrete) const {
    if (pre != concrete.pre || kind != concrete.kind || post != concrete.post) return false;
    if (k == kSymbolic) return concrete.k >= 1;
    return k == concrete.k;
}

std::optional<TernaryLabel> decompose_ternary(const Morphism& m) {
    if (m.domain() != ternary_alphabet() || m.codomain() != ternary_alphabet()) return std::nullopt;
    long long total = 0;
    for (const auto& w : m.images()) total += static_cast<long long>(w.size());

    std::vector<TernaryLabel> found;
    auto try_core = [&](CoreKind kind, int k, const Morphism& core) {
        for (int pi = 0; pi < 6; ++pi) {
            for (int pj = 0; pj < 6; ++pj) {
                // candidate: perm(pi) . core . perm(pj)
                bool ok = true;
                for (int a = 0; a < 3 && ok; ++a) {
                    char letter = ternary_alphabet().letter(a);
                    std::string expect = perm(pi).apply_word(core.image(perm(pj).apply(letter)));
                    ok = expect == m.image(letter);
                }
                if (ok) found.push_back({pi, kind, k, pj});
            }
        }
    };

    try_core(CoreKind::Alpha, 0, cat_alpha());
    try_core(CoreKind::Beta, 0, cat_beta());
    try_core(CoreKind::Gamma, 0, cat_gamma());
    try_core(CoreKind::Eta, 0, cat_eta());
    // delta has total image length 2k+6, zeta 2k+5
    if (total >= 8 && total % 2 == 0) try_core(CoreKind::Delta, static_cast<int>((total - 6) / 2), cat_delta(static_cast<int>((total - 6) / 2)));
    if (total >= 7 && total % 2 == 1) try_core(CoreKind::Zeta, static_cast<int>((total - 5) / 2), cat_zeta(static_cast<int>((total - 5) / 2)));

    if (found.empty()) return std::nullopt;
    // alpha admits the symmetry pi.a.pi' == (pi.p132).a.(p132.pi'); prefer a
    // representative with pre == post, then the smallest pair
    std::sort(found.begin(), found.end(), [](const TernaryLabel& x, const TernaryLabel& y) {
        bool xs = x.pre == x.post, ys = y.pre == y.post;
        if (xs != ys) return xs;
        if (x.pre != y.pre) return x.pre < y.pre;
        return x.post < y.post;
    });
    return found.front();
}

Morphism label_morphism(const TernaryLabel& l) {
    if (l.k == kSymbolic) throw std::invalid_argument("cannot instantiate a symbolic label");
    return compose(compose(perm(l.pre).to_morphism(), core_morphism(l.kind, l.k)), perm(l.post).to_morphism());
}

std::string label_expr(const TernaryLabel& l) {
    std::string out;
    if (l.pre != 0) out += "p" + perm(l.pre).images() + ".";
    out += core_name(l.kind);
    if (l.kind == CoreKind::Delta || l.kind == CoreKind::Zeta) out += l.k == kSymbolic ? "<k>" : std::to_string(l.k);
    if (l.post != 0) out += ".p" + perm(l.post).images();
    return out;
}

}  // namespace dendric
