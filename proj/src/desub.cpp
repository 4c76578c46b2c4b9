#include "dendric/desub.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "dendric/catalog.hpp"

namespace dendric {

namespace {

char proper_letter(const Morphism& sigma) {
    Properness p = sigma.properness();
    if (!p.strongly_left) throw std::invalid_argument("morphism must be strongly left proper");
    if (!sigma.is_injective()) throw std::invalid_argument("morphism must be injective");
    return *p.first_letter;
}

std::vector<char> left_extensions(const ExtensionGraph& g) { return {g.left.begin(), g.left.end()}; }
std::vector<char> right_extensions(const ExtensionGraph& g) { return {g.right.begin(), g.right.end()}; }

bool ends_with(const std::string& w, const std::string& suffix) {
    return w.size() >= suffix.size() && w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}
bool starts_with(const std::string& w, const std::string& prefix) {
    return w.size() >= prefix.size() && w.compare(0, prefix.size(), prefix) == 0;
}

}  // namespace

AntecedentResult antecedent(const Morphism& sigma, const FiniteLanguage& l_x, const std::string& u) {
    char ell = proper_letter(sigma);
    if (u.empty()) throw std::invalid_argument("antecedent of the empty word is undefined");

    auto first = u.find(ell);
    if (first == std::string::npos) {
        for (int i = 0; i < sigma.domain().size(); ++i) {
            char b = sigma.domain().letter(i);
            auto pos = sigma.image(b).find(u);
            while (pos != std::string::npos) {
                if (pos > 0) return NonPrefixFactor{b};
                pos = sigma.image(b).find(u, pos + 1);
            }
        }
        throw std::invalid_argument("word is not a factor of the image language: " + u);
    }

    auto last = u.rfind(ell);
    std::string s = u.substr(0, first);
    std::string middle = u.substr(first, last - first);
    std::string p = u.substr(last);

    // middle is a concatenation of full letter images, each starting with ell
    std::string v;
    size_t pos = 0;
    while (pos < middle.size()) {
        size_t next = middle.find(ell, pos + 1);
        if (next == std::string::npos) next = middle.size();
        std::string block = middle.substr(pos, next - pos);
        bool matched = false;
        for (int i = 0; i < sigma.domain().size() && !matched; ++i) {
            char a = sigma.domain().letter(i);
            if (sigma.image(a) == block) {
                v += a;
                matched = true;
            }
        }
        if (!matched) throw std::invalid_argument("word is not in the image language: " + u);
        pos = next;
    }

    if (static_cast<int>(v.size()) > l_x.horizon()) throw std::out_of_range("antecedent exceeds the preimage horizon");
    if (!l_x.contains(v)) throw std::invalid_argument("antecedent is not in the preimage language: " + v);

    // membership in the image language: some bi-extension of v realizes (s, p)
    if (static_cast<int>(v.size()) + 2 <= l_x.horizon()) {
        ExtensionGraph g = extension_graph(l_x, v);
        bool witnessed = false;
        for (const auto& [a, b] : g.edges) {
            if (s.size() >= sigma.image(a).size() || !ends_with(sigma.image(a), s)) continue;
            if (!starts_with(sigma.image(b) + ell, p)) continue;
            witnessed = true;
            break;
        }
        if (!witnessed) throw std::invalid_argument("word is not in the image language: " + u);
    }
    return Antecedent{s, v, p};
}

RadixTree radix_tree(const Morphism& sigma, const std::vector<char>& extensions, bool left_side) {
    char ell = proper_letter(sigma);
    RadixTree t;
    t.left_side = left_side;

    std::set<std::string> nodes;
    std::map<std::string, char> leaves;
    for (char a : extensions) {
        std::string leaf = left_side ? sigma.image(a) : sigma.image(a) + ell;
        leaves[leaf] = a;
        nodes.insert(leaf);
    }
    for (size_t i = 0; i < extensions.size(); ++i) {
        for (size_t j = i + 1; j < extensions.size(); ++j) {
            const std::string& x = sigma.image(extensions[i]);
            const std::string& y = sigma.image(extensions[j]);
            if (left_side) {
                size_t n = 0;
                while (n < x.size() && n < y.size() && x[x.size() - 1 - n] == y[y.size() - 1 - n]) ++n;
                nodes.insert(x.substr(x.size() - n));
            } else {
                size_t n = 0;
                while (n < x.size() && n < y.size() && x[n] == y[n]) ++n;
                nodes.insert(x.substr(0, n));
            }
        }
    }
    if (extensions.size() == 1) nodes.insert(left_side ? std::string() : std::string(1, ell));

    t.nodes.assign(nodes.begin(), nodes.end());
    std::sort(t.nodes.begin(), t.nodes.end(),
              [](const std::string& a, const std::string& b) { return a.size() < b.size() || (a.size() == b.size() && a < b); });
    t.root = t.nodes.front();
    t.leaf_letter = leaves;

    // parent = longest proper affix present in the node set
    for (const auto& n : t.nodes) {
        if (n == t.root) continue;
        std::string best;
        bool found = false;
        for (const auto& candidate : t.nodes) {
            if (candidate.size() >= n.size()) continue;
            bool affix = left_side ? ends_with(n, candidate) : starts_with(n, candidate);
            if (affix && (!found || candidate.size() > best.size())) {
                best = candidate;
                found = true;
            }
        }
        if (!found) throw std::logic_error("radix tree node without parent");
        t.children[best].push_back(n);
    }
    return t;
}

namespace {

// letter of the child step: for the left tree the child extends its parent
// s on the left by one letter, for the right tree on the right
char step_letter(const RadixTree& t, const std::string& parent, const std::string& child) {
    if (t.left_side) return child[child.size() - parent.size() - 1];
    return child[parent.size()];
}

std::map<char, char> phi_map(const Morphism& sigma, const std::vector<char>& ext, const std::string& node, bool left_side) {
    RadixTree t = radix_tree(sigma, ext, left_side);
    if (std::find(t.nodes.begin(), t.nodes.end(), node) == t.nodes.end()) {
        throw std::invalid_argument("node is not in the radix tree: " + node);
    }
    std::map<char, char> out;
    auto it = t.children.find(node);
    if (it == t.children.end()) {
        // node is a leaf: the sole extension letter maps to the step letter
        // relative to its parent; at the root of a singleton tree nothing moves
        return out;
    }
    for (const auto& child : it->second) {
        char mapped = step_letter(t, node, child);
        // letters whose leaf sits in the child's subtree
        std::vector<std::string> stack{child};
        while (!stack.empty()) {
            std::string cur = stack.back();
            stack.pop_back();
            auto leaf = t.leaf_letter.find(cur);
            if (leaf != t.leaf_letter.end()) out[leaf->second] = mapped;
            auto kids = t.children.find(cur);
            if (kids != t.children.end()) stack.insert(stack.end(), kids->second.begin(), kids->second.end());
        }
    }
    return out;
}

}  // namespace

std::map<char, char> phi_minus(const Morphism& sigma, const std::vector<char>& left_ext, const std::string& s) {
    return phi_map(sigma, left_ext, s, true);
}

std::map<char, char> phi_plus(const Morphism& sigma, const std::vector<char>& right_ext, const std::string& p) {
    return phi_map(sigma, right_ext, p, false);
}

ExtensionGraph restricted_extensions(const FiniteLanguage& l_x, const Morphism& sigma, const std::string& v,
                                     const std::string& s, const std::string& p) {
    char ell = proper_letter(sigma);
    ExtensionGraph g = extension_graph(l_x, v);
    RadixTree tl = radix_tree(sigma, left_extensions(g), true);
    RadixTree tr = radix_tree(sigma, right_extensions(g), false);
    if (std::find(tl.nodes.begin(), tl.nodes.end(), s) == tl.nodes.end()) {
        throw std::invalid_argument("s is not a valid suffix restriction: " + s);
    }
    if (std::find(tr.nodes.begin(), tr.nodes.end(), p) == tr.nodes.end()) {
        throw std::invalid_argument("p is not a valid prefix restriction: " + p);
    }
    ExtensionGraph r;
    r.word = g.word;
    for (const auto& [a, b] : g.edges) {
        if (!ends_with(sigma.image(a), s)) continue;
        if (!starts_with(sigma.image(b) + ell, p)) continue;
        r.edges.insert({a, b});
        r.left.insert(a);
        r.right.insert(b);
    }
    return r;
}

std::vector<std::pair<std::string, ExtensionGraph>> extended_bispecial_images(const Morphism& sigma,
                                                                              const FiniteLanguage& l_x,
                                                                              const std::string& v) {
    proper_letter(sigma);
    ExtensionGraph g = extension_graph(l_x, v);
    if (g.left.size() < 2 || g.right.size() < 2) throw std::invalid_argument("word is not bispecial");

    auto lcs = [&](char a, char b) {
        const std::string &x = sigma.image(a), &y = sigma.image(b);
        size_t n = 0;
        while (n < x.size() && n < y.size() && x[x.size() - 1 - n] == y[y.size() - 1 - n]) ++n;
        return x.substr(x.size() - n);
    };
    auto lcp = [&](char a, char b) {
        const std::string &x = sigma.image(a), &y = sigma.image(b);
        size_t n = 0;
        while (n < x.size() && n < y.size() && x[n] == y[n]) ++n;
        return x.substr(0, n);
    };

    std::set<std::pair<std::string, std::string>> seen;
    std::vector<std::pair<std::string, ExtensionGraph>> out;
    for (auto [a1, b1] : g.edges) {
        for (auto [a2, b2] : g.edges) {
            if (a1 == a2 || b1 == b2) continue;
            std::string s = lcs(a1, a2);
            std::string p = lcp(b1, b2);  // both images start with ell, so p is non-empty
            if (!seen.insert({s, p}).second) continue;

            ExtensionGraph restricted = restricted_extensions(l_x, sigma, v, s, p);
            auto pm = phi_minus(sigma, left_extensions(g), s);
            auto pp = phi_plus(sigma, right_extensions(g), p);
            ExtensionGraph img;
            img.word = s + sigma.apply(v) + p;
            for (const auto& [a, b] : restricted.edges) {
                char la = pm.count(a) ? pm.at(a) : 0;
                char rb = pp.count(b) ? pp.at(b) : 0;
                if (!la || !rb) throw std::logic_error("graph morphism undefined on a restricted vertex");
                img.edges.insert({la, rb});
                img.left.insert(la);
                img.right.insert(rb);
            }
            out.emplace_back(img.word, std::move(img));
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return x.first.size() < y.first.size() || (x.first.size() == y.first.size() && x.first < y.first);
    });
    return out;
}

bool is_dendric_preserving_for(const Morphism& sigma, const FiniteLanguage& l_x, const std::string& v) {
    ExtensionGraph g = extension_graph(l_x, v);
    if (!is_tree(g) || g.left.size() < 2 || g.right.size() < 2) {
        throw std::invalid_argument("word must be dendric bispecial");
    }
    RadixTree tl = radix_tree(sigma, left_extensions(g), true);
    RadixTree tr = radix_tree(sigma, right_extensions(g), false);
    for (const auto& [node, kids] : tl.children) {
        (void)kids;
        if (node == tl.root) continue;
        if (!is_tree(restricted_extensions(l_x, sigma, v, node, tr.root))) return false;
    }
    for (const auto& [node, kids] : tr.children) {
        (void)kids;
        if (node == tr.root) continue;
        if (!is_tree(restricted_extensions(l_x, sigma, v, tl.root, node))) return false;
    }
    return true;
}

bool is_universally_dendric_preserving(const Morphism& sigma) {
    proper_letter(sigma);  // validates the preconditions
    auto [t_minus, t_plus] = common_affixes(sigma);
    return t_minus.size() == 1 && t_plus.size() == 1;
}

std::optional<ArFactorization> ar_factorize(const Morphism& sigma) {
    char ell = proper_letter(sigma);
    const Alphabet& a = sigma.domain();
    if (sigma.codomain() != a) throw std::invalid_argument("factorization needs an endomorphism");

    ArFactorization f;
    f.ell = ell;
    Morphism current = sigma;
    for (;;) {
        auto [t_minus, t_plus] = common_affixes(current);
        if (t_minus.size() != 1 || t_plus.size() != 1) return std::nullopt;
        std::string s0 = t_minus.front();
        if (s0.empty()) break;
        char head = s0.front();
        if (head != s0.back() || head == ell) return std::nullopt;
        // peel alpha_bar_head: every letter d != head in an image is followed by head
        std::vector<std::string> peeled;
        for (const auto& img : current.images()) {
            std::string reduced;
            size_t i = 0;
            bool ok = true;
            while (i < img.size()) {
                if (img[i] == head) {
                    reduced += head;
                    ++i;
                } else if (i + 1 < img.size() && img[i + 1] == head) {
                    reduced += img[i];
                    i += 2;
                } else {
                    ok = false;
                    break;
                }
            }
            if (!ok) return std::nullopt;
            peeled.push_back(reduced);
        }
        current = Morphism(a, a, peeled);
        if (!current.properness().strongly_left) return std::nullopt;
        f.bar_letters.push_back(head);
        if (f.bar_letters.size() > 4 * sigma.images()[0].size() + 64) return std::nullopt;  // safety, unreachable
    }

    // current = alpha_ell . pi
    std::string images;
    for (int i = 0; i < a.size(); ++i) {
        const std::string& w = current.images()[static_cast<size_t>(i)];
        if (w == std::string(1, ell)) {
            images += ell;
        } else if (w.size() == 2 && w[0] == ell && w[1] != ell) {
            images += w[1];
        } else {
            return std::nullopt;
        }
    }
    std::set<char> distinct(images.begin(), images.end());
    if (static_cast<int>(distinct.size()) != a.size()) return std::nullopt;
    f.pi = Permutation::from_images(a, images);

    if (ar_compose(a, f) != sigma) return std::nullopt;  // recomposition is the contract
    return f;
}

Morphism ar_compose(const Alphabet& a, const ArFactorization& f) {
    Morphism m = compose(ar_alpha(a, f.ell), f.pi.to_morphism());
    for (size_t i = f.bar_letters.size(); i-- > 0;) m = compose(ar_alpha_bar(a, f.bar_letters[i]), m);
    return m;
}

}  // namespace dendric
