#include "dendric/morphisms.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dendric {

Permutation Permutation::identity(const Alphabet& a) {
    Permutation p;
    p.alphabet_ = a;
    p.images_ = a.symbols();
    return p;
}

Permutation Permutation::from_images(const Alphabet& a, const std::string& images) {
    if (static_cast<int>(images.size()) != a.size()) throw std::invalid_argument("permutation image count mismatch");
    for (char c : images) {
        if (!a.contains(c)) throw std::invalid_argument("permutation image outside alphabet");
    }
    std::set<char> distinct(images.begin(), images.end());
    if (static_cast<int>(distinct.size()) != a.size()) throw std::invalid_argument("permutation must be a bijection");
    Permutation p;
    p.alphabet_ = a;
    p.images_ = images;
    return p;
}

char Permutation::apply(char c) const {
    int r = alphabet_.rank(c);
    if (r < 0) throw std::invalid_argument("letter outside permutation alphabet");
    return images_[static_cast<size_t>(r)];
}

std::string Permutation::apply_word(const std::string& w) const {
    std::string out = w;
    for (auto& c : out) c = apply(c);
    return out;
}

Permutation Permutation::inverse() const {
    std::string inv(images_.size(), '?');
    for (size_t i = 0; i < images_.size(); ++i) {
        inv[static_cast<size_t>(alphabet_.rank(images_[i]))] = alphabet_.letter(static_cast<int>(i));
    }
    return from_images(alphabet_, inv);
}

Permutation Permutation::after(const Permutation& o) const {
    std::string combined(images_.size(), '?');
    for (int i = 0; i < alphabet_.size(); ++i) combined[static_cast<size_t>(i)] = apply(o.images()[static_cast<size_t>(i)]);
    return from_images(alphabet_, combined);
}

Morphism Permutation::to_morphism() const {
    std::vector<std::string> imgs;
    for (char c : images_) imgs.push_back(std::string(1, c));
    return Morphism(alphabet_, alphabet_, std::move(imgs));
}

bool Permutation::is_identity() const { return images_ == alphabet_.symbols(); }

bool IncidenceMatrix::positive() const {
    for (const auto& row : m) {
        for (long long v : row) {
            if (v <= 0) return false;
        }
    }
    return true;
}

long long IncidenceMatrix::det3() const {
    if (m.size() != 3) throw std::invalid_argument("det3 needs a 3x3 matrix");
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

IncidenceMatrix matrix_product(const IncidenceMatrix& a, const IncidenceMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("incidence matrix dimension mismatch");
    IncidenceMatrix r;
    r.rows = a.rows;
    r.cols = b.cols;
    r.m.assign(a.m.size(), std::vector<long long>(b.m.empty() ? 0 : b.m[0].size(), 0));
    for (size_t i = 0; i < a.m.size(); ++i) {
        for (size_t k = 0; k < b.m.size(); ++k) {
            if (a.m[i][k] == 0) continue;
            for (size_t j = 0; j < b.m[k].size(); ++j) r.m[i][j] += a.m[i][k] * b.m[k][j];
        }
    }
    return r;
}

Morphism::Morphism(Alphabet domain, Alphabet codomain, std::vector<std::string> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != domain_.size()) throw std::invalid_argument("one image per domain letter required");
    for (const auto& w : images_) {
        if (w.empty()) throw std::invalid_argument("morphisms must be non-erasing");
        if (!codomain_.contains_word(w)) throw std::invalid_argument("image uses letter outside codomain: " + w);
    }
}

const std::string& Morphism::image(char a) const {
    int r = domain_.rank(a);
    if (r < 0) throw std::invalid_argument(std::string("letter outside morphism domain: ") + a);
    return images_[static_cast<size_t>(r)];
}

std::string Morphism::apply(const std::string& w) const {
    std::string out;
    for (char c : w) out += image(c);
    return out;
}

FiniteLanguage Morphism::apply_language(const FiniteLanguage& l, int horizon) const {
    std::vector<std::string> gens;
    for (const auto& g : l.generators()) gens.push_back(apply(g));
    return FiniteLanguage::from_words(codomain_, horizon, std::move(gens));
}

IncidenceMatrix Morphism::incidence_matrix() const {
    IncidenceMatrix r;
    r.rows = codomain_;
    r.cols = domain_;
    r.m.assign(static_cast<size_t>(codomain_.size()), std::vector<long long>(static_cast<size_t>(domain_.size()), 0));
    for (int a = 0; a < domain_.size(); ++a) {
        for (char b : images_[static_cast<size_t>(a)]) r.m[static_cast<size_t>(codomain_.rank(b))][static_cast<size_t>(a)]++;
    }
    return r;
}

Properness Morphism::properness() const {
    Properness p;
    char first = images_[0].front();
    char last = images_[0].back();
    p.left = std::all_of(images_.begin(), images_.end(), [&](const std::string& w) { return w.front() == first; });
    p.right = std::all_of(images_.begin(), images_.end(), [&](const std::string& w) { return w.back() == last; });
    if (p.left) {
        p.first_letter = first;
        p.strongly_left = std::all_of(images_.begin(), images_.end(), [&](const std::string& w) {
            return std::count(w.begin(), w.end(), first) == 1;
        });
    }
    if (p.right) {
        p.last_letter = last;
        p.strongly_right = std::all_of(images_.begin(), images_.end(), [&](const std::string& w) {
            return std::count(w.begin(), w.end(), last) == 1;
        });
    }
    return p;
}

Morphism Morphism::right_conjugate() const {
    Properness p = properness();
    if (!p.left) throw std::invalid_argument("right conjugate requires a left proper morphism");
    std::vector<std::string> imgs;
    for (const auto& w : images_) imgs.push_back(w.substr(1) + *p.first_letter);
    return Morphism(domain_, codomain_, std::move(imgs));
}

bool Morphism::is_injective() const {
    // injective on words iff letter images are pairwise distinct and form a code
    std::set<std::string> code(images_.begin(), images_.end());
    if (code.size() != images_.size()) return false;
    // Sardinas-Patterson
    auto dangling = [&](const std::set<std::string>& from) {
        std::set<std::string> out;
        for (const auto& c : code) {
            for (const auto& s : from) {
                if (c.size() > s.size() && c.compare(0, s.size(), s) == 0) out.insert(c.substr(s.size()));
                if (s.size() > c.size() && s.compare(0, c.size(), c) == 0) out.insert(s.substr(c.size()));
                if (&from != &code && s == c) out.insert("");
            }
        }
        return out;
    };
    std::set<std::string> current = dangling(code);
    if (current.count("")) return false;
    std::set<std::set<std::string>> seen;
    while (!current.empty() && !seen.count(current)) {
        seen.insert(current);
        current = dangling(current);
        if (current.count("")) return false;
    }
    return true;
}

int Morphism::max_image_length() const {
    size_t m = 0;
    for (const auto& w : images_) m = std::max(m, w.size());
    return static_cast<int>(m);
}

std::string Morphism::describe() const {
    std::string out;
    for (int i = 0; i < domain_.size(); ++i) {
        if (i) out += ", ";
        out += domain_.letter(i);
        out += "->";
        out += images_[static_cast<size_t>(i)];
    }
    return out;
}

Morphism compose(const Morphism& s, const Morphism& t) {
    if (t.codomain() != s.domain()) throw std::invalid_argument("morphism composition alphabet mismatch");
    std::vector<std::string> imgs;
    for (int a = 0; a < t.domain().size(); ++a) imgs.push_back(s.apply(t.images()[static_cast<size_t>(a)]));
    return Morphism(t.domain(), s.codomain(), std::move(imgs));
}

Morphism compose(const std::vector<Morphism>& chain) {
    if (chain.empty()) throw std::invalid_argument("cannot compose an empty chain");
    Morphism acc = chain.front();
    for (size_t i = 1; i < chain.size(); ++i) acc = compose(acc, chain[i]);
    return acc;
}

namespace {
std::string longest_common_suffix(const std::string& a, const std::string& b) {
    size_t n = 0;
    while (n < a.size() && n < b.size() && a[a.size() - 1 - n] == b[b.size() - 1 - n]) ++n;
    return a.substr(a.size() - n);
}
std::string longest_common_prefix(const std::string& a, const std::string& b) {
    size_t n = 0;
    while (n < a.size() && n < b.size() && a[n] == b[n]) ++n;
    return a.substr(0, n);
}
}  // namespace

std::pair<std::vector<std::string>, std::vector<std::string>> common_affixes(const Morphism& s) {
    std::set<std::string> suff, pref;
    const auto& imgs = s.images();
    for (size_t i = 0; i < imgs.size(); ++i) {
        for (size_t j = i + 1; j < imgs.size(); ++j) {
            suff.insert(longest_common_suffix(imgs[i], imgs[j]));
            pref.insert(longest_common_prefix(imgs[i], imgs[j]));
        }
    }
    auto order = [&](std::set<std::string>& in) {
        std::vector<std::string> v(in.begin(), in.end());
        std::sort(v.begin(), v.end(), [&](const std::string& a, const std::string& b) {
            return word_less(s.codomain(), a, b);
        });
        return v;
    };
    return {order(suff), order(pref)};
}

}  // namespace dendric
