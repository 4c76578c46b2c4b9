#ifndef DENDRIC_MORPHISMS_HPP
#define DENDRIC_MORPHISMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "dendric/words.hpp"

namespace dendric {

class Morphism;

class Permutation {
public:
    Permutation() = default;
    static Permutation identity(const Alphabet& a);
    // images listed in alphabet order: pi_{abc} maps letter(0) -> a, letter(1) -> b, ...
    static Permutation from_images(const Alphabet& a, const std::string& images);

    const Alphabet& alphabet() const { return alphabet_; }
    char apply(char c) const;
    std::string apply_word(const std::string& w) const;
    Permutation inverse() const;
    Permutation after(const Permutation& o) const;  // (*this)(o(x))
    Morphism to_morphism() const;
    const std::string& images() const { return images_; }
    bool is_identity() const;

    bool operator==(const Permutation& o) const { return alphabet_ == o.alphabet_ && images_ == o.images_; }

private:
    Alphabet alphabet_;
    std::string images_;  // images_[rank] = image letter
};

struct Properness {
    bool left = false, right = false, strongly_left = false, strongly_right = false;
    std::optional<char> first_letter, last_letter;
};

struct IncidenceMatrix {
    Alphabet rows;  // codomain
    Alphabet cols;  // domain
    std::vector<std::vector<long long>> m;  // m[row][col] = |sigma(col)|_row

    bool operator==(const IncidenceMatrix& o) const { return rows == o.rows && cols == o.cols && m == o.m; }
    bool positive() const;
    long long det3() const;  // 3x3 only
};

IncidenceMatrix matrix_product(const IncidenceMatrix& a, const IncidenceMatrix& b);

// Non-erasing monoid homomorphism given by letter images.
class Morphism {
public:
    Morphism() = default;
    Morphism(Alphabet domain, Alphabet codomain, std::vector<std::string> images);

    const Alphabet& domain() const { return domain_; }
    const Alphabet& codomain() const { return codomain_; }
    const std::string& image(char a) const;
    const std::vector<std::string>& images() const { return images_; }

    std::string apply(const std::string& w) const;
    FiniteLanguage apply_language(const FiniteLanguage& l, int horizon) const;

    IncidenceMatrix incidence_matrix() const;
    Properness properness() const;
    Morphism right_conjugate() const;  // throws unless left proper
    bool is_injective() const;         // Sardinas-Patterson on the image code

    int max_image_length() const;
    bool operator==(const Morphism& o) const {
        return domain_ == o.domain_ && codomain_ == o.codomain_ && images_ == o.images_;
    }
    bool operator!=(const Morphism& o) const { return !(*this == o); }

    std::string describe() const;  // "1->1, 2->12, 3->13"

private:
    Alphabet domain_, codomain_;
    std::vector<std::string> images_;  // indexed by domain rank
};

Morphism compose(const Morphism& s, const Morphism& t);  // a -> s(t(a))
Morphism compose(const std::vector<Morphism>& chain);    // chain[0] applied last

// longest common suffixes / prefixes over distinct letter pairs (T^-, T^+),
// each sorted by length then lexicographically
std::pair<std::vector<std::string>, std::vector<std::string>> common_affixes(const Morphism& s);

}  // namespace dendric

#endif
