#ifndef DENDRIC_DESUB_HPP
#define DENDRIC_DESUB_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dendric/extensions.hpp"
#include "dendric/morphisms.hpp"

namespace dendric {

// u = s . sigma(v) . p with s free of the proper letter and p starting with it
struct Antecedent {
    std::string s, v, p;
};

struct NonPrefixFactor {
    char witness;  // u occurs in sigma(witness) away from the prefix
};

using AntecedentResult = std::variant<Antecedent, NonPrefixFactor>;

// Unique desubstitution of u under an injective, strongly left proper sigma.
// l_x is the preimage language; the sigma-image of l_x must contain u.
AntecedentResult antecedent(const Morphism& sigma, const FiniteLanguage& l_x, const std::string& u);

// Radix tree on the suffix- (resp. prefix-) ordered node set T^-_v(sigma)
// union sigma(E^-(v)) (resp. T^+_v(sigma) union sigma(E^+(v)) l).
struct RadixTree {
    bool left_side = true;
    std::string root;
    std::vector<std::string> nodes;                        // root first, then by length
    std::map<std::string, std::vector<std::string>> children;
    std::map<std::string, char> leaf_letter;               // leaf node -> extension letter it encodes
};

RadixTree radix_tree(const Morphism& sigma, const std::vector<char>& extensions, bool left_side);

// The partial maps phi^-_s / phi^+_p: extension letter -> image-side letter.
std::map<char, char> phi_minus(const Morphism& sigma, const std::vector<char>& left_ext, const std::string& s);
std::map<char, char> phi_plus(const Morphism& sigma, const std::vector<char>& right_ext, const std::string& p);

// subgraph of E(v) generated by E_{X,s,p}(v), isolated vertices removed
ExtensionGraph restricted_extensions(const FiniteLanguage& l_x, const Morphism& sigma, const std::string& v,
                                     const std::string& s, const std::string& p);

// every bispecial extended image u = s(a1,a2) sigma(v) p(b1,b2) with its
// extension graph computed through the graph morphisms
std::vector<std::pair<std::string, ExtensionGraph>> extended_bispecial_images(const Morphism& sigma,
                                                                              const FiniteLanguage& l_x,
                                                                              const std::string& v);

bool is_dendric_preserving_for(const Morphism& sigma, const FiniteLanguage& l_x, const std::string& v);
bool is_universally_dendric_preserving(const Morphism& sigma);

struct ArFactorization {
    std::vector<char> bar_letters;  // outermost first
    char ell = 0;
    Permutation pi;
};

// Decomposition alpha_bar_{a1} ... alpha_bar_{an} alpha_ell pi when sigma
// preserves dendricity universally; nullopt otherwise.
std::optional<ArFactorization> ar_factorize(const Morphism& sigma);
Morphism ar_compose(const Alphabet& a, const ArFactorization& f);

}  // namespace dendric

#endif
