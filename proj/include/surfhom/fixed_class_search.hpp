#pragma once

// Bounded search for products of holonomy generators with eigenvalue 1.
//
// A product φ = M_{i_k}^{e_k} ··· M_{i_1}^{e_1} fixing a class α gives the
// cycle α, M_{i_1}^{e_1} α, ..., which closes up under φ: a chain of
// cylinders whose two ends carry the same homology class. Such a chain is a
// toroidal-class candidate. The search never claims a torus exists.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "surfhom/linalg.hpp"
#include "surfhom/symplectic.hpp"

namespace surfhom {

struct SearchLetter {
    int generator = 1; ///< 1-based index into M_1..M_2g
    int exponent = 1;  ///< +1 or -1

    friend bool operator==(const SearchLetter&, const SearchLetter&) = default;
    friend auto operator<=>(const SearchLetter& a, const SearchLetter& b)
    {
        // g1 < g1^-1 < g2 < ...
        if (a.generator != b.generator)
            return a.generator <=> b.generator;
        return b.exponent <=> a.exponent;
    }
};

using SearchWord = std::vector<SearchLetter>;

/// "g1 g2^-1"
std::string format_search_word(const SearchWord& w);

struct ProductEntry {
    SearchWord word;
    SymplecticMatrix product;
};

struct SearchOptions {
    std::size_t max_len = 1;
    /// Cap on stored BFS states; exceeding it throws SearchLimitExceeded.
    std::size_t max_states = 1'000'000;
    /// Worker threads for frontier expansion; output does not depend on it.
    unsigned threads = 1;
};

class SearchLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Distinct products of nonempty freely reduced words of length ≤ max_len
/// over {g_i, g_i^-1}, each with its shortest-then-lexicographic witness,
/// in that order.
std::vector<ProductEntry> enumerate_products(const HolonomyProblem& p, const SearchOptions& opts);

struct SearchHit {
    SearchWord word;
    SymplecticMatrix product;
    Subspace fixed_space;
    /// Orbit of the first fixed-space basis vector along the word.
    std::vector<RationalVector> cycle;
    bool product_is_identity = false;
    bool fiber_genus_two_note = false;
};

/// One hit per distinct product P with det(P - I) = 0, in stream order.
std::vector<SearchHit> collect_hits(const HolonomyProblem& p, std::span<const ProductEntry> products,
                                    unsigned threads = 1);
std::vector<SearchHit> find_fixed_classes(const HolonomyProblem& p, const SearchOptions& opts);

/// (v, M_{i_1}^{e_1} v, M_{i_2}^{e_2} M_{i_1}^{e_1} v, ...), one vector per
/// letter. Throws std::invalid_argument if v is not fixed by the product.
std::vector<RationalVector> cycle_from_hit(const HolonomyProblem& p, const SearchHit& hit,
                                           std::span<const Rational> v);

} // namespace surfhom
