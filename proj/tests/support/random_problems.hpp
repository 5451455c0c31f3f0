#pragma once

// Seeded random holonomy tuples built from Dehn twist words.

#include <random>
#include <string>
#include <vector>

#include "surfhom/symplectic.hpp"

namespace testgen {

inline std::string random_word(std::mt19937_64& rng, int h, int max_len)
{
    std::uniform_int_distribution<int> len_dist(1, max_len);
    std::uniform_int_distribution<int> kind_dist(0, h > 1 ? 2 : 1);
    std::uniform_int_distribution<int> sign_dist(0, 1);
    std::string out;
    const int len = len_dist(rng);
    for (int i = 0; i < len; ++i) {
        const int kind = kind_dist(rng);
        const int top = kind == 2 ? h - 1 : h;
        const int index = std::uniform_int_distribution<int>(1, top)(rng);
        if (!out.empty())
            out += ' ';
        out += std::string("T") + "abc"[kind] + std::to_string(index);
        if (sign_dist(rng))
            out += "^-1";
    }
    return out;
}

inline surfhom::SymplecticMatrix random_element(std::mt19937_64& rng, int h, int max_len)
{
    return surfhom::evaluate_word(surfhom::parse_twist_word(random_word(rng, h, max_len)), h);
}

/// Any 2g symplectic matrices work over a one-boundary base.
inline surfhom::HolonomyProblem random_bounded(std::mt19937_64& rng, int h, int g, int max_len = 8)
{
    std::vector<surfhom::SymplecticMatrix> ms;
    for (int i = 0; i < 2 * g; ++i)
        ms.push_back(random_element(rng, h, max_len));
    return surfhom::make_problem(h, surfhom::BaseType::one_boundary, g, ms);
}

/// Closed base: each pair commutes (M_{2i} is a power of M_{2i-1}), so every
/// commutator in the relator is trivial.
inline surfhom::HolonomyProblem random_closed(std::mt19937_64& rng, int h, int g, int max_len = 8)
{
    std::uniform_int_distribution<int> power(-2, 2);
    std::vector<surfhom::SymplecticMatrix> ms;
    for (int i = 0; i < g; ++i) {
        auto m = random_element(rng, h, max_len);
        ms.push_back(m);
        ms.push_back(m.pow(power(rng)));
    }
    return surfhom::make_problem(h, surfhom::BaseType::closed, g, ms);
}

/// A genus-two-base tuple whose pairs do not commute: given A1, B1 choose
/// D = [B1^-1, A1^-1] and A2 = D B1 D^-1, B2 = D A1 D^-1.
inline std::vector<surfhom::SymplecticMatrix> noncommuting_genus_two(const surfhom::SymplecticMatrix& a1,
                                                                      const surfhom::SymplecticMatrix& b1)
{
    const auto d = b1.inverse() * a1.inverse() * b1 * a1;
    return {a1, b1, d * b1 * d.inverse(), d * a1 * d.inverse()};
}

inline surfhom::SymplecticMatrix random_conjugator(std::mt19937_64& rng, int h)
{
    return random_element(rng, h, 8);
}

} // namespace testgen
