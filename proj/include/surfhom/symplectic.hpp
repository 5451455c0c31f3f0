#pragma once

// Symplectic data of a surface bundle at the level of H_1 of the fiber.
//
// Basis convention: (a1, b1, a2, b2, ..., ah, bh) with ω(a_i, b_i) = +1, so
// the intersection form is block diagonal with blocks [[0, 1], [-1, 0]].
// A Dehn twist about a curve of class c acts by the transvection
// x ↦ x + sign·ω(x, c)·c, right-handed twist = sign +1.
// Words are read left to right and the leftmost letter acts first, so the
// matrix of "x1 x2 ... xk" is M_xk ··· M_x2 · M_x1.

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "surfhom/linalg.hpp"

namespace surfhom {

/// Raised when input data violates a domain invariant. `invariant` names
/// the violated condition in a stable, machine-readable form.
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string invariant, const std::string& message)
        : std::runtime_error(message), invariant_(std::move(invariant))
    {
    }
    const std::string& invariant() const { return invariant_; }

private:
    std::string invariant_;
};

/// Raised on malformed twist-word text.
class WordSyntaxError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// 2h x 2h block-diagonal form J, J(a_i, b_i) = +1. Throws for h = 0.
IntegerMatrix standard_form(int h);

/// ω(x, y) = xᵀ J y.
Integer intersection_number(std::span<const Integer> x, std::span<const Integer> y);

/// True iff mᵀ J m = J. Throws std::invalid_argument if m is not 2h x 2h.
bool is_symplectic(const IntegerMatrix& m, int h);

/// An integer matrix preserving the intersection form of a genus-h surface.
class SymplecticMatrix {
public:
    /// Validates symplecticity; throws ValidationError otherwise.
    SymplecticMatrix(int h, IntegerMatrix m);
    static SymplecticMatrix identity(int h);

    int genus() const { return genus_; }
    std::size_t size() const { return matrix_.rows(); }
    const IntegerMatrix& matrix() const { return matrix_; }
    RationalMatrix rational() const { return to_rational(matrix_); }

    /// Exact inverse, computed as -J Mᵀ J.
    SymplecticMatrix inverse() const;
    /// Integer power; negative exponents use the inverse.
    SymplecticMatrix pow(int k) const;
    bool is_identity() const;

    friend SymplecticMatrix operator*(const SymplecticMatrix& a, const SymplecticMatrix& b);
    friend bool operator==(const SymplecticMatrix& a, const SymplecticMatrix& b)
    {
        return a.genus_ == b.genus_ && a.matrix_ == b.matrix_;
    }

private:
    struct Trusted {};
    SymplecticMatrix(int h, IntegerMatrix m, Trusted) : genus_(h), matrix_(std::move(m)) {}

    int genus_;
    IntegerMatrix matrix_;

    friend SymplecticMatrix transvection(std::span<const Integer> c, int sign, int h);
};

/// Homology action of a Dehn twist: x ↦ x + sign·ω(x, c)·c.
SymplecticMatrix transvection(std::span<const Integer> c, int sign, int h);

/// Class of a named curve: a_i, b_i are basis vectors; chain curve
/// c_i = a_i - a_{i+1} (1 ≤ i < h).
IntegerVector named_curve_class(std::string_view name, int h);

struct TwistLetter {
    /// A named curve ("a1", "b2", "c1") or an explicit integer class.
    std::variant<std::string, IntegerVector> curve;
    int exponent = 1; ///< +1 or -1

    friend bool operator==(const TwistLetter&, const TwistLetter&) = default;
};

using TwistWord = std::vector<TwistLetter>;

/// Parses whitespace-separated letters `T<curve>` or `T<curve>^-1`, curve
/// one of a<i>, b<i>, c<i>. Range checks against the genus happen at
/// evaluation. Throws WordSyntaxError.
TwistWord parse_twist_word(std::string_view text);
std::string format_twist_word(const TwistWord& word);

/// Product of the letters' transvections, leftmost letter acting first.
/// Throws ValidationError for curves out of range for genus h.
SymplecticMatrix evaluate_word(const TwistWord& word, int h);

enum class BaseType { closed, one_boundary };

std::string_view to_string(BaseType b);

/// One holonomy entry as supplied by the user.
struct HolonomyEntry {
    std::variant<IntegerMatrix, std::string> source; ///< matrix, or twist-word text

    friend bool operator==(const HolonomyEntry&, const HolonomyEntry&) = default;
};

/// Fiber genus h, base Σ_g or Σ_{g,1}, and the 2g holonomy images
/// M_1..M_2g (images of the standard generators of the base's π_1).
struct HolonomyProblem {
    int fiber_genus = 0;
    BaseType base = BaseType::closed;
    int base_genus = 0;
    std::vector<HolonomyEntry> entries;
    std::vector<SymplecticMatrix> matrices; ///< resolved entries, same order

    std::size_t fiber_dim() const { return 2 * static_cast<std::size_t>(fiber_genus); }
    std::size_t generator_count() const { return 2 * static_cast<std::size_t>(base_genus); }
};

/// Resolves entries to matrices and checks every problem invariant: h ≥ 2,
/// g ≥ 1, exactly 2g entries, square 2h x 2h symplectic matrices, and for a
/// closed base the surface-group relation. Throws ValidationError.
HolonomyProblem make_problem(int h, BaseType base, int g, std::vector<HolonomyEntry> entries);
HolonomyProblem make_problem(int h, BaseType base, int g, const std::vector<SymplecticMatrix>& matrices);

/// Matrix of the relator word ∏_{i=1..g} a_{2i-1} a_{2i} a_{2i-1}^-1 a_{2i}^-1
/// under the leftmost-acts-first convention, i.e.
/// [M_2g^-1, M_2g-1^-1] ··· [M_2^-1, M_1^-1].
SymplecticMatrix relator_image(std::span<const SymplecticMatrix> matrices);

/// True iff the relator maps to the identity. Throws std::logic_error for a
/// one-boundary base (its π_1 is free).
bool check_surface_relation(const HolonomyProblem& p);

} // namespace surfhom
