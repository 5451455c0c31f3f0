#pragma once

// Real (equivalently rational) homology of the total space of a surface
// bundle F -> E -> base, computed from the holonomy images M_1..M_2g.
//
// Base with one boundary component (homotopic to a wedge of 2g circles):
//   b = (1, 2h - dim W + 2g, 1 + dim K, 2g, 0)
// Closed base (bounded piece glued to a trivial bundle over a disc):
//   b = (1, 2h - dim W + 2g, 2 + dim K - rank B, 2g + dim Fix, 1)
// where
//   W   = Σ_i Im(M_i - I)        coinvariant relations in H_1(F)
//   Fix = ∩_i Ker(M_i - I)       simultaneously fixed classes
//   K   = {(α_1..α_2g) : Σ α_i = Σ M_i α_i}   cylinder classes, dim 4gh - dim W
//   B   = the map α ↦ image of α ⊗ [S¹] in the cylinder classes (closed base)

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "surfhom/linalg.hpp"
#include "surfhom/symplectic.hpp"

namespace surfhom {

enum class GeneratorLabel {
    fiber_class,       ///< [F]
    euler_dual,        ///< [N], Poincaré dual of the vertical Euler class
    base_circle,       ///< circle over the i-th base generator
    coinvariant_class, ///< fiber class surviving in the coinvariants
    cylinder_class,    ///< closed-up union of cylinders I_i x α_i
    vertical_3mfld,    ///< fiber carried around the i-th base generator
    invariant_3mfld,   ///< α ⊗ [S¹] for a simultaneously fixed α
    fundamental_class,
};

std::string_view to_string(GeneratorLabel label);

/// One generator of H_degree(E). Coordinates live in:
///   base_circle, vertical_3mfld      Q^{2g}   (unit vector of the generator)
///   coinvariant_class, invariant_3mfld  Q^{2h} (class in H_1(F))
///   cylinder_class                    Q^{4gh}  (α_1, ..., α_2g concatenated)
///   fiber_class, euler_dual, fundamental_class  Q^1 (the single coefficient)
struct Generator {
    GeneratorLabel label;
    int degree;
    RationalVector coordinates;
    /// euler_dual only: ∂[N] = χ(F)·[S¹], recorded as χ(F) = 2 - 2h.
    std::optional<Integer> boundary_coefficient;

    friend bool operator==(const Generator&, const Generator&) = default;
};

enum class Verdict { pass, fail, not_applicable };

std::string_view to_string(Verdict v);

struct Validation {
    std::string name;
    Verdict verdict;
    std::string detail;

    friend bool operator==(const Validation&, const Validation&) = default;
};

struct HomologyDims {
    std::size_t W = 0;
    std::size_t Fix = 0;
    std::size_t K = 0;
    std::optional<std::size_t> rank_beta; ///< closed base only

    friend bool operator==(const HomologyDims&, const HomologyDims&) = default;
};

/// Intermediate objects kept on the report so validation can recheck the
/// theorems independently of the Betti formulas.
struct HomologyEvidence {
    Subspace W;
    Subspace Fix;
    Subspace K;
    std::optional<RationalMatrix> beta;
};

struct BettiReport {
    BaseType base;
    int fiber_genus;
    int base_genus;
    std::array<long, 5> betti{};
    HomologyDims dims;
    std::vector<Generator> generators;
    std::vector<Validation> validations;
    HomologyEvidence evidence;

    bool all_pass() const;
};

/// A cylinder tuple (α_1, ..., α_2g), α_i ∈ H_1(F).
struct CylinderClass {
    std::vector<RationalVector> components;

    static CylinderClass from_flat(std::span<const Rational> flat, std::size_t generator_count);
    /// Σ α_i = Σ M_i α_i
    bool satisfies_gluing(const HolonomyProblem& p) const;
};

struct CoinvariantQuotient {
    Subspace W;
    /// Standard basis vectors at the non-pivot columns of W; they project
    /// to a basis of H_1(F) / W.
    std::vector<RationalVector> representatives;
};

CoinvariantQuotient coinvariant_quotient(const HolonomyProblem& p);
Subspace invariant_space(const HolonomyProblem& p);
Subspace cylinder_space(const HolonomyProblem& p);

/// The (4gh) x (2h) matrix of α ↦ i_2(α ⊗ [S¹]) for a closed base. With
/// Q_0 = I and Q_k = [M_2k^-1, M_2k-1^-1] Q_{k-1}, the block over I_{2k-1}
/// is (I - M_2k-1^-1 M_2k M_2k-1) Q_{k-1} and the block over I_{2k} is
/// M_2k-1 Q_{k-1} - Q_k. Throws std::logic_error for a one-boundary base.
RationalMatrix beta_map(const HolonomyProblem& p);

BettiReport homology_bounded(const HolonomyProblem& p);
BettiReport homology_closed(const HolonomyProblem& p);
/// Dispatches on the base type.
BettiReport compute_homology(const HolonomyProblem& p);

/// Independent consistency checks; failures are verdicts, never errors.
std::vector<Validation> validate_report(const BettiReport& r);

/// Betti vector of F x base by the Künneth formula.
std::array<long, 5> kunneth_betti(int fiber_genus, int base_genus, BaseType base);

} // namespace surfhom
