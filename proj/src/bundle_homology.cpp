#include "surfhom/bundle_homology.hpp"

#include <algorithm>

namespace surfhom {

std::string_view to_string(GeneratorLabel label)
{
    switch (label) {
    case GeneratorLabel::fiber_class:
        return "fiber_class";
    case GeneratorLabel::euler_dual:
        return "euler_dual";
    case GeneratorLabel::base_circle:
        return "base_circle";
    case GeneratorLabel::coinvariant_class:
        return "coinvariant_class";
    case GeneratorLabel::cylinder_class:
        return "cylinder_class";
    case GeneratorLabel::vertical_3mfld:
        return "vertical_3mfld";
    case GeneratorLabel::invariant_3mfld:
        return "invariant_3mfld";
    case GeneratorLabel::fundamental_class:
        return "fundamental_class";
    }
    return "unknown";
}

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass:
        return "pass";
    case Verdict::fail:
        return "fail";
    case Verdict::not_applicable:
        return "not_applicable";
    }
    return "unknown";
}

bool BettiReport::all_pass() const
{
    return std::none_of(validations.begin(), validations.end(),
                        [](const Validation& v) { return v.verdict == Verdict::fail; });
}

CylinderClass CylinderClass::from_flat(std::span<const Rational> flat, std::size_t generator_count)
{
    if (generator_count == 0 || flat.size() % generator_count != 0)
        throw std::invalid_argument("cylinder class: length is not a multiple of the generator count");
    const std::size_t n = flat.size() / generator_count;
    CylinderClass c;
    for (std::size_t i = 0; i < generator_count; ++i)
        c.components.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(i * n),
                                  flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
    return c;
}

bool CylinderClass::satisfies_gluing(const HolonomyProblem& p) const
{
    if (components.size() != p.matrices.size())
        throw std::invalid_argument("cylinder class: wrong number of components");
    RationalVector lhs(p.fiber_dim());
    RationalVector rhs(p.fiber_dim());
    for (std::size_t i = 0; i < components.size(); ++i) {
        auto moved = p.matrices[i].rational() * std::span<const Rational>(components[i]);
        for (std::size_t k = 0; k < lhs.size(); ++k) {
            lhs[k] += components[i][k];
            rhs[k] += moved[k];
        }
    }
    return lhs == rhs;
}

namespace {

RationalMatrix minus_identity(const SymplecticMatrix& m)
{
    return m.rational() - RationalMatrix::identity(m.size());
}

std::vector<RationalMatrix> deviations(const HolonomyProblem& p)
{
    std::vector<RationalMatrix> out;
    out.reserve(p.matrices.size());
    for (const auto& m : p.matrices)
        out.push_back(minus_identity(m));
    return out;
}

RationalVector unit_vector(std::size_t n, std::size_t i)
{
    RationalVector e(n);
    e[i] = 1;
    return e;
}

RationalVector one()
{
    return RationalVector{Rational(1)};
}

void require_closed(const HolonomyProblem& p, const char* what)
{
    if (p.base != BaseType::closed)
        throw std::logic_error(std::string(what) + ": requires a closed base");
}

} // namespace

CoinvariantQuotient coinvariant_quotient(const HolonomyProblem& p)
{
    const std::size_t n = p.fiber_dim();
    std::vector<Subspace> images;
    for (const auto& d : deviations(p))
        images.push_back(image_basis(d));
    Subspace w = subspace_sum(images);

    std::vector<bool> pivot(n, false);
    for (auto c : w.pivot_cols())
        pivot[c] = true;
    std::vector<RationalVector> reps;
    for (std::size_t j = 0; j < n; ++j)
        if (!pivot[j])
            reps.push_back(unit_vector(n, j));
    return {std::move(w), std::move(reps)};
}

Subspace invariant_space(const HolonomyProblem& p)
{
    std::vector<Subspace> kernels;
    for (const auto& d : deviations(p))
        kernels.push_back(kernel_basis(d));
    return subspace_intersection(kernels);
}

Subspace cylinder_space(const HolonomyProblem& p)
{
    auto d = deviations(p);
    return kernel_basis(hstack<Rational>(d));
}

RationalMatrix beta_map(const HolonomyProblem& p)
{
    require_closed(p, "beta_map");
    const std::size_t n = p.fiber_dim();
    const auto id = RationalMatrix::identity(n);
    RationalMatrix q = id;
    std::vector<RationalMatrix> blocks;
    blocks.reserve(p.matrices.size());
    for (std::size_t k = 0; k < p.matrices.size(); k += 2) {
        const RationalMatrix a = p.matrices[k].rational();
        const RationalMatrix b = p.matrices[k + 1].rational();
        const RationalMatrix a_inv = p.matrices[k].inverse().rational();
        const RationalMatrix b_inv = p.matrices[k + 1].inverse().rational();
        RationalMatrix q_next = b_inv * a_inv * b * a * q;
        blocks.push_back((id - a_inv * b * a) * q);
        blocks.push_back(a * q - q_next);
        q = std::move(q_next);
    }
    return vstack<Rational>(blocks);
}

namespace {

BettiReport common_part(const HolonomyProblem& p, CoinvariantQuotient& coinv, Subspace& fix, Subspace& k)
{
    coinv = coinvariant_quotient(p);
    fix = invariant_space(p);
    k = cylinder_space(p);

    BettiReport r{p.base, p.fiber_genus, p.base_genus, {}, {}, {}, {}, {coinv.W, fix, k, std::nullopt}};
    r.dims.W = coinv.W.dim();
    r.dims.Fix = fix.dim();
    r.dims.K = k.dim();
    return r;
}

void push_degree_one(BettiReport& r, const HolonomyProblem& p, const CoinvariantQuotient& coinv)
{
    const std::size_t gens = p.generator_count();
    for (std::size_t i = 0; i < gens; ++i)
        r.generators.push_back({GeneratorLabel::base_circle, 1, unit_vector(gens, i), std::nullopt});
    for (const auto& rep : coinv.representatives)
        r.generators.push_back({GeneratorLabel::coinvariant_class, 1, rep, std::nullopt});
}

void push_vertical(BettiReport& r, const HolonomyProblem& p)
{
    const std::size_t gens = p.generator_count();
    for (std::size_t i = 0; i < gens; ++i)
        r.generators.push_back({GeneratorLabel::vertical_3mfld, 3, unit_vector(gens, i), std::nullopt});
}

} // namespace

BettiReport homology_bounded(const HolonomyProblem& p)
{
    if (p.base != BaseType::one_boundary)
        throw std::logic_error("homology_bounded: requires a one-boundary base");
    CoinvariantQuotient coinv;
    Subspace fix;
    Subspace k;
    BettiReport r = common_part(p, coinv, fix, k);

    const long h = p.fiber_genus;
    const long g = p.base_genus;
    const auto w = static_cast<long>(r.dims.W);
    r.betti = {1, 2 * h - w + 2 * g, 1 + static_cast<long>(r.dims.K), 2 * g, 0};

    push_degree_one(r, p, coinv);
    r.generators.push_back({GeneratorLabel::fiber_class, 2, one(), std::nullopt});
    for (const auto& v : k.basis())
        r.generators.push_back({GeneratorLabel::cylinder_class, 2, v, std::nullopt});
    push_vertical(r, p);

    r.validations = validate_report(r);
    return r;
}

BettiReport homology_closed(const HolonomyProblem& p)
{
    require_closed(p, "homology_closed");
    if (p.fiber_genus < 2)
        throw ValidationError("fiber_genus", "closed-base homology needs a hyperbolic fiber (genus >= 2)");
    CoinvariantQuotient coinv;
    Subspace fix;
    Subspace k;
    BettiReport r = common_part(p, coinv, fix, k);

    RationalMatrix beta = beta_map(p);
    Subspace beta_image = image_basis(beta);
    r.dims.rank_beta = beta_image.dim();
    r.evidence.beta = beta;

    const long h = p.fiber_genus;
    const long g = p.base_genus;
    const auto w = static_cast<long>(r.dims.W);
    r.betti = {1, 2 * h - w + 2 * g, 2 + static_cast<long>(r.dims.K) - static_cast<long>(*r.dims.rank_beta),
               2 * g + static_cast<long>(r.dims.Fix), 1};

    push_degree_one(r, p, coinv);
    r.generators.push_back({GeneratorLabel::euler_dual, 2, one(), Integer(2 - 2 * h)});
    r.generators.push_back({GeneratorLabel::fiber_class, 2, one(), std::nullopt});
    // Reduce modulo Im(B) ∩ K so a (theoretically impossible) Im(B) ⊄ K
    // shows up as a failed verdict rather than an exception.
    Subspace removable = subspace_intersection(beta_image, k);
    for (auto& v : quotient_representatives(k, removable))
        r.generators.push_back({GeneratorLabel::cylinder_class, 2, std::move(v), std::nullopt});
    push_vertical(r, p);
    for (const auto& v : fix.basis())
        r.generators.push_back({GeneratorLabel::invariant_3mfld, 3, v, std::nullopt});
    r.generators.push_back({GeneratorLabel::fundamental_class, 4, one(), std::nullopt});

    r.validations = validate_report(r);
    return r;
}

BettiReport compute_homology(const HolonomyProblem& p)
{
    return p.base == BaseType::closed ? homology_closed(p) : homology_bounded(p);
}

namespace {

std::string betti_text(const std::array<long, 5>& b)
{
    std::string s = "(";
    for (std::size_t i = 0; i < b.size(); ++i)
        s += (i ? "," : "") + std::to_string(b[i]);
    return s + ")";
}

Validation verdict(std::string name, bool ok, std::string detail)
{
    return {std::move(name), ok ? Verdict::pass : Verdict::fail, std::move(detail)};
}

Validation not_applicable(std::string name, std::string detail)
{
    return {std::move(name), Verdict::not_applicable, std::move(detail)};
}

} // namespace

std::vector<Validation> validate_report(const BettiReport& r)
{
    std::vector<Validation> out;
    const long h = r.fiber_genus;
    const long g = r.base_genus;
    const bool closed = r.base == BaseType::closed;

    const long chi = r.betti[0] - r.betti[1] + r.betti[2] - r.betti[3] + r.betti[4];
    const long chi_base = closed ? 2 - 2 * g : 1 - 2 * g;
    const long expected = (2 - 2 * h) * chi_base;
    out.push_back(verdict("euler_characteristic", chi == expected,
                          "alternating sum " + std::to_string(chi) + ", chi(F)*chi(base) = " +
                              std::to_string(expected)));

    if (closed) {
        const bool ok = r.betti[1] == r.betti[3] && r.betti[0] == r.betti[4];
        out.push_back(verdict("poincare_duality", ok, "betti " + betti_text(r.betti)));
    } else {
        out.push_back(not_applicable("poincare_duality", "total space has boundary"));
    }

    const auto sum = r.dims.W + r.dims.Fix;
    out.push_back(verdict("symplectic_duality", sum == static_cast<std::size_t>(2 * h),
                          "dim W + dim Fix = " + std::to_string(sum) + ", 2h = " + std::to_string(2 * h)));

    if (!closed || !r.evidence.beta) {
        out.push_back(not_applicable("beta_kernel", "no beta map for a one-boundary base"));
        out.push_back(not_applicable("beta_image_in_K", "no beta map for a one-boundary base"));
        return out;
    }

    const RationalMatrix& beta = *r.evidence.beta;
    Subspace ker = kernel_basis(beta);
    const bool ker_ok = ker == r.evidence.Fix;
    out.push_back(verdict("beta_kernel", ker_ok,
                          "dim Ker(B) = " + std::to_string(ker.dim()) + ", dim Fix = " +
                              std::to_string(r.evidence.Fix.dim()) + (ker_ok ? ", equal" : ", not equal")));

    std::size_t outside = 0;
    for (std::size_t c = 0; c < beta.cols(); ++c)
        if (!r.evidence.K.contains(beta.column(c)))
            ++outside;
    out.push_back(verdict("beta_image_in_K", outside == 0,
                          std::to_string(beta.cols() - outside) + " of " + std::to_string(beta.cols()) +
                              " columns satisfy the gluing condition"));
    return out;
}

std::array<long, 5> kunneth_betti(int fiber_genus, int base_genus, BaseType base)
{
    const long h = fiber_genus;
    const long g = base_genus;
    // F: (1, 2h, 1). Closed base: (1, 2g, 1). One boundary: (1, 2g, 0).
    const std::array<long, 3> f{1, 2 * h, 1};
    const std::array<long, 3> s{1, 2 * g, base == BaseType::closed ? 1 : 0};
    std::array<long, 5> out{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            out[i + j] += f[i] * s[j];
    return out;
}

} // namespace surfhom
