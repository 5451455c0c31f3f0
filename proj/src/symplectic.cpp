#include "surfhom/symplectic.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace surfhom {

IntegerMatrix standard_form(int h)
{
    if (h < 1)
        throw std::invalid_argument("standard_form: genus must be at least 1");
    const auto n = 2 * static_cast<std::size_t>(h);
    IntegerMatrix j(n, n);
    for (std::size_t i = 0; i < n; i += 2) {
        j(i, i + 1) = 1;
        j(i + 1, i) = -1;
    }
    return j;
}

Integer intersection_number(std::span<const Integer> x, std::span<const Integer> y)
{
    if (x.size() != y.size() || x.size() % 2 != 0)
        throw std::invalid_argument("intersection_number: length mismatch");
    Integer s = 0;
    for (std::size_t i = 0; i < x.size(); i += 2)
        s += x[i] * y[i + 1] - x[i + 1] * y[i];
    return s;
}

bool is_symplectic(const IntegerMatrix& m, int h)
{
    const auto n = 2 * static_cast<std::size_t>(h);
    if (h < 1 || m.rows() != n || m.cols() != n)
        throw std::invalid_argument("is_symplectic: matrix is not 2h x 2h");
    IntegerMatrix j = standard_form(h);
    return m.transpose() * j * m == j;
}

SymplecticMatrix::SymplecticMatrix(int h, IntegerMatrix m) : genus_(h), matrix_(std::move(m))
{
    const auto n = 2 * static_cast<std::size_t>(h);
    if (h < 1 || matrix_.rows() != n || matrix_.cols() != n)
        throw ValidationError("matrix_shape", "matrix is not " + std::to_string(n) + "x" + std::to_string(n));
    if (!is_symplectic(matrix_, h))
        throw ValidationError("symplectic", "matrix does not preserve the intersection form");
    // det = +1 follows from symplecticity; kept as an exact sanity check.
    if (determinant(matrix_) != 1)
        throw ValidationError("symplectic", "symplectic matrix with determinant != 1");
}

SymplecticMatrix SymplecticMatrix::identity(int h)
{
    return {h, IntegerMatrix::identity(2 * static_cast<std::size_t>(h)), Trusted{}};
}

SymplecticMatrix SymplecticMatrix::inverse() const
{
    IntegerMatrix j = standard_form(genus_);
    return {genus_, -(j * matrix_.transpose() * j), Trusted{}};
}

SymplecticMatrix SymplecticMatrix::pow(int k) const
{
    SymplecticMatrix base = k < 0 ? inverse() : *this;
    SymplecticMatrix out = identity(genus_);
    for (int i = 0; i < (k < 0 ? -k : k); ++i)
        out = base * out;
    return out;
}

bool SymplecticMatrix::is_identity() const
{
    return matrix_ == IntegerMatrix::identity(matrix_.rows());
}

SymplecticMatrix operator*(const SymplecticMatrix& a, const SymplecticMatrix& b)
{
    if (a.genus_ != b.genus_)
        throw std::invalid_argument("symplectic product: genus mismatch");
    return {a.genus_, a.matrix_ * b.matrix_, SymplecticMatrix::Trusted{}};
}

SymplecticMatrix transvection(std::span<const Integer> c, int sign, int h)
{
    const auto n = 2 * static_cast<std::size_t>(h);
    if (h < 1 || c.size() != n)
        throw std::invalid_argument("transvection: curve class has wrong length");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("transvection: sign must be +1 or -1");
    // Column k is the image of the k-th basis vector e_k:
    // e_k + sign·ω(e_k, c)·c, with ω(a_i, c) = c_{b_i} and ω(b_i, c) = -c_{a_i}.
    IntegerMatrix m = IntegerMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        Integer w = (k % 2 == 0) ? c[k + 1] : Integer(-c[k - 1]);
        if (sgn(w) == 0)
            continue;
        w *= sign;
        for (std::size_t r = 0; r < n; ++r)
            m(r, k) += w * c[r];
    }
    return {h, std::move(m), SymplecticMatrix::Trusted{}};
}

namespace {

bool parse_index(std::string_view digits, int& out)
{
    if (digits.empty() || digits.front() == '0')
        return false;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), out);
    return ec == std::errc{} && ptr == digits.data() + digits.size();
}

} // namespace

IntegerVector named_curve_class(std::string_view name, int h)
{
    int idx = 0;
    if (name.size() < 2 || (name[0] != 'a' && name[0] != 'b' && name[0] != 'c') ||
        !parse_index(name.substr(1), idx))
        throw ValidationError("curve_name", "unknown curve name '" + std::string(name) + "'");
    const char kind = name[0];
    const int limit = kind == 'c' ? h - 1 : h;
    if (idx < 1 || idx > limit)
        throw ValidationError("curve_index", "curve '" + std::string(name) + "' out of range for fiber genus " +
                                                 std::to_string(h));
    IntegerVector v(2 * static_cast<std::size_t>(h));
    const auto i = static_cast<std::size_t>(idx - 1);
    switch (kind) {
    case 'a':
        v[2 * i] = 1;
        break;
    case 'b':
        v[2 * i + 1] = 1;
        break;
    default:
        v[2 * i] = 1;
        v[2 * i + 2] = -1;
        break;
    }
    return v;
}

TwistWord parse_twist_word(std::string_view text)
{
    TwistWord word;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == text.size())
            break;
        std::size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])))
            ++end;
        std::string_view tok = text.substr(pos, end - pos);
        pos = end;

        TwistLetter letter;
        std::string_view body = tok;
        if (body.ends_with("^-1")) {
            letter.exponent = -1;
            body.remove_suffix(3);
        }
        int idx = 0;
        if (body.size() < 3 || body[0] != 'T' || (body[1] != 'a' && body[1] != 'b' && body[1] != 'c') ||
            !parse_index(body.substr(2), idx))
            throw WordSyntaxError("invalid twist letter '" + std::string(tok) + "'");
        letter.curve = std::string(body.substr(1));
        word.push_back(std::move(letter));
    }
    return word;
}

std::string format_twist_word(const TwistWord& word)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& l : word) {
        if (!first)
            os << ' ';
        first = false;
        os << 'T';
        if (const auto* name = std::get_if<std::string>(&l.curve)) {
            os << *name;
        } else {
            os << '(';
            const auto& v = std::get<IntegerVector>(l.curve);
            for (std::size_t i = 0; i < v.size(); ++i)
                os << (i ? "," : "") << v[i];
            os << ')';
        }
        if (l.exponent == -1)
            os << "^-1";
    }
    return os.str();
}

SymplecticMatrix evaluate_word(const TwistWord& word, int h)
{
    SymplecticMatrix out = SymplecticMatrix::identity(h);
    for (const auto& l : word) {
        IntegerVector c;
        if (const auto* name = std::get_if<std::string>(&l.curve)) {
            c = named_curve_class(*name, h);
        } else {
            c = std::get<IntegerVector>(l.curve);
            if (c.size() != 2 * static_cast<std::size_t>(h))
                throw ValidationError("curve_class", "curve class has wrong length");
            Integer d = 0;
            for (const auto& x : c)
                mpz_gcd(d.get_mpz_t(), d.get_mpz_t(), x.get_mpz_t());
            if (d != 1)
                throw ValidationError("curve_class", "curve class is not a primitive integer vector");
        }
        if (l.exponent != 1 && l.exponent != -1)
            throw ValidationError("twist_exponent", "twist exponent must be +1 or -1");
        out = transvection(c, l.exponent, h) * out;
    }
    return out;
}

std::string_view to_string(BaseType b)
{
    return b == BaseType::closed ? "closed" : "one_boundary";
}

SymplecticMatrix relator_image(std::span<const SymplecticMatrix> matrices)
{
    if (matrices.empty() || matrices.size() % 2 != 0)
        throw std::invalid_argument("relator_image: need an even, nonzero number of matrices");
    SymplecticMatrix q = SymplecticMatrix::identity(matrices.front().genus());
    for (std::size_t k = 0; k < matrices.size(); k += 2) {
        const auto& a = matrices[k];
        const auto& b = matrices[k + 1];
        // word a b a^-1 b^-1, leftmost first
        q = b.inverse() * a.inverse() * b * a * q;
    }
    return q;
}

bool check_surface_relation(const HolonomyProblem& p)
{
    if (p.base != BaseType::closed)
        throw std::logic_error("check_surface_relation: one-boundary base has no relator");
    return relator_image(p.matrices).is_identity();
}

namespace {

void check_shape(int h, BaseType base, int g, std::size_t entry_count)
{
    if (h < 2)
        throw ValidationError("fiber_genus", "fiber genus must be at least 2 (hyperbolic fiber), got " +
                                                 std::to_string(h));
    if (g < 1)
        throw ValidationError("base_genus", "base genus must be at least 1, got " + std::to_string(g));
    if (entry_count != 2 * static_cast<std::size_t>(g))
        throw ValidationError("entry_count", "expected 2g = " + std::to_string(2 * g) + " holonomy entries, got " +
                                                 std::to_string(entry_count));
    (void)base;
}

void check_relator(const HolonomyProblem& p)
{
    if (p.base == BaseType::closed && !check_surface_relation(p))
        throw ValidationError("surface_relation", "holonomy does not satisfy the surface-group relation");
}

} // namespace

HolonomyProblem make_problem(int h, BaseType base, int g, std::vector<HolonomyEntry> entries)
{
    check_shape(h, base, g, entries.size());
    HolonomyProblem p{h, base, g, std::move(entries), {}};
    const auto n = p.fiber_dim();
    for (std::size_t i = 0; i < p.entries.size(); ++i) {
        const std::string where = "holonomy entry " + std::to_string(i + 1) + ": ";
        try {
            if (const auto* m = std::get_if<IntegerMatrix>(&p.entries[i].source)) {
                if (m->rows() != n || m->cols() != n)
                    throw ValidationError("matrix_shape", "matrix is not " + std::to_string(n) + "x" +
                                                              std::to_string(n));
                p.matrices.emplace_back(h, *m);
            } else {
                p.matrices.push_back(evaluate_word(parse_twist_word(std::get<std::string>(p.entries[i].source)), h));
            }
        } catch (const ValidationError& e) {
            throw ValidationError(e.invariant(), where + e.what());
        }
    }
    check_relator(p);
    return p;
}

HolonomyProblem make_problem(int h, BaseType base, int g, const std::vector<SymplecticMatrix>& matrices)
{
    std::vector<HolonomyEntry> entries;
    entries.reserve(matrices.size());
    for (const auto& m : matrices) {
        if (m.genus() != h)
            throw ValidationError("matrix_shape", "holonomy matrix genus does not match fiber genus");
        entries.push_back({m.matrix()});
    }
    return make_problem(h, base, g, std::move(entries));
}

} // namespace surfhom
