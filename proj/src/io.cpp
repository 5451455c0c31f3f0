#include "surfhom/io.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <set>

namespace surfhom {

namespace {

using InJson = nlohmann::json;

[[noreturn]] void fail(const std::string& what)
{
    throw ParseError(what);
}

void reject_unknown_keys(const InJson& obj, std::initializer_list<std::string_view> allowed, const std::string& where)
{
    for (const auto& [key, _] : obj.items())
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            fail(where + ": unknown field '" + key + "'");
}

const InJson& require(const InJson& obj, const char* key, const std::string& where)
{
    auto it = obj.find(key);
    if (it == obj.end())
        fail(where + ": missing field '" + key + "'");
    return *it;
}

int small_int(const InJson& j, const std::string& what)
{
    if (!j.is_number_integer())
        fail(what + " must be an integer");
    if (j.is_number_unsigned()) {
        if (j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT_MAX))
            fail(what + " is out of range");
        return static_cast<int>(j.get<std::uint64_t>());
    }
    const auto v = j.get<std::int64_t>();
    if (v < INT_MIN || v > INT_MAX)
        fail(what + " is out of range");
    return static_cast<int>(v);
}

template <typename J>
Integer integer_from(const J& j, const std::string& what)
{
    if (j.is_number_unsigned())
        return Integer(std::to_string(j.template get<std::uint64_t>()));
    if (j.is_number_integer())
        return Integer(std::to_string(j.template get<std::int64_t>()));
    if (j.is_string()) {
        const auto& s = j.template get_ref<const std::string&>();
        std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
        if (s.size() > start &&
            std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                        [](unsigned char c) { return std::isdigit(c); }))
            return Integer(s);
    }
    fail(what + " must be an integer");
}

IntegerMatrix matrix_from(const InJson& j, const std::string& where)
{
    if (!j.is_array())
        fail(where + ": matrix must be an array of rows");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    std::vector<Integer> data;
    for (std::size_t r = 0; r < rows; ++r) {
        const auto& row = j[r];
        if (!row.is_array())
            fail(where + ": matrix row " + std::to_string(r + 1) + " is not an array");
        if (r == 0)
            cols = row.size();
        else if (row.size() != cols)
            fail(where + ": matrix rows have different lengths");
        for (const auto& x : row)
            data.push_back(integer_from(x, where + ": matrix entry"));
    }
    return IntegerMatrix(rows, cols, std::move(data));
}

} // namespace

HolonomyProblem parse_problem(std::string_view text)
{
    InJson doc;
    try {
        doc = InJson::parse(text.begin(), text.end());
    } catch (const InJson::parse_error& e) {
        fail(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        fail("problem file must be a JSON object");
    reject_unknown_keys(doc, {"schema_version", "fiber_genus", "base", "holonomy"}, "problem");

    const int version = small_int(require(doc, "schema_version", "problem"), "schema_version");
    if (version != 1)
        fail("unsupported schema_version " + std::to_string(version) + " (expected 1)");
    const int h = small_int(require(doc, "fiber_genus", "problem"), "fiber_genus");

    const auto& base = require(doc, "base", "problem");
    if (!base.is_object())
        fail("base must be an object");
    reject_unknown_keys(base, {"type", "genus"}, "base");
    const auto& type = require(base, "type", "base");
    if (!type.is_string())
        fail("base.type must be a string");
    BaseType base_type;
    if (type == "closed")
        base_type = BaseType::closed;
    else if (type == "one_boundary")
        base_type = BaseType::one_boundary;
    else
        fail("base.type must be \"closed\" or \"one_boundary\"");
    const int g = small_int(require(base, "genus", "base"), "base.genus");

    const auto& holonomy = require(doc, "holonomy", "problem");
    if (!holonomy.is_array())
        fail("holonomy must be an array");
    std::vector<HolonomyEntry> entries;
    for (std::size_t i = 0; i < holonomy.size(); ++i) {
        const std::string where = "holonomy entry " + std::to_string(i + 1);
        const auto& e = holonomy[i];
        if (!e.is_object() || e.size() != 1)
            fail(where + ": expected an object with exactly one of \"matrix\" or \"word\"");
        reject_unknown_keys(e, {"matrix", "word"}, where);
        if (e.contains("matrix")) {
            entries.push_back({matrix_from(e["matrix"], where)});
        } else {
            if (!e["word"].is_string())
                fail(where + ": word must be a string");
            std::string word = e["word"].get<std::string>();
            try {
                (void)parse_twist_word(word);
            } catch (const WordSyntaxError& err) {
                fail(where + ": " + err.what());
            }
            entries.push_back({std::move(word)});
        }
    }
    return make_problem(h, base_type, g, std::move(entries));
}

Json integer_to_json(const Integer& x)
{
    if (x.fits_slong_p())
        return Json(static_cast<std::int64_t>(x.get_si()));
    return Json(x.get_str());
}

Integer integer_from_json(const Json& j)
{
    return integer_from(j, "value");
}

Json rational_to_json(const Rational& x)
{
    return Json::array({integer_to_json(x.get_num()), integer_to_json(x.get_den())});
}

Rational rational_from_json(const Json& j)
{
    if (!j.is_array() || j.size() != 2)
        fail("rational must be a [numerator, denominator] pair");
    Rational q(integer_from_json(j[0]), integer_from_json(j[1]));
    if (sgn(q.get_den()) == 0)
        fail("rational has zero denominator");
    q.canonicalize();
    return q;
}

Json vector_to_json(std::span<const Rational> v)
{
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(rational_to_json(x));
    return out;
}

Json matrix_to_json(const IntegerMatrix& m)
{
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (const auto& x : m.row(r))
            row.push_back(integer_to_json(x));
        out.push_back(std::move(row));
    }
    return out;
}

Json problem_to_json(const HolonomyProblem& p)
{
    Json holonomy = Json::array();
    for (const auto& e : p.entries) {
        if (const auto* m = std::get_if<IntegerMatrix>(&e.source))
            holonomy.push_back(Json{{"matrix", matrix_to_json(*m)}});
        else
            holonomy.push_back(Json{{"word", std::get<std::string>(e.source)}});
    }
    return Json{{"schema_version", 1},
                {"fiber_genus", p.fiber_genus},
                {"base", Json{{"type", std::string(to_string(p.base))}, {"genus", p.base_genus}}},
                {"holonomy", std::move(holonomy)}};
}

std::string serialize_problem(const HolonomyProblem& p)
{
    return problem_to_json(p).dump(2) + "\n";
}

Json report_to_json(const HolonomyProblem& p, const BettiReport& r)
{
    Json betti = Json::array();
    for (long b : r.betti)
        betti.push_back(b);
    Json dims{{"W", r.dims.W}, {"Fix", r.dims.Fix}, {"K", r.dims.K}, {"rank_beta", nullptr}};
    if (r.dims.rank_beta)
        dims["rank_beta"] = *r.dims.rank_beta;

    Json generators = Json::array();
    for (const auto& g : r.generators) {
        Json item{{"label", std::string(to_string(g.label))},
                  {"degree", g.degree},
                  {"coordinates", vector_to_json(g.coordinates)}};
        if (g.boundary_coefficient)
            item["boundary_coefficient"] = integer_to_json(*g.boundary_coefficient);
        generators.push_back(std::move(item));
    }

    Json validations = Json::array();
    for (const auto& v : r.validations)
        validations.push_back(
            Json{{"name", v.name}, {"verdict", std::string(to_string(v.verdict))}, {"detail", v.detail}});

    return Json{{"problem", problem_to_json(p)},
                {"betti", std::move(betti)},
                {"dims", std::move(dims)},
                {"generators", std::move(generators)},
                {"validations", std::move(validations)}};
}

Json search_to_json(const HolonomyProblem& p, const SearchSummary& s)
{
    Json hits = Json::array();
    for (const auto& hit : s.hits) {
        Json letters = Json::array();
        for (const auto& l : hit.word)
            letters.push_back(Json::array({l.generator, l.exponent}));
        Json basis = Json::array();
        for (const auto& v : hit.fixed_space.basis())
            basis.push_back(vector_to_json(v));
        Json cycle = Json::array();
        for (const auto& v : hit.cycle)
            cycle.push_back(vector_to_json(v));
        Json annotations = Json::array();
        if (hit.product_is_identity)
            annotations.push_back("product_is_identity");
        if (hit.fiber_genus_two_note)
            annotations.push_back("fiber_genus_two_note");
        hits.push_back(Json{{"word", format_search_word(hit.word)},
                            {"letters", std::move(letters)},
                            {"length", hit.word.size()},
                            {"product", matrix_to_json(hit.product.matrix())},
                            {"fixed_space", Json{{"dim", hit.fixed_space.dim()}, {"basis", std::move(basis)}}},
                            {"cycle", std::move(cycle)},
                            {"annotations", std::move(annotations)}});
    }
    return Json{{"problem", problem_to_json(p)},
                {"max_len", s.max_len},
                {"distinct_products", s.distinct_products},
                {"hits", std::move(hits)}};
}

std::string format_rational(const Rational& x)
{
    return x.get_str();
}

} // namespace surfhom
