#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"

#include "support/random_problems.hpp"
#include "surfhom/commands.hpp"
#include "surfhom/io.hpp"

using namespace surfhom;

namespace {

std::string read_data(const std::string& name)
{
    std::ifstream in(std::string(SURFHOM_TEST_DATA) + "/" + name);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string problem_text(const std::string& holonomy, const std::string& base = R"({"type": "closed", "genus": 1})")
{
    return R"({"schema_version": 1, "fiber_genus": 2, "base": )" + base + R"(, "holonomy": )" + holonomy + "}";
}

bool has_fraction_or_float(const Json& j)
{
    if (j.is_number_float())
        return true;
    if (j.is_string())
        return j.get<std::string>().find('.') != std::string::npos;
    if (!j.is_structured())
        return false;
    for (const auto& x : j)
        if (has_fraction_or_float(x))
            return true;
    return false;
}

} // namespace

TEST_CASE("well-formed problems parse")
{
    auto p = parse_problem(read_data("closed_ta1_ta1.json"));
    CHECK(p.fiber_genus == 2);
    CHECK(p.base == BaseType::closed);
    CHECK(p.base_genus == 1);
    CHECK(p.matrices.size() == 2);
    CHECK_NOTHROW(parse_problem(read_data("bounded_ta1_tb1.json")));
}

TEST_CASE("malformed input is a parse error")
{
    CHECK_THROWS_AS(parse_problem("{"), ParseError);
    CHECK_THROWS_AS(parse_problem("[]"), ParseError);
    CHECK_THROWS_AS(parse_problem(read_data("malformed_unknown_field.json")), ParseError);
    CHECK_THROWS_AS(parse_problem(problem_text(R"([{"word": "Tq1"}, {"word": "Ta1"}])")), ParseError);
    CHECK_THROWS_AS(parse_problem(problem_text(R"([{"word": "Ta1", "matrix": []}, {"word": "Ta1"}])")),
                    ParseError);
    CHECK_THROWS_AS(parse_problem(problem_text(R"([{"matrix": [[1, 0], [0]]}, {"word": "Ta1"}])")), ParseError);
    CHECK_THROWS_AS(parse_problem(problem_text(R"([{"matrix": [[1.5]]}, {"word": "Ta1"}])")), ParseError);
    CHECK_THROWS_AS(parse_problem(problem_text(R"([])", R"({"type": "sphere", "genus": 1})")), ParseError);
    CHECK_THROWS_AS(parse_problem(R"({"schema_version": 2, "fiber_genus": 2,
        "base": {"type": "closed", "genus": 1}, "holonomy": []})"),
                    ParseError);
}

TEST_CASE("well-formed but invalid problems are validation errors")
{
    CHECK_THROWS_AS(parse_problem(read_data("closed_relator_violated.json")), ValidationError);
    CHECK_THROWS_AS(parse_problem(problem_text(R"([{"word": "Ta1"}])")), ValidationError);
    CHECK_THROWS_AS(parse_problem(problem_text(R"([{"word": "Ta3"}, {"word": "Ta1"}])")), ValidationError);
    CHECK_THROWS_AS(
        parse_problem(problem_text(R"([{"matrix": [[2,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]}, {"word": "Ta1"}])")),
        ValidationError);
}

TEST_CASE("serialize then parse gives the same problem")
{
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 30; ++trial) {
        const int h = 2 + static_cast<int>(rng() % 2);
        const int g = 1 + static_cast<int>(rng() % 2);
        std::vector<HolonomyEntry> entries;
        for (int i = 0; i < 2 * g; ++i) {
            if (rng() % 2)
                entries.push_back({testgen::random_word(rng, h, 5)});
            else
                entries.push_back({testgen::random_element(rng, h, 5).matrix()});
        }
        auto p = make_problem(h, BaseType::one_boundary, g, entries);
        auto q = parse_problem(serialize_problem(p));
        CHECK(q.entries == p.entries);
        CHECK(q.matrices == p.matrices);
        CHECK(serialize_problem(q) == serialize_problem(p));
    }
}

TEST_CASE("exact numbers in JSON")
{
    const Integer big("123456789012345678901234567890");
    CHECK(integer_to_json(big).is_string());
    CHECK(integer_from_json(integer_to_json(big)) == big);
    CHECK(integer_to_json(Integer(-7)) == Json(-7));
    CHECK(integer_from_json(Json("-42")) == -42);
    CHECK_THROWS_AS(integer_from_json(Json("4.2")), ParseError);

    const Rational q(-3, 4);
    CHECK(rational_to_json(q) == Json::array({-3, 4}));
    CHECK(rational_from_json(Json::array({6, -8})) == q);
    CHECK_THROWS_AS(rational_from_json(Json::array({1, 0})), ParseError);
    CHECK(format_rational(q) == "-3/4");

    auto p = parse_problem(read_data("closed_ta1_ta1.json"));
    CHECK_FALSE(has_fraction_or_float(report_to_json(p, compute_homology(p))));
}

TEST_CASE("command exit codes")
{
    const RenderOptions json{};
    CHECK(run_check(read_data("closed_ta1_ta1.json")).exit_code == exit_code::ok);
    CHECK(run_check(read_data("closed_relator_violated.json")).exit_code == exit_code::validation);
    CHECK(run_check(read_data("malformed_unknown_field.json")).exit_code == exit_code::malformed);

    auto h = run_homology(read_data("closed_ta1_ta1.json"), json);
    CHECK(h.exit_code == exit_code::ok);
    auto doc = Json::parse(h.out);
    CHECK(doc["betti"] == Json::array({1, 5, 8, 5, 1}));
    CHECK(doc["dims"]["rank_beta"] == 1);

    auto b = Json::parse(run_homology(read_data("bounded_ta1_tb1.json"), json).out);
    CHECK(b["dims"]["rank_beta"].is_null());

    CHECK(run_search(read_data("closed_no_eigenvalue_one.json"), {0, 1000, 1}, json).exit_code ==
          exit_code::malformed);
    CHECK(run_search(read_data("bounded_ta1_tb1.json"), {6, 10, 1}, json).exit_code == exit_code::limit);
    auto s = run_search(read_data("closed_no_eigenvalue_one.json"), {2, 1000, 1}, json);
    CHECK(s.exit_code == exit_code::ok);
    auto sdoc = Json::parse(s.out);
    CHECK(sdoc["distinct_products"] == 5);
    CHECK(sdoc["hits"].size() == 1);

    CHECK(run_oracle(3, 2, BaseType::closed, json).exit_code == exit_code::ok);
    CHECK(run_oracle(1, 2, BaseType::closed, json).exit_code == exit_code::malformed);
}

TEST_CASE("table output colors only on request")
{
    const std::string text = read_data("closed_ta1_ta1.json");
    auto plain = run_homology(text, {OutputFormat::table, false});
    auto color = run_homology(text, {OutputFormat::table, true});
    CHECK(plain.out.find('\033') == std::string::npos);
    CHECK(color.out.find('\033') != std::string::npos);
    CHECK(plain.out.find("betti (b0..b4): 1 5 8 5 1") != std::string::npos);
}
