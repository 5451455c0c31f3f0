#include "surfhom/commands.hpp"

#include <optional>
#include <sstream>

#include "surfhom/bundle_homology.hpp"
#include "surfhom/io.hpp"

namespace surfhom {

namespace {

struct Loaded {
    std::optional<HolonomyProblem> problem;
    CommandResult failure;
};

Loaded load(std::string_view text)
{
    Loaded l;
    try {
        l.problem = parse_problem(text);
    } catch (const ParseError& e) {
        l.failure = {exit_code::malformed, "", std::string("error: ") + e.what() + "\n"};
    } catch (const ValidationError& e) {
        l.failure = {exit_code::validation, "",
                     "error: validation failed [" + e.invariant() + "]: " + e.what() + "\n"};
    }
    return l;
}

std::string paint(std::string_view text, const char* ansi, bool color)
{
    if (!color)
        return std::string(text);
    return std::string(ansi) + std::string(text) + "\033[0m";
}

std::string verdict_cell(Verdict v, bool color)
{
    switch (v) {
    case Verdict::pass:
        return paint("pass", "\033[32m", color);
    case Verdict::fail:
        return paint("FAIL", "\033[31m", color);
    default:
        return paint("n/a ", "\033[2m", color);
    }
}

std::string vector_text(std::span<const Rational> v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + format_rational(v[i]);
    return s + ")";
}

std::string betti_row(const std::array<long, 5>& b)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < b.size(); ++i)
        os << (i ? " " : "") << b[i];
    return os.str();
}

std::string problem_header(const HolonomyProblem& p)
{
    return "fiber genus " + std::to_string(p.fiber_genus) + ", base " + std::string(to_string(p.base)) +
           " genus " + std::to_string(p.base_genus) + "\n";
}

std::string homology_table(const HolonomyProblem& p, const BettiReport& r, bool color)
{
    std::ostringstream os;
    os << problem_header(p);
    os << "betti (b0..b4): " << betti_row(r.betti) << "\n";
    os << "dims: W=" << r.dims.W << " Fix=" << r.dims.Fix << " K=" << r.dims.K;
    if (r.dims.rank_beta)
        os << " rank_beta=" << *r.dims.rank_beta;
    os << "\n";
    os << "generators:\n";
    for (const auto& g : r.generators) {
        os << "  H" << g.degree << "  " << to_string(g.label) << "  " << vector_text(g.coordinates);
        if (g.boundary_coefficient)
            os << "  boundary coefficient " << g.boundary_coefficient->get_str();
        os << "\n";
    }
    os << "validations:\n";
    for (const auto& v : r.validations)
        os << "  " << verdict_cell(v.verdict, color) << "  " << v.name << ": " << v.detail << "\n";
    return os.str();
}

std::string search_table(const HolonomyProblem& p, const SearchSummary& s)
{
    std::ostringstream os;
    os << problem_header(p);
    os << "max word length " << s.max_len << ", distinct products " << s.distinct_products << ", hits "
       << s.hits.size() << "\n";
    for (const auto& hit : s.hits) {
        os << "  [" << format_search_word(hit.word) << "]  fixed dim " << hit.fixed_space.dim();
        if (hit.product_is_identity)
            os << "  product_is_identity";
        if (hit.fiber_genus_two_note)
            os << "  fiber_genus_two_note";
        os << "\n    cycle:";
        for (const auto& v : hit.cycle)
            os << " " << vector_text(v);
        os << "\n";
    }
    return os.str();
}

} // namespace

CommandResult run_check(std::string_view problem_text)
{
    Loaded l = load(problem_text);
    if (!l.problem)
        return l.failure;
    const auto& p = *l.problem;
    return {exit_code::ok, "ok: " + problem_header(p), ""};
}

CommandResult run_homology(std::string_view problem_text, const RenderOptions& render)
{
    Loaded l = load(problem_text);
    if (!l.problem)
        return l.failure;
    const auto& p = *l.problem;
    const BettiReport r = compute_homology(p);
    CommandResult res;
    res.exit_code = r.all_pass() ? exit_code::ok : exit_code::validation;
    res.out = render.format == OutputFormat::json ? report_to_json(p, r).dump(2) + "\n"
                                                  : homology_table(p, r, render.color);
    if (!r.all_pass())
        res.err = "error: at least one validation failed\n";
    return res;
}

CommandResult run_search(std::string_view problem_text, const SearchOptions& search, const RenderOptions& render)
{
    if (search.max_len < 1)
        return {exit_code::malformed, "", "error: --max-len must be at least 1\n"};
    Loaded l = load(problem_text);
    if (!l.problem)
        return l.failure;
    const auto& p = *l.problem;
    SearchSummary summary;
    summary.max_len = search.max_len;
    try {
        const auto products = enumerate_products(p, search);
        summary.distinct_products = products.size();
        summary.hits = collect_hits(p, products, search.threads);
    } catch (const SearchLimitExceeded& e) {
        return {exit_code::limit, "", std::string("error: ") + e.what() + "\n"};
    }
    CommandResult res;
    res.out = render.format == OutputFormat::json ? search_to_json(p, summary).dump(2) + "\n"
                                                  : search_table(p, summary);
    return res;
}

CommandResult run_oracle(int fiber_genus, int base_genus, BaseType base, const RenderOptions& render)
{
    std::vector<HolonomyEntry> entries(2 * static_cast<std::size_t>(std::max(base_genus, 0)),
                                       HolonomyEntry{std::string()});
    HolonomyProblem p;
    try {
        p = make_problem(fiber_genus, base, base_genus, std::move(entries));
    } catch (const ValidationError& e) {
        return {exit_code::malformed, "", std::string("error: ") + e.what() + "\n"};
    }
    const BettiReport r = compute_homology(p);
    const auto expected = kunneth_betti(fiber_genus, base_genus, base);
    const bool agree = r.betti == expected;
    const bool ok = agree && r.all_pass();

    CommandResult res;
    res.exit_code = ok ? exit_code::ok : exit_code::validation;
    if (render.format == OutputFormat::json) {
        Json engine = Json::array();
        Json kunneth = Json::array();
        for (long b : r.betti)
            engine.push_back(b);
        for (long b : expected)
            kunneth.push_back(b);
        Json validations = Json::array();
        for (const auto& v : r.validations)
            validations.push_back(
                Json{{"name", v.name}, {"verdict", std::string(to_string(v.verdict))}, {"detail", v.detail}});
        res.out = Json{{"fiber_genus", fiber_genus},
                       {"base", Json{{"type", std::string(to_string(base))}, {"genus", base_genus}}},
                       {"engine_betti", std::move(engine)},
                       {"kunneth_betti", std::move(kunneth)},
                       {"agree", agree},
                       {"validations", std::move(validations)}}
                      .dump(2) +
                  "\n";
    } else {
        std::ostringstream os;
        os << problem_header(p);
        os << "engine  " << betti_row(r.betti) << "\n";
        os << "kunneth " << betti_row(expected) << "\n";
        os << (agree ? verdict_cell(Verdict::pass, render.color) : verdict_cell(Verdict::fail, render.color))
           << "  agreement\n";
        res.out = os.str();
    }
    if (!ok)
        res.err = "error: engine disagrees with the Kunneth formula\n";
    return res;
}

} // namespace surfhom
