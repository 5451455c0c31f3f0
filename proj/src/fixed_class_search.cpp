#include "surfhom/fixed_class_search.hpp"

#include <algorithm>
#include <optional>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace surfhom {

std::string format_search_word(const SearchWord& w)
{
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += ' ';
        s += 'g' + std::to_string(w[i].generator);
        if (w[i].exponent == -1)
            s += "^-1";
    }
    return s;
}

namespace {

// Runs fn(i) for i in [0, n). Each index is written by exactly one worker,
// so callers collect results into pre-sized vectors.
template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn fn)
{
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(threads, n);
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers)
                fn(i);
        });
}

struct Alphabet {
    std::vector<SearchLetter> letters;
    std::vector<SymplecticMatrix> matrices;

    explicit Alphabet(const HolonomyProblem& p)
    {
        for (std::size_t i = 0; i < p.matrices.size(); ++i) {
            letters.push_back({static_cast<int>(i + 1), 1});
            matrices.push_back(p.matrices[i]);
            letters.push_back({static_cast<int>(i + 1), -1});
            matrices.push_back(p.matrices[i].inverse());
        }
    }
    std::size_t size() const { return letters.size(); }
    static std::size_t inverse_of(std::size_t letter) { return letter ^ 1U; }
};

constexpr std::size_t no_letter = static_cast<std::size_t>(-1);

struct State {
    std::size_t product_id;
    std::size_t last;
    SearchWord word;
};

} // namespace

std::vector<ProductEntry> enumerate_products(const HolonomyProblem& p, const SearchOptions& opts)
{
    if (opts.max_len < 1)
        throw std::invalid_argument("enumerate_products: max_len must be at least 1");
    const Alphabet alphabet(p);
    const std::size_t letters = alphabet.size();

    std::vector<ProductEntry> products;
    std::unordered_map<IntegerMatrix, std::size_t, IntegerMatrixHash> index;
    // Words with equal product and equal last letter have identical sets of
    // reduced extensions, so BFS states are keyed on that pair.
    std::unordered_set<std::size_t> seen_states;

    const SymplecticMatrix identity = SymplecticMatrix::identity(p.fiber_genus);
    std::vector<State> frontier{{no_letter, no_letter, {}}};

    for (std::size_t level = 1; level <= opts.max_len && !frontier.empty(); ++level) {
        std::vector<std::pair<std::size_t, std::size_t>> moves; // (frontier slot, letter)
        for (std::size_t s = 0; s < frontier.size(); ++s)
            for (std::size_t x = 0; x < letters; ++x)
                if (frontier[s].last == no_letter || x != Alphabet::inverse_of(frontier[s].last))
                    moves.emplace_back(s, x);

        std::vector<std::optional<SymplecticMatrix>> results(moves.size());
        parallel_for(moves.size(), opts.threads, [&](std::size_t i) {
            const State& st = frontier[moves[i].first];
            const SymplecticMatrix& from = st.product_id == no_letter ? identity : products[st.product_id].product;
            results[i] = alphabet.matrices[moves[i].second] * from;
        });

        std::vector<State> next;
        for (std::size_t i = 0; i < moves.size(); ++i) {
            const auto [slot, x] = moves[i];
            SymplecticMatrix& prod = *results[i];
            auto it = index.find(prod.matrix());
            std::size_t id;
            bool fresh = it == index.end();
            if (fresh) {
                id = products.size();
                SearchWord w = frontier[slot].word;
                w.push_back(alphabet.letters[x]);
                index.emplace(prod.matrix(), id);
                products.push_back({std::move(w), std::move(prod)});
            } else {
                id = it->second;
            }
            if (!seen_states.insert(id * letters + x).second)
                continue;
            if (seen_states.size() > opts.max_states)
                throw SearchLimitExceeded("search exceeded the state limit of " + std::to_string(opts.max_states) +
                                          " at word length " + std::to_string(level));
            if (level < opts.max_len) {
                SearchWord w = frontier[slot].word;
                w.push_back(alphabet.letters[x]);
                next.push_back({id, x, std::move(w)});
            }
        }
        frontier = std::move(next);
    }
    return products;
}

std::vector<RationalVector> cycle_from_hit(const HolonomyProblem& p, const SearchHit& hit,
                                           std::span<const Rational> v)
{
    const auto product = hit.product.rational();
    if (v.size() != product.cols())
        throw std::invalid_argument("cycle_from_hit: vector length mismatch");
    auto image = product * v;
    if (!std::equal(image.begin(), image.end(), v.begin(), v.end()))
        throw std::invalid_argument("cycle_from_hit: vector is not fixed by the product");

    std::vector<RationalVector> cycle;
    RationalVector current(v.begin(), v.end());
    for (const auto& letter : hit.word) {
        cycle.push_back(current);
        const auto& m = p.matrices.at(static_cast<std::size_t>(letter.generator - 1));
        const auto step = (letter.exponent == 1 ? m : m.inverse()).rational();
        current = step * std::span<const Rational>(current);
    }
    return cycle;
}

std::vector<SearchHit> collect_hits(const HolonomyProblem& p, std::span<const ProductEntry> products,
                                    unsigned threads)
{
    const auto n = p.fiber_dim();
    const auto id = IntegerMatrix::identity(n);

    std::vector<std::optional<SearchHit>> slots(products.size());
    parallel_for(products.size(), threads, [&](std::size_t i) {
        const auto& entry = products[i];
        const IntegerMatrix shifted = entry.product.matrix() - id;
        if (determinant(shifted) != 0)
            return;
        SearchHit hit{entry.word, entry.product, kernel_basis(to_rational(shifted)), {}, false, false};
        hit.product_is_identity = entry.product.is_identity();
        hit.fiber_genus_two_note = p.fiber_genus == 2;
        hit.cycle = cycle_from_hit(p, hit, hit.fixed_space.basis().front());
        slots[i] = std::move(hit);
    });

    std::vector<SearchHit> hits;
    for (auto& s : slots)
        if (s)
            hits.push_back(std::move(*s));
    return hits;
}

std::vector<SearchHit> find_fixed_classes(const HolonomyProblem& p, const SearchOptions& opts)
{
    const auto products = enumerate_products(p, opts);
    return collect_hits(p, products, opts.threads);
}

} // namespace surfhom
