// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "posetcodes/codes.hpp"
#include "posetcodes/counting.hpp"
#include "posetcodes/verify.hpp"

using namespace posetcodes;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Records the first few failures; later ones only flip the flag.
struct Tally {
    Outcome out;
    int failures = 0;

    void expect(bool ok, const std::string& what)
    {
        if (ok)
            return;
        out.pass = false;
        if (++failures <= 3)
            out.detail += (out.detail.empty() ? "" : "; ") + what;
    }
};

template <class T>
std::string str(const std::vector<T>& v)
{
    std::ostringstream s;
    s << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        s << (i ? "," : "") << v[i];
    s << ')';
    return s.str();
}

Outcome example_reproduction()
{
    Tally t;
    const auto code = fixtures::example_code();
    const LinearCode hamming(Poset::antichain(27), code);
    const LinearCode weak(fixtures::weak_3x9(), code);

    const auto h_ham = weight_hierarchy(hamming).values;
    const auto h_weak = weight_hierarchy(weak).values;
    t.expect(h_ham == std::vector<std::size_t>{3, 6, 9}, "antichain hierarchy " + str(h_ham));
    t.expect(h_weak == std::vector<std::size_t>{7, 19, 25}, "weak-order hierarchy " + str(h_weak));
    t.expect(!find_maximal_flag(hamming).has_value(), "antichain flag exists");
    const auto flag = find_maximal_flag(weak);
    t.expect(flag && flag->weights == h_weak, "weak-order flag missing or wrong");
    t.expect(is_flag_unique(weak).unique, "weak-order flag not unique");
    const auto supp = support_of_code(weak);
    t.expect(supp.elements() == std::vector<int>{1, 4, 7, 11, 14, 17, 21, 24, 27}, "support " + str(supp.elements()));
    t.expect(weak.poset().is_total_on(supp), "support not totally ordered");
    if (t.out.pass)
        t.out.detail = "hierarchies " + str(h_ham) + " and " + str(h_weak) + ", unique flag under W";
    return t.out;
}

Outcome singleton_suite()
{
    Tally t;
    verify::Rng rng(1);
    for (int i = 0; i < 1000; ++i) {
        const std::uint32_t q = i % 2 ? 3 : 2;
        const auto inst = verify::random_instance(rng, q, 8);
        const std::size_t n = inst.poset.size(), k = inst.code.dim();
        const auto h = weight_hierarchy(LinearCode(inst.poset, inst.code)).values;
        bool ok = h.size() == k;
        for (std::size_t r = 1; ok && r <= k; ++r) {
            const std::size_t d = h[r - 1];
            ok = d >= r && d <= n - k + r && (r == 1 || d > h[r - 2]) && d >= 1 && d <= n;
        }
        t.expect(ok, "code " + std::to_string(i) + " hierarchy " + str(h) + " n=" + std::to_string(n));
    }
    if (t.out.pass)
        t.out.detail = "1000 codes, 0 failures";
    return t.out;
}

Outcome total_support_suite()
{
    Tally t;
    verify::Rng rng(2);
    for (int i = 0; i < 500; ++i) {
        const std::uint32_t q = i % 2 ? 3 : 2;
        const auto inst = verify::random_total_support_instance(rng, q, 8);
        const LinearCode c(inst.poset, inst.code);
        const std::string id = "code " + std::to_string(i);
        if (!inst.poset.is_total_on(support_of_code(c))) {
            t.expect(false, id + ": support not totally ordered");
            continue;
        }
        const auto flag = find_maximal_flag(c);
        const auto search = find_maximal_flag_search(c);
        t.expect(flag.has_value(), id + ": no flag");
        t.expect(search.has_value() && *search == greedy_flag(c), id + ": greedy and search disagree");
        t.expect(is_flag_unique(c).unique, id + ": flag not unique");
    }
    if (t.out.pass)
        t.out.detail = "500 codes, 0 failures";
    return t.out;
}

Outcome single_chain_exhaustive()
{
    Tally t;
    const auto f2 = Field::get(2);
    std::string detail;
    for (std::size_t n : {3U, 4U}) {
        BigInt expected = 0;
        for (std::size_t j = 1; j <= n; ++j)
            expected += gaussian_binomial(static_cast<long long>(n), static_cast<long long>(j), 2);
        // Cross-check the count by closing every subset of nonzero words.
        const auto full = oracle::closure(*f2, n, [&] {
            std::vector<oracle::Word> gens;
            for (std::size_t i = 0; i < n; ++i) {
                oracle::Word w(n, 0);
                w[i] = 1;
                gens.push_back(w);
            }
            return gens;
        }());
        std::size_t by_closure = 0;
        for (std::size_t r = 1; r <= n; ++r)
            by_closure += oracle::subspaces_of(*f2, n, full, r).size();

        const Poset chain = Poset::chain(n);
        const auto ambient = span(MatrixFq::identity(f2, n));
        std::uint64_t seen = 0, good = 0;
        for (std::size_t r = 1; r <= n; ++r)
            SubspaceEnumerator(ambient, r).for_each([&](std::uint64_t, const Subspace& s) {
                ++seen;
                good += find_maximal_flag(LinearCode(chain, s)).has_value() ? 1 : 0;
                return true;
            });
        t.expect(BigInt(seen) == expected, "n=" + std::to_string(n) + ": enumerated " + std::to_string(seen));
        t.expect(BigInt(by_closure) == expected, "n=" + std::to_string(n) + ": oracle " + std::to_string(by_closure));
        t.expect(good == seen, "n=" + std::to_string(n) + ": " + std::to_string(seen - good) + " fail the condition");
        detail += (detail.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + ": " + std::to_string(good) +
                  "/" + expected.str();
    }
    if (t.out.pass)
        t.out.detail = detail + " satisfy the chain condition";
    return t.out;
}

Outcome census_vs_bound()
{
    Tally t;
    std::string detail;
    const std::vector<std::pair<std::string, Poset>> cases = {
        {"chain(3)", Poset::chain(3)}, {"antichain(3)", Poset::antichain(3)}, {"weak_order(2,2)", Poset::weak_order({2, 2})}};
    for (const auto& [name, p] : cases) {
        const auto part = width_and_min_chain_partition(p).partition;
        const auto bound = chain_condition_lower_bound(part, 2).bound;
        const auto r = census(p, 2, p.size());
        t.expect(BigInt(r.chain_condition_total) >= bound,
                 name + ": census " + std::to_string(r.chain_condition_total) + " < bound " + bound.str());
        if (name == "chain(3)")
            t.expect(r.chain_condition_total == 15 && bound == 15, "chain(3) not 15 = 15");
        detail += (detail.empty() ? "" : ", ") + name + " " + std::to_string(r.chain_condition_total) +
                  " >= " + bound.str();
    }
    if (t.out.pass)
        t.out.detail = detail;
    return t.out;
}

Outcome oracle_equivalences()
{
    Tally t;
    std::mt19937_64 rng(6);
    verify::Rng vrng(6);

    int subspaces = 0;
    while (subspaces < 200) {
        const std::uint32_t q = subspaces % 2 ? 3 : 2;
        const auto inst = verify::random_instance(vrng, q, 8);
        if (inst.code.dim() > 3)
            continue;
        ++subspaces;
        std::vector<oracle::Word> gens;
        for (const auto& row : inst.code.basis().row_vectors())
            gens.emplace_back(row.coords().begin(), row.coords().end());
        const auto all = oracle::closure(*Field::get(q), inst.code.ambient_dim(), gens);
        t.expect(generalized_weight(inst.poset, inst.code) == oracle::union_ideal_size(inst.poset, all),
                 "generalized weight mismatch on subspace " + std::to_string(subspaces));
    }

    for (int i = 0; i < 200; ++i) {
        const std::uint32_t q = i % 2 ? 3 : 2;
        const auto f = Field::get(q);
        const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 4;
        MatrixFq a(f, rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                a(r, c) = rng() % 2 ? static_cast<Element>(rng() % q) : 0;
        const auto v = flatten(a, Flattening::ColumnMajor);
        t.expect(rt_weight(a) == poset_weight(Poset::disjoint_chains(rows, cols), v),
                 "rt weight mismatch on matrix " + std::to_string(i));
    }

    int counts = 0;
    for (std::uint32_t q : {2U, 3U})
        for (std::size_t n = 0; n <= 6; ++n) {
            const auto full = span(MatrixFq::identity(Field::get(q), n));
            for (std::size_t r = 0; r <= n; ++r) {
                std::uint64_t seen = 0;
                SubspaceEnumerator(full, r).for_each([&](std::uint64_t, const Subspace&) {
                    ++seen;
                    return true;
                });
                ++counts;
                t.expect(BigInt(seen) == gaussian_binomial(static_cast<long long>(n), static_cast<long long>(r), q) &&
                             BigInt(seen) == oracle::gaussian_binomial_product(static_cast<unsigned>(n),
                                                                               static_cast<unsigned>(r), q),
                         "count mismatch at n=" + std::to_string(n) + " r=" + std::to_string(r) +
                             " q=" + std::to_string(q));
            }
        }
    if (t.out.pass)
        t.out.detail = "200 subspaces, 200 matrices, " + std::to_string(counts) + " (n, r, q) counts";
    return t.out;
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {1, "example reproduction", example_reproduction},
        {2, "monotonicity and Singleton bounds", singleton_suite},
        {3, "totally ordered support flags", total_support_suite},
        {4, "single-chain exhaustive", single_chain_exhaustive},
        {5, "census vs lower bound", census_vs_bound},
        {6, "oracle equivalences", oracle_equivalences},
    };

    bool all = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %d (%s): %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                    secs);
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
