#include "posetcodes/verify.hpp"

#include <algorithm>
#include <sstream>

#include "posetcodes/errors.hpp"

namespace posetcodes::verify {

namespace {

constexpr std::uint64_t brute_force_limit = 4096;

std::string show(const std::vector<std::size_t>& v)
{
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        out << (i ? "," : "") << v[i];
    out << ')';
    return out.str();
}

std::uint64_t codeword_count(const Subspace& s)
{
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        total *= s.field()->order();
        if (total > brute_force_limit * 16)
            break;
    }
    return total;
}

// |union over nonzero x in D of <supp x>| by visiting every codeword.
std::size_t codeword_union_weight(const Poset& p, const Subspace& d)
{
    IdealSet acc(p.size());
    for_each_nonzero_codeword(d, [&](const VectorFq& x) {
        acc |= p.ideal(x.support());
        return true;
    });
    return acc.size();
}

// Wei hierarchy: min over r-dim D of |union of supports|, with every
// codeword of D visited.
std::vector<std::size_t> brute_force_wei_hierarchy(const Subspace& code)
{
    std::vector<std::size_t> out;
    for (std::size_t r = 1; r <= code.dim(); ++r) {
        std::size_t best = code.ambient_dim() + 1;
        SubspaceEnumerator(code, r).for_each([&](std::uint64_t, const Subspace& d) {
            ElementSet acc(code.ambient_dim());
            for_each_nonzero_codeword(d, [&](const VectorFq& x) {
                acc |= x.support();
                return true;
            });
            best = std::min(best, acc.size());
            return true;
        });
        out.push_back(best);
    }
    return out;
}

} // namespace

Report verify_instance(const Instance& inst, const SearchOptions& opts)
{
    Report report;
    const Poset& p = inst.poset;
    const LinearCode code(p, inst.code);
    const std::size_t n = code.length();
    const std::size_t k = code.dim();
    const bool small = codeword_count(inst.code) <= brute_force_limit;

    auto fail = [&](const std::string& property, const std::string& detail) {
        report.failures.push_back({property, detail});
    };

    const WeightHierarchy h = weight_hierarchy(code, opts);

    report.checked.push_back("hierarchy_bounds");
    if (!satisfies_hierarchy_bounds(h, n) || (k > 0 && h[1] < 1))
        fail("hierarchy_bounds", "hierarchy " + show(h.values) + " with n=" + std::to_string(n));

    report.checked.push_back("kernel_agreement");
    if (const auto serial = weight_hierarchy_serial(code, opts.budget); !(serial == h))
        fail("kernel_agreement", "parallel " + show(h.values) + " vs serial " + show(serial.values));

    if (inst.expected_hierarchy) {
        report.checked.push_back("expected_hierarchy");
        if (*inst.expected_hierarchy != h.values)
            fail("expected_hierarchy", "computed " + show(h.values) + ", expected " + show(*inst.expected_hierarchy));
    }

    report.checked.push_back("scalar_invariance");
    for (const auto& row : inst.code.basis().row_vectors()) {
        const std::size_t w = poset_weight(p, row);
        for (Element a = 1; a < row.field()->order(); ++a)
            if (poset_weight(p, row.scaled(a)) != w)
                fail("scalar_invariance", "scaling by " + std::to_string(a) + " changes the weight");
    }

    if (small) {
        report.checked.push_back("ideal_union");
        for (std::size_t r = 1; r <= std::min<std::size_t>(k, 3); ++r)
            SubspaceEnumerator(inst.code, r, opts.budget).for_each([&](std::uint64_t i, const Subspace& d) {
                if (generalized_weight(p, d) != codeword_union_weight(p, d)) {
                    fail("ideal_union", "subspace #" + std::to_string(i) + " of dimension " + std::to_string(r));
                    return false;
                }
                return i < 255;
            });

        report.checked.push_back("antichain_reduction");
        const Poset flat = Poset::antichain(n);
        const auto wei = brute_force_wei_hierarchy(inst.code);
        const auto anti = weight_hierarchy(LinearCode(flat, inst.code), opts);
        if (anti.values != wei)
            fail("antichain_reduction", "antichain hierarchy " + show(anti.values) + " vs Wei " + show(wei));
        for_each_nonzero_codeword(inst.code, [&](const VectorFq& x) {
            if (poset_weight(flat, x) != x.hamming_weight()) {
                fail("antichain_reduction", "antichain weight differs from Hamming weight");
                return false;
            }
            return true;
        });
    }

    report.checked.push_back("flag_validity");
    const auto flag = find_maximal_flag_search(code, opts);
    if (flag) {
        bool ok = flag->subspaces.size() == k && (k == 0 || flag->subspaces.back() == inst.code);
        for (std::size_t r = 0; ok && r < k; ++r) {
            ok = flag->subspaces[r].dim() == r + 1 && generalized_weight(p, flag->subspaces[r]) == h.values[r] &&
                 flag->weights[r] == h.values[r];
            if (ok && r + 1 < k)
                ok = flag->subspaces[r].is_subspace_of(flag->subspaces[r + 1]);
        }
        if (!ok)
            fail("flag_validity", "search returned a flag that is not a maximal flag attaining " + show(h.values));
    }

    if (p.is_total_on(support_of_code(code))) {
        report.checked.push_back("total_order_flag");
        if (!flag) {
            fail("total_order_flag", "totally ordered support but no maximal flag");
        } else {
            const Flag greedy = greedy_flag(code);
            if (!(greedy == *flag))
                fail("total_order_flag", "greedy flag differs from search flag");
            if (!is_flag_unique(code, opts).unique)
                fail("total_order_flag", "totally ordered support but the maximal flag is not unique");
        }
    }

    if (inst.rt_shape && small) {
        report.checked.push_back("rt_equivalence");
        const auto [rows, cols] = *inst.rt_shape;
        for_each_nonzero_codeword(inst.code, [&](const VectorFq& x) {
            const MatrixFq a = unflatten(x, rows, cols, Flattening::ColumnMajor);
            if (rt_weight(a) != poset_weight(p, x)) {
                fail("rt_equivalence", "rt_weight " + std::to_string(rt_weight(a)) + " vs poset weight " +
                                           std::to_string(poset_weight(p, x)));
                return false;
            }
            return true;
        });
    }
    return report;
}

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi)
{
    return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

namespace {

struct RandomPoset {
    Poset poset;
    nlohmann::ordered_json json;
    std::optional<std::pair<std::size_t, std::size_t>> rt_shape;
};

RandomPoset random_poset(Rng& rng, std::size_t max_n)
{
    const std::size_t n = uniform(rng, 1, max_n);
    switch (uniform(rng, 0, 3)) {
    case 0:
        return {Poset::chain(n), {{"chain", n}}, std::make_pair(n, std::size_t{1})};
    case 1:
        return {Poset::antichain(n), {{"antichain", n}}, std::make_pair(std::size_t{1}, n)};
    case 2: {
        std::vector<std::size_t> blocks;
        for (std::size_t left = n; left > 0;) {
            blocks.push_back(uniform(rng, 1, left));
            left -= blocks.back();
        }
        return {Poset::weak_order(blocks), {{"weak_order", blocks}}, std::nullopt};
    }
    default: {
        std::vector<std::pair<int, int>> covers;
        nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
        for (std::size_t a = 1; a <= n; ++a)
            for (std::size_t b = a + 1; b <= n; ++b)
                if (uniform(rng, 0, 9) < 3) {
                    covers.emplace_back(static_cast<int>(a), static_cast<int>(b));
                    pairs.push_back({a, b});
                }
        return {Poset::from_cover_relations(n, covers), {{"n", n}, {"covers", pairs}}, std::nullopt};
    }
    }
}

Element random_element(Rng& rng, std::uint32_t q, bool nonzero)
{
    return static_cast<Element>(uniform(rng, nonzero ? 1 : 0, q - 1));
}

} // namespace

std::vector<int> random_maximal_chain(Rng& rng, const Poset& p)
{
    const int n = static_cast<int>(p.size());
    std::vector<int> minimal;
    for (int x = 1; x <= n; ++x)
        if (p.down_set(x).size() == 1)
            minimal.push_back(x);
    std::vector<int> chain{minimal[uniform(rng, 0, minimal.size() - 1)]};
    while (true) {
        const int top = chain.back();
        std::vector<int> covers;
        for (int y = 1; y <= n; ++y) {
            if (!p.less(top, y))
                continue;
            // y covers top iff nothing lies strictly between them.
            bool between = false;
            for (int z : p.down_set(y).elements())
                if (z != y && p.less(top, z)) {
                    between = true;
                    break;
                }
            if (!between)
                covers.push_back(y);
        }
        if (covers.empty())
            return chain;
        chain.push_back(covers[uniform(rng, 0, covers.size() - 1)]);
    }
}

Instance random_instance(Rng& rng, std::uint32_t q, std::size_t max_n)
{
    auto rp = random_poset(rng, max_n);
    const std::size_t n = rp.poset.size();
    const std::size_t k = uniform(rng, 1, std::min<std::size_t>(4, n));
    const FieldPtr field = Field::get(q);
    std::vector<VectorFq> rows;
    for (std::size_t i = 0; i < k; ++i) {
        VectorFq v(field, n);
        for (std::size_t j = 0; j < n; ++j)
            v[j] = random_element(rng, q, false);
        rows.push_back(std::move(v));
    }
    return {std::move(rp.poset), std::move(rp.json), span(field, n, rows), rp.rt_shape, std::nullopt};
}

Instance random_total_support_instance(Rng& rng, std::uint32_t q, std::size_t max_n)
{
    auto rp = random_poset(rng, max_n);
    const std::size_t n = rp.poset.size();
    const auto chain = random_maximal_chain(rng, rp.poset);
    const std::size_t k = uniform(rng, 1, std::min<std::size_t>(4, chain.size()));
    const FieldPtr field = Field::get(q);

    while (true) {
        std::vector<VectorFq> rows;
        for (std::size_t i = 0; i < k; ++i) {
            VectorFq v(field, n);
            for (int e : chain)
                v[static_cast<std::size_t>(e - 1)] = random_element(rng, q, false);
            rows.push_back(std::move(v));
        }
        Subspace code = span(field, n, rows);
        if (code.dim() > 0)
            return {std::move(rp.poset), std::move(rp.json), std::move(code), rp.rt_shape, std::nullopt};
    }
}

} // namespace posetcodes::verify
