#include "posetcodes/codes.hpp"

#include <algorithm>
#include <string>

#include "posetcodes/errors.hpp"
#include "posetcodes/kernels.hpp"

namespace posetcodes {

// ---------------------------------------------------------------- flattening

VectorFq flatten(const MatrixFq& a, Flattening order)
{
    VectorFq v(a.field(), a.rows() * a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const std::size_t at = order == Flattening::RowMajor ? i * a.cols() + j : j * a.rows() + i;
            v[at] = a(i, j);
        }
    return v;
}

MatrixFq unflatten(const VectorFq& v, std::size_t rows, std::size_t cols, Flattening order)
{
    if (v.size() != rows * cols)
        throw LengthMismatch("vector of length " + std::to_string(v.size()) + " is not a " + std::to_string(rows) +
                             "x" + std::to_string(cols) + " matrix");
    MatrixFq a(v.field(), rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            a(i, j) = v[order == Flattening::RowMajor ? i * cols + j : j * rows + i];
    return a;
}

// ---------------------------------------------------------------- LinearCode

LinearCode::LinearCode(Poset poset, Subspace code) : poset_(std::move(poset)), code_(std::move(code))
{
    if (code_.ambient_dim() != poset_.size())
        throw LengthMismatch("code of length " + std::to_string(code_.ambient_dim()) + " over a poset of size " +
                             std::to_string(poset_.size()));
}

bool satisfies_hierarchy_bounds(const WeightHierarchy& h, std::size_t n)
{
    const std::size_t k = h.size();
    if (k > n)
        return false;
    for (std::size_t r = 1; r <= k; ++r) {
        if (h[r] < r || h[r] > n - k + r)
            return false;
        if (r > 1 && h[r - 1] >= h[r])
            return false;
    }
    return true;
}

// ---------------------------------------------------------------- weights

ElementSet support_of_vector(const VectorFq& x)
{
    return x.support();
}

std::size_t poset_weight(const Poset& p, const VectorFq& x)
{
    if (x.size() != p.size())
        throw LengthMismatch("vector of length " + std::to_string(x.size()) + " over a poset of size " +
                             std::to_string(p.size()));
    return p.ideal(x.support()).size();
}

std::size_t poset_distance(const Poset& p, const VectorFq& x, const VectorFq& y)
{
    if (x.size() != y.size())
        throw LengthMismatch("vectors of lengths " + std::to_string(x.size()) + " and " + std::to_string(y.size()));
    return poset_weight(p, x - y);
}

ElementSet support_of_code(const LinearCode& c)
{
    return c.code().support();
}

std::size_t generalized_weight(const Poset& p, const Subspace& d)
{
    if (d.ambient_dim() != p.size())
        throw LengthMismatch("subspace of F_q^" + std::to_string(d.ambient_dim()) + " over a poset of size " +
                             std::to_string(p.size()));
    return p.ideal(d.support()).size();
}

// ---------------------------------------------------------------- hierarchy

WeightHierarchy weight_hierarchy(const LinearCode& c, const SearchOptions& opts)
{
    WeightHierarchy h;
    for (std::size_t r = 1; r <= c.dim(); ++r) {
        SubspaceEnumerator subspaces(c.code(), r, opts.budget);
        h.values.push_back(kernels::scan_level(c.poset(), subspaces, false, opts.threads).min_weight);
    }
    return h;
}

WeightHierarchy weight_hierarchy_serial(const LinearCode& c, std::uint64_t budget)
{
    WeightHierarchy h;
    for (std::size_t r = 1; r <= c.dim(); ++r) {
        SubspaceEnumerator subspaces(c.code(), r, budget);
        h.values.push_back(kernels::scan_level_serial(c.poset(), subspaces, false).min_weight);
    }
    return h;
}

Achievers achievers(const LinearCode& c, const SearchOptions& opts)
{
    Achievers out;
    for (std::size_t r = 1; r <= c.dim(); ++r) {
        SubspaceEnumerator subspaces(c.code(), r, opts.budget);
        const auto scan = kernels::scan_level(c.poset(), subspaces, true, opts.threads);
        out.hierarchy.values.push_back(scan.min_weight);
        std::vector<Subspace> level;
        level.reserve(scan.achievers.size());
        for (auto index : scan.achievers)
            level.push_back(subspaces.at(index));
        out.levels.push_back(std::move(level));
    }
    return out;
}

// ---------------------------------------------------------------- flags

namespace {

// Containment graph between consecutive achiever levels, pruned to the
// members that lie on at least one complete flag.
struct FlagLattice {
    Achievers found;
    // below[r][i]: indices j into level r-1 with levels[r-1][j] < levels[r][i]
    std::vector<std::vector<std::vector<std::size_t>>> below;
    std::vector<std::vector<char>> alive;
};

FlagLattice build_lattice(const LinearCode& c, const SearchOptions& opts)
{
    FlagLattice lat;
    lat.found = achievers(c, opts);
    const auto& levels = lat.found.levels;
    const std::size_t k = levels.size();
    lat.below.resize(k);
    lat.alive.resize(k);

    for (std::size_t r = 0; r < k; ++r) {
        lat.below[r].resize(levels[r].size());
        lat.alive[r].assign(levels[r].size(), 0);
        for (std::size_t i = 0; i < levels[r].size(); ++i) {
            if (r == 0) {
                lat.alive[r][i] = 1;
                continue;
            }
            for (std::size_t j = 0; j < levels[r - 1].size(); ++j)
                if (lat.alive[r - 1][j] && levels[r - 1][j].is_subspace_of(levels[r][i]))
                    lat.below[r][i].push_back(j);
            lat.alive[r][i] = lat.below[r][i].empty() ? 0 : 1;
        }
    }
    // Keep only members reachable from the top (C itself).
    std::vector<std::vector<char>> up(k);
    for (std::size_t r = k; r-- > 0;) {
        up[r].assign(levels[r].size(), 0);
        if (r + 1 == k) {
            up[r] = lat.alive[r];
            continue;
        }
        for (std::size_t i = 0; i < levels[r + 1].size(); ++i)
            if (up[r + 1][i])
                for (auto j : lat.below[r + 1][i])
                    up[r][j] = 1;
    }
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t i = 0; i < levels[r].size(); ++i)
            lat.alive[r][i] = lat.alive[r][i] && up[r][i];
    return lat;
}

Flag make_flag(const FlagLattice& lat, const std::vector<std::size_t>& picks)
{
    Flag f;
    for (std::size_t r = 0; r < picks.size(); ++r) {
        f.subspaces.push_back(lat.found.levels[r][picks[r]]);
        f.weights.push_back(lat.found.hierarchy.values[r]);
    }
    return f;
}

// Flags in lexicographic order of (D_1, D_2, ...) positions, up to `limit`.
std::vector<Flag> enumerate_flags(const FlagLattice& lat, std::size_t limit)
{
    std::vector<Flag> out;
    const auto& levels = lat.found.levels;
    const std::size_t k = levels.size();
    if (k == 0)
        return out;
    std::vector<std::size_t> picks;

    auto extend = [&](auto&& self) -> void {
        if (out.size() >= limit)
            return;
        const std::size_t r = picks.size();
        if (r == k) {
            out.push_back(make_flag(lat, picks));
            return;
        }
        for (std::size_t i = 0; i < levels[r].size() && out.size() < limit; ++i) {
            if (!lat.alive[r][i])
                continue;
            if (r > 0) {
                const auto& b = lat.below[r][i];
                if (std::find(b.begin(), b.end(), picks.back()) == b.end())
                    continue;
            }
            picks.push_back(i);
            self(self);
            picks.pop_back();
        }
    };
    extend(extend);
    return out;
}

BigInt count_flags(const FlagLattice& lat)
{
    const auto& levels = lat.found.levels;
    const std::size_t k = levels.size();
    if (k == 0)
        return 1;
    std::vector<BigInt> prev(levels[0].size());
    for (std::size_t i = 0; i < prev.size(); ++i)
        prev[i] = lat.alive[0][i] ? 1 : 0;
    for (std::size_t r = 1; r < k; ++r) {
        std::vector<BigInt> cur(levels[r].size(), 0);
        for (std::size_t i = 0; i < cur.size(); ++i)
            if (lat.alive[r][i])
                for (auto j : lat.below[r][i])
                    cur[i] += prev[j];
        prev = std::move(cur);
    }
    BigInt total = 0;
    for (const auto& v : prev)
        total += v;
    return total;
}

} // namespace

std::optional<Flag> find_maximal_flag_search(const LinearCode& c, const SearchOptions& opts)
{
    if (c.dim() == 0)
        return Flag{};
    const auto lat = build_lattice(c, opts);
    auto flags = enumerate_flags(lat, 1);
    if (flags.empty())
        return std::nullopt;
    return std::move(flags.front());
}

Flag greedy_flag(const LinearCode& c)
{
    const Poset& p = c.poset();
    const ElementSet support = support_of_code(c);
    if (!p.is_total_on(support))
        throw PreconditionViolated("greedy flag needs a totally ordered code support");

    const std::size_t k = c.dim();
    const std::size_t n = c.length();
    if (k == 0)
        return Flag{};

    // Echelonize with columns taken from the top of the chain downward, so each
    // row gets a distinct top element.
    std::vector<int> top_down = p.sorted_chain(support);
    std::reverse(top_down.begin(), top_down.end());
    const Field& f = *c.code().field();
    MatrixFq m = c.code().basis();
    std::vector<int> lead(k, 0);
    std::size_t row = 0;
    for (int element : top_down) {
        if (row == k)
            break;
        const auto col = static_cast<std::size_t>(element - 1);
        std::size_t pick = row;
        while (pick < k && m(pick, col) == 0)
            ++pick;
        if (pick == k)
            continue;
        for (std::size_t t = 0; t < n; ++t)
            std::swap(m(pick, t), m(row, t));
        const Element scale = f.inv(m(row, col));
        for (std::size_t t = 0; t < n; ++t)
            m(row, t) = f.mul(scale, m(row, t));
        for (std::size_t r = row + 1; r < k; ++r) {
            if (m(r, col) == 0)
                continue;
            const Element factor = f.neg(m(r, col));
            for (std::size_t t = 0; t < n; ++t)
                m(r, t) = f.add(m(r, t), f.mul(factor, m(row, t)));
        }
        lead[row] = element;
        ++row;
    }

    // Rows were produced from the highest top element downward.
    std::vector<std::size_t> order(k);
    for (std::size_t i = 0; i < k; ++i)
        order[i] = k - 1 - i;

    Flag flag;
    std::vector<VectorFq> prefix;
    for (std::size_t idx : order) {
        prefix.push_back(m.row(idx));
        flag.subspaces.push_back(span(c.code().field(), n, prefix));
        flag.weights.push_back(p.down_set(lead[idx]).size());
    }
    return flag;
}

std::optional<Flag> find_maximal_flag(const LinearCode& c, const SearchOptions& opts)
{
    if (c.poset().is_total_on(support_of_code(c)))
        return greedy_flag(c);
    return find_maximal_flag_search(c, opts);
}

FlagUniqueness is_flag_unique(const LinearCode& c, const SearchOptions& opts)
{
    FlagUniqueness result;
    if (c.dim() == 0) {
        result.unique = true;
        result.flag_count = 1;
        return result;
    }
    const auto lat = build_lattice(c, opts);
    auto flags = enumerate_flags(lat, 2);
    if (flags.empty())
        throw ChainConditionUnsatisfied("no maximal flag attains the weight hierarchy");
    result.flag_count = count_flags(lat);
    result.first = std::move(flags[0]);
    result.unique = flags.size() == 1;
    if (!result.unique)
        result.second = std::move(flags[1]);
    return result;
}

bool verify_nesting_corollary(const LinearCode& c, const std::vector<Subspace>& candidates)
{
    const Poset& p = c.poset();
    if (!p.is_total_on(support_of_code(c)))
        throw PreconditionViolated("code support is not totally ordered");
    const std::size_t k = c.dim();
    if (candidates.size() != k)
        throw PreconditionViolated("expected " + std::to_string(k) + " candidate subspaces, got " +
                                   std::to_string(candidates.size()));
    // The greedy flag realizes the hierarchy without enumeration.
    const Flag reference = greedy_flag(c);
    for (std::size_t r = 0; r < k; ++r) {
        const Subspace& d = candidates[r];
        if (d.dim() != r + 1)
            throw PreconditionViolated("candidate " + std::to_string(r + 1) + " has dimension " +
                                       std::to_string(d.dim()));
        if (!d.is_subspace_of(c.code()))
            throw PreconditionViolated("candidate " + std::to_string(r + 1) + " is not a subcode");
        if (generalized_weight(p, d) != reference.weights[r])
            throw PreconditionViolated("candidate " + std::to_string(r + 1) + " does not attain d_" +
                                       std::to_string(r + 1));
    }
    for (std::size_t r = 0; r + 1 < k; ++r)
        if (!candidates[r].is_subspace_of(candidates[r + 1]))
            return false;
    return true;
}

std::size_t rt_weight(const MatrixFq& a)
{
    std::size_t total = 0;
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = a.rows(); i-- > 0;)
            if (a(i, j) != 0) {
                total += i + 1;
                break;
            }
    return total;
}

} // namespace posetcodes
