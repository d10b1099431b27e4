#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "posetcodes/linalg.hpp"
#include "posetcodes/poset.hpp"

namespace posetcodes {

/// How an n x m matrix is read as a vector of length n*m. Row-major reads
/// a_11, a_12, ..., a_1m, a_21, ...; column-major reads column 1 top to bottom
/// first, which pairs column j with chain j of disjoint_chains(n, m).
enum class Flattening { RowMajor, ColumnMajor };

VectorFq flatten(const MatrixFq& a, Flattening order);
MatrixFq unflatten(const VectorFq& v, std::size_t rows, std::size_t cols, Flattening order);

/// A linear code C <= F_q^n together with the poset that defines its metric.
class LinearCode {
public:
    /// Throws LengthMismatch if the code's length differs from |P|.
    LinearCode(Poset poset, Subspace code);

    const Poset& poset() const noexcept { return poset_; }
    const Subspace& code() const noexcept { return code_; }
    std::size_t length() const noexcept { return code_.ambient_dim(); }
    std::size_t dim() const noexcept { return code_.dim(); }

private:
    Poset poset_;
    Subspace code_;
};

/// (d_1, ..., d_k).
struct WeightHierarchy {
    std::vector<std::size_t> values;

    std::size_t size() const noexcept { return values.size(); }
    std::size_t operator[](std::size_t r) const { return values[r - 1]; }  // 1-based r
    friend bool operator==(const WeightHierarchy&, const WeightHierarchy&) = default;
};

/// Strictly increasing and r <= d_r <= n - k + r. Returns false on violation.
bool satisfies_hierarchy_bounds(const WeightHierarchy& h, std::size_t n);

/// D_1 < D_2 < ... < D_k = C with the generalized weight of each member.
struct Flag {
    std::vector<Subspace> subspaces;
    std::vector<std::size_t> weights;

    friend bool operator==(const Flag& a, const Flag& b)
    {
        return a.subspaces == b.subspaces && a.weights == b.weights;
    }
};

/// Knobs shared by every exhaustive search. threads <= 0 means the OpenMP
/// default; results never depend on it.
struct SearchOptions {
    std::uint64_t budget = default_enumeration_budget;
    int threads = 0;
};

ElementSet support_of_vector(const VectorFq& x);

/// |<supp(x)>|. Throws LengthMismatch when |x| != |P|.
std::size_t poset_weight(const Poset& p, const VectorFq& x);
std::size_t poset_distance(const Poset& p, const VectorFq& x, const VectorFq& y);

ElementSet support_of_code(const LinearCode& c);

/// ||D||_P, computed as the size of the ideal generated by the union of the
/// basis supports.
std::size_t generalized_weight(const Poset& p, const Subspace& d);

/// Exact hierarchy by exhaustive search over the subspaces of each dimension.
/// Throws BudgetExceeded naming the first r whose subspace count is too large.
WeightHierarchy weight_hierarchy(const LinearCode& c, const SearchOptions& opts = {});

/// Single-threaded reference for weight_hierarchy.
WeightHierarchy weight_hierarchy_serial(const LinearCode& c, std::uint64_t budget = default_enumeration_budget);

/// Subspaces of each dimension r = 1..k attaining d_r, in enumeration order.
struct Achievers {
    WeightHierarchy hierarchy;
    std::vector<std::vector<Subspace>> levels;  // levels[r-1]
};

Achievers achievers(const LinearCode& c, const SearchOptions& opts = {});

/// Chain-condition witness. Uses the greedy construction when supp(C) is
/// totally ordered and the exhaustive search otherwise.
std::optional<Flag> find_maximal_flag(const LinearCode& c, const SearchOptions& opts = {});

/// Depth-first search over d_r-achievers. Returns the flag that is first in
/// enumeration order (D_1 first, then D_2, ...).
std::optional<Flag> find_maximal_flag_search(const LinearCode& c, const SearchOptions& opts = {});

/// Greedy flag for codes whose support is a chain: echelonize against the
/// chain order so the basis rows have distinct top elements, sort them by
/// weight, and take the spans of prefixes. Polynomial time. Throws
/// PreconditionViolated if supp(C) is not totally ordered.
Flag greedy_flag(const LinearCode& c);

struct FlagUniqueness {
    bool unique = false;
    Flag first;
    std::optional<Flag> second;  // set iff !unique
    BigInt flag_count;
};

/// Counts the maximal flags achieving the hierarchy. Throws
/// ChainConditionUnsatisfied if there is none.
FlagUniqueness is_flag_unique(const LinearCode& c, const SearchOptions& opts = {});

/// Given subspaces D_1..D_k of C with dim D_r = r and ||D_r|| = d_r, reports
/// whether they are nested. Throws PreconditionViolated unless supp(C) is
/// totally ordered and the candidates meet those requirements.
bool verify_nesting_corollary(const LinearCode& c, const std::vector<Subspace>& candidates);

/// Rosenbloom-Tsfasman weight: sum over columns of the largest 1-based row
/// index holding a nonzero entry (0 for a zero column).
std::size_t rt_weight(const MatrixFq& a);

} // namespace posetcodes
