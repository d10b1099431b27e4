#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "posetcodes/codes.hpp"
#include "posetcodes/counting.hpp"
#include "posetcodes/poset.hpp"

// File formats and JSON reports. Every parser throws ParseError with a
// message naming the offending input.
namespace posetcodes::io {

using Json = nlohmann::ordered_json;

/// A parsed poset file. `matrix_shape` is the natural rows x cols layout of a
/// vector over this poset when one exists: (length, count) for disjoint chains
/// and (blocks, block size) for a weak order with equal blocks.
struct PosetDescription {
    Poset poset;
    std::string id;
    bool rt_layout = false;  // disjoint chains: columns pair with chains
    std::optional<std::pair<std::size_t, std::size_t>> matrix_shape;
};

/// Accepts exactly one of
///   {"n": N, "covers": [[a,b],...]}, {"weak_order": [sizes...]},
///   {"chain": N}, {"antichain": N}, {"disjoint_chains": {"length": N, "count": M}}.
PosetDescription parse_poset(const nlohmann::json& doc);
PosetDescription parse_poset_text(const std::string& text);
PosetDescription load_poset(const std::filesystem::path& path);

/// Generator-matrix file: a header line `q n k`, then k rows of n
/// whitespace-separated field representatives. Blank lines and lines starting
/// with '#' are ignored. Optional directive lines:
///   poset <path>            poset file, relative to the code file
///   hierarchy d_1 ... d_k   expected hierarchy, checked by `verify`
struct CodeFile {
    std::uint32_t q = 0;
    std::size_t n = 0;
    std::vector<std::vector<Element>> rows;
    std::optional<std::filesystem::path> poset_path;
    std::optional<std::vector<std::size_t>> expected_hierarchy;
};

CodeFile parse_code_text(const std::string& text, const std::filesystem::path& base_dir = {});
CodeFile load_code(const std::filesystem::path& path);

/// Generator rows as vectors. Under column-major flattening each row is read
/// as a rows x cols matrix written row by row and re-flattened column-major.
std::vector<VectorFq> generator_vectors(const CodeFile& code, Flattening order,
                                        std::optional<std::pair<std::size_t, std::size_t>> shape);

/// {"chains": [[...], ...]}, validated against `p`.
ChainPartition parse_partition(const nlohmann::json& doc, const Poset& p);
ChainPartition load_partition(const std::filesystem::path& path, const Poset& p);

Json to_json(const std::vector<int>& elements);
Json to_json(const Subspace& s);
Json to_json(const Flag& f);
Json to_json(const BoundReport& b);
Json to_json(const CensusReport& c);

std::string write_code_text(const Subspace& code);

} // namespace posetcodes::io
