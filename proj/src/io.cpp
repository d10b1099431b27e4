#include "posetcodes/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "posetcodes/errors.hpp"

namespace posetcodes::io {

namespace {

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t positive(const nlohmann::json& v, const char* what)
{
    if (!v.is_number_integer() || v.get<long long>() < 1)
        throw ParseError(std::string(what) + " must be a positive integer");
    return v.get<std::size_t>();
}

} // namespace

PosetDescription parse_poset(const nlohmann::json& doc)
{
    if (!doc.is_object())
        throw ParseError("poset description must be a JSON object");
    static const char* const keys[] = {"covers", "weak_order", "chain", "antichain", "disjoint_chains"};
    int present = 0;
    for (const char* key : keys)
        present += doc.contains(key) ? 1 : 0;
    if (present != 1)
        throw ParseError("poset description needs exactly one of covers, weak_order, chain, antichain, "
                         "disjoint_chains");

    try {
        if (doc.contains("covers")) {
            if (!doc.contains("n"))
                throw ParseError("cover-relation poset needs \"n\"");
            const std::size_t n = positive(doc["n"], "n");
            std::vector<std::pair<int, int>> covers;
            for (const auto& pair : doc["covers"]) {
                if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
                    !pair[1].is_number_integer())
                    throw ParseError("each cover must be a pair [a, b]");
                covers.emplace_back(pair[0].get<int>(), pair[1].get<int>());
            }
            return {Poset::from_cover_relations(n, covers), "covers(" + std::to_string(n) + ")", false, std::nullopt};
        }
        if (doc.contains("weak_order")) {
            const auto& arr = doc["weak_order"];
            if (!arr.is_array())
                throw ParseError("weak_order must be an array of block sizes");
            std::vector<std::size_t> sizes;
            std::string id = "weak_order(";
            for (const auto& v : arr) {
                sizes.push_back(positive(v, "weak_order block size"));
                id += (sizes.size() > 1 ? "," : "") + std::to_string(sizes.back());
            }
            id += ")";
            PosetDescription d{Poset::weak_order(sizes), id, false, std::nullopt};
            if (!sizes.empty() && std::all_of(sizes.begin(), sizes.end(), [&](auto s) { return s == sizes[0]; }))
                d.matrix_shape = std::make_pair(sizes.size(), sizes[0]);
            return d;
        }
        if (doc.contains("chain")) {
            const std::size_t n = positive(doc["chain"], "chain");
            return {Poset::chain(n), "chain(" + std::to_string(n) + ")", true, std::make_pair(n, std::size_t{1})};
        }
        if (doc.contains("antichain")) {
            const std::size_t n = positive(doc["antichain"], "antichain");
            return {Poset::antichain(n), "antichain(" + std::to_string(n) + ")", false, std::nullopt};
        }
        const auto& dc = doc["disjoint_chains"];
        if (!dc.is_object() || !dc.contains("length") || !dc.contains("count"))
            throw ParseError("disjoint_chains needs {\"length\": n, \"count\": m}");
        const std::size_t len = positive(dc["length"], "disjoint_chains.length");
        const std::size_t count = positive(dc["count"], "disjoint_chains.count");
        return {Poset::disjoint_chains(len, count),
                "disjoint_chains(" + std::to_string(len) + "," + std::to_string(count) + ")", true,
                std::make_pair(len, count)};
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(std::string("invalid poset: ") + e.what());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid poset: ") + e.what());
    }
}

PosetDescription parse_poset_text(const std::string& text)
{
    try {
        return parse_poset(nlohmann::json::parse(text));
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("poset file is not JSON: ") + e.what());
    }
}

PosetDescription load_poset(const std::filesystem::path& path)
{
    return parse_poset_text(read_file(path));
}

CodeFile parse_code_text(const std::string& text, const std::filesystem::path& base_dir)
{
    CodeFile code;
    std::istringstream lines(text);
    std::string line;
    bool have_header = false;
    std::size_t k = 0;
    std::size_t line_no = 0;

    const auto fail = [&](const std::string& msg) {
        throw ParseError("code file line " + std::to_string(line_no) + ": " + msg);
    };

    while (std::getline(lines, line)) {
        ++line_no;
        std::istringstream words(line);
        std::string first;
        if (!(words >> first) || first[0] == '#')
            continue;

        if (first == "poset") {
            std::string path;
            if (!(words >> path))
                fail("poset directive needs a path");
            code.poset_path = base_dir / path;
            continue;
        }
        if (first == "hierarchy") {
            std::vector<std::size_t> values;
            long long v;
            while (words >> v) {
                if (v < 0)
                    fail("hierarchy values must be non-negative");
                values.push_back(static_cast<std::size_t>(v));
            }
            if (!words.eof())
                fail("hierarchy directive takes integers only");
            code.expected_hierarchy = std::move(values);
            continue;
        }

        std::istringstream all(line);
        std::vector<long long> values;
        long long v;
        while (all >> v)
            values.push_back(v);
        if (!all.eof())
            fail("expected whitespace-separated integers");

        if (!have_header) {
            if (values.size() != 3)
                fail("header must be `q n k`");
            if (values[0] < 2 || values[1] < 1 || values[2] < 0 || values[2] > values[1])
                fail("header values out of range");
            code.q = static_cast<std::uint32_t>(values[0]);
            code.n = static_cast<std::size_t>(values[1]);
            k = static_cast<std::size_t>(values[2]);
            have_header = true;
            continue;
        }
        if (values.size() != code.n)
            fail("row has " + std::to_string(values.size()) + " entries, expected " + std::to_string(code.n));
        std::vector<Element> row;
        for (long long x : values) {
            if (x < 0 || x >= static_cast<long long>(code.q))
                fail("entry " + std::to_string(x) + " is not an element of GF(" + std::to_string(code.q) + ")");
            row.push_back(static_cast<Element>(x));
        }
        code.rows.push_back(std::move(row));
    }
    if (!have_header)
        throw ParseError("code file has no `q n k` header");
    if (code.rows.size() != k)
        throw ParseError("code file declares " + std::to_string(k) + " rows but has " +
                         std::to_string(code.rows.size()));
    try {
        Field::get(code.q);
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
    return code;
}

CodeFile load_code(const std::filesystem::path& path)
{
    return parse_code_text(read_file(path), path.parent_path());
}

std::vector<VectorFq> generator_vectors(const CodeFile& code, Flattening order,
                                        std::optional<std::pair<std::size_t, std::size_t>> shape)
{
    const FieldPtr field = Field::get(code.q);
    std::vector<VectorFq> out;
    for (const auto& row : code.rows) {
        VectorFq v(field, row);
        if (order == Flattening::ColumnMajor) {
            if (!shape)
                throw ParseError("column-major flattening needs a matrix shape for this poset");
            if (shape->first * shape->second != code.n)
                throw ParseError("matrix shape does not match code length");
            v = flatten(unflatten(v, shape->first, shape->second, Flattening::RowMajor), Flattening::ColumnMajor);
        }
        out.push_back(std::move(v));
    }
    return out;
}

ChainPartition parse_partition(const nlohmann::json& doc, const Poset& p)
{
    if (!doc.is_object() || !doc.contains("chains") || !doc["chains"].is_array())
        throw ParseError("partition file must be {\"chains\": [[...], ...]}");
    ChainPartition partition;
    for (const auto& chain : doc["chains"]) {
        if (!chain.is_array())
            throw ParseError("each chain must be an array of elements");
        std::vector<int> elems;
        for (const auto& e : chain) {
            if (!e.is_number_integer())
                throw ParseError("chain elements must be integers");
            elems.push_back(e.get<int>());
        }
        partition.chains.push_back(std::move(elems));
    }
    try {
        validate_chain_partition(p, partition);
    } catch (const PreconditionViolated& e) {
        throw ParseError(std::string("invalid partition: ") + e.what());
    }
    // Report chains bottom to top regardless of input order.
    for (auto& chain : partition.chains) {
        ElementSet members(p.size(), chain);
        chain = p.sorted_chain(members);
    }
    return partition;
}

ChainPartition load_partition(const std::filesystem::path& path, const Poset& p)
{
    try {
        return parse_partition(nlohmann::json::parse(read_file(path)), p);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("partition file is not JSON: ") + e.what());
    }
}

Json to_json(const std::vector<int>& elements)
{
    Json arr = Json::array();
    for (int e : elements)
        arr.push_back(e);
    return arr;
}

Json to_json(const Subspace& s)
{
    Json rows = Json::array();
    for (const auto& row : s.basis().values())
        rows.push_back(row);
    return rows;
}

Json to_json(const Flag& f)
{
    Json arr = Json::array();
    for (const auto& s : f.subspaces)
        arr.push_back(to_json(s));
    return arr;
}

Json to_json(const BoundReport& b)
{
    Json out;
    out["q"] = b.q;
    out["chain_sizes"] = b.chain_sizes;
    out["bound"] = b.bound.str();
    Json addends = Json::array();
    for (const auto& row : b.addends) {
        Json r = Json::array();
        for (const auto& a : row)
            r.push_back(a.str());
        addends.push_back(std::move(r));
    }
    out["addends"] = std::move(addends);
    return out;
}

Json to_json(const CensusReport& c)
{
    Json out;
    out["q"] = c.q;
    out["n"] = c.n;
    out["poset"] = c.poset_id;
    Json dims = Json::array();
    for (std::size_t d = 1; d < c.total_codes.size(); ++d)
        dims.push_back(Json{{"dim", d},
                            {"codes", std::to_string(c.total_codes[d])},
                            {"chain_condition", std::to_string(c.chain_condition_codes[d])}});
    out["per_dimension"] = std::move(dims);
    out["chain_condition_total"] = std::to_string(c.chain_condition_total);
    return out;
}

std::string write_code_text(const Subspace& code)
{
    std::ostringstream out;
    out << code.field()->order() << ' ' << code.ambient_dim() << ' ' << code.dim() << '\n';
    for (const auto& row : code.basis().values()) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? " " : "") << row[i];
        out << '\n';
    }
    return out.str();
}

} // namespace posetcodes::io
