#include <doctest.h>

#include "fixtures.hpp"
#include "posetcodes/errors.hpp"
#include "posetcodes/io.hpp"

using namespace posetcodes;

TEST_CASE("poset descriptions")
{
    const auto w = io::parse_poset_text(R"({"weak_order": [3, 3, 3, 3, 3, 3, 3, 3, 3]})");
    CHECK(w.poset == fixtures::weak_3x9());
    CHECK(w.id == "weak_order(3,3,3,3,3,3,3,3,3)");
    CHECK_FALSE(w.rt_layout);
    CHECK(w.matrix_shape == std::make_pair(std::size_t{9}, std::size_t{3}));

    CHECK_FALSE(io::parse_poset_text(R"({"weak_order": [1, 2]})").matrix_shape.has_value());

    const auto dc = io::parse_poset_text(R"({"disjoint_chains": {"length": 3, "count": 2}})");
    CHECK(dc.poset == Poset::disjoint_chains(3, 2));
    CHECK(dc.rt_layout);
    CHECK(dc.matrix_shape == std::make_pair(std::size_t{3}, std::size_t{2}));

    const auto c = io::parse_poset_text(R"({"n": 3, "covers": [[1, 2], [2, 3]]})");
    CHECK(c.poset == Poset::chain(3));
    CHECK(c.id == "covers(3)");

    CHECK(io::parse_poset_text(R"({"chain": 4})").poset == Poset::chain(4));
    CHECK(io::parse_poset_text(R"({"antichain": 2})").id == "antichain(2)");
}

TEST_CASE("malformed poset descriptions")
{
    CHECK_THROWS_AS(io::parse_poset_text("not json"), ParseError);
    CHECK_THROWS_AS(io::parse_poset_text("[1, 2]"), ParseError);
    CHECK_THROWS_AS(io::parse_poset_text("{}"), ParseError);
    CHECK_THROWS_AS(io::parse_poset_text(R"({"chain": 3, "antichain": 3})"), ParseError);
    CHECK_THROWS_AS(io::parse_poset_text(R"({"chain": 0})"), ParseError);
    CHECK_THROWS_AS(io::parse_poset_text(R"({"chain": "3"})"), ParseError);
    CHECK_THROWS_AS(io::parse_poset_text(R"({"covers": [[1, 2]]})"), ParseError);
    CHECK_THROWS_AS(io::parse_poset_text(R"({"n": 2, "covers": [[1, 2], [2, 1]]})"), ParseError);
    CHECK_THROWS_AS(io::parse_poset_text(R"({"n": 2, "covers": [[1, 5]]})"), ParseError);
    CHECK_THROWS_AS(io::parse_poset_text(R"({"n": 2, "covers": [[1]]})"), ParseError);
    CHECK_THROWS_AS(io::parse_poset_text(R"({"weak_order": []})"), ParseError);
    CHECK_THROWS_AS(io::parse_poset_text(R"({"disjoint_chains": {"length": 3}})"), ParseError);
    CHECK_THROWS_AS(io::load_poset("/nonexistent/poset.json"), ParseError);
}

TEST_CASE("code files")
{
    const auto code = io::parse_code_text("# comment\n\n3 4 2\n1 0 2 1\n0 1 1 0\nhierarchy 2 4\n", "/base");
    CHECK(code.q == 3);
    CHECK(code.n == 4);
    CHECK(code.rows == std::vector<std::vector<Element>>{{1, 0, 2, 1}, {0, 1, 1, 0}});
    CHECK(code.expected_hierarchy == std::vector<std::size_t>{2, 4});
    CHECK_FALSE(code.poset_path.has_value());

    const auto with_poset = io::parse_code_text("poset p.json\n2 2 0\n", "/base");
    CHECK(with_poset.poset_path == std::filesystem::path("/base/p.json"));
    CHECK(with_poset.rows.empty());
}

TEST_CASE("malformed code files")
{
    CHECK_THROWS_AS(io::parse_code_text(""), ParseError);
    CHECK_THROWS_AS(io::parse_code_text("2 3\n"), ParseError);
    CHECK_THROWS_AS(io::parse_code_text("2 3 4\n"), ParseError);  // k > n
    CHECK_THROWS_AS(io::parse_code_text("6 3 1\n1 0 0\n"), ParseError);
    CHECK_THROWS_AS(io::parse_code_text("2 3 1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(io::parse_code_text("2 3 1\n1 0 2\n"), ParseError);
    CHECK_THROWS_AS(io::parse_code_text("2 3 1\n1 0 x\n"), ParseError);
    CHECK_THROWS_AS(io::parse_code_text("2 3 2\n1 0 0\n"), ParseError);
    CHECK_THROWS_AS(io::parse_code_text("2 3 1\n1 0 0\nhierarchy 1 a\n"), ParseError);
    CHECK_THROWS_AS(io::parse_code_text("poset\n2 3 0\n"), ParseError);

    try {
        io::parse_code_text("2 3 1\n\n1 0 2\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("generator vectors and flattening")
{
    const auto code = io::parse_code_text("2 6 1\n1 1 0 0 0 1\n");
    const auto row = io::generator_vectors(code, Flattening::RowMajor, std::nullopt);
    CHECK(row[0] == VectorFq(Field::get(2), {1, 1, 0, 0, 0, 1}));

    // Written as the 3x2 matrix [[1,1],[0,0],[0,1]], read back column by column.
    const auto col = io::generator_vectors(code, Flattening::ColumnMajor, std::make_pair(std::size_t{3}, std::size_t{2}));
    CHECK(col[0] == VectorFq(Field::get(2), {1, 0, 0, 1, 0, 1}));

    CHECK_THROWS_AS(io::generator_vectors(code, Flattening::ColumnMajor, std::nullopt), ParseError);
    CHECK_THROWS_AS(io::generator_vectors(code, Flattening::ColumnMajor, std::make_pair(std::size_t{2}, std::size_t{2})),
                    ParseError);
}

TEST_CASE("partitions")
{
    const auto p = Poset::weak_order({2, 2});
    const auto part = io::parse_partition(nlohmann::json::parse(R"({"chains": [[3, 1], [2, 4]]})"), p);
    CHECK(part.chains == std::vector<std::vector<int>>{{1, 3}, {2, 4}});

    CHECK_THROWS_AS(io::parse_partition(nlohmann::json::parse(R"({"chains": [[1, 3], [3, 4], [2]]})"), p),
                    ParseError);
    CHECK_THROWS_AS(io::parse_partition(nlohmann::json::parse(R"({"chains": [[1, 2], [3, 4]]})"), p), ParseError);
    CHECK_THROWS_AS(io::parse_partition(nlohmann::json::parse(R"({"chains": [[1, 3]]})"), p), ParseError);
    CHECK_THROWS_AS(io::parse_partition(nlohmann::json::parse(R"([[1, 3], [2, 4]])"), p), ParseError);
    CHECK_THROWS_AS(io::load_partition("/nonexistent.json", p), ParseError);
}

TEST_CASE("json output")
{
    const auto f2 = Field::get(2);
    CHECK(io::to_json(span(MatrixFq::identity(f2, 2))).dump() == "[[1,0],[0,1]]");
    CHECK(io::to_json(std::vector<int>{1, 4}).dump() == "[1,4]");

    const auto b = chain_condition_lower_bound(ChainPartition{{{1, 2}}}, 2);
    CHECK(io::to_json(b).dump() == R"({"q":2,"chain_sizes":[2],"bound":"4","addends":[["3","1"]]})");

    const auto code = span(f2, 3, {VectorFq(f2, {0, 1, 1})});
    CHECK(io::write_code_text(code) == "2 3 1\n0 1 1\n");
    const auto reparsed = io::parse_code_text(io::write_code_text(code));
    CHECK(span(f2, 3, io::generator_vectors(reparsed, Flattening::RowMajor, std::nullopt)) == code);
}
