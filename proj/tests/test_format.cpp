#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <json.hpp>

#include "trinary/error.hpp"
#include "trinary/format.hpp"
#include "trinary/report.hpp"

using namespace trinary::format;

TEST_CASE("format names") {
  CHECK(parse_format("csv") == OutputFormat::Csv);
  CHECK(parse_format("markdown") == OutputFormat::Markdown);
  CHECK(parse_format("json") == OutputFormat::Json);
  CHECK_FALSE(parse_format("xml").has_value());
}

TEST_CASE("csv rendering quotes only when needed") {
  Table t{{"a", "b"}, {}};
  t.add_row({"1", "x,y"});
  t.add_row({"say \"hi\"", ""});
  CHECK(render(t, OutputFormat::Csv) == "a,b\n1,\"x,y\"\n\"say \"\"hi\"\"\",\n");
  CHECK_THROWS_AS(t.add_row({"only one"}), trinary::DomainError);
}

TEST_CASE("markdown rendering") {
  Table t{{"k", "v"}, {}};
  t.add_row({"a|b", "2"});
  CHECK(render(t, OutputFormat::Markdown) == "| k | v |\n| --- | --- |\n| a\\|b | 2 |\n");
}

TEST_CASE("json rendering types numeric cells") {
  Table t{{"base", "label", "value"}, {}};
  t.add_row({"2", "e", "0.347"});
  t.add_row({"-1", "29/9 (3.222)", ""});
  const auto doc = nlohmann::json::parse(render(t, OutputFormat::Json));
  REQUIRE(doc.is_array());
  CHECK(doc[0]["base"] == 2);
  CHECK(doc[0]["label"] == "e");
  CHECK(doc[0]["value"].get<double>() == doctest::Approx(0.347));
  CHECK(doc[1]["base"] == -1);
  CHECK(doc[1]["label"] == "29/9 (3.222)");
  CHECK(doc[1]["value"] == "");
}

TEST_CASE("csv parse inverts render") {
  std::mt19937 rng(5);
  const std::string alphabet = "ab,\"\n 1-";
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t cols = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    Table t;
    for (std::size_t c = 0; c < cols; ++c) t.columns.push_back("c" + std::to_string(c));
    const int rows = std::uniform_int_distribution<int>(0, 5)(rng);
    for (int r = 0; r < rows; ++r) {
      std::vector<std::string> row;
      for (std::size_t c = 0; c < cols; ++c) {
        std::string cell;
        const int len = std::uniform_int_distribution<int>(0, 6)(rng);
        for (int i = 0; i < len; ++i) {
          cell += alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)];
        }
        row.push_back(cell);
      }
      t.add_row(std::move(row));
    }
    REQUIRE(parse_csv(render(t, OutputFormat::Csv)) == t);
  }
  CHECK_THROWS_AS(parse_csv("a\n\"open"), trinary::DomainError);
}

TEST_CASE("csv round trip for every preset") {
  namespace report = trinary::report;
  for (const Table& t : {report::table1(), report::table2(), report::table3(), report::table4(), report::table5(),
                         report::table6(), report::table8()}) {
    REQUIRE(parse_csv(render(t, OutputFormat::Csv)) == t);
  }
}

TEST_CASE("fixed") {
  CHECK(fixed(0.34657) == "0.347");
  CHECK(fixed(2.0, 1) == "2.0");
}
