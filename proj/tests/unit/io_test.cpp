#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "generators.hpp"
#include "skewhopf/error.hpp"
#include "skewhopf/hopf.hpp"
#include "skewhopf/io.hpp"

using namespace skewhopf;
using skewhopf::testing::Rng;

namespace {

ValidatedChain chain_of(const std::string& name, PresetParams params = {}) { return validate(preset(name, params)); }

Letter L(const ValidatedChain& chain, int r, const char* i, const char* j) {
  return Letter{r, *chain.find(i), *chain.find(j)};
}

std::size_t parse_error_position(const std::string& text, const ValidatedChain& chain) {
  try {
    io::parse_expr(text, chain);
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    return e.position();
  }
  ADD_FAILURE() << "no parse error for '" << text << "'";
  return 0;
}

ErrorCode error_code_of(const std::string& text, const ValidatedChain& chain) {
  try {
    io::parse_expr(text, chain);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for '" << text << "'";
  return ErrorCode::ParseError;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(Parse, Products) {
  const auto chain = chain_of("free-matrix");
  const auto p = io::parse_expr("x[0,1,2]*x[1,2,2]", chain);
  EXPECT_EQ(p, NCPoly(Word{L(chain, 0, "1", "2"), L(chain, 1, "2", "2")}));
}

TEST(Parse, RationalCoefficients) {
  const auto chain = chain_of("free-matrix");
  NCPoly expected = NCPoly::one();
  expected.add_term(Word(L(chain, 0, "1", "1")), Rational(-1, 2));
  EXPECT_EQ(io::parse_expr("1 - 1/2 x[0,1,1]", chain), expected);
  EXPECT_EQ(io::parse_expr(" 1-1/2*x[ 0 , 1 , 1 ] ", chain), expected);
}

TEST(Parse, SignsParenthesesAndCancellation) {
  const auto chain = chain_of("free-matrix");
  const NCPoly a(L(chain, 0, "1", "1"));
  const NCPoly b(L(chain, 1, "2", "1"));
  EXPECT_EQ(io::parse_expr("-x[0,1,1]", chain), -a);
  EXPECT_EQ(io::parse_expr("(x[0,1,1] + x[1,2,1])*x[1,2,1]", chain), a * b + b * b);
  EXPECT_EQ(io::parse_expr("2 (x[0,1,1] - 1)", chain), a * Rational(2) - NCPoly::constant(2));
  EXPECT_TRUE(io::parse_expr("x[0,1,1] - x[0,1,1]", chain).is_zero());
  EXPECT_EQ(io::parse_expr("1*1", chain), NCPoly::one());
  EXPECT_EQ(io::parse_expr("-3/6", chain), NCPoly::constant(Rational(-1, 2)));
}

TEST(Parse, ErrorPositions) {
  const auto chain = chain_of("free-matrix");
  EXPECT_EQ(parse_error_position("x[0,1", chain), 6u);
  EXPECT_EQ(parse_error_position("", chain), 1u);
  EXPECT_EQ(parse_error_position("x[0,1,2] +", chain), 11u);
  EXPECT_EQ(parse_error_position("y", chain), 1u);
  EXPECT_EQ(parse_error_position("1/0", chain), 3u);
  EXPECT_EQ(parse_error_position("(x[0,1,1]", chain), 10u);
  EXPECT_EQ(parse_error_position("x[0,1,1] x[0,1,1]", chain), 10u);
  EXPECT_EQ(parse_error_position("x[0,1,1]*x[0,1,1] )", chain), 19u);
}

TEST(Parse, ChainErrors) {
  const auto chain = chain_of("free-matrix");
  EXPECT_EQ(error_code_of("x[0,1,7]", chain), ErrorCode::UnknownIndex);
  EXPECT_EQ(error_code_of("x[2,1,1]", chain), ErrorCode::LevelOutOfWindow);
  EXPECT_EQ(error_code_of("x[-1,1,1]", chain), ErrorCode::LevelOutOfWindow);
  EXPECT_TRUE(is_input_error(ErrorCode::ParseError));
}

TEST(Parse, AbsentLettersParse) {
  // Presence is checked by the operations, not by the parser.
  const auto chain = chain_of("collapse-m4");
  EXPECT_EQ(io::parse_expr("x[0,3,1]", chain), NCPoly(L(chain, 0, "3", "1")));
}

TEST(Format, Examples) {
  const auto chain = chain_of("free-matrix");
  EXPECT_EQ(io::format_letter(L(chain, 0, "1", "2"), chain), "x[0,1,2]");
  EXPECT_EQ(io::format_word(Word{}, chain), "1");
  EXPECT_EQ(io::format_word(Word{L(chain, 0, "1", "2"), L(chain, 1, "2", "2")}, chain), "x[0,1,2]*x[1,2,2]");
  EXPECT_EQ(io::format_poly(NCPoly(), chain), "0");
  EXPECT_EQ(io::format_poly(io::parse_expr("1 - 1/2 x[0,1,1]", chain), chain), "1 - 1/2 x[0,1,1]");
  EXPECT_EQ(io::format_poly(io::parse_expr("-x[0,1,1]*x[1,2,1]", chain), chain), "-x[0,1,1]*x[1,2,1]");
  EXPECT_EQ(io::format_poly(io::parse_expr("x[1,1,1] + 3 x[0,1,1] - 2", chain), chain),
            "-2 + 3 x[0,1,1] + x[1,1,1]");
}

TEST(Format, Tensors) {
  const auto chain = chain_of("free-matrix");
  const auto rules = rewrite::derive_rules(chain);
  const auto delta = hopf::comultiply(rules, io::parse_expr("x[0,1,2]", chain));
  EXPECT_EQ(io::format_tensor(delta, chain), "x[0,1,1] (x) x[0,1,2] + x[0,1,2] (x) x[0,2,2]");
  EXPECT_EQ(io::format_tensor(TensorPoly{}, chain), "0");
  const auto json = io::tensor_json(delta, chain);
  ASSERT_EQ(json.size(), 2u);
  EXPECT_EQ(json[0].dump(), R"(["1",[[0,"1","1"]],[[0,"1","2"]]])");
}

TEST(FormatProperty, ParseInvertsFormat) {
  for (const auto& name : {"free-matrix", "collapse-m4", "growth"}) {
    const auto chain = chain_of(name);
    Rng rng(53);
    for (int t = 0; t < 200; ++t) {
      const auto p = skewhopf::testing::random_poly(rng, chain, 5, 4);
      const auto text = io::format_poly(p, chain);
      EXPECT_EQ(io::parse_expr(text, chain), p) << text;
      EXPECT_EQ(io::format_poly(io::parse_expr(text, chain), chain), text);
    }
  }
}

TEST(FormatProperty, PrintingCanonicalizesSpacing) {
  const auto chain = chain_of("free-matrix");
  EXPECT_EQ(io::format_poly(io::parse_expr("  x[1,2,1]*x[0,1,1]+ 1/3*x[0,2,2]-x[0,2,2]", chain), chain),
            "-2/3 x[0,2,2] + x[1,2,1]*x[0,1,1]");
}

TEST(Json, PolyAndLetters) {
  const auto chain = chain_of("free-matrix");
  EXPECT_EQ(io::letter_json(L(chain, 1, "2", "1"), chain).dump(), R"([1,"2","1"])");
  EXPECT_EQ(io::poly_json(io::parse_expr("1 - 1/2 x[0,1,1]", chain), chain).dump(),
            R"([["1",[]],["-1/2",[[0,"1","1"]]]])");
  EXPECT_EQ(io::dump(io::Json::object({{"b", 1}, {"a", 2}})), "{\n  \"b\": 1,\n  \"a\": 2\n}\n");
}

TEST(Json, ConfluenceReportShape) {
  const auto chain = chain_of("needge2");
  const auto report = rewrite::check_confluence(rewrite::derive_rules(chain));
  const auto json = io::confluence_json(report, chain);
  EXPECT_FALSE(json["confluent"].get<bool>());
  EXPECT_EQ(json["ambiguities"].get<std::size_t>(), report.ambiguity_count);
  EXPECT_EQ(json["unresolved"].size(), report.unresolved.size());
  EXPECT_TRUE(json["unresolved"][0].contains("residual"));
}

TEST(ChainJson, RoundTripsPresets) {
  for (const auto& name : preset_names()) {
    const auto spec = preset(name);
    const auto json = io::chain_to_json(spec);
    EXPECT_EQ(io::chain_from_json(nlohmann::json::parse(json.dump())), spec) << name;
  }
}

TEST(ChainJsonProperty, RoundTripsRandomSpecs) {
  Rng rng(59);
  for (int t = 0; t < 50; ++t) {
    const auto spec = skewhopf::testing::random_chain_spec(rng, 3, 4, -2, 2);
    const auto back = io::chain_from_json(nlohmann::json::parse(io::dump(io::chain_to_json(spec))));
    EXPECT_EQ(back, spec);
    EXPECT_EQ(io::dump(io::chain_to_json(back)), io::dump(io::chain_to_json(spec)));
  }
}

TEST(ChainJson, RejectsMalformedDocuments) {
  const auto good = io::chain_to_json(preset("collapse-m4"));
  auto expect_bad = [](const nlohmann::json& doc) {
    try {
      io::chain_from_json(doc);
      ADD_FAILURE() << doc.dump();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::BadChainFile) << doc.dump();
    }
  };
  auto extra = nlohmann::json::parse(good.dump());
  extra["colour"] = "red";
  expect_bad(extra);
  auto missing = nlohmann::json::parse(good.dump());
  missing.erase("window");
  expect_bad(missing);
  auto wrong = nlohmann::json::parse(good.dump());
  wrong["window"]["lo"] = "low";
  expect_bad(wrong);
  auto nested = nlohmann::json::parse(good.dump());
  nested["levels"][0]["extra"] = 1;
  expect_bad(nested);
  expect_bad(nlohmann::json::array());
}

TEST(ChainJson, LoadsFiles) {
  const auto path = temp_file("skewhopf_io_chain.json", io::dump(io::chain_to_json(preset("needge2"))));
  EXPECT_EQ(io::load_chain_file(path), preset("needge2"));
  std::filesystem::remove(path);
  try {
    io::load_chain_file(path);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadChainFile);
  }
  const auto garbage = temp_file("skewhopf_io_garbage.json", "{ not json");
  EXPECT_THROW(io::load_chain_file(garbage), Error);
  std::filesystem::remove(garbage);
}

TEST(Json, LatticeAndGrowth) {
  const auto chain = chain_of("growth");
  const auto lattice = comodule::expected_lattice(chain, -2, 0);
  EXPECT_EQ(io::lattice_json(lattice).dump(), "[[],[0],[0,1]]");
  const auto growth = io::growth_json(comodule::growth_report(chain));
  ASSERT_EQ(growth.size(), 4u);
  EXPECT_EQ(growth[0].dump(), R"({"r":-3,"minSimpleDim":8,"supOK":true})");
}
