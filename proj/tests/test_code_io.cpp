#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "oqecc/code_io.hpp"
#include "oqecc/code_params.hpp"
#include "oqecc/error.hpp"
#include "test_support.hpp"

using namespace oqecc;
using namespace oqecc::testing;

namespace {

ErrorCode code_of(const std::string& text) {
  try {
    parse_code_json(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << text;
  return ErrorCode::IoError;
}

std::string message_of(const std::string& text) {
  try {
    parse_code_json(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(ParseCode, RunningExample) {
  const auto x = parse_code_json(R"({"p":2,"m":1,"n":2,"layout":"symplectic","generators":[[1,1,0,0]]})");
  EXPECT_EQ(x, symplectic_code(GfContext::make(2, 1), 2, {{1, 1, 0, 0}}));
  EXPECT_EQ(subsystem_params(x).bracket(), "[[2,1,0,1]]_2");
}

TEST(ParseCode, EmptyGeneratorsParseToZeroCode) {
  const auto x = parse_code_json(R"({"p":3,"m":1,"n":2,"layout":"symplectic","generators":[]})");
  EXPECT_TRUE(x.is_zero());
  try {
    subsystem_params(x);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroCode);
  }
}

TEST(ParseCode, InvalidEncoding) {
  EXPECT_EQ(code_of(R"({"p":2,"m":1,"n":2,"layout":"symplectic","generators":[[1,2,0,0]]})"),
            ErrorCode::InvalidEncoding);
  EXPECT_EQ(code_of(R"({"p":2,"m":1,"n":1,"layout":"symplectic","generators":[[-1,0]]})"),
            ErrorCode::InvalidEncoding);
  // Hermitian entries live in GF(q^2): 3 is fine for q = 2, 4 is not.
  EXPECT_NO_THROW(parse_code_json(R"({"p":2,"m":1,"n":1,"layout":"hermitian","generators":[[3]]})"));
  EXPECT_EQ(code_of(R"({"p":2,"m":1,"n":1,"layout":"hermitian","generators":[[4]]})"), ErrorCode::InvalidEncoding);
}

TEST(ParseCode, ParseErrors) {
  EXPECT_EQ(code_of("{\n\"p\": 2,\n\"m\": 1,\n"), ErrorCode::ParseError);
  EXPECT_NE(message_of("{\n\"p\": 2,\n\"m\": 1,\n").find("line 4"), std::string::npos);
  EXPECT_EQ(code_of("[1,2]"), ErrorCode::ParseError);
  EXPECT_EQ(code_of(R"({"m":1,"n":2,"layout":"symplectic","generators":[]})"), ErrorCode::ParseError);
  EXPECT_NE(message_of(R"({"m":1,"n":2,"layout":"symplectic","generators":[]})").find("'p'"), std::string::npos);
  EXPECT_EQ(code_of(R"({"p":2,"m":1,"n":2,"layout":"qubit","generators":[]})"), ErrorCode::ParseError);
  EXPECT_EQ(code_of(R"({"p":2,"m":1,"n":2,"layout":"symplectic","generators":[[1,0,0]]})"), ErrorCode::ParseError);
  EXPECT_NE(message_of(R"({"p":2,"m":1,"n":2,"layout":"symplectic","generators":[[1,0,0]]})").find("generators[0]"),
            std::string::npos);
  EXPECT_EQ(code_of(R"({"p":2,"m":1,"n":1,"layout":"symplectic","generators":[[1,"a"]]})"), ErrorCode::ParseError);
  EXPECT_EQ(code_of(R"({"p":2,"m":1,"n":0,"layout":"symplectic","generators":[]})"), ErrorCode::ParseError);
  EXPECT_EQ(code_of(R"({"p":4,"m":1,"n":1,"layout":"symplectic","generators":[]})"), ErrorCode::NotPrime);
}

TEST(ParseCode, EmitParseRoundTrip) {
  std::mt19937_64 rng(31);
  for (auto [p, m] : {std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{2u, 2u}, std::pair{5u, 2u}}) {
    const auto ctx = GfContext::make(p, m);
    for (Layout layout : {Layout::Symplectic, Layout::Hermitian}) {
      for (int trial = 0; trial < 10; ++trial) {
        const auto x = random_code(ctx, 3, layout, rng);
        const std::string text = emit_code_json(x);
        const auto y = parse_code_json(text);
        EXPECT_EQ(x, y);
        EXPECT_EQ(emit_code_json(y), text);
      }
    }
  }
  const auto zero = AdditiveCode::zero(GfContext::make(2, 1), 2, Layout::Symplectic);
  EXPECT_EQ(parse_code_json(emit_code_json(zero)), zero);
}

TEST(ParseCode, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "oqecc_code_io_test.json";
  const auto x = symplectic_code(GfContext::make(3, 1), 2, {{1, 2, 0, 1}, {0, 0, 1, 1}});
  write_code_file(path, x);
  EXPECT_EQ(parse_code_file(path), x);
  std::filesystem::remove(path);
  try {
    parse_code_file(path);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IoError);
  }
}

TEST(FormatVector, Examples) {
  const auto ctx = GfContext::make(2, 1);
  EXPECT_EQ(format_vector(CodeVector(ctx, Layout::Symplectic, {1, 0, 0, 0})), "(10|00)");
  EXPECT_EQ(format_vector(CodeVector(ctx, Layout::Hermitian, {3, 0})), "[3 0]");
  const auto gf16 = GfContext::make(2, 4);
  EXPECT_EQ(format_vector(CodeVector(gf16, Layout::Symplectic, {12, 0, 1, 15})), "(12,0|1,15)");
}
