#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "ginv/errors.hpp"
#include "ginv/matrix_file.hpp"
#include "support/corpus.hpp"
#include "support/worked_examples.hpp"

using namespace ginv;

namespace {

// Expects a ParseError at the given position.
void expect_error_at(std::string_view text, std::size_t line, std::size_t column) {
  try {
    parse_matrix(text);
    ADD_FAILURE() << "no error for:\n" << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
  }
}

}  // namespace

TEST(MatrixFile, ParsesWithCommentsAndBlankLines) {
  const auto a = parse_matrix("# worked example\n\n3 3\n1 2 3\n  4  5 6\n\n7 8 9\n");
  EXPECT_EQ(a, worked::a3());
}

TEST(MatrixFile, ParsesRationalsAndCrlf) {
  EXPECT_EQ(parse_matrix("1 2\r\n-7/36 +2/4\r\n"), (RMatrix{{Rational(-7, 36), Rational(1, 2)}}));
}

TEST(MatrixFile, CanonicalOutput) {
  EXPECT_EQ(format_matrix(RMatrix{{Rational(2, 4), -3}, {0, Rational(10, 5)}}), "2 2\n1/2 -3\n0 2\n");
}

TEST(MatrixFile, PrettyOutput) {
  EXPECT_EQ(format_pretty(RMatrix{{Rational(-1, 6), 1}, {0, 10}}), "[ -1/6   1 ]\n[    0  10 ]\n");
}

TEST(MatrixFile, ErrorPositions) {
  expect_error_at("", 1, 0);                          // no header
  expect_error_at("# only a comment\n", 2, 0);        // no header
  expect_error_at("2\n", 1, 0);                       // one count
  expect_error_at("2 2 2\n", 1, 5);                   // three counts
  expect_error_at("0 2\n", 1, 1);                     // zero rows
  expect_error_at("2 x\n", 1, 3);                     // bad count
  expect_error_at("1 2\n1 1/0\n", 2, 3);              // zero denominator
  expect_error_at("1 2\n1 0.5\n", 2, 3);              // decimal
  expect_error_at("1 2\n1\n", 2, 2);                  // short row
  expect_error_at("1 2\n1 2 3\n", 2, 5);              // long row
  expect_error_at("1 1\n1\n2\n", 3, 1);               // extra row
  expect_error_at("2 1\n1\n", 3, 0);                  // missing row
}

TEST(MatrixFile, MissingFile) {
  try {
    read_matrix_file("/nonexistent/dir/x.rmat");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.source(), "/nonexistent/dir/x.rmat");
    EXPECT_EQ(e.line(), 0u);
  }
}

TEST(MatrixFile, ReadReportsSource) {
  const auto path = std::filesystem::temp_directory_path() / "ginv_test_bad.rmat";
  std::ofstream(path) << "1 1\nzz\n";
  try {
    read_matrix_file(path);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.source(), path.string());
    EXPECT_EQ(e.line(), 2u);
  }
  std::filesystem::remove(path);
}

TEST(MatrixFileProperty, RoundTripIsByteIdentical) {
  corpus::Generator gen(601);
  for (int trial = 0; trial < 200; ++trial) {
    const RMatrix a = gen.any();
    const std::string text = format_matrix(a);
    const RMatrix back = parse_matrix(text);
    EXPECT_EQ(back, a);
    EXPECT_EQ(format_matrix(back), text);
  }
}
