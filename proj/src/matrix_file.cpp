#include "ginv/matrix_file.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace ginv {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

bool skippable(const std::vector<Token>& tokens) {
  return tokens.empty() || tokens.front().text.front() == '#';
}

std::size_t parse_count(const Token& t, std::size_t line, const char* what) {
  std::size_t value = 0;
  const auto* first = t.text.data();
  const auto* last = first + t.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(line, t.column, std::string("invalid ") + what + " '" + std::string(t.text) + "'");
  }
  if (value == 0) throw ParseError(line, t.column, std::string(what) + " must be at least 1");
  return value;
}

}  // namespace

RMatrix parse_matrix(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t rows = 0, cols = 0;
  bool have_header = false;
  std::size_t filled = 0;
  std::vector<Rational> entries;

  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = tokenize(line);
    if (skippable(tokens)) continue;

    if (!have_header) {
      if (tokens.size() != 2) {
        throw ParseError(line_no, tokens.size() > 2 ? tokens[2].column : 0,
                         "header must be two counts 'rows cols'");
      }
      rows = parse_count(tokens[0], line_no, "row count");
      cols = parse_count(tokens[1], line_no, "column count");
      entries.reserve(rows * cols);
      have_header = true;
      continue;
    }

    if (filled == rows) throw ParseError(line_no, tokens.front().column, "unexpected extra row");
    if (tokens.size() != cols) {
      const std::size_t col = tokens.size() > cols ? tokens[cols].column : line.size() + 1;
      throw ParseError(line_no, col,
                       "expected " + std::to_string(cols) + " entries, found " + std::to_string(tokens.size()));
    }
    for (const auto& t : tokens) {
      auto value = Rational::parse(t.text);
      if (!value) throw ParseError(line_no, t.column, "invalid rational '" + std::string(t.text) + "'");
      entries.push_back(std::move(*value));
    }
    ++filled;
  }

  if (!have_header) throw ParseError(line_no + 1, 0, "missing header 'rows cols'");
  if (filled < rows) {
    throw ParseError(line_no + 1, 0,
                     "expected " + std::to_string(rows) + " rows, found " + std::to_string(filled));
  }
  return RMatrix(rows, cols, std::move(entries));
}

RMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_matrix(in);
}

RMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, 0, "cannot open file", path.string());
  try {
    return parse_matrix(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), e.what(), path.string());
  }
}

std::string format_matrix(const RMatrix& a) {
  std::string out = std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out += ' ';
      out += a(i, j).str();
    }
    out += '\n';
  }
  return out;
}

std::string format_pretty(const RMatrix& a) {
  std::vector<std::string> cells;
  cells.reserve(a.rows() * a.cols());
  std::vector<std::size_t> width(a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      cells.push_back(a(i, j).str());
      width[j] = std::max(width[j], cells.back().size());
    }
  }
  std::string out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    out += "[ ";
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& c = cells[i * a.cols() + j];
      out += std::string(width[j] - c.size(), ' ') + c + (j + 1 < a.cols() ? "  " : " ");
    }
    out += "]\n";
  }
  return out;
}

}  // namespace ginv
