#include "rangemode/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "rangemode/errors.hpp"

namespace rangemode {

namespace {

struct RawToken {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' ||
         c == '\f';
}

// Whitespace tokenizer tracking 1-based line and column per token.
std::vector<RawToken> tokenize(const std::string& text) {
  std::vector<RawToken> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
      continue;
    }
    std::size_t start = i, start_col = col;
    while (i < text.size() && !is_space(text[i])) {
      ++i;
      ++col;
    }
    out.push_back({std::string_view(text).substr(start, i - start), line,
                   start_col});
  }
  return out;
}

Token parse_int(const RawToken& tok) {
  Token value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw DataFormatError("expected an integer, got '" +
                              std::string(tok.text) + "'",
                          tok.line, tok.column);
  }
  return value;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

LoadedArray parse_array_text(const std::string& text) {
  auto tokens = tokenize(text);
  if (tokens.empty()) throw DataFormatError("empty dataset", 1, 1);

  if (tokens[0].text == "dims") {
    std::vector<Index> dims;
    std::size_t i = 1;
    while (i < tokens.size() && tokens[i].line == tokens[0].line) {
      Token v = parse_int(tokens[i]);
      if (v < 1) {
        throw DataFormatError("grid extents must be positive", tokens[i].line,
                              tokens[i].column);
      }
      dims.push_back(static_cast<Index>(v));
      ++i;
    }
    if (dims.empty()) {
      throw DataFormatError("'dims' header lists no extents", tokens[0].line,
                            tokens[0].column);
    }
    std::vector<Token> values;
    values.reserve(tokens.size() - i);
    for (; i < tokens.size(); ++i) values.push_back(parse_int(tokens[i]));
    return GridArray(values, dims);  // may throw DimensionMismatchError
  }

  std::vector<Token> values;
  values.reserve(tokens.size());
  for (const auto& tok : tokens) values.push_back(parse_int(tok));
  return RankedArray(values);
}

std::vector<std::vector<Token>> parse_query_text(const std::string& text) {
  // One row per source line.
  std::vector<std::vector<Token>> rows;
  std::size_t current_line = 0;
  for (const auto& tok : tokenize(text)) {
    if (tok.line != current_line) {
      rows.emplace_back();
      current_line = tok.line;
    }
    rows.back().push_back(parse_int(tok));
  }
  return rows;
}

LoadedArray load_array(const std::filesystem::path& path) {
  return parse_array_text(read_file(path));
}

std::vector<std::vector<Token>> load_query_rows(
    const std::filesystem::path& path) {
  return parse_query_text(read_file(path));
}

}  // namespace rangemode
