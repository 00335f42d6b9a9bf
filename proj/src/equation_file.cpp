#include "utsolve/equation_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace utsolve {

namespace {

struct Line {
  int number;
  std::string text;
};

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back({number, line});
  }
  return out;
}

// Whitespace-separated fields with their 1-based columns.
std::vector<std::pair<std::string, int>> fields(const std::string& line) {
  std::vector<std::pair<std::string, int>> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.emplace_back(line.substr(start, i - start), static_cast<int>(start) + 1);
  }
  return out;
}

long long parse_integer(const std::pair<std::string, int>& field, int line) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(field.first, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != field.first.size() || field.first.empty()) {
    throw ParseError("expected an integer, got '" + field.first + "'", line, field.second);
  }
  return v;
}

long long header_value(const Line& line, const std::string& key) {
  const auto f = fields(line.text);
  if (f.empty() || f[0].first != key) throw ParseError("expected '" + key + " <value>'", line.number, 1);
  if (f.size() != 2) throw ParseError("'" + key + "' takes exactly one value", line.number, f[0].second);
  return parse_integer(f[1], line.number);
}

}  // namespace

CoefficientTable EquationFile::table() const {
  CoefficientTable t;
  for (const auto& [name, g] : matrices) t.insert_or_assign(name, g);
  return t;
}

Word EquationFile::word() const {
  try {
    return parse_word(word_text, table(), p, n);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), word_line, word_column + e.column() - 1);
  }
}

EquationFile parse_equation_file(std::string_view text) {
  const auto lines = significant_lines(text);
  EquationFile file;
  std::size_t at = 0;
  if (at >= lines.size()) throw ParseError("missing 'p <prime>' header", 1, 1);
  const long long p = header_value(lines[at], "p");
  if (p < 2 || p >= (1LL << 31) || !is_prime(static_cast<std::uint64_t>(p))) {
    throw ParseError("p = " + std::to_string(p) + " is not a prime", lines[at].number, 3);
  }
  file.p = static_cast<Residue>(p);
  ++at;
  if (at >= lines.size()) throw ParseError("missing 'n <size>' header", lines.back().number + 1, 1);
  const long long n = header_value(lines[at], "n");
  if (n < 2 || n > 64) throw ParseError("n = " + std::to_string(n) + " is out of range 2..64", lines[at].number, 3);
  file.n = static_cast<int>(n);
  ++at;

  while (at < lines.size()) {
    const Line& line = lines[at];
    const auto f = fields(line.text);
    if (f[0].first == "matrix") {
      if (f.size() != 2) throw ParseError("expected 'matrix <name>'", line.number, f[0].second);
      const std::string& name = f[1].first;
      if (name == "x" || !std::isalpha(static_cast<unsigned char>(name[0]))) {
        throw ParseError("invalid matrix name '" + name + "'", line.number, f[1].second);
      }
      for (const auto& [existing, g] : file.matrices) {
        if (existing == name) throw ParseError("matrix " + name + " declared twice", line.number, f[1].second);
      }
      std::vector<std::vector<long long>> rows;
      for (int r = 0; r < file.n; ++r) {
        ++at;
        if (at >= lines.size()) throw ParseError("matrix " + name + " is missing rows", line.number, 1);
        const auto row_fields = fields(lines[at].text);
        std::vector<long long> row;
        for (const auto& field : row_fields) row.push_back(parse_integer(field, lines[at].number));
        if (static_cast<int>(row.size()) != file.n) {
          throw ParseError("expected " + std::to_string(file.n) + " entries", lines[at].number, 1);
        }
        rows.push_back(std::move(row));
      }
      try {
        file.matrices.emplace_back(name, matrix_from_rows(rows, file.p));
      } catch (const MatrixFormatError& e) {
        throw ParseError("matrix " + name + ": " + e.what(), line.number, f[1].second);
      }
      ++at;
    } else if (f[0].first == "word") {
      if (!file.word_text.empty()) throw ParseError("second 'word' line", line.number, 1);
      if (f.size() < 2) throw ParseError("empty word", line.number, f[0].second);
      file.word_line = line.number;
      file.word_column = f[1].second;
      file.word_text = line.text.substr(static_cast<std::size_t>(f[1].second - 1));
      ++at;
    } else {
      throw ParseError("unexpected '" + f[0].first + "'", line.number, f[0].second);
    }
  }
  if (file.word_text.empty()) throw ParseError("missing 'word' line", lines.empty() ? 1 : lines.back().number, 1);
  file.word();  // validates tokens and bindings
  return file;
}

EquationFile load_equation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_equation_file(buffer.str());
}

}  // namespace utsolve
