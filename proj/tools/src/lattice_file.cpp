#include "lattice_file.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

namespace permorb::cli {

namespace {

class Scanner {
 public:
  Scanner(const std::string& text, const std::string& source) : s_(text), source_(source) {}

  [[noreturn]] void fail(const std::string& what) const { throw LatticeFileError(source_, line_, col_, what); }

  bool at_end() {
    skip();
    return pos_ >= s_.size();
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  std::string identifier() {
    skip();
    std::string id;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      id += s_[pos_];
      advance();
    }
    if (id.empty()) fail("expected a key");
    return id;
  }

  std::int64_t integer() {
    skip();
    std::string digits;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      digits += s_[pos_];
      advance();
    }
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      digits += s_[pos_];
      advance();
    }
    if (digits.empty() || digits == "-" || digits == "+") fail("expected an integer");
    try {
      return std::stoll(digits);
    } catch (const std::out_of_range&) {
      fail("integer out of range");
    }
  }

  // Quoted string, or bare text up to end of line / comment.
  std::string text_value() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) advance();
    std::string out;
    if (pos_ < s_.size() && s_[pos_] == '"') {
      advance();
      while (pos_ < s_.size() && s_[pos_] != '"' && s_[pos_] != '\n') {
        out += s_[pos_];
        advance();
      }
      if (pos_ >= s_.size() || s_[pos_] != '"') fail("unterminated string");
      advance();
      return out;
    }
    while (pos_ < s_.size() && s_[pos_] != '\n' && s_[pos_] != '#') {
      out += s_[pos_];
      advance();
    }
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
    if (out.empty()) fail("expected a name");
    return out;
  }

  int line() const { return line_; }
  int column() const { return col_; }

 private:
  const std::string& s_;
  std::string source_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;

  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        advance();
      } else if (s_[pos_] == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }
};

IntMatrix matrix(Scanner& sc) {
  IntMatrix rows;
  sc.expect('[');
  if (sc.peek() == ']') sc.fail("empty gram matrix");
  while (true) {
    std::vector<std::int64_t> row;
    sc.expect('[');
    if (sc.peek() != ']') {
      row.push_back(sc.integer());
      while (sc.peek() == ',') {
        sc.expect(',');
        row.push_back(sc.integer());
      }
    }
    sc.expect(']');
    rows.push_back(std::move(row));
    if (sc.peek() != ',') break;
    sc.expect(',');
  }
  sc.expect(']');
  return rows;
}

}  // namespace

Lattice parse_lattice_text(const std::string& text, const std::string& source) {
  Scanner sc(text, source);
  std::string name;
  std::optional<std::int64_t> rank;
  std::optional<IntMatrix> gram;
  int gram_line = 1, gram_col = 1;
  while (!sc.at_end()) {
    const int kl = sc.line(), kc = sc.column();
    const std::string key = sc.identifier();
    sc.expect('=');
    if (key == "name") {
      name = sc.text_value();
    } else if (key == "rank") {
      rank = sc.integer();
      if (*rank < 1) throw LatticeFileError(source, kl, kc, "rank must be positive");
    } else if (key == "gram") {
      sc.peek();
      gram_line = sc.line();
      gram_col = sc.column();
      gram = matrix(sc);
    } else {
      throw LatticeFileError(source, kl, kc, "unknown key '" + key + "'");
    }
  }
  if (!gram) throw LatticeFileError(source, sc.line(), sc.column(), "missing 'gram'");
  for (const auto& row : *gram)
    if (row.size() != gram->size()) throw LatticeFileError(source, gram_line, gram_col, "gram matrix is not square");
  if (rank && *rank != static_cast<std::int64_t>(gram->size()))
    throw LatticeFileError(source, gram_line, gram_col,
                           "rank " + std::to_string(*rank) + " does not match gram size " + std::to_string(gram->size()));
  try {
    return Lattice(*gram, name);
  } catch (const std::invalid_argument& e) {
    throw LatticeFileError(source, gram_line, gram_col, e.what());
  }
}

Lattice parse_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lattice file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_lattice_text(buf.str(), path);
}

}  // namespace permorb::cli
