#include "dmt/parser.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <sstream>

namespace dmt {

namespace {

std::string describe(const std::vector<std::string>& expected, const std::string& found) {
  std::ostringstream os;
  os << "expected ";
  if (expected.size() == 1) {
    os << expected.front();
  } else {
    os << "one of {";
    for (std::size_t i = 0; i < expected.size(); ++i) os << (i ? ", " : "") << expected[i];
    os << '}';
  }
  os << ", found " << found;
  return os.str();
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
                       std::string found)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + describe(expected, found)),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

enum class Tok {
  End,
  Ident,
  True,
  False,
  Not,
  And,
  Or,
  Implies,
  Iff,
  Cond,      // |~
  LParen,
  RParen,
  LBrack,    // [
  RBrack,    // ]
  LBrack2,   // [[
  RBrack2,   // ]]
  LAngle,    // <
  RAngle,    // >
  LAngle2,   // <<
  RAngle2,   // >>
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

const char* spelling(Tok t) {
  switch (t) {
    case Tok::End: return "end of input";
    case Tok::Ident: return "identifier";
    case Tok::True: return "'true'";
    case Tok::False: return "'false'";
    case Tok::Not: return "'~'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Implies: return "'->'";
    case Tok::Iff: return "'<->'";
    case Tok::Cond: return "'|~'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrack: return "'['";
    case Tok::RBrack: return "']'";
    case Tok::LBrack2: return "'[['";
    case Tok::RBrack2: return "']]'";
    case Tok::LAngle: return "'<'";
    case Tok::RAngle: return "'>'";
    case Tok::LAngle2: return "'<<'";
    case Tok::RAngle2: return "'>>'";
  }
  return "?";
}

// Longest match first.
constexpr std::array<std::pair<std::string_view, Tok>, 15> kPunctuation{{
    {"<->", Tok::Iff},
    {"->", Tok::Implies},
    {"|~", Tok::Cond},
    {"[[", Tok::LBrack2},
    {"]]", Tok::RBrack2},
    {"<<", Tok::LAngle2},
    {">>", Tok::RAngle2},
    {"~", Tok::Not},
    {"&", Tok::And},
    {"|", Tok::Or},
    {"(", Tok::LParen},
    {")", Tok::RParen},
    {"[", Tok::LBrack},
    {"]", Tok::RBrack},
    {"<", Tok::LAngle},
}};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_blank();
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, "", line_, column_});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i, ++pos_) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
    }
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance(1);
      } else {
        break;
      }
    }
  }

  Token next() {
    const std::size_t line = line_, column = column_;
    const std::string_view rest = text_.substr(pos_);
    if (std::isalpha(static_cast<unsigned char>(rest.front()))) {
      std::size_t n = 1;
      while (n < rest.size() &&
             (std::isalnum(static_cast<unsigned char>(rest[n])) || rest[n] == '_')) {
        ++n;
      }
      std::string word(rest.substr(0, n));
      advance(n);
      Tok kind = word == "true" ? Tok::True : word == "false" ? Tok::False : Tok::Ident;
      return {kind, std::move(word), line, column};
    }
    if (rest.front() == '>') {
      const std::size_t n = rest.starts_with(">>") ? 2 : 1;
      advance(n);
      return {n == 2 ? Tok::RAngle2 : Tok::RAngle, std::string(rest.substr(0, n)), line, column};
    }
    for (const auto& [spell, kind] : kPunctuation) {
      if (rest.starts_with(spell)) {
        advance(spell.size());
        return {kind, std::string(spell), line, column};
      }
    }
    throw ParseError(line, column, {"a formula token"},
                     "unexpected character '" + std::string(1, rest.front()) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Lexer(text).run()) {}

  Statement statement() {
    Statement st;
    Formula lhs = formula();
    if (peek().kind == Tok::Cond) {
      ++pos_;
      Formula rhs = formula();
      if (peek().kind == Tok::Cond) fail({"end of input (conditionals do not nest)"});
      st.is_conditional = true;
      st.conditional = {std::move(lhs), std::move(rhs)};
    } else {
      st.formula = std::move(lhs);
    }
    expect_end();
    return st;
  }

  Formula lone_formula() {
    Formula f = formula();
    expect_end();
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.line, t.column, std::move(expected), std::move(found));
  }

  void expect(Tok kind) {
    if (peek().kind != kind) fail({spelling(kind)});
    ++pos_;
  }

  void expect_end() {
    if (peek().kind != Tok::End) {
      fail({spelling(Tok::End), "'&'", "'|'", "'->'", "'<->'"});
    }
  }

  std::string identifier() {
    if (peek().kind != Tok::Ident) fail({spelling(Tok::Ident)});
    return tokens_[pos_++].text;
  }

  Formula formula() { return iff(); }

  Formula iff() {
    Formula f = imp();
    while (peek().kind == Tok::Iff) {
      ++pos_;
      f = Formula::equivalence(std::move(f), imp());
    }
    return f;
  }

  Formula imp() {
    Formula f = disj();
    if (peek().kind == Tok::Implies) {
      ++pos_;
      return Formula::implication(std::move(f), imp());
    }
    return f;
  }

  Formula disj() {
    Formula f = conj();
    while (peek().kind == Tok::Or) {
      ++pos_;
      f = Formula::disjunction(std::move(f), conj());
    }
    return f;
  }

  Formula conj() {
    Formula f = unary();
    while (peek().kind == Tok::And) {
      ++pos_;
      f = Formula::conjunction(std::move(f), unary());
    }
    return f;
  }

  Formula unary() {
    switch (peek().kind) {
      case Tok::Not:
        ++pos_;
        return Formula::negation(unary());
      case Tok::LBrack: {
        ++pos_;
        std::string m = identifier();
        expect(Tok::RBrack);
        return Formula::box(std::move(m), unary());
      }
      case Tok::LAngle: {
        ++pos_;
        std::string m = identifier();
        expect(Tok::RAngle);
        return Formula::dia(std::move(m), unary());
      }
      case Tok::LBrack2: {
        ++pos_;
        std::string m = identifier();
        expect(Tok::RBrack2);
        return Formula::def_box(std::move(m), unary());
      }
      case Tok::LAngle2: {
        ++pos_;
        std::string m = identifier();
        expect(Tok::RAngle2);
        return Formula::def_dia(std::move(m), unary());
      }
      case Tok::True:
        ++pos_;
        return Formula::top();
      case Tok::False:
        ++pos_;
        return Formula::bottom();
      case Tok::Ident:
        return Formula::atom(tokens_[pos_++].text);
      case Tok::LParen: {
        ++pos_;
        Formula f = formula();
        expect(Tok::RParen);
        return f;
      }
      default:
        fail({"'~'", "'['", "'<'", "'[['", "'<<'", "'true'", "'false'", "identifier", "'('"});
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).lone_formula(); }

Statement parse_statement(std::string_view text) { return Parser(text).statement(); }

}  // namespace dmt
