#include "hfset/system_parser.hpp"

#include <charconv>
#include <string>
#include <unordered_map>

#include "hfset/errors.hpp"

namespace hfset {
namespace {

enum class Tok { name, number, lbrace, rbrace, comma, equals, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

constexpr std::string_view kNu = "\xCE\xBD";  // ν in UTF-8

bool name_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool digit(char c) { return c >= '0' && c <= '9'; }
bool name_char(char c) { return name_start(c) || digit(c); }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_blank();
    const std::size_t line = line_, column = column_;
    if (pos_ == text_.size()) return {Tok::end, "", line, column};
    const char c = text_[pos_];
    auto single = [&](Tok kind) {
      advance(1);
      return Token{kind, std::string(1, c), line, column};
    };
    switch (c) {
      case '{': return single(Tok::lbrace);
      case '}': return single(Tok::rbrace);
      case ',': return single(Tok::comma);
      case '=': return single(Tok::equals);
      default: break;
    }
    if (digit(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && digit(text_[pos_])) advance(1);
      return {Tok::number, std::string(text_.substr(start, pos_ - start)), line, column};
    }
    const bool nu = text_.substr(pos_, kNu.size()) == kNu;
    if (nu || name_start(c)) {
      const std::size_t start = pos_;
      if (nu) {
        pos_ += kNu.size();
        ++column_;
      } else {
        advance(1);
      }
      while (pos_ < text_.size() && name_char(text_[pos_])) advance(1);
      return {Tok::name, std::string(text_.substr(start, pos_ - start)), line, column};
    }
    throw ParseError(line, column, "unexpected character '" + std::string(1, c) + "'");
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
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance(1);
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance(1);
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

const char* describe(Tok kind) {
  switch (kind) {
    case Tok::name: return "a name";
    case Tok::number: return "a natural number";
    case Tok::lbrace: return "'{'";
    case Tok::rbrace: return "'}'";
    case Tok::comma: return "','";
    case Tok::equals: return "'='";
    case Tok::end: return "end of input";
  }
  return "?";
}

class Parser {
 public:
  Parser(Universe& universe, std::string_view text) : universe_(universe), lexer_(text) { shift(); }

  FlatSystem system() {
    FlatSystem out;
    struct Use {
      std::string name;
      std::size_t line, column;
    };
    std::vector<Use> uses;
    std::unordered_map<std::string, std::pair<std::size_t, std::size_t>> declared;
    auto declare = [&](const Token& t) {
      if (!declared.emplace(t.text, std::pair{t.line, t.column}).second) {
        throw ParseError(t.line, t.column, "'" + t.text + "' is defined twice");
      }
    };

    while (tok_.kind != Tok::end) {
      const Token head = expect(Tok::name);
      if (head.text == "atom") {
        const Token name = expect(Tok::name);
        reject_keyword(name);
        declare(name);
        expect(Tok::equals);
        out.atoms.push_back({name.text, literal()});
        continue;
      }
      reject_keyword(head);
      declare(head);
      expect(Tok::equals);
      expect(Tok::lbrace);
      Equation eq{head.text, {}};
      if (tok_.kind != Tok::rbrace) {
        for (;;) {
          const Token m = expect(Tok::name);
          reject_keyword(m);
          uses.push_back({m.text, m.line, m.column});
          eq.members.push_back(m.text);
          if (tok_.kind != Tok::comma) break;
          shift();
        }
      }
      expect(Tok::rbrace);
      out.equations.push_back(std::move(eq));
    }

    for (const Use& u : uses) {
      if (declared.count(u.name) == 0) {
        throw ParseError(u.line, u.column, "undeclared name '" + u.name + "'");
      }
    }
    return out;
  }

  SetId single_literal() {
    const SetId s = literal();
    expect(Tok::end);
    return s;
  }

  std::vector<SetId> literal_list() {
    std::vector<SetId> out;
    if (tok_.kind == Tok::end) return out;
    for (;;) {
      out.push_back(literal());
      if (tok_.kind != Tok::comma) break;
      shift();
    }
    expect(Tok::end);
    return out;
  }

 private:
  void shift() { tok_ = lexer_.next(); }

  Token expect(Tok kind) {
    if (tok_.kind != kind) {
      throw ParseError(tok_.line, tok_.column,
                       std::string("expected ") + describe(kind) + ", found " + describe(tok_.kind));
    }
    Token t = std::move(tok_);
    shift();
    return t;
  }

  static void reject_keyword(const Token& t) {
    if (t.text == "atom") throw ParseError(t.line, t.column, "'atom' is a reserved word");
  }

  SetId literal() {
    if (tok_.kind == Tok::number) {
      const Token t = expect(Tok::number);
      std::size_t n = 0;
      const auto [end, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), n);
      if (ec != std::errc{} || end != t.text.data() + t.text.size()) {
        throw ParseError(t.line, t.column, "natural '" + t.text + "' is out of range");
      }
      return universe_.vn(n);
    }
    expect(Tok::lbrace);
    std::vector<SetId> members;
    if (tok_.kind != Tok::rbrace) {
      for (;;) {
        members.push_back(literal());
        if (tok_.kind != Tok::comma) break;
        shift();
      }
    }
    expect(Tok::rbrace);
    return universe_.make_set(members);
  }

  Universe& universe_;
  Lexer lexer_;
  Token tok_{Tok::end, "", 1, 1};
};

}  // namespace

FlatSystem parse_system(Universe& universe, std::string_view text) { return Parser(universe, text).system(); }

SetId parse_set_literal(Universe& universe, std::string_view text) {
  return Parser(universe, text).single_literal();
}

std::vector<SetId> parse_set_list(Universe& universe, std::string_view text) {
  return Parser(universe, text).literal_list();
}

}  // namespace hfset
