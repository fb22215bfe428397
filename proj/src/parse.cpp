#include "qinst/parse.hpp"

#include <cctype>
#include <charconv>
#include <optional>

#include "qinst/galois.hpp"

namespace qinst::parse {
namespace {

enum class Tok { Number, Ident, Star, Caret, Plus, Minus, LParen, RParen, LBracket, RBracket, Comma, Slash, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int column = 1;
  bool glued = false;  // no whitespace before this token
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, column = 1;
  bool glued = false;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
      if (src[i + j] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    i += n;
  };
  while (i < src.size()) {
    const unsigned char ch = src[i];
    if (std::isspace(ch)) {
      advance(1);
      glued = false;
      continue;
    }
    Token t;
    t.line = line;
    t.column = column;
    t.glued = glued;
    std::size_t len = 1;
    if (std::isdigit(ch)) {
      while (i + len < src.size() && std::isdigit(static_cast<unsigned char>(src[i + len]))) ++len;
      t.kind = Tok::Number;
    } else if (std::isalpha(ch)) {
      while (i + len < src.size() && std::isalnum(static_cast<unsigned char>(src[i + len]))) ++len;
      t.kind = Tok::Ident;
    } else {
      switch (ch) {
        case '*': t.kind = Tok::Star; break;
        case '^': t.kind = Tok::Caret; break;
        case '+': t.kind = Tok::Plus; break;
        case '-': t.kind = Tok::Minus; break;
        case '(': t.kind = Tok::LParen; break;
        case ')': t.kind = Tok::RParen; break;
        case '[': t.kind = Tok::LBracket; break;
        case ']': t.kind = Tok::RBracket; break;
        case ',': t.kind = Tok::Comma; break;
        case '/': t.kind = Tok::Slash; break;
        default:
          throw ParseError(line, column, "unexpected character '" + std::string(1, static_cast<char>(ch)) + "'");
      }
    }
    t.text = std::string(src.substr(i, len));
    advance(len);
    out.push_back(std::move(t));
    glued = true;
  }
  Token end;
  end.line = line;
  end.column = column;
  out.push_back(end);
  return out;
}

std::optional<Context> home_context(const std::string& name) {
  if (name.size() == 2 && name[0] == 'z' && name[1] >= '1' && name[1] <= '4') return Context::P;
  if (name == "A" || name == "B" || name == "RR" || name == "An" || name == "Bn") return Context::P;
  if (name == "a" || name == "b" || name == "c" || name == "d") return Context::SU2;
  if (name == "r") return Context::C;
  return std::nullopt;
}

class Parser {
 public:
  Parser(std::string_view src, Context ctx) : tokens_(lex(src)), ctx_(ctx) {}

  ExprAst run() {
    ExprAst ast;
    ast.context = ctx_;
    if (peek().kind == Tok::End) error(peek(), "empty expression");
    bool negative = false;
    if (peek().kind == Tok::Minus) {
      next();
      negative = true;
    }
    while (true) {
      Term t = term();
      if (negative) t.coeff = -t.coeff;
      ast.terms.push_back(std::move(t));
      if (peek().kind == Tok::Plus) {
        negative = false;
      } else if (peek().kind == Tok::Minus) {
        negative = true;
      } else {
        break;
      }
      next();
    }
    if (peek().kind != Tok::End) error(peek(), "unexpected '" + peek().text + "'");
    return ast;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  [[noreturn]] void error(const Token& t, const std::string& msg) const { throw ParseError(t.line, t.column, msg); }
  const Token& expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) error(peek(), "expected " + what);
    return next();
  }

  bool starts_atom(const Token& t) const {
    return t.kind == Tok::Number || t.kind == Tok::LParen || t.kind == Tok::Minus ||
           (t.kind == Tok::Ident && t.text == "q");
  }
  bool starts_factor(const Token& t) const { return t.kind == Tok::Ident && t.text != "q"; }

  int integer(bool allow_sign) {
    bool neg = false;
    if (allow_sign && peek().kind == Tok::Minus) {
      next();
      neg = true;
    }
    const Token& t = expect(Tok::Number, "an integer");
    int v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc{}) error(t, "integer out of range");
    return neg ? -v : v;
  }

  Term term() {
    Term t;
    t.line = peek().line;
    t.column = peek().column;
    if (starts_atom(peek())) {
      t.coeff = coeff();
      if (peek().kind != Tok::Star) return t;
      next();
      if (!starts_factor(peek())) error(peek(), "expected a generator after '*'");
    } else if (!starts_factor(peek())) {
      error(peek(), peek().kind == Tok::End ? "unexpected end of expression" : "unexpected '" + peek().text + "'");
    }
    while (true) {
      if (starts_factor(peek())) {
        t.factors.push_back(factor());
      } else if (peek().kind == Tok::Star && !peek().glued && starts_factor(peek(1))) {
        next();
      } else {
        break;
      }
    }
    return t;
  }

  Laurent coeff() {
    Laurent c = atom();
    while (peek().kind == Tok::Star && starts_atom(peek(1))) {
      next();
      c *= atom();
    }
    return c;
  }

  Laurent atom() {
    const Token& t = peek();
    if (t.kind == Tok::Minus) {
      next();
      return -atom();
    }
    if (t.kind == Tok::Number) {
      std::string text = next().text;
      if (peek().kind == Tok::Slash) {
        next();
        text += "/" + expect(Tok::Number, "a denominator").text;
      }
      try {
        return Laurent(parse_rational(text));
      } catch (const std::invalid_argument& e) {
        error(t, e.what());
      }
    }
    if (t.kind == Tok::Ident && t.text == "q") {
      next();
      if (peek().kind != Tok::Caret) return q_pow(1);
      next();
      return q_pow(integer(true));
    }
    if (t.kind == Tok::LParen) {
      next();
      Laurent sum = coeff();
      while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
        const bool minus = next().kind == Tok::Minus;
        Laurent rhs = coeff();
        sum += minus ? -rhs : rhs;
      }
      expect(Tok::RParen, "')'");
      return sum;
    }
    error(t, "expected a coefficient");
  }

  Factor factor() {
    const Token& t = next();
    Factor f;
    f.name = t.text;
    f.line = t.line;
    f.column = t.column;
    const auto home = home_context(t.text);
    if (!home) error(t, "unknown token '" + t.text + "'");
    if (*home != ctx_)
      error(t, "token '" + t.text + "' belongs to context " + to_string(*home) + ", not " + to_string(ctx_));

    switch (ctx_) {
      case Context::P:
        if (t.text[0] == 'z') {
          f.kind = Factor::Kind::Generator;
          f.gen = s7::z(t.text[1] - '0');
        } else {
          f.kind = Factor::Kind::Named;
          if (t.text == "An" || t.text == "Bn") {
            expect(Tok::LParen, "'(' after " + t.text);
            f.argument = integer(true);
            expect(Tok::RParen, "')'");
          }
        }
        if (peek().kind == Tok::Star && peek().glued && t.text != "RR") {
          next();
          f.starred = true;
          f.name += "*";
          if (f.kind == Factor::Kind::Generator) f.gen = s7::star(f.gen);
        }
        break;
      case Context::SU2:
        f.kind = Factor::Kind::Su2Letter;
        f.letter = static_cast<su2::Letter>(t.text[0] - 'a');
        break;
      case Context::C: {
        f.kind = Factor::Kind::Basis;
        expect(Tok::LBracket, "'[' after r");
        const int k = integer(true);
        expect(Tok::Comma, "','");
        const Token& mt = peek();
        const int m = integer(true);
        expect(Tok::Comma, "','");
        const Token& nt = peek();
        const int n = integer(true);
        expect(Tok::RBracket, "']'");
        if (m < 0) error(mt, "negative m index in r[k,m,n]");
        if (n < 0) error(nt, "negative n index in r[k,m,n]");
        f.index = cmod::CIndex{k, m, n};
        break;
      }
    }
    if (peek().kind == Tok::Caret) {
      const Token& caret = next();
      if (ctx_ == Context::C) error(caret, "basis elements of C take no exponent");
      if (peek().kind == Tok::Minus) error(peek(), "negative exponent on generator '" + f.name + "'");
      f.exponent = integer(false);
    }
    return f;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Context ctx_;
};

s7::Element named_value(const Factor& f) {
  if (f.name == "RR") return galois::b_generators().R;
  if (f.name.rfind("An", 0) == 0) return f.starred ? galois::a_star_n(f.argument) : galois::a_n(f.argument);
  if (f.name.rfind("Bn", 0) == 0) return f.starred ? galois::b_star_n(f.argument) : galois::b_n(f.argument);
  if (f.name[0] == 'A') return f.starred ? galois::a_star_n(0) : galois::a_n(0);
  return f.starred ? galois::b_star_n(0) : galois::b_n(0);
}

}  // namespace

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

std::string to_string(Context c) {
  switch (c) {
    case Context::P: return "P";
    case Context::SU2: return "SU2";
    case Context::C: return "C";
  }
  return "?";
}

Context parse_context(std::string_view text) {
  std::string up;
  for (char ch : text) up += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (up == "P") return Context::P;
  if (up == "SU2") return Context::SU2;
  if (up == "C") return Context::C;
  throw std::invalid_argument("unknown context '" + std::string(text) + "' (expected P, SU2 or C)");
}

ExprAst parse(std::string_view source, Context context) { return Parser(source, context).run(); }

s7::Element elaborate_p(const ExprAst& ast) {
  if (ast.context != Context::P) throw std::invalid_argument("elaborate_p: expression was parsed in another context");
  s7::Element out;
  for (const auto& t : ast.terms) {
    s7::Element prod = s7::unit();
    for (const auto& f : t.factors) {
      const s7::Element v = f.kind == Factor::Kind::Generator ? s7::gen(f.gen) : named_value(f);
      for (int i = 0; i < f.exponent; ++i) prod = s7::mul(prod, v);
    }
    out.add(prod, t.coeff);
  }
  return out;
}

su2::Element elaborate_su2(const ExprAst& ast) {
  if (ast.context != Context::SU2)
    throw std::invalid_argument("elaborate_su2: expression was parsed in another context");
  su2::Element out;
  for (const auto& t : ast.terms) {
    su2::Word w;
    for (const auto& f : t.factors) w.insert(w.end(), f.exponent, f.letter);
    out.add(su2::nf(w), t.coeff);
  }
  return out;
}

cmod::CElement elaborate_c(const ExprAst& ast) {
  if (ast.context != Context::C) throw std::invalid_argument("elaborate_c: expression was parsed in another context");
  cmod::CElement out;
  for (const auto& t : ast.terms) {
    if (t.factors.empty() && t.coeff.is_zero()) continue;
    if (t.factors.size() != 1) {
      const int line = t.factors.empty() ? t.line : t.factors[1].line;
      const int column = t.factors.empty() ? t.column : t.factors[1].column;
      throw ParseError(line, column, "each term of a C element takes exactly one basis element r[k,m,n]");
    }
    out.add(t.factors[0].index, t.coeff);
  }
  return out;
}

}  // namespace qinst::parse
