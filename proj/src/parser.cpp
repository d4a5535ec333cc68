#include "hct/parser.hpp"

#include <cctype>

namespace hct {

namespace {

enum class Tok {
  Ident,
  KwDef,
  KwPostulate,
  KwFun,
  Universe,   // U0/U1/U2
  Builtin,    // Nat zero Bool true false Empty Unit star
  Colon,      // :
  ColonEq,    // :=
  Semi,       // ;
  Arrow,      // ->
  DArrow,     // =>
  Star,       // *
  LParen,
  RParen,
  Comma,
  Eof,
};

struct Token {
  Tok kind;
  std::string text;
  Level level = 0;
  TermTag builtin{};
  SourceSpan span;
};

struct Lexer {
  const std::string& src;
  const std::string& path;
  size_t pos = 0;
  int line = 1;
  int col = 1;

  Lexer(const std::string& s, const std::string& p) : src(s), path(p) {}

  [[noreturn]] void fail(const std::string& msg, int l, int c) {
    CheckError e(Category::LexError, msg);
    e.span = SourceSpan::point(path, l, c);
    throw e;
  }

  void advance() {
    if (src[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skip_trivia() {
    while (pos < src.size()) {
      char c = src[pos];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '-' && pos + 1 < src.size() && src[pos + 1] == '-') {
        while (pos < src.size() && src[pos] != '\n') advance();
      } else {
        break;
      }
    }
  }

  static bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  Token next() {
    skip_trivia();
    int l = line, c = col;
    auto tok = [&](Tok k, std::string text) {
      Token t{k, std::move(text), 0, TermTag::Var,
              SourceSpan{path, l, c, line, col}};
      return t;
    };
    if (pos >= src.size()) return tok(Tok::Eof, "");
    char ch = src[pos];
    if (ident_start(ch)) {
      size_t start = pos;
      while (pos < src.size() && ident_char(src[pos])) advance();
      std::string word = src.substr(start, pos - start);
      Token t = tok(Tok::Ident, word);
      if (word == "def") t.kind = Tok::KwDef;
      else if (word == "postulate") t.kind = Tok::KwPostulate;
      else if (word == "fun") t.kind = Tok::KwFun;
      else if (word == "U0" || word == "U1" || word == "U2") {
        t.kind = Tok::Universe;
        t.level = static_cast<Level>(word[1] - '0');
      } else if (word == "Nat") { t.kind = Tok::Builtin; t.builtin = TermTag::Nat; }
      else if (word == "zero") { t.kind = Tok::Builtin; t.builtin = TermTag::Zero; }
      else if (word == "Bool") { t.kind = Tok::Builtin; t.builtin = TermTag::Bool; }
      else if (word == "true") { t.kind = Tok::Builtin; t.builtin = TermTag::True; }
      else if (word == "false") { t.kind = Tok::Builtin; t.builtin = TermTag::False; }
      else if (word == "Empty") { t.kind = Tok::Builtin; t.builtin = TermTag::Empty; }
      else if (word == "Unit") { t.kind = Tok::Builtin; t.builtin = TermTag::Unit; }
      else if (word == "star") { t.kind = Tok::Builtin; t.builtin = TermTag::Star; }
      return t;
    }
    switch (ch) {
      case ':':
        advance();
        if (pos < src.size() && src[pos] == '=') {
          advance();
          return tok(Tok::ColonEq, ":=");
        }
        return tok(Tok::Colon, ":");
      case ';':
        advance();
        return tok(Tok::Semi, ";");
      case '-':
        advance();
        if (pos < src.size() && src[pos] == '>') {
          advance();
          return tok(Tok::Arrow, "->");
        }
        fail("stray '-' (expected '->' or a '--' comment)", l, c);
      case '=':
        advance();
        if (pos < src.size() && src[pos] == '>') {
          advance();
          return tok(Tok::DArrow, "=>");
        }
        fail("stray '=' (expected '=>' or ':=')", l, c);
      case '*':
        advance();
        return tok(Tok::Star, "*");
      case '(':
        advance();
        return tok(Tok::LParen, "(");
      case ')':
        advance();
        return tok(Tok::RParen, ")");
      case ',':
        advance();
        return tok(Tok::Comma, ",");
      default:
        fail(std::string("illegal character '") + ch + "'", l, c);
    }
  }
};

std::vector<Token> lex_all(const std::string& src, const std::string& path) {
  Lexer lx(src, path);
  std::vector<Token> out;
  for (;;) {
    Token t = lx.next();
    bool done = t.kind == Tok::Eof;
    out.push_back(std::move(t));
    if (done) break;
  }
  return out;
}

struct Parser {
  std::vector<Token> toks;
  size_t pos = 0;

  const Token& peek(size_t ahead = 0) const {
    size_t i = pos + ahead;
    return i < toks.size() ? toks[i] : toks.back();
  }
  const Token& advance() { return toks[pos < toks.size() - 1 ? pos++ : pos]; }

  [[noreturn]] void fail(const std::string& msg) {
    CheckError e(Category::ParseError, msg + " (found '" +
                                           (peek().kind == Tok::Eof
                                                ? std::string("end of file")
                                                : peek().text) +
                                           "')");
    e.span = peek().span;
    throw e;
  }

  Token expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) fail("expected " + what);
    return advance();
  }

  static SExprPtr node(SKind kind, SourceSpan span) {
    auto e = std::make_shared<SExpr>();
    e->kind = kind;
    e->span = std::move(span);
    return e;
  }

  bool at_atom_start() const {
    switch (peek().kind) {
      case Tok::Ident:
      case Tok::Universe:
      case Tok::Builtin:
      case Tok::LParen:
        return true;
      default:
        return false;
    }
  }

  // term := binder | arrow
  SExprPtr term() {
    if (peek().kind == Tok::KwFun) {
      Token fun = advance();
      Token name = expect(Tok::Ident, "a binder name after 'fun'");
      expect(Tok::DArrow, "'=>'");
      SExprPtr body = term();
      auto e = std::make_shared<SExpr>();
      e->kind = SKind::Fun;
      e->name = name.text;
      e->b = body;
      e->span = fun.span.to(body->span);
      return e;
    }
    return arrow();
  }

  // Dependent binder head: '(' IDENT ':' ... — only when that shape is
  // really present; '(' term ')' otherwise.
  bool at_dependent_binder() const {
    return peek().kind == Tok::LParen && peek(1).kind == Tok::Ident &&
           peek(2).kind == Tok::Colon;
  }

  // arrow := sigma [ "->" term ] | "(" IDENT ":" term ")" "->" term
  SExprPtr arrow() {
    if (at_dependent_binder()) {
      // Could still be a sigma binder; parse the head and dispatch.
      Token open = advance();
      Token name = advance();
      advance();  // ':'
      SExprPtr ann = term();
      expect(Tok::RParen, "')'");
      if (peek().kind == Tok::Arrow) {
        advance();
        SExprPtr cod = term();
        auto e = std::make_shared<SExpr>();
        e->kind = SKind::Pi;
        e->name = name.text;
        e->a = ann;
        e->b = cod;
        e->span = open.span.to(cod->span);
        return e;
      }
      if (peek().kind == Tok::Star) {
        advance();
        SExprPtr second = sigma();
        auto e = std::make_shared<SExpr>();
        e->kind = SKind::Sigma;
        e->name = name.text;
        e->a = ann;
        e->b = second;
        e->span = open.span.to(second->span);
        SExprPtr head = e;
        return arrow_tail(head);
      }
      fail("expected '->' or '*' after a dependent binder");
    }
    SExprPtr head = sigma();
    return arrow_tail(head);
  }

  SExprPtr arrow_tail(SExprPtr head) {
    if (peek().kind == Tok::Arrow) {
      advance();
      SExprPtr cod = term();
      auto e = std::make_shared<SExpr>();
      e->kind = SKind::Pi;
      e->a = head;
      e->b = cod;
      e->span = head->span.to(cod->span);
      return e;
    }
    return head;
  }

  // sigma := app [ "*" sigma ] | "(" IDENT ":" term ")" "*" sigma
  SExprPtr sigma() {
    if (at_dependent_binder()) {
      Token open = advance();
      Token name = advance();
      advance();  // ':'
      SExprPtr ann = term();
      expect(Tok::RParen, "')'");
      expect(Tok::Star, "'*' after a dependent pair binder");
      SExprPtr second = sigma();
      auto e = std::make_shared<SExpr>();
      e->kind = SKind::Sigma;
      e->name = name.text;
      e->a = ann;
      e->b = second;
      e->span = open.span.to(second->span);
      return e;
    }
    SExprPtr head = app();
    if (peek().kind == Tok::Star) {
      advance();
      SExprPtr second = sigma();
      auto e = std::make_shared<SExpr>();
      e->kind = SKind::Sigma;
      e->a = head;
      e->b = second;
      e->span = head->span.to(second->span);
      return e;
    }
    return head;
  }

  // app := atom { atom }
  SExprPtr app() {
    SExprPtr head = atom();
    while (at_atom_start()) {
      // A '(' might open a dependent binder belonging to an enclosing
      // arrow, never an argument.
      if (at_dependent_binder()) break;
      SExprPtr arg = atom();
      auto e = std::make_shared<SExpr>();
      e->kind = SKind::App;
      e->a = head;
      e->b = arg;
      e->span = head->span.to(arg->span);
      head = e;
    }
    return head;
  }

  SExprPtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident: {
        advance();
        auto e = node(SKind::Name, t.span);
        const_cast<SExpr*>(e.get())->name = t.text;
        return e;
      }
      case Tok::Universe: {
        advance();
        auto e = node(SKind::Universe, t.span);
        const_cast<SExpr*>(e.get())->level = t.level;
        return e;
      }
      case Tok::Builtin: {
        advance();
        auto e = node(SKind::Builtin, t.span);
        const_cast<SExpr*>(e.get())->builtin = t.builtin;
        return e;
      }
      case Tok::LParen: {
        Token open = advance();
        SExprPtr inner = term();
        if (peek().kind == Tok::Comma) {
          advance();
          SExprPtr snd = term();
          Token close = expect(Tok::RParen, "')'");
          auto e = std::make_shared<SExpr>();
          e->kind = SKind::PairLit;
          e->a = inner;
          e->b = snd;
          e->span = open.span.to(close.span);
          return e;
        }
        Token close = expect(Tok::RParen, "')'");
        auto copy = std::make_shared<SExpr>(*inner);
        copy->span = open.span.to(close.span);
        return copy;
      }
      default:
        fail("expected a term");
    }
  }

  SurfaceDecl decl() {
    if (peek().kind == Tok::KwDef) {
      Token kw = advance();
      Token name = expect(Tok::Ident, "a name after 'def'");
      expect(Tok::Colon, "':'");
      SExprPtr type = term();
      expect(Tok::ColonEq, "':='");
      SExprPtr body = term();
      Token semi = expect(Tok::Semi, "';'");
      SurfaceDecl d;
      d.name = name.text;
      d.type = type;
      d.body = body;
      d.span = kw.span.to(semi.span);
      d.name_span = name.span;
      return d;
    }
    if (peek().kind == Tok::KwPostulate) {
      Token kw = advance();
      Token name = expect(Tok::Ident, "a name after 'postulate'");
      expect(Tok::Colon, "':'");
      SExprPtr type = term();
      Token semi = expect(Tok::Semi, "';'");
      SurfaceDecl d;
      d.is_postulate = true;
      d.name = name.text;
      d.type = type;
      d.span = kw.span.to(semi.span);
      d.name_span = name.span;
      return d;
    }
    fail("expected 'def' or 'postulate'");
  }
};

}  // namespace

std::vector<SurfaceDecl> parse_module(const std::string& source,
                                      const std::string& path) {
  Parser p{lex_all(source, path)};
  std::vector<SurfaceDecl> decls;
  while (p.peek().kind != Tok::Eof) decls.push_back(p.decl());
  return decls;
}

SExprPtr parse_expression(const std::string& source, const std::string& path) {
  Parser p{lex_all(source, path)};
  SExprPtr e = p.term();
  if (p.peek().kind != Tok::Eof) p.fail("unexpected input after the term");
  return e;
}

}  // namespace hct
