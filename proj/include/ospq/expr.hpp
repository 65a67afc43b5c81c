// A small expression language for bracketed generator expressions, so the
// CLI and tests can state relations the way the algebra texts write them:
//
//   expr    := ['-'] term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*
//   factor  := scalar | gen | bracket | '(' expr ')'
//   bracket := ('[[' expr ',' expr ']]' | '[' expr ',' expr ']'
//              | '{' expr ',' expr '}') ('_' weight)?
//   gen     := ('e'|'f'|'k'|'kb'|'L'|'Lb') INT | 'a' ('+'|'-') INT
//   scalar  := INT | 'q' | 'qb' | 'q^' SIGNED_INT
//   weight  := 'q' | 'qb' | 'q^' SIGNED_INT | '(' expr ')'
//
// '[[ , ]]' is the graded bracket, '_qb' denotes the weight q^-1, and a
// missing weight means 1.  The divisor of '/' must evaluate to a scalar.
// A leading '[[' is read as the graded bracket first; write '[[[x,y],...'
// or parenthesize the first argument to force a plain bracket there.

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ospq/free_algebra.hpp"
#include "ospq/scalars.hpp"

namespace ospq {

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(int line_, int col_, const std::string& what)
      : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                           std::to_string(col_) + ": " + what),
        line(line_),
        col(col_) {}
};

struct BindError : std::runtime_error {
  explicit BindError(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// AST

struct ExprAst;
using AstPtr = std::shared_ptr<ExprAst>;

struct ExprAst {
  enum class NodeKind { Gen, Scalar, Sum, Prod, Bracket };

  NodeKind node = NodeKind::Scalar;

  // Gen
  Kind gen_kind = Kind::X;
  int gen_index = 0;
  int gen_sign = 0;  // +1/-1 for a-letters, 0 otherwise

  // Scalar
  QScalar scalar;

  // Sum: kids with signs +1/-1 (first sign may be -1 for a leading minus).
  // Prod: kids with ops 0 = '*', 1 = '/' (first op is always 0).
  std::vector<AstPtr> kids;
  std::vector<int> tags;

  // Bracket
  BracketKind bracket_kind = BracketKind::Commutator;
  AstPtr weight;  // null = weight 1

  static AstPtr gen(Kind k, int index, int sign = 0) {
    auto p = std::make_shared<ExprAst>();
    p->node = NodeKind::Gen;
    p->gen_kind = k;
    p->gen_index = index;
    p->gen_sign = sign;
    return p;
  }
  static AstPtr lit(QScalar v) {
    auto p = std::make_shared<ExprAst>();
    p->node = NodeKind::Scalar;
    p->scalar = std::move(v);
    return p;
  }
};

inline bool ast_equal(const AstPtr& a, const AstPtr& b) {
  if (!a || !b) return a == b;
  if (a->node != b->node) return false;
  switch (a->node) {
    case ExprAst::NodeKind::Gen:
      return a->gen_kind == b->gen_kind && a->gen_index == b->gen_index &&
             a->gen_sign == b->gen_sign;
    case ExprAst::NodeKind::Scalar:
      return a->scalar == b->scalar;
    case ExprAst::NodeKind::Sum:
    case ExprAst::NodeKind::Prod: {
      if (a->tags != b->tags || a->kids.size() != b->kids.size()) return false;
      for (std::size_t i = 0; i < a->kids.size(); ++i)
        if (!ast_equal(a->kids[i], b->kids[i])) return false;
      return true;
    }
    case ExprAst::NodeKind::Bracket:
      return a->bracket_kind == b->bracket_kind && ast_equal(a->kids[0], b->kids[0]) &&
             ast_equal(a->kids[1], b->kids[1]) && ast_equal(a->weight, b->weight);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Lexer

namespace dsl_detail {

enum class Tok { Int, Name, Plus, Minus, Star, Slash, LParen, RParen, LBrack, RBrack,
                 LBrace, RBrace, Comma, Underscore, Caret, End };

struct Token {
  Tok kind;
  std::string text;
  int line = 1, col = 1;
};

inline std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](Tok k, std::string t) { out.push_back({k, std::move(t), line, col}); };
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') { ++line; col = 1; ++i; continue; }
    if (c == ' ' || c == '\t' || c == '\r') { ++col; ++i; continue; }
    int startcol = col;
    if (c >= '0' && c <= '9') {
      std::string t;
      while (i < src.size() && src[i] >= '0' && src[i] <= '9') { t += src[i++]; ++col; }
      out.push_back({Tok::Int, t, line, startcol});
      continue;
    }
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
      std::string t;
      while (i < src.size() &&
             ((src[i] >= 'a' && src[i] <= 'z') || (src[i] >= 'A' && src[i] <= 'Z'))) {
        t += src[i++];
        ++col;
      }
      out.push_back({Tok::Name, t, line, startcol});
      continue;
    }
    switch (c) {
      case '+': push(Tok::Plus, "+"); break;
      case '-': push(Tok::Minus, "-"); break;
      case '*': push(Tok::Star, "*"); break;
      case '/': push(Tok::Slash, "/"); break;
      case '(': push(Tok::LParen, "("); break;
      case ')': push(Tok::RParen, ")"); break;
      case '[': push(Tok::LBrack, "["); break;
      case ']': push(Tok::RBrack, "]"); break;
      case '{': push(Tok::LBrace, "{"); break;
      case '}': push(Tok::RBrace, "}"); break;
      case ',': push(Tok::Comma, ","); break;
      case '_': push(Tok::Underscore, "_"); break;
      case '^': push(Tok::Caret, "^"); break;
      default:
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
    ++i;
    ++col;
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

}  // namespace dsl_detail

// ---------------------------------------------------------------------------
// Parser: recursive descent with backtracking on the bracket alternatives,
// reporting the furthest failure point with its expected-token set.

class Parser {
 public:
  explicit Parser(const std::string& src) : toks_(dsl_detail::lex(src)) {}

  AstPtr parse() {
    try {
      AstPtr e = parse_expr();
      if (!at(dsl_detail::Tok::End)) fail("end of input");
      return e;
    } catch (Failure&) {
      report_furthest();
    }
  }

 private:
  using Tok = dsl_detail::Tok;

  struct Failure {};  // internal backtracking signal

  const dsl_detail::Token& cur() const { return toks_[pos_]; }
  bool at(Tok k) const { return cur().kind == k; }
  bool at_name(const char* n) const { return at(Tok::Name) && cur().text == n; }

  [[noreturn]] void fail(const std::string& expected) {
    if (pos_ > far_pos_) {
      far_pos_ = pos_;
      far_expected_.clear();
    }
    if (pos_ == far_pos_) far_expected_.push_back(expected);
    throw Failure{};
  }

  [[noreturn]] void report_furthest() {
    const auto& t = toks_[far_pos_];
    std::string exp;
    for (std::size_t i = 0; i < far_expected_.size(); ++i) {
      if (i) exp += ", ";
      exp += far_expected_[i];
    }
    std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.line, t.col, "expected " + exp + ", got " + got);
  }

  void expect(Tok k, const char* what) {
    if (!at(k)) fail(what);
    ++pos_;
  }

  AstPtr parse_expr() {
    auto node = std::make_shared<ExprAst>();
    node->node = ExprAst::NodeKind::Sum;
    int sign = +1;
    if (at(Tok::Minus)) {
      sign = -1;
      ++pos_;
    }
    node->kids.push_back(parse_term());
    node->tags.push_back(sign);
    while (at(Tok::Plus) || at(Tok::Minus)) {
      int s = at(Tok::Plus) ? +1 : -1;
      ++pos_;
      node->kids.push_back(parse_term());
      node->tags.push_back(s);
    }
    if (node->kids.size() == 1 && node->tags[0] == +1) return node->kids[0];
    return node;
  }

  AstPtr parse_term() {
    auto node = std::make_shared<ExprAst>();
    node->node = ExprAst::NodeKind::Prod;
    node->kids.push_back(parse_factor());
    node->tags.push_back(0);
    while (at(Tok::Star) || at(Tok::Slash)) {
      int op = at(Tok::Star) ? 0 : 1;
      ++pos_;
      node->kids.push_back(parse_factor());
      node->tags.push_back(op);
    }
    if (node->kids.size() == 1) return node->kids[0];
    return node;
  }

  AstPtr parse_factor() {
    if (at(Tok::LParen)) {
      ++pos_;
      AstPtr e = parse_expr();
      expect(Tok::RParen, "')'");
      return e;
    }
    if (at(Tok::LBrack) || at(Tok::LBrace)) return parse_bracket();
    if (at(Tok::Int)) {
      long v = std::stol(cur().text);
      ++pos_;
      return ExprAst::lit(QScalar(v));
    }
    if (at(Tok::Name)) return parse_name();
    fail("a scalar, generator, bracket or '('");
  }

  AstPtr parse_name() {
    std::string n = cur().text;
    if (n == "q" || n == "qb") return parse_q_scalar();
    if (n == "a") {
      ++pos_;
      int sign;
      if (at(Tok::Plus)) sign = +1;
      else if (at(Tok::Minus)) sign = -1;
      else fail("'+' or '-' after 'a'");
      ++pos_;
      if (!at(Tok::Int)) fail("index after 'a" + std::string(sign > 0 ? "+" : "-") + "'");
      int idx = std::stoi(cur().text);
      ++pos_;
      return ExprAst::gen(sign > 0 ? Kind::APlus : Kind::AMinus, idx, sign);
    }
    Kind k;
    if (n == "e") k = Kind::E;
    else if (n == "f") k = Kind::F;
    else if (n == "k") k = Kind::K;
    else if (n == "kb") k = Kind::KBar;
    else if (n == "L") k = Kind::L;
    else if (n == "Lb") k = Kind::LBar;
    else fail("a generator name (e, f, k, kb, L, Lb, a) or scalar");
    ++pos_;
    if (!at(Tok::Int)) fail("index after '" + n + "'");
    int idx = std::stoi(cur().text);
    ++pos_;
    return ExprAst::gen(k, idx);
  }

  AstPtr parse_q_scalar() {
    std::string n = cur().text;
    ++pos_;
    if (n == "qb") return ExprAst::lit(QScalar::qbar());
    if (at(Tok::Caret)) {
      ++pos_;
      int sign = 1;
      if (at(Tok::Minus)) {
        sign = -1;
        ++pos_;
      }
      if (!at(Tok::Int)) fail("exponent after 'q^'");
      int k = std::stoi(cur().text);
      ++pos_;
      return ExprAst::lit(QScalar::q_pow(sign * k));
    }
    return ExprAst::lit(QScalar::q());
  }

  AstPtr parse_bracket() {
    // graded bracket first; on failure rewind and try the plain forms
    std::size_t save = pos_;
    if (at(Tok::LBrack)) {
      try {
        ++pos_;
        expect(Tok::LBrack, "'['");
        AstPtr lhs = parse_expr();
        expect(Tok::Comma, "','");
        AstPtr rhs = parse_expr();
        expect(Tok::RBrack, "']'");
        expect(Tok::RBrack, "']'");
        return finish_bracket(BracketKind::Super, lhs, rhs);
      } catch (Failure&) {
        pos_ = save;
      }
      ++pos_;
      AstPtr lhs = parse_expr();
      expect(Tok::Comma, "','");
      AstPtr rhs = parse_expr();
      expect(Tok::RBrack, "']'");
      return finish_bracket(BracketKind::Commutator, lhs, rhs);
    }
    expect(Tok::LBrace, "'{'");
    AstPtr lhs = parse_expr();
    expect(Tok::Comma, "','");
    AstPtr rhs = parse_expr();
    expect(Tok::RBrace, "'}'");
    return finish_bracket(BracketKind::Anticommutator, lhs, rhs);
  }

  AstPtr finish_bracket(BracketKind bk, AstPtr lhs, AstPtr rhs) {
    auto node = std::make_shared<ExprAst>();
    node->node = ExprAst::NodeKind::Bracket;
    node->bracket_kind = bk;
    node->kids = {std::move(lhs), std::move(rhs)};
    if (at(Tok::Underscore)) {
      ++pos_;
      if (at_name("q") || at_name("qb")) {
        node->weight = parse_q_scalar();
      } else if (at(Tok::LParen)) {
        ++pos_;
        node->weight = parse_expr();
        expect(Tok::RParen, "')'");
      } else {
        fail("a weight (q, qb, q^INT or parenthesized scalar)");
      }
    }
    return node;
  }

  std::vector<dsl_detail::Token> toks_;
  std::size_t pos_ = 0;
  std::size_t far_pos_ = 0;
  std::vector<std::string> far_expected_;
};

inline AstPtr parse_expression(const std::string& src) {
  Parser p(src);
  try {
    return p.parse();
  } catch (ParseError&) {
    throw;
  }
}

// ---------------------------------------------------------------------------
// Pretty printer; parse(pretty(ast)) is the identity on ASTs.

inline std::string pretty(const AstPtr& ast);

namespace dsl_detail {

inline std::string pretty_scalar(const QScalar& v) {
  if (v.is_monomial() && !v.numerator().is_zero()) {
    const auto& [e, c] = *v.numerator().coeffs().begin();
    if (c == 1) {
      if (e == 0) return "1";
      if (e == 1) return "q";
      if (e == -1) return "qb";
      return "q^" + std::to_string(e);
    }
    if (e == 0 && c > 0) return c.get_str();
  }
  return "";  // not representable as one scalar token
}

inline std::string pretty_child(const AstPtr& ast, bool parenthesize_sums) {
  std::string s = pretty(ast);
  if (parenthesize_sums && ast->node == ExprAst::NodeKind::Sum) return "(" + s + ")";
  return s;
}

}  // namespace dsl_detail

inline std::string pretty(const AstPtr& ast) {
  switch (ast->node) {
    case ExprAst::NodeKind::Gen: {
      GeneratorSymbol g;
      g.kind = ast->gen_kind;
      g.index = static_cast<std::int16_t>(ast->gen_index);
      return g.str();
    }
    case ExprAst::NodeKind::Scalar: {
      std::string s = dsl_detail::pretty_scalar(ast->scalar);
      if (!s.empty()) return s;
      // general scalar: fall back to num/den via division syntax
      std::string num = ast->scalar.numerator().str();
      std::string den = ast->scalar.denominator().str();
      std::string out = "(" + num + ")";
      if (!ast->scalar.is_integer_den()) out += "/(" + den + ")";
      return out;
    }
    case ExprAst::NodeKind::Sum: {
      std::string out;
      for (std::size_t i = 0; i < ast->kids.size(); ++i) {
        if (i == 0) {
          if (ast->tags[0] < 0) out += "-";
        } else {
          out += ast->tags[i] > 0 ? " + " : " - ";
        }
        out += dsl_detail::pretty_child(ast->kids[i], false);
      }
      return out;
    }
    case ExprAst::NodeKind::Prod: {
      std::string out;
      for (std::size_t i = 0; i < ast->kids.size(); ++i) {
        if (i) out += ast->tags[i] == 0 ? "*" : "/";
        out += dsl_detail::pretty_child(ast->kids[i], true);
      }
      return out;
    }
    case ExprAst::NodeKind::Bracket: {
      const char* open = "";
      const char* close = "";
      switch (ast->bracket_kind) {
        case BracketKind::Super: open = "[["; close = "]]"; break;
        case BracketKind::Commutator: open = "["; close = "]"; break;
        case BracketKind::Anticommutator: open = "{"; close = "}"; break;
      }
      std::string out = std::string(open) + pretty(ast->kids[0]) + "," + pretty(ast->kids[1]) +
                        close;
      if (ast->weight) {
        if (ast->weight->node == ExprAst::NodeKind::Scalar) {
          std::string w = dsl_detail::pretty_scalar(ast->weight->scalar);
          if (!w.empty() && w != "1") return out + "_" + w;
        }
        out += "_(" + pretty(ast->weight) + ")";
      }
      return out;
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Binding: evaluate an AST into a free-algebra element for a signature.

inline Element<QScalar> bind_expression(const AstPtr& ast, const AlgebraSignature& sig) {
  using El = Element<QScalar>;
  switch (ast->node) {
    case ExprAst::NodeKind::Gen: {
      int i = ast->gen_index;
      if (i < 1 || i > sig.N()) {
        GeneratorSymbol g;
        g.kind = ast->gen_kind;
        g.index = static_cast<std::int16_t>(i);
        throw BindError("generator " + g.str() + ": index " + std::to_string(i) +
                        " out of range 1.." + std::to_string(sig.N()));
      }
      switch (ast->gen_kind) {
        case Kind::E: return El::letter(sym_e(sig, i));
        case Kind::F: return El::letter(sym_f(sig, i));
        case Kind::K: return El::letter(sym_k(sig, i));
        case Kind::KBar: return El::letter(sym_kbar(sig, i));
        case Kind::L: return El::letter(sym_L(sig, i));
        case Kind::LBar: return El::letter(sym_Lbar(sig, i));
        case Kind::APlus: return El::letter(sym_a(sig, i, +1));
        case Kind::AMinus: return El::letter(sym_a(sig, i, -1));
        default: throw BindError("unbindable generator kind");
      }
    }
    case ExprAst::NodeKind::Scalar:
      return El::unit(ast->scalar);
    case ExprAst::NodeKind::Sum: {
      El acc;
      for (std::size_t i = 0; i < ast->kids.size(); ++i) {
        El k = bind_expression(ast->kids[i], sig);
        if (ast->tags[i] > 0) acc += k; else acc -= k;
      }
      return acc;
    }
    case ExprAst::NodeKind::Prod: {
      El acc = bind_expression(ast->kids[0], sig);
      for (std::size_t i = 1; i < ast->kids.size(); ++i) {
        El k = bind_expression(ast->kids[i], sig);
        if (ast->tags[i] == 0) {
          acc = acc * k;
        } else {
          // divisor must be a scalar
          if (k.is_zero()) throw BindError("division by zero expression");
          if (k.term_count() != 1 || !k.terms().begin()->first.is_empty())
            throw BindError("divisor is not a scalar expression");
          acc = acc.scaled(k.terms().begin()->second.inverse());
        }
      }
      return acc;
    }
    case ExprAst::NodeKind::Bracket: {
      El lhs = bind_expression(ast->kids[0], sig);
      El rhs = bind_expression(ast->kids[1], sig);
      QScalar w(1);
      if (ast->weight) {
        El we = bind_expression(ast->weight, sig);
        if (we.is_zero()) {
          w = QScalar(0);
        } else if (we.term_count() == 1 && we.terms().begin()->first.is_empty()) {
          w = we.terms().begin()->second;
        } else {
          throw BindError("bracket weight is not a scalar expression");
        }
      }
      return bracket(ast->bracket_kind, lhs, rhs, w);
    }
  }
  throw BindError("malformed AST");
}

// ---------------------------------------------------------------------------
// Rendering elements back into the expression language (used for the
// relation corpus; every emitted string reparses and rebinds to the same
// element).

inline std::string element_to_dsl(const Element<QScalar>& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : e.terms()) {
    QScalar cc = c;
    bool neg = false;
    {
      std::string cs = cc.str();
      if (!cs.empty() && cs[0] == '-') {
        neg = true;
        cc = -cc;
      }
    }
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    const LaurentPoly& num = cc.numerator();
    std::string numpart;
    bool trivial_num = num.is_one();
    if (!trivial_num) {
      if (num.term_count() == 1) {
        const auto& [expo, coef] = *num.coeffs().begin();
        std::string piece;
        if (coef != 1) piece = coef.get_str();
        if (expo != 0) {
          std::string qp = expo == 1 ? "q" : (expo == -1 ? "qb" : "q^" + std::to_string(expo));
          piece = piece.empty() ? qp : piece + "*" + qp;
        }
        numpart = piece;
      } else {
        numpart = "(" + num.str() + ")";
      }
    }
    std::string term;
    if (!w.is_empty()) {
      term = numpart.empty() ? w.str() : numpart + "*" + w.str();
    } else {
      term = numpart.empty() ? "1" : numpart;
    }
    if (!cc.is_integer_den()) term += "/(" + cc.denominator().str() + ")";
    out += term;
  }
  return out;
}

}  // namespace ospq
