#pragma once

// Text formats for rings, elements, vectors, matrices and codes.
//
//   ring     := "Z/" INT ( "[" IDENT "]" "/" "(" expr ")" )*
//   element  := expr                        e.g. 7, -1, 3*x+5, (x+1)*y^2+x
//   vector   := "(" element ("," element)* ")"
//   matrix   := "[" row ("," row)* "]"      row := "[" element ("," element)* "]"
//   code     := "span" ring "len" INT "{" [vector ("," vector)*] "}"
//   expr     := ["+"|"-"] term (("+"|"-") term)*
//   term     := factor (["*"] factor)*      juxtaposition multiplies: 2x
//   factor   := primary ["^" INT]
//   primary  := INT | IDENT | "(" expr ")"
//
// Identifiers in element expressions name the adjoined variables of the tower.
// Formatting emits canonical forms that parse back to equal objects.

#include <cctype>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ringcodes/code.hpp"
#include "ringcodes/matrix.hpp"
#include "ringcodes/ring.hpp"

namespace ringcodes {

namespace text_detail {

enum class Tok { Int, Ident, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < src.size();) {
    const char c = src[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++col;
      continue;
    }
    const std::size_t start = i, start_col = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({Tok::Int, std::string(src.substr(start, i - start)), line, start_col});
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
      out.push_back({Tok::Ident, std::string(src.substr(start, i - start)), line, start_col});
    } else if (std::string_view("/[](){},+-*^").find(c) != std::string_view::npos) {
      ++i;
      out.push_back({Tok::Punct, std::string(1, c), line, start_col});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    col += i - start;
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

struct Expr {
  enum Kind { Int, Var, Add, Sub, Mul, Neg, Pow } kind;
  std::int64_t value = 0;  // literal, or exponent for Pow
  std::string name;
  std::unique_ptr<Expr> lhs, rhs;
  std::size_t line = 0, column = 0;
};

using ExprPtr = std::unique_ptr<Expr>;

// Dense polynomial over a base ring, low to high.
struct Poly {
  std::vector<Elem> c;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at_end() const { return peek().kind == Tok::End; }

  bool accept(std::string_view punct) {
    if (peek().kind == Tok::Punct && peek().text == punct) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(std::string_view punct) {
    if (!accept(punct)) fail("expected '" + std::string(punct) + "'");
  }

  void expect_keyword(std::string_view word) {
    if (peek().kind != Tok::Ident || peek().text != word) fail("expected '" + std::string(word) + "'");
    ++pos_;
  }

  std::uint64_t expect_int() {
    if (peek().kind != Tok::Int) fail("expected an integer");
    const std::string t = toks_[pos_++].text;
    if (t.size() > 18) fail("integer too large");
    return std::stoull(t);
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input '" + peek().text + "'");
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, peek().line, peek().column); }

  ExprPtr expr() {
    ExprPtr node;
    const Token start = peek();
    if (accept("-")) {
      node = make(Expr::Neg, start);
      node->lhs = term();
    } else {
      accept("+");
      node = term();
    }
    for (;;) {
      const Token op = peek();
      if (accept("+")) {
        node = binary(Expr::Add, op, std::move(node), term());
      } else if (accept("-")) {
        node = binary(Expr::Sub, op, std::move(node), term());
      } else {
        return node;
      }
    }
  }

  Ring ring() {
    const Token start = peek();
    if (start.kind != Tok::Ident || start.text != "Z") fail("ring description must start with Z/n");
    ++pos_;
    expect("/");
    const Token n_tok = peek();
    const std::uint64_t n = expect_int();
    Ring r = [&] {
      try {
        return Ring::integers_mod(static_cast<std::int64_t>(n));
      } catch (const InvalidParameter& e) {
        throw ParseError(e.what(), n_tok.line, n_tok.column);
      }
    }();
    while (accept("[")) {
      if (peek().kind != Tok::Ident) fail("expected a variable name");
      const Token var = toks_[pos_++];
      expect("]");
      expect("/");
      expect("(");
      const Token poly_tok = peek();
      ExprPtr f = expr();
      expect(")");
      Poly p = eval_poly(r, var.text, *f);
      try {
        r = Ring::quotient(r, std::move(p.c), var.text);
      } catch (const InvalidParameter& e) {
        throw ParseError(e.what(), poly_tok.line, poly_tok.column);
      }
    }
    return r;
  }

  Elem element(const Ring& r) {
    ExprPtr e = expr();
    return eval_elem(r, *e);
  }

  Word vector(const Ring& r) {
    expect("(");
    Word w{element(r)};
    while (accept(",")) w.push_back(element(r));
    expect(")");
    return w;
  }

  Matrix matrix(const Ring& r) {
    const Token start = peek();
    expect("[");
    std::vector<Elem> entries;
    std::size_t rows = 0, cols = 0;
    do {
      const Token row_tok = peek();
      expect("[");
      std::size_t count = 0;
      do {
        entries.push_back(element(r));
        ++count;
      } while (accept(","));
      expect("]");
      if (rows == 0) cols = count;
      if (count != cols) throw ParseError("ragged matrix row", row_tok.line, row_tok.column);
      ++rows;
    } while (accept(","));
    expect("]");
    if (rows == 0 || cols == 0) throw ParseError("empty matrix", start.line, start.column);
    return Matrix(r, rows, cols, std::move(entries));
  }

  LinearCode code(const Budget& budget) {
    expect_keyword("span");
    Ring r = ring();
    expect_keyword("len");
    const Token len_tok = peek();
    const auto m = static_cast<std::size_t>(expect_int());
    if (m == 0) throw ParseError("code length must be >= 1", len_tok.line, len_tok.column);
    expect("{");
    std::vector<Word> gens;
    if (!accept("}")) {
      do {
        const Token vec_tok = peek();
        Word w = vector(r);
        if (w.size() != m) {
          throw ParseError("generator has length " + std::to_string(w.size()) + ", expected " + std::to_string(m),
                           vec_tok.line, vec_tok.column);
        }
        gens.push_back(std::move(w));
      } while (accept(","));
      expect("}");
    }
    return LinearCode::span(r, m, std::move(gens), budget);
  }

 private:
  static ExprPtr make(Expr::Kind kind, const Token& at) {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    e->line = at.line;
    e->column = at.column;
    return e;
  }

  static ExprPtr binary(Expr::Kind kind, const Token& at, ExprPtr lhs, ExprPtr rhs) {
    ExprPtr e = make(kind, at);
    e->lhs = std::move(lhs);
    e->rhs = std::move(rhs);
    return e;
  }

  bool starts_primary() const {
    const Token& t = peek();
    return t.kind == Tok::Int || t.kind == Tok::Ident || (t.kind == Tok::Punct && t.text == "(");
  }

  ExprPtr term() {
    ExprPtr node = factor();
    for (;;) {
      const Token op = peek();
      if (accept("*")) {
        node = binary(Expr::Mul, op, std::move(node), factor());
      } else if (starts_primary()) {
        node = binary(Expr::Mul, op, std::move(node), factor());
      } else {
        return node;
      }
    }
  }

  ExprPtr factor() {
    ExprPtr base = primary();
    const Token op = peek();
    if (accept("^")) {
      ExprPtr e = make(Expr::Pow, op);
      e->lhs = std::move(base);
      e->value = static_cast<std::int64_t>(expect_int());
      return e;
    }
    return base;
  }

  ExprPtr primary() {
    const Token t = peek();
    if (t.kind == Tok::Int) {
      ExprPtr e = make(Expr::Int, t);
      const std::uint64_t v = expect_int();
      e->value = static_cast<std::int64_t>(v);
      return e;
    }
    if (t.kind == Tok::Ident) {
      ++pos_;
      ExprPtr e = make(Expr::Var, t);
      e->name = t.text;
      return e;
    }
    if (accept("(")) {
      ExprPtr e = expr();
      expect(")");
      return e;
    }
    fail("expected a number, variable or '('");
  }

  static Elem eval_elem(const Ring& r, const Expr& e) {
    switch (e.kind) {
      case Expr::Int: return r.from_int(e.value);
      case Expr::Var: {
        const auto level = r.level_with_variable(e.name);
        if (!level) throw ParseError("unknown variable '" + e.name + "' in " + r.describe(), e.line, e.column);
        return level->generator();  // embeds with the same index
      }
      case Expr::Add: return r.add(eval_elem(r, *e.lhs), eval_elem(r, *e.rhs));
      case Expr::Sub: return r.sub(eval_elem(r, *e.lhs), eval_elem(r, *e.rhs));
      case Expr::Mul: return r.mul(eval_elem(r, *e.lhs), eval_elem(r, *e.rhs));
      case Expr::Neg: return r.neg(eval_elem(r, *e.lhs));
      case Expr::Pow: return r.pow(eval_elem(r, *e.lhs), static_cast<std::uint64_t>(e.value));
    }
    return 0;
  }

  static Poly poly_add(const Ring& base, const Poly& a, const Poly& b) {
    Poly out{std::vector<Elem>(std::max(a.c.size(), b.c.size()), 0)};
    for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] = base.add(out.c[i], a.c[i]);
    for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] = base.add(out.c[i], b.c[i]);
    return out;
  }

  static Poly poly_neg(const Ring& base, Poly a) {
    for (auto& x : a.c) x = base.neg(x);
    return a;
  }

  static Poly poly_mul(const Ring& base, const Poly& a, const Poly& b) {
    if (a.c.empty() || b.c.empty()) return {};
    Poly out{std::vector<Elem>(a.c.size() + b.c.size() - 1, 0)};
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] = base.add(out.c[i + j], base.mul(a.c[i], b.c[j]));
    return out;
  }

  // Evaluates e as a polynomial in `var` with coefficients in `base`.
  static Poly eval_poly(const Ring& base, const std::string& var, const Expr& e) {
    switch (e.kind) {
      case Expr::Int: return {{base.from_int(e.value)}};
      case Expr::Var:
        if (e.name == var) return {{0, base.one()}};
        return {{eval_elem(base, e)}};
      case Expr::Add: return poly_add(base, eval_poly(base, var, *e.lhs), eval_poly(base, var, *e.rhs));
      case Expr::Sub:
        return poly_add(base, eval_poly(base, var, *e.lhs), poly_neg(base, eval_poly(base, var, *e.rhs)));
      case Expr::Mul: return poly_mul(base, eval_poly(base, var, *e.lhs), eval_poly(base, var, *e.rhs));
      case Expr::Neg: return poly_neg(base, eval_poly(base, var, *e.lhs));
      case Expr::Pow: {
        if (e.value > 64) throw ParseError("polynomial exponent too large", e.line, e.column);
        const Poly b = eval_poly(base, var, *e.lhs);
        Poly out{{base.one()}};
        for (std::int64_t i = 0; i < e.value; ++i) out = poly_mul(base, out, b);
        return out;
      }
    }
    return {};
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace text_detail

inline Ring parse_ring(std::string_view src) {
  text_detail::Parser p(src);
  Ring r = p.ring();
  p.expect_end();
  return r;
}

inline RingElement parse_element(const Ring& r, std::string_view src) {
  text_detail::Parser p(src);
  const Elem e = p.element(r);
  p.expect_end();
  return {r, e};
}

inline Word parse_vector(const Ring& r, std::string_view src) {
  text_detail::Parser p(src);
  Word w = p.vector(r);
  p.expect_end();
  return w;
}

inline Matrix parse_matrix(const Ring& r, std::string_view src) {
  text_detail::Parser p(src);
  Matrix m = p.matrix(r);
  p.expect_end();
  return m;
}

inline LinearCode parse_code(std::string_view src, const Budget& budget = {}) {
  text_detail::Parser p(src);
  LinearCode c = p.code(budget);
  p.expect_end();
  return c;
}

inline std::string format_ring(const Ring& r) { return r.describe(); }

inline std::string format_element(const RingElement& e) { return e.to_string(); }

inline std::string format_vector(const Ring& r, std::span<const Elem> w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += r.to_string(w[i]);
  }
  return out + ")";
}

inline std::string format_matrix(const Matrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += ",";
    out += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ",";
      out += m.ring().to_string(m(i, j));
    }
    out += "]";
  }
  return out + "]";
}

// "span Z/20 len 1 { (10) }" listing the code's generators.
inline std::string format_code(const LinearCode& c) {
  std::string out = "span " + c.ring().describe() + " len " + std::to_string(c.length()) + " {";
  for (std::size_t i = 0; i < c.generators().size(); ++i) {
    out += i ? ", " : " ";
    out += format_vector(c.ring(), c.generators()[i]);
  }
  return out + (c.generators().empty() ? "}" : " }");
}

}  // namespace ringcodes
