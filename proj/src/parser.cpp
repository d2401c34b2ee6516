#include "gdpf/parser.hpp"

#include <cctype>
#include <memory>
#include <sstream>

namespace gdpf {

ParseError::ParseError(const std::string& message, SourceSpan span, std::vector<std::string> expected)
    : std::runtime_error([&] {
        std::ostringstream out;
        out << span.line << ":" << span.column << ": " << message;
        if (!expected.empty()) {
          out << " (expected ";
          for (std::size_t i = 0; i < expected.size(); ++i) out << (i ? ", " : "") << expected[i];
          out << ")";
        }
        return out.str();
      }()),
      message_(message),
      span_(span),
      expected_(std::move(expected)) {}

std::string ParseError::render(const std::string& source) const {
  std::istringstream in(source);
  std::string line;
  for (int i = 0; i < span_.line && std::getline(in, line); ++i) {
  }
  std::string caret(static_cast<std::size_t>(std::max(0, span_.column - 1)), ' ');
  caret += std::string(static_cast<std::size_t>(std::max(1, span_.length)), '^');
  return std::string(what()) + "\n  " + line + "\n  " + caret;
}

ParseContext ParseContext::standard(const std::string& param) {
  ParseContext c;
  c.param = param;
  c.constants["v"] = NFElem::generator(cubic_field());
  c.constants["zeta9"] = zeta9();
  c.constants["zeta3"] = zeta3();
  c.constants["u"] = NFElem::generator(orbifold_tower());
  return c;
}

ParseContext ParseContext::cyclotomic(const std::string& param) {
  ParseContext c = standard(param);
  c.constants["v"] = v_in_cyclotomic();
  return c;
}

namespace {

// -- Lexer -------------------------------------------------------------------

enum class Tok { number, ident, deriv, sym, end };

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
  int primes = 0;  // for deriv
};

std::vector<Token> lex(const std::string& s, const std::string& unknown) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    SourceSpan sp{line, col, 1};
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      sp.length = static_cast<int>(j - i);
      out.push_back({Tok::number, s.substr(i, j - i), sp});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      std::string word = s.substr(i, j - i);
      int primes = 0;
      if (!unknown.empty() && word == unknown) {
        while (j + static_cast<std::size_t>(primes) < s.size() && s[j + static_cast<std::size_t>(primes)] == '\'')
          ++primes;
        sp.length = static_cast<int>(j - i) + primes;
        out.push_back({Tok::deriv, word, sp, primes});
        advance(j - i + static_cast<std::size_t>(primes));
        continue;
      }
      sp.length = static_cast<int>(j - i);
      out.push_back({Tok::ident, word, sp});
      advance(j - i);
      continue;
    }
    if (std::string("+-*/^():=[],").find(c) != std::string::npos) {
      out.push_back({Tok::sym, std::string(1, c), sp});
      advance(1);
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", sp);
  }
  out.push_back({Tok::end, "", SourceSpan{line, col, 1}});
  return out;
}

// -- AST ---------------------------------------------------------------------

struct Node {
  enum Kind { num, ident, deriv, neg, add, sub, mul, div, pow } kind;
  std::string text;
  int value = 0;  // exponent for pow, order for deriv
  SourceSpan span;
  std::unique_ptr<Node> a, b;
};
using NodePtr = std::unique_ptr<Node>;

NodePtr make(Node::Kind k, SourceSpan sp, NodePtr a = nullptr, NodePtr b = nullptr) {
  auto n = std::make_unique<Node>();
  n->kind = k;
  n->span = sp;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

  NodePtr expression() {
    NodePtr lhs = term();
    while (is_sym("+") || is_sym("-")) {
      const Token op = next();
      NodePtr rhs = term();
      lhs = make(op.text == "+" ? Node::add : Node::sub, op.span, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  const Token& peek() const { return t_[pos_]; }
  bool is_sym(const char* s) const { return peek().kind == Tok::sym && peek().text == s; }
  Token next() { return t_[pos_++]; }
  void expect_sym(const char* s) {
    if (!is_sym(s)) fail("unexpected " + describe(peek()), {std::string("'") + s + "'"});
    ++pos_;
  }
  void expect_end() {
    if (peek().kind != Tok::end) fail("unexpected " + describe(peek()), {"operator", "end of input"});
  }
  std::string expect_ident() {
    if (peek().kind != Tok::ident) fail("unexpected " + describe(peek()), {"identifier"});
    return next().text;
  }
  [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected) const {
    throw ParseError(msg, peek().span, std::move(expected));
  }

 private:
  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Tok::end:
        return "end of input";
      case Tok::number:
        return "number '" + t.text + "'";
      case Tok::ident:
        return "identifier '" + t.text + "'";
      case Tok::deriv:
        return "'" + t.text + std::string(static_cast<std::size_t>(t.primes), '\'') + "'";
      case Tok::sym:
        return "'" + t.text + "'";
    }
    return "token";
  }

  NodePtr term() {
    NodePtr lhs = unary();
    while (is_sym("*") || is_sym("/")) {
      const Token op = next();
      NodePtr rhs = unary();
      lhs = make(op.text == "*" ? Node::mul : Node::div, op.span, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  NodePtr unary() {
    if (is_sym("-")) {
      const Token op = next();
      return make(Node::neg, op.span, unary());
    }
    if (is_sym("+")) {
      next();
      return unary();
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (is_sym("^")) {
      const Token op = next();
      int sign = 1;
      bool paren = false;
      if (is_sym("(")) {
        next();
        paren = true;
        if (is_sym("-")) {
          next();
          sign = -1;
        }
      }
      if (peek().kind != Tok::number) fail("exponent must be an integer literal", {"integer"});
      const Token e = next();
      if (e.text.size() > 6) throw ParseError("exponent too large", e.span);
      if (paren) expect_sym(")");
      NodePtr n = make(Node::pow, op.span, std::move(base));
      n->value = sign * std::stoi(e.text);
      return n;
    }
    return base;
  }

  NodePtr atom() {
    const Token& t = peek();
    if (t.kind == Tok::number) {
      NodePtr n = make(Node::num, t.span);
      n->text = t.text;
      ++pos_;
      return n;
    }
    if (t.kind == Tok::ident) {
      NodePtr n = make(Node::ident, t.span);
      n->text = t.text;
      ++pos_;
      return n;
    }
    if (t.kind == Tok::deriv) {
      NodePtr n = make(Node::deriv, t.span);
      n->value = t.primes;
      ++pos_;
      return n;
    }
    if (is_sym("(")) {
      ++pos_;
      NodePtr e = expression();
      expect_sym(")");
      return e;
    }
    fail("unexpected " + describe(t), {"number", "identifier", "'('", "'-'"});
  }

  std::vector<Token> t_;
  std::size_t pos_ = 0;
};

// -- Evaluation --------------------------------------------------------------

template <class C>
C constant_as(const NFElem& x, const SourceSpan& sp, const std::string& name);

template <>
Rational constant_as<Rational>(const NFElem& x, const SourceSpan& sp, const std::string& name) {
  if (!x.is_rational())
    throw ParseError("constant '" + name + "' is irrational; parse over a number field instead", sp);
  return x.to_rational();
}

template <>
NFElem constant_as<NFElem>(const NFElem& x, const SourceSpan&, const std::string&) {
  return x;
}

template <class C>
class Evaluator {
 public:
  using RF = RationalFunction<C>;
  using Poly = MultiPoly<RF>;
  // Keyed by derivative order; -1 holds the part free of the unknown.
  using Lin = std::map<int, Poly>;

  explicit Evaluator(const ParseContext& ctx) : ctx_(ctx) {}

  Poly poly(const Node& n) const {
    Lin v = lin(n);
    if (v.size() > 1 || (v.size() == 1 && v.begin()->first != -1))
      throw ParseError("unexpected occurrence of the unknown function", n.span);
    return v.empty() ? Poly(ctx_.vars) : v.begin()->second;
  }

  Lin lin(const Node& n) const {
    switch (n.kind) {
      case Node::num: {
        return scalar(RF(C(Rational(BigInt(n.text)))));
      }
      case Node::ident:
        return identifier(n);
      case Node::deriv: {
        Lin r;
        r[n.value] = Poly::constant(RF(1), ctx_.vars);
        return r;
      }
      case Node::neg: {
        Lin r = lin(*n.a);
        for (auto& [k, p] : r) p = -p;
        return r;
      }
      case Node::add:
      case Node::sub: {
        Lin r = lin(*n.a);
        const Lin b = lin(*n.b);
        for (const auto& [k, p] : b) {
          auto it = r.try_emplace(k, Poly(ctx_.vars)).first;
          if (n.kind == Node::add)
            it->second += p;
          else
            it->second -= p;
        }
        prune(r);
        return r;
      }
      case Node::mul: {
        const Lin a = lin(*n.a);
        const Lin b = lin(*n.b);
        Lin r;
        for (const auto& [ka, pa] : a)
          for (const auto& [kb, pb] : b) {
            if (ka >= 0 && kb >= 0) throw ParseError("product of two occurrences of the unknown function", n.span);
            const int k = std::max(ka, kb);
            auto it = r.try_emplace(k, Poly(ctx_.vars)).first;
            it->second += pa * pb;
          }
        prune(r);
        return r;
      }
      case Node::div: {
        const Lin a = lin(*n.a);
        const Poly d = poly(*n.b);
        const RF c = as_coefficient(d, n.b->span);
        if (c.is_zero()) throw ParseError("division by zero", n.b->span);
        const RF inv = c.inverse();
        Lin r = a;
        for (auto& [k, p] : r) p *= inv;
        return r;
      }
      case Node::pow: {
        const Poly base = poly(*n.a);
        if (n.value >= 0) return wrap(base.pow(n.value));
        const RF c = as_coefficient(base, n.a->span);
        if (c.is_zero()) throw ParseError("zero raised to a negative power", n.span);
        RF r(1);
        const RF inv = c.inverse();
        for (int i = 0; i < -n.value; ++i) r *= inv;
        return scalar(r);
      }
    }
    throw ParseError("internal parser error", n.span);
  }

  /// The value of a polynomial of degree zero as a coefficient.
  RF as_coefficient(const Poly& p, const SourceSpan& sp) const {
    if (p.is_zero()) return RF(0);
    if (p.degree() != 0) throw ParseError("division by a non-constant polynomial", sp);
    return p.terms().begin()->second;
  }

 private:
  Lin scalar(const RF& c) const { return wrap(Poly::constant(c, ctx_.vars)); }
  Lin wrap(Poly p) const {
    Lin r;
    if (!p.is_zero()) r[-1] = std::move(p);
    return r;
  }
  static void prune(Lin& r) {
    for (auto it = r.begin(); it != r.end();) it = it->second.is_zero() ? r.erase(it) : std::next(it);
  }

  Lin identifier(const Node& n) const {
    for (std::size_t i = 0; i < ctx_.vars->size(); ++i)
      if ((*ctx_.vars)[i] == n.text) return wrap(Poly::variable(i, ctx_.vars));
    if (!ctx_.param.empty() && n.text == ctx_.param) return scalar(RF::variable());
    auto it = ctx_.constants.find(n.text);
    if (it != ctx_.constants.end()) return scalar(RF(constant_as<C>(it->second, n.span, n.text)));
    throw ParseError("unknown identifier '" + n.text + "'", n.span);
  }

  const ParseContext& ctx_;
};

NodePtr parse_full(const std::string& text, const std::string& unknown = "") {
  Parser p(lex(text, unknown));
  NodePtr n = p.expression();
  p.expect_end();
  return n;
}

ParseContext without_param(const ParseContext& ctx) {
  ParseContext c = ctx;
  c.param.clear();
  return c;
}

ParseContext without_vars(const ParseContext& ctx) {
  ParseContext c = ctx;
  c.vars = make_var_names({});
  return c;
}

template <class C>
C scalar_value(const Node& n, const ParseContext& ctx) {
  const ParseContext c = without_param(without_vars(ctx));
  Evaluator<C> ev(c);
  const auto p = ev.poly(n);
  const RationalFunction<C> f = ev.as_coefficient(p, n.span);
  return f.constant_value();
}

}  // namespace

template <class C>
MultiPoly<RationalFunction<C>> parse_poly(const std::string& text, const ParseContext& ctx) {
  NodePtr n = parse_full(text);
  return Evaluator<C>(ctx).poly(*n);
}

template <class C>
MultiPoly<C> parse_constant_poly(const std::string& text, const ParseContext& ctx) {
  NodePtr n = parse_full(text);
  const auto p = Evaluator<C>(without_param(ctx)).poly(*n);
  return p.template map_coefficients<C>([](const RationalFunction<C>& c) { return c.constant_value(); });
}

template <class C>
RationalFunction<C> parse_ratfun(const std::string& text, const ParseContext& ctx) {
  NodePtr n = parse_full(text);
  const ParseContext c = without_vars(ctx);
  Evaluator<C> ev(c);
  return ev.as_coefficient(ev.poly(*n), n->span);
}

template <class C>
C parse_scalar(const std::string& text, const ParseContext& ctx) {
  NodePtr n = parse_full(text);
  return scalar_value<C>(*n, ctx);
}

template <class C>
std::array<C, 3> parse_point(const std::string& text, const ParseContext& ctx) {
  Parser p(lex(text, ""));
  p.expect_sym("(");
  std::array<C, 3> out;
  for (int i = 0; i < 3; ++i) {
    if (i > 0) p.expect_sym(":");
    NodePtr e = p.expression();
    out[static_cast<std::size_t>(i)] = scalar_value<C>(*e, ctx);
  }
  const SourceSpan close = p.peek().span;
  p.expect_sym(")");
  p.expect_end();
  bool all_zero = true;
  for (const auto& c : out) all_zero = all_zero && is_zero(c);
  if (all_zero) throw ParseError("point (0:0:0) is not projective", close);
  return out;
}

template <class C>
std::vector<RationalFunction<C>> parse_ode(const std::string& text, const ParseContext& ctx,
                                           const std::string& unknown) {
  Parser p(lex(text, unknown));
  NodePtr lhs = p.expression();
  p.expect_sym("=");
  NodePtr rhs = p.expression();
  p.expect_end();
  const ParseContext c = without_vars(ctx);
  Evaluator<C> ev(c);
  auto l = ev.lin(*lhs);
  const auto r = ev.lin(*rhs);
  for (const auto& [k, q] : r) {
    auto it = l.try_emplace(k, MultiPoly<RationalFunction<C>>(c.vars)).first;
    it->second -= q;
  }
  std::map<int, RationalFunction<C>> coeffs;
  for (const auto& [k, q] : l) {
    if (q.is_zero()) continue;
    if (k < 0) throw ParseError("equation is not homogeneous in " + unknown, lhs->span);
    coeffs[k] = ev.as_coefficient(q, lhs->span);
  }
  if (coeffs.empty()) throw ParseError("equation does not involve " + unknown, lhs->span);
  const int order = coeffs.rbegin()->first;
  if (order == 0) throw ParseError("equation has order zero", lhs->span);
  const RationalFunction<C> lead_inv = coeffs.rbegin()->second.inverse();
  std::vector<RationalFunction<C>> out(static_cast<std::size_t>(order), RationalFunction<C>(0));
  for (const auto& [k, q] : coeffs)
    if (k < order) out[static_cast<std::size_t>(k)] = q * lead_inv;
  return out;
}

FieldHandle parse_field_definition(const std::string& text, ParseContext& ctx) {
  Parser p(lex(text, ""));
  const std::string kw = p.expect_ident();
  if (kw != "field") throw ParseError("expected the keyword 'field'", SourceSpan{1, 1, static_cast<int>(kw.size())});
  const std::string name = p.expect_ident();
  p.expect_sym("=");
  const SourceSpan base_span = p.peek().span;
  const std::string base_name = p.expect_ident();
  FieldHandle base;
  if (base_name != "Q") {
    auto it = ctx.fields.find(base_name);
    if (it == ctx.fields.end()) throw ParseError("unknown field '" + base_name + "'", base_span);
    base = it->second;
  }
  p.expect_sym("[");
  const std::string gen = p.expect_ident();
  p.expect_sym("]");
  p.expect_sym("/");
  p.expect_sym("(");
  NodePtr poly_node = p.expression();
  p.expect_sym(")");
  p.expect_end();

  // The minimal polynomial is parsed as a polynomial in the generator over
  // the base field.
  ParseContext c = ctx;
  c.vars = make_var_names({gen});
  c.param.clear();
  const auto mp = Evaluator<NFElem>(c).poly(*poly_node);
  const int deg = mp.degree();
  if (deg < 1) throw ParseError("minimal polynomial must have degree at least 1", poly_node->span);
  std::vector<NFElem> coeffs(static_cast<std::size_t>(deg) + 1, NFElem(0));
  for (const auto& [e, coef] : mp.terms()) {
    NFElem x = coef.constant_value();
    if (!is_subfield(x.field(), base)) throw ParseError("coefficients must lie in the base field", poly_node->span);
    coeffs[static_cast<std::size_t>(e[0])] = base ? lift(x, base) : x;
  }
  FieldHandle f;
  try {
    f = nf_create(coeffs, base, gen);
  } catch (const ReducibleMinpoly& e) {
    throw ParseError(e.what(), poly_node->span);
  }
  ctx.fields[name] = f;
  ctx.constants[gen] = f ? NFElem::generator(f) : NFElem(0);
  if (!f) {
    // Degree one: the generator is the rational root.
    ctx.constants[gen] = -coeffs[0] / coeffs[1];
  }
  return f;
}

template MultiPoly<RatFunQ> parse_poly<Rational>(const std::string&, const ParseContext&);
template MultiPoly<RatFunNF> parse_poly<NFElem>(const std::string&, const ParseContext&);
template MultiPoly<Rational> parse_constant_poly<Rational>(const std::string&, const ParseContext&);
template MultiPoly<NFElem> parse_constant_poly<NFElem>(const std::string&, const ParseContext&);
template RatFunQ parse_ratfun<Rational>(const std::string&, const ParseContext&);
template RatFunNF parse_ratfun<NFElem>(const std::string&, const ParseContext&);
template Rational parse_scalar<Rational>(const std::string&, const ParseContext&);
template NFElem parse_scalar<NFElem>(const std::string&, const ParseContext&);
template std::array<Rational, 3> parse_point<Rational>(const std::string&, const ParseContext&);
template std::array<NFElem, 3> parse_point<NFElem>(const std::string&, const ParseContext&);
template std::vector<RatFunQ> parse_ode<Rational>(const std::string&, const ParseContext&, const std::string&);
template std::vector<RatFunNF> parse_ode<NFElem>(const std::string&, const ParseContext&, const std::string&);

}  // namespace gdpf
