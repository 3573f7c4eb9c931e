#include "borelreg/cli/expr.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "borelreg/borel_type.hpp"

namespace borelreg::cli {

ParseError::ParseError(std::size_t column, const std::string& message)
    : std::runtime_error("parse error at column " + std::to_string(column + 1) + ": " + message),
      column_(column),
      message_(message) {}

std::string ParseError::annotate(std::string_view input) const {
  std::string out = what();
  out += "\n  ";
  out += input;
  out += "\n  ";
  out += std::string(std::min(column_, input.size()), ' ');
  out += '^';
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_all() {
    Expr e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

  DSequence dsequence_all() {
    DSequence d = dsequence();
    expect_end();
    return d;
  }

  std::vector<VariablePower> powers_all() {
    skip();
    const bool wrapped = peek() == '(';
    if (wrapped) ++pos_;
    std::vector<VariablePower> out{power()};
    while (accept(',')) out.push_back(power());
    if (wrapped) expect(')');
    expect_end();
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' before end of input");
      fail(std::string("expected '") + c + "', found '" + text_[pos_] + "'");
    }
  }

  void expect_end() {
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  Exponent integer() {
    skip();
    const std::size_t start = pos_;
    Exponent value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const Exponent digit = text_[pos_] - '0';
      if (value > (std::numeric_limits<Exponent>::max() - digit) / 10) {
        pos_ = start;
        fail("integer too large");
      }
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return value;
  }

  std::string word() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  // 'x' INT ('^' INT)?  -> (0-based variable, exponent)
  std::pair<std::size_t, Exponent> part() {
    const std::size_t at = (skip(), pos_);
    if (!accept('x')) fail("expected a variable x<i>");
    const Exponent var = integer();
    if (var < 1) {
      pos_ = at;
      fail("variables are numbered from x1");
    }
    Exponent exp = 1;
    if (accept('^')) exp = integer();
    return {static_cast<std::size_t>(var - 1), exp};
  }

  SparseMonomial monomial() {
    SparseMonomial m;
    if (peek() == '1') {
      const std::size_t at = pos_;
      if (integer() != 1) {
        pos_ = at;
        fail("a constant monomial must be 1");
      }
      return m;
    }
    do {
      auto [var, exp] = part();
      if (exp > 0) m[var] += exp;
    } while (accept('*'));
    return m;
  }

  std::vector<SparseMonomial> monlist() {
    std::vector<SparseMonomial> out{monomial()};
    while (accept(',')) out.push_back(monomial());
    return out;
  }

  VariablePower power() {
    const std::size_t at = (skip(), pos_);
    auto [var, exp] = part();
    if (exp < 1) {
      pos_ = at;
      fail("variable powers need a positive exponent");
    }
    return {var, exp};
  }

  DSequence dsequence() {
    const std::size_t at = (skip(), pos_);
    std::vector<Exponent> entries{integer()};
    while (accept('|')) entries.push_back(integer());
    try {
      return DSequence(std::move(entries));
    } catch (const std::invalid_argument& e) {
      pos_ = at;
      fail(e.what());
    }
  }

  Expr expr() {
    Expr first = term();
    if (peek() != '+') return first;
    Expr sum{Expr::Kind::kSum};
    sum.children.push_back(std::move(first));
    while (accept('+')) sum.children.push_back(term());
    return sum;
  }

  Expr term() {
    Expr first = atom();
    if (peek() != '*') return first;
    Expr prod{Expr::Kind::kProduct};
    prod.children.push_back(std::move(first));
    while (accept('*')) prod.children.push_back(atom());
    return prod;
  }

  Expr atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      const char next = peek();
      if (next == 'x' || next == '1') {
        Expr lit{Expr::Kind::kLiteral};
        lit.monomials = monlist();
        expect(')');
        return lit;
      }
      Expr inner = expr();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return func();
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Expr func() {
    const std::size_t at = pos_;
    const std::string name = word();
    expect('(');
    Expr e;
    if (name == "sbt") {
      e.kind = Expr::Kind::kSbt;
      e.monomials.push_back(monomial());
    } else if (name == "sbtc") {
      e.kind = Expr::Kind::kSbtClosure;
      e.monomials = monlist();
    } else if (name == "dfixp") {
      e.kind = Expr::Kind::kDFixedPrincipal;
      e.powers.push_back(power());
      expect(';');
      e.d = dsequence();
    } else if (name == "dfix") {
      e.kind = Expr::Kind::kDFixedPowers;
      e.powers.push_back(power());
      while (accept(',')) e.powers.push_back(power());
      expect(';');
      e.d = dsequence();
    } else if (name == "intersect") {
      e.kind = Expr::Kind::kIntersect;
      e.children.push_back(expr());
      while (accept(',')) e.children.push_back(expr());
    } else {
      pos_ = at;
      fail("unknown function '" + name + "'");
    }
    expect(')');
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string print_monomial(const SparseMonomial& m) {
  if (m.empty()) return "1";
  std::string out;
  for (const auto& [var, exp] : m) {
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(var + 1);
    if (exp != 1) out += '^' + std::to_string(exp);
  }
  return out;
}

std::string print_power(const VariablePower& p) {
  return print_monomial({{p.var, p.exponent}});
}

template <typename T, typename Fn>
std::string join(const std::vector<T>& items, const std::string& sep, Fn&& fn) {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k) out += sep;
    out += fn(items[k]);
  }
  return out;
}

bool compound(const Expr& e) {
  return e.kind == Expr::Kind::kSum || e.kind == Expr::Kind::kProduct;
}

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

DSequence parse_dsequence(std::string_view text) { return Parser(text).dsequence_all(); }

std::vector<VariablePower> parse_powers(std::string_view text) {
  return Parser(text).powers_all();
}

std::string print(const Expr& e) {
  auto child = [](const Expr& c) { return compound(c) ? "(" + print(c) + ")" : print(c); };
  switch (e.kind) {
    case Expr::Kind::kLiteral:
      return "(" + join(e.monomials, ", ", print_monomial) + ")";
    case Expr::Kind::kSum:
      return join(e.children, " + ", child);
    case Expr::Kind::kProduct:
      return join(e.children, " * ", child);
    case Expr::Kind::kIntersect:
      return "intersect(" + join(e.children, ", ", [](const Expr& c) { return print(c); }) + ")";
    case Expr::Kind::kSbt:
      return "sbt(" + print_monomial(e.monomials.front()) + ")";
    case Expr::Kind::kSbtClosure:
      return "sbtc(" + join(e.monomials, ", ", print_monomial) + ")";
    case Expr::Kind::kDFixedPrincipal:
      return "dfixp(" + print_power(e.powers.front()) + "; " + e.d->to_string() + ")";
    case Expr::Kind::kDFixedPowers:
      return "dfix(" + join(e.powers, ", ", print_power) + "; " + e.d->to_string() + ")";
  }
  return {};
}

std::size_t max_variable(const Expr& e) {
  std::size_t top = 0;
  for (const auto& m : e.monomials)
    if (!m.empty()) top = std::max(top, m.rbegin()->first + 1);
  for (const auto& p : e.powers) top = std::max(top, p.var + 1);
  for (const auto& c : e.children) top = std::max(top, max_variable(c));
  return top;
}

std::size_t resolve_ambient(const Expr& e, std::optional<std::size_t> vars) {
  const std::size_t used = max_variable(e);
  if (vars) {
    if (*vars == 0) throw ParseError(0, "--vars must be positive");
    if (*vars < used)
      throw ParseError(0, "expression uses x" + std::to_string(used) + " but --vars is " +
                              std::to_string(*vars));
    return *vars;
  }
  return std::max<std::size_t>(used, 1);
}

Monomial to_monomial(const SparseMonomial& m, std::size_t ambient) {
  std::vector<Exponent> exps(ambient, 0);
  for (const auto& [var, exp] : m) exps.at(var) = exp;
  return Monomial(std::move(exps));
}

MonomialIdeal evaluate(const Expr& e, std::size_t n) {
  auto monomials = [&] {
    std::vector<Monomial> out;
    for (const auto& m : e.monomials) out.push_back(to_monomial(m, n));
    return out;
  };
  auto fold = [&](MonomialIdeal (*op)(const MonomialIdeal&, const MonomialIdeal&)) {
    MonomialIdeal acc = evaluate(e.children.front(), n);
    for (std::size_t k = 1; k < e.children.size(); ++k) acc = op(acc, evaluate(e.children[k], n));
    return acc;
  };
  switch (e.kind) {
    case Expr::Kind::kLiteral:
      return MonomialIdeal(n, monomials());
    case Expr::Kind::kSum:
      return fold(&sum);
    case Expr::Kind::kProduct:
      return fold(&product);
    case Expr::Kind::kIntersect:
      return fold(&intersect);
    case Expr::Kind::kSbt:
      return sbt_principal(monomials().front());
    case Expr::Kind::kSbtClosure:
      return sbt_closure(monomials());
    case Expr::Kind::kDFixedPrincipal:
      return principal_d_fixed(n, e.powers.front().var, e.powers.front().exponent, *e.d);
    case Expr::Kind::kDFixedPowers:
      return dfixed_from_powers(normalize_spec(n, e.powers), *e.d);
  }
  return MonomialIdeal(n);
}

}  // namespace borelreg::cli
