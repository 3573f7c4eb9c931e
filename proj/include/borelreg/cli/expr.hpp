#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "borelreg/dfixed.hpp"
#include "borelreg/ideal.hpp"

namespace borelreg::cli {

/// Syntax or ambient error with a 0-based column into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t column, const std::string& message);
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }
  /// Message plus the input line and a caret under the column.
  std::string annotate(std::string_view input) const;

 private:
  std::size_t column_;
  std::string message_;
};

/// Sparse monomial: 0-based variable -> positive exponent. Empty is 1.
using SparseMonomial = std::map<std::size_t, Exponent>;

struct Expr {
  enum class Kind {
    kLiteral,          // (m1, m2, ...)
    kSum,              // a + b + ...
    kProduct,          // a * b * ...
    kIntersect,        // intersect(a, b, ...)
    kSbt,              // sbt(m)
    kSbtClosure,       // sbtc(m1, m2, ...)
    kDFixedPrincipal,  // dfixp(x_i^a; d)
    kDFixedPowers,     // dfix(x_i^a, ...; d)
  };

  Kind kind = Kind::kLiteral;
  std::vector<SparseMonomial> monomials{};
  std::vector<Expr> children{};
  std::vector<VariablePower> powers{};
  std::optional<DSequence> d{};

  friend bool operator==(const Expr&, const Expr&) = default;
};

/// expr := term ('+' term)*; term := atom ('*' atom)*;
/// atom := '(' monlist ')' | '(' expr ')' | func.
Expr parse(std::string_view text);

/// Canonical text; parse(print(e)) == e.
std::string print(const Expr& e);

/// Largest variable index used (1-based), 0 if none.
std::size_t max_variable(const Expr& e);

/// `vars` when given (ParseError if smaller than max_variable), otherwise
/// max_variable, at least 1.
std::size_t resolve_ambient(const Expr& e, std::optional<std::size_t> vars);

MonomialIdeal evaluate(const Expr& e, std::size_t ambient);

/// INT ('|' INT)*
DSequence parse_dsequence(std::string_view text);

/// x_i^a (',' x_j^b)*, optionally in parentheses.
std::vector<VariablePower> parse_powers(std::string_view text);

Monomial to_monomial(const SparseMonomial& m, std::size_t ambient);

}  // namespace borelreg::cli
