#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "borelreg/cli/expr.hpp"
#include "borelreg/cli/report.hpp"
#include "borelreg/dfixed.hpp"

namespace borelreg::cli {

struct Options {
  std::optional<std::size_t> vars;
};

/// auto | chain | truncation | socle | sbt-formula | chi-formula
Report run_reg(const std::string& text, const std::string& method, const Options& opts);
Report run_gens(const std::string& text, const Options& opts);
Report run_chain(const std::string& text, const Options& opts);
Report run_socle(const std::string& text, const Options& opts);

struct CheckFlags {
  bool borel_type = false;
  bool sbt = false;
  bool stable = false;
  std::optional<std::string> dfixed;  ///< d-sequence literal
  /// Extra degrees for the exhaustive cross-checks; negative skips them.
  Exponent exhaustive_extra = 2;
};
/// With no flag set, runs borel-type, sbt and stable.
Report run_check(const std::string& text, const CheckFlags& flags, const Options& opts);

Report run_decomp(Exponent a, const std::string& d_text);

/// q is 1-based; nullopt lists every q.
Report run_gamma(const std::string& spec_text, const std::string& d_text,
                 std::optional<std::size_t> q, GammaRule rule, const Options& opts);

/// Notes for ideals whose published values differ from what is computed here.
std::vector<std::string> published_notes(const MonomialIdeal& ideal);

}  // namespace borelreg::cli
