#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "borelreg/cli/commands.hpp"
#include "borelreg/error.hpp"

using namespace borelreg;
using namespace borelreg::cli;

namespace {

std::string read_input(const std::string& arg) {
  if (arg != "-") return arg;
  std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"borelreg-cli: regularity and structure of monomial ideals"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  bool strict = false;
  std::optional<std::size_t> vars;
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--strict", strict, "exit 5 when methods disagree");
  app.add_option("--vars", vars, "ambient number of variables");

  std::string expr_text, method = "auto";
  auto* gens = app.add_subcommand("gens", "minimal generators");
  gens->add_option("EXPR", expr_text, "ideal expression, or - for stdin")->required();

  auto* reg = app.add_subcommand("reg", "Castelnuovo-Mumford regularity");
  reg->add_option("EXPR", expr_text)->required();
  reg->add_option("--method", method, "auto|chain|truncation|socle|sbt-formula|chi-formula");

  auto* chain = app.add_subcommand("chain", "sequential chain with s(Jsat/J) per step");
  chain->add_option("EXPR", expr_text)->required();

  auto* socle = app.add_subcommand("socle", "socle monomials of an artinian ideal");
  socle->add_option("EXPR", expr_text)->required();

  CheckFlags flags;
  std::string dfixed;
  auto* check = app.add_subcommand("check", "Borel type, strong Borel type, stability, d-fixed");
  check->add_option("EXPR", expr_text)->required();
  check->add_flag("--borel-type", flags.borel_type);
  check->add_flag("--sbt", flags.sbt);
  check->add_flag("--stable", flags.stable);
  check->add_option("--dfixed", dfixed, "d-sequence, e.g. 1|2|4");
  check->add_option("--exhaustive", flags.exhaustive_extra,
                    "scan monomials up to deg + N (negative skips)");

  Exponent a = 0;
  std::string d_text;
  auto* decomp = app.add_subcommand("decomp", "d-decomposition of an integer");
  decomp->add_option("A", a)->required();
  decomp->add_option("D", d_text)->required();

  std::string spec_text, rule = "digitwise";
  std::optional<std::size_t> q;
  auto* gamma = app.add_subcommand("gamma", "gamma families of a d-fixed ideal");
  gamma->add_option("SPEC", spec_text, "e.g. x2^7,x3^10")->required();
  gamma->add_option("D", d_text)->required();
  gamma->add_option("--q", q);
  gamma->add_option("--rule", rule)->check(CLI::IsMember({"digitwise", "partial-sums"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const bool json = format == "json";
  const std::string command = app.get_subcommands().front()->get_name();
  std::string input;
  Options opts{vars};

  auto fail = [&](const std::string& kind, const std::string& message, int code) {
    if (json)
      std::cout << error_json(command, input, kind, message, code).dump(2) << '\n';
    else
      std::cerr << "error: " << message << '\n';
    return code;
  };

  try {
    Report report;
    if (gens->parsed()) {
      input = read_input(expr_text);
      report = run_gens(input, opts);
    } else if (reg->parsed()) {
      input = read_input(expr_text);
      report = run_reg(input, method, opts);
    } else if (chain->parsed()) {
      input = read_input(expr_text);
      report = run_chain(input, opts);
    } else if (socle->parsed()) {
      input = read_input(expr_text);
      report = run_socle(input, opts);
    } else if (check->parsed()) {
      input = read_input(expr_text);
      if (!dfixed.empty()) flags.dfixed = dfixed;
      report = run_check(input, flags, opts);
    } else if (decomp->parsed()) {
      input = std::to_string(a) + "; " + d_text;
      report = run_decomp(a, d_text);
    } else {
      input = spec_text + "; " + d_text;
      report = run_gamma(spec_text, d_text, q,
                         rule == "digitwise" ? GammaRule::kDigitwise : GammaRule::kPartialSums, opts);
    }
    if (json)
      std::cout << to_json(report).dump(2) << '\n';
    else
      std::cout << render_text(report);
    return strict && report.has_disagreement() ? 5 : 0;
  } catch (const ParseError& e) {
    return fail("parse", json ? std::string(e.what()) : e.annotate(input), 2);
  } catch (const DomainError& e) {
    return fail("domain", e.what(), 3);
  } catch (const BoundExceeded& e) {
    return fail("bound", e.what(), 4);
  } catch (const std::invalid_argument& e) {
    return fail("domain", e.what(), 3);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), 4);
  }
}
