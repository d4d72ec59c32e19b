// tanglekit: rational tangle calculator.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "tanglekit/cli.hpp"
#include "tanglekit/enumerate.hpp"

namespace {

  // TANGLEKIT_BUDGET overrides the census word budget.
  bool read_budget(std::uint64_t& budget) {
    char const* env = std::getenv("TANGLEKIT_BUDGET");
    if (env == nullptr) {
      return true;
    }
    try {
      std::size_t used = 0;
      std::string s(env);
      budget = std::stoull(s, &used);
      return used == s.size() && s.find('-') == std::string::npos;
    } catch (std::exception const&) {
      return false;
    }
  }

}  // namespace

int main(int argc, char** argv) {
  using tanglekit::Command;
  using tanglekit::Verb;

  CLI::App app{"Rational tangle calculator: fractions, canonical forms, "
               "braids and census checks"};
  app.require_subcommand(1);

  bool json = false;
  app.add_flag("--json", json, "Emit JSON instead of text");

  Command cmd;

  auto* fraction = app.add_subcommand("fraction", "Print the fraction of EXPR");
  fraction->add_option("expr", cmd.arguments, "Tangle expression")
      ->required()
      ->expected(1);

  auto* equiv = app.add_subcommand(
      "equiv", "Decide whether two expressions are isotopic (exit 0/1)");
  equiv->add_option("exprs", cmd.arguments, "Two tangle expressions")
      ->required()
      ->expected(2);

  auto* canon = app.add_subcommand(
      "canon", "Print the alternating canonical form of EXPR");
  canon->add_option("expr", cmd.arguments, "Tangle expression")
      ->required()
      ->expected(1);

  auto* synth = app.add_subcommand(
      "synth", "Print the alternating tangle with fraction P/Q");
  synth->add_option("fraction", cmd.arguments, "p/q, n or inf")
      ->required()
      ->expected(1);

  auto* braid
      = app.add_subcommand("braid", "Translate EXPR to a 3-strand braid word");
  braid->add_option("expr", cmd.arguments, "Tangle expression")
      ->required()
      ->expected(1);

  auto* unbraid = app.add_subcommand(
      "unbraid", "Translate a braid word (s1 s2^-1 ...) to a move word");
  unbraid->add_option("word", cmd.arguments, "Braid word")
      ->required()
      ->expected(1);

  auto* census = app.add_subcommand(
      "census", "Check classification laws on every word up to a length");
  census->add_option("--max-len", cmd.max_len, "Maximum word length")
      ->required()
      ->check(CLI::NonNegativeNumber);

  std::string fraction_opt;
  std::string output;
  auto*       svg = app.add_subcommand("svg", "Write a schematic SVG");
  svg->add_option("expr", cmd.arguments, "Tangle expression")->expected(0, 1);
  svg->add_option("--fraction", fraction_opt, "Draw the tangle with this fraction");
  svg->add_option("-o,--output", output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForVersion const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return tanglekit::exit_code::usage;
  }

  std::pair<CLI::App*, Verb> const verbs[] = {{fraction, Verb::Fraction},
                                              {equiv, Verb::Equiv},
                                              {canon, Verb::Canon},
                                              {synth, Verb::Synth},
                                              {braid, Verb::Braid},
                                              {unbraid, Verb::Unbraid},
                                              {census, Verb::Census},
                                              {svg, Verb::Svg}};
  for (auto const& [sub, verb] : verbs) {
    if (sub->parsed()) {
      cmd.verb = verb;
    }
  }
  cmd.output_mode
      = json ? tanglekit::OutputMode::Json : tanglekit::OutputMode::Text;
  if (!fraction_opt.empty()) {
    cmd.fraction = fraction_opt;
  }
  if (!output.empty() && output != "-") {
    cmd.output_path = output;
  }
  if (!read_budget(cmd.budget)) {
    std::cerr << "tanglekit: TANGLEKIT_BUDGET must be a nonnegative integer\n";
    return tanglekit::exit_code::usage;
  }

  auto result = tanglekit::run(cmd);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
