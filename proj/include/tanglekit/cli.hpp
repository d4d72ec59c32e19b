// Command-line surface: expression parsers, verb dispatch, JSON and SVG
// output. The executable in tools/ is a thin wrapper around run().

#ifndef TANGLEKIT_CLI_HPP_
#define TANGLEKIT_CLI_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "braid.hpp"
#include "enumerate.hpp"
#include "projrat.hpp"
#include "tangle.hpp"

namespace tanglekit {

  // Whitespace separated tokens, leftmost applied last:
  //   X1+ .. X4-   twists
  //   A, B, A^k    generator powers (k a nonzero integer)
  //   R            half rotation
  //   E            identity (no-op)
  //   G= | G||     base, optional, must be the final token (default G=)
  // Throws ParseError.
  TangleExpr parse_tangle(std::string_view input);

  // "s1 s2^-1 s1^2"; "" or "e" is the empty braid. Throws ParseError.
  BraidWord parse_braid(std::string_view input);

  // "p/q", "n" or "inf". Throws ParseError.
  ProjRat parse_fraction(std::string_view input);

  enum class Verb : std::uint8_t {
    Fraction,
    Equiv,
    Canon,
    Synth,
    Braid,
    Unbraid,
    Census,
    Svg,
  };

  std::string to_string(Verb v);

  enum class OutputMode : std::uint8_t { Text, Json };

  struct Command {
    Verb                     verb = Verb::Fraction;
    std::vector<std::string> arguments;
    OutputMode               output_mode = OutputMode::Text;
    // census
    int           max_len = 0;
    std::uint64_t budget  = kDefaultWordBudget;
    // svg: write here instead of stdout
    std::optional<std::filesystem::path> output_path;
    // svg: synthesise from this fraction instead of parsing arguments[0]
    std::optional<std::string> fraction;
  };

  namespace exit_code {
    inline constexpr int ok        = 0;
    inline constexpr int negative  = 1;  // equiv answered false
    inline constexpr int usage     = 2;
    inline constexpr int violation = 3;
    inline constexpr int io        = 4;
  }  // namespace exit_code

  struct RunResult {
    int         exit_code = exit_code::ok;
    std::string out;
    std::string err;
  };

  RunResult run(Command const& cmd);

  nlohmann::json to_json(ProjRat const& v);
  nlohmann::json to_json(CensusReport const& r);

  // Schematic SVG 1.1 of the canonical alternating form of t: the four
  // endpoints on a circle and one labelled box per twist syllable.
  // Deterministic: equal classes give byte-identical documents.
  std::string render_svg(TangleExpr const& t);

  // Throws IoError if the file cannot be written.
  void emit_svg(TangleExpr const& t, std::filesystem::path const& path);

}  // namespace tanglekit

#endif  // TANGLEKIT_CLI_HPP_
