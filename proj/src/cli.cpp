#include "tanglekit/cli.hpp"

#include <stdexcept>

#include "tanglekit/errors.hpp"

namespace tanglekit {

  using nlohmann::json;

  std::string to_string(Verb v) {
    switch (v) {
      case Verb::Fraction:
        return "fraction";
      case Verb::Equiv:
        return "equiv";
      case Verb::Canon:
        return "canon";
      case Verb::Synth:
        return "synth";
      case Verb::Braid:
        return "braid";
      case Verb::Unbraid:
        return "unbraid";
      case Verb::Census:
        return "census";
      case Verb::Svg:
        return "svg";
    }
    return "unknown";
  }

  json to_json(ProjRat const& v) {
    return json{{"p", v.p()}, {"q", v.q()}};
  }

  json to_json(CensusReport const& r) {
    json violations = json::array();
    for (auto const& v : r.violations) {
      violations.push_back({{"kind", to_string(v.kind)},
                            {"first", to_string(v.first)},
                            {"second", to_string(v.second)}});
    }
    return json{{"max_len", r.max_len},
                {"word_count", r.word_count},
                {"matrix_classes", r.matrix_classes},
                {"fraction_classes", r.fraction_classes},
                {"violations", violations}};
  }

  namespace {

    class UsageError : public Error {
     public:
      using Error::Error;
    };

    struct Outcome {
      int         exit_code = exit_code::ok;
      std::string text;
      json        result;
    };

    std::string const& only_argument(Command const& cmd) {
      if (cmd.arguments.size() != 1) {
        throw UsageError(to_string(cmd.verb) + " expects exactly one argument");
      }
      return cmd.arguments.front();
    }

    std::string census_text(CensusReport const& r) {
      std::string s;
      s += "max_len " + std::to_string(r.max_len) + "\n";
      s += "word_count " + std::to_string(r.word_count) + "\n";
      s += "matrix_classes " + std::to_string(r.matrix_classes) + "\n";
      s += "fraction_classes " + std::to_string(r.fraction_classes) + "\n";
      s += "violations " + std::to_string(r.violations.size());
      for (auto const& v : r.violations) {
        s += "\n" + to_string(v.kind) + ": " + to_string(v.first) + " | "
             + to_string(v.second);
      }
      return s;
    }

    Outcome dispatch(Command const& cmd) {
      switch (cmd.verb) {
        case Verb::Fraction: {
          ProjRat v = fraction_of(parse_tangle(only_argument(cmd)));
          return {exit_code::ok, to_string(v), to_json(v)};
        }
        case Verb::Equiv: {
          if (cmd.arguments.size() != 2) {
            throw UsageError("equiv expects exactly two expressions");
          }
          bool same = equivalent(parse_tangle(cmd.arguments[0]),
                                 parse_tangle(cmd.arguments[1]));
          return {same ? exit_code::ok : exit_code::negative,
                  same ? "true" : "false",
                  same};
        }
        case Verb::Canon: {
          std::string s = to_string(
              alternating_form(fraction_of(parse_tangle(only_argument(cmd)))));
          return {exit_code::ok, s, s};
        }
        case Verb::Synth: {
          std::string s
              = to_string(alternating_form(parse_fraction(only_argument(cmd))));
          return {exit_code::ok, s, s};
        }
        case Verb::Braid: {
          std::string s
              = to_string(to_braid(reduce_moves(parse_tangle(only_argument(cmd)))));
          return {exit_code::ok, s, s};
        }
        case Verb::Unbraid: {
          std::string s = to_string(from_braid(parse_braid(only_argument(cmd))));
          return {exit_code::ok, s, s};
        }
        case Verb::Census: {
          if (!cmd.arguments.empty()) {
            throw UsageError("census takes no positional arguments");
          }
          CensusReport r = run_census(cmd.max_len, cmd.budget);
          return {r.violations.empty() ? exit_code::ok : exit_code::violation,
                  census_text(r),
                  to_json(r)};
        }
        case Verb::Svg: {
          TangleExpr t;
          if (cmd.fraction) {
            if (!cmd.arguments.empty()) {
              throw UsageError("svg takes either EXPR or --fraction, not both");
            }
            t = alternating_form(parse_fraction(*cmd.fraction));
          } else {
            t = parse_tangle(only_argument(cmd));
          }
          if (!cmd.output_path) {
            std::string doc = render_svg(t);
            // The document already ends with a newline.
            doc.pop_back();
            return {exit_code::ok, doc, doc};
          }
          emit_svg(t, *cmd.output_path);
          return {exit_code::ok,
                  cmd.output_path->string(),
                  cmd.output_path->string()};
        }
      }
      throw UsageError("unknown verb");
    }

    json input_of(Command const& cmd) {
      if (cmd.verb == Verb::Census) {
        return json{{"max_len", cmd.max_len}};
      }
      if (cmd.verb == Verb::Svg && cmd.fraction) {
        return json{{"fraction", *cmd.fraction}};
      }
      if (cmd.arguments.size() == 1) {
        return cmd.arguments.front();
      }
      return cmd.arguments;
    }

    RunResult failure(Command const&      cmd,
                      int                 code,
                      std::string const&  message,
                      std::optional<long> token = std::nullopt) {
      RunResult r;
      r.exit_code = code;
      if (cmd.output_mode == OutputMode::Json) {
        json err{{"message", message}};
        if (token) {
          err["token"] = *token;
        }
        r.out = json{{"verb", to_string(cmd.verb)},
                     {"input", input_of(cmd)},
                     {"error", err}}
                    .dump()
                + "\n";
      } else {
        r.err = "tanglekit: " + message + "\n";
      }
      return r;
    }

  }  // namespace

  RunResult run(Command const& cmd) {
    try {
      Outcome   o = dispatch(cmd);
      RunResult r;
      r.exit_code = o.exit_code;
      if (cmd.output_mode == OutputMode::Json) {
        r.out = json{{"verb", to_string(cmd.verb)},
                     {"input", input_of(cmd)},
                     {"result", o.result}}
                    .dump()
                + "\n";
      } else {
        r.out = o.text + "\n";
      }
      return r;
    } catch (ParseError const& e) {
      return failure(cmd,
                     exit_code::usage,
                     "parse error: " + std::string(e.what()),
                     static_cast<long>(e.token_index()));
    } catch (IoError const& e) {
      return failure(cmd, exit_code::io, e.what());
    } catch (InternalError const& e) {
      return failure(cmd, exit_code::violation, e.what());
    } catch (Error const& e) {
      // usage, overflow, budget
      return failure(cmd, exit_code::usage, e.what());
    } catch (std::invalid_argument const& e) {
      return failure(cmd, exit_code::usage, e.what());
    }
  }

}  // namespace tanglekit
