#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "oracle.hpp"

#include "tanglekit/cli.hpp"
#include "tanglekit/errors.hpp"

using namespace tanglekit;

namespace {
  Command make(Verb v, std::vector<std::string> args, OutputMode mode = OutputMode::Text) {
    Command c;
    c.verb        = v;
    c.arguments   = std::move(args);
    c.output_mode = mode;
    return c;
  }

  std::size_t count(std::string const& hay, std::string const& needle) {
    std::size_t n = 0;
    for (auto pos = hay.find(needle); pos != std::string::npos;
         pos      = hay.find(needle, pos + 1)) {
      ++n;
    }
    return n;
  }

  std::size_t token_of(std::string const& input) {
    try {
      parse_tangle(input);
    } catch (ParseError const& e) {
      return e.token_index();
    }
    return static_cast<std::size_t>(-1);
  }
}  // namespace

TEST_CASE("parse_tangle") {
  TangleExpr t = parse_tangle("X3+ X2+ X4- X4- X3+ X1+ G=");
  CHECK(t.base == Base::Horizontal);
  REQUIRE(t.moves.size() == 6);
  CHECK(t.moves[0] == Move{XMove{3, true}});
  CHECK(t.moves[2] == Move{XMove{4, false}});

  TangleExpr base = parse_tangle("G=");
  CHECK(base == TangleExpr{});

  TangleExpr w = parse_tangle("A^2 B^2 A G=");
  CHECK(w.moves == std::vector<Move>{GenPower{Letter::A, 2},
                                     GenPower{Letter::B, 2},
                                     GenPower{Letter::A, 1}});
  CHECK(parse_tangle("R  A^-3\tG||")
        == TangleExpr{Base::Vertical, {RMove{}, GenPower{Letter::A, -3}}});
  CHECK(parse_tangle("A") == TangleExpr{Base::Horizontal, {GenPower{Letter::A, 1}}});
  CHECK(parse_tangle("E G||") == TangleExpr{Base::Vertical, {}});
  CHECK(parse_tangle("B^+2").moves.front() == Move{GenPower{Letter::B, 2}});
}

TEST_CASE("parse_tangle errors") {
  CHECK_THROWS_AS(parse_tangle(""), ParseError);
  CHECK(token_of("   ") == 0);
  CHECK(token_of("A Q G=") == 2);
  CHECK(token_of("A^0 G=") == 1);
  CHECK(token_of("G= A") == 1);
  CHECK(token_of("A X5+") == 2);
  CHECK(token_of("A^x") == 1);
  CHECK(token_of("A^99999999999999999999") == 1);
  CHECK(token_of("Ab") == 1);
}

TEST_CASE("parse_braid and parse_fraction") {
  CHECK(parse_braid("s2^-1 s1^2") == BraidWord{{BraidGen::Sigma2, -1}, {BraidGen::Sigma1, 2}});
  CHECK(parse_braid("").empty());
  CHECK(parse_braid("e").empty());
  CHECK_THROWS_AS(parse_braid("s3"), ParseError);
  CHECK_THROWS_AS(parse_braid("s1^0"), ParseError);

  CHECK(parse_fraction("7/3") == make_projrat(7, 3));
  CHECK(parse_fraction("-1") == make_projrat(-1, 1));
  CHECK(parse_fraction("inf") == ProjRat::infinity());
  CHECK(parse_fraction("2/0") == ProjRat::infinity());
  CHECK(parse_fraction("4/-6") == make_projrat(-2, 3));
  CHECK_THROWS_AS(parse_fraction("0/0"), ParseError);
  CHECK_THROWS_AS(parse_fraction("x"), ParseError);
  CHECK_THROWS_AS(parse_fraction("1/2 3"), ParseError);
}

TEST_CASE("print/parse round trip") {
  oracle::Gen g(51);
  for (int i = 0; i < 500; ++i) {
    TangleExpr t = g.tangle(8);
    TangleExpr u = parse_tangle(to_string(t));
    CHECK(u == t);
    CHECK(reduce_moves(u) == reduce_moves(t));
  }
}

TEST_CASE("run: golden text outputs") {
  RunResult f = run(make(Verb::Fraction, {"A^2 B^2 A G="}));
  CHECK(f.out == "7/3\n");
  CHECK(f.exit_code == 0);

  RunResult e = run(make(Verb::Equiv, {"X3+ X2+ X4- X4- X3+ X1+ G=", "X3+ X2- X3+ X1+ G="}));
  CHECK(e.out == "true\n");
  CHECK(e.exit_code == 0);

  RunResult s = run(make(Verb::Synth, {"0/1"}));
  CHECK(s.out == "G=\n");
  CHECK(s.exit_code == 0);
}

TEST_CASE("run: other verbs") {
  CHECK(run(make(Verb::Fraction, {"G||"})).out == "inf\n");
  CHECK(run(make(Verb::Fraction, {"X3+ X2- X3+ X1+ G="})).out == "-1/1\n");

  RunResult ne = run(make(Verb::Equiv, {"G=", "A G="}));
  CHECK(ne.out == "false\n");
  CHECK(ne.exit_code == 1);

  CHECK(run(make(Verb::Canon, {"X3+ X2+ X4- X4- X3+ X1+ G="})).out == "A^-1 G=\n");
  CHECK(run(make(Verb::Canon, {"R G="})).out == "G||\n");
  CHECK(run(make(Verb::Synth, {"7/3"})).out == "A^2 B^2 A G=\n");
  CHECK(run(make(Verb::Synth, {"inf"})).out == "G||\n");
  CHECK(run(make(Verb::Synth, {"-1/2"})).out == "B^-1 A^-1 G=\n");
  CHECK(run(make(Verb::Braid, {"A^2 B G="})).out == "s2^-1 s1^2\n");
  CHECK(run(make(Verb::Braid, {"G||"})).out == "s1 s2\n");
  CHECK(run(make(Verb::Unbraid, {"s2^-1 s1^2"})).out == "A^2 B\n");
  CHECK(run(make(Verb::Unbraid, {"e"})).out == "E\n");
}

TEST_CASE("run: errors and exit codes") {
  RunResult bad = run(make(Verb::Fraction, {"A Q G="}));
  CHECK(bad.exit_code == exit_code::usage);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("token 2") != std::string::npos);

  CHECK(run(make(Verb::Equiv, {"G="})).exit_code == exit_code::usage);
  CHECK(run(make(Verb::Synth, {"0/0"})).exit_code == exit_code::usage);
  CHECK(run(make(Verb::Fraction, {"A^4611686018427387904 B^4 A^4 G="})).exit_code
        == exit_code::usage);

  Command census = make(Verb::Census, {});
  census.max_len = 5;
  census.budget  = 100;
  CHECK(run(census).exit_code == exit_code::usage);

  RunResult json_err = run(make(Verb::Fraction, {"G= A"}, OutputMode::Json));
  auto      j        = nlohmann::json::parse(json_err.out);
  CHECK(j["error"]["token"] == 1);
  CHECK(j["verb"] == "fraction");
}

TEST_CASE("run: json mode") {
  auto j = nlohmann::json::parse(
      run(make(Verb::Fraction, {"A^2 B^2 A G="}, OutputMode::Json)).out);
  CHECK(j == nlohmann::json{{"verb", "fraction"},
                            {"input", "A^2 B^2 A G="},
                            {"result", {{"p", 7}, {"q", 3}}}});
  auto inf = nlohmann::json::parse(run(make(Verb::Fraction, {"G||"}, OutputMode::Json)).out);
  CHECK(inf["result"] == nlohmann::json{{"p", 1}, {"q", 0}});

  auto eq = nlohmann::json::parse(run(make(Verb::Equiv, {"G=", "B^5 G="}, OutputMode::Json)).out);
  CHECK(eq["result"] == true);
  CHECK(eq["input"] == nlohmann::json::array({"G=", "B^5 G="}));

  Command census = make(Verb::Census, {}, OutputMode::Json);
  census.max_len = 3;
  auto c = nlohmann::json::parse(run(census).out);
  CHECK(c["input"]["max_len"] == 3);
  CHECK(c["result"]["word_count"] == 85);
  CHECK(c["result"]["matrix_classes"] == 42);
  CHECK(c["result"]["fraction_classes"] == 16);
  CHECK(c["result"]["violations"].empty());
}

TEST_CASE("run: census text") {
  Command census = make(Verb::Census, {});
  census.max_len = 2;
  RunResult r = run(census);
  CHECK(r.exit_code == 0);
  CHECK(r.out
        == "max_len 2\nword_count 21\nmatrix_classes 17\nfraction_classes 8\n"
           "violations 0\n");
}

TEST_CASE("equiv is symmetric and transitive") {
  oracle::Gen g(52);
  auto eq = [](TangleExpr const& a, TangleExpr const& b) {
    return run(make(Verb::Equiv, {to_string(a), to_string(b)})).exit_code == 0;
  };
  int positive = 0;
  for (int i = 0; i < 300; ++i) {
    // Small moves so that equal classes come up regularly.
    TangleExpr a = g.tangle(3), b = g.tangle(3), c = g.tangle(3);
    CHECK(eq(a, b) == eq(b, a));
    if (eq(a, b) && eq(b, c)) {
      CHECK(eq(a, c));
      ++positive;
    }
    // Guaranteed equal pair
    TangleExpr d = apply(oracle::Gen::to_word({{'B', 2}}), TangleExpr{});
    CHECK(eq(d, TangleExpr{}));
  }
  CHECK(positive > 0);
}

TEST_CASE("svg rendering") {
  std::string zero = render_svg(TangleExpr{});
  CHECK(count(zero, "class=\"twist\"") == 0);
  for (auto label : {">1</text>", ">2</text>", ">3</text>", ">4</text>"}) {
    CHECK(count(zero, label) == 1);
  }
  CHECK(zero.rfind("<?xml", 0) == 0);
  CHECK(zero.find("version=\"1.1\"") != std::string::npos);

  std::string seven = render_svg(alternating_form(make_projrat(7, 3)));
  CHECK(count(seven, "class=\"twist\"") == 3);
  CHECK(count(seven, ">+2</text>") == 2);
  CHECK(count(seven, ">+1</text>") == 1);

  std::string minus = render_svg(parse_tangle("X3+ X2- X3+ X1+ G="));
  CHECK(count(minus, "class=\"twist\"") == 1);
  CHECK(count(minus, ">-1</text>") == 1);

  // Canonicalised: isotopic inputs draw the same picture.
  CHECK(minus == render_svg(alternating_form(make_projrat(-1, 1))));
  CHECK(seven == render_svg(alternating_form(make_projrat(7, 3))));
  CHECK(render_svg(TangleExpr{Base::Vertical, {}}).find("class=\"twist\"")
        == std::string::npos);
}

TEST_CASE("emit_svg writes files") {
  auto dir  = std::filesystem::temp_directory_path();
  auto path = dir / "tanglekit_test_emit.svg";
  emit_svg(parse_tangle("A^2 B^2 A G="), path);
  std::ifstream     in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == render_svg(parse_tangle("A^2 B^2 A G=")));
  std::filesystem::remove(path);

  CHECK_THROWS_AS(emit_svg(TangleExpr{}, dir / "no" / "such" / "dir" / "x.svg"),
                  IoError);

  Command c = make(Verb::Svg, {});
  c.fraction    = "7/3";
  c.output_path = dir / "no" / "such" / "dir" / "x.svg";
  CHECK(run(c).exit_code == exit_code::io);
}
