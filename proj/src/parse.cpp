#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "tanglekit/cli.hpp"
#include "tanglekit/errors.hpp"

namespace tanglekit {

  namespace {

    std::vector<std::string_view> split_tokens(std::string_view input) {
      std::vector<std::string_view> tokens;
      std::size_t                   i = 0;
      auto is_space = [](char ch) {
        return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r';
      };
      while (i < input.size()) {
        while (i < input.size() && is_space(input[i])) {
          ++i;
        }
        std::size_t start = i;
        while (i < input.size() && !is_space(input[i])) {
          ++i;
        }
        if (i > start) {
          tokens.push_back(input.substr(start, i - start));
        }
      }
      return tokens;
    }

    bool parse_int(std::string_view s, Int& out) {
      if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
      }
      if (s.empty()) {
        return false;
      }
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
      return ec == std::errc() && ptr == s.data() + s.size();
    }

    // "^k" suffix after a generator name; absent means 1.
    Int parse_exponent(std::string_view suffix,
                       std::size_t      index,
                       std::string_view token) {
      if (suffix.empty()) {
        return 1;
      }
      if (suffix.front() != '^') {
        throw ParseError(index, "unknown token '" + std::string(token) + "'");
      }
      Int k;
      if (!parse_int(suffix.substr(1), k)) {
        throw ParseError(index,
                         "bad exponent in '" + std::string(token) + "'");
      }
      if (k == 0) {
        throw ParseError(index, "zero exponent in '" + std::string(token) + "'");
      }
      return k;
    }

  }  // namespace

  TangleExpr parse_tangle(std::string_view input) {
    auto tokens = split_tokens(input);
    if (tokens.empty()) {
      throw ParseError(0, "empty expression");
    }
    TangleExpr t;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      auto        tok   = tokens[i];
      std::size_t index = i + 1;
      if (tok == "G=" || tok == "G||") {
        if (index != tokens.size()) {
          throw ParseError(index, "base '" + std::string(tok)
                                      + "' must be the last token");
        }
        t.base = tok == "G=" ? Base::Horizontal : Base::Vertical;
      } else if (tok.size() == 3 && tok[0] == 'X' && tok[1] >= '1'
                 && tok[1] <= '4' && (tok[2] == '+' || tok[2] == '-')) {
        t.moves.emplace_back(XMove{tok[1] - '0', tok[2] == '+'});
      } else if (tok == "R") {
        t.moves.emplace_back(RMove{});
      } else if (tok == "E") {
        // identity
      } else if (tok[0] == 'A' || tok[0] == 'B') {
        Letter l = tok[0] == 'A' ? Letter::A : Letter::B;
        t.moves.emplace_back(GenPower{l, parse_exponent(tok.substr(1), index, tok)});
      } else {
        throw ParseError(index, "unknown token '" + std::string(tok) + "'");
      }
    }
    return t;
  }

  BraidWord parse_braid(std::string_view input) {
    auto      tokens = split_tokens(input);
    BraidWord b;
    if (tokens.size() == 1 && tokens[0] == "e") {
      return b;
    }
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      auto        tok   = tokens[i];
      std::size_t index = i + 1;
      if (tok.size() < 2 || tok[0] != 's' || (tok[1] != '1' && tok[1] != '2')) {
        throw ParseError(index, "unknown token '" + std::string(tok) + "'");
      }
      BraidGen g = tok[1] == '1' ? BraidGen::Sigma1 : BraidGen::Sigma2;
      b.push_back(g, parse_exponent(tok.substr(2), index, tok));
    }
    return b;
  }

  ProjRat parse_fraction(std::string_view input) {
    auto tokens = split_tokens(input);
    if (tokens.size() != 1) {
      throw ParseError(0, "expected a single fraction p/q, integer or 'inf'");
    }
    auto tok = tokens[0];
    if (tok == "inf") {
      return ProjRat::infinity();
    }
    Int  p, q = 1;
    auto slash = tok.find('/');
    bool ok    = slash == std::string_view::npos
                  ? parse_int(tok, p)
                  : parse_int(tok.substr(0, slash), p)
                        && parse_int(tok.substr(slash + 1), q);
    if (!ok) {
      throw ParseError(1, "not a fraction: '" + std::string(tok) + "'");
    }
    try {
      return make_projrat(p, q);
    } catch (Error const& e) {
      throw ParseError(1, e.what());
    }
  }

}  // namespace tanglekit
