#include "tanglekit/tangle.hpp"

#include <stdexcept>

#include "tanglekit/qext.hpp"

namespace tanglekit {

  namespace {
    template <typename... Fs>
    struct overloaded : Fs... {
      using Fs::operator()...;
    };
    template <typename... Fs>
    overloaded(Fs...) -> overloaded<Fs...>;

    std::string base_token(Base b) {
      return b == Base::Horizontal ? "G=" : "G||";
    }
  }  // namespace

  std::string to_string(Move const& m) {
    return std::visit(
        overloaded{
            [](XMove const& x) {
              return "X" + std::to_string(x.index) + (x.positive ? "+" : "-");
            },
            [](GenPower const& g) {
              return detail::format_power(g.letter == Letter::A ? "A" : "B",
                                          g.exponent);
            },
            [](RMove const&) { return std::string("R"); }},
        m);
  }

  std::string to_string(TangleExpr const& t) {
    std::string out;
    for (auto const& m : t.moves) {
      out += to_string(m);
      out += ' ';
    }
    return out + base_token(t.base);
  }

  GenWord reduce_moves(TangleExpr const& t) {
    GenWord w;
    for (auto const& m : t.moves) {
      std::visit(overloaded{[&w](XMove const& x) {
                              if (x.index < 1 || x.index > 4) {
                                throw std::invalid_argument(
                                    "twist index must be 1..4, found "
                                    + std::to_string(x.index));
                              }
                              // X1 ~ X3 and X2 ~ X4 up to isotopy.
                              Letter l = x.index % 2 == 1 ? Letter::A
                                                          : Letter::B;
                              w.push_back(l, x.positive ? 1 : -1);
                            },
                            [&w](GenPower const& g) {
                              w.push_back(g.letter, g.exponent);
                            },
                            [&w](RMove const&) {
                              w.push_back(Letter::A, 1);
                              w.push_back(Letter::B, -1);
                              w.push_back(Letter::A, 1);
                            }},
                 m);
    }
    if (t.base == Base::Vertical) {
      w.push_back(Letter::B, -1);
      w.push_back(Letter::A, 1);
    }
    return w;
  }

  ProjRat fraction_of(TangleExpr const& t) {
    return act_projective(word_to_matrix(reduce_moves(t)), ProjRat::zero());
  }

  TangleClass classify(TangleExpr const& t) {
    return TangleClass{fraction_of(t)};
  }

  bool equivalent(TangleExpr const& t1, TangleExpr const& t2) {
    return fraction_of(t1) == fraction_of(t2);
  }

  TangleExpr alternating_form(ProjRat const& v) {
    TangleExpr t;
    if (v.is_infinity()) {
      t.base = Base::Vertical;
      return t;
    }
    GenWord w = cf_to_word(odd_cf(v));
    for (auto const& s : w.syllables()) {
      t.moves.emplace_back(GenPower{s.gen, s.exponent});
    }
    return t;
  }

  bool stabilizer_contains(GenWord const& w, TangleExpr const& t) {
    ProjRat v = fraction_of(t);
    return act_projective(word_to_matrix(w), v) == v;
  }

  TangleExpr apply(GenWord const& w, TangleExpr const& t) {
    TangleExpr result{t.base, {}};
    result.moves.reserve(w.size() + t.moves.size());
    for (auto const& s : w.syllables()) {
      result.moves.emplace_back(GenPower{s.gen, s.exponent});
    }
    result.moves.insert(result.moves.end(), t.moves.begin(), t.moves.end());
    return result;
  }

  TangleExpr apply_r(TangleExpr const& t) {
    TangleExpr result{t.base, {RMove{}}};
    result.moves.insert(result.moves.end(), t.moves.begin(), t.moves.end());
    return result;
  }

}  // namespace tanglekit
