// Rational tangles as move expressions over a base tangle, and their
// classification by the fraction invariant.
//
// Endpoints are numbered 1..4 clockwise starting from the upper right.
// Expressions read like X3+ X2+ X1+ G=: the rightmost move is applied first.

#ifndef TANGLEKIT_TANGLE_HPP_
#define TANGLEKIT_TANGLE_HPP_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "checked.hpp"
#include "projrat.hpp"
#include "psl2z.hpp"

namespace tanglekit {

  // Horizontal is the tangle written G= (two horizontal arcs, fraction 0);
  // Vertical is G|| (fraction infinity).
  enum class Base : std::uint8_t { Horizontal, Vertical };

  // Twist of the endpoint pair around endpoint `index` (1..4).
  struct XMove {
    int  index    = 1;
    bool positive = true;

    bool operator==(XMove const&) const = default;
  };

  struct GenPower {
    Letter letter   = Letter::A;
    Int    exponent = 1;

    bool operator==(GenPower const&) const = default;
  };

  // Half rotation about the diagonal through endpoints 1 and 3.
  struct RMove {
    bool operator==(RMove const&) const = default;
  };

  using Move = std::variant<XMove, GenPower, RMove>;

  struct TangleExpr {
    Base              base = Base::Horizontal;
    std::vector<Move> moves;

    bool operator==(TangleExpr const&) const = default;
  };

  // The isotopy class of a rational tangle is determined by its fraction.
  struct TangleClass {
    ProjRat fraction;

    auto operator<=>(TangleClass const&) const = default;
  };

  // Same surface syntax that the CLI parser accepts, e.g. "A^2 B^2 A G=".
  std::string to_string(Move const& m);
  std::string to_string(TangleExpr const& t);

  // Word w with t ~ w G=. X1, X3 -> A; X2, X4 -> B; R -> A B^-1 A;
  // the base G|| contributes a trailing B^-1 A. Throws std::invalid_argument
  // on an X index outside 1..4.
  GenWord reduce_moves(TangleExpr const& t);

  ProjRat fraction_of(TangleExpr const& t);

  TangleClass classify(TangleExpr const& t);

  bool equivalent(TangleExpr const& t1, TangleExpr const& t2);

  // Canonical alternating representative: G= followed by the odd continued
  // fraction word for finite v, or bare G|| for infinity.
  TangleExpr alternating_form(ProjRat const& v);

  // True iff w fixes the class of t.
  bool stabilizer_contains(GenWord const& w, TangleExpr const& t);

  // w t: the syllables of w are placed in front of (applied after) t's moves.
  TangleExpr apply(GenWord const& w, TangleExpr const& t);

  // R t
  TangleExpr apply_r(TangleExpr const& t);

}  // namespace tanglekit

#endif  // TANGLEKIT_TANGLE_HPP_
