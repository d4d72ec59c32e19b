// Points of the projective rational line: reduced pairs (p:q) with the
// point at infinity (1:0).

#ifndef TANGLEKIT_PROJRAT_HPP_
#define TANGLEKIT_PROJRAT_HPP_

#include <compare>
#include <string>

#include "checked.hpp"

namespace tanglekit {

  // Invariant: gcd(|p|, |q|) = 1 and either q > 0, or q = 0 and p = 1.
  class ProjRat {
   public:
    // The zero point (0:1).
    constexpr ProjRat() noexcept = default;

    [[nodiscard]] static constexpr ProjRat zero() noexcept {
      return ProjRat();
    }
    [[nodiscard]] static constexpr ProjRat infinity() noexcept {
      return ProjRat(1, 0);
    }

    [[nodiscard]] constexpr Int p() const noexcept {
      return _p;
    }
    [[nodiscard]] constexpr Int q() const noexcept {
      return _q;
    }
    [[nodiscard]] constexpr bool is_infinity() const noexcept {
      return _q == 0;
    }

    constexpr auto operator<=>(ProjRat const&) const = default;

   private:
    friend ProjRat make_projrat(Int p, Int q);

    constexpr ProjRat(Int p, Int q) noexcept : _p(p), _q(q) {}

    Int _p = 0;
    Int _q = 1;
  };

  // Canonical representative of (p:q). Throws BothZeroError for (0, 0).
  ProjRat make_projrat(Int p, Int q);

  // "p/q" for finite points (integers included, e.g. "-1/1"), "inf" for
  // infinity.
  std::string to_string(ProjRat const& v);

}  // namespace tanglekit

#endif  // TANGLEKIT_PROJRAT_HPP_
