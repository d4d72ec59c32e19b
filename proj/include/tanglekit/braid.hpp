// Translation between tangle-move words and three-strand braids modulo the
// full twist (s1 s2)^3.
//
// A <-> s1, B <-> s2^-1, with the order of the letters reversed.

#ifndef TANGLEKIT_BRAID_HPP_
#define TANGLEKIT_BRAID_HPP_

#include <cstdint>
#include <string>

#include "psl2z.hpp"
#include "syllable_word.hpp"

namespace tanglekit {

  enum class BraidGen : std::uint8_t { Sigma1, Sigma2 };

  // Read left to right as top to bottom.
  using BraidWord = SyllableWord<BraidGen>;

  // "s1^2 s2^-1"; the empty braid prints as "e".
  std::string to_string(BraidWord const& b);

  BraidWord to_braid(GenWord const& w);
  GenWord   from_braid(BraidWord const& b);

  // Equality in B3 / <(s1 s2)^3>, decided through the modular group.
  bool braid_equivalent(BraidWord const& b1, BraidWord const& b2);

}  // namespace tanglekit

#endif  // TANGLEKIT_BRAID_HPP_
