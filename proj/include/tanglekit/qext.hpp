// Odd continued fractions and their correspondence with alternating
// generator words A^a1 B^a2 A^a3 ... A^an.

#ifndef TANGLEKIT_QEXT_HPP_
#define TANGLEKIT_QEXT_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "checked.hpp"
#include "projrat.hpp"
#include "psl2z.hpp"

namespace tanglekit {

  // [a1; a2, ..., an] with n odd, a2..an all strictly positive or all
  // strictly negative, and a1 of that sign or zero. [0] is zero.
  class OddCF {
   public:
    // Throws std::invalid_argument if the elements violate the invariants.
    explicit OddCF(std::vector<Int> elements);

    [[nodiscard]] std::span<Int const> elements() const noexcept {
      return _elements;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _elements.size();
    }

    bool operator==(OddCF const&) const = default;

   private:
    std::vector<Int> _elements;
  };

  // "[2,2,1]"
  std::string to_string(OddCF const& cf);

  // Throws InfinityHasNoCFError for (1:0).
  OddCF odd_cf(ProjRat const& v);

  ProjRat cf_eval(OddCF const& cf);

  // A^a1 B^a2 ... A^an; a zero a1 is dropped.
  GenWord cf_to_word(OddCF const& cf);

  // Value of an arbitrary finite continued fraction [a1; a2, ..., an] on the
  // projective line, odd or even length. Throws std::invalid_argument on an
  // empty list.
  ProjRat evaluate_continued_fraction(std::span<Int const> elements);

}  // namespace tanglekit

#endif  // TANGLEKIT_QEXT_HPP_
