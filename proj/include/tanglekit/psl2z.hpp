// Exact arithmetic in the modular group PSL(2, Z).
//
// The twist moves A and B act as the matrices
//
//   A = (1 1)     B = (1 0)
//       (0 1)         (1 1)
//
// and S = A B^-1 A = (0 1; -1 0) is the half rotation. Elements are stored
// as a single canonical representative of the pair {M, -M}.

#ifndef TANGLEKIT_PSL2Z_HPP_
#define TANGLEKIT_PSL2Z_HPP_

#include <compare>
#include <cstdint>
#include <string>

#include "checked.hpp"
#include "projrat.hpp"
#include "syllable_word.hpp"

namespace tanglekit {

  enum class Letter : std::uint8_t { A, B };

  using GenWord = SyllableWord<Letter>;

  // "A^2 B^-1 A"; the empty word prints as "E".
  std::string to_string(GenWord const& w);

  // A 2x2 integer matrix of determinant 1, up to sign. The first nonzero
  // entry in the order (a, b, c, d) is positive.
  class Psl2Elem {
   public:
    // The identity E.
    constexpr Psl2Elem() noexcept = default;

    // Row-major (a b; c d). Throws std::invalid_argument unless
    // a*d - b*c == 1; the sign is canonicalised.
    Psl2Elem(Int a, Int b, Int c, Int d);

    [[nodiscard]] static Psl2Elem identity() noexcept {
      return Psl2Elem();
    }
    [[nodiscard]] static Psl2Elem gen_a() {
      return Psl2Elem(1, 1, 0, 1);
    }
    [[nodiscard]] static Psl2Elem gen_b() {
      return Psl2Elem(1, 0, 1, 1);
    }
    [[nodiscard]] static Psl2Elem gen_s() {
      return Psl2Elem(0, 1, -1, 0);
    }
    // A^k = (1 k; 0 1), B^k = (1 0; k 1)
    [[nodiscard]] static Psl2Elem a_power(Int k) {
      return Psl2Elem(1, k, 0, 1);
    }
    [[nodiscard]] static Psl2Elem b_power(Int k) {
      return Psl2Elem(1, 0, k, 1);
    }

    [[nodiscard]] constexpr Int a() const noexcept {
      return _a;
    }
    [[nodiscard]] constexpr Int b() const noexcept {
      return _b;
    }
    [[nodiscard]] constexpr Int c() const noexcept {
      return _c;
    }
    [[nodiscard]] constexpr Int d() const noexcept {
      return _d;
    }

    constexpr auto operator<=>(Psl2Elem const&) const = default;

   private:
    Int _a = 1;
    Int _b = 0;
    Int _c = 0;
    Int _d = 1;
  };

  // "(a b; c d)"
  std::string to_string(Psl2Elem const& m);

  Psl2Elem compose(Psl2Elem const& m, Psl2Elem const& n);
  Psl2Elem inverse(Psl2Elem const& m);

  inline Psl2Elem operator*(Psl2Elem const& m, Psl2Elem const& n) {
    return compose(m, n);
  }

  // Matrix of a single syllable gen^exponent.
  Psl2Elem power(Letter gen, Int exponent);

  // Product of the generator powers, left to right; the empty word maps to E.
  Psl2Elem word_to_matrix(GenWord const& w);

  // (p:q) |-> (a p + b q : c p + d q). Total, including infinity.
  ProjRat act_projective(Psl2Elem const& m, ProjRat const& v);

  // True iff m == B^k = (1 0; k 1) for some integer k.
  bool is_b_power(Psl2Elem const& m);

  enum class VtPrefix : std::uint8_t { E, S };

  // m = V T with V in {E, S} and T a word in only positive or only negative
  // exponents.
  struct VtForm {
    VtPrefix v = VtPrefix::E;
    GenWord  t;

    bool operator==(VtForm const&) const = default;
  };

  VtForm vt_normal_form(Psl2Elem const& m);

  // (matrix of v) * (matrix of t)
  Psl2Elem vt_matrix(VtForm const& f);

  // Canonical word W B^k for m, where W is the odd continued fraction word of
  // the second column (b:d), or B^-1 A when d == 0.
  GenWord matrix_to_word(Psl2Elem const& m);

}  // namespace tanglekit

#endif  // TANGLEKIT_PSL2Z_HPP_
