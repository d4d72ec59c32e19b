// Run-length encoded words over a two-letter alphabet with integer
// exponents. Used for both generator words (A, B) and braid words (s1, s2).

#ifndef TANGLEKIT_SYLLABLE_WORD_HPP_
#define TANGLEKIT_SYLLABLE_WORD_HPP_

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "checked.hpp"

namespace tanglekit {

  template <typename Gen>
  struct Syllable {
    Gen gen;
    Int exponent;

    bool operator==(Syllable const&) const = default;
  };

  // Invariant: adjacent syllables carry distinct generators and no exponent
  // is zero. Only free cancellation of a generator against its own powers is
  // performed; no group relations are applied.
  template <typename Gen>
  class SyllableWord {
   public:
    using syllable_type = Syllable<Gen>;

    SyllableWord() = default;

    SyllableWord(std::initializer_list<syllable_type> syllables) {
      for (auto const& s : syllables) {
        push_back(s.gen, s.exponent);
      }
    }

    explicit SyllableWord(std::span<syllable_type const> syllables) {
      for (auto const& s : syllables) {
        push_back(s.gen, s.exponent);
      }
    }

    // Appends gen^exponent, merging with the last syllable when the
    // generators agree. A zero exponent is a no-op.
    void push_back(Gen gen, Int exponent) {
      if (exponent == 0) {
        return;
      }
      if (!_syllables.empty() && _syllables.back().gen == gen) {
        Int merged = checked::add(_syllables.back().exponent, exponent);
        if (merged == 0) {
          _syllables.pop_back();
        } else {
          _syllables.back().exponent = merged;
        }
        return;
      }
      _syllables.push_back({gen, exponent});
    }

    void append(SyllableWord const& other) {
      for (auto const& s : other._syllables) {
        push_back(s.gen, s.exponent);
      }
    }

    [[nodiscard]] SyllableWord inverse() const {
      SyllableWord result;
      for (auto it = _syllables.rbegin(); it != _syllables.rend(); ++it) {
        result._syllables.push_back({it->gen, checked::neg(it->exponent)});
      }
      return result;
    }

    [[nodiscard]] std::span<syllable_type const> syllables() const noexcept {
      return _syllables;
    }

    [[nodiscard]] bool empty() const noexcept {
      return _syllables.empty();
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _syllables.size();
    }

    // Number of letters, i.e. the sum of |exponent|.
    [[nodiscard]] Int letter_length() const {
      Int n = 0;
      for (auto const& s : _syllables) {
        n = checked::add(n, checked::abs(s.exponent));
      }
      return n;
    }

    // All exponents positive, or all negative. The empty word qualifies.
    [[nodiscard]] bool sign_homogeneous() const noexcept {
      return std::all_of(_syllables.begin(),
                         _syllables.end(),
                         [](auto const& s) { return s.exponent > 0; })
             || std::all_of(_syllables.begin(),
                            _syllables.end(),
                            [](auto const& s) { return s.exponent < 0; });
    }

    bool operator==(SyllableWord const&) const = default;

   private:
    std::vector<syllable_type> _syllables;
  };

  // Concatenation, run-merged.
  template <typename Gen>
  SyllableWord<Gen> operator+(SyllableWord<Gen> lhs,
                              SyllableWord<Gen> const& rhs) {
    lhs.append(rhs);
    return lhs;
  }

  namespace detail {
    // "x", "x^3", "x^-2"
    inline std::string format_power(std::string const& name, Int exponent) {
      if (exponent == 1) {
        return name;
      }
      return name + "^" + std::to_string(exponent);
    }

    template <typename Gen, typename NameFn>
    std::string format_word(SyllableWord<Gen> const& w,
                            NameFn                   name,
                            std::string const&       empty_form) {
      if (w.empty()) {
        return empty_form;
      }
      std::string out;
      for (auto const& s : w.syllables()) {
        if (!out.empty()) {
          out += ' ';
        }
        out += format_power(name(s.gen), s.exponent);
      }
      return out;
    }
  }  // namespace detail

}  // namespace tanglekit

#endif  // TANGLEKIT_SYLLABLE_WORD_HPP_
