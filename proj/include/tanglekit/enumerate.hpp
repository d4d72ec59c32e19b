// Exhaustive enumeration of short generator words, and a census that checks
// the classification results against every word up to a given length.

#ifndef TANGLEKIT_ENUMERATE_HPP_
#define TANGLEKIT_ENUMERATE_HPP_

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "psl2z.hpp"

namespace tanglekit {

  // Letters in enumeration order.
  enum class RawLetter : std::uint8_t { A, AInv, B, BInv };

  using RawWord = std::vector<RawLetter>;

  // "A B^-1 A" with one token per letter, "E" if empty.
  std::string to_string(std::span<RawLetter const> w);

  // Run-merged word of a raw letter sequence.
  GenWord to_gen_word(std::span<RawLetter const> w);

  // Letter-by-letter expansion of a run-merged word.
  RawWord to_raw_word(GenWord const& w);

  inline constexpr std::uint64_t kDefaultWordBudget = std::uint64_t{1} << 24;

  // Throws std::invalid_argument if max_len < 0 and LimitTooLargeError if
  // 4^max_len exceeds budget.
  void check_enumeration_budget(int max_len, std::uint64_t budget);

  // Every raw word of length <= max_len, shortest first and lexicographic
  // (A < A^-1 < B < B^-1) within a length.
  class WordRange {
   public:
    class iterator {
     public:
      using iterator_category = std::input_iterator_tag;
      using value_type        = RawWord;
      using difference_type   = std::ptrdiff_t;
      using pointer           = RawWord const*;
      using reference         = RawWord const&;

      iterator() = default;

      reference operator*() const noexcept {
        return _word;
      }
      pointer operator->() const noexcept {
        return &_word;
      }
      iterator& operator++();
      void      operator++(int) {
        ++*this;
      }

      bool operator==(std::default_sentinel_t) const noexcept {
        return _done;
      }

     private:
      friend class WordRange;
      explicit iterator(int max_len) : _max_len(max_len), _done(false) {}

      int     _max_len = 0;
      bool    _done    = true;
      RawWord _word;
    };

    WordRange(int max_len, std::uint64_t budget = kDefaultWordBudget);

    [[nodiscard]] iterator begin() const {
      return iterator(_max_len);
    }
    [[nodiscard]] std::default_sentinel_t end() const noexcept {
      return {};
    }

   private:
    int _max_len;
  };

  inline WordRange enumerate_words(int           max_len,
                                   std::uint64_t budget = kDefaultWordBudget) {
    return WordRange(max_len, budget);
  }

  // Number of raw words of length <= max_len: (4^(max_len+1) - 1) / 3.
  std::uint64_t word_count_upto(int max_len);

  enum class ViolationKind : std::uint8_t {
    // same fraction, matrices not related by a right B-power
    FractionCoset,
    // same matrix, different fraction
    MatrixFraction,
    // vt_normal_form does not reassemble, or its T part is mixed-sign
    VtRoundTrip,
    // word_to_matrix(matrix_to_word(m)) != m
    WordRoundTrip,
  };

  std::string to_string(ViolationKind k);

  struct Violation {
    ViolationKind kind;
    RawWord       first;
    RawWord       second;

    bool operator==(Violation const&) const = default;
  };

  struct CensusReport {
    int                    max_len          = 0;
    std::uint64_t          word_count       = 0;
    std::size_t            matrix_classes   = 0;
    std::size_t            fraction_classes = 0;
    std::vector<Violation> violations;

    bool operator==(CensusReport const&) const = default;
  };

  // Scans are partitioned by first letter and run concurrently; the merge is
  // done in a fixed order, so the report is deterministic.
  CensusReport run_census(int max_len, std::uint64_t budget = kDefaultWordBudget);

}  // namespace tanglekit

#endif  // TANGLEKIT_ENUMERATE_HPP_
