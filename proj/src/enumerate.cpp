#include "tanglekit/enumerate.hpp"

#include <array>
#include <future>
#include <map>
#include <stdexcept>

#include "tanglekit/errors.hpp"
#include "tanglekit/projrat.hpp"

namespace tanglekit {

  namespace {
    constexpr std::array<RawLetter, 4> kLetters
        = {RawLetter::A, RawLetter::AInv, RawLetter::B, RawLetter::BInv};

    Letter letter_of(RawLetter x) {
      return x == RawLetter::A || x == RawLetter::AInv ? Letter::A
                                                       : Letter::B;
    }

    Int sign_of(RawLetter x) {
      return x == RawLetter::A || x == RawLetter::B ? 1 : -1;
    }
  }  // namespace

  std::string to_string(std::span<RawLetter const> w) {
    if (w.empty()) {
      return "E";
    }
    std::string out;
    for (auto x : w) {
      if (!out.empty()) {
        out += ' ';
      }
      out += letter_of(x) == Letter::A ? "A" : "B";
      if (sign_of(x) < 0) {
        out += "^-1";
      }
    }
    return out;
  }

  GenWord to_gen_word(std::span<RawLetter const> w) {
    GenWord g;
    for (auto x : w) {
      g.push_back(letter_of(x), sign_of(x));
    }
    return g;
  }

  RawWord to_raw_word(GenWord const& w) {
    RawWord out;
    for (auto const& s : w.syllables()) {
      RawLetter x = s.gen == Letter::A
                        ? (s.exponent > 0 ? RawLetter::A : RawLetter::AInv)
                        : (s.exponent > 0 ? RawLetter::B : RawLetter::BInv);
      out.insert(out.end(), static_cast<std::size_t>(checked::abs(s.exponent)), x);
    }
    return out;
  }

  void check_enumeration_budget(int max_len, std::uint64_t budget) {
    if (max_len < 0) {
      throw std::invalid_argument("max_len must be nonnegative");
    }
    // 4^max_len <= budget
    std::uint64_t n = 1;
    for (int i = 0; i < max_len; ++i) {
      if (n > budget / 4) {
        throw LimitTooLargeError("4^" + std::to_string(max_len)
                                 + " words exceed the budget of "
                                 + std::to_string(budget));
      }
      n *= 4;
    }
    if (n > budget) {
      throw LimitTooLargeError("4^" + std::to_string(max_len)
                               + " words exceed the budget of "
                               + std::to_string(budget));
    }
  }

  std::uint64_t word_count_upto(int max_len) {
    std::uint64_t total = 0, level = 1;
    for (int i = 0; i <= max_len; ++i) {
      total += level;
      level *= 4;
    }
    return total;
  }

  WordRange::WordRange(int max_len, std::uint64_t budget) : _max_len(max_len) {
    check_enumeration_budget(max_len, budget);
  }

  WordRange::iterator& WordRange::iterator::operator++() {
    // Odometer over the current length; the last position varies fastest.
    for (auto i = _word.size(); i-- > 0;) {
      std::size_t next = static_cast<std::size_t>(_word[i]) + 1;
      if (next < kLetters.size()) {
        _word[i] = kLetters[next];
        return *this;
      }
      _word[i] = kLetters[0];
    }
    // Wrapped around: move to the next length.
    if (static_cast<int>(_word.size()) == _max_len) {
      _done = true;
    } else {
      _word.assign(_word.size() + 1, kLetters[0]);
    }
    return *this;
  }

  std::string to_string(ViolationKind k) {
    switch (k) {
      case ViolationKind::FractionCoset:
        return "fraction-coset";
      case ViolationKind::MatrixFraction:
        return "matrix-fraction";
      case ViolationKind::VtRoundTrip:
        return "vt-round-trip";
      case ViolationKind::WordRoundTrip:
        return "word-round-trip";
    }
    return "unknown";
  }

  namespace {

    // Per-partition census state. Each map keeps the first word seen for a
    // class as its witness.
    struct Tally {
      struct MatrixEntry {
        ProjRat fraction;
        RawWord witness;
      };
      struct FractionEntry {
        Psl2Elem matrix;
        RawWord  witness;
      };

      std::map<Psl2Elem, MatrixEntry>  by_matrix;
      std::map<ProjRat, FractionEntry> by_fraction;
      std::vector<Violation>           violations;
      std::uint64_t                    word_count = 0;

      void observe_matrix(Psl2Elem const& m,
                          ProjRat const&  f,
                          RawWord const&  witness) {
        auto [it, inserted] = by_matrix.try_emplace(m, MatrixEntry{f, witness});
        if (!inserted && it->second.fraction != f) {
          violations.push_back(
              {ViolationKind::MatrixFraction, it->second.witness, witness});
        }
      }

      void observe_fraction(ProjRat const&  f,
                            Psl2Elem const& m,
                            RawWord const&  witness) {
        auto [it, inserted]
            = by_fraction.try_emplace(f, FractionEntry{m, witness});
        if (!inserted && !is_b_power(compose(inverse(it->second.matrix), m))) {
          violations.push_back(
              {ViolationKind::FractionCoset, it->second.witness, witness});
        }
      }

      void observe_word(RawWord const& raw) {
        ++word_count;
        Psl2Elem m = word_to_matrix(to_gen_word(raw));
        ProjRat  f = act_projective(m, ProjRat::zero());
        observe_matrix(m, f, raw);
        observe_fraction(f, m, raw);

        VtForm vt = vt_normal_form(m);
        if (vt_matrix(vt) != m || !vt.t.sign_homogeneous()) {
          violations.push_back(
              {ViolationKind::VtRoundTrip, raw, to_raw_word(vt.t)});
        }
        GenWord canon = matrix_to_word(m);
        if (word_to_matrix(canon) != m) {
          violations.push_back(
              {ViolationKind::WordRoundTrip, raw, to_raw_word(canon)});
        }
      }

      // Witness relations are transitive, so comparing class
      // representatives is enough.
      void merge(Tally const& other) {
        word_count += other.word_count;
        violations.insert(
            violations.end(), other.violations.begin(), other.violations.end());
        for (auto const& [m, e] : other.by_matrix) {
          observe_matrix(m, e.fraction, e.witness);
        }
        for (auto const& [f, e] : other.by_fraction) {
          observe_fraction(f, e.matrix, e.witness);
        }
      }
    };

    // All words starting with `first` of length <= max_len.
    Tally scan_partition(RawLetter first, int max_len) {
      Tally   tally;
      RawWord word;
      for (auto const& suffix : WordRange(max_len - 1, UINT64_MAX)) {
        word.assign(1, first);
        word.insert(word.end(), suffix.begin(), suffix.end());
        tally.observe_word(word);
      }
      return tally;
    }

  }  // namespace

  CensusReport run_census(int max_len, std::uint64_t budget) {
    check_enumeration_budget(max_len, budget);

    Tally total;
    total.observe_word({});
    if (max_len > 0) {
      std::vector<std::future<Tally>> parts;
      for (auto first : kLetters) {
        parts.push_back(
            std::async(std::launch::async, scan_partition, first, max_len));
      }
      for (auto& p : parts) {
        total.merge(p.get());
      }
    }

    CensusReport report;
    report.max_len          = max_len;
    report.word_count       = total.word_count;
    report.matrix_classes   = total.by_matrix.size();
    report.fraction_classes = total.by_fraction.size();
    report.violations       = std::move(total.violations);
    return report;
  }

}  // namespace tanglekit
