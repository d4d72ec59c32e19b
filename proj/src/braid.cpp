#include "tanglekit/braid.hpp"

namespace tanglekit {

  std::string to_string(BraidWord const& b) {
    return detail::format_word(
        b, [](BraidGen g) { return g == BraidGen::Sigma1 ? "s1" : "s2"; }, "e");
  }

  BraidWord to_braid(GenWord const& w) {
    BraidWord b;
    auto      syl = w.syllables();
    for (auto it = syl.rbegin(); it != syl.rend(); ++it) {
      if (it->gen == Letter::A) {
        b.push_back(BraidGen::Sigma1, it->exponent);
      } else {
        b.push_back(BraidGen::Sigma2, checked::neg(it->exponent));
      }
    }
    return b;
  }

  GenWord from_braid(BraidWord const& b) {
    GenWord w;
    auto    syl = b.syllables();
    for (auto it = syl.rbegin(); it != syl.rend(); ++it) {
      if (it->gen == BraidGen::Sigma1) {
        w.push_back(Letter::A, it->exponent);
      } else {
        w.push_back(Letter::B, checked::neg(it->exponent));
      }
    }
    return w;
  }

  bool braid_equivalent(BraidWord const& b1, BraidWord const& b2) {
    return word_to_matrix(from_braid(b1)) == word_to_matrix(from_braid(b2));
  }

}  // namespace tanglekit
