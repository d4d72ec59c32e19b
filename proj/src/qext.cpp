#include "tanglekit/qext.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "tanglekit/errors.hpp"

namespace tanglekit {

  namespace {
    bool valid_odd_cf(std::vector<Int> const& e) {
      if (e.size() % 2 == 0) {
        return false;
      }
      if (e.size() == 1) {
        return true;
      }
      bool positive = e[1] > 0;
      auto tail_ok  = std::all_of(e.begin() + 1, e.end(), [positive](Int x) {
        return positive ? x > 0 : x < 0;
      });
      bool head_ok  = e[0] == 0 || (positive ? e[0] > 0 : e[0] < 0);
      return tail_ok && head_ok;
    }
  }  // namespace

  OddCF::OddCF(std::vector<Int> elements) : _elements(std::move(elements)) {
    if (!valid_odd_cf(_elements)) {
      throw std::invalid_argument("not an odd continued fraction: "
                                  + to_string(*this));
    }
  }

  std::string to_string(OddCF const& cf) {
    std::string out = "[";
    for (auto x : cf.elements()) {
      if (out.size() > 1) {
        out += ',';
      }
      out += std::to_string(x);
    }
    return out + "]";
  }

  OddCF odd_cf(ProjRat const& v) {
    if (v.is_infinity()) {
      throw InfinityHasNoCFError();
    }
    bool negative = v.p() < 0;
    // |p| cannot overflow: canonical points never hold INT64_MIN.
    Int              p = negative ? -v.p() : v.p();
    Int              q = v.q();
    std::vector<Int> e;
    do {
      e.push_back(p / q);
      Int r = p % q;
      p     = q;
      q     = r;
    } while (q != 0);
    if (e.size() % 2 == 0) {
      // The last element of an even expansion is >= 2.
      e.back() -= 1;
      e.push_back(1);
    }
    if (negative) {
      for (auto& x : e) {
        x = -x;
      }
    }
    return OddCF(std::move(e));
  }

  GenWord cf_to_word(OddCF const& cf) {
    GenWord w;
    auto    e = cf.elements();
    for (std::size_t i = 0; i < e.size(); ++i) {
      w.push_back(i % 2 == 0 ? Letter::A : Letter::B, e[i]);
    }
    return w;
  }

  ProjRat cf_eval(OddCF const& cf) {
    return act_projective(word_to_matrix(cf_to_word(cf)), ProjRat::zero());
  }

  ProjRat evaluate_continued_fraction(std::span<Int const> elements) {
    if (elements.empty()) {
      throw std::invalid_argument("empty continued fraction");
    }
    // A^a1 B^a2 ... sends 0 to the value when the last letter is A (odd
    // length) and infinity to the value when it is B (even length).
    Psl2Elem m;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      m = compose(m, power(i % 2 == 0 ? Letter::A : Letter::B, elements[i]));
    }
    ProjRat start
        = elements.size() % 2 == 1 ? ProjRat::zero() : ProjRat::infinity();
    return act_projective(m, start);
  }

}  // namespace tanglekit
