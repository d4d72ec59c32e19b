#include "tanglekit/projrat.hpp"

#include <numeric>

#include "tanglekit/errors.hpp"

namespace tanglekit {

  ProjRat make_projrat(Int p, Int q) {
    if (p == 0 && q == 0) {
      throw BothZeroError();
    }
    Int g = std::gcd(checked::abs(p), checked::abs(q));
    p /= g;
    q /= g;
    if (q < 0) {
      p = -p;
      q = -q;
    } else if (q == 0) {
      p = 1;
    }
    return ProjRat(p, q);
  }

  std::string to_string(ProjRat const& v) {
    if (v.is_infinity()) {
      return "inf";
    }
    return std::to_string(v.p()) + "/" + std::to_string(v.q());
  }

}  // namespace tanglekit
