#include "tanglekit/psl2z.hpp"

#include <algorithm>
#include <stdexcept>

#include "tanglekit/errors.hpp"
#include "tanglekit/qext.hpp"

namespace tanglekit {

  std::string to_string(GenWord const& w) {
    return detail::format_word(
        w, [](Letter l) { return l == Letter::A ? "A" : "B"; }, "E");
  }

  Psl2Elem::Psl2Elem(Int a, Int b, Int c, Int d) {
    if (checked::sub(checked::mul(a, d), checked::mul(b, c)) != 1) {
      throw std::invalid_argument("matrix (" + std::to_string(a) + " "
                                  + std::to_string(b) + "; "
                                  + std::to_string(c) + " " + std::to_string(d)
                                  + ") does not have determinant 1");
    }
    Int lead = a != 0 ? a : (b != 0 ? b : c);
    if (lead < 0) {
      a = checked::neg(a);
      b = checked::neg(b);
      c = checked::neg(c);
      d = checked::neg(d);
    }
    _a = a;
    _b = b;
    _c = c;
    _d = d;
  }

  std::string to_string(Psl2Elem const& m) {
    return "(" + std::to_string(m.a()) + " " + std::to_string(m.b()) + "; "
           + std::to_string(m.c()) + " " + std::to_string(m.d()) + ")";
  }

  Psl2Elem compose(Psl2Elem const& m, Psl2Elem const& n) {
    return Psl2Elem(checked::dot(m.a(), n.a(), m.b(), n.c()),
                    checked::dot(m.a(), n.b(), m.b(), n.d()),
                    checked::dot(m.c(), n.a(), m.d(), n.c()),
                    checked::dot(m.c(), n.b(), m.d(), n.d()));
  }

  Psl2Elem inverse(Psl2Elem const& m) {
    return Psl2Elem(m.d(), checked::neg(m.b()), checked::neg(m.c()), m.a());
  }

  Psl2Elem power(Letter gen, Int exponent) {
    return gen == Letter::A ? Psl2Elem::a_power(exponent)
                            : Psl2Elem::b_power(exponent);
  }

  Psl2Elem word_to_matrix(GenWord const& w) {
    Psl2Elem m;
    for (auto const& s : w.syllables()) {
      m = compose(m, power(s.gen, s.exponent));
    }
    return m;
  }

  ProjRat act_projective(Psl2Elem const& m, ProjRat const& v) {
    return make_projrat(checked::dot(m.a(), v.p(), m.b(), v.q()),
                        checked::dot(m.c(), v.p(), m.d(), v.q()));
  }

  bool is_b_power(Psl2Elem const& m) {
    return m.a() == 1 && m.b() == 0 && m.d() == 1;
  }

  namespace {

    // Entries all >= 0 or all <= 0.
    bool nonnegative_up_to_sign(Psl2Elem const& m) {
      bool nonneg = m.a() >= 0 && m.b() >= 0 && m.c() >= 0 && m.d() >= 0;
      bool nonpos = m.a() <= 0 && m.b() <= 0 && m.c() <= 0 && m.d() <= 0;
      return nonneg || nonpos;
    }

    // Factor a matrix with nonnegative entries into a positive word by
    // peeling left factors: A^k while the first row dominates the second,
    // B^k while the second dominates the first.
    GenWord positive_word(Psl2Elem m) {
      Int a = checked::abs(m.a()), b = checked::abs(m.b()),
          c = checked::abs(m.c()), d = checked::abs(m.d());
      // a, d >= 1 for every nonnegative matrix of determinant 1.
      GenWord w;
      while (!(a == 1 && b == 0 && c == 0 && d == 1)) {
        if (a >= c && b >= d) {
          Int k = c == 0 ? b / d : std::min(a / c, b / d);
          a -= k * c;
          b -= k * d;
          w.push_back(Letter::A, k);
        } else if (c >= a && d >= b) {
          Int k = b == 0 ? c / a : std::min(c / a, d / b);
          c -= k * a;
          d -= k * b;
          w.push_back(Letter::B, k);
        } else {
          throw InternalError("no dominating row while factoring "
                              + to_string(m));
        }
      }
      return w;
    }

    bool factor_sign_homogeneous(Psl2Elem const& t, GenWord& out) {
      if (nonnegative_up_to_sign(t)) {
        out = positive_word(t);
        return true;
      }
      // (+ -; - +) is the inverse of a nonnegative matrix.
      Psl2Elem inv = inverse(t);
      if (nonnegative_up_to_sign(inv)) {
        out = positive_word(inv).inverse();
        return true;
      }
      return false;
    }

  }  // namespace

  VtForm vt_normal_form(Psl2Elem const& m) {
    VtForm f;
    if (factor_sign_homogeneous(m, f.t)) {
      f.v = VtPrefix::E;
      return f;
    }
    // S^-1 = S
    if (factor_sign_homogeneous(compose(Psl2Elem::gen_s(), m), f.t)) {
      f.v = VtPrefix::S;
      return f;
    }
    throw InternalError("no VT decomposition found for " + to_string(m));
  }

  Psl2Elem vt_matrix(VtForm const& f) {
    Psl2Elem t = word_to_matrix(f.t);
    return f.v == VtPrefix::S ? compose(Psl2Elem::gen_s(), t) : t;
  }

  GenWord matrix_to_word(Psl2Elem const& m) {
    GenWord w;
    if (m.d() == 0) {
      w = GenWord{{Letter::B, -1}, {Letter::A, 1}};
    } else {
      w = cf_to_word(odd_cf(make_projrat(m.b(), m.d())));
    }
    // w and m share their second column, so they differ by a right B-power.
    Psl2Elem rest = compose(inverse(word_to_matrix(w)), m);
    if (!is_b_power(rest)) {
      throw InternalError("second columns disagree while synthesising "
                          + to_string(m));
    }
    w.push_back(Letter::B, rest.c());
    return w;
  }

}  // namespace tanglekit
