#ifndef ASMSHAPE_PARAMS_HPP
#define ASMSHAPE_PARAMS_HPP

#include <stdexcept>
#include <string>

#include "asmshape/rational.hpp"

namespace asmshape {

// The three solvable q-enumeration points at t = 1.
enum class DeltaCase {
  Q1,  // delta = 1/2, plain enumeration
  Q2,  // delta = 0,   2-enumeration / free fermion
  Q3,  // delta = -1/2, 3-enumeration
};

inline Rational delta_of(DeltaCase c) {
  switch (c) {
    case DeltaCase::Q1: return Rational(1, 2);
    case DeltaCase::Q2: return Rational(0);
    case DeltaCase::Q3: return Rational(-1, 2);
  }
  throw std::logic_error("bad DeltaCase");
}

inline Rational q_of(DeltaCase c) {
  switch (c) {
    case DeltaCase::Q1: return Rational(1);
    case DeltaCase::Q2: return Rational(2);
    case DeltaCase::Q3: return Rational(3);
  }
  throw std::logic_error("bad DeltaCase");
}

inline DeltaCase case_from_tag(const std::string& tag) {
  if (tag == "q1") return DeltaCase::Q1;
  if (tag == "q2") return DeltaCase::Q2;
  if (tag == "q3") return DeltaCase::Q3;
  throw std::invalid_argument("unknown case tag '" + tag + "' (expected q1|q2|q3)");
}

inline std::string tag_of(DeltaCase c) {
  switch (c) {
    case DeltaCase::Q1: return "q1";
    case DeltaCase::Q2: return "q2";
    case DeltaCase::Q3: return "q3";
  }
  throw std::logic_error("bad DeltaCase");
}

// (delta, t, q) with delta = 1 - q/2 at t = 1.
struct ModelParams {
  Rational delta;
  Rational t;
  Rational q;

  static ModelParams from_q(const Rational& q) {
    return ModelParams{1 - q / 2, Rational(1), q};
  }
  static ModelParams from_case(DeltaCase c) { return from_q(q_of(c)); }
};

}  // namespace asmshape

#endif
