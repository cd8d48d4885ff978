#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace segkl {

// Exact rational scalar. All geometry in this library (weights, degrees,
// infinitesimal characters) is done over Q; nothing is ever rounded.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline const Rat& half() {
  static const Rat h = rat(1, 2);
  return h;
}

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

// Only meaningful for integer rationals that fit a long.
inline long to_long(const Rat& x) {
  if (!is_integer(x)) throw std::invalid_argument("to_long: not an integer");
  if (!x.get_num().fits_slong_p())
    throw std::overflow_error("to_long: out of range");
  return x.get_num().get_si();
}

inline std::string rat_str(const Rat& x) {
  if (is_integer(x)) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace segkl
