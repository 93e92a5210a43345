// Human-readable strings for polynomials and Weyl elements (display only).
#pragma once

#include <string>

#include "cendn/poly.hpp"
#include "cendn/weyl.hpp"

namespace cendn {

namespace detail {

inline std::string power(const char* var, int k) {
  if (k == 0) return "";
  if (k == 1) return var;
  return std::string(var) + "^" + std::to_string(k);
}

// Joins "c*m" terms with +/- signs; `mono` is empty for the unit monomial.
inline void append_term(std::string& out, const Rational& c, const std::string& mono) {
  const bool neg = c < 0;
  const Rational mag = neg ? Rational(-c) : c;
  if (out.empty())
    out += neg ? "-" : "";
  else
    out += neg ? " - " : " + ";
  if (mono.empty()) {
    out += format_rational(mag);
  } else {
    if (mag != 1) out += format_rational(mag) + "*";
    out += mono;
  }
}

inline std::string join_mono(std::string a, const std::string& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + "*" + b;
}

}  // namespace detail

template <Var X>
std::string render(const UniPoly<X>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
    detail::append_term(out, it->second, detail::power(var_name(X), it->first));
  return out;
}

inline std::string render(const BiPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
    detail::append_term(out, it->second,
                        detail::join_mono(detail::power("D", it->first.first),
                                          detail::power("v", it->first.second)));
  return out;
}

inline std::string render(const WeylElement& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
    detail::append_term(out, it->second,
                        detail::join_mono(detail::power("p", it->first.first),
                                          detail::power("q", it->first.second)));
  return out;
}

}  // namespace cendn
