#pragma once
#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <string>
#include <vector>

#include "dimod/errors.hpp"

namespace dimod {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IVec = std::vector<Int>;
using V2 = std::array<Int, 2>;

inline Int ivec_dot(const IVec& a, const IVec& b) {
  check(a.size() == b.size(), ErrorCode::InvariantViolation, "dot: size mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool ivec_is_zero(const IVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

inline IVec ivec_add(const IVec& a, const IVec& b) {
  IVec r(a);
  for (size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

inline IVec ivec_sub(const IVec& a, const IVec& b) {
  IVec r(a);
  for (size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

inline IVec ivec_scaled(const IVec& a, const Int& c) {
  IVec r(a);
  for (Int& x : r) x *= c;
  return r;
}

inline void ivec_axpy(IVec& a, const Int& c, const IVec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += c * b[i];
}

inline IVec ivec_neg(const IVec& a) {
  IVec r(a);
  for (Int& x : r) x = -x;
  return r;
}

inline Int content(const IVec& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  return g;
}

inline IVec primitive(IVec v) {
  Int g = content(v);
  if (g > 1)
    for (Int& x : v) x /= g;
  return v;
}

// Lexicographic compare; vectors must have equal length when used for sorting.
inline int ivec_cmp(const IVec& a, const IVec& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  if (a.size() < b.size()) return -1;
  if (a.size() > b.size()) return 1;
  return 0;
}

inline bool ivec_less(const IVec& a, const IVec& b) { return ivec_cmp(a, b) < 0; }

inline Int floor_div(const Int& a, const Int& b) {
  check(b != 0, ErrorCode::InvariantViolation, "floor_div by zero");
  Int q = a / b;
  if (q * b != a && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

inline long long to_ll(const Int& v) {
  check(v >= std::numeric_limits<long long>::min() &&
            v <= std::numeric_limits<long long>::max(),
        ErrorCode::InvariantViolation, "integer too large for output");
  return v.convert_to<long long>();
}

inline std::string ivec_str(const IVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

// (a-o) x (b-o); positive when o,a,b make a left turn.
inline Int cross2(const V2& o, const V2& a, const V2& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

}  // namespace dimod
