#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace solvcount {

using count_t = std::uint64_t;
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Malformed user input: syntax errors, unknown names, out-of-range parameters.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured cap or budget was exceeded before the computation finished.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two routes that must agree did not. Never caught inside the library.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline count_t checked_add(count_t a, count_t b) {
  count_t r;
  if (__builtin_add_overflow(a, b, &r)) throw CapExceeded("count overflow in addition");
  return r;
}

inline count_t checked_mul(count_t a, count_t b) {
  count_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw CapExceeded("count overflow in multiplication");
  return r;
}

inline count_t ipow(count_t base, unsigned exp) {
  count_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

inline count_t to_count(const BigInt& v) {
  if (v < 0 || v > std::numeric_limits<count_t>::max())
    throw CapExceeded("value does not fit in 64 bits: " + v.str());
  return static_cast<count_t>(v);
}

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Prime factorization with ascending primes.
inline std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> out;
  for (long d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InternalInconsistency(what);
}

}  // namespace solvcount
