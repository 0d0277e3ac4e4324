#pragma once

#include <cstdint>
#include <random>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qcla {

// Classical constants can be wider than 64 bits (n up to a few thousand).
using BigUInt = boost::multiprecision::cpp_int;

inline bool bit(const BigUInt& x, int i) { return boost::multiprecision::bit_test(x, i); }

inline BigUInt pow2(int n) {
  BigUInt r = 0;
  boost::multiprecision::bit_set(r, n);
  return r;
}

inline std::string to_string(const BigUInt& x) { return x.str(); }
BigUInt parse_biguint(const std::string& s);

// Uniform integer in [0, bound) drawn by rejection from mt19937_64 output.
// Same sequence on every platform, unlike std::uniform_int_distribution.
BigUInt uniform_below(std::mt19937_64& rng, const BigUInt& bound);
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

inline constexpr const char* kRngAlgorithm = "mt19937_64";

}  // namespace qcla
