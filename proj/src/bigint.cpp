#include "qcla/bigint.hpp"

#include <stdexcept>

namespace qcla {

BigUInt parse_biguint(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer");
  for (char ch : s)
    if (ch < '0' || ch > '9') throw std::invalid_argument("not a non-negative integer: " + s);
  return BigUInt(s);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  while (true) {
    std::uint64_t r = rng();
    if (r < limit) return r % bound;
  }
}

BigUInt uniform_below(std::mt19937_64& rng, const BigUInt& bound) {
  if (bound <= 0) throw std::invalid_argument("uniform_below: empty range");
  if (bound <= UINT64_MAX) return uniform_below(rng, static_cast<std::uint64_t>(bound));
  const auto bits = static_cast<int>(boost::multiprecision::msb(bound - 1)) + 1;
  while (true) {
    BigUInt r = 0;
    for (int got = 0; got < bits; got += 64) r = (r << 64) | BigUInt(rng());
    r &= pow2(bits) - 1;
    if (r < bound) return r;
  }
}

}  // namespace qcla
