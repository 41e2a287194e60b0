#include "burnside/arith.hpp"

#include <stdexcept>
#include <string_view>

namespace burnside {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<long long, long long>> factorize(long long n) {
  if (n < 1) throw std::invalid_argument("factorize: argument must be positive");
  std::vector<std::pair<long long, long long>> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      long long e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      out.emplace_back(d, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

long long prime_power_base(long long n) {
  if (n == 1) return 0;
  auto f = factorize(n);
  return f.size() == 1 ? f[0].first : -1;
}

std::uint64_t fnv1a64(const std::string_view text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace burnside
