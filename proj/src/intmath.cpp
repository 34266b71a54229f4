#include "dbubble/intmath.hpp"

#include <cmath>
#include <stdexcept>

namespace dbubble {

namespace {
using u128 = unsigned __int128;
using i128 = __int128;
}  // namespace

std::uint64_t isqrt(std::uint64_t v) {
  if (v == 0) return 0;
  auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
  // std::sqrt can be off by one ulp near perfect squares; settle exactly.
  while (s > 0 && s * s > v) --s;
  while ((s + 1) * (s + 1) <= v) ++s;
  return s;
}

std::uint64_t ceil_sqrt(std::uint64_t v) {
  std::uint64_t s = isqrt(v);
  return s * s == v ? s : s + 1;
}

std::uint64_t ceil_sqrt_sum(std::uint64_t a, std::uint64_t b) {
  auto ge_sqrt_sum = [&](std::uint64_t t) {
    // t >= sqrt(a)+sqrt(b)  <=>  t^2-a-b >= 0  and  (t^2-a-b)^2 >= 4ab
    u128 t2 = u128(t) * t;
    if (t2 < u128(a) + b) return false;
    u128 d = t2 - a - b;
    return d * d >= u128(4) * a * b;
  };
  auto est = static_cast<std::uint64_t>(
      std::sqrt(static_cast<double>(a)) + std::sqrt(static_cast<double>(b)));
  std::uint64_t t = est > 2 ? est - 2 : 0;
  while (!ge_sqrt_sum(t)) ++t;
  return t;
}

bool ratio_le_alpha0(long long n, long long m) {
  if (n < 1 || m < 1) throw std::invalid_argument("volumes must be >= 1");
  i128 d = i128(688) * n - i128(49) * m;
  if (d < 0) return false;
  return d * d >= i128(460800) * n * n;
}

bool ratio_le_half(long long n, long long m) {
  if (n < 1 || m < 1) throw std::invalid_argument("volumes must be >= 1");
  return 2 * m <= n;
}

long long ceil_rho_cont_int(long long n, long long m) {
  if (m < 1 || m > n) throw std::invalid_argument("need 1 <= m <= n");
  auto un = static_cast<std::uint64_t>(n);
  auto um = static_cast<std::uint64_t>(m);
  if (ratio_le_alpha0(n, m))  // 4*sqrt(n+m) + 2*sqrt(m)
    return static_cast<long long>(ceil_sqrt_sum(16 * (un + um), 4 * um));
  if (ratio_le_half(n, m))  // 4*sqrt(n) + 2*sqrt(2m)
    return static_cast<long long>(ceil_sqrt_sum(16 * un, 8 * um));
  // 2*sqrt(6(n+m)) = sqrt(24(n+m))
  return static_cast<long long>(ceil_sqrt(24 * (un + um)));
}

long long ceil_sqrt_half(long long m) {
  if (m < 0) throw std::invalid_argument("negative volume");
  long long t = static_cast<long long>(std::sqrt(static_cast<double>(m) / 2.0));
  while (2 * t * t < m) ++t;
  while (t > 0 && 2 * (t - 1) * (t - 1) >= m) --t;
  return t;
}

long long floor_sqrt_half(long long m) {
  if (m < 0) throw std::invalid_argument("negative volume");
  long long t = static_cast<long long>(std::sqrt(static_cast<double>(m) / 2.0)) + 1;
  while (2 * t * t > m) --t;
  while (2 * (t + 1) * (t + 1) <= m) ++t;
  return t;
}

}  // namespace dbubble
