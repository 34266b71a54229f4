#pragma once

#include <cstdint>

namespace dbubble {

// Largest s with s*s <= v.
std::uint64_t isqrt(std::uint64_t v);

// Smallest t with t*t >= v, i.e. ceil(sqrt(v)).
std::uint64_t ceil_sqrt(std::uint64_t v);

// Smallest integer t with t >= sqrt(a) + sqrt(b). Exact: the comparison
// t >= sqrt(a)+sqrt(b) is decided as t^2-a-b >= 0 and (t^2-a-b)^2 >= 4ab,
// so no floating-point rounding can misplace a boundary case.
std::uint64_t ceil_sqrt_sum(std::uint64_t a, std::uint64_t b);

// Exact regime predicates for integer volume pairs (1 <= m <= n).
// m/n <= alpha0 with alpha0 = (688 - 480*sqrt(2))/49, decided without
// floating point: 688n - 49m >= 0 and (688n - 49m)^2 >= 460800 n^2.
bool ratio_le_alpha0(long long n, long long m);
// m/n <= 1/2, i.e. 2m <= n.
bool ratio_le_half(long long n, long long m);

// ceil(rho_cont(n, m)) for integer volumes, using the exact predicates above
// to pick the regime and ceil_sqrt_sum / ceil_sqrt to take the ceiling.
long long ceil_rho_cont_int(long long n, long long m);

// Smallest t with 2*t*t >= m, i.e. ceil(sqrt(2m)/2) = ceil(sqrt(m/2)).
long long ceil_sqrt_half(long long m);
// Largest t with 2*t*t <= m, i.e. floor(sqrt(2m)/2) = floor(sqrt(m/2)).
long long floor_sqrt_half(long long m);

}  // namespace dbubble
