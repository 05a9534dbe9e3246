#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ffgeo/errors.hpp"

namespace ffgeo {

inline constexpr uint32_t kTotientSieveCap = 10'000'000;

/// phi by linear sieve plus exact prefix sums. sum_i_phi needs 128 bits near
/// the cap: sum i*phi(i) ~ (2/pi^2) n^3 already passes 2^64 around n = 10^7.
struct TotientTables {
  std::vector<uint32_t> phi;                 // phi[0] = 0, phi[1] = 1, ...
  std::vector<uint64_t> sum_phi;             // sum_phi[n] = sum_{i<=n} phi(i)
  std::vector<unsigned __int128> sum_i_phi;  // sum_i_phi[n] = sum_{i<=n} i*phi(i)
};

TotientTables totient_tables(uint32_t n_max);  // throws RangeTooLarge past the cap

/// The multiplier set S_k = union of blocks {floor(jp/k) + i : 1 <= i <=
/// floor(sigma/k)} for j = 0..k-1. Every member s satisfies
/// 1 <= (k*s mod p) <= sigma.
struct SSet {
  int64_t p = 0;
  int64_t sigma = 0;
  int64_t k = 0;
  std::vector<int64_t> members;  // sorted, deduplicated
};

SSet s_set(int64_t p, int64_t sigma, int64_t k);

/// Closed-form intersection size floor(sigma/max(ks)) * gcd(ks) next to a
/// direct set-intersection oracle. The two routes are kept separate on
/// purpose; `agree` records whether they match for this tuple.
struct SIntersection {
  int64_t formula_size = 0;
  int64_t oracle_size = 0;
  bool agree = false;
};

SIntersection s_intersection(int64_t p, int64_t sigma, std::span<const int64_t> ks);

/// Predicted number of origin lines meeting the box {1..sigma}^d and the
/// closed-form floor on the union size: mainTerm = (2/pi^2) (p/d)^(d/2),
/// finalBound = p^((d+2)/2) / (5 d^(d/2)).
struct LineBound {
  double main_term = 0.0;
  double final_bound = 0.0;
};

LineBound predicted_line_bound(int64_t p, int d);

/// floor(sqrt(a/b)) in exact integer arithmetic.
int64_t isqrt_ratio(int64_t a, int64_t b);

}  // namespace ffgeo
