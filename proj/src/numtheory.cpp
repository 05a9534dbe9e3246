#include "ffgeo/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "ffgeo/field.hpp"

namespace ffgeo {

TotientTables totient_tables(uint32_t n_max) {
  if (n_max < 1) fail(Errc::RangeTooLarge, "n_max must be >= 1");
  if (n_max > kTotientSieveCap) fail(Errc::RangeTooLarge, "totient sieve capped at 10^7");

  TotientTables t;
  t.phi.assign(n_max + 1, 0);
  t.phi[1] = 1;
  std::vector<uint32_t> primes;
  for (uint32_t i = 2; i <= n_max; ++i) {
    if (t.phi[i] == 0) {
      t.phi[i] = i - 1;
      primes.push_back(i);
    }
    for (uint32_t pr : primes) {
      const uint64_t ip = uint64_t{i} * pr;
      if (ip > n_max) break;
      if (i % pr == 0) {
        t.phi[ip] = t.phi[i] * pr;
        break;
      }
      t.phi[ip] = t.phi[i] * (pr - 1);
    }
  }

  t.sum_phi.assign(n_max + 1, 0);
  t.sum_i_phi.assign(n_max + 1, 0);
  for (uint32_t i = 1; i <= n_max; ++i) {
    t.sum_phi[i] = t.sum_phi[i - 1] + t.phi[i];
    t.sum_i_phi[i] = t.sum_i_phi[i - 1] + static_cast<unsigned __int128>(i) * t.phi[i];
  }
  return t;
}

SSet s_set(int64_t p, int64_t sigma, int64_t k) {
  if (p < 2 || !is_prime_u64(static_cast<uint64_t>(p))) fail(Errc::NotPrime, "p must be prime");
  if (sigma < 1 || sigma >= p) fail(Errc::UsageError, "need 1 <= sigma < p");
  if (k < 1) fail(Errc::UsageError, "need k >= 1");

  SSet s{p, sigma, k, {}};
  const int64_t block = sigma / k;
  for (int64_t j = 0; j < k; ++j) {
    const int64_t start = j * p / k;
    for (int64_t i = 1; i <= block; ++i) s.members.push_back(start + i);
  }
  std::sort(s.members.begin(), s.members.end());
  s.members.erase(std::unique(s.members.begin(), s.members.end()), s.members.end());
  return s;
}

SIntersection s_intersection(int64_t p, int64_t sigma, std::span<const int64_t> ks) {
  if (ks.empty()) fail(Errc::UsageError, "need at least one k");
  for (int64_t k : ks) {
    if (k < 1 || k > sigma) fail(Errc::UsageError, "each k must satisfy 1 <= k <= sigma");
  }

  int64_t max_k = 0;
  int64_t g = 0;
  for (int64_t k : ks) {
    max_k = std::max(max_k, k);
    g = std::gcd(g, k);
  }

  std::vector<int64_t> acc = s_set(p, sigma, ks[0]).members;
  for (size_t i = 1; i < ks.size() && !acc.empty(); ++i) {
    std::vector<int64_t> next = s_set(p, sigma, ks[i]).members;
    std::vector<int64_t> merged;
    std::set_intersection(acc.begin(), acc.end(), next.begin(), next.end(),
                          std::back_inserter(merged));
    acc = std::move(merged);
  }

  SIntersection out;
  out.formula_size = (sigma / max_k) * g;
  out.oracle_size = static_cast<int64_t>(acc.size());
  out.agree = out.formula_size == out.oracle_size;
  return out;
}

LineBound predicted_line_bound(int64_t p, int d) {
  LineBound b;
  const double pd = static_cast<double>(p) / d;
  b.main_term = 2.0 / (std::numbers::pi * std::numbers::pi) * std::pow(pd, d / 2.0);
  b.final_bound =
      std::pow(static_cast<double>(p), (d + 2) / 2.0) / (5.0 * std::pow(static_cast<double>(d), d / 2.0));
  return b;
}

int64_t isqrt_ratio(int64_t a, int64_t b) {
  if (a < 0 || b <= 0) fail(Errc::UsageError, "isqrt_ratio needs a >= 0, b > 0");
  // largest s with s*s*b <= a
  int64_t s = static_cast<int64_t>(std::sqrt(static_cast<double>(a) / b));
  while (s > 0 && s * s * b > a) --s;
  while ((s + 1) * (s + 1) * b <= a) ++s;
  return s;
}

}  // namespace ffgeo
