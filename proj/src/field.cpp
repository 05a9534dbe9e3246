#include "ffgeo/field.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>

namespace ffgeo {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotOddPrime: return "NotOddPrime";
    case Errc::NotPrime: return "NotPrime";
    case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
    case Errc::OrderOverflow: return "OrderOverflow";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::MixedContexts: return "MixedContexts";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::NonDistinctTriple: return "NonDistinctTriple";
    case Errc::EqualPoints: return "EqualPoints";
    case Errc::ScanTooLarge: return "ScanTooLarge";
    case Errc::MemoryBudget: return "MemoryBudget";
    case Errc::EmptyFamily: return "EmptyFamily";
    case Errc::SigmaZero: return "SigmaZero";
    case Errc::TZero: return "TZero";
    case Errc::NoIsotropicLine: return "NoIsotropicLine";
    case Errc::RangeTooLarge: return "RangeTooLarge";
    case Errc::BadPointSet: return "BadPointSet";
    case Errc::UsageError: return "UsageError";
  }
  return "UnknownError";
}

bool is_prime_u64(uint64_t v) {
  if (v < 2) return false;
  if (v % 2 == 0) return v == 2;
  for (uint64_t f = 3; f * f <= v; f += 2) {
    if (v % f == 0) return false;
  }
  return true;
}

namespace {

// Dense little-endian polynomials over F_p, used only for the modulus
// search at construction time.
using Poly = std::vector<uint64_t>;

void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& f, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
  }
  // f is monic, so division needs no inverse
  const size_t deg_f = f.size() - 1;
  for (size_t i = prod.size(); i-- > deg_f;) {
    uint64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (size_t j = 0; j < deg_f; ++j) {
      prod[i - deg_f + j] = (prod[i - deg_f + j] + c * (p - f[j]) % p) % p;
    }
  }
  prod.resize(deg_f);
  poly_trim(prod);
  return prod;
}

Poly poly_pow_mod(Poly base, uint64_t e, const Poly& f, uint64_t p) {
  Poly result = {1};
  while (e > 0) {
    if (e & 1) result = poly_mul_mod(result, base, f, p);
    base = poly_mul_mod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Poly poly_sub(const Poly& a, const Poly& b, uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    uint64_t av = i < a.size() ? a[i] : 0;
    uint64_t bv = i < b.size() ? b[i] : 0;
    r[i] = (av + p - bv) % p;
  }
  poly_trim(r);
  return r;
}

Poly poly_mod(Poly a, const Poly& f, uint64_t p) {
  const size_t deg_f = f.size() - 1;
  for (size_t i = a.size(); i-- > deg_f;) {
    uint64_t c = a[i];
    if (c == 0) continue;
    a[i] = 0;
    for (size_t j = 0; j < deg_f; ++j) {
      a[i - deg_f + j] = (a[i - deg_f + j] + c * (p - f[j]) % p) % p;
    }
  }
  poly_trim(a);
  return a;
}

uint64_t mod_inverse(uint64_t a, uint64_t p) {
  // Fermat; p prime, a != 0
  uint64_t e = p - 2, r = 1, b = a % p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, uint64_t p) {
  while (!b.empty()) {
    // reduce a mod b; make b monic first
    uint64_t lead_inv = mod_inverse(b.back(), p);
    Poly bm = b;
    for (auto& c : bm) c = c * lead_inv % p;
    a = poly_mod(std::move(a), bm, p);
    std::swap(a, b);
  }
  return a;
}

// Rabin's criterion: monic f of degree n is irreducible over F_p iff
// x^(p^n) = x (mod f) and gcd(x^(p^(n/r)) - x, f) = 1 for every prime r | n.
bool is_irreducible(const Poly& f, uint64_t p, int n) {
  const Poly x = {0, 1};
  std::vector<Poly> frobenius(static_cast<size_t>(n) + 1);
  frobenius[0] = x;
  for (int k = 1; k <= n; ++k) {
    frobenius[k] = poly_pow_mod(frobenius[k - 1], p, f, p);
  }
  if (frobenius[n] != x) return false;
  int m = n;
  for (int r = 2; r * r <= m; ++r) {
    if (m % r != 0) continue;
    Poly g = poly_gcd(poly_sub(frobenius[n / r], x, p), f, p);
    if (g.size() != 1) return false;
    while (m % r == 0) m /= r;
  }
  if (m > 1 && m != n) {
    Poly g = poly_gcd(poly_sub(frobenius[n / m], x, p), f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

constexpr int kMaxDegree = 40;  // p >= 3 and q <= 2^31 keep n well below this

void decode_coeffs(uint64_t code, uint64_t p, int n, uint32_t* out) {
  for (int i = 0; i < n; ++i) {
    out[i] = static_cast<uint32_t>(code % p);
    code /= p;
  }
}

}  // namespace

FieldCtxPtr make_field(int64_t p, int n) {
  if (p < 3 || p % 2 == 0 || !is_prime_u64(static_cast<uint64_t>(p))) {
    fail(Errc::NotOddPrime, "p = " + std::to_string(p) + " is not an odd prime");
  }
  if (n < 1) fail(Errc::DegreeOutOfRange, "extension degree must be >= 1");
  const uint64_t up = static_cast<uint64_t>(p);
  uint64_t q = 1;
  for (int i = 0; i < n; ++i) {
    if (q > (uint64_t{1} << 31) / up) {
      fail(Errc::OrderOverflow, "p^n exceeds the 2^31 machine bound");
    }
    q *= up;
  }

  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  ctx->p_ = up;
  ctx->n_ = n;
  ctx->q_ = q;
  ctx->p_powers_.resize(static_cast<size_t>(n) + 1);
  ctx->p_powers_[0] = 1;
  for (int i = 1; i <= n; ++i) ctx->p_powers_[i] = ctx->p_powers_[i - 1] * up;

  if (n > 1) {
    // lexicographically smallest monic irreducible: scan constant-to-top
    // coefficient codes in increasing order
    bool found = false;
    for (uint64_t m = 0; m < q; ++m) {
      Poly f(static_cast<size_t>(n) + 1, 0);
      uint64_t code = m;
      for (int i = 0; i < n; ++i) {
        f[i] = code % up;
        code /= up;
      }
      f[n] = 1;
      if (is_irreducible(f, up, n)) {
        ctx->modulus_.assign(f.begin(), f.end());
        found = true;
        break;
      }
    }
    assert(found);  // irreducibles of every degree exist over F_p
    (void)found;
  }

  for (uint64_t c = 1; c < q; ++c) {
    if (ctx->quadratic_character({static_cast<uint32_t>(c)}) == -1) {
      ctx->nonsquare_ = {static_cast<uint32_t>(c)};
      break;
    }
  }
  return ctx;
}

FieldElem FieldCtx::element(uint64_t code) const {
  if (code >= q_) fail(Errc::MixedContexts, "element code out of range for this field");
  return {static_cast<uint32_t>(code)};
}

FieldElem FieldCtx::from_int(int64_t v) const {
  int64_t r = v % static_cast<int64_t>(p_);
  if (r < 0) r += static_cast<int64_t>(p_);
  return {static_cast<uint32_t>(r)};
}

FieldElem FieldCtx::from_coeffs(const std::vector<int64_t>& coeffs) const {
  if (coeffs.size() > static_cast<size_t>(n_)) {
    fail(Errc::UsageError, "coefficient vector longer than extension degree");
  }
  uint64_t code = 0;
  for (size_t i = coeffs.size(); i-- > 0;) {
    int64_t r = coeffs[i] % static_cast<int64_t>(p_);
    if (r < 0) r += static_cast<int64_t>(p_);
    code = code * p_ + static_cast<uint64_t>(r);
  }
  return {static_cast<uint32_t>(code)};
}

std::vector<uint32_t> FieldCtx::coeffs(FieldElem a) const {
  check(a);
  std::vector<uint32_t> out(static_cast<size_t>(n_));
  decode_coeffs(a.code, p_, n_, out.data());
  return out;
}

FieldElem FieldCtx::add(FieldElem a, FieldElem b) const {
  check(a);
  check(b);
  if (n_ == 1) return {static_cast<uint32_t>((uint64_t{a.code} + b.code) % p_)};
  uint32_t ca[kMaxDegree], cb[kMaxDegree];
  decode_coeffs(a.code, p_, n_, ca);
  decode_coeffs(b.code, p_, n_, cb);
  uint64_t code = 0;
  for (int i = n_; i-- > 0;) code = code * p_ + (uint64_t{ca[i]} + cb[i]) % p_;
  return {static_cast<uint32_t>(code)};
}

FieldElem FieldCtx::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem FieldCtx::neg(FieldElem a) const {
  check(a);
  if (n_ == 1) return {static_cast<uint32_t>(a.code == 0 ? 0 : p_ - a.code)};
  uint32_t ca[kMaxDegree];
  decode_coeffs(a.code, p_, n_, ca);
  uint64_t code = 0;
  for (int i = n_; i-- > 0;) code = code * p_ + (ca[i] == 0 ? 0 : p_ - ca[i]);
  return {static_cast<uint32_t>(code)};
}

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const {
  check(a);
  check(b);
  if (n_ == 1) return {static_cast<uint32_t>(uint64_t{a.code} * b.code % p_)};
  return mul_ext(a, b);
}

FieldElem FieldCtx::mul_ext(FieldElem a, FieldElem b) const {
  uint32_t ca[kMaxDegree], cb[kMaxDegree];
  uint64_t prod[2 * kMaxDegree] = {0};
  decode_coeffs(a.code, p_, n_, ca);
  decode_coeffs(b.code, p_, n_, cb);
  for (int i = 0; i < n_; ++i) {
    if (ca[i] == 0) continue;
    for (int j = 0; j < n_; ++j) {
      prod[i + j] = (prod[i + j] + uint64_t{ca[i]} * cb[j]) % p_;
    }
  }
  for (int i = 2 * n_ - 2; i >= n_; --i) {
    uint64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (int j = 0; j < n_; ++j) {
      prod[i - n_ + j] = (prod[i - n_ + j] + c * (p_ - modulus_[j]) % p_) % p_;
    }
  }
  uint64_t code = 0;
  for (int i = n_; i-- > 0;) code = code * p_ + prod[i];
  return {static_cast<uint32_t>(code)};
}

FieldElem FieldCtx::inv(FieldElem a) const {
  check(a);
  if (a.code == 0) fail(Errc::DivisionByZero, "inverse of zero");
  return pow(a, q_ - 2);
}

FieldElem FieldCtx::pow(FieldElem a, uint64_t e) const {
  check(a);
  FieldElem result = one();
  FieldElem base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

int FieldCtx::quadratic_character(FieldElem a) const {
  check(a);
  if (a.code == 0) return 0;
  return pow(a, (q_ - 1) / 2) == one() ? 1 : -1;
}

std::optional<FieldElem> FieldCtx::square_root(FieldElem a) const {
  check(a);
  if (a.code == 0) return zero();
  if (quadratic_character(a) == -1) return std::nullopt;

  FieldElem r;
  if (q_ % 4 == 3) {
    r = pow(a, (q_ + 1) / 4);
  } else {
    // Tonelli-Shanks in the cyclic group F_q^*
    uint64_t m = q_ - 1;
    int s = 0;
    while (m % 2 == 0) {
      m /= 2;
      ++s;
    }
    FieldElem c = pow(nonsquare_, m);
    FieldElem t = pow(a, m);
    r = pow(a, (m + 1) / 2);
    while (t != one()) {
      FieldElem t2 = t;
      int i = 0;
      while (t2 != one()) {
        t2 = mul(t2, t2);
        ++i;
      }
      FieldElem b = c;
      for (int j = 0; j < s - i - 1; ++j) b = mul(b, b);
      r = mul(r, b);
      c = mul(b, b);
      t = mul(t, c);
      s = i;
    }
  }
  assert(mul(r, r) == a);
  FieldElem other = neg(r);
  return r.code <= other.code ? r : other;
}

uint64_t FieldCtx::trace(FieldElem a) const {
  check(a);
  if (n_ == 1) return a.code;
  FieldElem acc = a;
  FieldElem frob = a;
  for (int i = 1; i < n_; ++i) {
    frob = pow(frob, p_);
    acc = add(acc, frob);
  }
  assert(acc.code < p_);  // the trace lands in the prime subfield
  return acc.code;
}

std::complex<double> FieldCtx::additive_character(FieldElem a) const {
  const double angle =
      2.0 * std::numbers::pi * static_cast<double>(trace(a)) / static_cast<double>(p_);
  return std::polar(1.0, angle);
}

}  // namespace ffgeo
