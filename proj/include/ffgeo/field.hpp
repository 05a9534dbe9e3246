#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "ffgeo/errors.hpp"

namespace ffgeo {

/// An element of F_q in canonical integer encoding.
///
/// The code of the element with polynomial coefficients (c_0, ..., c_{n-1})
/// is sum c_i * p^i, so codes run over [0, q) and the ordering of codes is
/// the deterministic enumeration order used everywhere in the library
/// (prime fields: increasing residue; extensions: lexicographic on
/// coefficients, most significant last).
struct FieldElem {
  uint32_t code = 0;

  friend constexpr bool operator==(FieldElem, FieldElem) = default;
  friend constexpr auto operator<=>(FieldElem a, FieldElem b) { return a.code <=> b.code; }
};

class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

/// Builds F_q, q = p^n, for an odd prime p. For n > 1 the modulus is the
/// lexicographically smallest monic irreducible polynomial of degree n over
/// F_p, found by exhaustive scan, so two calls with the same (p, n) produce
/// interchangeable contexts.
///
/// Throws NotOddPrime, DegreeOutOfRange (n < 1), OrderOverflow (q > 2^31).
FieldCtxPtr make_field(int64_t p, int n = 1);

/// Immutable description of F_q together with exact arithmetic, the
/// quadratic character, square roots, trace, and the canonical additive
/// character chi(a) = exp(2*pi*i*trace(a)/p). Safe to share across threads;
/// every operation is a pure function.
class FieldCtx {
 public:
  uint64_t p() const { return p_; }
  int n() const { return n_; }
  uint64_t q() const { return q_; }
  bool prime_field() const { return n_ == 1; }

  /// Monic modulus as coefficients c_0..c_n (c_n = 1); empty for n = 1.
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  FieldElem zero() const { return {0}; }
  FieldElem one() const { return {1}; }

  /// Validates that the code belongs to this field.
  FieldElem element(uint64_t code) const;

  /// Residue embedding of an integer (works for negatives).
  FieldElem from_int(int64_t v) const;

  /// Element from little-endian coefficient vector (values reduced mod p).
  FieldElem from_coeffs(const std::vector<int64_t>& coeffs) const;

  /// Little-endian coefficient vector of length n.
  std::vector<uint32_t> coeffs(FieldElem a) const;

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const;
  FieldElem neg(FieldElem a) const;
  FieldElem mul(FieldElem a, FieldElem b) const;
  FieldElem inv(FieldElem a) const;  // throws DivisionByZero on 0
  FieldElem pow(FieldElem a, uint64_t e) const;

  /// 0 for a = 0, +1 for nonzero squares, -1 for nonsquares; computed as
  /// a^((q-1)/2).
  int quadratic_character(FieldElem a) const;

  /// First nonsquare in enumeration order (precomputed at construction).
  FieldElem find_nonsquare() const { return nonsquare_; }

  /// Canonical square root: the smaller of {r, -r} in enumeration order, or
  /// nullopt when a is a nonsquare.
  std::optional<FieldElem> square_root(FieldElem a) const;

  /// Absolute trace a + a^p + ... + a^(p^(n-1)), returned as a residue mod p.
  uint64_t trace(FieldElem a) const;

  /// Canonical nontrivial additive character exp(2*pi*i*trace(a)/p).
  std::complex<double> additive_character(FieldElem a) const;

  bool operator==(const FieldCtx& o) const { return p_ == o.p_ && n_ == o.n_; }

 private:
  friend FieldCtxPtr make_field(int64_t, int);
  FieldCtx() = default;

  void check(FieldElem a) const {
    if (a.code >= q_) fail(Errc::MixedContexts, "element code out of range for this field");
  }

  FieldElem mul_ext(FieldElem a, FieldElem b) const;

  uint64_t p_ = 0;
  int n_ = 1;
  uint64_t q_ = 0;
  std::vector<uint32_t> modulus_;    // empty for n = 1
  std::vector<uint64_t> p_powers_;   // p^0..p^n for encode/decode
  FieldElem nonsquare_{0};
};

/// Deterministic primality test for the 64-bit range used by the library.
bool is_prime_u64(uint64_t v);

}  // namespace ffgeo
