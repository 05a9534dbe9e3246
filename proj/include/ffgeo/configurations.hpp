#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "ffgeo/pointset.hpp"

namespace ffgeo {

inline constexpr uint64_t kTripleScanBudget = 10'000'000'000ull;
inline constexpr uint64_t kPairScanBudget = 1'000'000'000ull;
inline constexpr uint64_t kDenseTableBudget = 1'000'000ull;
inline constexpr uint64_t kUnionScanBudget = 100'000'000ull;

/// A certificate for a detected configuration. The stored points are
/// re-verified against the named predicate on construction, so a Witness
/// can be trusted without re-running the detector.
struct Witness {
  enum class Kind { RightAngle, OrthogonalPair, CollinearTriple };

  Kind kind;
  std::vector<FVector> points;

  static Witness right_angle(const FVector& x, const FVector& y, const FVector& z);
  static Witness orthogonal_pair(const FVector& x, const FVector& y);
  static Witness collinear_triple(const FVector& a, const FVector& b, const FVector& c);

  nlohmann::json to_json() const;
};

struct OrthogonalPairCount {
  uint64_t ordered = 0;               // #{(x,y) in AxA : x.y = 0}, diagonal included
  uint64_t ordered_off_diagonal = 0;  // same with x != y
  std::optional<Witness> witness;     // first off-diagonal pair in scan order
};

/// Exact O(|A|^2) count of ordered orthogonal pairs.
OrthogonalPairCount count_orthogonal_pairs(const PointSet& A);

/// First (x, y, z), x,y in A, z in B, with x,y,z distinct and
/// (x-y).(z-y) = 0, scanning x, then y, then z in index order. Pass B = A
/// for the single-set search over all ordered triples.
std::optional<Witness> find_right_angle(const PointSet& A, const PointSet& B,
                                        uint64_t budget = kTripleScanBudget);

/// First collinear triple of S, found by grouping, for each anchor point in
/// index order, the remaining points by the canonical direction of the line
/// they span with the anchor. O(|S|^2) time, O(|S|) extra space.
std::optional<Witness> find_collinear_triple(const PointSet& S,
                                             uint64_t budget = kPairScanBudget);

enum class SpectrumMode { AllTriples, OriginPairs };

struct SpreadSpectrum {
  std::set<FieldElem> defined;
  bool undefined_seen = false;
};

/// Spread values generated by S. AllTriples scans ordered distinct triples
/// with the vertex at the middle point; OriginPairs scans the implicit
/// triples (a, 0, b) over distinct a, b in S and requires that the origin
/// is not a member of S.
SpreadSpectrum spread_spectrum(const PointSet& S, SpectrumMode mode,
                               uint64_t budget = kTripleScanBudget);

/// {|a - b| : a != b in S}.
std::set<FieldElem> distance_set(const PointSet& S);

struct CoverComplement {
  uint64_t complement_size = 0;
  uint64_t bound_num = 0;  // q^(d+1)
  uint64_t bound_den = 0;  // |H| after dedup
  bool holds = false;      // complement_size * bound_den <= bound_num
};

/// Size of the complement of a hyperplane union against the q^(d+1)/|H|
/// bound. The family is deduplicated by canonical form first.
CoverComplement cover_complement(const FieldCtxPtr& ctx, int d,
                                 const std::vector<Hyperplane>& family);

struct OrthogonalityLowerBound {
  uint64_t actual = 0;       // ordered pair count, diagonal included
  double lower_bound = 0.0;  // |A|^2/q - q^(d/2) |A|
  bool holds = false;
};

OrthogonalityLowerBound check_orthogonality_lower_bound(const PointSet& A);

/// Dense complex-valued function on F_q^d, indexed by point encoding.
struct FunctionTable {
  FieldCtxPtr ctx;
  int d = 0;
  std::vector<std::complex<double>> values;

  static FunctionTable zero(FieldCtxPtr ctx, int d);
  static FunctionTable indicator(const PointSet& A);
};

/// Normalized transform fhat(xi) = q^(-d) sum_eta f(eta) chi(-xi.eta) with
/// chi the canonical additive character. Direct quadratic-cost evaluation;
/// intended for the small dense tables the bound checks use.
FunctionTable fourier_transform(const FunctionTable& f);

/// Unnormalized inverse f(eta) = sum_xi fhat(xi) chi(xi.eta).
FunctionTable inverse_fourier_transform(const FunctionTable& fhat);

}  // namespace ffgeo
