#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ffgeo/field.hpp"
#include "ffgeo/rng.hpp"

namespace ffgeo {

/// Number of points of F_q^d, failing with OrderOverflow when q^d does not
/// fit the 63-bit integer encoding.
uint64_t space_cardinality(const FieldCtx& ctx, int d);

/// A point of F_q^d. Admits the bijective integer encoding
/// index = sum code(coords[i]) * q^i used by PointSet and the detectors.
struct FVector {
  FieldCtxPtr ctx;
  std::vector<FieldElem> coords;

  int dim() const { return static_cast<int>(coords.size()); }
  bool is_zero() const;
  uint64_t index() const;

  friend bool operator==(const FVector& a, const FVector& b) {
    return a.coords == b.coords && *a.ctx == *b.ctx;
  }
};

FVector vector_from_index(FieldCtxPtr ctx, int d, uint64_t index);
FVector vector_from_ints(FieldCtxPtr ctx, const std::vector<int64_t>& values);

FVector vadd(const FVector& a, const FVector& b);
FVector vsub(const FVector& a, const FVector& b);
FVector vneg(const FVector& a);
FVector vscale(FieldElem r, const FVector& a);

/// Exact sum of coordinate products in F_q.
FieldElem dot(const FVector& u, const FVector& v);

/// norm(v) = dot(v, v); a "length" with no square root, invariant under the
/// orthogonal group.
FieldElem norm(const FVector& v);

/// Spread of a pair of vectors: Defined(1 - (a.b)^2 / (|a||b|)) unless one
/// of the norms vanishes, in which case the spread is Undefined. Undefined
/// is a first-class value so spectrum scans can count it, not an error.
struct SpreadValue {
  std::optional<FieldElem> value;  // nullopt = Undefined

  bool defined() const { return value.has_value(); }
  static SpreadValue undefined() { return {std::nullopt}; }
  static SpreadValue of(FieldElem v) { return {v}; }

  friend bool operator==(const SpreadValue&, const SpreadValue&) = default;
};

SpreadValue spread(const FVector& a, const FVector& b);  // throws ZeroVector

/// Spread of the angle at b in the triple (a, b, c): spread(a-b, c-b).
/// The vertex is always the middle point.
SpreadValue spread_triple(const FVector& a, const FVector& b, const FVector& c);

/// True iff x, y, z are pairwise distinct and (x-y).(z-y) = 0 (vertex y).
bool is_right_triple(const FVector& x, const FVector& y, const FVector& z);

/// True iff a, b, c are pairwise distinct and b-a, c-a are linearly
/// dependent (all 2x2 minors vanish).
bool is_collinear(const FVector& a, const FVector& b, const FVector& c);

/// A full line {base + t*direction}, in canonical form: the direction is
/// scaled so its first nonzero coordinate is 1, and the base is the point
/// on the line with the smallest integer encoding. Canonical forms are
/// unique per point set, which makes lines hashable.
struct Line {
  FVector base;
  FVector direction;

  static Line through(const FVector& a, const FVector& b);  // throws EqualPoints
  std::vector<FVector> points() const;                      // exactly q points

  friend bool operator==(const Line& a, const Line& b) {
    return a.base == b.base && a.direction == b.direction;
  }
};

/// The hyperplane {z : normal.z = offset}, canonicalized like Line
/// directions (first nonzero coordinate of the normal is 1).
struct Hyperplane {
  FVector normal;
  FieldElem offset;

  static Hyperplane from(const FVector& normal, FieldElem offset);

  /// h_xy = {z : (z-x).(y-x) = 0}; contains x always, and y iff |x-y| = 0.
  static Hyperplane through_points(const FVector& x, const FVector& y);  // throws EqualPoints

  bool contains(const FVector& z) const;
  std::vector<FVector> points() const;  // exactly q^(d-1) points

  friend bool operator==(const Hyperplane& a, const Hyperplane& b) {
    return a.normal == b.normal && a.offset == b.offset;
  }
};

/// Canonical isotropic vector (nonzero, norm 0) of F_q^d, or nullopt when
/// none exists (d = 2 with q = 3 mod 4). For d = 2 this is (1, r) with r
/// the canonical square root of -1; for d >= 3 it is the smallest-index
/// solution of x^2 + y^2 + z^2 = 0 supported on the first three
/// coordinates, padded with zeros.
std::optional<FVector> find_isotropic(FieldCtxPtr ctx, int d);

/// All (q^d - 1)/(q - 1) canonical lines through the origin, deterministic
/// order (pivot coordinate ascending, then free coordinates by code).
std::vector<Line> lines_through_origin(FieldCtxPtr ctx, int d);

/// A d x d matrix M with M * M^T = I exactly (checked at construction).
struct OrthogonalMap {
  FieldCtxPtr ctx;
  int d = 0;
  std::vector<FieldElem> entries;  // row-major

  static OrthogonalMap identity(FieldCtxPtr ctx, int d);

  /// Reflection x -> x - 2 (x.v / |v|) v through a non-isotropic v.
  static OrthogonalMap reflection(const FVector& v);  // throws ZeroVector

  FieldElem at(int r, int c) const { return entries[static_cast<size_t>(r) * d + c]; }
  FVector apply(const FVector& x) const;
  OrthogonalMap compose(const OrthogonalMap& other) const;  // this * other
  bool is_orthogonal() const;
};

/// Product of `reflections` reflections (default 2d) through uniformly
/// sampled non-isotropic vectors, driven by the library PRNG.
OrthogonalMap random_orthogonal(FieldCtxPtr ctx, int d, uint64_t seed, int reflections = -1);

}  // namespace ffgeo
