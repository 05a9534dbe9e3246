#pragma once

#include <cstdint>

#include "ffgeo/configurations.hpp"
#include "ffgeo/report.hpp"
#include "ffgeo/rng.hpp"

namespace ffgeo {

/// m distinct uniform points of F_q^d (m <= q^d).
PointSet random_point_set(FieldCtxPtr ctx, int d, uint64_t m, SplitMix64& rng);

/// Uniform hyperplane in canonical form.
Hyperplane random_hyperplane(FieldCtxPtr ctx, int d, SplitMix64& rng);

/// m distinct hyperplanes, deduplicated by canonical form.
std::vector<Hyperplane> random_hyperplane_family(FieldCtxPtr ctx, int d, uint64_t m,
                                                 SplitMix64& rng);

// Seeded stress experiments. Each returns a Report whose `holds` states
// whether every trial satisfied the tested property; counts carry the exact
// tallies. Identical arguments reproduce identical reports (minus timing).

/// Random sets of size min(q^d, ceil(4 q^((d+2)/3))) must contain a right
/// angle (searched over all ordered triples).
Report run_right_angle_threshold(FieldCtxPtr ctx, int d, int trials, uint64_t seed);

/// Random sets of random size always satisfy
/// orderedPairs >= |A|^2/q - q^(d/2) |A|.
Report run_orthogonality_bound(FieldCtxPtr ctx, int d, int trials, uint64_t seed);

/// Random hyperplane families always satisfy |E^c| <= q^(d+1)/|H|.
Report run_cover_lemma(FieldCtxPtr ctx, int d, int trials, uint64_t seed);

/// Random sets of size (q^d-1)/(q-1) + 2 (+1 for even d) always contain a
/// collinear triple.
Report run_collinear_pigeonhole(FieldCtxPtr ctx, int d, int trials, uint64_t seed);

/// Random 2q-1 point subsets of the plane generate every defined spread the
/// full plane generates.
Report run_all_spreads_2d(FieldCtxPtr ctx, int trials, uint64_t seed);

/// Random sets of size ceil(q^((d+2)/2)/2), intersected with their richest
/// nonzero-radius sphere, generate at least q/8 defined spreads through
/// pairs with the vertex at the origin.
Report run_sphere_spreads(FieldCtxPtr ctx, int d, int trials, uint64_t seed);

/// Counts solutions of x^2 - t y^2 = 1 for every nonzero t; the maximum
/// count is at least q+1.
Report run_conic_pigeonhole(FieldCtxPtr ctx);

/// Pairwise floor/gcd intersection formula against the set oracle over the
/// full grid k1 <= k2 <= sigma, with d-fold tuples recorded on the side.
Report run_sset_grid(int64_t p, int64_t sigma);

/// sumPhi(n) vs (3/pi^2) n^2 and sumIPhi(n) vs (2/pi^2) n^3, 2% tolerance.
Report run_totient_asymptotics(uint32_t n);

/// Brute-force line count of the box closure against the predicted main
/// term, and |U| against the closed-form lower bound.
Report run_line_count(int64_t p, int d);

}  // namespace ffgeo
