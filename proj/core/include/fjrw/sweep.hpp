#pragma once

// Enumeration of weight systems by type up to a degree bound, and verdict
// sweeps over them. Rows are computed concurrently and reported in the
// deterministic enumeration order.

#include <fjrw/frobenius.hpp>

#include <vector>

namespace fjrw {

struct SweepKey {
  PolyType type;
  long long delta, w1, w2;
};

/// All admissible (delta, w1, w2) with gcd(w1, w2) = 1 and d <= d_max, in a
/// canonical order. Fermat and loop are symmetric under swapping the
/// weights, so those take w1 <= w2; chain weights are ordered pairs.
std::vector<SweepKey> enumerate_weight_systems(PolyType t, long long d_max);

struct SweepRow {
  SweepKey key;
  long long d = 0;
  Rational chat;
  MilnorCounts mu;
  Verdict verdict;
  SmallChargeFamily family = SmallChargeFamily::none;
  long long lambda = 0;
  std::string polynomial;
};

std::vector<SweepRow> sweep(PolyType t, long long d_max);

/// Restriction of the sweep to systems with central charge >= 1 (the range
/// of the Euler-class criterion).
std::vector<SweepRow> sweep_main_range(PolyType t, long long d_max);

}  // namespace fjrw
