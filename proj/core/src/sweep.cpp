#include <fjrw/sweep.hpp>

#include <numeric>
#include <thread>

namespace fjrw {

namespace {

long long degree_of(PolyType t, long long delta, long long w1, long long w2) {
  long long d = delta * w1 * w2;
  if (t != PolyType::fermat) d += w1;
  if (t == PolyType::loop) d += w2;
  return d;
}

bool admissible(PolyType t, long long delta, long long w1, long long w2) {
  if (std::gcd(w1, w2) != 1) return false;
  long long a1 = delta * w2 + (t == PolyType::fermat ? 0 : 1);
  long long a2 = delta * w1 + (t == PolyType::loop ? 1 : 0);
  return a1 >= 2 && a2 >= 2;
}

}  // namespace

std::vector<SweepKey> enumerate_weight_systems(PolyType t, long long d_max) {
  std::vector<SweepKey> keys;
  const bool symmetric = t != PolyType::chain;  // chain is not swap-invariant
  for (long long w1 = 1; degree_of(t, 1, w1, symmetric ? w1 : 1) <= d_max; ++w1) {
    for (long long w2 = symmetric ? w1 : 1; degree_of(t, 1, w1, w2) <= d_max; ++w2) {
      if (std::gcd(w1, w2) != 1) continue;
      for (long long delta = 1; degree_of(t, delta, w1, w2) <= d_max; ++delta)
        if (admissible(t, delta, w1, w2)) keys.push_back({t, delta, w1, w2});
    }
  }
  return keys;
}

std::vector<SweepRow> sweep(PolyType t, long long d_max) {
  if (d_max > 10000) fail(errc::unsupported, "sweep bound capped at d <= 10000");
  std::vector<SweepKey> keys = enumerate_weight_systems(t, d_max);
  std::vector<SweepRow> rows(keys.size());

  auto work = [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      const SweepKey& key = keys[i];
      InvertiblePolynomial p = from_weights(key.type, key.delta, key.w1, key.w2);
      SemisimplicityReport rep = semisimplicity_verdict(p);
      rows[i] = SweepRow{key,         rep.ws.d, rep.ws.chat,
                         rep.mu,      rep.verdict, rep.family,
                         lambda_invariant(rep.ws), p.source};
    }
  };

  size_t n = keys.size();
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  size_t nthreads = std::min<size_t>(hw, std::max<size_t>(1, n / 16));
  if (nthreads <= 1) {
    work(0, n);
  } else {
    std::vector<std::thread> pool;
    size_t chunk = (n + nthreads - 1) / nthreads;
    for (size_t th = 0; th < nthreads; ++th) {
      size_t begin = th * chunk, end = std::min(n, begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
    for (auto& th : pool) th.join();
  }
  return rows;
}

std::vector<SweepRow> sweep_main_range(PolyType t, long long d_max) {
  std::vector<SweepRow> rows = sweep(t, d_max);
  std::erase_if(rows, [](const SweepRow& r) { return r.chat < 1; });
  return rows;
}

}  // namespace fjrw
