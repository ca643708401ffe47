// Scan kernels over a ModelSpace. The *_serial variants are the reference
// implementations; the parallel ones must agree with them exactly.

#include <algorithm>
#include <limits>

#include "dmt/oracle.hpp"

#ifdef DMT_HAVE_OPENMP
#include <omp.h>
#endif

namespace dmt::oracle {

namespace {

// Chunk size for the ordered first-hit scan: large enough to amortize the
// fork, small enough that an early hit stops the scan quickly.
constexpr std::uint64_t kChunk = 1 << 12;
constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

}  // namespace

std::optional<OracleHit> first_hit_serial(const ModelSpace& space, const ModelProbe& probe) {
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    const int w = probe(space.compact(i));
    if (w >= 0) return OracleHit{i, static_cast<std::size_t>(w)};
  }
  return std::nullopt;
}

std::optional<OracleHit> first_hit(const ModelSpace& space, const ModelProbe& probe) {
  const std::uint64_t total = space.size();
  for (std::uint64_t start = 0; start < total; start += kChunk) {
    const auto stop = static_cast<std::int64_t>(std::min(total, start + kChunk));
    std::uint64_t best = kNone;
#pragma omp parallel for schedule(static) reduction(min : best)
    for (auto i = static_cast<std::int64_t>(start); i < stop; ++i) {
      const auto idx = static_cast<std::uint64_t>(i);
      if (idx < best && probe(space.compact(idx)) >= 0) best = idx;
    }
    if (best != kNone) {
      const int w = probe(space.compact(best));
      return OracleHit{best, static_cast<std::size_t>(w)};
    }
  }
  return std::nullopt;
}

std::uint64_t count_hits_serial(const ModelSpace& space, const ModelProbe& probe) {
  std::uint64_t n = 0;
  for (std::uint64_t i = 0; i < space.size(); ++i) n += probe(space.compact(i)) >= 0 ? 1 : 0;
  return n;
}

std::uint64_t count_hits(const ModelSpace& space, const ModelProbe& probe) {
  const auto total = static_cast<std::int64_t>(space.size());
  std::uint64_t n = 0;
#pragma omp parallel for schedule(static) reduction(+ : n)
  for (std::int64_t i = 0; i < total; ++i) {
    n += probe(space.compact(static_cast<std::uint64_t>(i))) >= 0 ? 1 : 0;
  }
  return n;
}

std::optional<std::uint64_t> first_disagreement(const ModelSpace& space, const ModelProbe& a,
                                                const ModelProbe& b) {
  auto hit = first_hit(space, [&](const CompactModel& m) {
    return ((a(m) >= 0) != (b(m) >= 0)) ? 0 : -1;
  });
  if (!hit) return std::nullopt;
  return hit->index;
}

}  // namespace dmt::oracle
