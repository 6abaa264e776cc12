// Compiled with -mavx2; only reached through the runtime dispatcher.
#include <immintrin.h>

#include "coinduct/kernels.hpp"

namespace coinduct::kernels::avx2 {

namespace {

constexpr std::size_t kLanes = 4;

inline __m256i der4(const MaskTable& t, __m256i p) {
  const __m256i zero = _mm256_setzero_si256();
  __m256i acc = zero;
  for (const auto& rule : t.rules) {
    const __m256i prem = _mm256_set1_epi64x(static_cast<long long>(rule.premises));
    const __m256i missing = _mm256_andnot_si256(p, prem);
    const __m256i fires = _mm256_cmpeq_epi64(missing, zero);
    acc = _mm256_or_si256(acc, _mm256_and_si256(fires, _mm256_set1_epi64x(static_cast<long long>(rule.conclusion))));
  }
  return acc;
}

inline __m256i blocked4(const MaskTable& t, __m256i p) {
  const __m256i zero = _mm256_setzero_si256();
  __m256i acc = zero;
  for (const auto& rule : t.rules) {
    const __m256i prem = _mm256_set1_epi64x(static_cast<long long>(rule.premises));
    const __m256i misses = _mm256_cmpeq_epi64(_mm256_and_si256(p, prem), zero);
    acc = _mm256_or_si256(acc, _mm256_and_si256(misses, _mm256_set1_epi64x(static_cast<long long>(rule.conclusion))));
  }
  return acc;
}

inline std::uint64_t and_lanes(__m256i v) {
  alignas(32) std::uint64_t lanes[kLanes];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return lanes[0] & lanes[1] & lanes[2] & lanes[3];
}

inline std::uint64_t or_lanes(__m256i v) {
  alignas(32) std::uint64_t lanes[kLanes];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return lanes[0] | lanes[1] | lanes[2] | lanes[3];
}

}  // namespace

void der_batch(const MaskTable& t, std::span<const std::uint64_t> in, std::span<std::uint64_t> out) {
  std::size_t k = 0;
  for (; k + kLanes <= in.size(); k += kLanes) {
    const __m256i p = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in.data() + k));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + k), der4(t, p));
  }
  scalar::der_batch(t, in.subspan(k), out.subspan(k));
}

void conf_batch(const MaskTable& t, std::span<const std::uint64_t> in, std::span<std::uint64_t> out) {
  const __m256i universe = _mm256_set1_epi64x(static_cast<long long>(t.universe));
  std::size_t k = 0;
  for (; k + kLanes <= in.size(); k += kLanes) {
    const __m256i p = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in.data() + k));
    const __m256i conf = _mm256_andnot_si256(blocked4(t, p), universe);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + k), conf);
  }
  scalar::conf_batch(t, in.subspan(k), out.subspan(k));
}

std::uint64_t closed_meet(const MaskTable& t, std::uint64_t v) {
  // 2^width candidates; below width 2 there is not a full vector of them.
  if (t.width < 2 || t.width >= kMaxMaskWidth) return scalar::closed_meet(t, v);
  const __m256i zero = _mm256_setzero_si256();
  const __m256i ones = _mm256_cmpeq_epi64(zero, zero);
  const __m256i step = _mm256_set1_epi64x(kLanes);
  const __m256i vv = _mm256_set1_epi64x(static_cast<long long>(v));
  __m256i p = _mm256_set_epi64x(3, 2, 1, 0);
  __m256i meet = ones;
  const std::uint64_t count = std::uint64_t{1} << t.width;
  for (std::uint64_t base = 0; base < count; base += kLanes) {
    const __m256i grown = _mm256_or_si256(der4(t, p), vv);
    const __m256i closed = _mm256_cmpeq_epi64(_mm256_andnot_si256(p, grown), zero);
    // closed lanes contribute P, the rest contribute all-ones
    meet = _mm256_and_si256(meet, _mm256_or_si256(_mm256_and_si256(closed, p), _mm256_andnot_si256(closed, ones)));
    p = _mm256_add_epi64(p, step);
  }
  return and_lanes(meet) & t.universe;
}

std::uint64_t consistent_join(const MaskTable& t, std::uint64_t v) {
  if (t.width < 2 || t.width >= kMaxMaskWidth) return scalar::consistent_join(t, v);
  const __m256i zero = _mm256_setzero_si256();
  const __m256i step = _mm256_set1_epi64x(kLanes);
  const __m256i allowed = _mm256_set1_epi64x(static_cast<long long>(v & t.universe));
  __m256i p = _mm256_set_epi64x(3, 2, 1, 0);
  __m256i join = zero;
  const std::uint64_t count = std::uint64_t{1} << t.width;
  for (std::uint64_t base = 0; base < count; base += kLanes) {
    const __m256i conf = _mm256_andnot_si256(blocked4(t, p), allowed);
    const __m256i consistent = _mm256_cmpeq_epi64(_mm256_andnot_si256(conf, p), zero);
    join = _mm256_or_si256(join, _mm256_and_si256(consistent, p));
    p = _mm256_add_epi64(p, step);
  }
  return or_lanes(join);
}

}  // namespace coinduct::kernels::avx2
