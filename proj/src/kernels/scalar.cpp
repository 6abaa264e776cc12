#include "coinduct/kernels.hpp"

namespace coinduct::kernels::scalar {

namespace {

inline std::uint64_t der_one(const MaskTable& t, std::uint64_t p) {
  std::uint64_t out = 0;
  for (const auto& rule : t.rules) {
    if ((rule.premises & ~p) == 0) out |= rule.conclusion;
  }
  return out;
}

// Elements with at least one rule that misses P entirely.
inline std::uint64_t blocked_one(const MaskTable& t, std::uint64_t p) {
  std::uint64_t out = 0;
  for (const auto& rule : t.rules) {
    if ((rule.premises & p) == 0) out |= rule.conclusion;
  }
  return out;
}

}  // namespace

void der_batch(const MaskTable& t, std::span<const std::uint64_t> in, std::span<std::uint64_t> out) {
  for (std::size_t k = 0; k < in.size(); ++k) out[k] = der_one(t, in[k]);
}

void conf_batch(const MaskTable& t, std::span<const std::uint64_t> in, std::span<std::uint64_t> out) {
  for (std::size_t k = 0; k < in.size(); ++k) out[k] = t.universe & ~blocked_one(t, in[k]);
}

std::uint64_t closed_meet(const MaskTable& t, std::uint64_t v) {
  std::uint64_t meet = t.universe;
  const std::uint64_t last = t.universe;
  for (std::uint64_t p = 0;; ++p) {
    if (((v | der_one(t, p)) & ~p) == 0) meet &= p;
    if (p == last) break;
  }
  return meet;
}

std::uint64_t consistent_join(const MaskTable& t, std::uint64_t v) {
  std::uint64_t join = 0;
  const std::uint64_t last = t.universe;
  for (std::uint64_t p = 0;; ++p) {
    const std::uint64_t conf = v & t.universe & ~blocked_one(t, p);
    if ((p & ~conf) == 0) join |= p;
    if (p == last) break;
  }
  return join;
}

}  // namespace coinduct::kernels::scalar
