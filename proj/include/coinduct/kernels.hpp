#pragma once

// Bit-parallel evaluation of Der/Conf over carriers of at most 64 elements.
// A predicate is a 64-bit mask (bit i = element i). The exhaustive oracle
// sweeps all 2^n masks, so these loops are the hot path; each has a scalar
// reference and an AVX2 variant picked at runtime.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "coinduct/ruleset.hpp"

namespace coinduct::kernels {

inline constexpr std::size_t kMaxMaskWidth = 64;

/// One rule flattened to masks: conclusion has exactly one bit set.
struct MaskRule {
  std::uint64_t conclusion;
  std::uint64_t premises;
};

struct MaskTable {
  std::size_t width = 0;        // carrier size
  std::uint64_t universe = 0;   // low `width` bits set
  std::vector<MaskRule> rules;  // all rules, conclusion-major, declaration order
};

/// Throws BoundExceeded if the carrier has more than 64 elements.
MaskTable make_mask_table(const RuleSet& r);

// out[k] = Der(in[k]) / Conf(in[k]). `out.size()` must equal `in.size()`.
using BatchFn = void (*)(const MaskTable&, std::span<const std::uint64_t> in, std::span<std::uint64_t> out);
// Meet of all P with V ∪ Der(P) ⊆ P / join of all P with P ⊆ V ∩ Conf(P),
// P ranging over every subset of the carrier.
using SweepFn = std::uint64_t (*)(const MaskTable&, std::uint64_t v);

enum class Isa { scalar, avx2 };

struct KernelSet {
  Isa isa;
  std::string_view name;
  BatchFn der_batch;
  BatchFn conf_batch;
  SweepFn closed_meet;
  SweepFn consistent_join;
};

const KernelSet& scalar_kernels();
/// nullptr when not compiled in or the CPU lacks AVX2.
const KernelSet* avx2_kernels();
/// AVX2 when available, else scalar. COINDUCT_KERNELS=scalar forces scalar.
const KernelSet& active_kernels();

namespace scalar {
void der_batch(const MaskTable& t, std::span<const std::uint64_t> in, std::span<std::uint64_t> out);
void conf_batch(const MaskTable& t, std::span<const std::uint64_t> in, std::span<std::uint64_t> out);
std::uint64_t closed_meet(const MaskTable& t, std::uint64_t v);
std::uint64_t consistent_join(const MaskTable& t, std::uint64_t v);
}  // namespace scalar

#if defined(COINDUCT_HAVE_AVX2)
namespace avx2 {
void der_batch(const MaskTable& t, std::span<const std::uint64_t> in, std::span<std::uint64_t> out);
void conf_batch(const MaskTable& t, std::span<const std::uint64_t> in, std::span<std::uint64_t> out);
std::uint64_t closed_meet(const MaskTable& t, std::uint64_t v);
std::uint64_t consistent_join(const MaskTable& t, std::uint64_t v);
}  // namespace avx2
#endif

}  // namespace coinduct::kernels
