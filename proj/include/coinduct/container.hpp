#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coinduct/predicate.hpp"
#include "coinduct/ruleset.hpp"

namespace coinduct {

/// Name-level description of an indexed container (A, I, Br, ar).
struct BranchDesc {
  std::string id;
  std::string arity;  // ar(x, y, z): a carrier element

  friend bool operator==(const BranchDesc&, const BranchDesc&) = default;
};

struct OptionDesc {
  std::string id;
  std::vector<BranchDesc> branches;

  friend bool operator==(const OptionDesc&, const OptionDesc&) = default;
};

struct ContainerDesc {
  std::vector<std::string> carrier;
  std::map<std::string, std::vector<OptionDesc>> index;

  friend bool operator==(const ContainerDesc&, const ContainerDesc&) = default;
};

std::vector<Violation> validate_container(const ContainerDesc& desc);

struct Branch {
  std::string id;
  std::size_t target;  // index into the carrier

  friend bool operator==(const Branch&, const Branch&) = default;
};

struct ContainerOption {
  std::string id;
  std::vector<Branch> branches;

  friend bool operator==(const ContainerOption&, const ContainerOption&) = default;
};

/// Polynomial presentation: options I(x) per element, branches Br(x, y) per
/// option, and an arity ar(x, y, z) landing in the carrier.
class IndexedContainer {
 public:
  /// Throws InvalidRuleSet (the shared violation carrier) when ids repeat or an
  /// arity leaves the carrier.
  IndexedContainer(Carrier carrier, std::vector<std::vector<ContainerOption>> options);

  static IndexedContainer from_desc(const ContainerDesc& desc);
  ContainerDesc to_desc() const;

  const Carrier& carrier() const noexcept { return carrier_; }
  std::span<const ContainerOption> options_of(std::size_t element) const { return options_.at(element); }
  std::optional<std::size_t> find_option(std::size_t element, std::string_view id) const;
  const ContainerOption& option(std::size_t element, std::string_view id) const;

  friend bool operator==(const IndexedContainer&, const IndexedContainer&) = default;

 private:
  Carrier carrier_;
  std::vector<std::vector<ContainerOption>> options_;
};

}  // namespace coinduct
