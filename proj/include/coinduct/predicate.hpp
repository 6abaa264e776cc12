#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace coinduct {

/// Finite, ordered set of distinct atoms. Copies share the element table.
class Carrier {
 public:
  Carrier();
  /// Throws InvalidInput on duplicate atoms.
  explicit Carrier(std::vector<std::string> elements);

  std::size_t size() const noexcept { return data_->names.size(); }
  bool empty() const noexcept { return data_->names.empty(); }
  const std::string& name(std::size_t index) const { return data_->names.at(index); }
  std::span<const std::string> elements() const noexcept { return data_->names; }

  std::optional<std::size_t> find(std::string_view atom) const;
  /// Throws InvalidInput when `atom` is not an element.
  std::size_t index_of(std::string_view atom) const;

  /// Same elements in the same order.
  bool same_as(const Carrier& other) const noexcept;
  friend bool operator==(const Carrier& a, const Carrier& b) noexcept { return a.same_as(b); }

 private:
  struct Data {
    std::vector<std::string> names;
    std::unordered_map<std::string, std::size_t> index;
  };
  std::shared_ptr<const Data> data_;
};

/// Decidable subset of a carrier, stored as a bitset. Equality is extensional.
class Predicate {
 public:
  explicit Predicate(Carrier carrier);

  static Predicate empty(const Carrier& carrier) { return Predicate(carrier); }
  static Predicate full(const Carrier& carrier);
  static Predicate of(const Carrier& carrier, std::initializer_list<std::string_view> atoms);
  static Predicate of(const Carrier& carrier, std::span<const std::string> atoms);
  static Predicate from_indices(const Carrier& carrier, std::span<const std::size_t> indices);
  /// Bit i of `mask` is element i. Requires carrier.size() <= 64.
  static Predicate from_mask(const Carrier& carrier, std::uint64_t mask);

  const Carrier& carrier() const noexcept { return carrier_; }

  bool contains(std::size_t index) const;
  bool contains(std::string_view atom) const;
  void insert(std::size_t index);
  void erase(std::size_t index);

  std::size_t count() const noexcept;
  bool is_empty() const noexcept;

  /// Members in carrier declaration order.
  std::vector<std::size_t> indices() const;
  std::vector<std::string> names() const;
  /// Members in lexicographic order (the canonical printed/serialized order).
  std::vector<std::string> sorted_names() const;

  /// Requires carrier.size() <= 64.
  std::uint64_t mask() const;

  friend bool operator==(const Predicate& a, const Predicate& b);

 private:
  friend bool leq(const Predicate&, const Predicate&);
  friend Predicate complement(const Predicate&);
  friend Predicate union_of(const Predicate&, const Predicate&);
  friend Predicate intersection(const Predicate&, const Predicate&);

  void check_index(std::size_t index) const;

  Carrier carrier_;
  std::vector<std::uint64_t> words_;
};

/// Throws InvalidInput unless both predicates live on the same carrier.
void require_same_carrier(const Predicate& a, const Predicate& b);
void require_carrier(const Carrier& expected, const Predicate& p);

/// P <= Q pointwise.
bool leq(const Predicate& p, const Predicate& q);
Predicate complement(const Predicate& p);
Predicate union_of(const Predicate& p, const Predicate& q);
Predicate intersection(const Predicate& p, const Predicate& q);

/// "{a,b,c}" with atoms sorted; the empty predicate prints as "∅".
std::string format_predicate(const Predicate& p);

}  // namespace coinduct
