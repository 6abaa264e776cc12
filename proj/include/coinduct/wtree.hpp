#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coinduct/container.hpp"

namespace coinduct {

/// Container (A, B) of a plain W-type: labels and, per label, its finite
/// branch set B(a).
class WSignature {
 public:
  struct Label {
    std::string name;
    std::vector<std::string> branches;
  };

  /// Throws InvalidInput on duplicate label or branch names.
  explicit WSignature(std::vector<Label> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const Label& label(std::size_t i) const { return labels_.at(i); }
  std::size_t index_of(std::string_view name) const;

 private:
  std::vector<Label> labels_;
};

/// sup(a, f): a wellfounded tree, one subtree per branch of B(a).
/// Only wtree_sup builds one, so every value respects its signature.
class WTree {
 public:
  std::size_t label() const noexcept { return label_; }
  std::span<const WTree> subtrees() const noexcept { return subtrees_; }
  std::size_t node_count() const;

  friend bool operator==(const WTree&, const WTree&) = default;

 private:
  friend WTree wtree_sup(const WSignature&, std::size_t, std::vector<WTree>);
  WTree(std::size_t label, std::vector<WTree> subtrees) : label_(label), subtrees_(std::move(subtrees)) {}

  std::size_t label_;
  std::vector<WTree> subtrees_;
};

/// Throws InvalidInput unless there is exactly one subtree per branch.
WTree wtree_sup(const WSignature& sig, std::size_t label, std::vector<WTree> subtrees);

/// El_W: d(a, f, k) with f the subtrees and k their recursive values.
template <class Value, class D>
Value wtree_recursor(const WTree& t, D&& d) {
  auto fold = [&](auto& self, const WTree& node) -> Value {
    std::vector<Value> k;
    k.reserve(node.subtrees().size());
    for (const auto& sub : node.subtrees()) k.push_back(self(self, sub));
    return d(node.label(), node.subtrees(), std::span<const Value>(k));
  };
  return fold(fold, t);
}

/// dsup(a, i, f) in DW(a): the subtree at branch z has root label ar(a, i, z).
class DWTree {
 public:
  std::size_t label() const noexcept { return label_; }
  std::size_t option() const noexcept { return option_; }  // index into I(label)
  std::span<const DWTree> subtrees() const noexcept { return subtrees_; }
  std::size_t node_count() const;

  friend bool operator==(const DWTree&, const DWTree&) = default;

 private:
  friend DWTree dw_sup(const IndexedContainer&, std::size_t, std::string_view, std::vector<DWTree>);
  DWTree(std::size_t label, std::size_t option, std::vector<DWTree> subtrees)
      : label_(label), option_(option), subtrees_(std::move(subtrees)) {}

  std::size_t label_;
  std::size_t option_;
  std::vector<DWTree> subtrees_;
};

/// Throws InvalidInput on an unknown option, a wrong subtree count, or a
/// subtree whose root label differs from ar(a, i, z).
DWTree dw_sup(const IndexedContainer& k, std::size_t label, std::string_view option, std::vector<DWTree> subtrees);

/// True iff every stored subtree root equals the arity of its branch.
bool dw_coherent(const IndexedContainer& k, const DWTree& t);

/// El_DW: d(a, option, f, k).
template <class Value, class D>
Value dw_recursor(const IndexedContainer& k, const DWTree& t, D&& d) {
  auto fold = [&](auto& self, const DWTree& node) -> Value {
    std::vector<Value> results;
    results.reserve(node.subtrees().size());
    for (const auto& sub : node.subtrees()) results.push_back(self(self, sub));
    const ContainerOption& opt = k.options_of(node.label())[node.option()];
    return d(node.label(), opt, node.subtrees(), std::span<const Value>(results));
  };
  return fold(fold, t);
}

}  // namespace coinduct
