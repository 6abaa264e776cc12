#include "coinduct/wtree.hpp"

#include <set>

#include "coinduct/error.hpp"

namespace coinduct {

WSignature::WSignature(std::vector<Label> labels) : labels_(std::move(labels)) {
  std::set<std::string> names;
  for (const auto& label : labels_) {
    if (!names.insert(label.name).second) throw InvalidInput("duplicate label '" + label.name + "'");
    std::set<std::string> branches(label.branches.begin(), label.branches.end());
    if (branches.size() != label.branches.size()) {
      throw InvalidInput("duplicate branch under label '" + label.name + "'");
    }
  }
}

std::size_t WSignature::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].name == name) return i;
  }
  throw InvalidInput("unknown label '" + std::string(name) + "'");
}

std::size_t WTree::node_count() const {
  std::size_t n = 1;
  for (const auto& sub : subtrees_) n += sub.node_count();
  return n;
}

WTree wtree_sup(const WSignature& sig, std::size_t label, std::vector<WTree> subtrees) {
  if (label >= sig.size()) throw InvalidInput("label index out of range");
  const auto& expected = sig.label(label).branches;
  if (subtrees.size() != expected.size()) {
    throw InvalidInput("sup(" + sig.label(label).name + ", f): expected " + std::to_string(expected.size()) +
                       " subtrees, got " + std::to_string(subtrees.size()));
  }
  return WTree(label, std::move(subtrees));
}

std::size_t DWTree::node_count() const {
  std::size_t n = 1;
  for (const auto& sub : subtrees_) n += sub.node_count();
  return n;
}

DWTree dw_sup(const IndexedContainer& k, std::size_t label, std::string_view option, std::vector<DWTree> subtrees) {
  if (label >= k.carrier().size()) throw InvalidInput("label index out of range");
  const auto index = k.find_option(label, option);
  if (!index) {
    throw InvalidInput("'" + k.carrier().name(label) + "' has no option '" + std::string(option) + "'");
  }
  const auto& opt = k.options_of(label)[*index];
  if (subtrees.size() != opt.branches.size()) {
    throw InvalidInput("dsup: option '" + opt.id + "' has " + std::to_string(opt.branches.size()) +
                       " branches, got " + std::to_string(subtrees.size()) + " subtrees");
  }
  for (std::size_t z = 0; z < subtrees.size(); ++z) {
    if (subtrees[z].label() != opt.branches[z].target) {
      throw InvalidInput("dsup: branch '" + opt.branches[z].id + "' needs root '" +
                         k.carrier().name(opt.branches[z].target) + "', got '" +
                         k.carrier().name(subtrees[z].label()) + "'");
    }
  }
  return DWTree(label, *index, std::move(subtrees));
}

bool dw_coherent(const IndexedContainer& k, const DWTree& t) {
  if (t.label() >= k.carrier().size()) return false;
  const auto options = k.options_of(t.label());
  if (t.option() >= options.size()) return false;
  const auto& opt = options[t.option()];
  if (opt.branches.size() != t.subtrees().size()) return false;
  for (std::size_t z = 0; z < opt.branches.size(); ++z) {
    if (t.subtrees()[z].label() != opt.branches[z].target || !dw_coherent(k, t.subtrees()[z])) return false;
  }
  return true;
}

}  // namespace coinduct
