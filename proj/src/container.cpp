#include "coinduct/container.hpp"

#include <set>

namespace coinduct {

std::vector<Violation> validate_container(const ContainerDesc& desc) {
  std::vector<Violation> out;
  std::set<std::string> elements;
  for (std::size_t i = 0; i < desc.carrier.size(); ++i) {
    if (!elements.insert(desc.carrier[i]).second) {
      out.push_back({"carrier/" + std::to_string(i), "duplicate element '" + desc.carrier[i] + "'"});
    }
  }
  for (const auto& element : elements) {
    if (!desc.index.contains(element)) {
      out.push_back({"index", "missing option list for element '" + element + "'"});
    }
  }
  for (const auto& [element, options] : desc.index) {
    const std::string where = "index/" + element;
    if (!elements.contains(element)) {
      out.push_back({where, "option list for unknown element '" + element + "'"});
    }
    std::set<std::string> option_ids;
    for (std::size_t k = 0; k < options.size(); ++k) {
      const std::string at = where + "/" + std::to_string(k);
      if (!option_ids.insert(options[k].id).second) {
        out.push_back({at + "/id", "duplicate option id '" + options[k].id + "'"});
      }
      std::set<std::string> branch_ids;
      for (std::size_t b = 0; b < options[k].branches.size(); ++b) {
        const auto& branch = options[k].branches[b];
        const std::string bat = at + "/branches/" + std::to_string(b);
        if (!branch_ids.insert(branch.id).second) {
          out.push_back({bat + "/id", "duplicate branch id '" + branch.id + "'"});
        }
        if (!elements.contains(branch.arity)) {
          out.push_back({bat + "/arity", "arity '" + branch.arity + "' outside the carrier"});
        }
      }
    }
  }
  return out;
}

IndexedContainer::IndexedContainer(Carrier carrier, std::vector<std::vector<ContainerOption>> options)
    : carrier_(std::move(carrier)), options_(std::move(options)) {
  std::vector<Violation> violations;
  if (options_.size() != carrier_.size()) {
    violations.push_back({"index", "expected " + std::to_string(carrier_.size()) + " option lists"});
    throw InvalidRuleSet(std::move(violations));
  }
  for (std::size_t x = 0; x < options_.size(); ++x) {
    std::set<std::string> option_ids;
    for (std::size_t k = 0; k < options_[x].size(); ++k) {
      const auto& opt = options_[x][k];
      const std::string at = "index/" + carrier_.name(x) + "/" + std::to_string(k);
      if (!option_ids.insert(opt.id).second) {
        violations.push_back({at + "/id", "duplicate option id '" + opt.id + "'"});
      }
      std::set<std::string> branch_ids;
      for (const auto& branch : opt.branches) {
        if (!branch_ids.insert(branch.id).second) {
          violations.push_back({at + "/branches", "duplicate branch id '" + branch.id + "'"});
        }
        if (branch.target >= carrier_.size()) {
          violations.push_back({at + "/branches", "arity outside the carrier"});
        }
      }
    }
  }
  if (!violations.empty()) throw InvalidRuleSet(std::move(violations));
}

IndexedContainer IndexedContainer::from_desc(const ContainerDesc& desc) {
  auto violations = validate_container(desc);
  if (!violations.empty()) throw InvalidRuleSet(std::move(violations));
  Carrier carrier(desc.carrier);
  std::vector<std::vector<ContainerOption>> options(carrier.size());
  for (std::size_t x = 0; x < carrier.size(); ++x) {
    for (const auto& opt : desc.index.at(carrier.name(x))) {
      ContainerOption built{opt.id, {}};
      for (const auto& branch : opt.branches) {
        built.branches.push_back({branch.id, carrier.index_of(branch.arity)});
      }
      options[x].push_back(std::move(built));
    }
  }
  return IndexedContainer(std::move(carrier), std::move(options));
}

ContainerDesc IndexedContainer::to_desc() const {
  ContainerDesc desc;
  desc.carrier.assign(carrier_.elements().begin(), carrier_.elements().end());
  for (std::size_t x = 0; x < carrier_.size(); ++x) {
    auto& list = desc.index[carrier_.name(x)];
    for (const auto& opt : options_[x]) {
      OptionDesc out{opt.id, {}};
      for (const auto& branch : opt.branches) out.branches.push_back({branch.id, carrier_.name(branch.target)});
      list.push_back(std::move(out));
    }
  }
  return desc;
}

std::optional<std::size_t> IndexedContainer::find_option(std::size_t element, std::string_view id) const {
  const auto& list = options_.at(element);
  for (std::size_t k = 0; k < list.size(); ++k) {
    if (list[k].id == id) return k;
  }
  return std::nullopt;
}

const ContainerOption& IndexedContainer::option(std::size_t element, std::string_view id) const {
  if (auto k = find_option(element, id)) return options_[element][*k];
  throw InvalidInput("element '" + carrier_.name(element) + "' has no option '" + std::string(id) + "'");
}

}  // namespace coinduct
