#include "coinduct/fixtures.hpp"

#include <string>
#include <vector>

namespace coinduct::fixtures {

namespace {

RuleSet build(const RuleSetDesc& desc) { return RuleSet::from_desc(desc); }

std::string list_atom(const std::string& digits) { return "[" + digits + "]"; }

}  // namespace

RuleSet r0() {
  return build({{"a", "b", "c"}, {{"a", {}}, {"b", {}}, {"c", {}}}});
}

RuleSet r1() {
  return build({{"a", "b", "c"},
                {{"a", {{"to_b", {"b"}}}}, {"b", {{"to_c", {"c"}}}}, {"c", {}}}});
}

RuleSet r2() {
  return build({{"a", "b", "c"},
                {{"a", {{"ax", {}}}}, {"b", {{"from_a", {"a"}}}}, {"c", {{"loop", {"b", "c"}}}}}});
}

RuleSet r3() {
  constexpr std::size_t kDepth = 2;
  std::vector<std::string> lists{""};
  for (std::size_t begin = 0, len = 0; len < kDepth; ++len) {
    const std::size_t end = lists.size();
    for (std::size_t i = begin; i < end; ++i) {
      lists.push_back(lists[i] + "0");
      lists.push_back(lists[i] + "1");
    }
    begin = end;
  }

  RuleSetDesc desc;
  for (const auto& s : lists) desc.carrier.push_back(list_atom(s));
  for (const auto& s : lists) {
    auto& rules = desc.rules[list_atom(s)];
    if (s.size() < kDepth) rules.push_back({"extend", {list_atom(s + "0"), list_atom(s + "1")}});
    for (std::size_t len = 0; len < s.size(); ++len) {
      const auto prefix = list_atom(s.substr(0, len));
      rules.push_back({"prefix:" + prefix, {prefix}});
    }
  }
  return build(desc);
}

Predicate baire_bar(const RuleSet& r3) {
  Predicate bar(r3.carrier());
  for (std::size_t i = 0; i < r3.size(); ++i) {
    // "[" + two digits + "]"
    if (r3.carrier().name(i).size() == 4) bar.insert(i);
  }
  return bar;
}

}  // namespace coinduct::fixtures
