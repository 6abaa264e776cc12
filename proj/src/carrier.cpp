#include "coinduct/predicate.hpp"

#include <algorithm>
#include <bit>

#include "coinduct/error.hpp"

namespace coinduct {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

// Mask of valid bits in the last word.
std::uint64_t tail_mask(std::size_t bits) {
  const std::size_t rem = bits % kWordBits;
  return rem == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
}

}  // namespace

Carrier::Carrier() : data_(std::make_shared<const Data>()) {}

Carrier::Carrier(std::vector<std::string> elements) {
  auto data = std::make_shared<Data>();
  data->names = std::move(elements);
  for (std::size_t i = 0; i < data->names.size(); ++i) {
    if (!data->index.emplace(data->names[i], i).second) {
      throw InvalidInput("duplicate carrier element '" + data->names[i] + "'");
    }
  }
  data_ = std::move(data);
}

std::optional<std::size_t> Carrier::find(std::string_view atom) const {
  auto it = data_->index.find(std::string(atom));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t Carrier::index_of(std::string_view atom) const {
  if (auto i = find(atom)) return *i;
  throw InvalidInput("unknown element '" + std::string(atom) + "'");
}

bool Carrier::same_as(const Carrier& other) const noexcept {
  return data_ == other.data_ || data_->names == other.data_->names;
}

Predicate::Predicate(Carrier carrier)
    : carrier_(std::move(carrier)), words_(word_count(carrier_.size()), 0) {}

Predicate Predicate::full(const Carrier& carrier) {
  Predicate p(carrier);
  std::fill(p.words_.begin(), p.words_.end(), ~std::uint64_t{0});
  if (!p.words_.empty()) p.words_.back() &= tail_mask(carrier.size());
  return p;
}

Predicate Predicate::of(const Carrier& carrier, std::initializer_list<std::string_view> atoms) {
  Predicate p(carrier);
  for (auto atom : atoms) p.insert(carrier.index_of(atom));
  return p;
}

Predicate Predicate::of(const Carrier& carrier, std::span<const std::string> atoms) {
  Predicate p(carrier);
  for (const auto& atom : atoms) p.insert(carrier.index_of(atom));
  return p;
}

Predicate Predicate::from_indices(const Carrier& carrier, std::span<const std::size_t> indices) {
  Predicate p(carrier);
  for (auto i : indices) p.insert(i);
  return p;
}

Predicate Predicate::from_mask(const Carrier& carrier, std::uint64_t mask) {
  if (carrier.size() > kWordBits) throw BoundExceeded("mask form needs at most 64 elements");
  Predicate p(carrier);
  if (!p.words_.empty()) p.words_[0] = mask & tail_mask(carrier.size());
  return p;
}

void Predicate::check_index(std::size_t index) const {
  if (index >= carrier_.size()) {
    throw InvalidInput("element index " + std::to_string(index) + " outside carrier of size " +
                       std::to_string(carrier_.size()));
  }
}

bool Predicate::contains(std::size_t index) const {
  check_index(index);
  return (words_[index / kWordBits] >> (index % kWordBits)) & 1U;
}

bool Predicate::contains(std::string_view atom) const { return contains(carrier_.index_of(atom)); }

void Predicate::insert(std::size_t index) {
  check_index(index);
  words_[index / kWordBits] |= std::uint64_t{1} << (index % kWordBits);
}

void Predicate::erase(std::size_t index) {
  check_index(index);
  words_[index / kWordBits] &= ~(std::uint64_t{1} << (index % kWordBits));
}

std::size_t Predicate::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Predicate::is_empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<std::size_t> Predicate::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
      out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
    }
  }
  return out;
}

std::vector<std::string> Predicate::names() const {
  std::vector<std::string> out;
  for (auto i : indices()) out.push_back(carrier_.name(i));
  return out;
}

std::vector<std::string> Predicate::sorted_names() const {
  auto out = names();
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t Predicate::mask() const {
  if (carrier_.size() > kWordBits) throw BoundExceeded("mask form needs at most 64 elements");
  return words_.empty() ? 0 : words_[0];
}

bool operator==(const Predicate& a, const Predicate& b) {
  return a.carrier_.same_as(b.carrier_) && a.words_ == b.words_;
}

void require_same_carrier(const Predicate& a, const Predicate& b) {
  if (!a.carrier().same_as(b.carrier())) throw InvalidInput("carrier mismatch");
}

void require_carrier(const Carrier& expected, const Predicate& p) {
  if (!expected.same_as(p.carrier())) throw InvalidInput("carrier mismatch");
}

bool leq(const Predicate& p, const Predicate& q) {
  require_same_carrier(p, q);
  for (std::size_t w = 0; w < p.words_.size(); ++w) {
    if ((p.words_[w] & ~q.words_[w]) != 0) return false;
  }
  return true;
}

Predicate complement(const Predicate& p) {
  Predicate out(p.carrier_);
  for (std::size_t w = 0; w < p.words_.size(); ++w) out.words_[w] = ~p.words_[w];
  if (!out.words_.empty()) out.words_.back() &= tail_mask(p.carrier_.size());
  return out;
}

Predicate union_of(const Predicate& p, const Predicate& q) {
  require_same_carrier(p, q);
  Predicate out(p.carrier_);
  for (std::size_t w = 0; w < p.words_.size(); ++w) out.words_[w] = p.words_[w] | q.words_[w];
  return out;
}

Predicate intersection(const Predicate& p, const Predicate& q) {
  require_same_carrier(p, q);
  Predicate out(p.carrier_);
  for (std::size_t w = 0; w < p.words_.size(); ++w) out.words_[w] = p.words_[w] & q.words_[w];
  return out;
}

std::string format_predicate(const Predicate& p) {
  if (p.is_empty()) return "∅";
  std::string out = "{";
  bool first = true;
  for (const auto& name : p.sorted_names()) {
    if (!first) out += ',';
    out += name;
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace coinduct
