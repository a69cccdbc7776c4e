#include "prefl/model_set.hpp"

#include <bit>
#include <stdexcept>

#include "prefl/error.hpp"

namespace prefl {

namespace {

std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace

ModelSet::ModelSet(std::size_t universe_size)
    : size_(universe_size), words_(word_count(universe_size), 0) {}

ModelSet::ModelSet(std::size_t universe_size, std::initializer_list<std::uint32_t> indices)
    : ModelSet(universe_size) {
  for (auto i : indices) insert(Model{i});
}

ModelSet ModelSet::full(std::size_t universe_size) {
  ModelSet s(universe_size);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.clear_tail();
  return s;
}

ModelSet ModelSet::from_indices(std::size_t universe_size,
                                const std::vector<std::uint32_t>& indices) {
  ModelSet s(universe_size);
  for (auto i : indices) s.insert(Model{i});
  return s;
}

bool ModelSet::contains(Model m) const {
  if (m.index >= size_) return false;
  return (words_[m.index / 64] >> (m.index % 64)) & 1U;
}

void ModelSet::insert(Model m) {
  if (m.index >= size_) {
    throw std::out_of_range("model " + std::to_string(m.index) + " outside universe of size " +
                            std::to_string(size_));
  }
  words_[m.index / 64] |= std::uint64_t{1} << (m.index % 64);
}

void ModelSet::erase(Model m) {
  if (m.index >= size_) return;
  words_[m.index / 64] &= ~(std::uint64_t{1} << (m.index % 64));
}

std::size_t ModelSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ModelSet::empty() const {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::optional<Model> ModelSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return Model{static_cast<std::uint32_t>(w * 64 + std::countr_zero(words_[w]))};
    }
  }
  return std::nullopt;
}

std::vector<Model> ModelSet::elements() const {
  std::vector<Model> out;
  out.reserve(count());
  for_each([&](Model m) { out.push_back(m); });
  return out;
}

bool ModelSet::is_subset_of(const ModelSet& other) const {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

ModelSet ModelSet::complement() const {
  ModelSet s = *this;
  for (auto& w : s.words_) w = ~w;
  s.clear_tail();
  return s;
}

ModelSet& ModelSet::operator&=(const ModelSet& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

ModelSet& ModelSet::operator|=(const ModelSet& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

ModelSet& ModelSet::operator-=(const ModelSet& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

std::string ModelSet::to_string() const {
  std::string s = "{";
  bool first_elem = true;
  for_each([&](Model m) {
    if (!first_elem) s += ',';
    s += std::to_string(m.index);
    first_elem = false;
  });
  s += '}';
  return s;
}

std::strong_ordering operator<=>(const ModelSet& a, const ModelSet& b) {
  const std::size_t n = std::max(a.words_.size(), b.words_.size());
  for (std::size_t i = n; i-- > 0;) {
    const std::uint64_t wa = i < a.words_.size() ? a.words_[i] : 0;
    const std::uint64_t wb = i < b.words_.size() ? b.words_[i] : 0;
    if (wa != wb) return wa <=> wb;
  }
  return a.size_ <=> b.size_;
}

void ModelSet::check_same_universe(const ModelSet& other) const {
  if (size_ != other.size_) {
    throw std::invalid_argument("model sets over different universes (" + std::to_string(size_) +
                                " vs " + std::to_string(other.size_) + ")");
  }
}

void ModelSet::clear_tail() {
  if (size_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }
}

std::vector<ModelSet> subsets_of(const ModelSet& universe) {
  const auto members = universe.elements();
  if (members.size() > 20) {
    throw CapacityError("cannot enumerate subsets of a " + std::to_string(members.size()) +
                        "-model universe");
  }
  const std::size_t total = std::size_t{1} << members.size();
  std::vector<ModelSet> out;
  out.reserve(total);
  for (std::size_t mask = 0; mask < total; ++mask) {
    ModelSet s(universe.universe_size());
    for (std::size_t j = 0; j < members.size(); ++j) {
      if ((mask >> j) & 1U) s.insert(members[j]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace prefl
