#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "prefl/alphabet.hpp"

namespace prefl {

/// A set of models, stored as a bit set over the model indices
/// [0, universe_size). Sets combined by the binary operators must share the
/// same universe size.
class ModelSet {
 public:
  ModelSet() = default;
  explicit ModelSet(std::size_t universe_size);
  ModelSet(std::size_t universe_size, std::initializer_list<std::uint32_t> indices);

  static ModelSet full(std::size_t universe_size);
  static ModelSet from_indices(std::size_t universe_size,
                               const std::vector<std::uint32_t>& indices);

  std::size_t universe_size() const { return size_; }
  bool contains(Model m) const;
  void insert(Model m);
  void erase(Model m);

  std::size_t count() const;
  bool empty() const;
  std::optional<Model> first() const;
  std::vector<Model> elements() const;

  bool is_subset_of(const ModelSet& other) const;
  ModelSet complement() const;

  ModelSet& operator&=(const ModelSet& other);
  ModelSet& operator|=(const ModelSet& other);
  ModelSet& operator-=(const ModelSet& other);
  friend ModelSet operator&(ModelSet a, const ModelSet& b) { return a &= b; }
  friend ModelSet operator|(ModelSet a, const ModelSet& b) { return a |= b; }
  friend ModelSet operator-(ModelSet a, const ModelSet& b) { return a -= b; }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        fn(Model{static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(b))});
        bits &= bits - 1;
      }
    }
  }

  /// "{0,3,5}" with ascending indices.
  std::string to_string() const;

  friend bool operator==(const ModelSet&, const ModelSet&) = default;
  /// Orders by the numeric value of the bit set, then by universe size.
  friend std::strong_ordering operator<=>(const ModelSet& a, const ModelSet& b);

 private:
  void check_same_universe(const ModelSet& other) const;
  void clear_tail();

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// All subsets of `universe`, ascending by bit-set value. Throws
/// CapacityError for universes of more than 20 models.
std::vector<ModelSet> subsets_of(const ModelSet& universe);

}  // namespace prefl
