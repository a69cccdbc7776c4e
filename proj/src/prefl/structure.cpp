#include "prefl/structure.hpp"

#include <algorithm>
#include <stdexcept>

#include "prefl/semantics.hpp"

namespace prefl {

std::string to_string(const Copy& c) {
  return std::to_string(c.model) + ":" + std::to_string(c.tag);
}

PreferentialStructure::PreferentialStructure(std::size_t model_count, std::vector<Copy> copies,
                                             const std::vector<Preference>& prefers)
    : model_count_(model_count), copies_(std::move(copies)) {
  std::sort(copies_.begin(), copies_.end());
  if (auto dup = std::adjacent_find(copies_.begin(), copies_.end()); dup != copies_.end()) {
    throw std::invalid_argument("duplicate copy " + to_string(*dup));
  }
  for (const auto& c : copies_) {
    if (c.model >= model_count_) {
      throw std::invalid_argument("copy " + to_string(c) + " refers to a model outside [0, " +
                                  std::to_string(model_count_) + ")");
    }
  }
  auto index_of = [&](const Copy& c) {
    auto it = std::lower_bound(copies_.begin(), copies_.end(), c);
    if (it == copies_.end() || *it != c) {
      throw std::invalid_argument("preference mentions undeclared copy " + to_string(c));
    }
    return static_cast<std::uint32_t>(it - copies_.begin());
  };
  killers_.resize(copies_.size());
  for (const auto& p : prefers) {
    if (p.better == p.worse) {
      throw std::invalid_argument("reflexive preference on copy " + to_string(p.better));
    }
    killers_[index_of(p.worse)].push_back(index_of(p.better));
  }
  for (auto& k : killers_) {
    std::sort(k.begin(), k.end());
    k.erase(std::unique(k.begin(), k.end()), k.end());
    edge_count_ += k.size();
  }
}

PreferentialStructure PreferentialStructure::from_order(
    std::size_t model_count, const std::function<bool(Model, Model)>& precedes) {
  PreferentialStructure s;
  s.model_count_ = model_count;
  s.copies_.reserve(model_count);
  for (std::uint32_t m = 0; m < model_count; ++m) s.copies_.push_back(Copy{m, 0});
  s.killers_.resize(model_count);
  for (std::uint32_t worse = 0; worse < model_count; ++worse) {
    for (std::uint32_t better = 0; better < model_count; ++better) {
      if (better != worse && precedes(Model{better}, Model{worse})) {
        s.killers_[worse].push_back(better);
      }
    }
    s.edge_count_ += s.killers_[worse].size();
  }
  return s;
}

std::vector<Preference> PreferentialStructure::prefers() const {
  std::vector<Preference> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < copies_.size(); ++i) {
    for (auto k : killers_[i]) out.push_back(Preference{copies_[k], copies_[i]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t PreferentialStructure::copies_of(std::uint32_t model) const {
  auto lo = std::lower_bound(copies_.begin(), copies_.end(), Copy{model, 0});
  auto hi = std::lower_bound(copies_.begin(), copies_.end(), Copy{model + 1, 0});
  return static_cast<std::size_t>(hi - lo);
}

bool operator==(const PreferentialStructure& a, const PreferentialStructure& b) {
  return a.model_count_ == b.model_count_ && a.copies_ == b.copies_ && a.killers_ == b.killers_;
}

ModelSet mu_of_structure(const PreferentialStructure& s, const ModelSet& x) {
  if (x.universe_size() != s.model_count()) {
    throw std::invalid_argument("model set universe (" + std::to_string(x.universe_size()) +
                                ") does not match structure (" +
                                std::to_string(s.model_count()) + ")");
  }
  ModelSet result(x.universe_size());
  const auto& copies = s.copies();
  for (std::size_t i = 0; i < copies.size(); ++i) {
    const Model m{copies[i].model};
    if (!x.contains(m) || result.contains(m)) continue;
    const auto& killers = s.killers_of(i);
    const bool killed = std::any_of(killers.begin(), killers.end(), [&](std::uint32_t k) {
      return x.contains(Model{copies[k].model});
    });
    if (!killed) result.insert(m);
  }
  return result;
}

bool pref_entails(const PreferentialStructure& s, const Theory& t, const Formula& f,
                  const Alphabet& alphabet) {
  return mu_of_structure(s, models_of(t, alphabet)).is_subset_of(models_of(f, alphabet));
}

ModelSet minimal_under(const ModelSet& x, const std::function<bool(Model, Model)>& precedes) {
  ModelSet result(x.universe_size());
  const auto members = x.elements();
  for (const Model m : members) {
    const bool dominated = std::any_of(members.begin(), members.end(), [&](Model other) {
      return other != m && precedes(other, m);
    });
    if (!dominated) result.insert(m);
  }
  return result;
}

}  // namespace prefl
