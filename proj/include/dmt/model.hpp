// Preferential Kripke models and satisfaction.
//
// A preferential model is a Kripke model <W, R, V> together with a strict
// partial order on W. A pair (a, b) in the order means a is strictly more
// preferred (more normal) than b. Defeasible modalities quantify over the
// preference-minimal elements of a world's successor set.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dmt/formula.hpp"

namespace dmt {

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unvalidated model data as read from a file or produced by a builder.
struct RawModel {
  std::vector<std::string> atoms;
  std::vector<std::string> modalities;
  std::vector<std::string> worlds;
  std::map<std::string, std::vector<std::string>> valuation;
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> relations;
  std::vector<std::pair<std::string, std::string>> preference;  // (more, less)
};

// Membership mask indexed by world index.
using WorldSet = std::vector<bool>;

class PreferentialModel {
 public:
  // Checks references, closes the preference transitively and rejects cycles.
  static PreferentialModel validate(const RawModel& raw);

  std::size_t world_count() const noexcept { return worlds_.size(); }
  const std::string& world_name(std::size_t w) const { return worlds_.at(w); }
  std::optional<std::size_t> world_index(std::string_view name) const;
  const std::vector<std::string>& worlds() const noexcept { return worlds_; }
  const std::vector<std::string>& atoms() const noexcept { return atoms_; }
  const std::vector<std::string>& modalities() const noexcept { return modalities_; }

  // a is strictly preferred to b.
  bool prefers(std::size_t a, std::size_t b) const { return order_[a][b]; }
  // Successors of w under modality m; empty for undeclared modalities.
  const std::vector<std::size_t>& successors(std::string_view modality, std::size_t w) const;
  bool valuation(std::size_t w, std::string_view atom) const;

  // Preference pairs in closed form; (a, b) means a is preferred to b.
  std::vector<std::pair<std::size_t, std::size_t>> preference_pairs() const;

  // Round-trips through validate(); the preference is emitted closed.
  RawModel to_raw() const;

  WorldSet empty_set() const { return WorldSet(worlds_.size(), false); }
  WorldSet full_set() const { return WorldSet(worlds_.size(), true); }

 private:
  std::vector<std::string> worlds_;
  std::map<std::string, std::size_t, std::less<>> world_index_;
  std::vector<std::string> atoms_;
  std::vector<std::string> modalities_;
  std::map<std::string, std::vector<std::vector<std::size_t>>, std::less<>> successors_;
  std::vector<std::set<std::string, std::less<>>> valuation_;
  std::vector<std::vector<bool>> order_;
};

// The preference-minimal members of ws.
WorldSet min_preferred(const PreferentialModel& m, const WorldSet& ws);

// The set of worlds satisfying f.
WorldSet extension(const PreferentialModel& m, const Formula& f);

// Throws ModelError for an unknown world.
bool holds_at(const PreferentialModel& m, std::string_view world, const Formula& f);
bool holds_at(const PreferentialModel& m, std::size_t world, const Formula& f);

bool globally_true(const PreferentialModel& m, const Formula& f);

// Every preference-minimal antecedent world satisfies the consequent.
bool holds_conditional(const PreferentialModel& m, const Conditional& c);

bool satisfies_kb_globally(const PreferentialModel& m, const std::vector<Formula>& kb);

std::set<std::string> world_names(const PreferentialModel& m, const WorldSet& ws);
WorldSet world_set(const PreferentialModel& m, const std::set<std::string>& names);

}  // namespace dmt
