// Test-only generators: random formulas and models, and the exhaustive
// corpus of small core formulas.

#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "dmt/formula.hpp"
#include "dmt/model.hpp"
#include "dmt/model_io.hpp"

namespace dmt::testing {

inline std::string fixture(const std::string& name) { return std::string(DMT_FIXTURE_DIR) + "/" + name; }

inline PreferentialModel plant_model() { return load_model(fixture("figure3.json")); }

struct FormulaGen {
  std::vector<std::string> atoms{"p", "q"};
  std::vector<std::string> modalities{"a", "b"};
  bool classical_only = false;
  bool core_only = false;
};

// A random formula with at most `budget` nodes.
inline Formula random_formula(std::mt19937_64& rng, std::size_t budget, const FormulaGen& g = {}) {
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  if (budget <= 1 || pick(4) == 0) {
    switch (pick(g.core_only ? 5 : 6)) {
      case 0: return Formula::bottom();
      case 5: return Formula::top();
      default: return Formula::atom(g.atoms[pick(g.atoms.size())]);
    }
  }
  std::vector<Op> ops{Op::Not, Op::And, Op::Box};
  if (!g.core_only) {
    ops.insert(ops.end(), {Op::Or, Op::Implies, Op::Iff, Op::Dia});
    if (!g.classical_only) ops.push_back(Op::DefDia);
  }
  if (!g.classical_only) ops.push_back(Op::DefBox);
  const Op op = ops[pick(ops.size())];
  const std::string& mod = g.modalities[pick(g.modalities.size())];
  switch (op) {
    case Op::Not: return Formula::negation(random_formula(rng, budget - 1, g));
    case Op::Box: return Formula::box(mod, random_formula(rng, budget - 1, g));
    case Op::Dia: return Formula::dia(mod, random_formula(rng, budget - 1, g));
    case Op::DefBox: return Formula::def_box(mod, random_formula(rng, budget - 1, g));
    case Op::DefDia: return Formula::def_dia(mod, random_formula(rng, budget - 1, g));
    default: break;
  }
  const std::size_t left = 1 + pick(std::max<std::size_t>(1, budget - 2));
  const std::size_t right = std::max<std::size_t>(1, budget - 1 - left);
  Formula a = random_formula(rng, left, g);
  Formula b = random_formula(rng, right, g);
  switch (op) {
    case Op::And: return Formula::conjunction(a, b);
    case Op::Or: return Formula::disjunction(a, b);
    case Op::Implies: return Formula::implication(a, b);
    default: return Formula::equivalence(a, b);
  }
}

// Uniformly random model: valuation, relations, and a random strict partial
// order obtained by closing a random acyclic relation over a random ranking.
inline PreferentialModel random_model(std::mt19937_64& rng, std::size_t worlds,
                                      const std::vector<std::string>& atoms,
                                      const std::vector<std::string>& modalities) {
  std::bernoulli_distribution coin(0.5);
  std::bernoulli_distribution sparse(0.3);
  RawModel raw;
  raw.atoms = atoms;
  raw.modalities = modalities;
  for (std::size_t w = 0; w < worlds; ++w) raw.worlds.push_back("w" + std::to_string(w));
  for (const auto& w : raw.worlds) {
    auto& v = raw.valuation[w];
    for (const auto& a : atoms) {
      if (coin(rng)) v.push_back(a);
    }
  }
  for (const auto& m : modalities) {
    auto& edges = raw.relations[m];
    for (const auto& a : raw.worlds) {
      for (const auto& b : raw.worlds) {
        if (coin(rng)) edges.emplace_back(a, b);
      }
    }
  }
  std::vector<std::size_t> rank(worlds);
  for (std::size_t i = 0; i < worlds; ++i) rank[i] = i;
  std::shuffle(rank.begin(), rank.end(), rng);
  for (std::size_t i = 0; i < worlds; ++i) {
    for (std::size_t j = i + 1; j < worlds; ++j) {
      if (sparse(rng)) raw.preference.emplace_back(raw.worlds[rank[i]], raw.worlds[rank[j]]);
    }
  }
  return PreferentialModel::validate(raw);
}

// Same model with a freshly drawn preference order.
inline PreferentialModel with_random_order(std::mt19937_64& rng, const PreferentialModel& m) {
  RawModel raw = m.to_raw();
  raw.preference.clear();
  std::bernoulli_distribution sparse(0.4);
  std::vector<std::string> order = raw.worlds;
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (sparse(rng)) raw.preference.emplace_back(order[i], order[j]);
    }
  }
  return PreferentialModel::validate(raw);
}

// Every core formula over one atom and one modality with exactly `size`
// nodes, built bottom-up.
inline std::vector<std::vector<Formula>> core_formulas_by_size(std::size_t max_size,
                                                               const std::string& atom = "p",
                                                               const std::string& mod = "a") {
  std::vector<std::vector<Formula>> by(max_size + 1);
  if (max_size >= 1) by[1] = {Formula::atom(atom), Formula::bottom()};
  for (std::size_t s = 2; s <= max_size; ++s) {
    for (const auto& f : by[s - 1]) {
      by[s].push_back(Formula::negation(f));
      by[s].push_back(Formula::box(mod, f));
      by[s].push_back(Formula::def_box(mod, f));
    }
    for (std::size_t l = 1; l + 1 < s; ++l) {
      for (const auto& a : by[l]) {
        for (const auto& b : by[s - 1 - l]) by[s].push_back(Formula::conjunction(a, b));
      }
    }
  }
  return by;
}

inline std::vector<Formula> core_corpus(std::size_t max_size) {
  std::vector<Formula> out;
  for (const auto& layer : core_formulas_by_size(max_size)) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

}  // namespace dmt::testing
