#include "dmt/model.hpp"

#include <algorithm>

namespace dmt {

namespace {

const std::vector<std::size_t> kNoSuccessors;

template <typename Container>
void reject_duplicates(const Container& names, const char* what) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) throw ModelError(std::string("duplicate ") + what + " '" + n + "'");
  }
}

}  // namespace

PreferentialModel PreferentialModel::validate(const RawModel& raw) {
  if (raw.worlds.empty()) throw ModelError("model has no worlds");
  reject_duplicates(raw.worlds, "world");
  reject_duplicates(raw.atoms, "atom");
  reject_duplicates(raw.modalities, "modality");

  PreferentialModel m;
  m.worlds_ = raw.worlds;
  m.atoms_ = raw.atoms;
  m.modalities_ = raw.modalities;
  for (std::size_t i = 0; i < m.worlds_.size(); ++i) {
    if (m.worlds_[i].empty()) throw ModelError("world names must be non-empty");
    m.world_index_.emplace(m.worlds_[i], i);
  }
  const std::size_t n = m.worlds_.size();

  auto index_of = [&](const std::string& w, const char* where) {
    auto it = m.world_index_.find(w);
    if (it == m.world_index_.end()) {
      throw ModelError(std::string("unknown world '") + w + "' in " + where);
    }
    return it->second;
  };

  const std::set<std::string> atom_set(raw.atoms.begin(), raw.atoms.end());
  m.valuation_.assign(n, {});
  for (const auto& [world, true_atoms] : raw.valuation) {
    const std::size_t w = index_of(world, "valuation");
    for (const auto& a : true_atoms) {
      if (!atom_set.contains(a)) throw ModelError("undeclared atom '" + a + "' in valuation");
      m.valuation_[w].insert(a);
    }
  }

  for (const auto& mod : m.modalities_) {
    m.successors_.emplace(mod, std::vector<std::vector<std::size_t>>(n));
  }
  for (const auto& [mod, edges] : raw.relations) {
    auto it = m.successors_.find(mod);
    if (it == m.successors_.end()) throw ModelError("undeclared modality '" + mod + "' in relations");
    for (const auto& [from, to] : edges) {
      const std::size_t a = index_of(from, "relations");
      const std::size_t b = index_of(to, "relations");
      auto& succ = it->second[a];
      if (std::find(succ.begin(), succ.end(), b) == succ.end()) succ.push_back(b);
    }
  }
  for (auto& [mod, table] : m.successors_) {
    for (auto& succ : table) std::sort(succ.begin(), succ.end());
  }

  m.order_.assign(n, std::vector<bool>(n, false));
  for (const auto& [more, less] : raw.preference) {
    m.order_[index_of(more, "preference")][index_of(less, "preference")] = true;
  }
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!m.order_[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (m.order_[k][j]) m.order_[i][j] = true;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (m.order_[i][i]) {
      throw ModelError("preference has a cycle through world '" + m.worlds_[i] + "'");
    }
  }
  return m;
}

std::optional<std::size_t> PreferentialModel::world_index(std::string_view name) const {
  auto it = world_index_.find(name);
  if (it == world_index_.end()) return std::nullopt;
  return it->second;
}

const std::vector<std::size_t>& PreferentialModel::successors(std::string_view modality,
                                                              std::size_t w) const {
  auto it = successors_.find(modality);
  if (it == successors_.end()) return kNoSuccessors;
  return it->second.at(w);
}

bool PreferentialModel::valuation(std::size_t w, std::string_view atom) const {
  return valuation_.at(w).contains(atom);
}

std::vector<std::pair<std::size_t, std::size_t>> PreferentialModel::preference_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < order_.size(); ++a) {
    for (std::size_t b = 0; b < order_.size(); ++b) {
      if (order_[a][b]) out.emplace_back(a, b);
    }
  }
  return out;
}

RawModel PreferentialModel::to_raw() const {
  RawModel raw;
  raw.atoms = atoms_;
  raw.modalities = modalities_;
  raw.worlds = worlds_;
  for (std::size_t w = 0; w < worlds_.size(); ++w) {
    auto& vs = raw.valuation[worlds_[w]];
    for (const auto& a : atoms_) {
      if (valuation_[w].contains(a)) vs.push_back(a);
    }
  }
  for (const auto& mod : modalities_) {
    auto& edges = raw.relations[mod];
    const auto& table = successors_.find(mod)->second;
    for (std::size_t w = 0; w < table.size(); ++w) {
      for (std::size_t v : table[w]) edges.emplace_back(worlds_[w], worlds_[v]);
    }
  }
  for (const auto& [a, b] : preference_pairs()) raw.preference.emplace_back(worlds_[a], worlds_[b]);
  return raw;
}

WorldSet min_preferred(const PreferentialModel& m, const WorldSet& ws) {
  WorldSet out = ws;
  const std::size_t n = m.world_count();
  for (std::size_t w = 0; w < n; ++w) {
    if (!ws[w]) continue;
    for (std::size_t v = 0; v < n; ++v) {
      if (ws[v] && m.prefers(v, w)) {
        out[w] = false;
        break;
      }
    }
  }
  return out;
}

namespace {

WorldSet minimal_successors(const PreferentialModel& m, std::string_view mod, std::size_t w) {
  WorldSet succ = m.empty_set();
  for (std::size_t v : m.successors(mod, w)) succ[v] = true;
  return min_preferred(m, succ);
}

}  // namespace

WorldSet extension(const PreferentialModel& m, const Formula& f) {
  const std::size_t n = m.world_count();
  WorldSet out = m.empty_set();
  switch (f.op()) {
    case Op::Atom:
      for (std::size_t w = 0; w < n; ++w) out[w] = m.valuation(w, f.name());
      return out;
    case Op::Bottom:
      return out;
    case Op::Top:
      return m.full_set();
    case Op::Not: {
      out = extension(m, f.operand());
      out.flip();
      return out;
    }
    case Op::And:
    case Op::Or:
    case Op::Implies:
    case Op::Iff: {
      const WorldSet a = extension(m, f.lhs());
      const WorldSet b = extension(m, f.rhs());
      for (std::size_t w = 0; w < n; ++w) {
        switch (f.op()) {
          case Op::And: out[w] = a[w] && b[w]; break;
          case Op::Or: out[w] = a[w] || b[w]; break;
          case Op::Implies: out[w] = !a[w] || b[w]; break;
          default: out[w] = a[w] == b[w]; break;
        }
      }
      return out;
    }
    case Op::Box:
    case Op::Dia: {
      const WorldSet a = extension(m, f.operand());
      const bool universal = f.op() == Op::Box;
      for (std::size_t w = 0; w < n; ++w) {
        const auto& succ = m.successors(f.name(), w);
        out[w] = universal ? std::all_of(succ.begin(), succ.end(), [&](std::size_t v) { return a[v]; })
                           : std::any_of(succ.begin(), succ.end(), [&](std::size_t v) { return a[v]; });
      }
      return out;
    }
    case Op::DefBox:
    case Op::DefDia: {
      const WorldSet a = extension(m, f.operand());
      const bool universal = f.op() == Op::DefBox;
      for (std::size_t w = 0; w < n; ++w) {
        const WorldSet best = minimal_successors(m, f.name(), w);
        bool all = true, some = false;
        for (std::size_t v = 0; v < n; ++v) {
          if (!best[v]) continue;
          all = all && a[v];
          some = some || a[v];
        }
        out[w] = universal ? all : some;
      }
      return out;
    }
  }
  return out;
}

bool holds_at(const PreferentialModel& m, std::size_t world, const Formula& f) {
  if (world >= m.world_count()) throw ModelError("world index out of range");
  return extension(m, f)[world];
}

bool holds_at(const PreferentialModel& m, std::string_view world, const Formula& f) {
  auto w = m.world_index(world);
  if (!w) throw ModelError("unknown world '" + std::string(world) + "'");
  return holds_at(m, *w, f);
}

bool globally_true(const PreferentialModel& m, const Formula& f) {
  const WorldSet ext = extension(m, f);
  return std::all_of(ext.begin(), ext.end(), [](bool b) { return b; });
}

bool holds_conditional(const PreferentialModel& m, const Conditional& c) {
  const WorldSet best = min_preferred(m, extension(m, c.antecedent));
  const WorldSet cons = extension(m, c.consequent);
  for (std::size_t w = 0; w < m.world_count(); ++w) {
    if (best[w] && !cons[w]) return false;
  }
  return true;
}

bool satisfies_kb_globally(const PreferentialModel& m, const std::vector<Formula>& kb) {
  return std::all_of(kb.begin(), kb.end(), [&](const Formula& f) { return globally_true(m, f); });
}

std::set<std::string> world_names(const PreferentialModel& m, const WorldSet& ws) {
  std::set<std::string> out;
  for (std::size_t w = 0; w < ws.size(); ++w) {
    if (ws[w]) out.insert(m.world_name(w));
  }
  return out;
}

WorldSet world_set(const PreferentialModel& m, const std::set<std::string>& names) {
  WorldSet out = m.empty_set();
  for (const auto& n : names) {
    auto w = m.world_index(n);
    if (!w) throw ModelError("unknown world '" + n + "'");
    out[*w] = true;
  }
  return out;
}

}  // namespace dmt
