#include "dmt/oracle.hpp"

#include <array>
#include <bit>
#include <limits>
#include <mutex>

namespace dmt {

namespace {

constexpr std::uint64_t kMaxSpace = std::uint64_t{1} << 62;

std::uint64_t checked_pow2(std::size_t bits) {
  if (bits >= 62) throw OracleError("model space too large for the oracle");
  return std::uint64_t{1} << bits;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kMaxSpace / a) throw OracleError("model space too large for the oracle");
  return a * b;
}

std::vector<std::vector<Mask>> build_orders(std::size_t k) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) pairs.emplace_back(a, b);
  }
  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) combos *= 3;

  std::vector<std::vector<Mask>> out;
  for (std::uint64_t code = 0; code < combos; ++code) {
    // below[w] = {v | v < w}; each unordered pair is unrelated, a<b or b<a.
    std::vector<Mask> below(k, 0);
    std::uint64_t c = code;
    for (const auto& [a, b] : pairs) {
      const auto digit = c % 3;
      c /= 3;
      if (digit == 1) below[b] |= Mask{1} << a;
      if (digit == 2) below[a] |= Mask{1} << b;
    }
    bool transitive = true;
    for (std::size_t w = 0; w < k && transitive; ++w) {
      for (std::size_t v = 0; v < k; ++v) {
        // v < w and u < v imply u < w
        if ((below[w] >> v & 1) && (below[v] & ~below[w])) {
          transitive = false;
          break;
        }
      }
    }
    if (transitive) out.push_back(std::move(below));
  }
  return out;
}

}  // namespace

Mask CompactModel::minimal(Mask set) const {
  Mask out = 0;
  for (std::size_t w = 0; w < worlds; ++w) {
    if ((set >> w & 1) && !(preferred_to[w] & set)) out |= Mask{1} << w;
  }
  return out;
}

const std::vector<std::vector<Mask>>& strict_partial_orders(std::size_t k) {
  static std::array<std::vector<std::vector<Mask>>, kAbsoluteWorldCap + 1> cache;
  static std::array<std::once_flag, kAbsoluteWorldCap + 1> once;
  if (k == 0 || k > kAbsoluteWorldCap) throw OracleError("world count out of oracle range");
  std::call_once(once[k], [k] { cache[k] = build_orders(k); });
  return cache[k];
}

ModelSignature signature_of(const std::vector<Formula>& formulas, std::size_t max_worlds) {
  std::set<std::string> atoms, mods;
  for (const auto& f : formulas) {
    atoms.merge(atoms_of(f));
    mods.merge(modalities_of(f));
  }
  return {{atoms.begin(), atoms.end()}, {mods.begin(), mods.end()}, max_worlds};
}

ModelSpace::ModelSpace(ModelSignature sig, std::size_t cap) : sig_(std::move(sig)) {
  if (sig_.max_worlds == 0) throw OracleError("models need at least one world");
  if (sig_.max_worlds > cap || sig_.max_worlds > kAbsoluteWorldCap) {
    throw OracleError("oracle bound of " + std::to_string(sig_.max_worlds) +
                      " worlds exceeds the cap of " +
                      std::to_string(std::min(cap, kAbsoluteWorldCap)));
  }
  for (std::size_t k = 1; k <= sig_.max_worlds; ++k) {
    Block b{k, total_, checked_pow2(sig_.atoms.size() * k),
            checked_pow2(sig_.modalities.size() * k * k), strict_partial_orders(k).size()};
    const std::uint64_t n = checked_mul(checked_mul(b.valuations, b.relations), b.orders);
    if (total_ > kMaxSpace - n) throw OracleError("model space too large for the oracle");
    total_ += n;
    blocks_.push_back(b);
  }
}

std::uint64_t ModelSpace::count_with_worlds(std::size_t k) const {
  for (const auto& b : blocks_) {
    if (b.worlds == k) return b.valuations * b.relations * b.orders;
  }
  return 0;
}

CompactModel ModelSpace::compact(std::uint64_t index) const {
  if (index >= total_) throw OracleError("model index out of range");
  const Block* block = &blocks_.front();
  for (const auto& b : blocks_) {
    if (index >= b.first) block = &b;
  }
  const std::size_t k = block->worlds;
  std::uint64_t local = index - block->first;
  const std::uint64_t val = local % block->valuations;
  local /= block->valuations;
  const std::uint64_t rel = local % block->relations;
  const std::uint64_t ord = local / block->relations;

  CompactModel m;
  m.worlds = k;
  const Mask world_bits = (Mask{1} << k) - 1;
  m.atom_true.resize(sig_.atoms.size());
  for (std::size_t a = 0; a < sig_.atoms.size(); ++a) {
    m.atom_true[a] = static_cast<Mask>(val >> (a * k)) & world_bits;
  }
  m.successors.assign(sig_.modalities.size(), std::vector<Mask>(k, 0));
  for (std::size_t i = 0; i < sig_.modalities.size(); ++i) {
    for (std::size_t w = 0; w < k; ++w) {
      m.successors[i][w] = static_cast<Mask>(rel >> (i * k * k + w * k)) & world_bits;
    }
  }
  m.preferred_to = strict_partial_orders(k)[ord];
  return m;
}

PreferentialModel ModelSpace::model(std::uint64_t index) const {
  return to_preferential(compact(index), sig_);
}

PreferentialModel to_preferential(const CompactModel& cm, const ModelSignature& sig) {
  RawModel raw;
  raw.atoms = sig.atoms;
  raw.modalities = sig.modalities;
  for (std::size_t w = 0; w < cm.worlds; ++w) raw.worlds.push_back("w" + std::to_string(w));
  for (std::size_t w = 0; w < cm.worlds; ++w) {
    auto& vs = raw.valuation[raw.worlds[w]];
    for (std::size_t a = 0; a < sig.atoms.size(); ++a) {
      if (cm.atom_true[a] >> w & 1) vs.push_back(sig.atoms[a]);
    }
  }
  for (std::size_t i = 0; i < sig.modalities.size(); ++i) {
    auto& edges = raw.relations[sig.modalities[i]];
    for (std::size_t w = 0; w < cm.worlds; ++w) {
      for (std::size_t v = 0; v < cm.worlds; ++v) {
        if (cm.successors[i][w] >> v & 1) edges.emplace_back(raw.worlds[w], raw.worlds[v]);
      }
    }
  }
  for (std::size_t w = 0; w < cm.worlds; ++w) {
    for (std::size_t v = 0; v < cm.worlds; ++v) {
      if (cm.preferred_to[w] >> v & 1) raw.preference.emplace_back(raw.worlds[v], raw.worlds[w]);
    }
  }
  return PreferentialModel::validate(raw);
}

// ---------------------------------------------------------------------------

CompiledFormula::CompiledFormula(const Formula& f, const ModelSignature& sig) { emit(f, sig); }

std::uint32_t CompiledFormula::emit(const Formula& f, const ModelSignature& sig) {
  auto index_in = [](const std::vector<std::string>& names, const std::string& n) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == n) return static_cast<int>(i);
    }
    return -1;
  };
  Instr ins{f.op(), -1, 0, 0};
  if (f.op() == Op::Atom) ins.index = index_in(sig.atoms, f.name());
  if (f.is_modal()) ins.index = index_in(sig.modalities, f.name());
  if (f.arity() >= 1) ins.lhs = emit(f.lhs(), sig);
  if (f.arity() == 2) ins.rhs = emit(f.rhs(), sig);
  code_.push_back(ins);
  return static_cast<std::uint32_t>(code_.size() - 1);
}

Mask CompiledFormula::extension(const CompactModel& m) const {
  // Small fixed buffer covers the formulas the oracle is used with.
  std::array<Mask, 64> small;
  std::vector<Mask> large;
  Mask* ext = small.data();
  if (code_.size() > small.size()) {
    large.resize(code_.size());
    ext = large.data();
  }
  const Mask all = m.all();
  for (std::size_t pc = 0; pc < code_.size(); ++pc) {
    const Instr& in = code_[pc];
    Mask r = 0;
    switch (in.op) {
      case Op::Atom: r = in.index < 0 ? 0 : m.atom_true[in.index]; break;
      case Op::Bottom: r = 0; break;
      case Op::Top: r = all; break;
      case Op::Not: r = ~ext[in.lhs] & all; break;
      case Op::And: r = ext[in.lhs] & ext[in.rhs]; break;
      case Op::Or: r = ext[in.lhs] | ext[in.rhs]; break;
      case Op::Implies: r = (~ext[in.lhs] | ext[in.rhs]) & all; break;
      case Op::Iff: r = ~(ext[in.lhs] ^ ext[in.rhs]) & all; break;
      case Op::Box:
      case Op::Dia:
      case Op::DefBox:
      case Op::DefDia: {
        const Mask a = ext[in.lhs];
        for (std::size_t w = 0; w < m.worlds; ++w) {
          Mask succ = in.index < 0 ? 0 : m.successors[in.index][w];
          if (in.op == Op::DefBox || in.op == Op::DefDia) succ = m.minimal(succ);
          const bool universal = in.op == Op::Box || in.op == Op::DefBox;
          const bool hit = universal ? (succ & ~a) == 0 : (succ & a) != 0;
          if (hit) r |= Mask{1} << w;
        }
        break;
      }
    }
    ext[pc] = r;
  }
  return ext[code_.size() - 1];
}

std::optional<OracleWitness> brute_force_satisfiable(const Formula& f, const ModelSignature& sig,
                                                     std::size_t cap) {
  const ModelSpace space(sig, cap);
  const CompiledFormula compiled(f, sig);
  auto hit = oracle::first_hit(space, [&](const CompactModel& m) {
    const Mask ext = compiled.extension(m);
    return ext == 0 ? -1 : std::countr_zero(ext);
  });
  if (!hit) return std::nullopt;
  PreferentialModel model = space.model(hit->index);
  std::string world = model.world_name(hit->world);
  return OracleWitness{std::move(model), std::move(world)};
}

}  // namespace dmt
