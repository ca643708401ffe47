// Bounded brute-force model enumeration.
//
// Every preferential model over a signature with at most `max_worlds` worlds
// is addressed by a dense index, so the search kernels can scan the space in
// parallel and still report the same (lowest-index) witness as a serial scan.
// Worlds are packed into bitmasks; the hard cap keeps the space tractable.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dmt/formula.hpp"
#include "dmt/model.hpp"

namespace dmt {

inline constexpr std::size_t kDefaultWorldCap = 3;
// Beyond this the per-world masks and index arithmetic stop being sensible.
inline constexpr std::size_t kAbsoluteWorldCap = 5;

class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ModelSignature {
  std::vector<std::string> atoms;
  std::vector<std::string> modalities;
  std::size_t max_worlds = 1;
};

// Signature covering the atoms and modalities of the given formulas.
ModelSignature signature_of(const std::vector<Formula>& formulas, std::size_t max_worlds);

using Mask = std::uint32_t;

// A model over at most kAbsoluteWorldCap worlds, worlds 0..k-1.
struct CompactModel {
  std::size_t worlds = 0;
  std::vector<Mask> atom_true;                  // per atom: worlds where it holds
  std::vector<std::vector<Mask>> successors;    // per modality, per world
  std::vector<Mask> preferred_to;               // per world w: {v | v < w}

  Mask all() const { return worlds >= 32 ? ~Mask{0} : (Mask{1} << worlds) - 1; }
  Mask minimal(Mask set) const;
};

// All strict partial orders on k elements, as preferred_to vectors, in a
// fixed order. Generated from the irreflexive antisymmetric relations by
// filtering for transitivity.
const std::vector<std::vector<Mask>>& strict_partial_orders(std::size_t k);

class ModelSpace {
 public:
  // Throws OracleError when max_worlds is 0 or exceeds `cap`.
  explicit ModelSpace(ModelSignature sig, std::size_t cap = kDefaultWorldCap);

  const ModelSignature& signature() const noexcept { return sig_; }
  std::uint64_t size() const noexcept { return total_; }
  // Models with exactly k worlds.
  std::uint64_t count_with_worlds(std::size_t k) const;

  // Ordered by world count, then preference order, then relations, then
  // valuation (fastest varying).
  CompactModel compact(std::uint64_t index) const;
  PreferentialModel model(std::uint64_t index) const;

 private:
  struct Block {
    std::size_t worlds;
    std::uint64_t first;
    std::uint64_t valuations;
    std::uint64_t relations;
    std::uint64_t orders;
  };
  ModelSignature sig_;
  std::vector<Block> blocks_;
  std::uint64_t total_ = 0;
};

// The full bounded model stream for a signature, addressable by index.
inline ModelSpace enumerate_models(ModelSignature sig, std::size_t cap = kDefaultWorldCap) {
  return ModelSpace(std::move(sig), cap);
}

PreferentialModel to_preferential(const CompactModel& cm, const ModelSignature& sig);

// A formula flattened into a post-order program over the signature's atom
// and modality indices. Evaluation is pure and thread-safe.
class CompiledFormula {
 public:
  CompiledFormula(const Formula& f, const ModelSignature& sig);
  Mask extension(const CompactModel& m) const;

 private:
  struct Instr {
    Op op;
    int index;  // atom or modality index; -1 when not in the signature
    std::uint32_t lhs;
    std::uint32_t rhs;
  };
  std::uint32_t emit(const Formula& f, const ModelSignature& sig);
  std::vector<Instr> code_;
};

// Predicate over compact models: returns a witness world, or -1 for no hit.
using ModelProbe = std::function<int(const CompactModel&)>;

struct OracleHit {
  std::uint64_t index;
  std::size_t world;
};

namespace oracle {

// Lowest-index model for which the probe hits. Serial reference.
std::optional<OracleHit> first_hit_serial(const ModelSpace& space, const ModelProbe& probe);
// Same result as first_hit_serial, scanned with OpenMP in ordered chunks.
std::optional<OracleHit> first_hit(const ModelSpace& space, const ModelProbe& probe);

std::uint64_t count_hits_serial(const ModelSpace& space, const ModelProbe& probe);
std::uint64_t count_hits(const ModelSpace& space, const ModelProbe& probe);

// Index of the first model on which the two probes disagree (one hits, the
// other does not), if any.
std::optional<std::uint64_t> first_disagreement(const ModelSpace& space, const ModelProbe& a,
                                                const ModelProbe& b);

}  // namespace oracle

struct OracleWitness {
  PreferentialModel model;
  std::string world;
};

// First (model, world) within the bound where f holds; nullopt means only
// that no model exists within the bound.
std::optional<OracleWitness> brute_force_satisfiable(const Formula& f, const ModelSignature& sig,
                                                     std::size_t cap = kDefaultWorldCap);

}  // namespace dmt
