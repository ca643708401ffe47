// High-level queries: validity, countermodels and global entailment from a
// finite knowledge base.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dmt/formula.hpp"
#include "dmt/model.hpp"
#include "dmt/oracle.hpp"
#include "dmt/tableau.hpp"

namespace dmt {

struct KnowledgeBase {
  std::vector<Formula> formulas;
};

// One formula per line; blank lines and `#` comments are ignored. Parse
// errors are reported with the line of the KB file.
KnowledgeBase parse_kb(std::string_view text);
KnowledgeBase load_kb(const std::string& path);

struct Countermodel {
  PreferentialModel model;
  std::string world;
};

struct ValidityResult {
  bool valid = false;
  std::optional<Countermodel> countermodel;  // set when !valid
  tableau::Verdict verdict;                  // the verdict for the negation
};

ValidityResult is_valid(const Formula& f, const tableau::Options& options = {});

// A verified model and world falsifying f, if one exists.
std::optional<Countermodel> countermodel(const Formula& f, const tableau::Options& options = {});

struct EntailmentVerdict {
  enum class Kind { Entailed, NotEntailed, Unknown };
  Kind kind = Kind::Unknown;
  std::size_t depth = 0;                     // proof depth, or last depth tried
  std::optional<Countermodel> countermodel;  // NotEntailed only
  bool from_oracle = false;                  // countermodel found by bounded search
};

struct EntailmentOptions {
  tableau::Options tableau;
  // Upper bound on models scanned by the bounded fallback search; the world
  // bound is lowered until the space fits.
  std::uint64_t oracle_budget = 2'000'000;
};

inline std::size_t default_max_depth(const Formula& f) { return modal_depth(f) + 2; }

// C_0 is the conjunction of the KB; C_{j+1} = C_j & [i]C_j for every
// relevant modality i.
Formula box_closure(const KnowledgeBase& kb, const std::vector<std::string>& modalities,
                    std::size_t depth);

// Iterative deepening over the box closure, from modal_depth(f) up to
// max_depth. Entailed when C_d & ~f closes; NotEntailed only with a
// countermodel that satisfies the KB globally and falsifies f somewhere.
EntailmentVerdict global_entails(const KnowledgeBase& kb, const Formula& f, std::size_t max_depth,
                                 const EntailmentOptions& options = {});

// ~a |~ false for each a in the KB, in order.
std::vector<Conditional> kb_to_conditionals(const KnowledgeBase& kb);

}  // namespace dmt
