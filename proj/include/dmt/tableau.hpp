// Labeled tableau calculus for K with defeasible modalities.
//
// A branch holds labeled formulas n :: a, a skeleton of labeled edges per
// modality, a preference relation on labels and explicit assertions that a
// label is preference-minimal among the i-successors of its parent. Rules:
//
//   (bot)     n::a, n::~a                  =>  n::false
//   (not)     n::~~a                       =>  n::a
//   (and)     n::a&b                       =>  n::a, n::b
//   (or)      n::~(a&b)                    =>  n::~a  |  n::~b
//   (box)     n::[i]a, n->i m              =>  m::a
//   (dia)     n::~[i]a                     =>  fresh m minimal, m::~a
//                                           |  fresh m, fresh k minimal, k < m, m::~a
//   (defbox)  n::[[i]]a, n->i m, m minimal =>  m::a
//   (defdia)  n::~[[i]]a                   =>  fresh m minimal, m::~a
//
// Input formulas are desugared to the core connectives first. Saturation uses
// a deterministic worklist: (bot) is checked eagerly on every insertion, then
// non-branching rules in FIFO order, then (or), then (dia). Branches are
// explored depth first, left alternative first, with backjumping over
// splits a closure does not depend on.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "dmt/formula.hpp"
#include "dmt/model.hpp"

namespace dmt::tableau {

struct Label {
  std::uint32_t id = 0;
  friend auto operator<=>(const Label&, const Label&) = default;
};

// World name used for a label in extracted models.
std::string world_name(Label l);

enum class Rule : std::uint8_t { Bottom, DoubleNeg, Conj, Disj, Box, Dia, DefBox, DefDia };
std::string_view rule_name(Rule r);

struct Limits {
  std::size_t max_rule_applications = 10000;
  std::size_t max_labels = 1000;
};

struct Options {
  Limits limits;
  bool trace = false;
  // Assert the subformula property, the preference shape and minimality
  // coverage while saturating; violations throw InvariantViolation.
  bool check_invariants = false;
  // Apply (dia) without its second alternative when the input has no
  // positive [[i]]-subformula for that modality; the alternatives are then
  // equisatisfiable.
  bool skip_redundant_splits = true;
  // Skip the right alternative of a split when the left one closed without
  // using any fact the split introduced.
  bool backjumping = true;
};

class ResourceExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct LabeledFormula {
  Label label;
  Formula formula;
};

struct Edge {
  std::string modality;
  Label from;
  Label to;
};

struct Verdict;
class Context;  // closure table and options shared by all branches of one tableau

class Branch {
 public:
  bool closed() const noexcept { return closed_; }

  std::vector<LabeledFormula> formulas() const;
  bool contains(Label l, const Formula& f) const;
  std::vector<Edge> skeleton() const;
  // (a, b): a is preferred to b.
  const std::vector<std::pair<Label, Label>>& preference() const noexcept { return preference_; }
  // Labels asserted minimal among the `modality`-successors of `parent`.
  std::vector<Label> asserted_minimal(std::string_view modality, Label parent) const;
  std::uint32_t label_count() const noexcept { return static_cast<std::uint32_t>(labels_.size()); }
  std::size_t applied_count() const noexcept { return applied_.size(); }
  // True when no rule instance is pending.
  bool saturated() const noexcept;
  const Formula& root_formula() const;
  // Dotted position in the branch tree, "0" for the initial branch.
  const std::string& path() const noexcept { return path_; }

 private:
  friend class Engine;
  friend Verdict decide(const Formula& f, const Options& options);

  using FormulaId = std::uint32_t;
  using ModId = std::uint32_t;

  struct Instance {
    Rule rule;
    std::uint32_t label;
    FormulaId formula;
    std::uint32_t target;  // successor label for (box)/(defbox)
    auto key() const { return std::make_tuple(rule, label, formula, target); }
  };

  // Sorted ids of the splits a fact depends on.
  using DepSet = std::vector<std::uint32_t>;
  struct LabelState {
    std::vector<FormulaId> facts;    // insertion order
    std::vector<DepSet> deps;        // parallel to facts
    std::vector<std::uint32_t> member;  // indexed by FormulaId: position in facts + 1, or 0
    std::vector<std::pair<ModId, std::uint32_t>> children;
    DepSet created;                  // splits the label's existence depends on
  };

  std::shared_ptr<const Context> ctx_;
  std::vector<LabelState> labels_;
  std::vector<std::tuple<ModId, std::uint32_t, std::uint32_t>> edges_;
  std::vector<std::pair<Label, Label>> preference_;
  std::vector<std::tuple<ModId, std::uint32_t, std::vector<std::uint32_t>>> min_asserted_;
  std::set<std::tuple<Rule, std::uint32_t, FormulaId, std::uint32_t>> applied_;
  std::deque<Instance> linear_;
  std::deque<Instance> disjunctive_;
  std::deque<Instance> modal_splits_;
  bool closed_ = false;
  DepSet clash_;                     // splits the closure depends on
  std::uint32_t splits_ = 0;         // splits on the path to this branch
  std::string path_ = "0";
  std::vector<std::string> log_;
};

// Outcome of a single rule application.
struct StepResult {
  bool saturated = false;          // no pending instance; `branches` holds b unchanged
  std::vector<Branch> branches;    // one result, or two after a split (left first)
};

std::vector<Branch> initial_tableau(const Formula& f, const Options& options = {});

// Applies the next pending rule instance of an open branch.
StepResult step(Branch b);

bool is_closed(const Branch& b);

struct Stats {
  std::size_t rule_applications = 0;
  std::size_t branches_explored = 0;
  std::size_t max_labels = 0;
};

struct Verdict {
  enum class Kind { Closed, Open };
  Kind kind = Kind::Closed;
  std::vector<std::string> trace;  // empty unless Options::trace
  std::optional<Branch> branch;             // Open only
  std::optional<PreferentialModel> model;   // Open only, already verified
  Stats stats;

  bool is_open() const noexcept { return kind == Kind::Open; }
};

// Satisfiability of f: Closed iff every branch closes. Open verdicts carry
// the first saturated open branch and its extracted model, which has been
// checked with verify_branch_model. Throws ResourceExhausted past the limits.
Verdict decide(const Formula& f, const Options& options = {});

// Worlds n0, n1, ... for every label, relations from the skeleton, atoms
// true where asserted, and the transitively closed label preference.
PreferentialModel extract_model(const Branch& b);

// Every labeled formula of b holds at its label's world in m.
bool verify_branch_model(const Branch& b, const PreferentialModel& m);

}  // namespace dmt::tableau
