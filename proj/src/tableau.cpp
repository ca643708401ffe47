#include "dmt/tableau.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace dmt::tableau {

std::string world_name(Label l) { return "n" + std::to_string(l.id); }

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::Bottom: return "bot";
    case Rule::DoubleNeg: return "not";
    case Rule::Conj: return "and";
    case Rule::Disj: return "or";
    case Rule::Box: return "box";
    case Rule::Dia: return "dia";
    case Rule::DefBox: return "defbox";
    case Rule::DefDia: return "defdia";
  }
  return "?";
}

// Closure of the desugared input: its subformulas, their negations and
// false. Every formula a rule can produce is in this table.
class Context {
 public:
  using FormulaId = std::uint32_t;
  using ModId = std::uint32_t;
  static constexpr FormulaId kNone = std::numeric_limits<FormulaId>::max();

  struct Entry {
    Formula formula;
    Op op;
    FormulaId lhs = kNone;
    FormulaId rhs = kNone;
    ModId mod = 0;
    FormulaId neg = kNone;
  };

  Context(const Formula& input, const Options& opts) : options(opts), root(desugar(input)) {
    const std::set<Formula> subs = subformulas(root);
    for (const auto& s : subs) intern(s);
    for (const auto& s : subs) intern(Formula::negation(s));
    bottom = intern(Formula::bottom());
    for (auto& e : entries) {
      auto it = index.find(Formula::negation(e.formula));
      if (it != index.end()) e.neg = it->second;
    }
    root_id = index.at(root);
    flagged.assign(modalities.size(), 0);
    mark_flags(root, true);
    const auto a = atoms_of(root);
    atoms.assign(a.begin(), a.end());
    if (options.check_invariants) {
      // Built from the AST directly, independent of the id table.
      for (const auto& s : subs) {
        allowed.insert(s);
        allowed.insert(Formula::negation(s));
      }
      allowed.insert(Formula::bottom());
    }
  }

  FormulaId id_of(const Formula& f) const {
    auto it = index.find(f);
    return it == index.end() ? kNone : it->second;
  }

  Options options;
  Formula root;
  FormulaId root_id = 0;
  FormulaId bottom = 0;
  std::vector<Entry> entries;
  std::unordered_map<Formula, FormulaId, FormulaHash> index;
  std::vector<std::string> modalities;
  std::vector<std::string> atoms;
  std::unordered_set<Formula, FormulaHash> allowed;
  // Per modality: some [[i]]a can appear on a branch (a positive occurrence).
  std::vector<char> flagged;

 private:
  void mark_flags(const Formula& f, bool positive) {
    switch (f.op()) {
      case Op::Not: mark_flags(f.operand(), !positive); break;
      case Op::And:
        mark_flags(f.lhs(), positive);
        mark_flags(f.rhs(), positive);
        break;
      case Op::DefBox:
        if (positive) flagged[modality_id(f.name())] = 1;
        [[fallthrough]];
      case Op::Box: mark_flags(f.operand(), positive); break;
      default: break;
    }
  }

  FormulaId intern(const Formula& f) {
    if (auto it = index.find(f); it != index.end()) return it->second;
    Entry e{f, f.op()};
    if (f.arity() >= 1) e.lhs = intern(f.lhs());
    if (f.arity() == 2) e.rhs = intern(f.rhs());
    if (f.is_modal()) e.mod = modality_id(f.name());
    entries.push_back(std::move(e));
    const auto id = static_cast<FormulaId>(entries.size() - 1);
    index.emplace(f, id);
    return id;
  }

  ModId modality_id(const std::string& name) {
    for (std::size_t i = 0; i < modalities.size(); ++i) {
      if (modalities[i] == name) return static_cast<ModId>(i);
    }
    modalities.push_back(name);
    return static_cast<ModId>(modalities.size() - 1);
  }
};

// Rule machinery; one instance per step, writing trace lines into `sink`.
class Engine {
 public:
  using FormulaId = Branch::FormulaId;
  using ModId = Branch::ModId;

  Engine(Branch& b, std::vector<std::string>* sink) : b_(b), ctx_(*b.ctx_), sink_(sink) {}

  static Branch make_initial(std::shared_ptr<const Context> ctx) {
    Branch b;
    b.ctx_ = std::move(ctx);
    Engine e(b, nullptr);
    e.fresh_label();
    e.add_fact(0, b.ctx_->root_id, {});
    return b;
  }

  // Trace lines recorded for b before it was scheduled.
  static std::vector<std::string> take_log(Branch& b) { return std::exchange(b.log_, {}); }

  static std::optional<Branch::Instance> pop_next(Branch& b) {
    for (auto* q : {&b.linear_, &b.disjunctive_, &b.modal_splits_}) {
      while (!q->empty()) {
        Branch::Instance in = q->front();
        q->pop_front();
        if (!b.applied_.contains(in.key())) return in;
      }
    }
    return std::nullopt;
  }

  // Applies `in` to b_. For splitting rules, returns the right alternative
  // and turns b_ into the left one.
  std::optional<Branch> apply(const Branch::Instance& in) {
    b_.applied_.insert(in.key());
    const auto& e = ctx_.entries[in.formula];
    const std::uint32_t n = in.label;
    const Branch::DepSet deps = deps_of(n, in.formula);
    switch (in.rule) {
      case Rule::DoubleNeg: {
        const FormulaId a = ctx_.entries[e.lhs].lhs;
        begin(in);
        add_fact(n, a, deps);
        end();
        return std::nullopt;
      }
      case Rule::Conj:
        begin(in);
        add_fact(n, e.lhs, deps);
        add_fact(n, e.rhs, deps);
        end();
        return std::nullopt;
      case Rule::Box:
      case Rule::DefBox:
        // The edge and any minimality assertion date from the target's creation.
        begin(in);
        add_fact(in.target, e.lhs, unite(deps, b_.labels_[in.target].created));
        end();
        return std::nullopt;
      case Rule::DefDia: {
        const auto& boxed = ctx_.entries[e.lhs];
        begin(in);
        const std::uint32_t c = fresh_label(deps);
        add_edge(boxed.mod, n, c);
        assert_minimal(boxed.mod, n, c);
        add_fact(c, ctx_.entries[boxed.lhs].neg, deps);
        end();
        return std::nullopt;
      }
      case Rule::Disj:
        return split_disjunction(in);
      case Rule::Dia:
        return split_diamond(in);
      case Rule::Bottom:
        break;
    }
    return std::nullopt;
  }

  void check_coverage() const {
    // Every successor is asserted minimal or sits above an asserted minimum.
    std::map<std::pair<ModId, std::uint32_t>, std::vector<std::uint32_t>> succ;
    for (const auto& [mod, from, to] : b_.edges_) succ[{mod, from}].push_back(to);
    for (const auto& [key, kids] : succ) {
      const auto mins = minimal_of(key.first, key.second);
      for (std::uint32_t c : kids) {
        const bool is_min = std::find(mins.begin(), mins.end(), c) != mins.end();
        bool covered = is_min;
        for (const auto& [lo, hi] : b_.preference_) {
          if (hi.id == c && std::find(mins.begin(), mins.end(), lo.id) != mins.end() &&
              std::find(kids.begin(), kids.end(), lo.id) != kids.end()) {
            covered = true;
          }
          if (is_min && hi.id == c && std::find(kids.begin(), kids.end(), lo.id) != kids.end()) {
            throw InvariantViolation("asserted-minimal label " + std::to_string(c) +
                                     " has a preferred sibling");
          }
        }
        if (!covered) {
          throw InvariantViolation("label " + std::to_string(c) +
                                   " is neither minimal nor above a minimal sibling");
        }
      }
    }
  }

 private:
  std::vector<std::uint32_t> minimal_of(ModId mod, std::uint32_t parent) const {
    for (const auto& [m, p, kids] : b_.min_asserted_) {
      if (m == mod && p == parent) return kids;
    }
    return {};
  }

  bool is_minimal(ModId mod, std::uint32_t parent, std::uint32_t child) const {
    for (const auto& [m, p, kids] : b_.min_asserted_) {
      if (m == mod && p == parent) return std::find(kids.begin(), kids.end(), child) != kids.end();
    }
    return false;
  }

  bool has(std::uint32_t label, FormulaId f) const { return b_.labels_[label].member[f] != 0; }

  const Branch::DepSet& deps_of(std::uint32_t label, FormulaId f) const {
    const auto& ls = b_.labels_[label];
    return ls.deps[ls.member[f] - 1];
  }

  static Branch::DepSet with_split(Branch::DepSet d, std::uint32_t split) {
    d.insert(std::upper_bound(d.begin(), d.end(), split), split);
    return d;
  }

  static Branch::DepSet unite(const Branch::DepSet& a, const Branch::DepSet& b) {
    Branch::DepSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

  std::string show(std::uint32_t label, FormulaId f) const {
    return std::to_string(label) + " :: " + render(ctx_.entries[f].formula);
  }

  void begin(const Branch::Instance& in) {
    if (!sink_) return;
    line_ = std::string(rule_name(in.rule)) + " @ " + show(in.label, in.formula);
    effects_.clear();
  }

  void note(std::string effect) {
    if (sink_) effects_.push_back(std::move(effect));
  }

  void end() {
    if (!sink_) return;
    std::string out = line_;
    if (!effects_.empty()) {
      out += " =>";
      for (std::size_t i = 0; i < effects_.size(); ++i) out += (i ? ", " : " ") + effects_[i];
    }
    sink_->push_back(std::move(out));
    for (auto& l : pending_bottoms_) sink_->push_back(std::move(l));
    pending_bottoms_.clear();
  }

  std::uint32_t fresh_label(Branch::DepSet created = {}) {
    const std::size_t next = b_.labels_.size();
    if (next >= ctx_.options.limits.max_labels) {
      throw ResourceExhausted("label limit of " + std::to_string(ctx_.options.limits.max_labels) +
                              " reached");
    }
    b_.labels_.emplace_back();
    b_.labels_.back().member.assign(ctx_.entries.size(), 0);
    b_.labels_.back().created = std::move(created);
    return static_cast<std::uint32_t>(next);
  }

  void enqueue(std::deque<Branch::Instance>& q, Branch::Instance in) {
    if (!b_.applied_.contains(in.key())) q.push_back(in);
  }

  void add_fact(std::uint32_t n, FormulaId f, const Branch::DepSet& deps) {
    if (has(n, f) || b_.closed_) return;
    if (ctx_.options.check_invariants && !ctx_.allowed.contains(ctx_.entries[f].formula)) {
      throw InvariantViolation("subformula property violated by " + show(n, f));
    }
    auto& ls = b_.labels_[n];
    ls.facts.push_back(f);
    ls.deps.push_back(deps);
    ls.member[f] = static_cast<std::uint32_t>(ls.facts.size());
    note(show(n, f));
    const auto& e = ctx_.entries[f];
    if (f == ctx_.bottom) {
      b_.closed_ = true;
      b_.clash_ = deps;
      return;
    }
    const FormulaId complement = e.op == Op::Not ? e.lhs : e.neg;
    if (complement != Context::kNone && has(n, complement)) {
      b_.clash_ = unite(deps, deps_of(n, complement));
      ls.facts.push_back(ctx_.bottom);
      ls.deps.push_back(b_.clash_);
      ls.member[ctx_.bottom] = static_cast<std::uint32_t>(ls.facts.size());
      b_.closed_ = true;
      if (sink_) {
        pending_bottoms_.push_back("bot @ " + show(n, f) + ", " + show(n, complement) + " => " +
                                   show(n, ctx_.bottom));
      }
      return;
    }
    switch (e.op) {
      case Op::And:
        enqueue(b_.linear_, {Rule::Conj, n, f, 0});
        break;
      case Op::Not: {
        switch (ctx_.entries[e.lhs].op) {
          case Op::Not: enqueue(b_.linear_, {Rule::DoubleNeg, n, f, 0}); break;
          case Op::And: enqueue(b_.disjunctive_, {Rule::Disj, n, f, 0}); break;
          case Op::Box: enqueue(b_.modal_splits_, {Rule::Dia, n, f, 0}); break;
          case Op::DefBox: enqueue(b_.linear_, {Rule::DefDia, n, f, 0}); break;
          default: break;
        }
        break;
      }
      case Op::Box:
        for (const auto& [mod, c] : ls.children) {
          if (mod == e.mod) enqueue(b_.linear_, {Rule::Box, n, f, c});
        }
        break;
      case Op::DefBox:
        for (const auto& [mod, c] : ls.children) {
          if (mod == e.mod && is_minimal(mod, n, c)) enqueue(b_.linear_, {Rule::DefBox, n, f, c});
        }
        break;
      default:
        break;
    }
  }

  void add_edge(ModId mod, std::uint32_t from, std::uint32_t to) {
    b_.edges_.emplace_back(mod, from, to);
    b_.labels_[from].children.emplace_back(mod, to);
    note(std::to_string(from) + " -" + ctx_.modalities[mod] + "-> " + std::to_string(to));
    for (FormulaId f : b_.labels_[from].facts) {
      const auto& e = ctx_.entries[f];
      if (e.op == Op::Box && e.mod == mod) enqueue(b_.linear_, {Rule::Box, from, f, to});
    }
  }

  void assert_minimal(ModId mod, std::uint32_t parent, std::uint32_t child) {
    auto it = std::find_if(b_.min_asserted_.begin(), b_.min_asserted_.end(), [&](const auto& t) {
      return std::get<0>(t) == mod && std::get<1>(t) == parent;
    });
    if (it == b_.min_asserted_.end()) {
      b_.min_asserted_.emplace_back(mod, parent, std::vector<std::uint32_t>{});
      it = std::prev(b_.min_asserted_.end());
    }
    std::get<2>(*it).push_back(child);
    note(std::to_string(child) + " min " + ctx_.modalities[mod] + "(" + std::to_string(parent) + ")");
    for (FormulaId f : b_.labels_[parent].facts) {
      const auto& e = ctx_.entries[f];
      if (e.op == Op::DefBox && e.mod == mod) enqueue(b_.linear_, {Rule::DefBox, parent, f, child});
    }
  }

  void add_preference(std::uint32_t lo, std::uint32_t hi) {
    if (ctx_.options.check_invariants) {
      if (lo == hi) throw InvariantViolation("reflexive preference pair");
      for (const auto& [a, b] : b_.preference_) {
        // A label may not be both below and above something: chains stay at length 2.
        if (a.id == hi || b.id == lo) throw InvariantViolation("preference chain longer than 2");
      }
    }
    b_.preference_.push_back({Label{lo}, Label{hi}});
    note(std::to_string(lo) + " < " + std::to_string(hi));
  }

  std::string child_path(char which) const { return b_.path_ + "." + which; }

  std::optional<Branch> split_disjunction(const Branch::Instance& in) {
    const auto& conj = ctx_.entries[ctx_.entries[in.formula].lhs];
    const FormulaId left = ctx_.entries[conj.lhs].neg;
    const FormulaId right = ctx_.entries[conj.rhs].neg;
    const std::uint32_t n = in.label;
    if (has(n, left) || has(n, right)) {
      // Already satisfied; the other alternative would only add facts.
      if (sink_) {
        sink_->push_back("or @ " + show(n, in.formula) + " => satisfied by " +
                         show(n, has(n, left) ? left : right));
      }
      return std::nullopt;
    }
    const std::string header = "or @ " + show(n, in.formula);
    const Branch::DepSet deps = with_split(deps_of(n, in.formula), b_.splits_++);
    Branch right_branch = b_;
    right_branch.path_ = child_path('2');
    b_.path_ = child_path('1');
    if (sink_) sink_->push_back(header + " => split " + b_.path_ + " | " + right_branch.path_);

    begin(in);
    add_fact(n, left, deps);
    end();
    Engine re(right_branch, sink_ ? &right_branch.log_ : nullptr);
    re.begin(in);
    re.add_fact(n, right, deps);
    re.end();
    return right_branch;
  }

  std::optional<Branch> split_diamond(const Branch::Instance& in) {
    const auto& boxed = ctx_.entries[ctx_.entries[in.formula].lhs];
    const ModId mod = boxed.mod;
    const FormulaId body = ctx_.entries[boxed.lhs].neg;
    const std::uint32_t n = in.label;

    if (!ctx_.flagged[mod] && ctx_.options.skip_redundant_splits) {
      // Without [[i]]-facts, minimality never matters for i and the second
      // alternative closes exactly when the first does.
      const Branch::DepSet deps = deps_of(n, in.formula);
      begin(in);
      const std::uint32_t c = fresh_label(deps);
      add_edge(mod, n, c);
      assert_minimal(mod, n, c);
      add_fact(c, body, deps);
      end();
      return std::nullopt;
    }

    // Fresh labels for both alternatives come from one counter, so the left
    // alternative uses c and the right one c+1 (witness) and c+2 (minimum).
    const Branch::DepSet deps = with_split(deps_of(n, in.formula), b_.splits_++);
    const std::uint32_t c = fresh_label(deps);
    const std::uint32_t witness = fresh_label(deps);
    const std::uint32_t minimum = fresh_label(deps);

    Branch right_branch = b_;
    right_branch.path_ = child_path('2');
    b_.path_ = child_path('1');
    if (sink_) {
      sink_->push_back("dia @ " + show(n, in.formula) + " => split " + b_.path_ + " | " +
                       right_branch.path_);
    }

    begin(in);
    add_edge(mod, n, c);
    assert_minimal(mod, n, c);
    add_fact(c, body, deps);
    end();

    Engine re(right_branch, sink_ ? &right_branch.log_ : nullptr);
    re.begin(in);
    re.add_edge(mod, n, witness);
    re.add_edge(mod, n, minimum);
    re.add_preference(minimum, witness);
    re.assert_minimal(mod, n, minimum);
    re.add_fact(witness, body, deps);
    re.end();
    return right_branch;
  }

 private:
  Branch& b_;
  const Context& ctx_;
  std::vector<std::string>* sink_;
  std::string line_;
  std::vector<std::string> effects_;
  std::vector<std::string> pending_bottoms_;
};

// ---------------------------------------------------------------------------
// Branch accessors

std::vector<LabeledFormula> Branch::formulas() const {
  std::vector<LabeledFormula> out;
  for (std::uint32_t l = 0; l < labels_.size(); ++l) {
    for (FormulaId f : labels_[l].facts) out.push_back({Label{l}, ctx_->entries[f].formula});
  }
  return out;
}

bool Branch::contains(Label l, const Formula& f) const {
  if (l.id >= labels_.size()) return false;
  const auto id = ctx_->id_of(f);
  return id != Context::kNone && labels_[l.id].member[id] != 0;
}

std::vector<Edge> Branch::skeleton() const {
  std::vector<Edge> out;
  for (const auto& [mod, from, to] : edges_) out.push_back({ctx_->modalities[mod], {from}, {to}});
  return out;
}

std::vector<Label> Branch::asserted_minimal(std::string_view modality, Label parent) const {
  std::vector<Label> out;
  for (const auto& [mod, p, kids] : min_asserted_) {
    if (ctx_->modalities[mod] == modality && p == parent.id) {
      for (auto k : kids) out.push_back({k});
    }
  }
  return out;
}

bool Branch::saturated() const noexcept {
  auto pending = [this](const std::deque<Instance>& q) {
    return std::any_of(q.begin(), q.end(), [this](const Instance& in) {
      return !applied_.contains(in.key());
    });
  };
  return !pending(linear_) && !pending(disjunctive_) && !pending(modal_splits_);
}

const Formula& Branch::root_formula() const { return ctx_->root; }

// ---------------------------------------------------------------------------

std::vector<Branch> initial_tableau(const Formula& f, const Options& options) {
  return {Engine::make_initial(std::make_shared<const Context>(f, options))};
}

namespace {

StepResult step_impl(Branch b, std::vector<std::string>* sink) {
  if (b.closed()) throw std::logic_error("step applied to a closed branch");
  StepResult out;
  auto in = Engine::pop_next(b);
  if (!in) {
    out.saturated = true;
    out.branches.push_back(std::move(b));
    return out;
  }
  std::optional<Branch> right;
  {
    Engine e(b, sink);
    right = e.apply(*in);
  }
  out.branches.push_back(std::move(b));
  if (right) out.branches.push_back(std::move(*right));
  return out;
}

}  // namespace

StepResult step(Branch b) { return step_impl(std::move(b), nullptr); }

bool is_closed(const Branch& b) { return b.closed(); }

Verdict decide(const Formula& f, const Options& options) {
  const auto ctx = std::make_shared<const Context>(f, options);

  // Depth-first over the branch tree with backjumping: each split leaves a
  // frame holding its right alternative. When the left side closes for
  // reasons that do not involve the split, the right side would close the
  // same way and is skipped.
  struct Frame {
    std::uint32_t split;
    std::optional<Branch> right;
    Branch::DepSet carry;  // closure dependencies of the left side
  };
  std::vector<Frame> frames;

  Verdict v;
  std::vector<std::string>* sink = options.trace ? &v.trace : nullptr;
  Branch b = Engine::make_initial(ctx);
  if (sink) sink->push_back("branch " + b.path());
  ++v.stats.branches_explored;

  while (true) {
    v.stats.max_labels = std::max<std::size_t>(v.stats.max_labels, b.label_count());
    if (!b.closed()) {
      if (b.saturated()) {
        if (options.check_invariants) Engine(b, nullptr).check_coverage();
        if (sink) sink->push_back("branch " + b.path() + " open");
        PreferentialModel model = extract_model(b);
        if (!verify_branch_model(b, model)) {
          throw std::logic_error("extracted model does not verify against its branch");
        }
        v.kind = Verdict::Kind::Open;
        v.model = std::move(model);
        v.branch = std::move(b);
        return v;
      }
      if (++v.stats.rule_applications > options.limits.max_rule_applications) {
        throw ResourceExhausted("rule application limit of " +
                                std::to_string(options.limits.max_rule_applications) +
                                " reached");
      }
      StepResult r = step_impl(std::move(b), sink);
      if (r.branches.size() == 2) {
        frames.push_back({r.branches[1].splits_ - 1, std::move(r.branches[1]), {}});
      }
      b = std::move(r.branches[0]);
      continue;
    }

    if (sink) sink->push_back("branch " + b.path() + " closed");
    Branch::DepSet clash = b.clash_;
    while (true) {
      if (frames.empty()) {
        v.kind = Verdict::Kind::Closed;
        return v;
      }
      Frame& top = frames.back();
      const auto at = std::lower_bound(clash.begin(), clash.end(), top.split);
      const bool found = at != clash.end() && *at == top.split;
      const bool involved = found || !options.backjumping;
      if (found) clash.erase(at);
      if (top.right) {
        if (involved) {
          top.carry = std::move(clash);
          b = std::move(*top.right);
          top.right.reset();
          break;
        }
        if (sink) sink->push_back("branch " + top.right->path() + " skipped");
        frames.pop_back();
        continue;
      }
      // Both sides closed.
      if (involved) {
        Branch::DepSet merged;
        std::set_union(clash.begin(), clash.end(), top.carry.begin(), top.carry.end(),
                       std::back_inserter(merged));
        clash = std::move(merged);
      }
      frames.pop_back();
    }

    ++v.stats.branches_explored;
    auto pending = Engine::take_log(b);
    if (sink) {
      sink->push_back("branch " + b.path());
      for (auto& line : pending) sink->push_back(std::move(line));
    }
  }
}

PreferentialModel extract_model(const Branch& b) {
  std::set<std::uint32_t> used;
  for (const auto& lf : b.formulas()) used.insert(lf.label.id);
  for (const auto& e : b.skeleton()) {
    used.insert(e.from.id);
    used.insert(e.to.id);
  }
  for (const auto& [lo, hi] : b.preference()) {
    used.insert(lo.id);
    used.insert(hi.id);
  }

  RawModel raw;
  const Formula& root = b.root_formula();
  const auto atoms = atoms_of(root);
  const auto mods = modalities_of(root);
  raw.atoms.assign(atoms.begin(), atoms.end());
  raw.modalities.assign(mods.begin(), mods.end());
  for (auto l : used) raw.worlds.push_back(world_name(Label{l}));
  for (auto l : used) raw.valuation[world_name(Label{l})];
  for (const auto& lf : b.formulas()) {
    if (lf.formula.op() == Op::Atom) raw.valuation[world_name(lf.label)].push_back(lf.formula.name());
  }
  for (const auto& m : raw.modalities) raw.relations[m];
  for (const auto& e : b.skeleton()) {
    raw.relations[e.modality].emplace_back(world_name(e.from), world_name(e.to));
  }
  for (const auto& [lo, hi] : b.preference()) {
    raw.preference.emplace_back(world_name(lo), world_name(hi));
  }
  return PreferentialModel::validate(raw);
}

bool verify_branch_model(const Branch& b, const PreferentialModel& m) {
  std::unordered_map<Formula, WorldSet, FormulaHash> cache;
  for (const auto& lf : b.formulas()) {
    const auto w = m.world_index(world_name(lf.label));
    if (!w) return false;
    auto it = cache.find(lf.formula);
    if (it == cache.end()) it = cache.emplace(lf.formula, extension(m, lf.formula)).first;
    if (!it->second[*w]) return false;
  }
  return true;
}

}  // namespace dmt::tableau
