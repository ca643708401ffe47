#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dmt/oracle.hpp"
#include "dmt/parser.hpp"
#include "dmt/tableau.hpp"
#include "support.hpp"

using namespace dmt;
using namespace dmt::tableau;

namespace {

Formula f(const char* text) { return parse_formula(text); }

const char* const kSplitExample = "[[a]]~(p & ~q) & [a]p & ~[a]q";

// Steps b until it closes or saturates, always following the first result.
Branch run_left(Branch b) {
  while (!b.closed()) {
    StepResult r = step(std::move(b));
    b = std::move(r.branches.front());
    if (r.saturated) break;
  }
  return b;
}

std::vector<std::uint32_t> ids(const std::vector<Label>& ls) {
  std::vector<std::uint32_t> out;
  for (auto l : ls) out.push_back(l.id);
  return out;
}

}  // namespace

TEST_CASE("initial_tableau") {
  auto t = initial_tableau(f("p & q"));
  REQUIRE(t.size() == 1);
  REQUIRE(t[0].formulas().size() == 1);
  CHECK(t[0].formulas()[0].label.id == 0);
  CHECK(t[0].formulas()[0].formula == f("p & q"));
  CHECK(t[0].skeleton().empty());
  CHECK(t[0].preference().empty());

  t = initial_tableau(f(kSplitExample));
  CHECK(t[0].contains({0}, desugar(f(kSplitExample))));

  t = initial_tableau(f("true"));
  CHECK(t[0].formulas()[0].formula == Formula::negation(Formula::bottom()));
}

TEST_CASE("step applies conjunction") {
  auto r = step(initial_tableau(f("p & q"))[0]);
  REQUIRE(r.branches.size() == 1);
  CHECK_FALSE(r.saturated);
  const Branch& b = r.branches[0];
  CHECK(b.formulas().size() == 3);
  CHECK(b.contains({0}, f("p")));
  CHECK(b.contains({0}, f("q")));

  r = step(b);
  CHECK(r.saturated);
  REQUIRE(r.branches.size() == 1);
  CHECK(r.branches[0].formulas().size() == 3);
}

TEST_CASE("step splits a negated box into two alternatives") {
  Options o;
  o.skip_redundant_splits = false;
  const auto r = step(initial_tableau(f("~[a]q"), o)[0]);
  REQUIRE(r.branches.size() == 2);
  const Branch& left = r.branches[0];
  const Branch& right = r.branches[1];

  CHECK(left.contains({1}, f("~q")));
  CHECK(ids(left.asserted_minimal("a", {0})) == std::vector<std::uint32_t>{1});
  CHECK(left.preference().empty());

  CHECK(right.contains({2}, f("~q")));
  CHECK(ids(right.asserted_minimal("a", {0})) == std::vector<std::uint32_t>{3});
  REQUIRE(right.preference().size() == 1);
  CHECK(right.preference()[0].first.id == 3);
  CHECK(right.preference()[0].second.id == 2);
  for (const auto& lf : right.formulas()) CHECK(lf.label.id != 3);
  CHECK(right.skeleton().size() == 2);
}

TEST_CASE("the second alternative is skipped when no flag can use it") {
  auto r = step(initial_tableau(f("~[a]q & [[b]]p"))[0]);
  while (r.branches.size() == 1 && !r.saturated) r = step(std::move(r.branches[0]));
  CHECK(r.saturated);
  CHECK(r.branches[0].contains({1}, f("~q")));
  CHECK(r.branches[0].preference().empty());

  // A flag under an odd number of negations never becomes a fact.
  r = step(initial_tableau(f("~[a]q & ~[[a]]q"))[0]);
  while (r.branches.size() == 1 && !r.saturated) r = step(std::move(r.branches[0]));
  CHECK(r.saturated);
  r = step(initial_tableau(f("~[a]q & [[a]]p"))[0]);
  while (r.branches.size() == 1 && !r.saturated) r = step(std::move(r.branches[0]));
  CHECK(r.branches.size() == 2);
}

TEST_CASE("skipping redundant splits never changes a verdict") {
  std::mt19937_64 rng(606);
  Options full;
  full.skip_redundant_splits = false;
  for (int i = 0; i < 300; ++i) {
    const Formula x = testing::random_formula(rng, 1 + i % 12);
    INFO(render(x));
    CHECK(decide(x).is_open() == decide(x, full).is_open());
  }
}

TEST_CASE("backjumping never changes a verdict") {
  std::mt19937_64 rng(707);
  Options plain;
  plain.backjumping = false;
  for (int i = 0; i < 300; ++i) {
    const Formula x = testing::random_formula(rng, 1 + i % 14);
    INFO(render(x));
    CHECK(decide(x).is_open() == decide(x, plain).is_open());
  }
  // Splits on label 0 are irrelevant to the clash below the diamond.
  Options o;
  o.trace = true;
  const Verdict v = decide(f("(p | q) & (r | s) & <a>false"), o);
  CHECK_FALSE(v.is_open());
  CHECK(std::count(v.trace.begin(), v.trace.end(), "branch 0.2 skipped") == 1);
  CHECK(v.stats.branches_explored == 1);
}

TEST_CASE("step propagates the flag to asserted minima only") {
  // Right alternative of the diamond split: 3 is minimal, 2 is not.
  Branch b = initial_tableau(f(kSplitExample))[0];
  StepResult r;
  do {
    r = step(std::move(b));
    b = std::move(r.branches.front());
  } while (r.branches.size() == 1 && !r.saturated);
  REQUIRE(r.branches.size() == 2);
  Branch right = run_left(std::move(r.branches[1]));
  CHECK(right.contains({3}, f("~(p & ~q)")));
  CHECK_FALSE(right.contains({2}, f("~(p & ~q)")));
  CHECK(right.contains({2}, f("p")));
  CHECK(right.contains({3}, f("p")));
}

TEST_CASE("is_closed") {
  Branch b = run_left(initial_tableau(f("p & ~p"))[0]);
  CHECK(is_closed(b));
  CHECK(b.contains({0}, Formula::bottom()));

  b = run_left(initial_tableau(f("p & <<a>>~p"))[0]);
  CHECK_FALSE(is_closed(b));
  CHECK(b.contains({0}, f("p")));
  CHECK(b.contains({1}, f("~p")));

  CHECK_FALSE(is_closed(run_left(initial_tableau(f("true"))[0])));
}

TEST_CASE("decide: closed examples") {
  CHECK_FALSE(decide(f("p & ~p")).is_open());
  CHECK_FALSE(decide(f("[a]p & ~[[a]]p")).is_open());
  CHECK_FALSE(decide(f("false")).is_open());
  CHECK_FALSE(decide(f("<<a>>p & [a]~p")).is_open());
}

TEST_CASE("decide: the split example is open with the expected model") {
  const Verdict v = decide(f(kSplitExample));
  REQUIRE(v.is_open());
  const PreferentialModel& m = *v.model;
  CHECK(m.worlds() == std::vector<std::string>{"n0", "n2", "n3"});
  const auto root = *m.world_index("n0");
  const auto n2 = *m.world_index("n2");
  const auto n3 = *m.world_index("n3");
  CHECK(m.successors("a", root) == std::vector<std::size_t>{n2, n3});
  CHECK(m.prefers(n3, n2));
  CHECK_FALSE(m.prefers(n2, n3));
  CHECK_FALSE(m.prefers(root, n2));
  CHECK_FALSE(m.prefers(n2, root));
  CHECK(m.valuation(n2, "p"));
  CHECK_FALSE(m.valuation(n2, "q"));
  CHECK(m.valuation(n3, "p"));
  CHECK(m.valuation(n3, "q"));
  CHECK(holds_at(m, "n0", f(kSplitExample)));
  CHECK(verify_branch_model(*v.branch, m));
}

TEST_CASE("extract_model") {
  Verdict v = decide(f("p"));
  REQUIRE(v.is_open());
  CHECK(v.model->worlds() == std::vector<std::string>{"n0"});
  CHECK(v.model->valuation(0, "p"));
  CHECK(verify_branch_model(*v.branch, *v.model));

  // The formula-free minimum of the second alternative is still a world.
  Options full;
  full.skip_redundant_splits = false;
  auto split = step(initial_tableau(f("<a>p & <a>~p"), full)[0]);
  while (split.branches.size() == 1) split = step(std::move(split.branches[0]));
  const Branch right = run_left(std::move(split.branches[1]));
  REQUIRE(right.saturated());
  for (const auto& lf : right.formulas()) CHECK(lf.label.id != 3);
  const PreferentialModel m = extract_model(right);
  CHECK(m.world_index("n3").has_value());
  CHECK(verify_branch_model(right, m));
}

TEST_CASE("verify_branch_model rejects a tampered model") {
  const Verdict v = decide(f(kSplitExample));
  REQUIRE(v.is_open());
  RawModel raw = v.model->to_raw();
  auto& n3 = raw.valuation["n3"];
  n3.erase(std::find(n3.begin(), n3.end(), "q"));
  CHECK_FALSE(verify_branch_model(*v.branch, PreferentialModel::validate(raw)));

  raw = v.model->to_raw();
  raw.preference.clear();
  CHECK_FALSE(verify_branch_model(*v.branch, PreferentialModel::validate(raw)));
}

TEST_CASE("determinism and trace format") {
  Options o;
  o.trace = true;
  const Verdict a = decide(f(kSplitExample), o);
  const Verdict b = decide(f(kSplitExample), o);
  CHECK(a.trace == b.trace);
  REQUIRE_FALSE(a.trace.empty());
  CHECK(a.trace.front() == "branch 0");
  CHECK(std::count(a.trace.begin(), a.trace.end(), "branch 0.1.1 closed") == 1);
  bool saw_and = false;
  for (const auto& line : a.trace) saw_and = saw_and || line.starts_with("and @ 0 :: ");
  CHECK(saw_and);
  CHECK(a.trace.back().ends_with(" open"));
  CHECK(decide(f(kSplitExample)).trace.empty());
}

TEST_CASE("resource limits") {
  Options o;
  o.limits.max_rule_applications = 3;
  CHECK_THROWS_AS(decide(f(kSplitExample), o), ResourceExhausted);
  o = {};
  o.limits.max_labels = 2;
  CHECK_THROWS_AS(decide(f("<<a>>p & <<a>>q & <<a>>r"), o), ResourceExhausted);
}

TEST_CASE("property: verdicts agree with the bounded oracle") {
  std::mt19937_64 rng(2718);
  testing::FormulaGen g;
  Options o;
  o.check_invariants = true;
  for (int i = 0; i < 150; ++i) {
    const Formula x = testing::random_formula(rng, 1 + i % 9, g);
    INFO(render(x));
    const Verdict v = decide(x, o);
    if (v.is_open()) {
      CHECK(verify_branch_model(*v.branch, *v.model));
      CHECK(holds_at(*v.model, "n0", x));
      for (const auto& lf : v.branch->formulas()) {
        const auto subs = subformulas(desugar(x));
        const bool ok = subs.contains(lf.formula) ||
                        (lf.formula.op() == Op::Not && subs.contains(lf.formula.operand())) ||
                        lf.formula.op() == Op::Bottom;
        CHECK(ok);
      }
    } else {
      CHECK_FALSE(brute_force_satisfiable(x, signature_of({x}, 2)).has_value());
    }
  }
}
