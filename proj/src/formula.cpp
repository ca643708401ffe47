#include "dmt/formula.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace dmt {

namespace {

const FormulaNode kBottomNode{Op::Bottom, {}, {}, {}, 1, 0x9e3779b97f4a7c15ULL};

std::size_t mix(std::size_t h, std::size_t v) noexcept {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

void require_modality(const std::string& m) {
  if (!is_identifier(m)) throw std::invalid_argument("invalid modality name '" + m + "'");
}

}  // namespace

bool is_identifier(std::string_view s) noexcept {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return s != "true" && s != "false";
}

const FormulaNode& Formula::node() const noexcept { return node_ ? *node_ : kBottomNode; }

Formula Formula::make(Op op, std::string name, Formula a, Formula b) {
  std::size_t size = 1;
  std::size_t h = std::hash<int>{}(static_cast<int>(op) + 17);
  h = mix(h, std::hash<std::string>{}(name));
  if (op == Op::Not || op == Op::Box || op == Op::Dia || op == Op::DefBox || op == Op::DefDia) {
    size += a.size();
    h = mix(h, a.hash());
  } else if (op != Op::Atom && op != Op::Top) {
    size += a.size() + b.size();
    h = mix(mix(h, a.hash()), b.hash());
  }
  return Formula(std::make_shared<const FormulaNode>(
      FormulaNode{op, std::move(name), std::move(a), std::move(b), size, h}));
}

Formula Formula::atom(std::string name) {
  if (!is_identifier(name)) throw std::invalid_argument("invalid atom name '" + name + "'");
  return make(Op::Atom, std::move(name), {}, {});
}
Formula Formula::bottom() { return Formula(); }
Formula Formula::top() { return make(Op::Top, {}, {}, {}); }
Formula Formula::negation(Formula a) { return make(Op::Not, {}, std::move(a), {}); }
Formula Formula::conjunction(Formula a, Formula b) {
  return make(Op::And, {}, std::move(a), std::move(b));
}
Formula Formula::disjunction(Formula a, Formula b) {
  return make(Op::Or, {}, std::move(a), std::move(b));
}
Formula Formula::implication(Formula a, Formula b) {
  return make(Op::Implies, {}, std::move(a), std::move(b));
}
Formula Formula::equivalence(Formula a, Formula b) {
  return make(Op::Iff, {}, std::move(a), std::move(b));
}
Formula Formula::box(std::string modality, Formula a) {
  require_modality(modality);
  return make(Op::Box, std::move(modality), std::move(a), {});
}
Formula Formula::dia(std::string modality, Formula a) {
  require_modality(modality);
  return make(Op::Dia, std::move(modality), std::move(a), {});
}
Formula Formula::def_box(std::string modality, Formula a) {
  require_modality(modality);
  return make(Op::DefBox, std::move(modality), std::move(a), {});
}
Formula Formula::def_dia(std::string modality, Formula a) {
  require_modality(modality);
  return make(Op::DefDia, std::move(modality), std::move(a), {});
}

Op Formula::op() const noexcept { return node().op; }
const std::string& Formula::name() const noexcept { return node().name; }

std::size_t Formula::arity() const noexcept {
  switch (op()) {
    case Op::Atom:
    case Op::Bottom:
    case Op::Top:
      return 0;
    case Op::Not:
    case Op::Box:
    case Op::Dia:
    case Op::DefBox:
    case Op::DefDia:
      return 1;
    default:
      return 2;
  }
}

bool Formula::is_modal() const noexcept {
  const Op o = op();
  return o == Op::Box || o == Op::Dia || o == Op::DefBox || o == Op::DefDia;
}

bool Formula::is_binary() const noexcept { return arity() == 2; }

const Formula& Formula::lhs() const {
  if (arity() == 0) throw std::logic_error("formula has no operands");
  return node().lhs;
}

const Formula& Formula::rhs() const {
  if (arity() != 2) throw std::logic_error("formula is not binary");
  return node().rhs;
}

std::size_t Formula::size() const noexcept { return node().size; }
std::size_t Formula::hash() const noexcept { return node().hash; }

bool operator==(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return true;
  const FormulaNode& x = a.node();
  const FormulaNode& y = b.node();
  if (x.hash != y.hash || x.op != y.op || x.size != y.size || x.name != y.name) return false;
  return x.lhs == y.lhs && x.rhs == y.rhs;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const FormulaNode& x = a.node();
  const FormulaNode& y = b.node();
  if (auto c = x.size <=> y.size; c != 0) return c;
  if (auto c = x.op <=> y.op; c != 0) return c;
  if (auto c = x.name.compare(y.name); c != 0) return c <=> 0;
  if (auto c = x.lhs <=> y.lhs; c != 0) return c;
  return x.rhs <=> y.rhs;
}

bool is_core(const Formula& f) {
  switch (f.op()) {
    case Op::Atom:
    case Op::Bottom:
      return true;
    case Op::Not:
    case Op::Box:
    case Op::DefBox:
      return is_core(f.operand());
    case Op::And:
      return is_core(f.lhs()) && is_core(f.rhs());
    default:
      return false;
  }
}

bool is_classical(const Formula& f) {
  if (f.op() == Op::DefBox || f.op() == Op::DefDia) return false;
  switch (f.arity()) {
    case 0:
      return true;
    case 1:
      return is_classical(f.operand());
    default:
      return is_classical(f.lhs()) && is_classical(f.rhs());
  }
}

Formula desugar(const Formula& f) {
  using F = Formula;
  switch (f.op()) {
    case Op::Atom:
    case Op::Bottom:
      return f;
    case Op::Top:
      return F::negation(F::bottom());
    case Op::Not:
      return F::negation(desugar(f.operand()));
    case Op::And:
      return F::conjunction(desugar(f.lhs()), desugar(f.rhs()));
    case Op::Or:
      return F::negation(
          F::conjunction(F::negation(desugar(f.lhs())), F::negation(desugar(f.rhs()))));
    case Op::Implies:
      return F::negation(F::conjunction(desugar(f.lhs()), F::negation(desugar(f.rhs()))));
    case Op::Iff: {
      const F a = desugar(f.lhs());
      const F b = desugar(f.rhs());
      return F::conjunction(F::negation(F::conjunction(a, F::negation(b))),
                            F::negation(F::conjunction(b, F::negation(a))));
    }
    case Op::Box:
      return F::box(f.name(), desugar(f.operand()));
    case Op::Dia:
      return F::negation(F::box(f.name(), F::negation(desugar(f.operand()))));
    case Op::DefBox:
      return F::def_box(f.name(), desugar(f.operand()));
    case Op::DefDia:
      return F::negation(F::def_box(f.name(), F::negation(desugar(f.operand()))));
  }
  return f;
}

namespace {

void collect_subformulas(const Formula& f, std::set<Formula>& out) {
  if (!out.insert(f).second) return;
  if (f.arity() >= 1) collect_subformulas(f.lhs(), out);
  if (f.arity() == 2) collect_subformulas(f.rhs(), out);
}

void collect_names(const Formula& f, std::set<std::string>& atoms, std::set<std::string>& mods) {
  if (f.op() == Op::Atom) atoms.insert(f.name());
  if (f.is_modal()) mods.insert(f.name());
  if (f.arity() >= 1) collect_names(f.lhs(), atoms, mods);
  if (f.arity() == 2) collect_names(f.rhs(), atoms, mods);
}

}  // namespace

std::set<Formula> subformulas(const Formula& f) {
  std::set<Formula> out;
  collect_subformulas(f, out);
  return out;
}

std::size_t modal_depth(const Formula& f) {
  switch (f.arity()) {
    case 0:
      return 0;
    case 1:
      return modal_depth(f.operand()) + (f.is_modal() ? 1 : 0);
    default:
      return std::max(modal_depth(f.lhs()), modal_depth(f.rhs()));
  }
}

std::set<std::string> atoms_of(const Formula& f) {
  std::set<std::string> atoms, mods;
  collect_names(f, atoms, mods);
  return atoms;
}

std::set<std::string> modalities_of(const Formula& f) {
  std::set<std::string> atoms, mods;
  collect_names(f, atoms, mods);
  return mods;
}

Formula conjoin(const std::vector<Formula>& parts) {
  if (parts.empty()) return Formula::top();
  Formula acc = parts.back();
  for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it) acc = Formula::conjunction(*it, acc);
  return acc;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

// Binding strength; higher binds tighter.
int precedence(Op op) {
  switch (op) {
    case Op::Iff:
      return 1;
    case Op::Implies:
      return 2;
    case Op::Or:
      return 3;
    case Op::And:
      return 4;
    default:
      return 5;
  }
}

void render_into(const Formula& f, std::string& out);

void render_child(const Formula& child, bool parens, std::string& out) {
  if (parens) out += '(';
  render_into(child, out);
  if (parens) out += ')';
}

void render_into(const Formula& f, std::string& out) {
  switch (f.op()) {
    case Op::Atom:
      out += f.name();
      return;
    case Op::Bottom:
      out += "false";
      return;
    case Op::Top:
      out += "true";
      return;
    case Op::Not:
    case Op::Box:
    case Op::Dia:
    case Op::DefBox:
    case Op::DefDia: {
      switch (f.op()) {
        case Op::Not: out += '~'; break;
        case Op::Box: out += '[' + f.name() + ']'; break;
        case Op::Dia: out += '<' + f.name() + '>'; break;
        case Op::DefBox: out += "[[" + f.name() + "]]"; break;
        default: out += "<<" + f.name() + ">>"; break;
      }
      render_child(f.operand(), f.operand().is_binary(), out);
      return;
    }
    case Op::And:
    case Op::Or:
    case Op::Implies:
    case Op::Iff: {
      const int p = precedence(f.op());
      const int pl = precedence(f.lhs().op());
      const int pr = precedence(f.rhs().op());
      // `->` is right associative; the others associate to the left.
      const bool right_assoc = f.op() == Op::Implies;
      render_child(f.lhs(), right_assoc ? pl <= p : pl < p, out);
      switch (f.op()) {
        case Op::And: out += " & "; break;
        case Op::Or: out += " | "; break;
        case Op::Implies: out += " -> "; break;
        default: out += " <-> "; break;
      }
      render_child(f.rhs(), right_assoc ? pr < p : pr <= p, out);
      return;
    }
  }
}

}  // namespace

std::string render(const Formula& f) {
  std::string out;
  render_into(f, out);
  return out;
}

std::string render(const Conditional& c) {
  return render(c.antecedent) + " |~ " + render(c.consequent);
}

}  // namespace dmt
