// Formula AST for modal logic K with defeasible modalities.
//
// Formulas are immutable trees of shared nodes. Copying a Formula copies a
// pointer; structural equality, hashing and a total order are provided so
// formulas can be used as keys in both ordered and unordered containers.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace dmt {

enum class Op : std::uint8_t {
  Atom,
  Bottom,
  Top,
  Not,
  And,
  Or,
  Implies,
  Iff,
  Box,     // [i]a
  Dia,     // <i>a
  DefBox,  // [[i]]a, holds when a is true in every most-preferred i-successor
  DefDia,  // <<i>>a, holds when a is true in some most-preferred i-successor
};

struct FormulaNode;

class Formula {
 public:
  // Default-constructed formulas are Bottom; Bottom is represented by an
  // empty handle so FormulaNode can hold Formula members by value.
  Formula() = default;

  static Formula atom(std::string name);
  static Formula bottom();
  static Formula top();
  static Formula negation(Formula a);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  static Formula implication(Formula a, Formula b);
  static Formula equivalence(Formula a, Formula b);
  static Formula box(std::string modality, Formula a);
  static Formula dia(std::string modality, Formula a);
  static Formula def_box(std::string modality, Formula a);
  static Formula def_dia(std::string modality, Formula a);

  Op op() const noexcept;
  // Atom name for atoms, modality name for modal operators, empty otherwise.
  const std::string& name() const noexcept;
  // First operand of unary, binary and modal nodes.
  const Formula& lhs() const;
  // Second operand of binary nodes.
  const Formula& rhs() const;
  const Formula& operand() const { return lhs(); }

  std::size_t arity() const noexcept;
  bool is_modal() const noexcept;
  bool is_binary() const noexcept;
  std::size_t size() const noexcept;  // node count
  std::size_t hash() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b) noexcept;
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept;

 private:
  explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}
  static Formula make(Op op, std::string name, Formula a, Formula b);
  const FormulaNode& node() const noexcept;

  std::shared_ptr<const FormulaNode> node_;
};

struct FormulaNode {
  Op op;
  std::string name;
  Formula lhs;
  Formula rhs;
  std::size_t size;
  std::size_t hash;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

// A plain formula or a KLM conditional `antecedent |~ consequent`.
struct Conditional {
  Formula antecedent;
  Formula consequent;
  friend bool operator==(const Conditional&, const Conditional&) = default;
};

struct Statement {
  bool is_conditional = false;
  Formula formula;      // valid when !is_conditional
  Conditional conditional;  // valid when is_conditional
};

// [a-zA-Z][a-zA-Z0-9_]*, excluding the keywords `true` and `false`.
bool is_identifier(std::string_view s) noexcept;

// Only Atom, Bottom, Not, And, Box, DefBox.
bool is_core(const Formula& f);
// No DefBox / DefDia.
bool is_classical(const Formula& f);

// Rewrites into core form: Top -> ~false, a|b -> ~(~a&~b), a->b -> ~(a&~b),
// a<->b -> both implications, <i>a -> ~[i]~a, <<i>>a -> ~[[i]]~a.
Formula desugar(const Formula& f);

std::set<Formula> subformulas(const Formula& f);
std::size_t modal_depth(const Formula& f);

std::set<std::string> atoms_of(const Formula& f);
std::set<std::string> modalities_of(const Formula& f);

// Minimal parenthesization; the output parses back to an equal formula.
std::string render(const Formula& f);
std::string render(const Conditional& c);

// Right-nested conjunction of the list; Top for an empty list.
Formula conjoin(const std::vector<Formula>& parts);

}  // namespace dmt

template <>
struct std::hash<dmt::Formula> {
  std::size_t operator()(const dmt::Formula& f) const noexcept { return f.hash(); }
};
