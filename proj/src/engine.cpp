#include "dmt/engine.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "dmt/model_io.hpp"
#include "dmt/parser.hpp"

namespace dmt {

KnowledgeBase parse_kb(std::string_view text) {
  KnowledgeBase kb;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    const std::string_view line =
        text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    ++line_no;
    const std::string_view code = line.substr(0, line.find('#'));
    if (code.find_first_not_of(" \t\r") != std::string_view::npos) {
      try {
        kb.formulas.push_back(parse_formula(code));
      } catch (const ParseError& e) {
        throw ParseError(line_no, e.column(), e.expected(), e.found());
      }
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return kb;
}

KnowledgeBase load_kb(const std::string& path) { return parse_kb(read_text_file(path)); }

ValidityResult is_valid(const Formula& f, const tableau::Options& options) {
  ValidityResult r;
  r.verdict = tableau::decide(Formula::negation(f), options);
  r.valid = !r.verdict.is_open();
  if (!r.valid) r.countermodel = Countermodel{*r.verdict.model, tableau::world_name({0})};
  return r;
}

std::optional<Countermodel> countermodel(const Formula& f, const tableau::Options& options) {
  return is_valid(f, options).countermodel;
}

Formula box_closure(const KnowledgeBase& kb, const std::vector<std::string>& modalities,
                    std::size_t depth) {
  Formula c = kb.formulas.empty() ? Formula::top() : conjoin(kb.formulas);
  for (std::size_t j = 0; j < depth; ++j) {
    std::vector<Formula> parts{c};
    for (const auto& m : modalities) parts.push_back(Formula::box(m, c));
    c = conjoin(parts);
  }
  return c;
}

namespace {

// Bounded search for a model of the KB that falsifies f at some world.
std::optional<Countermodel> oracle_countermodel(const KnowledgeBase& kb, const Formula& f,
                                                std::uint64_t budget) {
  std::vector<Formula> all = kb.formulas;
  all.push_back(f);
  ModelSignature sig = signature_of(all, kDefaultWorldCap);
  while (sig.max_worlds > 0) {
    try {
      if (ModelSpace(sig).size() <= budget) break;
    } catch (const OracleError&) {
      // too large even to index; try fewer worlds
    }
    --sig.max_worlds;
  }
  if (sig.max_worlds == 0) return std::nullopt;

  const ModelSpace space(sig);
  std::vector<CompiledFormula> kb_compiled;
  for (const auto& k : kb.formulas) kb_compiled.emplace_back(k, sig);
  const CompiledFormula query(f, sig);
  auto hit = oracle::first_hit(space, [&](const CompactModel& m) {
    const Mask all_worlds = m.all();
    for (const auto& k : kb_compiled) {
      if (k.extension(m) != all_worlds) return -1;
    }
    const Mask failing = ~query.extension(m) & all_worlds;
    return failing == 0 ? -1 : std::countr_zero(failing);
  });
  if (!hit) return std::nullopt;
  PreferentialModel model = space.model(hit->index);
  std::string world = model.world_name(hit->world);
  return Countermodel{std::move(model), std::move(world)};
}

bool certifies(const KnowledgeBase& kb, const Formula& f, const Countermodel& cm) {
  return satisfies_kb_globally(cm.model, kb.formulas) && !holds_at(cm.model, cm.world, f);
}

}  // namespace

EntailmentVerdict global_entails(const KnowledgeBase& kb, const Formula& f, std::size_t max_depth,
                                 const EntailmentOptions& options) {
  const std::size_t start = modal_depth(f);
  if (max_depth < start) {
    throw std::invalid_argument("max depth " + std::to_string(max_depth) +
                                " is below the modal depth " + std::to_string(start) +
                                " of the query");
  }
  std::set<std::string> mods = modalities_of(f);
  for (const auto& k : kb.formulas) mods.merge(modalities_of(k));
  const std::vector<std::string> relevant(mods.begin(), mods.end());

  bool oracle_tried = false;
  EntailmentVerdict v;
  for (std::size_t d = start; d <= max_depth; ++d) {
    v.depth = d;
    const Formula probe = Formula::conjunction(box_closure(kb, relevant, d), Formula::negation(f));
    const tableau::Verdict t = tableau::decide(probe, options.tableau);
    if (!t.is_open()) {
      v.kind = EntailmentVerdict::Kind::Entailed;
      return v;
    }
    Countermodel candidate{*t.model, tableau::world_name({0})};
    if (certifies(kb, f, candidate)) {
      v.kind = EntailmentVerdict::Kind::NotEntailed;
      v.countermodel = std::move(candidate);
      return v;
    }
    if (!oracle_tried) {
      oracle_tried = true;
      if (auto cm = oracle_countermodel(kb, f, options.oracle_budget)) {
        if (!certifies(kb, f, *cm)) throw std::logic_error("oracle countermodel does not verify");
        v.kind = EntailmentVerdict::Kind::NotEntailed;
        v.countermodel = std::move(cm);
        v.from_oracle = true;
        return v;
      }
    }
  }
  v.kind = EntailmentVerdict::Kind::Unknown;
  return v;
}

std::vector<Conditional> kb_to_conditionals(const KnowledgeBase& kb) {
  std::vector<Conditional> out;
  out.reserve(kb.formulas.size());
  for (const auto& a : kb.formulas) out.push_back({Formula::negation(a), Formula::bottom()});
  return out;
}

}  // namespace dmt
