#include "matchgadget/verifier.hpp"

#include <algorithm>
#include <memory>

#include "matchgadget/matching.hpp"

namespace matchgadget {

UniquenessReport verify_unique_pm(const Graph& g, std::size_t cap, bool full_count) {
  std::size_t limit = full_count ? cap : std::min<std::size_t>(cap, 2);
  PerfectMatchingCount counted = count_perfect_matchings(g, limit);
  if (full_count && counted.capped) {
    throw Error(ErrorCode::CapExceeded, "at least " + std::to_string(cap) + " perfect matchings");
  }
  UniquenessReport report;
  report.count = counted.count;
  if (counted.count == 1) report.matching = std::move(counted.first);
  return report;
}

bool decode_truth(const CodingGraph& g, const Matching& m) {
  bool via_l = m.contains(g.true_edge());
  bool via_r = m.contains(g.false_edge());
  if (via_l == via_r) {
    throw Error(ErrorCode::MalformedCodingGraph,
                via_l ? "both l and r match into the interior" : "neither l nor r matches into the interior");
  }
  return via_l;
}

bool decode_coding_graph(const CodingGraph& g) {
  UniquenessReport u = verify_unique_pm(g.graph());
  if (u.count != 1) {
    throw Error(ErrorCode::MalformedCodingGraph,
                "expected a unique perfect matching, found " + std::string(u.count == 0 ? "none" : "several"));
  }
  return decode_truth(g, *u.matching);
}

std::vector<bool> decode_set(const SetCoding& s) {
  std::vector<bool> out;
  out.reserve(s.components.size());
  for (const CodingGraph& g : s.components) out.push_back(decode_coding_graph(g));
  return out;
}

bool eval_formula(const Formula& f, std::span<const bool> env) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::True: return true;
    case K::Atom:
      if (f.atom >= env.size()) throw Error(ErrorCode::UnboundAtom, "atom @" + std::to_string(f.atom) + " is unbound");
      return env[f.atom];
    case K::Not: return !eval_formula(f.children.at(0), env);
    case K::And: return eval_formula(f.children.at(0), env) && eval_formula(f.children.at(1), env);
    case K::Or: return eval_formula(f.children.at(0), env) || eval_formula(f.children.at(1), env);
    case K::Implies: return !eval_formula(f.children.at(0), env) || eval_formula(f.children.at(1), env);
    case K::AndNot: return !eval_formula(f.children.at(0), env) && eval_formula(f.children.at(1), env);
    case K::Exists: {
      if (f.children.empty()) throw Error(ErrorCode::EmptyList, "existential over an empty list");
      bool any = false;
      for (const Formula& c : f.children) any = eval_formula(c, env) || any;
      return any;
    }
  }
  return false;
}

bool eval_formula(const Formula& f, const std::vector<bool>& env) {
  std::unique_ptr<bool[]> bits(new bool[env.size()]);
  std::copy(env.begin(), env.end(), bits.get());
  return eval_formula(f, std::span<const bool>(bits.get(), env.size()));
}

RoundtripReport roundtrip_check(const Formula& f, const std::vector<bool>& env) {
  std::vector<CodingGraph> atoms;
  atoms.reserve(env.size());
  for (bool b : env) atoms.push_back(compile_constant(b));
  CodingGraph g = compile_formula(f, atoms);
  RoundtripReport report;
  report.eval = eval_formula(f, env);
  UniquenessReport u = verify_unique_pm(g.graph());
  report.pm_count = u.count;
  if (u.count == 1) report.decoded = decode_truth(g, *u.matching);
  report.agree = report.decoded.has_value() && *report.decoded == report.eval;
  return report;
}

std::vector<RoundtripReport> verify_corpus(std::span<const FormulaCase> corpus) {
  std::vector<RoundtripReport> out(corpus.size());
  std::vector<std::exception_ptr> errors(corpus.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(corpus.size()); ++i) {
    try {
      out[i] = roundtrip_check(corpus[i].formula, corpus[i].env);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

namespace reference {

std::vector<RoundtripReport> verify_corpus(std::span<const FormulaCase> corpus) {
  std::vector<RoundtripReport> out;
  out.reserve(corpus.size());
  for (const FormulaCase& c : corpus) out.push_back(roundtrip_check(c.formula, c.env));
  return out;
}

}  // namespace reference

}  // namespace matchgadget
