#include "matchgadget/jump.hpp"

#include <algorithm>

namespace matchgadget {

HaltingOracle oracle_from_table(std::vector<OracleEntry> table) {
  for (const OracleEntry& row : table) {
    if (!std::all_of(row.prefix.begin(), row.prefix.end(), [](char ch) { return ch == '0' || ch == '1'; })) {
      throw Error(ErrorCode::MalformedInput, "oracle prefix must be a 0/1 string: \"" + row.prefix + "\"");
    }
  }
  return [table = std::move(table)](std::size_t e, const std::vector<bool>& sigma, std::size_t steps) {
    for (const OracleEntry& row : table) {
      if (row.e != e || row.min_steps > steps || row.prefix.size() > sigma.size()) continue;
      bool extends = true;
      for (std::size_t j = 0; j < row.prefix.size() && extends; ++j) extends = (row.prefix[j] == '1') == sigma[j];
      if (extends) return true;
    }
    return false;
  };
}

CodingGraph compile_jump_query(std::span<const CodingGraph> context, std::size_t e, const HaltingOracle& oracle,
                               std::size_t bound) {
  const std::size_t n = context.size();
  if (n > kMaxJumpContext) {
    throw Error(ErrorCode::ContextTooLarge, "jump context of " + std::to_string(n) + " bits exceeds " +
                                                std::to_string(kMaxJumpContext));
  }
  if (bound == 0) throw Error(ErrorCode::PreconditionViolated, "step bound must be at least 1");

  std::vector<CodingGraph> negated;
  negated.reserve(n);
  for (const CodingGraph& g : context) negated.push_back(compile_not(g));

  // Antecedents depend only on sigma, so build them once.
  std::vector<CodingGraph> antecedents;
  std::vector<std::vector<bool>> sigmas;
  for (std::size_t code = 0; code < (std::size_t{1} << n); ++code) {
    std::vector<bool> sigma(n);
    for (std::size_t j = 0; j < n; ++j) sigma[j] = (code >> (n - 1 - j)) & 1U;
    std::optional<CodingGraph> ante;
    for (std::size_t j = 0; j < n; ++j) {
      const CodingGraph& literal = sigma[j] ? context[j] : negated[j];
      ante = ante ? compile_connective(Connective::And, *ante, literal) : literal;
    }
    antecedents.push_back(ante ? *ante : compile_true());
    sigmas.push_back(std::move(sigma));
  }

  std::vector<CodingGraph> per_step;
  for (std::size_t step = 0; step < bound; ++step) {
    std::optional<CodingGraph> conjunction;
    for (std::size_t s = 0; s < sigmas.size(); ++s) {
      CodingGraph leaf = compile_constant(oracle(e, sigmas[s], step));
      CodingGraph clause = compile_connective(Connective::Implies, antecedents[s], leaf);
      conjunction = conjunction ? compile_connective(Connective::And, *conjunction, clause) : clause;
    }
    per_step.push_back(std::move(*conjunction));
  }
  return compile_exists(per_step);
}

std::vector<SetCoding> jump_hierarchy(const std::vector<bool>& x0, std::size_t levels, const HaltingOracle& oracle,
                                      std::size_t width, std::size_t bound) {
  std::vector<SetCoding> out;
  std::vector<CodingGraph> current;
  for (bool bit : x0) current.push_back(compile_constant(bit));
  out.push_back(compile_set(current));
  for (std::size_t level = 0; level < levels; ++level) {
    std::vector<CodingGraph> next;
    for (std::size_t e = 0; e < width; ++e) next.push_back(compile_jump_query(current, e, oracle, bound));
    current = std::move(next);
    out.push_back(compile_set(current));
  }
  return out;
}

}  // namespace matchgadget
