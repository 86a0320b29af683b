#pragma once

// Oriented rewrite rules for the defining ideal J of the enveloping
// algebra, normal forms, compositions and completion.

#include "dgenv/free_algebra.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace dgenv {

class Presentation;

enum class RuleOrigin : std::uint8_t { BaseX, BaseY, BaseZ, Ideal, PsiIdeal, Completion };
const char* to_string(RuleOrigin o);

enum class CompositionKind : std::uint8_t { Intersection, Inclusion };
const char* to_string(CompositionKind k);

/// Where a completion rule came from: w = lead(p)*b = a*lead(q) for an
/// intersection, w = lead(p) = a*lead(q)*b for an inclusion.
struct Provenance {
  Word p, q, w, a, b;
  CompositionKind kind = CompositionKind::Intersection;
};

/// lead -> tail, standing for the monic element lead - tail of J.
struct RewriteRule {
  Word lead;
  NCPolynomial tail;
  RuleOrigin origin = RuleOrigin::BaseX;
  std::optional<Provenance> provenance;

  NCPolynomial relation() const { return NCPolynomial::word(lead) - tail; }
};

enum class Strategy {
  /// The leftmost occurrence of the smallest applicable lead.
  LeftmostSmallest,
  /// The occurrence starting furthest right.
  RightmostFirst,
};

struct TraceStep {
  RuleOrigin origin;
  Word rewritten;
  Word lead;
  std::size_t position;
  /// Leading word of the whole expression after the step, empty if zero.
  std::optional<Word> result_lead;
};

struct ReductionTrace {
  std::vector<TraceStep> steps;
  std::string to_text(const Signature& sig) const;
};

struct CompositionEntry {
  Word p, q, w, a, b;
  CompositionKind kind;
  NCPolynomial value;
  NCPolynomial reduced;
};

struct CompositionReport {
  std::vector<CompositionEntry> entries;
  /// Compositions not examined because their degree exceeded a bound.
  std::size_t skipped_above_bound = 0;

  bool closed() const;
  std::string to_text(const Signature& sig) const;
};

struct CompletionReport {
  std::size_t rounds = 0;
  std::vector<Word> added;
  std::size_t skipped_above_bound = 0;
  /// Rules added in the final productive round whose lead sits at the bound.
  std::size_t new_rules_at_cap = 0;
  int bound = 0;
};

class RuleSystem {
 public:
  RuleSystem() = default;
  explicit RuleSystem(FreeAlgebra fa) : fa_(std::move(fa)) {}
  RuleSystem(const RuleSystem& o);
  RuleSystem& operator=(const RuleSystem& o);

  const FreeAlgebra& algebra() const { return fa_; }
  const Signature& signature() const { return fa_.signature(); }
  /// Sorted by origin, then lead.
  const std::vector<RewriteRule>& rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }
  const RewriteRule* rule_for(const Word& lead) const;

  /// Throws std::logic_error if the lead is taken or some tail term is
  /// not below the lead.
  void add(RewriteRule rule);
  /// Normalizes p, then adds it as a monic rule.  Returns false when p
  /// reduces to zero.
  bool add_relation(const NCPolynomial& p, RuleOrigin origin,
                    std::optional<Provenance> provenance = std::nullopt);

  bool is_reducible(std::span<const Letter> w) const;

  NCPolynomial normal_form(const NCPolynomial& p, Strategy strategy = Strategy::LeftmostSmallest,
                           ReductionTrace* trace = nullptr) const;
  NCPolynomial normal_form(const Word& w) const;

  CompositionReport compositions(std::optional<int> max_degree = std::nullopt) const;
  bool is_closed(CompositionReport* report = nullptr) const;

  /// Adds reduced compositions until none of degree <= bound is left.
  /// Requires positive letter degrees and bound >= every lead degree.
  CompletionReport complete(int bound);

  /// PBW-shaped words of degree <= bound containing no lead, sorted.
  std::vector<Word> standard_monomials(int bound) const;

 private:
  struct Match {
    const RewriteRule* rule;
    std::size_t position;
  };
  std::optional<Match> find_match(std::span<const Letter> w, Strategy strategy) const;
  NCPolynomial cached_normal_form(const Word& w) const;
  void rebuild_index();

  FreeAlgebra fa_;
  std::vector<RewriteRule> rules_;
  std::map<Letter, std::vector<std::size_t>> index_;
  std::size_t max_lead_length_ = 0;

  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<Word, NCPolynomial, WordHash> cache_;
};

/// The relations x_ij, y_ij, z_ij oriented by the word order, with the
/// diagonal rules for odd generators.
RuleSystem base_rules(const Presentation& pres);
/// Base rules plus the normalized images of I and psi(I).
RuleSystem quotient_rules(const Presentation& pres);

}  // namespace dgenv
