#ifndef LETTERNET_PRUNE_H_
#define LETTERNET_PRUNE_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "letternet/graph.h"

namespace letternet {

// min, max, mean and population standard deviation of a count distribution.
// All zero for an empty distribution.
struct DistributionSummary {
  std::size_t count = 0;
  std::uint64_t min = 0;
  std::uint64_t max = 0;
  double mean = 0.0;
  double sd = 0.0;
};

DistributionSummary summarize(std::span<const std::uint64_t> values);

// Selects elements whose count is strictly greater than a cutoff:
//   threshold(m): cutoff m
//   mean_sd(k):   cutoff mean + k * SD over the distribution being pruned
//                 (population SD)
class PruneRule {
 public:
  enum class Kind { kThreshold, kMeanSd };

  static PruneRule threshold(std::uint64_t min);
  // Throws std::invalid_argument for negative or non-finite k.
  static PruneRule mean_sd(double k);
  // "gtN" or "meanK", e.g. "gt2", "mean1.5". Throws Error otherwise.
  static PruneRule parse(std::string_view text);

  Kind kind() const { return kind_; }
  double parameter() const { return parameter_; }
  std::string to_string() const;

  // Cutoff for a concrete distribution.
  class Cutoff {
   public:
    bool admits(std::uint64_t value) const;
    double value() const { return value_; }

   private:
    friend class PruneRule;
    Kind kind_ = Kind::kThreshold;
    double value_ = 0.0;
    // Exact moments for kMeanSd: admit v iff n*v - sum > k * sqrt(n*sumsq - sum^2).
    std::uint64_t n_ = 0;
    std::uint64_t sum_ = 0;
    double k_sqrt_var_ = 0.0;
    std::uint64_t min_ = 0;
  };

  Cutoff cutoff(std::span<const std::uint64_t> values) const;

 private:
  PruneRule(Kind kind, double parameter) : kind_(kind), parameter_(parameter) {}
  Kind kind_;
  double parameter_;
};

struct PruneSpec {
  PruneRule node_rule = PruneRule::threshold(0);
  PruneRule edge_rule = PruneRule::threshold(0);
  bool drop_isolated = true;
};

// Keeps nodes above the node cutoff and edges above the edge cutoff (both
// computed once on the input graph), drops edges that lost an endpoint, then
// optionally drops nodes left without edges. The result is a subgraph of
// `graph`.
LexicalGraph prune(const LexicalGraph& graph, const PruneSpec& spec);

}  // namespace letternet

#endif  // LETTERNET_PRUNE_H_
