#include "letternet/prune.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>

#include "letternet/diagnostics.h"

namespace letternet {

namespace {

struct Moments {
  std::uint64_t n = 0;
  std::uint64_t sum = 0;
  // n * sum of squares - sum^2, i.e. n^2 times the population variance.
  unsigned __int128 scaled_var = 0;
};

Moments moments(std::span<const std::uint64_t> values) {
  Moments m;
  unsigned __int128 sumsq = 0;
  for (std::uint64_t v : values) {
    ++m.n;
    m.sum += v;
    sumsq += static_cast<unsigned __int128>(v) * v;
  }
  const auto sum = static_cast<unsigned __int128>(m.sum);
  m.scaled_var = m.n * sumsq - sum * sum;
  return m;
}

}  // namespace

DistributionSummary summarize(std::span<const std::uint64_t> values) {
  DistributionSummary s;
  if (values.empty()) return s;
  const Moments m = moments(values);
  s.count = values.size();
  s.min = *std::min_element(values.begin(), values.end());
  s.max = *std::max_element(values.begin(), values.end());
  s.mean = static_cast<double>(m.sum) / static_cast<double>(m.n);
  s.sd = std::sqrt(static_cast<double>(m.scaled_var)) / static_cast<double>(m.n);
  return s;
}

PruneRule PruneRule::threshold(std::uint64_t min) {
  return PruneRule(Kind::kThreshold, static_cast<double>(min));
}

PruneRule PruneRule::mean_sd(double k) {
  if (!std::isfinite(k) || k < 0.0) throw std::invalid_argument("mean_sd factor must be >= 0");
  return PruneRule(Kind::kMeanSd, k);
}

PruneRule PruneRule::parse(std::string_view text) {
  auto fail = [&] {
    return Error("bad prune rule '" + std::string(text) + "' (expected gtN or meanK)");
  };
  if (text.starts_with("gt")) {
    const std::string_view digits = text.substr(2);
    std::uint64_t min = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), min);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) throw fail();
    return threshold(min);
  }
  if (text.starts_with("mean")) {
    const std::string number(text.substr(4));
    std::size_t used = 0;
    double k = 0.0;
    try {
      k = std::stod(number, &used);
    } catch (const std::exception&) {
      throw fail();
    }
    if (used != number.size() || !std::isfinite(k) || k < 0.0) throw fail();
    return mean_sd(k);
  }
  throw fail();
}

std::string PruneRule::to_string() const {
  if (kind_ == Kind::kThreshold) return fmt::format("gt{}", static_cast<std::uint64_t>(parameter_));
  return fmt::format("mean{}", parameter_);
}

PruneRule::Cutoff PruneRule::cutoff(std::span<const std::uint64_t> values) const {
  Cutoff c;
  c.kind_ = kind_;
  if (kind_ == Kind::kThreshold) {
    c.min_ = static_cast<std::uint64_t>(parameter_);
    c.value_ = parameter_;
    return c;
  }
  const Moments m = moments(values);
  c.n_ = m.n;
  c.sum_ = m.sum;
  c.k_sqrt_var_ = parameter_ * std::sqrt(static_cast<double>(m.scaled_var));
  c.value_ = m.n == 0 ? 0.0 : (static_cast<double>(m.sum) + c.k_sqrt_var_) / static_cast<double>(m.n);
  return c;
}

bool PruneRule::Cutoff::admits(std::uint64_t value) const {
  if (kind_ == Kind::kThreshold) return value > min_;
  // value > sum/n + k*sqrt(var)  <=>  n*value - sum > k * sqrt(n^2 var).
  // The left side is an exact integer, so ties at the cutoff are decided
  // without rounding whenever n^2 var is a perfect square.
  const auto lhs = static_cast<__int128>(n_) * value - static_cast<__int128>(sum_);
  return static_cast<double>(lhs) > k_sqrt_var_;
}

LexicalGraph prune(const LexicalGraph& graph, const PruneSpec& spec) {
  std::vector<std::uint64_t> freqs;
  freqs.reserve(graph.node_count());
  for (const auto& [node, f] : graph.nodes()) freqs.push_back(f);
  std::vector<std::uint64_t> weights;
  weights.reserve(graph.edge_count());
  for (const auto& [edge, w] : graph.edges()) weights.push_back(w);

  const PruneRule::Cutoff node_cut = spec.node_rule.cutoff(freqs);
  const PruneRule::Cutoff edge_cut = spec.edge_rule.cutoff(weights);

  LexicalGraph kept_nodes;
  for (const auto& [node, f] : graph.nodes()) {
    if (node_cut.admits(f)) kept_nodes.add_node(node, f);
  }
  std::vector<std::pair<EdgeKey, std::uint64_t>> kept_edges;
  std::map<LexKey, bool> touched;
  for (const auto& [edge, w] : graph.edges()) {
    if (!edge_cut.admits(w)) continue;
    if (!kept_nodes.contains(edge.source) || !kept_nodes.contains(edge.target)) continue;
    kept_edges.emplace_back(edge, w);
    touched[edge.source] = true;
    touched[edge.target] = true;
  }

  LexicalGraph out;
  for (const auto& [node, f] : kept_nodes.nodes()) {
    if (!spec.drop_isolated || touched.contains(node)) out.add_node(node, f);
  }
  for (const auto& [edge, w] : kept_edges) out.add_edge(edge, w);
  return out;
}

}  // namespace letternet
