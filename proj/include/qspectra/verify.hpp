#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qspectra/graph.hpp"

namespace qspectra {

struct Violation {
  std::string graph6;
  std::string bound_id;
  double gap = 0.0;
};

struct LemmaFailure {
  std::string graph6;
  std::string check;
  std::string detail;
};

/// A tight bound whose stated extremal condition fails, or the reverse.
/// Informational: the cited characterizations are known to be incomplete.
struct EqualityMismatch {
  std::string graph6;
  std::string bound_id;
  bool tight = false;
  bool condition_met = false;
};

struct VerifySummary {
  std::size_t max_n = 0;
  std::size_t graphs_checked = 0;
  std::size_t labeled_graphs_at_max_order = 0;  // exhaustive runs only
  std::size_t bound_evaluations = 0;
  std::size_t connected_two_eigenvalue_graphs = 0;
  std::size_t connected_complete_graphs = 0;
  std::vector<Violation> violations;
  std::vector<LemmaFailure> lemma_failures;
  std::vector<EqualityMismatch> equality_mismatches;
  double wall_seconds = 0.0;
  std::size_t workers = 1;

  bool clean() const { return violations.empty() && lemma_failures.empty(); }
};

struct VerifyOptions {
  std::size_t workers = 0;  // 0: one per hardware thread
};

inline constexpr std::size_t kMaxExhaustiveOrder = 7;

/// Every labeled graph on 1..max_n vertices. Throws std::invalid_argument
/// when max_n is 0 or above kMaxExhaustiveOrder.
VerifySummary verify_exhaustive(std::size_t max_n, VerifyOptions options = {});

/// `count` random graphs, order uniform in [min_n, max_n], edge probability
/// drawn from {0.2, 0.5, 0.8}; reproducible for a given seed.
VerifySummary verify_sampled(std::size_t count, std::uint64_t seed, std::size_t min_n,
                             std::size_t max_n, VerifyOptions options = {});

std::vector<Graph> random_graphs(std::size_t count, std::uint64_t seed, std::size_t min_n,
                                 std::size_t max_n);

/// Runs every per-graph check on one graph and folds the findings into `out`.
void verify_graph(const Graph& g, VerifySummary& out);

}  // namespace qspectra
