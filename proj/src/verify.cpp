#include "qspectra/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

#include "qspectra/bounds.hpp"
#include "qspectra/energy.hpp"
#include "qspectra/families.hpp"
#include "qspectra/spectral.hpp"
#include "qspectra/tolerance.hpp"

namespace qspectra {

namespace {

void lemma_failure(VerifySummary& out, const std::string& g6, std::string check,
                   std::string detail) {
  out.lemma_failures.push_back({g6, std::move(check), std::move(detail)});
}

void merge(VerifySummary& into, VerifySummary&& part) {
  into.graphs_checked += part.graphs_checked;
  into.bound_evaluations += part.bound_evaluations;
  into.connected_two_eigenvalue_graphs += part.connected_two_eigenvalue_graphs;
  into.connected_complete_graphs += part.connected_complete_graphs;
  auto append = [](auto& dst, auto& src) {
    dst.insert(dst.end(), std::make_move_iterator(src.begin()), std::make_move_iterator(src.end()));
  };
  append(into.violations, part.violations);
  append(into.lemma_failures, part.lemma_failures);
  append(into.equality_mismatches, part.equality_mismatches);
}

std::size_t resolve_workers(const VerifyOptions& options) {
  if (options.workers > 0) return options.workers;
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

// Runs `chunks` independent jobs on a pool and merges by chunk index.
template <typename Job>
VerifySummary run_chunks(std::size_t chunks, std::size_t workers, Job&& job) {
  std::vector<VerifySummary> parts(chunks);
  std::atomic<std::size_t> next{0};
  auto drain = [&] {
    for (std::size_t i = next++; i < chunks; i = next++) job(i, parts[i]);
  };
  workers = std::min(workers, std::max<std::size_t>(1, chunks));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(drain);
  drain();
  for (auto& t : pool) t.join();

  VerifySummary total;
  total.workers = workers;
  for (auto& p : parts) merge(total, std::move(p));
  return total;
}

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<VertexPair> edges;
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      if ((mask >> bit) & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace

void verify_graph(const Graph& g, VerifySummary& out) {
  ++out.graphs_checked;
  const GraphAnalysis a(g);
  const std::string g6 = to_graph6(g);

  if (!a.q.report.converged) lemma_failure(out, g6, "eigensolver", "did not converge");

  const SpectralFactReport facts = check_spectral_lemmas(g, a.stats, a.shape, a.q);
  for (const auto& c : facts.checks) {
    if (!c.applicable) continue;
    if (!c.holds || !c.equality_consistent) {
      lemma_failure(out, g6, std::string(to_string(c.fact)),
                    "lhs=" + std::to_string(c.lhs) + " rhs=" + std::to_string(c.rhs) +
                        (c.holds ? " equality flag inconsistent" : ""));
    }
  }

  const double n = static_cast<double>(a.stats.n);
  const double m = static_cast<double>(a.stats.m);
  const double expected_squares = 2.0 * m + static_cast<double>(a.stats.zagreb_m1) - 4.0 * m * m / n;
  if (std::fabs(a.gamma.sum_squares() - expected_squares) > 1e-7 * n * tolerance_scale())
    lemma_failure(out, g6, "gamma-sum-squares", std::to_string(a.gamma.sum_squares()));
  if (a.stats.m > 0 &&
      std::fabs(a.gamma.gamma1 + a.stats.average_degree() - a.q.largest()) >
          tol::multiset(a.q.spectral_radius()))
    lemma_failure(out, g6, "gamma1-from-spectral-radius", std::to_string(a.gamma.gamma1));

  if (a.shape.connected && a.stats.n >= 2) {
    const bool two = a.q.distinct_count() == 2;
    const bool complete = is_complete(g);
    out.connected_two_eigenvalue_graphs += two ? 1 : 0;
    out.connected_complete_graphs += complete ? 1 : 0;
    if (two != complete)
      lemma_failure(out, g6, "two-distinct-q-eigenvalues-iff-complete",
                    "distinct=" + std::to_string(a.q.distinct_count()));
  }

  for (BoundId id : kAllBounds) {
    const BoundResult b = evaluate_bound(a, id);
    if (!b.applicable) continue;
    ++out.bound_evaluations;
    if (b.violated(a.qe)) out.violations.push_back({g6, std::string(to_string(id)), b.gap});
    if (!b.equality.consistent && b.equality.condition_met) {
      out.equality_mismatches.push_back(
          {g6, std::string(to_string(id)), b.equality.tight, *b.equality.condition_met});
    }
  }
}

VerifySummary verify_exhaustive(std::size_t max_n, VerifyOptions options) {
  if (max_n == 0 || max_n > kMaxExhaustiveOrder)
    throw std::invalid_argument("max_n must be in 1.." + std::to_string(kMaxExhaustiveOrder));
  const auto started = std::chrono::steady_clock::now();

  constexpr std::uint64_t kChunk = 1024;
  struct Span {
    std::size_t n;
    std::uint64_t begin, end;
  };
  std::vector<Span> spans;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t lo = 0; lo < total; lo += kChunk)
      spans.push_back({n, lo, std::min(total, lo + kChunk)});
  }

  VerifySummary summary =
      run_chunks(spans.size(), resolve_workers(options), [&](std::size_t i, VerifySummary& out) {
        for (std::uint64_t mask = spans[i].begin; mask < spans[i].end; ++mask)
          verify_graph(graph_from_mask(spans[i].n, mask), out);
      });
  summary.max_n = max_n;
  summary.labeled_graphs_at_max_order = std::size_t{1} << (max_n * (max_n - 1) / 2);
  summary.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return summary;
}

std::vector<Graph> random_graphs(std::size_t count, std::uint64_t seed, std::size_t min_n,
                                 std::size_t max_n) {
  if (min_n == 0 || min_n > max_n) throw std::invalid_argument("need 1 <= min_n <= max_n");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> order(min_n, max_n);
  std::uniform_int_distribution<int> density(0, 2);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  constexpr double kProbabilities[3] = {0.2, 0.5, 0.8};

  std::vector<Graph> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = order(rng);
    const double p = kProbabilities[density(rng)];
    std::vector<VertexPair> edges;
    for (Vertex j = 1; j < n; ++j)
      for (Vertex i = 0; i < j; ++i)
        if (coin(rng) < p) edges.emplace_back(i, j);
    out.push_back(Graph::from_edges(n, edges));
  }
  return out;
}

VerifySummary verify_sampled(std::size_t count, std::uint64_t seed, std::size_t min_n,
                             std::size_t max_n, VerifyOptions options) {
  const auto started = std::chrono::steady_clock::now();
  const std::vector<Graph> graphs = random_graphs(count, seed, min_n, max_n);
  constexpr std::size_t kChunk = 64;
  const std::size_t chunks = (graphs.size() + kChunk - 1) / kChunk;
  VerifySummary summary =
      run_chunks(chunks, resolve_workers(options), [&](std::size_t i, VerifySummary& out) {
        const std::size_t end = std::min(graphs.size(), (i + 1) * kChunk);
        for (std::size_t k = i * kChunk; k < end; ++k) verify_graph(graphs[k], out);
      });
  summary.max_n = max_n;
  summary.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return summary;
}

}  // namespace qspectra
