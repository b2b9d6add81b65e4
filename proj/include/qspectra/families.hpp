#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qspectra/energy.hpp"
#include "qspectra/graph.hpp"
#include "qspectra/spectral.hpp"

namespace qspectra {

// --- structural matching ----------------------------------------------------
//
// No isomorphism test is run anywhere. "G is X" means: same order and size,
// same sorted degree sequence, same multiset of (component order, size,
// bipartite) triples, and Q-spectra equal within the multiset tolerance.
// For the families used here (complete, complete bipartite, stars,
// matchings, crowns and disjoint unions of them) these data pin the graph.

bool structurally_matches(const Graph& g, const Graph& reference);
bool matches_family(const Graph& g, const FamilySpec& spec);

// Family predicates used by the equality diagnoses.
bool is_complete(const Graph& g);
bool is_star(const Graph& g);                       // K_{1,n-1}, n >= 2
bool is_complete_bipartite(const Graph& g, std::size_t a, std::size_t b);
bool is_balanced_complete_bipartite(const Graph& g);  // K_{n/2,n/2}
bool is_perfect_matching_graph(const Graph& g);       // (n/2) K_2
bool is_crown(const Graph& g);                        // K_{n/2,n/2} minus a perfect matching
/// g K_{r+1} u h (K_{r+1,r+1} - F) with r = 2m/n >= 2 and g + h >= 1.
bool is_complete_crown_union(const Graph& g);

// --- regular Q-spectrum patterns -------------------------------------------

struct QPattern {
  enum class Prediction { None, Crown, Complete, CompleteCrownUnion };

  std::size_t r = 0;
  std::size_t count_2r = 0;        // s'
  std::size_t count_r_plus_1 = 0;  // a
  std::size_t count_r_minus_1 = 0; // b
  std::size_t count_zero = 0;      // s - s'
  std::vector<double> residue;     // eigenvalues near none of 2r, r+1, r-1, 0

  Prediction prediction = Prediction::None;
  std::size_t complete_copies = 0;  // g
  std::size_t crown_copies = 0;     // h
  bool arithmetic_consistent = false;  // a, b, s, r relations of the matching pattern
  bool verified = false;               // prediction matched against the graph itself
  std::string note;

  std::size_t s() const { return count_2r + count_zero; }
};

std::string_view to_string(QPattern::Prediction p);

/// Pattern of a regular graph of degree r >= 2; nullopt otherwise.
std::optional<QPattern> classify_q_pattern(const Graph& g);

// --- strongly regular graphs ----------------------------------------------

struct SrgParams {
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t a = 0;  // common neighbours of adjacent pairs
  std::size_t c = 0;  // common neighbours of non-adjacent pairs
};

struct SrgDetection {
  std::optional<SrgParams> params;
  bool is_s_nr = false;  // a = c = r(r-1)/(n-1)
  // Connected, regular, exactly three distinct adjacency eigenvalues.
  bool three_eigenvalue_criterion = false;
};

/// Combinatorial check over all vertex pairs. Complete and edgeless graphs
/// are not reported as strongly regular (one of a, c would be undefined).
SrgDetection detect_srg(const Graph& g);

// --- prisms and cubic graphs -----------------------------------------------

/// Smallest gamma of C_n x P_2 in closed form. Throws std::invalid_argument for n < 3.
double prism_gamma_min(std::size_t n);

struct PrismBounds {
  double lower = 0.0;
  double upper = 0.0;
  std::string lower_case;  // "n%3==0", "n%6 in {1,2}", "n%6 in {4,5}"
};

/// Bounds on QE(C_n x P_2) for cycle length n >= 3.
PrismBounds prism_bounds(std::size_t n);

struct CubicBounds {
  double lower = 0.0;
  double upper = 0.0;
  double gamma_min = 0.0;
  std::string lower_case;  // "gamma=0", "0<gamma<1", "gamma>=1"
};

/// Throws std::invalid_argument unless g is 3-regular.
CubicBounds cubic_bounds(const Graph& g);
CubicBounds cubic_bounds(const Graph& g, const GammaSequence& gamma);

}  // namespace qspectra
