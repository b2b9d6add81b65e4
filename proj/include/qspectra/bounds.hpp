#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qspectra/energy.hpp"
#include "qspectra/graph.hpp"
#include "qspectra/spectral.hpp"

namespace qspectra {

enum class BoundId {
  LowerGan1,   // L-GAN1
  LowerGan2,   // L-GAN2
  LowerGan3,   // L-GAN3
  LowerGan4,   // L-GAN4
  LowerGan5,   // L-GAN5
  LowerThm1,   // L-THM1
  LowerCor4,   // L-COR4
  LowerCor5,   // L-COR5
  LowerThm2,   // L-THM2
  LowerCor2,   // L-COR2
  LowerCor3,   // L-COR3
  UpperAbr1,   // U-ABR1
  UpperAbr2,   // U-ABR2
  UpperLi,     // U-LI
  UpperGan,    // U-GAN
  UpperThm3,   // U-THM3
  UpperCor6,   // U-COR6
  UpperCor7,   // U-COR7
};

inline constexpr std::array<BoundId, 18> kAllBounds = {
    BoundId::LowerGan1, BoundId::LowerGan2, BoundId::LowerGan3, BoundId::LowerGan4,
    BoundId::LowerGan5, BoundId::LowerThm1, BoundId::LowerCor4, BoundId::LowerCor5,
    BoundId::LowerThm2, BoundId::LowerCor2, BoundId::LowerCor3, BoundId::UpperAbr1,
    BoundId::UpperAbr2, BoundId::UpperLi,   BoundId::UpperGan,  BoundId::UpperThm3,
    BoundId::UpperCor6, BoundId::UpperCor7,
};

class UnknownBoundError : public std::invalid_argument {
 public:
  explicit UnknownBoundError(const std::string& name)
      : std::invalid_argument("unknown bound id: " + name) {}
};

std::string_view to_string(BoundId id);
/// Throws UnknownBoundError.
BoundId bound_from_string(std::string_view name);

enum class Direction { Lower, Upper };
enum class Strictness { NonStrict, Strict };

std::string_view to_string(Direction d);
std::string_view to_string(Strictness s);

__extension__ typedef __int128 Int128;

/// c = m(n^3 - n^2 - 2mn + 4m), kept exact.
struct CParameter {
  Int128 c = 0;
  double sqrt_c = 0.0;
  double sqrt_c_over_n = 0.0;
  double sqrt_c_over_2n = 0.0;
  double sqrt_c_over_n3 = 0.0;
};

CParameter c_parameter(std::size_t n, std::size_t m);
std::string int128_to_string(Int128 v);

struct EqualityDiagnosis {
  bool tight = false;                  // |gap| within the bound tolerance
  std::string condition;               // extremal family as stated, empty when none is stated
  std::optional<bool> condition_met;   // none when no condition is stated
  bool consistent = true;
  bool near_tight_but_strict = false;  // tight, although the bound is stated strict
};

struct BoundResult {
  BoundId id{};
  Direction direction = Direction::Lower;
  Strictness strictness = Strictness::NonStrict;
  bool applicable = false;
  std::string reason;  // failed hypothesis when not applicable
  double value = 0.0;
  double gap = 0.0;  // QE - value (lower), value - QE (upper)
  std::string case_label;
  std::optional<VertexPair> selected_pair;
  std::optional<double> pair_min;  // over all valid vertex pairs, n <= 20
  std::optional<double> pair_max;
  // Alternative readings of the same formula, e.g. the general case of a
  // bound that has a bipartite special case.
  std::vector<std::pair<std::string, double>> variants;
  EqualityDiagnosis equality;

  /// Applicable and beyond the tolerance on the wrong side of QE.
  bool violated(double qe) const;
};

/// Everything a bound formula reads, computed once per graph.
struct GraphAnalysis {
  explicit GraphAnalysis(Graph graph);

  Graph g;
  DegreeStats stats;
  Structure shape;
  Spectrum q;
  GammaSequence gamma;
  double qe = 0.0;
  CParameter c;
};

BoundResult evaluate_bound(const GraphAnalysis& a, BoundId id);
BoundResult evaluate_bound(const Graph& g, BoundId id);

/// Every catalog entry, in catalog order.
std::vector<BoundResult> all_bounds(const GraphAnalysis& a);
std::vector<BoundResult> all_bounds(const Graph& g);

}  // namespace qspectra
