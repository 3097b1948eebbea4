#pragma once

#include <complex>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tangleinv/diagram.hpp"
#include "tangleinv/enhanced.hpp"
#include "tangleinv/laurent.hpp"

namespace tangleinv {

enum class KinkSign { Positive, Negative };

/// Adds a one-crossing curl on the edge `label`. A positive curl scales the
/// bracket by -q^3, a negative one by -q^-3. Circles may be curled; thick
/// edges may not.
TangleDiagram insert_kink(const TangleDiagram& d, Label label, KinkSign sign);

/// Two darts bounding a common face; each dart runs from one occurrence of
/// its label (u, w) to the other (v, x).
struct SpliceSite {
  Dart first;
  Dart second;
};

/// Cuts both edges of the site and glues in a (2,2) pattern: bottom 1 to v,
/// top 1 to u, bottom 2 to w, top 2 to x. With the face on the left of both
/// darts this places the pattern inside the face with its bottom-to-top
/// direction along the first dart reversed.
TangleDiagram splice_22(const TangleDiagram& d, const SpliceSite& site, const TangleDiagram& pattern,
                        bool check_face = true);

/// All sites (pairs of darts with distinct non-thick labels on one face).
std::vector<SpliceSite> splice_sites(const TangleDiagram& d);

/// The IH-move on the thick edge `label`: u = (e,a,b), v = (e,c,d) becomes
/// u = (e,b,c), v = (e,d,a). The thick set is carried over.
std::pair<TangleDiagram, Enhancement> ih_rewrite(const TangleDiagram& g, const Enhancement& rho, Label label);

/// Standard (2,2) braid patterns.
TangleDiagram identity_22();
/// sigma^power for power in [-3, 3]: the positive generator has under-strand
/// from bottom right to top left.
TangleDiagram braid_22(int power);

struct ManifestEntry {
  std::string name;
  std::filesystem::path first;
  std::filesystem::path second;
  std::string move;
  bool exact = true;  // `exact` or `root`
  int line = 0;
};

std::vector<ManifestEntry> parse_manifest(const std::string& text, const std::filesystem::path& base_dir);
std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path);

/// The quantity compared for a diagram: I(G,rho) for diagrams with a thick
/// set, I(G) for other graph diagrams, P(D) for classical tangles.
enum class InvariantKind { TangleP, EnhancedRho, GraphTotal };
InvariantKind invariant_kind(const TangleDiagram& d);
std::string to_string(InvariantKind kind);

LaurentPoly invariant_poly(const TangleDiagram& d, int threads = 1);
std::vector<std::complex<double>> invariant_values(const TangleDiagram& d, const std::vector<RootIndex>& ks,
                                                   int threads = 1);

struct PairReport {
  ManifestEntry entry;
  InvariantKind kind = InvariantKind::TangleP;
  bool passed = false;
  bool poly_equal = false;
  double max_deviation = 0.0;  // over the compared roots
  std::string detail;
};

constexpr double kRootTolerance = 1e-9;

/// `exact` pairs must agree symbolically; `root` pairs within kRootTolerance
/// at every requested k (all eight when none given).
PairReport verify_pair(const ManifestEntry& entry, std::optional<RootIndex> k = std::nullopt, int threads = 1);

}  // namespace tangleinv
