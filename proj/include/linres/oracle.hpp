#pragma once

// Ground truth for small instances: reduced rational homology of simplicial
// complexes and graded Betti numbers via Hochster's formula
//
//   beta_{i,j}(R/I) = sum_{|W| = j} dim H~_{j-i-1}(Delta|_W; Q).
//
// Nothing here depends on the closed forms in betti.hpp.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "linres/complex.hpp"
#include "linres/graph.hpp"

namespace linres {

inline constexpr int kDefaultOracleCap = 10;
inline constexpr int kHardOracleCap = 14;

/// Reduced homology ranks over Q; ranks[k + 1] is the rank in dimension k,
/// starting at dimension -1.
struct HomologyRanks {
  std::vector<std::int64_t> ranks;

  std::int64_t in_dimension(int k) const;
};

/// Graded Betti numbers of R/I, entries keyed by (i, j). Includes the
/// (0, 0) entry 1 of the free module R itself; every other entry has
/// 1 <= i < j <= n.
struct GradedBettiTable {
  int n = 0;
  std::map<std::pair<int, int>, std::int64_t> entries;

  std::int64_t at(int i, int j) const;
  /// Row sums: totals[i] = beta_i(R/I). Trailing zero rows dropped.
  std::vector<std::int64_t> totals() const;
  /// Largest i with a nonzero entry, i.e. pdim(R/I).
  int projective_dimension() const;

  friend bool operator==(const GradedBettiTable&, const GradedBettiTable&) = default;
};

/// Rank of an integer matrix over Q by fraction-free (Bareiss) elimination.
/// Runs in 64-bit arithmetic and restarts with GMP integers on overflow.
std::size_t rational_rank(std::vector<std::int64_t> matrix, std::size_t rows, std::size_t cols);

/// Error ComplexTooLarge when the complex has more than `face_cap` faces.
HomologyRanks reduced_homology_ranks(const FaceComplex& c, std::size_t face_cap = kDefaultFaceCap);

struct OracleOptions {
  int max_n = kDefaultOracleCap;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Error TooLarge when h.n() exceeds options.max_n, or when max_n itself
/// exceeds kHardOracleCap.
GradedBettiTable hochster_graded_betti(const UniformHypergraph& h, const OracleOptions& options = {});

/// True iff every nonzero beta_{i,j}(R/I) with i >= 1 sits at j = i + m - 1.
bool is_linear_table(const GradedBettiTable& table, int m);

bool certify_linear_resolution(const UniformHypergraph& h, int m, const OracleOptions& options = {});

}  // namespace linres
