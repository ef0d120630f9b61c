#include "linres/oracle.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <string>
#include <thread>

#include "linres/arith.hpp"
#include "linres/error.hpp"

namespace linres {

namespace {

// Fraction-free row echelon reduction. Column skipping keeps every entry a
// minor of the original matrix, so the division by the previous pivot stays
// exact. Returns nullopt when a 64-bit intermediate overflows.
template <typename T, typename Wide, typename Check>
std::optional<std::size_t> bareiss_rank(std::vector<T>& a, std::size_t rows, std::size_t cols, Check fits) {
  T previous = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t c = col; c < cols; ++c) std::swap(a[pivot * cols + c], a[rank * cols + c]);
    }
    const T p = a[rank * cols + col];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const T lead = a[r * cols + col];
      for (std::size_t c = col + 1; c < cols; ++c) {
        Wide value = (Wide(p) * Wide(a[r * cols + c]) - Wide(lead) * Wide(a[rank * cols + c])) / Wide(previous);
        if (!fits(value)) return std::nullopt;
        a[r * cols + c] = static_cast<T>(value);
      }
      a[r * cols + col] = 0;
    }
    previous = p;
    ++rank;
  }
  return rank;
}

// Reduced homology of the complex whose faces are `faces`, sorted by
// (cardinality, mask). Vertex labels are the bit positions; no relabeling
// is needed.
HomologyRanks homology_of_sorted_faces(const std::vector<FaceMask>& faces) {
  int top = 0;
  for (FaceMask f : faces) top = std::max(top, std::popcount(f));
  // groups[s] = faces with s vertices, in increasing mask order.
  std::vector<std::vector<FaceMask>> groups(static_cast<std::size_t>(top) + 2);
  for (FaceMask f : faces) groups[std::popcount(f)].push_back(f);

  // boundary_rank[s] = rank of the boundary map from s-sets to (s-1)-sets.
  std::vector<std::size_t> boundary_rank(groups.size() + 1, 0);
  for (std::size_t s = 1; s < groups.size(); ++s) {
    const auto& cols = groups[s];
    const auto& rows = groups[s - 1];
    if (cols.empty() || rows.empty()) continue;
    std::vector<std::int64_t> matrix(rows.size() * cols.size(), 0);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      int position = 0;
      for (FaceMask rest = cols[c]; rest != 0; rest &= rest - 1, ++position) {
        const FaceMask facet = cols[c] & ~(rest & -rest);
        auto it = std::lower_bound(rows.begin(), rows.end(), facet);
        const auto r = static_cast<std::size_t>(it - rows.begin());
        matrix[r * cols.size() + c] = (position % 2 == 0) ? 1 : -1;
      }
    }
    boundary_rank[s] = rational_rank(std::move(matrix), rows.size(), cols.size());
  }

  HomologyRanks out;
  for (std::size_t s = 0; s + 1 < groups.size(); ++s) {
    out.ranks.push_back(static_cast<std::int64_t>(groups[s].size()) - static_cast<std::int64_t>(boundary_rank[s]) -
                        static_cast<std::int64_t>(boundary_rank[s + 1]));
  }
  return out;
}

void check_cap(const OracleOptions& options, int n) {
  if (options.max_n > kHardOracleCap) {
    throw Error(ErrorKind::TooLarge, "oracle cap " + std::to_string(options.max_n) + " exceeds the hard limit " +
                                         std::to_string(kHardOracleCap));
  }
  if (n > options.max_n) {
    throw Error(ErrorKind::TooLarge,
                std::to_string(n) + " vertices exceed the oracle cap of " + std::to_string(options.max_n));
  }
}

}  // namespace

std::int64_t HomologyRanks::in_dimension(int k) const {
  const long index = static_cast<long>(k) + 1;
  if (index < 0 || index >= static_cast<long>(ranks.size())) return 0;
  return ranks[static_cast<std::size_t>(index)];
}

std::int64_t GradedBettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

std::vector<std::int64_t> GradedBettiTable::totals() const {
  std::vector<std::int64_t> out;
  for (const auto& [key, value] : entries) {
    if (value == 0) continue;
    if (out.size() <= static_cast<std::size_t>(key.first)) out.resize(key.first + 1, 0);
    out[key.first] += value;
  }
  return out;
}

int GradedBettiTable::projective_dimension() const { return static_cast<int>(totals().size()) - 1; }

std::size_t rational_rank(std::vector<std::int64_t> matrix, std::size_t rows, std::size_t cols) {
  std::vector<std::int64_t> working = matrix;
  auto fits64 = [](__int128 v) { return v >= INT64_MIN && v <= INT64_MAX; };
  if (auto rank = bareiss_rank<std::int64_t, __int128>(working, rows, cols, fits64)) return *rank;
  std::vector<BigInt> big(matrix.begin(), matrix.end());
  auto always = [](const BigInt&) { return true; };
  return *bareiss_rank<BigInt, BigInt>(big, rows, cols, always);
}

HomologyRanks reduced_homology_ranks(const FaceComplex& c, std::size_t face_cap) {
  if (c.size() > face_cap) {
    throw Error(ErrorKind::ComplexTooLarge, std::to_string(c.size()) + " faces exceed the cap of " +
                                                std::to_string(face_cap));
  }
  return homology_of_sorted_faces(c.faces());
}

GradedBettiTable hochster_graded_betti(const UniformHypergraph& h, const OracleOptions& options) {
  check_cap(options, h.n());
  const int n = h.n();
  const FaceComplex delta = independence_complex(h);
  const std::uint64_t subsets = std::uint64_t{1} << n;

  unsigned workers = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, subsets));

  // Each worker owns a strided slice of the subsets; tables merge by
  // addition, which does not depend on the order.
  std::vector<std::map<std::pair<int, int>, std::int64_t>> partial(workers);
  auto work = [&](unsigned worker) {
    std::vector<FaceMask> restricted;
    for (std::uint64_t w = worker; w < subsets; w += workers) {
      restricted.clear();
      for (FaceMask f : delta.faces()) {
        if ((f & ~w) == 0) restricted.push_back(f);
      }
      const HomologyRanks hr = homology_of_sorted_faces(restricted);
      const int j = std::popcount(w);
      for (std::size_t index = 0; index < hr.ranks.size(); ++index) {
        if (hr.ranks[index] == 0) continue;
        const int dimension = static_cast<int>(index) - 1;
        partial[worker][{j - dimension - 1, j}] += hr.ranks[index];
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < workers; ++k) pool.emplace_back(work, k);
  }

  GradedBettiTable table;
  table.n = n;
  for (const auto& part : partial) {
    for (const auto& [key, value] : part) table.entries[key] += value;
  }
  return table;
}

bool is_linear_table(const GradedBettiTable& table, int m) {
  for (const auto& [key, value] : table.entries) {
    if (key.first >= 1 && value != 0 && key.second != key.first + m - 1) return false;
  }
  return true;
}

bool certify_linear_resolution(const UniformHypergraph& h, int m, const OracleOptions& options) {
  return is_linear_table(hochster_graded_betti(h, options), m);
}

}  // namespace linres
