#pragma once

// Simplicial complexes attached to graphs and hypergraphs, and their
// f-vectors.
//
// Two routes to an f-vector exist. FaceComplex materializes every face as a
// 64-bit vertex mask (vertex v is bit v-1) and is what the homology oracle
// consumes; it is capped at kDefaultFaceCap faces and 64 vertices. The
// *_fvector_direct functions only count faces and have no vertex limit.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "linres/arith.hpp"
#include "linres/graph.hpp"

namespace linres {

using FaceMask = std::uint64_t;

inline constexpr int kMaxMaskVertices = 64;
inline constexpr std::size_t kDefaultFaceCap = std::size_t{1} << 22;

inline FaceMask vertex_bit(Vertex v) { return FaceMask{1} << (v - 1); }

/// (f_{-1}, f_0, ..., f_{d-1}) with f_{-1} = 1 and f_{d-1} >= 1.
class FVector {
 public:
  /// The complex whose only face is the empty face.
  FVector() : counts_{1} {}
  explicit FVector(std::vector<BigInt> counts);

  /// counts()[j + 1] == f_j.
  const std::vector<BigInt>& counts() const noexcept { return counts_; }

  /// Dimension d-1 of the complex; -1 when only the empty face exists.
  int dim() const noexcept { return static_cast<int>(counts_.size()) - 2; }

  /// f_j for j >= -1; zero above the dimension.
  BigInt f(int j) const;

  long vertex_count() const { return dim() >= 0 ? to_long(counts_[1]) : 0; }

  friend bool operator==(const FVector& a, const FVector& b) { return a.counts_ == b.counts_; }

 private:
  std::vector<BigInt> counts_;
};

class FaceComplex {
 public:
  /// Validates downward closure and vertex range; sorts faces by
  /// (cardinality, mask).
  FaceComplex(int n, std::vector<FaceMask> faces);

  /// For builders that produce closed families by construction.
  static FaceComplex assume_closed(int n, std::vector<FaceMask> faces);

  int n() const noexcept { return n_; }
  const std::vector<FaceMask>& faces() const noexcept { return faces_; }
  std::size_t size() const noexcept { return faces_.size(); }
  bool contains(FaceMask face) const;
  int dim() const;
  bool is_downward_closed() const;

  friend bool operator==(const FaceComplex& a, const FaceComplex& b) {
    return a.n_ == b.n_ && a.faces_ == b.faces_;
  }

 private:
  FaceComplex() = default;
  int n_ = 0;
  std::vector<FaceMask> faces_;
};

bool face_order(FaceMask a, FaceMask b);

FaceComplex full_simplex(int n);

/// Throws Error(ComplexTooLarge) past `face_cap` faces or 64 vertices.
FaceComplex clique_complex(const Graph& g, std::size_t face_cap = kDefaultFaceCap);
FaceComplex independence_complex(const UniformHypergraph& h, std::size_t face_cap = kDefaultFaceCap);

FVector f_vector(const FaceComplex& c);

/// Counts cliques by size without materializing them. Candidate sets that
/// are already cliques are counted in closed form.
FVector clique_fvector_direct(const Graph& g);

/// Counts independent sets of a hypergraph by size without materializing
/// them.
FVector independence_fvector_direct(const UniformHypergraph& h);

/// Faces of c inside `w`, relabeled so that the k-th smallest vertex of w
/// becomes vertex k.
FaceComplex induced_subcomplex(const FaceComplex& c, FaceMask w);

}  // namespace linres
