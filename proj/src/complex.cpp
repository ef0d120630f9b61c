#include "linres/complex.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>

#include "linres/error.hpp"

namespace linres {

namespace {

void check_mask_capacity(int n) {
  if (n > kMaxMaskVertices) {
    throw Error(ErrorKind::ComplexTooLarge,
                std::to_string(n) + " vertices exceed the " + std::to_string(kMaxMaskVertices) +
                    "-vertex limit of materialized complexes");
  }
}

FaceMask all_vertices(int n) { return n >= 64 ? ~FaceMask{0} : (FaceMask{1} << n) - 1; }

void add_count(std::vector<BigInt>& counts, std::size_t size, const BigInt& amount) {
  if (counts.size() <= size) counts.resize(size + 1, 0);
  counts[size] += amount;
}

std::vector<BigInt> trimmed(std::vector<BigInt> counts) {
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return counts;
}

}  // namespace

FVector::FVector(std::vector<BigInt> counts) : counts_(std::move(counts)) {
  if (counts_.empty() || counts_.front() != 1) {
    throw Error(ErrorKind::InvalidInput, "f-vector must start with f_{-1} = 1");
  }
  for (const auto& c : counts_) {
    if (c < 0) throw Error(ErrorKind::InvalidInput, "negative face count");
  }
  if (counts_.back() == 0) throw Error(ErrorKind::InvalidInput, "f-vector has trailing zero entries");
  if (counts_.size() > 1) {
    const long f0 = to_long(counts_[1]);
    for (std::size_t j = 1; j < counts_.size(); ++j) {
      if (counts_[j] > binomial(f0, static_cast<long>(j))) {
        throw Error(ErrorKind::InvalidInput, "f_" + std::to_string(j - 1) + " exceeds C(f_0, " + std::to_string(j) + ")");
      }
    }
  }
}

BigInt FVector::f(int j) const {
  if (j < -1) return 0;
  const auto index = static_cast<std::size_t>(j + 1);
  return index < counts_.size() ? counts_[index] : BigInt(0);
}

bool face_order(FaceMask a, FaceMask b) {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

FaceComplex FaceComplex::assume_closed(int n, std::vector<FaceMask> faces) {
  FaceComplex c;
  c.n_ = n;
  std::sort(faces.begin(), faces.end(), face_order);
  c.faces_ = std::move(faces);
  return c;
}

FaceComplex::FaceComplex(int n, std::vector<FaceMask> faces) {
  if (n < 0) throw Error(ErrorKind::InvalidInput, "negative vertex count");
  check_mask_capacity(n);
  n_ = n;
  std::sort(faces.begin(), faces.end(), face_order);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  faces_ = std::move(faces);
  const FaceMask universe = all_vertices(n);
  for (FaceMask f : faces_) {
    if ((f & ~universe) != 0) throw Error(ErrorKind::InvalidInput, "face uses a vertex outside 1..n");
  }
  if (!is_downward_closed()) throw Error(ErrorKind::InvalidInput, "face family is not downward closed");
}

bool FaceComplex::contains(FaceMask face) const {
  return std::binary_search(faces_.begin(), faces_.end(), face, face_order);
}

int FaceComplex::dim() const {
  return faces_.empty() ? -2 : std::popcount(faces_.back()) - 1;
}

bool FaceComplex::is_downward_closed() const {
  if (faces_.empty() || faces_.front() != 0) return false;
  // Closure under removing one vertex implies closure under all subsets.
  for (FaceMask f : faces_) {
    for (FaceMask rest = f; rest != 0; rest &= rest - 1) {
      if (!contains(f & ~(rest & -rest))) return false;
    }
  }
  return true;
}

FaceComplex full_simplex(int n) {
  check_mask_capacity(n);
  if (n >= 23) throw Error(ErrorKind::ComplexTooLarge, "full simplex on " + std::to_string(n) + " vertices");
  std::vector<FaceMask> faces(std::size_t{1} << n);
  for (std::size_t k = 0; k < faces.size(); ++k) faces[k] = k;
  return FaceComplex::assume_closed(n, std::move(faces));
}

FaceComplex clique_complex(const Graph& g, std::size_t face_cap) {
  const int n = g.n();
  check_mask_capacity(n);
  std::vector<FaceMask> adjacency(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [u, v] : g.edges()) {
    adjacency[u] |= vertex_bit(v);
    adjacency[v] |= vertex_bit(u);
  }
  std::vector<FaceMask> faces;
  // `candidates` holds vertices larger than every vertex of `face` that are
  // adjacent to all of them.
  std::function<void(FaceMask, FaceMask)> grow = [&](FaceMask face, FaceMask candidates) {
    if (faces.size() >= face_cap) {
      throw Error(ErrorKind::ComplexTooLarge, "clique complex exceeds " + std::to_string(face_cap) + " faces");
    }
    faces.push_back(face);
    for (FaceMask rest = candidates; rest != 0; rest &= rest - 1) {
      const int bit = std::countr_zero(rest);
      const FaceMask higher = bit >= 63 ? 0 : ~((FaceMask{2} << bit) - 1);
      grow(face | (FaceMask{1} << bit), candidates & adjacency[bit + 1] & higher);
    }
  };
  grow(0, all_vertices(n));
  return FaceComplex::assume_closed(n, std::move(faces));
}

FaceComplex independence_complex(const UniformHypergraph& h, std::size_t face_cap) {
  const int n = h.n();
  check_mask_capacity(n);
  // Edges indexed by their largest vertex: adding v to a face built from
  // smaller vertices can only complete those edges.
  std::vector<std::vector<FaceMask>> closing(static_cast<std::size_t>(n) + 1);
  for (const auto& e : h.edges()) {
    FaceMask mask = 0;
    for (Vertex v : e) mask |= vertex_bit(v);
    closing[e.back()].push_back(mask);
  }
  std::vector<FaceMask> faces;
  std::function<void(FaceMask, Vertex)> grow = [&](FaceMask face, Vertex next) {
    if (faces.size() >= face_cap) {
      throw Error(ErrorKind::ComplexTooLarge, "independence complex exceeds " + std::to_string(face_cap) + " faces");
    }
    faces.push_back(face);
    for (Vertex v = next; v <= n; ++v) {
      const FaceMask extended = face | vertex_bit(v);
      bool independent = true;
      for (FaceMask e : closing[v]) {
        if ((e & extended) == e) {
          independent = false;
          break;
        }
      }
      if (independent) grow(extended, v + 1);
    }
  };
  grow(0, 1);
  return FaceComplex::assume_closed(n, std::move(faces));
}

FVector f_vector(const FaceComplex& c) {
  std::vector<BigInt> counts(static_cast<std::size_t>(c.dim() + 2), 0);
  for (FaceMask f : c.faces()) counts[std::popcount(f)] += 1;
  return FVector(trimmed(std::move(counts)));
}

FVector clique_fvector_direct(const Graph& g) {
  std::vector<BigInt> counts{1};
  std::function<void(std::size_t, const VertexList&)> grow = [&](std::size_t size, const VertexList& candidates) {
    bool is_clique = true;
    for (std::size_t a = 0; a < candidates.size() && is_clique; ++a) {
      for (std::size_t b = a + 1; b < candidates.size() && is_clique; ++b) {
        is_clique = g.adjacent(candidates[a], candidates[b]);
      }
    }
    if (is_clique) {
      // Every subset of the candidates extends the current clique.
      const long c = static_cast<long>(candidates.size());
      for (long k = 1; k <= c; ++k) add_count(counts, size + k, binomial(c, k));
      return;
    }
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Vertex v = candidates[a];
      add_count(counts, size + 1, 1);
      VertexList next;
      for (std::size_t b = a + 1; b < candidates.size(); ++b) {
        if (g.adjacent(v, candidates[b])) next.push_back(candidates[b]);
      }
      if (!next.empty()) grow(size + 1, next);
    }
  };
  VertexList all(g.n());
  for (int v = 1; v <= g.n(); ++v) all[v - 1] = v;
  grow(0, all);
  return FVector(trimmed(std::move(counts)));
}

FVector independence_fvector_direct(const UniformHypergraph& h) {
  const int n = h.n();
  std::vector<std::vector<VertexList>> closing(static_cast<std::size_t>(n) + 1);
  for (const auto& e : h.edges()) closing[e.back()].push_back(e);
  std::vector<bool> member(static_cast<std::size_t>(n) + 1, false);
  std::vector<BigInt> counts{1};
  std::function<void(std::size_t, Vertex)> grow = [&](std::size_t size, Vertex next) {
    for (Vertex v = next; v <= n; ++v) {
      member[v] = true;
      bool independent = true;
      for (const auto& e : closing[v]) {
        if (std::all_of(e.begin(), e.end(), [&](Vertex u) { return member[u]; })) {
          independent = false;
          break;
        }
      }
      if (independent) {
        add_count(counts, size + 1, 1);
        grow(size + 1, v + 1);
      }
      member[v] = false;
    }
  };
  grow(0, 1);
  return FVector(trimmed(std::move(counts)));
}

FaceComplex induced_subcomplex(const FaceComplex& c, FaceMask w) {
  std::vector<int> bits;
  for (FaceMask rest = w; rest != 0; rest &= rest - 1) bits.push_back(std::countr_zero(rest));
  std::vector<FaceMask> faces;
  for (FaceMask f : c.faces()) {
    if ((f & ~w) != 0) continue;
    FaceMask packed = 0;
    for (std::size_t k = 0; k < bits.size(); ++k) {
      if (f & (FaceMask{1} << bits[k])) packed |= FaceMask{1} << k;
    }
    faces.push_back(packed);
  }
  return FaceComplex::assume_closed(static_cast<int>(bits.size()), std::move(faces));
}

}  // namespace linres
