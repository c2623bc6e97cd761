#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace tautclass {

/// Ordered simplex of a Delta-complex; faces[i] is the face opposite corner i.
struct Simplex {
  std::vector<int> vertices;
  std::vector<int> faces;

  int dimension() const { return static_cast<int>(vertices.size()) - 1; }
};

class DeltaComplex {
 public:
  DeltaComplex() = default;
  explicit DeltaComplex(int vertex_count);

  /// Adds a simplex of dimension vertices.size()-1 >= 1 and returns its id in that dimension.
  /// Faces must exist, carry the matching vertex tuples and satisfy the double-face identities.
  int add_simplex(std::vector<int> vertices, std::vector<int> faces);

  int vertex_count() const { return count(0); }
  int dimension() const { return static_cast<int>(simplices_.size()) - 1; }
  int count(int dim) const;
  const Simplex& simplex(int dim, int id) const;
  const std::vector<Simplex>& simplices(int dim) const;

  /// The face of (dim, id) spanned by the ascending corner indices `corners`.
  int subface(int dim, int id, const std::vector<int>& corners) const;
  /// The edge from corner i to corner j (i < j).
  int edge(int dim, int id, int i, int j) const;
  /// Faces on corners 0..p and on corners dim-q..dim.
  int front_face(int dim, int id, int p) const;
  int back_face(int dim, int id, int q) const;

  /// Rechecks every double-face identity; throws std::logic_error on failure.
  void validate() const;

 private:
  std::vector<std::vector<Simplex>> simplices_;
};

/// Finitely supported integer chain in one dimension.
struct Chain {
  int dimension = 0;
  std::map<int, std::int64_t> coefficients;

  static Chain single(int dim, int id, std::int64_t coefficient = 1);
  void add(int id, std::int64_t coefficient);
  bool empty() const { return coefficients.empty(); }

  Chain& operator+=(const Chain& other);
  Chain& operator-=(const Chain& other);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(std::int64_t m, const Chain& c);
  friend bool operator==(const Chain& a, const Chain& b) {
    return a.dimension == b.dimension && a.coefficients == b.coefficients;
  }
};

Chain boundary(const DeltaComplex& complex, const Chain& chain);

/// One-vertex 4g-gon model of the closed oriented genus-g surface.
struct SurfaceModel {
  DeltaComplex complex;
  Chain fundamental;
  int genus = 0;
  /// Edge ids of a_1, b_1, ..., a_g, b_g.
  std::vector<int> generator_edges;
  /// For polygon side k (from corner k to k+1): generator index and exponent +-1 in the word.
  std::vector<std::pair<int, int>> sides;
  /// Edge id of the diagonal from corner 0 to corner k, k = 2 .. 4g-2 (index k-2).
  std::vector<int> diagonals;
};

/// The 4g-gon with word a1 b1 a1^-1 b1^-1 ..., coned from corner 0. Triangle i is
/// (P0, Pi, Pi+1) with coefficient +1 when side i reads a generator forwards, and
/// (P0, Pi+1, Pi) with coefficient -1 otherwise, so every edge keeps one orientation.
SurfaceModel surface_complex(int genus);

/// One vertex and one edge; the edge is a 1-cycle.
std::pair<DeltaComplex, Chain> circle_complex();

/// The standard n-simplex with all of its faces; the top simplex has id 0.
DeltaComplex simplex_complex(int n);

/// A product simplex: a chain in [p] x [q] surjecting onto both factors, over (left, right).
struct ProductCell {
  int left_dim = 0;
  int left = 0;
  int right_dim = 0;
  int right = 0;
  std::vector<std::pair<int, int>> path;
};

/// Product of two Delta-complexes with the staircase triangulation of each prism.
class ProductComplex {
 public:
  ProductComplex(const DeltaComplex& left, const DeltaComplex& right);

  const DeltaComplex& complex() const { return complex_; }
  const ProductCell& cell(int dim, int id) const;
  /// Id of the cell, or -1.
  int find(const ProductCell& cell) const;
  int vertex_id(int left_vertex, int right_vertex) const { return left_vertex * right_vertices_ + right_vertex; }

 private:
  DeltaComplex complex_;
  std::vector<std::vector<ProductCell>> cells_;
  std::map<std::tuple<int, int, int, int, std::vector<std::pair<int, int>>>, int> index_;
  int right_vertices_ = 0;
};

/// (-1)^(area under the lattice path); the path taking all left steps first has sign +1.
int path_sign(const std::vector<std::pair<int, int>>& path);

/// z x z' = sum n_sigma n_tau sum_paths sign(path) (sigma x tau)_path.
Chain product_chain(const ProductComplex& product, const Chain& left, const Chain& right);

/// A simplex of the barycentric subdivision: a strictly increasing flag of corner subsets
/// (bitmasks) of its carrier, ending at the full corner set.
struct FlagCell {
  int carrier_dim = 0;
  int carrier = 0;
  std::vector<unsigned> flag;
};

/// Barycentric subdivision; every simplex of it has distinct vertices.
class Subdivision {
 public:
  explicit Subdivision(const DeltaComplex& original);

  const DeltaComplex& complex() const { return complex_; }
  const FlagCell& cell(int dim, int id) const;
  /// The face (dim, id) of the original complex whose barycenter is the vertex.
  std::pair<int, int> barycenter_of(int vertex) const { return barycenter_of_.at(static_cast<std::size_t>(vertex)); }
  /// sigma -> sum over corner orders pi of sign(pi) times the flag {pi_0} < {pi_0, pi_1} < ...
  Chain subdivide(const Chain& chain) const;

 private:
  int find(int carrier_dim, int carrier, const std::vector<unsigned>& flag) const;

  DeltaComplex complex_;
  std::vector<std::vector<FlagCell>> cells_;
  std::map<std::tuple<int, int, std::vector<unsigned>>, int> index_;
  std::vector<std::pair<int, int>> barycenter_of_;
};

/// Cochain values on the simplices of one dimension.
using Cochain = std::map<int, std::int64_t>;

/// <alpha cup beta, z> with alpha on front p-faces and beta on back q-faces.
std::int64_t cup_evaluate(const DeltaComplex& complex, const Cochain& alpha, int p,
                          const Cochain& beta, int q, const Chain& z);

/// <alpha, z> for a cochain and chain of the same dimension.
std::int64_t evaluate(const Cochain& alpha, const Chain& z);

/// Pullbacks along the projections of a product; zero on cells that degenerate.
Cochain pullback_left(const ProductComplex& product, const Cochain& alpha, int p);
Cochain pullback_right(const ProductComplex& product, const Cochain& beta, int q);

}  // namespace tautclass
