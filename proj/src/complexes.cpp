#include "tautclass/complexes.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace tautclass {

namespace {

std::vector<int> without(const std::vector<int>& v, std::size_t i) {
  std::vector<int> out;
  out.reserve(v.size() - 1);
  for (std::size_t k = 0; k < v.size(); ++k)
    if (k != i) out.push_back(v[k]);
  return out;
}

using Path = std::vector<std::pair<int, int>>;

// Monotone chains from (0,0) to (p,q) with unit steps right/up, and diagonal steps if allowed.
void extend_paths(int p, int q, bool diagonal, Path& current, std::vector<Path>& out) {
  const auto [i, j] = current.back();
  if (i == p && j == q) {
    out.push_back(current);
    return;
  }
  const std::pair<int, int> steps[] = {{1, 0}, {0, 1}, {1, 1}};
  for (const auto& [di, dj] : steps) {
    if (di == 1 && dj == 1 && !diagonal) continue;
    if (i + di > p || j + dj > q) continue;
    current.emplace_back(i + di, j + dj);
    extend_paths(p, q, diagonal, current, out);
    current.pop_back();
  }
}

std::vector<Path> lattice_paths(int p, int q, bool diagonal) {
  std::vector<Path> out;
  Path start{{0, 0}};
  extend_paths(p, q, diagonal, start, out);
  return out;
}

}  // namespace

DeltaComplex::DeltaComplex(int vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("DeltaComplex: negative vertex count");
  simplices_.resize(1);
  for (int v = 0; v < vertex_count; ++v) simplices_[0].push_back(Simplex{{v}, {}});
}

int DeltaComplex::count(int dim) const {
  if (dim < 0 || dim >= static_cast<int>(simplices_.size())) return 0;
  return static_cast<int>(simplices_[static_cast<std::size_t>(dim)].size());
}

const std::vector<Simplex>& DeltaComplex::simplices(int dim) const {
  static const std::vector<Simplex> none;
  if (dim < 0 || dim >= static_cast<int>(simplices_.size())) return none;
  return simplices_[static_cast<std::size_t>(dim)];
}

const Simplex& DeltaComplex::simplex(int dim, int id) const {
  if (id < 0 || id >= count(dim))
    throw std::out_of_range("no " + std::to_string(dim) + "-simplex with id " + std::to_string(id));
  return simplices_[static_cast<std::size_t>(dim)][static_cast<std::size_t>(id)];
}

int DeltaComplex::add_simplex(std::vector<int> vertices, std::vector<int> faces) {
  const int dim = static_cast<int>(vertices.size()) - 1;
  if (dim < 1) throw std::invalid_argument("add_simplex: vertices are created by the constructor");
  if (static_cast<int>(faces.size()) != dim + 1)
    throw std::invalid_argument("add_simplex: need one face per corner");
  if (count(dim - 1) == 0) throw std::invalid_argument("add_simplex: missing lower dimension");
  for (int v : vertices)
    if (v < 0 || v >= vertex_count()) throw std::invalid_argument("add_simplex: unknown vertex");
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const Simplex& f = simplex(dim - 1, faces[i]);
    if (f.vertices != without(vertices, i))
      throw std::logic_error("add_simplex: face " + std::to_string(i) + " has the wrong vertices");
  }
  if (dim >= 2) {
    for (int j = 1; j <= dim; ++j)
      for (int i = 0; i < j; ++i) {
        const int a = simplex(dim - 1, faces[static_cast<std::size_t>(j)]).faces[static_cast<std::size_t>(i)];
        const int b = simplex(dim - 1, faces[static_cast<std::size_t>(i)]).faces[static_cast<std::size_t>(j - 1)];
        if (a != b) throw std::logic_error("add_simplex: double-face identity fails");
      }
  }
  if (static_cast<int>(simplices_.size()) <= dim) simplices_.resize(static_cast<std::size_t>(dim) + 1);
  simplices_[static_cast<std::size_t>(dim)].push_back(Simplex{std::move(vertices), std::move(faces)});
  return count(dim) - 1;
}

int DeltaComplex::subface(int dim, int id, const std::vector<int>& corners) const {
  int current = id, current_dim = dim;
  for (int c = dim; c >= 0; --c) {
    if (std::find(corners.begin(), corners.end(), c) != corners.end()) continue;
    // Corners above c were removed already; c keeps its index.
    current = simplex(current_dim, current).faces[static_cast<std::size_t>(c)];
    --current_dim;
  }
  return current;
}

int DeltaComplex::edge(int dim, int id, int i, int j) const {
  if (!(0 <= i && i < j && j <= dim)) throw std::invalid_argument("edge: need corners i < j");
  return subface(dim, id, {i, j});
}

int DeltaComplex::front_face(int dim, int id, int p) const {
  std::vector<int> corners;
  for (int c = 0; c <= p; ++c) corners.push_back(c);
  return subface(dim, id, corners);
}

int DeltaComplex::back_face(int dim, int id, int q) const {
  std::vector<int> corners;
  for (int c = dim - q; c <= dim; ++c) corners.push_back(c);
  return subface(dim, id, corners);
}

void DeltaComplex::validate() const {
  for (int dim = 1; dim <= dimension(); ++dim)
    for (const Simplex& s : simplices(dim)) {
      for (std::size_t i = 0; i < s.faces.size(); ++i)
        if (simplex(dim - 1, s.faces[i]).vertices != without(s.vertices, i))
          throw std::logic_error("validate: face vertices disagree");
      if (dim < 2) continue;
      for (int j = 1; j <= dim; ++j)
        for (int i = 0; i < j; ++i)
          if (simplex(dim - 1, s.faces[static_cast<std::size_t>(j)]).faces[static_cast<std::size_t>(i)] !=
              simplex(dim - 1, s.faces[static_cast<std::size_t>(i)]).faces[static_cast<std::size_t>(j - 1)])
            throw std::logic_error("validate: double-face identity fails");
    }
}

Chain Chain::single(int dim, int id, std::int64_t coefficient) {
  Chain c;
  c.dimension = dim;
  c.add(id, coefficient);
  return c;
}

void Chain::add(int id, std::int64_t coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = coefficients.try_emplace(id, 0);
  it->second += coefficient;
  if (it->second == 0) coefficients.erase(it);
}

Chain& Chain::operator+=(const Chain& other) {
  if (!other.empty() && !empty() && other.dimension != dimension)
    throw std::invalid_argument("chains of different dimension");
  if (empty()) dimension = other.dimension;
  for (const auto& [id, c] : other.coefficients) add(id, c);
  return *this;
}

Chain& Chain::operator-=(const Chain& other) { return *this += (-1) * other; }

Chain operator*(std::int64_t m, const Chain& c) {
  Chain out;
  out.dimension = c.dimension;
  if (m == 0) return out;
  for (const auto& [id, k] : c.coefficients) out.coefficients.emplace(id, m * k);
  return out;
}

Chain boundary(const DeltaComplex& complex, const Chain& chain) {
  if (chain.dimension < 1) throw std::invalid_argument("boundary: dimension must be >= 1");
  Chain out;
  out.dimension = chain.dimension - 1;
  for (const auto& [id, c] : chain.coefficients) {
    const Simplex& s = complex.simplex(chain.dimension, id);
    for (std::size_t i = 0; i < s.faces.size(); ++i) out.add(s.faces[i], (i % 2 == 0 ? c : -c));
  }
  return out;
}

SurfaceModel surface_complex(int genus) {
  if (genus < 1) throw std::invalid_argument("surface_complex: genus must be >= 1");
  SurfaceModel m;
  m.genus = genus;
  m.complex = DeltaComplex(1);
  const int corners = 4 * genus;
  for (int k = 0; k < 2 * genus; ++k) m.generator_edges.push_back(m.complex.add_simplex({0, 0}, {0, 0}));
  for (int i = 0; i < genus; ++i) {
    m.sides.emplace_back(2 * i, 1);
    m.sides.emplace_back(2 * i + 1, 1);
    m.sides.emplace_back(2 * i, -1);
    m.sides.emplace_back(2 * i + 1, -1);
  }
  for (int k = 2; k <= corners - 2; ++k) m.diagonals.push_back(m.complex.add_simplex({0, 0}, {0, 0}));
  auto from_base = [&](int k) {
    if (k == 1) return m.generator_edges[0];
    if (k == corners - 1) return m.generator_edges[static_cast<std::size_t>(2 * genus - 1)];
    return m.diagonals[static_cast<std::size_t>(k - 2)];
  };
  m.fundamental.dimension = 2;
  for (int i = 1; i <= corners - 2; ++i) {
    const auto [generator, exponent] = m.sides[static_cast<std::size_t>(i)];
    const int side = m.generator_edges[static_cast<std::size_t>(generator)];
    int id;
    if (exponent > 0) id = m.complex.add_simplex({0, 0, 0}, {side, from_base(i + 1), from_base(i)});
    else id = m.complex.add_simplex({0, 0, 0}, {side, from_base(i), from_base(i + 1)});
    m.fundamental.add(id, exponent);
  }
  return m;
}

std::pair<DeltaComplex, Chain> circle_complex() {
  DeltaComplex c(1);
  const int e = c.add_simplex({0, 0}, {0, 0});
  return {c, Chain::single(1, e)};
}

DeltaComplex simplex_complex(int n) {
  if (n < 0) throw std::invalid_argument("simplex_complex: negative dimension");
  DeltaComplex out(n + 1);
  std::map<std::vector<int>, int> ids;
  for (int v = 0; v <= n; ++v) ids[{v}] = v;
  for (int dim = 1; dim <= n; ++dim) {
    std::vector<std::vector<int>> tuples;
    for (int mask = 0; mask < (1 << (n + 1)); ++mask) {
      if (__builtin_popcount(static_cast<unsigned>(mask)) != dim + 1) continue;
      std::vector<int> t;
      for (int v = 0; v <= n; ++v)
        if (mask & (1 << v)) t.push_back(v);
      tuples.push_back(t);
    }
    std::sort(tuples.begin(), tuples.end());
    for (const auto& t : tuples) {
      std::vector<int> faces;
      for (std::size_t i = 0; i < t.size(); ++i) faces.push_back(ids.at(without(t, i)));
      ids[t] = out.add_simplex(t, faces);
    }
  }
  return out;
}

int path_sign(const std::vector<std::pair<int, int>>& path) {
  int area = 0;
  for (std::size_t t = 1; t < path.size(); ++t)
    if (path[t].first == path[t - 1].first + 1 && path[t].second == path[t - 1].second)
      area += path[t].second;
  return area % 2 == 0 ? 1 : -1;
}

ProductComplex::ProductComplex(const DeltaComplex& left, const DeltaComplex& right)
    : complex_(left.vertex_count() * right.vertex_count()), right_vertices_(right.vertex_count()) {
  cells_.resize(1);
  for (int v = 0; v < left.vertex_count(); ++v)
    for (int w = 0; w < right.vertex_count(); ++w) {
      ProductCell c{0, v, 0, w, {{0, 0}}};
      index_.emplace(std::make_tuple(0, v, 0, w, c.path), static_cast<int>(cells_[0].size()));
      cells_[0].push_back(c);
    }
  const int top = left.dimension() + right.dimension();
  for (int m = 1; m <= top; ++m) {
    cells_.emplace_back();
    for (int p = 0; p <= std::min(m, left.dimension()); ++p)
      for (int q = std::max(0, m - p); q <= std::min(m, right.dimension()); ++q) {
        if (std::max(p, q) > m || p + q < m) continue;
        std::vector<Path> paths;
        for (const Path& path : lattice_paths(p, q, true))
          if (static_cast<int>(path.size()) == m + 1) paths.push_back(path);
        for (int s = 0; s < left.count(p); ++s)
          for (int t = 0; t < right.count(q); ++t)
            for (const Path& path : paths) {
              const Simplex& ls = left.simplex(p, s);
              const Simplex& rs = right.simplex(q, t);
              std::vector<int> vertices;
              for (const auto& [i, j] : path)
                vertices.push_back(vertex_id(ls.vertices[static_cast<std::size_t>(i)],
                                             rs.vertices[static_cast<std::size_t>(j)]));
              std::vector<int> faces;
              for (std::size_t r = 0; r < path.size(); ++r) {
                ProductCell f{p, s, q, t, {}};
                for (std::size_t k = 0; k < path.size(); ++k)
                  if (k != r) f.path.push_back(path[k]);
                const auto [ir, jr] = path[r];
                const bool keeps_i = std::any_of(f.path.begin(), f.path.end(),
                                                 [ir = ir](const auto& x) { return x.first == ir; });
                const bool keeps_j = std::any_of(f.path.begin(), f.path.end(),
                                                 [jr = jr](const auto& x) { return x.second == jr; });
                if (!keeps_i) {
                  f.left = ls.faces[static_cast<std::size_t>(ir)];
                  f.left_dim = p - 1;
                  for (auto& x : f.path)
                    if (x.first > ir) --x.first;
                }
                if (!keeps_j) {
                  f.right = rs.faces[static_cast<std::size_t>(jr)];
                  f.right_dim = q - 1;
                  for (auto& x : f.path)
                    if (x.second > jr) --x.second;
                }
                const int id = find(f);
                if (id < 0) throw std::logic_error("ProductComplex: missing face cell");
                faces.push_back(id);
              }
              const int id = complex_.add_simplex(vertices, faces);
              ProductCell c{p, s, q, t, path};
              index_.emplace(std::make_tuple(p, s, q, t, path), id);
              cells_.back().push_back(c);
            }
      }
  }
}

const ProductCell& ProductComplex::cell(int dim, int id) const {
  return cells_.at(static_cast<std::size_t>(dim)).at(static_cast<std::size_t>(id));
}

int ProductComplex::find(const ProductCell& c) const {
  const auto it = index_.find(std::make_tuple(c.left_dim, c.left, c.right_dim, c.right, c.path));
  return it == index_.end() ? -1 : it->second;
}

Chain product_chain(const ProductComplex& product, const Chain& left, const Chain& right) {
  const int n = left.dimension, k = right.dimension;
  Chain out;
  out.dimension = n + k;
  const std::vector<Path> paths = lattice_paths(n, k, false);
  for (const auto& [s, a] : left.coefficients)
    for (const auto& [t, b] : right.coefficients)
      for (const Path& path : paths) {
        const int id = product.find(ProductCell{n, s, k, t, path});
        if (id < 0) throw std::logic_error("product_chain: missing top cell");
        out.add(id, a * b * path_sign(path));
      }
  return out;
}

std::int64_t evaluate(const Cochain& alpha, const Chain& z) {
  std::int64_t total = 0;
  for (const auto& [id, c] : z.coefficients) {
    const auto it = alpha.find(id);
    if (it == alpha.end())
      throw std::out_of_range("evaluate: cochain has no value on simplex " + std::to_string(id));
    total += c * it->second;
  }
  return total;
}

std::int64_t cup_evaluate(const DeltaComplex& complex, const Cochain& alpha, int p,
                          const Cochain& beta, int q, const Chain& z) {
  if (z.dimension != p + q) throw std::invalid_argument("cup_evaluate: chain dimension is not p+q");
  std::int64_t total = 0;
  for (const auto& [id, c] : z.coefficients) {
    const int front = complex.front_face(p + q, id, p);
    const int back = complex.back_face(p + q, id, q);
    const auto a = alpha.find(front), b = beta.find(back);
    if (a == alpha.end() || b == beta.end())
      throw std::out_of_range("cup_evaluate: cochain value missing on a face of simplex " +
                              std::to_string(id));
    total += c * a->second * b->second;
  }
  return total;
}

namespace {

std::vector<int> corners_of(unsigned mask) {
  std::vector<int> out;
  for (int c = 0; mask >> c; ++c)
    if (mask >> c & 1u) out.push_back(c);
  return out;
}

// Re-index a subset of `within`'s corners to positions inside `within`.
unsigned restrict_mask(unsigned mask, unsigned within) {
  unsigned out = 0;
  int position = 0;
  for (int c = 0; within >> c; ++c)
    if (within >> c & 1u) {
      if (mask >> c & 1u) out |= 1u << position;
      ++position;
    }
  return out;
}

void extend_flags(unsigned full, std::vector<unsigned>& current, std::vector<std::vector<unsigned>>& out) {
  const unsigned last = current.empty() ? 0u : current.back();
  if (last == full) {
    out.push_back(current);
    return;
  }
  for (unsigned next = full; next; next = (next - 1) & full)
    if ((next & last) == last && next != last) {
      current.push_back(next);
      extend_flags(full, current, out);
      current.pop_back();
    }
}

}  // namespace

Subdivision::Subdivision(const DeltaComplex& original) {
  std::map<std::pair<int, int>, int> vertex_of;
  for (int dim = 0; dim <= original.dimension(); ++dim)
    for (int id = 0; id < original.count(dim); ++id) {
      vertex_of[{dim, id}] = static_cast<int>(barycenter_of_.size());
      barycenter_of_.emplace_back(dim, id);
    }
  complex_ = DeltaComplex(static_cast<int>(barycenter_of_.size()));
  cells_.resize(static_cast<std::size_t>(original.dimension()) + 1);
  for (int v = 0; v < static_cast<int>(barycenter_of_.size()); ++v) {
    const auto [dim, id] = barycenter_of_[static_cast<std::size_t>(v)];
    const std::vector<unsigned> flag{(1u << (dim + 1)) - 1};
    index_[{dim, id, flag}] = v;
    cells_[0].push_back({dim, id, flag});
  }
  std::vector<std::vector<std::vector<unsigned>>> flags(cells_.size());
  for (int dim = 0; dim <= original.dimension(); ++dim) {
    std::vector<unsigned> current;
    extend_flags((1u << (dim + 1)) - 1, current, flags[static_cast<std::size_t>(dim)]);
  }
  for (int k = 1; k <= original.dimension(); ++k)
    for (int dim = k; dim <= original.dimension(); ++dim)
      for (int id = 0; id < original.count(dim); ++id)
        for (const auto& flag : flags[static_cast<std::size_t>(dim)]) {
          if (static_cast<int>(flag.size()) != k + 1) continue;
          std::vector<int> vertices, faces;
          for (unsigned mask : flag) {
            const std::vector<int> corners = corners_of(mask);
            vertices.push_back(vertex_of.at({static_cast<int>(corners.size()) - 1, original.subface(dim, id, corners)}));
          }
          for (int i = 0; i <= k; ++i) {
            if (i < k) {
              std::vector<unsigned> f = flag;
              f.erase(f.begin() + i);
              faces.push_back(find(dim, id, f));
            } else {
              const unsigned top = flag[static_cast<std::size_t>(k - 1)];
              const std::vector<int> corners = corners_of(top);
              std::vector<unsigned> f;
              for (int j = 0; j < k; ++j) f.push_back(restrict_mask(flag[static_cast<std::size_t>(j)], top));
              faces.push_back(find(static_cast<int>(corners.size()) - 1, original.subface(dim, id, corners), f));
            }
          }
          const int created = complex_.add_simplex(vertices, faces);
          index_[{dim, id, flag}] = created;
          cells_[static_cast<std::size_t>(k)].push_back({dim, id, flag});
        }
}

const FlagCell& Subdivision::cell(int dim, int id) const {
  return cells_.at(static_cast<std::size_t>(dim)).at(static_cast<std::size_t>(id));
}

int Subdivision::find(int carrier_dim, int carrier, const std::vector<unsigned>& flag) const {
  const auto it = index_.find({carrier_dim, carrier, flag});
  if (it == index_.end()) throw std::logic_error("subdivision: missing face");
  return it->second;
}

Chain Subdivision::subdivide(const Chain& chain) const {
  const int d = chain.dimension;
  Chain out;
  out.dimension = d;
  std::vector<int> order(static_cast<std::size_t>(d) + 1);
  std::iota(order.begin(), order.end(), 0);
  do {
    int inversions = 0;
    for (int i = 0; i <= d; ++i)
      for (int j = i + 1; j <= d; ++j)
        if (order[static_cast<std::size_t>(i)] > order[static_cast<std::size_t>(j)]) ++inversions;
    std::vector<unsigned> flag;
    unsigned mask = 0;
    for (int c : order) flag.push_back(mask |= 1u << c);
    for (const auto& [id, c] : chain.coefficients) out.add(find(d, id, flag), inversions % 2 ? -c : c);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

Cochain pullback_left(const ProductComplex& product, const Cochain& alpha, int p) {
  Cochain out;
  for (int id = 0; id < product.complex().count(p); ++id) {
    const ProductCell& c = product.cell(p, id);
    if (c.left_dim != p) {
      out[id] = 0;
    } else if (const auto it = alpha.find(c.left); it != alpha.end()) {
      out[id] = it->second;
    }
  }
  return out;
}

Cochain pullback_right(const ProductComplex& product, const Cochain& beta, int q) {
  Cochain out;
  for (int id = 0; id < product.complex().count(q); ++id) {
    const ProductCell& c = product.cell(q, id);
    if (c.right_dim != q) {
      out[id] = 0;
    } else if (const auto it = beta.find(c.right); it != beta.end()) {
      out[id] = it->second;
    }
  }
  return out;
}

}  // namespace tautclass
