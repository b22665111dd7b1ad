#include "pca/tower.hpp"

#include <algorithm>
#include <set>

#include "pca/malcev.hpp"
#include "pca/radical.hpp"

namespace pca {

// QuiverSpec ------------------------------------------------------------------

void QuiverSpec::validate() const {
  if (vertices.empty()) throw Error(ErrorKind::EmptyQuiver, "quiver has no vertices");
  std::set<std::string> vs(vertices.begin(), vertices.end());
  if (vs.size() != vertices.size()) throw Error(ErrorKind::BadSpec, "duplicate vertex name");
  std::map<std::string, const QuiverArrow*> by_name;
  for (const auto& a : arrows) {
    if (!vs.count(a.source) || !vs.count(a.target))
      throw Error(ErrorKind::BadSpec, "arrow " + a.name + " has an unknown endpoint");
    if (a.name.empty() || vs.count(a.name) || !by_name.emplace(a.name, &a).second)
      throw Error(ErrorKind::BadSpec, "arrow name '" + a.name + "' is empty or reused");
  }
  for (const auto& rel : relations) {
    std::optional<std::size_t> len;
    for (const auto& term : rel) {
      if (term.path.size() < 2) throw Error(ErrorKind::NonComposableRelation, "relation paths need length >= 2");
      for (std::size_t i = 0; i < term.path.size(); ++i) {
        auto it = by_name.find(term.path[i]);
        if (it == by_name.end()) throw Error(ErrorKind::NonComposableRelation, "unknown arrow " + term.path[i]);
        if (i + 1 < term.path.size()) {
          auto nx = by_name.find(term.path[i + 1]);
          if (nx != by_name.end() && it->second->target != nx->second->source)
            throw Error(ErrorKind::NonComposableRelation, term.path[i] + " then " + term.path[i + 1] + " is not a path");
        }
      }
      if (len && *len != term.path.size()) throw Error(ErrorKind::BadSpec, "relation mixes path lengths");
      len = term.path.size();
    }
  }
}

// Tower -----------------------------------------------------------------------

Tower Tower::make(std::vector<FinAlg> levels, const std::vector<Matrix>& maps,
                  std::map<std::string, std::string> metadata, std::optional<QuiverSpec> quiver) {
  if (levels.empty()) throw Error(ErrorKind::BadSpec, "tower without levels");
  if (maps.size() + 1 != levels.size()) throw Error(ErrorKind::BadSpec, "a tower of depth N needs N - 1 maps");
  for (const auto& l : levels)
    if (l.field() != levels[0].field()) throw Error(ErrorKind::FieldMismatch, "tower levels over different fields");
  Tower t;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    AlgHom h = AlgHom::make(maps[i], levels[i + 1], levels[i]);
    if (!h.is_surjective())
      throw Error(ErrorKind::BadSpec, "connecting map " + std::to_string(i + 1) + " is not surjective");
    t.maps_.push_back(std::move(h));
  }
  t.levels_ = std::move(levels);
  t.metadata_ = std::move(metadata);
  t.quiver_ = std::move(quiver);
  return t;
}

std::string Tower::kind() const {
  auto it = metadata_.find("kind");
  return it == metadata_.end() ? "custom" : it->second;
}

namespace {

// Coordinate projection onto the first `rows` coordinates.
Matrix truncation(const Field& f, Index rows, Index cols) {
  Matrix m = zeros(f, rows, cols);
  for (Index i = 0; i < rows; ++i) m(i, i) = f.one();
  return m;
}

struct Path {
  std::string source, target;
  std::vector<std::string> arrows;  // empty for a vertex
};

struct PathLevel {
  FinAlg algebra;
  // Truncated path algebra (before relations) and its projection.
  FinAlg free;
  Quotient quotient;
  std::vector<Vector> arrows;  // arrow images in `algebra`
};

std::vector<Path> paths_below(const QuiverSpec& q, std::size_t n) {
  std::vector<Path> out;
  for (const auto& v : q.vertices) out.push_back({v, v, {}});
  std::vector<QuiverArrow> sorted = q.arrows;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  std::vector<Path> frontier;
  for (const auto& a : sorted) frontier.push_back({a.source, a.target, {a.name}});
  for (std::size_t len = 1; len < n && !frontier.empty(); ++len) {
    // frontier is lexicographic because extensions are appended in sorted order
    out.insert(out.end(), frontier.begin(), frontier.end());
    std::vector<Path> next;
    for (const auto& p : frontier)
      for (const auto& a : sorted)
        if (a.source == p.target) {
          Path e = p;
          e.arrows.push_back(a.name);
          e.target = a.target;
          next.push_back(std::move(e));
        }
    frontier = std::move(next);
  }
  return out;
}

std::string path_label(const Path& p) {
  if (p.arrows.empty()) return p.source;
  std::string s;
  for (const auto& a : p.arrows) s += (s.empty() ? "" : ".") + a;
  return s;
}

PathLevel path_level(const QuiverSpec& q, const Field& f, std::size_t n) {
  std::vector<Path> paths = paths_below(q, n);
  std::map<std::vector<std::string>, Index> index;
  std::map<std::string, Index> vertex;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (paths[i].arrows.empty()) vertex[paths[i].source] = static_cast<Index>(i);
    else index[paths[i].arrows] = static_cast<Index>(i);
    labels.push_back(path_label(paths[i]));
  }
  std::vector<StructureConstant> mult;
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (std::size_t j = 0; j < paths.size(); ++j) {
      const Path& a = paths[i];
      const Path& b = paths[j];
      if (a.target != b.source) continue;
      Index k;
      if (a.arrows.empty()) {
        k = static_cast<Index>(j);
      } else if (b.arrows.empty()) {
        k = static_cast<Index>(i);
      } else {
        std::vector<std::string> c = a.arrows;
        c.insert(c.end(), b.arrows.begin(), b.arrows.end());
        auto it = index.find(c);
        if (it == index.end()) continue;
        k = it->second;
      }
      mult.push_back({static_cast<Index>(i), static_cast<Index>(j), k, f.one()});
    }
  const Index d = static_cast<Index>(paths.size());
  Vector unit = zero_vector(f, d);
  for (auto& [v, i] : vertex) unit(i) = f.one();
  FinAlg free = FinAlg::make(f, labels, mult, unit);

  std::vector<Vector> rels;
  for (const auto& rel : q.relations) {
    Vector r = zero_vector(f, d);
    for (const auto& term : rel) {
      auto it = index.find(term.path);
      if (it == index.end()) continue;  // length >= n, zero at this level
      Scalar c = term.coeff.in(f);
      r(it->second) += c;
    }
    rels.push_back(std::move(r));
  }
  Quotient qt = quotient(free, ideal_closure(free, rels, Side::TwoSided));
  std::vector<Vector> arrows;
  for (const auto& a : q.arrows) {
    auto it = index.find({a.name});
    arrows.push_back(it == index.end() ? qt.algebra.zero() : qt.projection.apply(free.basis_vector(it->second)));
  }
  return {qt.algebra, free, qt, arrows};
}

}  // namespace

Tower power_series_tower(const Field& f, std::size_t depth) {
  if (depth == 0) throw Error(ErrorKind::BadSpec, "tower depth must be at least 1");
  std::vector<FinAlg> levels;
  std::vector<Matrix> maps;
  for (std::size_t n = 1; n <= depth; ++n) {
    levels.push_back(truncated_polynomial(n, f));
    if (n > 1) maps.push_back(truncation(f, static_cast<Index>(n - 1), static_cast<Index>(n)));
  }
  return Tower::make(std::move(levels), maps, {{"kind", "powerseries"}, {"depth", std::to_string(depth)}});
}

Tower cyclic_group_tower(std::uint64_t p, const Field& f, std::size_t depth) {
  if (depth == 0) throw Error(ErrorKind::BadSpec, "tower depth must be at least 1");
  if (p < 2) throw Error(ErrorKind::BadSpec, "cyclic group tower needs a prime");
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw Error(ErrorKind::BadSpec, std::to_string(p) + " is not prime");
  std::vector<FinAlg> levels;
  std::vector<Matrix> maps;
  std::uint64_t order = 1;
  for (std::size_t n = 1; n <= depth; ++n) {
    std::uint64_t lower = order;
    if (order > (std::uint64_t{1} << 12) / p) throw Error(ErrorKind::TooLarge, "group order exceeds 4096");
    order *= p;
    levels.push_back(group_algebra(order, f));
    if (n > 1) {
      Matrix m = zeros(f, static_cast<Index>(lower), static_cast<Index>(order));
      for (std::uint64_t i = 0; i < order; ++i) m(static_cast<Index>(i % lower), static_cast<Index>(i)) = f.one();
      maps.push_back(std::move(m));
    }
  }
  return Tower::make(std::move(levels), maps,
                     {{"kind", "cyclicgroup"}, {"p", std::to_string(p)}, {"depth", std::to_string(depth)}});
}

Tower path_algebra_tower(const QuiverSpec& q, const Field& f, std::size_t depth) {
  q.validate();
  if (depth == 0) throw Error(ErrorKind::BadSpec, "tower depth must be at least 1");
  std::vector<PathLevel> pl;
  for (std::size_t n = 1; n <= depth; ++n) pl.push_back(path_level(q, f, n));
  std::vector<FinAlg> levels;
  std::vector<Matrix> maps;
  for (std::size_t i = 0; i < pl.size(); ++i) {
    levels.push_back(pl[i].algebra);
    if (i == 0) continue;
    const Matrix trunc = truncation(f, pl[i - 1].free.dim(), pl[i].free.dim());
    maps.push_back(product(pl[i - 1].quotient.projection.matrix(), product(trunc, pl[i].quotient.lift)));
  }
  return Tower::make(std::move(levels), maps, {{"kind", "path"}, {"depth", std::to_string(depth)}}, q);
}

Tower product_tower(const std::vector<FinAlg>& factors, std::size_t depth) {
  if (depth == 0 || depth > factors.size())
    throw Error(ErrorKind::BadSpec, "product tower depth must lie between 1 and the number of factors");
  for (const auto& a : factors)
    if (a.field() != factors[0].field()) throw Error(ErrorKind::FieldMismatch, "factors over different fields");
  std::vector<FinAlg> levels;
  std::vector<Matrix> maps;
  for (std::size_t n = 1; n <= depth; ++n) {
    std::vector<FinAlg> prefix(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(n));
    levels.push_back(direct_product(prefix));
    if (n > 1) {
      const FinAlg& f = factors[0];
      maps.push_back(truncation(f.field(), levels[n - 2].dim(), levels[n - 1].dim()));
    }
  }
  return Tower::make(std::move(levels), maps, {{"kind", "product"}, {"depth", std::to_string(depth)}});
}

// Checks ----------------------------------------------------------------------

TowerRadicalReport tower_radical_check(const Tower& t) {
  TowerRadicalReport rep;
  std::vector<Subspace> rads;
  for (const auto& l : t.levels()) {
    RadicalResult r = radical(l);
    rep.radical_dims.push_back(r.radical.dim());
    rep.nilpotency_indices.push_back(r.nilpotency_index);
    rads.push_back(r.radical.space());
  }
  for (std::size_t i = 0; i + 1 < t.depth(); ++i)
    if (t.map(i).image(rads[i + 1]) != rads[i])
      throw Error(ErrorKind::TheoremViolation,
                  "level " + std::to_string(i + 2) + " radical is not mapped onto the level " + std::to_string(i + 1) +
                      " radical");
  return rep;
}

bool tower_semisimple_check(const Tower& t) {
  for (const auto& l : t.levels())
    if (!is_semisimple(l)) return false;
  return true;
}

bool quiver_radical_check(const Tower& t) {
  if (!t.quiver()) throw Error(ErrorKind::BadSpec, "not a path algebra tower");
  for (std::size_t n = 1; n <= t.depth(); ++n) {
    PathLevel pl = path_level(*t.quiver(), t.level(0).field(), n);
    if (!pl.algebra.same_table(t.level(n - 1))) throw Error(ErrorKind::BadSpec, "tower levels do not match its quiver");
    Ideal arrows = ideal_closure(pl.algebra, pl.arrows, Side::TwoSided);
    if (radical(pl.algebra).radical.space() != arrows.space())
      throw Error(ErrorKind::TheoremViolation,
                  "level " + std::to_string(n) + ": radical differs from the arrow ideal");
  }
  return true;
}

std::vector<AlgHom> tower_isomorphism(const Tower& a, const Tower& b, const std::vector<Matrix>& maps) {
  if (a.depth() != b.depth() || maps.size() != a.depth()) throw Error(ErrorKind::BadSpec, "towers of different depth");
  std::vector<AlgHom> out;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    AlgHom h = AlgHom::make(maps[i], a.level(i), b.level(i));
    if (!h.is_injective() || !h.is_surjective())
      throw Error(ErrorKind::TheoremViolation, "level " + std::to_string(i + 1) + " map is not bijective");
    out.push_back(std::move(h));
  }
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    Matrix lhs = product(b.map(i).matrix(), out[i + 1].matrix());
    Matrix rhs = product(out[i].matrix(), a.map(i).matrix());
    if (!equal(lhs, rhs))
      throw Error(ErrorKind::TheoremViolation, "square at level " + std::to_string(i + 1) + " does not commute");
  }
  return out;
}

std::vector<AlgHom> loop_quiver_isomorphism(const Tower& loop) {
  const auto& q = loop.quiver();
  if (!q || q->vertices.size() != 1 || q->arrows.size() != 1 || !q->relations.empty())
    throw Error(ErrorKind::BadSpec, "expected the one-vertex one-loop quiver without relations");
  const Field& f = loop.level(0).field();
  Tower ps = power_series_tower(f, loop.depth());
  // paths e, x, xx, ... sit in the same positions as 1, x, x^2, ...
  std::vector<Matrix> maps;
  for (std::size_t i = 0; i < loop.depth(); ++i) maps.push_back(identity(f, loop.level(i).dim()));
  return tower_isomorphism(loop, ps, maps);
}

Splitting descend_splitting(const Tower& t, std::size_t i, const Splitting& upper) {
  if (i + 1 >= t.depth()) throw Error(ErrorKind::BadSpec, "no level below");
  if (!upper.algebra.same_table(t.level(i + 1))) throw Error(ErrorKind::AmbientMismatch, "splitting of another level");
  const FinAlg& lower = t.level(i);
  RadicalResult r = radical(lower);
  Quotient ql = quotient(lower, r.radical);
  const Matrix& phi = t.map(i).matrix();
  Matrix psi = product(ql.projection.matrix(), product(phi, upper.quotient.lift));
  auto inv = inverse(psi);
  if (!inv) throw Error(ErrorKind::BadSpec, "connecting map does not identify the semisimple quotients");
  return make_splitting(lower, product(phi, product(upper.section.matrix(), *inv)));
}

// Elements --------------------------------------------------------------------

TowerElement make_element(const Tower& t, std::vector<Vector> coords) {
  if (coords.size() != t.depth()) throw Error(ErrorKind::BadSpec, "one coordinate vector per level is required");
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].rows() != t.level(i).dim()) throw Error(ErrorKind::AmbientMismatch, "coordinate length mismatch");
    bind_to(coords[i], t.level(i).field());
  }
  for (std::size_t i = 0; i + 1 < coords.size(); ++i)
    if (!equal(t.map(i).apply(coords[i + 1]), coords[i]))
      throw Error(ErrorKind::IncompatibleCoordinates, "level " + std::to_string(i + 1));
  return {t, std::move(coords)};
}

TowerElement element_from_top(const Tower& t, const Vector& top) {
  std::vector<Vector> c(t.depth());
  c.back() = top;
  bind_to(c.back(), t.level(0).field());
  for (std::size_t i = t.depth() - 1; i-- > 0;) c[i] = t.map(i).apply(c[i + 1]);
  return make_element(t, std::move(c));
}

TowerElement one(const Tower& t) { return element_from_top(t, t.levels().back().unit()); }

namespace {

void same_tower(const TowerElement& x, const TowerElement& y) {
  if (x.tower.depth() != y.tower.depth()) throw Error(ErrorKind::AmbientMismatch, "elements of different towers");
  for (std::size_t i = 0; i < x.tower.depth(); ++i)
    if (!x.tower.level(i).same_table(y.tower.level(i))) throw Error(ErrorKind::AmbientMismatch, "elements of different towers");
}

}  // namespace

TowerElement operator+(const TowerElement& x, const TowerElement& y) {
  same_tower(x, y);
  std::vector<Vector> c;
  for (std::size_t i = 0; i < x.coords.size(); ++i) c.push_back(x.coords[i] + y.coords[i]);
  return make_element(x.tower, std::move(c));
}

TowerElement operator*(const TowerElement& x, const TowerElement& y) {
  same_tower(x, y);
  std::vector<Vector> c;
  for (std::size_t i = 0; i < x.coords.size(); ++i) c.push_back(x.tower.level(i).mul(x.coords[i], y.coords[i]));
  return make_element(x.tower, std::move(c));
}

}  // namespace pca
