#pragma once

// Finite inverse systems A_1 <- A_2 <- ... <- A_N of finite-dimensional
// algebras with surjective connecting maps, the standard example towers, and
// levelwise checks of the inverse-limit statements.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pca/algebra.hpp"

namespace pca {

struct Splitting;

struct QuiverArrow {
  std::string name;
  std::string source;
  std::string target;
};

struct RelationTerm {
  Scalar coeff;
  // Arrow names, composed left to right: target(path[i]) = source(path[i+1]).
  std::vector<std::string> path;
};

struct QuiverSpec {
  std::vector<std::string> vertices;
  std::vector<QuiverArrow> arrows;
  std::vector<std::vector<RelationTerm>> relations;

  // EmptyQuiver, NonComposableRelation, BadSpec (duplicate or unknown names,
  // relations mixing path lengths).
  void validate() const;
};

class Tower {
 public:
  // maps[i] is a dim(levels[i]) x dim(levels[i+1]) matrix. Every map is
  // validated as a surjective algebra map (NotAHom / BadSpec otherwise).
  static Tower make(std::vector<FinAlg> levels, const std::vector<Matrix>& maps,
                    std::map<std::string, std::string> metadata = {}, std::optional<QuiverSpec> quiver = {});

  std::size_t depth() const { return levels_.size(); }
  const FinAlg& level(std::size_t i) const { return levels_.at(i); }
  const std::vector<FinAlg>& levels() const { return levels_; }
  // A_{i+1} -> A_i (0-based: map(i) goes from level(i + 1) to level(i)).
  const AlgHom& map(std::size_t i) const { return maps_.at(i); }
  const std::vector<AlgHom>& maps() const { return maps_; }
  const std::map<std::string, std::string>& metadata() const { return metadata_; }
  std::string kind() const;
  const std::optional<QuiverSpec>& quiver() const { return quiver_; }

 private:
  Tower() = default;
  std::vector<FinAlg> levels_;
  std::vector<AlgHom> maps_;
  std::map<std::string, std::string> metadata_;
  std::optional<QuiverSpec> quiver_;
};

Tower power_series_tower(const Field& f, std::size_t depth);
Tower cyclic_group_tower(std::uint64_t p, const Field& f, std::size_t depth);
Tower path_algebra_tower(const QuiverSpec& q, const Field& f, std::size_t depth);
Tower product_tower(const std::vector<FinAlg>& factors, std::size_t depth);

struct TowerRadicalReport {
  std::vector<Index> radical_dims;
  std::vector<int> nilpotency_indices;
};

// TheoremViolation naming the first level whose radical is not carried onto
// the radical below.
TowerRadicalReport tower_radical_check(const Tower& t);
bool tower_semisimple_check(const Tower& t);
// Path towers only (BadSpec otherwise). TheoremViolation on a mismatch.
bool quiver_radical_check(const Tower& t);

// Validates level isomorphisms a_i -> b_i (given as matrices) and that every
// square with the connecting maps commutes. TheoremViolation otherwise.
std::vector<AlgHom> tower_isomorphism(const Tower& a, const Tower& b, const std::vector<Matrix>& maps);
// The one-loop path tower against power_series_tower of the same depth.
std::vector<AlgHom> loop_quiver_isomorphism(const Tower& loop);

// Pushes a splitting of level(i + 1) down to level(i) as map(i) o s o psi^-1,
// psi the map induced on semisimple quotients (BadSpec unless bijective).
Splitting descend_splitting(const Tower& t, std::size_t i, const Splitting& upper);

struct TowerElement {
  Tower tower;
  std::vector<Vector> coords;
};

// Coordinates at every level from the top-level coordinates.
TowerElement element_from_top(const Tower& t, const Vector& top);
// IncompatibleCoordinates naming the first (1-based) level i with
// phi_i(coords_{i+1}) != coords_i.
TowerElement make_element(const Tower& t, std::vector<Vector> coords);
TowerElement one(const Tower& t);
TowerElement operator+(const TowerElement& x, const TowerElement& y);
TowerElement operator*(const TowerElement& x, const TowerElement& y);

}  // namespace pca
