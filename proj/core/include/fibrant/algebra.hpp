#pragma once

#include "fibrant/matrix.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace fibrant {

struct Arrow {
  std::size_t source = 0;
  std::size_t target = 0;
  std::string label;
  bool operator==(const Arrow&) const = default;
};

struct Quiver {
  std::size_t vertex_count = 0;
  std::vector<Arrow> arrows;
  bool operator==(const Quiver&) const = default;
};

/// A path stored as the sequence of arrow indices, first-applied first.
/// The empty sequence is the trivial path at `source` (= `target`).
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const { return arrows.size(); }
  bool operator==(const Path&) const = default;
};

/// coeff * word, the word composing right-to-left like matrix products
struct RelationTerm {
  Rational coeff;
  std::vector<std::size_t> arrows;  // nonempty, parallel within one relation
};

struct Relation {
  std::vector<RelationTerm> terms;
};

struct non_admissible : std::runtime_error {
  explicit non_admissible(const std::string& what) : std::runtime_error(what) {}
};

struct invalid_presentation : std::runtime_error {
  explicit invalid_presentation(const std::string& what) : std::runtime_error(what) {}
};

/// A finite-dimensional path algebra kQ/I. Construction checks that the
/// relations are parallel-path combinations and that some power of the
/// arrow ideal lies in the relation ideal, then fixes a deterministic
/// basis of each e_w * A * e_v (paths ordered by length, then
/// lexicographically by arrow index).
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  static std::shared_ptr<const Algebra> make(Quiver q, std::vector<Relation> rels, Field f,
                                             std::size_t admissibility_bound = 12);

  const Quiver& quiver() const { return quiver_; }
  const std::vector<Relation>& relations() const { return relations_; }
  const Field& field() const { return field_; }
  std::size_t admissibility_bound() const { return bound_; }

  /// Basis paths of e_w A e_v.
  const std::vector<Path>& basis_paths(std::size_t v, std::size_t w) const;
  /// Coordinates of a path (of any length) in basis_paths(v, w), modulo
  /// the relation ideal. Paths of length >= bound reduce to zero.
  Matrix path_coordinates(const Path& p) const;

  std::size_t dimension() const;  // total dimension of the algebra

  bool presentation_equal(const Algebra& o) const;

  /// The opposite algebra; opposite of the opposite is this object.
  std::shared_ptr<const Algebra> opposite() const;

 private:
  Algebra(Quiver q, std::vector<Relation> rels, Field f, std::size_t bound);
  void build_tables();

  struct PathSpace {
    std::vector<Path> paths;                      // all paths v->w of length < bound
    std::map<std::vector<std::size_t>, std::size_t> index;
    Matrix ideal;                                 // columns spanning the truncated relation ideal
    std::vector<std::size_t> basis;               // indices of paths surviving in the quotient
    std::vector<Path> basis_list;
    Matrix coord_system;                          // [unit vectors of basis | ideal]
  };

  const PathSpace& space(std::size_t v, std::size_t w) const {
    return spaces_[v * quiver_.vertex_count + w];
  }

  Quiver quiver_;
  std::vector<Relation> relations_;
  Field field_;
  std::size_t bound_;
  std::vector<PathSpace> spaces_;
  mutable std::shared_ptr<const Algebra> opposite_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

}  // namespace fibrant
