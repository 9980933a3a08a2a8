#pragma once

// Exact halfspace/vertex representation of moment polytopes and the lattice
// checks that make a polytope Delzant. No floating point is used here.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "toric/types.hpp"

namespace toric {

/// The affine distance function lambda(x) = <u, x> - b of one facet.
/// The inward normal u is a primitive integer vector.
class AffineForm {
 public:
  AffineForm(IntVector normal, Rational offset);

  const IntVector& normal() const noexcept { return normal_; }
  const Rational& offset() const noexcept { return offset_; }
  Eigen::Index dimension() const noexcept { return normal_.size(); }

  Rational operator()(const RationalVector& x) const;

  template <typename Derived>
  typename Derived::Scalar evaluate(const Eigen::MatrixBase<Derived>& x) const {
    using Scalar = typename Derived::Scalar;
    return normal_.template cast<Scalar>().dot(x) - rational_cast<Scalar>(offset_);
  }

  friend bool operator==(const AffineForm& a, const AffineForm& b) {
    return a.normal_ == b.normal_ && a.offset_ == b.offset_;
  }

 private:
  IntVector normal_;
  Rational offset_;
};

struct VertexData {
  RationalVector coordinates;
  std::vector<std::size_t> incident_facets;  // sorted form indices with lambda = 0
  std::vector<std::size_t> neighbors;        // adjacent vertex indices
  std::vector<IntVector> edge_generators;    // primitive directions, parallel to neighbors
};

/// Bounded, full-dimensional polytope {x : lambda_k(x) >= 0} with no redundant
/// forms. Vertices are stored in lexicographic order of their coordinates.
/// Being Delzant is a property checked by check_delzant, not a precondition.
class DelzantPolytope {
 public:
  static DelzantPolytope from_forms(Eigen::Index n, std::vector<AffineForm> forms);

  Eigen::Index dimension() const noexcept { return n_; }
  const std::vector<AffineForm>& forms() const noexcept { return forms_; }
  const std::vector<VertexData>& vertices() const noexcept { return vertices_; }

  // Integer d x n matrix whose rows are the facet normals.
  IntMatrix normal_matrix() const;
  // Index of the vertex with exactly these coordinates, or npos.
  std::size_t find_vertex(const RationalVector& x) const;
  RationalVector vertex_centroid() const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  DelzantPolytope(Eigen::Index n, std::vector<AffineForm> forms, std::vector<VertexData> vertices)
      : n_(n), forms_(std::move(forms)), vertices_(std::move(vertices)) {}

  Eigen::Index n_;
  std::vector<AffineForm> forms_;
  std::vector<VertexData> vertices_;
};

/// Lattice-affine change of coordinates x -> A (x - t) with |det A| = 1.
class UnimodularMap {
 public:
  UnimodularMap(IntMatrix matrix, RationalVector translation);
  static UnimodularMap identity(Eigen::Index n);

  const IntMatrix& matrix() const noexcept { return matrix_; }
  const RationalVector& translation() const noexcept { return translation_; }
  // A^{-1}, integral because |det A| = 1.
  const IntMatrix& inverse_matrix() const noexcept { return inverse_; }

  RationalVector operator()(const RationalVector& x) const;
  Vec<double> operator()(const Vec<double>& x) const;
  UnimodularMap inverse() const;

 private:
  IntMatrix matrix_;
  IntMatrix inverse_;
  RationalVector translation_;
};

/// H-to-V conversion by exhaustive n-subsets of forms. Vertices may be
/// non-simple (more than n incident facets); redundancy is not checked here.
std::vector<VertexData> enumerate_vertices(Eigen::Index n, std::span<const AffineForm> forms);

struct DelzantReport {
  struct Vertex {
    std::size_t index;
    std::size_t incident_count;
    std::size_t edge_count;
    BigInt determinant;  // |det| of the edge generators, 0 when not square
    bool passes;
  };
  std::vector<Vertex> vertices;
  bool is_delzant = true;
};

DelzantReport check_delzant(const DelzantPolytope& p);

struct Normalization {
  UnimodularMap map;
  DelzantPolytope polytope;
  // form_order[i] is the index in the source polytope of the i-th form in
  // the normalized polytope; the first n are the coordinate halfspaces.
  std::vector<std::size_t> form_order;
};

/// Sends the vertex to the origin and its edge generators to the standard
/// basis; the first n forms of the result are {x_i >= 0}.
Normalization normalize_at_vertex(const DelzantPolytope& p, std::size_t vertex_index);
Normalization normalize_at_vertex(const DelzantPolytope& p, const RationalVector& point);

/// Image of p under the map, with forms kept in the same order.
DelzantPolytope transform(const DelzantPolytope& p, const UnimodularMap& map);

Eigen::Index affine_span_rank(std::span<const RationalVector> points);
bool vertex_rank_check(const DelzantPolytope& p);

/// Standard Delzant models: simplex(n, scale), cube(n, scale), hirzebruch(a),
/// blowup_cp2(k) for k in {1,2,3}.
DelzantPolytope catalog(std::string_view name, std::span<const std::int64_t> params);
/// Parses "name:p1:p2", e.g. "simplex:2:1" or "hirzebruch:1".
DelzantPolytope catalog(std::string_view spec);
/// The catalog entries used for batch checks.
std::vector<std::string> standard_catalog();

}  // namespace toric
