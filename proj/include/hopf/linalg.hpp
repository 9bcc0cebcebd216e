#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hopf/space.hpp"

namespace hopf {

/// Incrementally maintained reduced row echelon form. Rows are normalized to
/// a leading 1 and every pivot column is zero in all other rows, so the form
/// depends only on the row space, never on insertion order.
class EchelonForm {
 public:
  EchelonForm(Field field, std::size_t dim) : field_(field), dim_(dim) {}

  /// Returns true when v was independent of the rows inserted so far.
  bool insert(const Vector& v);
  /// Remainder of v after elimination against the current rows.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const { return reduce(v).is_zero(); }

  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  Field field() const { return field_; }
  /// pivot column -> reduced row, in increasing pivot order
  const std::map<std::size_t, Vector>& rows() const { return rows_; }
  std::vector<std::size_t> pivots() const;
  std::vector<std::size_t> free_columns() const;

 private:
  Field field_;
  std::size_t dim_;
  std::map<std::size_t, Vector> rows_;
};

/// Subspace of an ambient BasedSpace with an independent basis and a chosen
/// left inverse of the inclusion. Basis vector k restricted to the key
/// coordinates is the k-th unit vector, so the section reads off those
/// coordinates.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Field field, BasedSpace ambient, std::vector<Vector> basis, std::vector<std::size_t> keys);

  const BasedSpace& ambient() const { return ambient_; }
  /// Basis labels "<l>" where l is the ambient label of the key coordinate.
  const BasedSpace& carrier() const { return carrier_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& keys() const { return keys_; }
  Field field() const { return field_; }

  LinMap inclusion() const;
  LinMap section() const;
  /// Coordinates of an ambient vector (the section applied to it).
  Vector coordinates(const Vector& v) const;
  /// Ambient vector for carrier coordinates.
  Vector embed(const Vector& coords) const;
  bool contains(const Vector& v) const;

 private:
  Field field_;
  BasedSpace ambient_;
  BasedSpace carrier_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> keys_;
};

/// V / span(R) with a projection and a chosen lift satisfying
/// projection ∘ lift = id. Quotient basis vectors are the classes of the
/// non-pivot ambient basis vectors of the reduced relation span.
class QuotientSpace {
 public:
  QuotientSpace() = default;
  QuotientSpace(BasedSpace ambient, const EchelonForm& relations);

  const BasedSpace& ambient() const { return ambient_; }
  /// Basis labels "[l]".
  const BasedSpace& carrier() const { return carrier_; }
  std::size_t dim() const { return carrier_.dim(); }
  std::size_t relation_rank() const { return relation_rank_; }
  const LinMap& projection() const { return projection_; }
  const LinMap& lift() const { return lift_; }
  Vector project(const Vector& v) const { return projection_.apply(v); }
  /// Ambient basis indices whose classes form the quotient basis.
  const std::vector<std::size_t>& representatives() const { return representatives_; }

 private:
  BasedSpace ambient_;
  BasedSpace carrier_;
  std::size_t relation_rank_ = 0;
  LinMap projection_;
  LinMap lift_;
  std::vector<std::size_t> representatives_;
};

std::size_t rank(const LinMap& a);
std::size_t rank(Field field, std::size_t dim, const std::vector<Vector>& vectors);
bool is_injective(const LinMap& a);
bool is_surjective(const LinMap& a);

/// Null space of a.
Subspace kernel(const LinMap& a);
/// Column space of a.
Subspace image(const LinMap& a);
Subspace span(Field field, const BasedSpace& ambient, const std::vector<Vector>& vectors);
QuotientSpace quotient(Field field, const BasedSpace& v, const std::vector<Vector>& relations);

/// Exact solution of a x = b with free variables set to zero; nullopt when
/// b is not in the image of a.
std::optional<Vector> solve(const LinMap& a, const Vector& b);
/// Solves a x = b_k for several right-hand sides sharing one elimination.
std::vector<std::optional<Vector>> solve_many(const LinMap& a, const std::vector<Vector>& bs);
/// Two-sided inverse of a square invertible map.
std::optional<LinMap> inverse(const LinMap& a);

}  // namespace hopf
