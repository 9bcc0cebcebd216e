#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hopf/space.hpp"

namespace hopf {

/// Element of V_0 ⊗ ... ⊗ V_{n-1}, stored as a sparse table of basis index
/// tuples. Structure maps are applied to individual legs, which is how
/// Sweedler-notation formulas are evaluated: expand a leg with a coproduct,
/// permute legs, merge two legs with a product, contract a leg with a
/// functional.
class Tensor {
 public:
  using Index = std::vector<std::uint32_t>;

  Tensor(Field field, std::vector<std::size_t> dims) : field_(field), dims_(std::move(dims)) {}

  static Tensor basis(Field field, std::vector<std::size_t> dims, Index idx);
  /// Splits the row-major flat index of v according to dims.
  static Tensor from_vector(const Vector& v, std::vector<std::size_t> dims);

  Field field() const { return field_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t legs() const { return dims_.size(); }
  const std::map<Index, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Row-major flattening onto the tensor product of all legs.
  Vector flatten() const;

  /// Applies f to the `count` consecutive legs starting at `first` (read as
  /// one row-major index) and splits f's target index into `out` legs. An
  /// empty `out` requires a one-dimensional target and removes the legs.
  Tensor map_legs(std::size_t first, std::size_t count, const LinMap& f, const std::vector<std::size_t>& out) const;

  /// f: V_leg -> W, one leg in, one leg out.
  Tensor apply(std::size_t leg, const LinMap& f) const;
  /// f: V_leg -> W_0 ⊗ ... ⊗ W_{k-1}.
  Tensor expand(std::size_t leg, const LinMap& f, const std::vector<std::size_t>& out) const;
  /// Functional V_leg -> k; removes the leg.
  Tensor contract(std::size_t leg, const LinMap& functional) const;
  /// g: V_i ⊗ V_j -> U; the result occupies position i and leg j disappears.
  Tensor merge(std::size_t i, std::size_t j, const LinMap& g) const;
  /// New leg k is old leg order[k].
  Tensor permute(const std::vector<std::size_t>& order) const;
  /// Appends the legs of other.
  Tensor otimes(const Tensor& other) const;

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor scaled(const Scalar& c) const;

  friend bool operator==(const Tensor& a, const Tensor& b) { return a.dims_ == b.dims_ && a.terms_ == b.terms_; }

 private:
  void add(Index idx, const Scalar& c);

  Field field_;
  std::vector<std::size_t> dims_;
  std::map<Index, Scalar> terms_;
};

}  // namespace hopf
