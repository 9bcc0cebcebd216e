#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hopf/scalar.hpp"

namespace hopf {

/// Finite ordered basis of distinct labels. Copies share the label storage.
class BasedSpace {
 public:
  BasedSpace();
  /// Throws SpaceMismatch on duplicate labels.
  explicit BasedSpace(std::vector<std::string> labels);

  /// The one-dimensional ground space k with basis {"1"}.
  static const BasedSpace& ground();

  std::size_t dim() const { return labels_->size(); }
  const std::string& label(std::size_t i) const { return (*labels_)[i]; }
  const std::vector<std::string>& labels() const { return *labels_; }

  friend bool operator==(const BasedSpace& a, const BasedSpace& b);

 private:
  struct Unchecked {};
  BasedSpace(Unchecked, std::vector<std::string> labels);
  friend BasedSpace tensor_space(const BasedSpace&, const BasedSpace&);
  friend BasedSpace relabel(const BasedSpace&, const std::function<std::string(const std::string&)>&);

  std::shared_ptr<const std::vector<std::string>> labels_;
};

/// Basis labels are "(v,w)" pairs in row-major order: the index of v⊗w is
/// i*dim(W) + j.
BasedSpace tensor_space(const BasedSpace& v, const BasedSpace& w);
BasedSpace tensor_space(const std::vector<BasedSpace>& factors);
/// Applies an injective relabeling; throws on collisions.
BasedSpace relabel(const BasedSpace& v, const std::function<std::string(const std::string&)>& f);

/// Sparse vector with explicit dimension and no stored zeros.
class Vector {
 public:
  using Entry = std::pair<std::size_t, Scalar>;

  Vector() = default;
  Vector(Field field, std::size_t dim) : field_(field), dim_(dim) {}

  static Vector unit(Field field, std::size_t dim, std::size_t i);
  /// Sorts, merges duplicate indices and drops zeros.
  static Vector from_entries(Field field, std::size_t dim, std::vector<Entry> entries);

  Field field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  Scalar coeff(std::size_t i) const;
  /// Index of the first nonzero entry; dim() when zero.
  std::size_t leading() const { return entries_.empty() ? dim_ : entries_.front().first; }

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  /// this += c * o
  Vector& axpy(const Scalar& c, const Vector& o);
  Vector scaled(const Scalar& c) const;

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend bool operator==(const Vector& a, const Vector& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  void check(const Vector& o) const;

  Field field_;
  std::size_t dim_ = 0;
  std::vector<Entry> entries_;
};

/// Kronecker product of vectors, consistent with tensor_space ordering.
Vector kron(const Vector& v, const Vector& w);

/// Accumulates scaled unit vectors and sparse vectors into one Vector.
class VectorBuilder {
 public:
  VectorBuilder(Field field, std::size_t dim) : field_(field), dim_(dim) {}
  void add(std::size_t i, const Scalar& c);
  void add(const Vector& v, const Scalar& c);
  void add(const Vector& v);
  Vector build() const;

 private:
  Field field_;
  std::size_t dim_;
  std::map<std::size_t, Scalar> acc_;
};

/// Sparse linear map stored by columns: column j is the image of source basis
/// vector j.
class LinMap {
 public:
  LinMap() = default;
  /// The zero map.
  LinMap(Field field, BasedSpace source, BasedSpace target);
  LinMap(Field field, BasedSpace source, BasedSpace target, std::vector<Vector> columns);

  static LinMap identity(Field field, const BasedSpace& v);
  static LinMap from_columns(Field field, const BasedSpace& source, const BasedSpace& target,
                             const std::function<Vector(std::size_t)>& column);
  /// A vector of V viewed as the map k -> V.
  static LinMap from_vector(const Vector& v, const BasedSpace& target);

  Field field() const { return field_; }
  const BasedSpace& source() const { return source_; }
  const BasedSpace& target() const { return target_; }
  const Vector& column(std::size_t j) const { return columns_[j]; }
  const std::vector<Vector>& columns() const { return columns_; }
  void set_column(std::size_t j, Vector v);
  Scalar entry(std::size_t row, std::size_t col) const { return columns_[col].coeff(row); }
  std::size_t nnz() const;

  Vector apply(const Vector& v) const;
  /// Row-wise view: row i as a vector over the source.
  std::vector<Vector> rows() const;

  friend bool operator==(const LinMap& a, const LinMap& b);

 private:
  Field field_;
  BasedSpace source_;
  BasedSpace target_;
  std::vector<Vector> columns_;
};

/// g ∘ f; throws SpaceMismatch unless target(f) = source(g).
LinMap compose(const LinMap& g, const LinMap& f);
LinMap compose(std::initializer_list<std::reference_wrapper<const LinMap>> chain);
/// f ⊗ g on tensor_space(source f, source g).
LinMap tensor_map(const LinMap& f, const LinMap& g);
LinMap transpose(const LinMap& f, const BasedSpace& new_source, const BasedSpace& new_target);
LinMap operator+(const LinMap& a, const LinMap& b);
LinMap operator-(const LinMap& a, const LinMap& b);
LinMap scale(const Scalar& c, const LinMap& f);
/// The flip V⊗W -> W⊗V.
LinMap swap_map(Field field, const BasedSpace& v, const BasedSpace& w);

/// Human readable "2·(a,b) + (c,d)" rendering.
std::string render(const Vector& v, const BasedSpace& space);

}  // namespace hopf
