#include "hopf/tensor.hpp"

#include <numeric>

namespace hopf {

namespace {

std::size_t product(const std::vector<std::size_t>& dims, std::size_t first, std::size_t count) {
  std::size_t p = 1;
  for (std::size_t i = first; i < first + count; ++i) p *= dims[i];
  return p;
}

}  // namespace

Tensor Tensor::basis(Field field, std::vector<std::size_t> dims, Index idx) {
  if (idx.size() != dims.size()) throw SpaceMismatch("tensor basis index has the wrong number of legs");
  Tensor t(field, std::move(dims));
  t.terms_.emplace(std::move(idx), Scalar::one(field));
  return t;
}

Tensor Tensor::from_vector(const Vector& v, std::vector<std::size_t> dims) {
  const std::size_t total = product(dims, 0, dims.size());
  if (total != v.dim()) throw SpaceMismatch("tensor legs do not multiply to the vector dimension");
  Tensor t(v.field(), std::move(dims));
  for (const auto& [flat, s] : v.entries()) {
    Index idx(t.dims_.size());
    std::size_t rest = flat;
    for (std::size_t k = t.dims_.size(); k-- > 0;) {
      idx[k] = static_cast<std::uint32_t>(rest % t.dims_[k]);
      rest /= t.dims_[k];
    }
    t.terms_.emplace(std::move(idx), s);
  }
  return t;
}

Vector Tensor::flatten() const {
  const std::size_t total = product(dims_, 0, dims_.size());
  std::vector<Vector::Entry> entries;
  entries.reserve(terms_.size());
  for (const auto& [idx, s] : terms_) {
    std::size_t flat = 0;
    for (std::size_t k = 0; k < dims_.size(); ++k) flat = flat * dims_[k] + idx[k];
    entries.emplace_back(flat, s);
  }
  return Vector::from_entries(field_, total, std::move(entries));
}

void Tensor::add(Index idx, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(idx), c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Tensor Tensor::map_legs(std::size_t first, std::size_t count, const LinMap& f,
                        const std::vector<std::size_t>& out) const {
  if (first + count > dims_.size()) throw SpaceMismatch("map_legs: leg range out of bounds");
  if (product(dims_, first, count) != f.source().dim())
    throw SpaceMismatch("map_legs: legs of dimension " + std::to_string(product(dims_, first, count)) +
                        " fed to a map with source dimension " + std::to_string(f.source().dim()));
  const std::size_t out_total = std::accumulate(out.begin(), out.end(), std::size_t{1}, std::multiplies<>());
  if (out_total != f.target().dim())
    throw SpaceMismatch("map_legs: output legs do not multiply to the target dimension");

  std::vector<std::size_t> new_dims(dims_.begin(), dims_.begin() + first);
  new_dims.insert(new_dims.end(), out.begin(), out.end());
  new_dims.insert(new_dims.end(), dims_.begin() + first + count, dims_.end());
  Tensor r(field_, std::move(new_dims));

  for (const auto& [idx, s] : terms_) {
    std::size_t flat = 0;
    for (std::size_t k = first; k < first + count; ++k) flat = flat * dims_[k] + idx[k];
    for (const auto& [tflat, c] : f.column(flat).entries()) {
      Index nidx(idx.begin(), idx.begin() + first);
      nidx.resize(first + out.size());
      std::size_t rest = tflat;
      for (std::size_t k = out.size(); k-- > 0;) {
        nidx[first + k] = static_cast<std::uint32_t>(rest % out[k]);
        rest /= out[k];
      }
      nidx.insert(nidx.end(), idx.begin() + first + count, idx.end());
      r.add(std::move(nidx), s * c);
    }
  }
  return r;
}

Tensor Tensor::apply(std::size_t leg, const LinMap& f) const { return map_legs(leg, 1, f, {f.target().dim()}); }

Tensor Tensor::expand(std::size_t leg, const LinMap& f, const std::vector<std::size_t>& out) const {
  return map_legs(leg, 1, f, out);
}

Tensor Tensor::contract(std::size_t leg, const LinMap& functional) const {
  if (functional.target().dim() != 1) throw SpaceMismatch("contract: map is not a functional");
  return map_legs(leg, 1, functional, {});
}

Tensor Tensor::merge(std::size_t i, std::size_t j, const LinMap& g) const {
  if (i == j || i >= dims_.size() || j >= dims_.size()) throw SpaceMismatch("merge: bad leg pair");
  // Bring legs into the order [..., i, j, ...] at position min(i, j).
  std::vector<std::size_t> order;
  const std::size_t at = std::min(i, j);
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (k == i || k == j) continue;
    if (order.size() == at) {
      order.push_back(i);
      order.push_back(j);
    }
    order.push_back(k);
  }
  if (order.size() == at) {
    order.push_back(i);
    order.push_back(j);
  }
  Tensor t = permute(order).map_legs(at, 2, g, {g.target().dim()});
  if (i < j) return t;
  // Result sits at position j (= at); move it to where leg i stood after removing leg j.
  std::vector<std::size_t> back;
  const std::size_t target = i - 1;
  for (std::size_t k = 0; k < t.legs(); ++k) {
    if (k == at) continue;
    if (back.size() == target) back.push_back(at);
    back.push_back(k);
  }
  if (back.size() == target) back.push_back(at);
  return t.permute(back);
}

Tensor Tensor::permute(const std::vector<std::size_t>& order) const {
  if (order.size() != dims_.size()) throw SpaceMismatch("permute: order has the wrong length");
  std::vector<std::size_t> nd(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) nd[k] = dims_.at(order[k]);
  Tensor r(field_, std::move(nd));
  for (const auto& [idx, s] : terms_) {
    Index nidx(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) nidx[k] = idx[order[k]];
    r.terms_.emplace(std::move(nidx), s);
  }
  return r;
}

Tensor Tensor::otimes(const Tensor& other) const {
  std::vector<std::size_t> nd = dims_;
  nd.insert(nd.end(), other.dims_.begin(), other.dims_.end());
  Tensor r(field_, std::move(nd));
  for (const auto& [a, s] : terms_)
    for (const auto& [b, t] : other.terms_) {
      Index idx = a;
      idx.insert(idx.end(), b.begin(), b.end());
      r.terms_.emplace(std::move(idx), s * t);
    }
  return r;
}

Tensor& Tensor::operator+=(const Tensor& o) {
  if (o.dims_ != dims_) throw SpaceMismatch("tensor sum with different leg shapes");
  for (const auto& [idx, s] : o.terms_) add(idx, s);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  if (o.dims_ != dims_) throw SpaceMismatch("tensor difference with different leg shapes");
  for (const auto& [idx, s] : o.terms_) add(idx, -s);
  return *this;
}

Tensor Tensor::scaled(const Scalar& c) const {
  Tensor r(field_, dims_);
  if (c.is_zero()) return r;
  for (const auto& [idx, s] : terms_) r.terms_.emplace(idx, s * c);
  return r;
}

}  // namespace hopf
