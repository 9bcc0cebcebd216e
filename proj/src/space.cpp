#include "hopf/space.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace hopf {

BasedSpace::BasedSpace() : labels_(std::make_shared<const std::vector<std::string>>()) {}

BasedSpace::BasedSpace(std::vector<std::string> labels) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw SpaceMismatch("duplicate basis label '" + l + "'");
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

BasedSpace::BasedSpace(Unchecked, std::vector<std::string> labels)
    : labels_(std::make_shared<const std::vector<std::string>>(std::move(labels))) {}

const BasedSpace& BasedSpace::ground() {
  static const BasedSpace k(std::vector<std::string>{"1"});
  return k;
}

bool operator==(const BasedSpace& a, const BasedSpace& b) {
  return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
}

BasedSpace tensor_space(const BasedSpace& v, const BasedSpace& w) {
  std::vector<std::string> labels;
  labels.reserve(v.dim() * w.dim());
  for (const auto& a : v.labels())
    for (const auto& b : w.labels()) labels.push_back("(" + a + "," + b + ")");
  return BasedSpace(BasedSpace::Unchecked{}, std::move(labels));
}

BasedSpace tensor_space(const std::vector<BasedSpace>& factors) {
  if (factors.empty()) return BasedSpace::ground();
  BasedSpace out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = tensor_space(out, factors[i]);
  return out;
}

BasedSpace relabel(const BasedSpace& v, const std::function<std::string(const std::string&)>& f) {
  std::vector<std::string> labels;
  labels.reserve(v.dim());
  for (const auto& l : v.labels()) labels.push_back(f(l));
  return BasedSpace(std::move(labels));
}

// ---------------------------------------------------------------------------

Vector Vector::unit(Field field, std::size_t dim, std::size_t i) {
  Vector v(field, dim);
  v.entries_.emplace_back(i, Scalar::one(field));
  return v;
}

Vector Vector::from_entries(Field field, std::size_t dim, std::vector<Entry> entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.first < b.first; });
  Vector v(field, dim);
  for (auto& e : entries) {
    if (e.first >= dim) throw SpaceMismatch("vector index out of range");
    if (!v.entries_.empty() && v.entries_.back().first == e.first)
      v.entries_.back().second += e.second;
    else
      v.entries_.push_back(std::move(e));
  }
  std::erase_if(v.entries_, [](const Entry& e) { return e.second.is_zero(); });
  return v;
}

Scalar Vector::coeff(std::size_t i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, std::size_t k) { return e.first < k; });
  if (it != entries_.end() && it->first == i) return it->second;
  return Scalar::zero(field_);
}

void Vector::check(const Vector& o) const {
  if (dim_ != o.dim_)
    throw SpaceMismatch("vector dimensions " + std::to_string(dim_) + " and " + std::to_string(o.dim_));
}

Vector& Vector::axpy(const Scalar& c, const Vector& o) {
  check(o);
  if (c.is_zero() || o.is_zero()) return *this;
  std::vector<Entry> out;
  out.reserve(entries_.size() + o.entries_.size());
  auto a = entries_.begin();
  auto b = o.entries_.begin();
  while (a != entries_.end() || b != o.entries_.end()) {
    if (b == o.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->first < a->first) {
      out.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      Scalar s = a->second + c * b->second;
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
  return *this;
}

Vector& Vector::operator+=(const Vector& o) { return axpy(Scalar::one(o.field_), o); }
Vector& Vector::operator-=(const Vector& o) { return axpy(-Scalar::one(o.field_), o); }

Vector Vector::scaled(const Scalar& c) const {
  Vector v(field_, dim_);
  if (c.is_zero()) return v;
  v.entries_.reserve(entries_.size());
  for (const auto& [i, s] : entries_) v.entries_.emplace_back(i, s * c);
  return v;
}

Vector kron(const Vector& v, const Vector& w) {
  Vector out(v.field(), v.dim() * w.dim());
  std::vector<Vector::Entry> entries;
  entries.reserve(v.nnz() * w.nnz());
  for (const auto& [i, a] : v.entries())
    for (const auto& [j, b] : w.entries()) entries.emplace_back(i * w.dim() + j, a * b);
  // already sorted by construction
  return Vector::from_entries(v.field(), v.dim() * w.dim(), std::move(entries));
}

void VectorBuilder::add(std::size_t i, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc_.try_emplace(i, c);
  if (!inserted) it->second += c;
}

void VectorBuilder::add(const Vector& v, const Scalar& c) {
  for (const auto& [i, s] : v.entries()) add(i, s * c);
}

void VectorBuilder::add(const Vector& v) {
  for (const auto& [i, s] : v.entries()) add(i, s);
}

Vector VectorBuilder::build() const {
  std::vector<Vector::Entry> entries;
  entries.reserve(acc_.size());
  for (const auto& [i, s] : acc_)
    if (!s.is_zero()) entries.emplace_back(i, s);
  return Vector::from_entries(field_, dim_, std::move(entries));
}

// ---------------------------------------------------------------------------

LinMap::LinMap(Field field, BasedSpace source, BasedSpace target)
    : field_(field), source_(std::move(source)), target_(std::move(target)) {
  columns_.assign(source_.dim(), Vector(field_, target_.dim()));
}

LinMap::LinMap(Field field, BasedSpace source, BasedSpace target, std::vector<Vector> columns)
    : field_(field), source_(std::move(source)), target_(std::move(target)), columns_(std::move(columns)) {
  if (columns_.size() != source_.dim()) throw SpaceMismatch("column count differs from source dimension");
  for (const auto& c : columns_)
    if (c.dim() != target_.dim()) throw SpaceMismatch("column dimension differs from target dimension");
}

LinMap LinMap::identity(Field field, const BasedSpace& v) {
  std::vector<Vector> cols;
  cols.reserve(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) cols.push_back(Vector::unit(field, v.dim(), i));
  return LinMap(field, v, v, std::move(cols));
}

LinMap LinMap::from_columns(Field field, const BasedSpace& source, const BasedSpace& target,
                            const std::function<Vector(std::size_t)>& column) {
  std::vector<Vector> cols;
  cols.reserve(source.dim());
  for (std::size_t j = 0; j < source.dim(); ++j) cols.push_back(column(j));
  return LinMap(field, source, target, std::move(cols));
}

LinMap LinMap::from_vector(const Vector& v, const BasedSpace& target) {
  return LinMap(v.field(), BasedSpace::ground(), target, {v});
}

void LinMap::set_column(std::size_t j, Vector v) {
  if (v.dim() != target_.dim()) throw SpaceMismatch("column dimension differs from target dimension");
  columns_.at(j) = std::move(v);
}

std::size_t LinMap::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.nnz();
  return n;
}

Vector LinMap::apply(const Vector& v) const {
  if (v.dim() != source_.dim())
    throw SpaceMismatch("apply: vector of dimension " + std::to_string(v.dim()) + " to map with source dimension " +
                        std::to_string(source_.dim()));
  if (v.nnz() == 1) return columns_[v.entries()[0].first].scaled(v.entries()[0].second);
  VectorBuilder b(field_, target_.dim());
  for (const auto& [j, s] : v.entries()) b.add(columns_[j], s);
  return b.build();
}

std::vector<Vector> LinMap::rows() const {
  std::vector<std::vector<Vector::Entry>> rows(target_.dim());
  for (std::size_t j = 0; j < columns_.size(); ++j)
    for (const auto& [i, s] : columns_[j].entries()) rows[i].emplace_back(j, s);
  std::vector<Vector> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.push_back(Vector::from_entries(field_, source_.dim(), std::move(r)));
  return out;
}

bool operator==(const LinMap& a, const LinMap& b) {
  return a.source_.dim() == b.source_.dim() && a.target_.dim() == b.target_.dim() && a.columns_ == b.columns_;
}

LinMap compose(const LinMap& g, const LinMap& f) {
  if (f.target().dim() != g.source().dim() || !(f.target() == g.source()))
    throw SpaceMismatch("compose: target of inner map (dim " + std::to_string(f.target().dim()) +
                        ") differs from source of outer map (dim " + std::to_string(g.source().dim()) + ")");
  std::vector<Vector> cols;
  cols.reserve(f.source().dim());
  for (const auto& c : f.columns()) cols.push_back(g.apply(c));
  return LinMap(g.field(), f.source(), g.target(), std::move(cols));
}

LinMap compose(std::initializer_list<std::reference_wrapper<const LinMap>> chain) {
  auto it = std::rbegin(chain);
  LinMap out = it->get();
  for (++it; it != std::rend(chain); ++it) out = compose(it->get(), out);
  return out;
}

LinMap tensor_map(const LinMap& f, const LinMap& g) {
  BasedSpace src = tensor_space(f.source(), g.source());
  BasedSpace tgt = tensor_space(f.target(), g.target());
  std::vector<Vector> cols;
  cols.reserve(src.dim());
  for (const auto& a : f.columns())
    for (const auto& b : g.columns()) cols.push_back(kron(a, b));
  return LinMap(f.field(), std::move(src), std::move(tgt), std::move(cols));
}

LinMap transpose(const LinMap& f, const BasedSpace& new_source, const BasedSpace& new_target) {
  if (new_source.dim() != f.target().dim() || new_target.dim() != f.source().dim())
    throw SpaceMismatch("transpose: dual spaces have the wrong dimension");
  return LinMap(f.field(), new_source, new_target, f.rows());
}

namespace {
LinMap combine(const LinMap& a, const LinMap& b, const Scalar& sb) {
  if (a.source().dim() != b.source().dim() || a.target().dim() != b.target().dim())
    throw SpaceMismatch("linear combination of maps with different shapes");
  std::vector<Vector> cols = a.columns();
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j].axpy(sb, b.column(j));
  return LinMap(a.field(), a.source(), a.target(), std::move(cols));
}
}  // namespace

LinMap operator+(const LinMap& a, const LinMap& b) { return combine(a, b, Scalar::one(a.field())); }
LinMap operator-(const LinMap& a, const LinMap& b) { return combine(a, b, -Scalar::one(a.field())); }

LinMap scale(const Scalar& c, const LinMap& f) {
  std::vector<Vector> cols;
  cols.reserve(f.columns().size());
  for (const auto& col : f.columns()) cols.push_back(col.scaled(c));
  return LinMap(f.field(), f.source(), f.target(), std::move(cols));
}

LinMap swap_map(Field field, const BasedSpace& v, const BasedSpace& w) {
  const std::size_t n = v.dim(), m = w.dim();
  return LinMap::from_columns(field, tensor_space(v, w), tensor_space(w, v), [&](std::size_t idx) {
    return Vector::unit(field, n * m, (idx % m) * n + idx / m);
  });
}

std::string render(const Vector& v, const BasedSpace& space) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, s] : v.entries()) {
    if (!first) os << " + ";
    first = false;
    if (!s.is_one()) os << s.str() << "·";
    os << (i < space.dim() ? space.label(i) : "#" + std::to_string(i));
  }
  return os.str();
}

}  // namespace hopf
