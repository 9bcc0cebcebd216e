#include "hopf/linalg.hpp"

namespace hopf {

Vector EchelonForm::reduce(const Vector& v) const {
  if (v.dim() != dim_) throw SpaceMismatch("echelon form: vector of wrong dimension");
  if (rows_.empty() || v.is_zero()) return v;
  // Pivot coordinates of v do not change while eliminating: every row is
  // zero on the other pivot columns.
  VectorBuilder b(field_, dim_);
  b.add(v);
  bool touched = false;
  for (const auto& [i, s] : v.entries()) {
    auto it = rows_.find(i);
    if (it == rows_.end()) continue;
    b.add(it->second, -s);
    touched = true;
  }
  return touched ? b.build() : v;
}

bool EchelonForm::insert(const Vector& v) {
  Vector r = reduce(v);
  if (r.is_zero()) return false;
  const std::size_t p = r.leading();
  r = r.scaled(r.entries().front().second.inverse());
  for (auto& [q, row] : rows_) {
    Scalar c = row.coeff(p);
    if (!c.is_zero()) row.axpy(-c, r);
  }
  rows_.emplace(p, std::move(r));
  return true;
}

std::vector<std::size_t> EchelonForm::pivots() const {
  std::vector<std::size_t> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(p);
  return out;
}

std::vector<std::size_t> EchelonForm::free_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < dim_; ++j)
    if (!rows_.contains(j)) out.push_back(j);
  return out;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(Field field, BasedSpace ambient, std::vector<Vector> basis, std::vector<std::size_t> keys)
    : field_(field), ambient_(std::move(ambient)), basis_(std::move(basis)), keys_(std::move(keys)) {
  if (basis_.size() != keys_.size()) throw SpaceMismatch("subspace: one key per basis vector required");
  std::vector<std::string> labels;
  labels.reserve(keys_.size());
  for (std::size_t k : keys_) labels.push_back("<" + ambient_.label(k) + ">");
  carrier_ = BasedSpace(std::move(labels));
}

LinMap Subspace::inclusion() const { return LinMap(field_, carrier_, ambient_, basis_); }

LinMap Subspace::section() const {
  return LinMap::from_columns(field_, ambient_, carrier_, [&](std::size_t j) { return coordinates(Vector::unit(field_, ambient_.dim(), j)); });
}

Vector Subspace::coordinates(const Vector& v) const {
  std::vector<Vector::Entry> out;
  for (std::size_t k = 0; k < keys_.size(); ++k) {
    Scalar c = v.coeff(keys_[k]);
    if (!c.is_zero()) out.emplace_back(k, std::move(c));
  }
  return Vector::from_entries(field_, dim(), std::move(out));
}

Vector Subspace::embed(const Vector& coords) const {
  VectorBuilder b(field_, ambient_.dim());
  for (const auto& [k, s] : coords.entries()) b.add(basis_[k], s);
  return b.build();
}

bool Subspace::contains(const Vector& v) const { return embed(coordinates(v)) == v; }

QuotientSpace::QuotientSpace(BasedSpace ambient, const EchelonForm& relations)
    : ambient_(std::move(ambient)), relation_rank_(relations.rank()) {
  const Field field = relations.field();
  representatives_ = relations.free_columns();
  std::vector<std::size_t> position(ambient_.dim(), 0);
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < representatives_.size(); ++k) {
    position[representatives_[k]] = k;
    labels.push_back("[" + ambient_.label(representatives_[k]) + "]");
  }
  carrier_ = BasedSpace(std::move(labels));
  const std::size_t q = representatives_.size();
  std::vector<Vector> proj(ambient_.dim());
  for (std::size_t k = 0; k < q; ++k) proj[representatives_[k]] = Vector::unit(field, q, k);
  for (const auto& [p, row] : relations.rows()) {
    // row = e_p + Σ a_j e_j over non-pivot j, so [e_p] = -Σ a_j [e_j]
    std::vector<Vector::Entry> entries;
    for (const auto& [j, a] : row.entries())
      if (j != p) entries.emplace_back(position[j], -a);
    proj[p] = Vector::from_entries(field, q, std::move(entries));
  }
  projection_ = LinMap(field, ambient_, carrier_, std::move(proj));
  lift_ = LinMap::from_columns(field, carrier_, ambient_, [&](std::size_t k) {
    return Vector::unit(field, ambient_.dim(), representatives_[k]);
  });
}

// ---------------------------------------------------------------------------

std::size_t rank(Field field, std::size_t dim, const std::vector<Vector>& vectors) {
  EchelonForm e(field, dim);
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

std::size_t rank(const LinMap& a) {
  // Eliminate whichever side is smaller.
  if (a.source().dim() <= a.target().dim()) return rank(a.field(), a.target().dim(), a.columns());
  return rank(a.field(), a.source().dim(), a.rows());
}

bool is_injective(const LinMap& a) { return rank(a) == a.source().dim(); }
bool is_surjective(const LinMap& a) { return rank(a) == a.target().dim(); }

Subspace kernel(const LinMap& a) {
  const Field field = a.field();
  const std::size_t n = a.source().dim();
  EchelonForm e(field, n);
  for (const auto& r : a.rows()) e.insert(r);
  std::vector<std::size_t> free = e.free_columns();
  std::vector<Vector> basis;
  basis.reserve(free.size());
  for (std::size_t j : free) {
    std::vector<Vector::Entry> entries{{j, Scalar::one(field)}};
    for (const auto& [p, row] : e.rows()) {
      Scalar c = row.coeff(j);
      if (!c.is_zero()) entries.emplace_back(p, -c);
    }
    basis.push_back(Vector::from_entries(field, n, std::move(entries)));
  }
  return Subspace(field, a.source(), std::move(basis), std::move(free));
}

Subspace span(Field field, const BasedSpace& ambient, const std::vector<Vector>& vectors) {
  EchelonForm e(field, ambient.dim());
  for (const auto& v : vectors) e.insert(v);
  std::vector<Vector> basis;
  std::vector<std::size_t> keys;
  for (const auto& [p, row] : e.rows()) {
    basis.push_back(row);
    keys.push_back(p);
  }
  return Subspace(field, ambient, std::move(basis), std::move(keys));
}

Subspace image(const LinMap& a) { return span(a.field(), a.target(), a.columns()); }

QuotientSpace quotient(Field field, const BasedSpace& v, const std::vector<Vector>& relations) {
  EchelonForm e(field, v.dim());
  for (const auto& r : relations) e.insert(r);
  return QuotientSpace(v, e);
}

std::vector<std::optional<Vector>> solve_many(const LinMap& a, const std::vector<Vector>& bs) {
  const Field field = a.field();
  const std::size_t n = a.source().dim();
  const std::size_t m = bs.size();
  const std::size_t rows = a.target().dim();
  // Augmented rows [a_i | b_0[i] ... b_{m-1}[i]].
  std::vector<std::vector<Vector::Entry>> aug(rows);
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [i, s] : a.column(j).entries()) aug[i].emplace_back(j, s);
  for (std::size_t k = 0; k < m; ++k) {
    if (bs[k].dim() != rows) throw SpaceMismatch("solve: right-hand side of wrong dimension");
    for (const auto& [i, s] : bs[k].entries()) aug[i].emplace_back(n + k, s);
  }
  EchelonForm e(field, n + m);
  for (auto& r : aug) e.insert(Vector::from_entries(field, n + m, std::move(r)));

  std::vector<bool> consistent(m, true);
  for (const auto& [p, row] : e.rows()) {
    if (p < n) continue;
    for (const auto& [j, s] : row.entries()) consistent[j - n] = false;
  }
  std::vector<std::vector<Vector::Entry>> sol(m);
  for (const auto& [p, row] : e.rows()) {
    if (p >= n) break;
    for (const auto& [j, s] : row.entries())
      if (j >= n) sol[j - n].emplace_back(p, s);
  }
  std::vector<std::optional<Vector>> out(m);
  for (std::size_t k = 0; k < m; ++k)
    if (consistent[k]) out[k] = Vector::from_entries(field, n, std::move(sol[k]));
  return out;
}

std::optional<Vector> solve(const LinMap& a, const Vector& b) { return solve_many(a, {b}).front(); }

std::optional<LinMap> inverse(const LinMap& a) {
  const std::size_t n = a.source().dim();
  if (n != a.target().dim()) return std::nullopt;
  std::vector<Vector> units;
  units.reserve(n);
  for (std::size_t k = 0; k < n; ++k) units.push_back(Vector::unit(a.field(), n, k));
  if (rank(a) != n) return std::nullopt;
  auto sols = solve_many(a, units);
  std::vector<Vector> cols;
  cols.reserve(n);
  for (auto& s : sols) cols.push_back(std::move(*s));
  return LinMap(a.field(), a.target(), a.source(), std::move(cols));
}

}  // namespace hopf
