#include "burch/free_module.hpp"

#include <algorithm>

#include "burch/error.hpp"

namespace burch {

FreeElement FreeElement::basis(const RingPtr& r, int j) {
  FreeElement e;
  e.entries_.emplace_back(j, Polynomial::constant(r, 1));
  return e;
}

FreeElement FreeElement::fromEntries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  FreeElement e;
  for (auto& [j, p] : entries) {
    if (!e.entries_.empty() && e.entries_.back().first == j) {
      e.entries_.back().second += p;
      if (e.entries_.back().second.isZero()) e.entries_.pop_back();
    } else if (!p.isZero()) {
      e.entries_.emplace_back(j, std::move(p));
    }
  }
  return e;
}

Polynomial FreeElement::at(int j) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), j,
                             [](const Entry& e, int k) { return e.first < k; });
  if (it != entries_.end() && it->first == j) return it->second;
  return Polynomial();
}

void FreeElement::add(int j, const Polynomial& p) {
  if (p.isZero()) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), j,
                             [](const Entry& e, int k) { return e.first < k; });
  if (it != entries_.end() && it->first == j) {
    it->second += p;
    if (it->second.isZero()) entries_.erase(it);
  } else {
    entries_.insert(it, Entry(j, p));
  }
}

FreeElement FreeElement::operator+(const FreeElement& o) const {
  FreeElement out;
  out.entries_.reserve(entries_.size() + o.entries_.size());
  std::size_t i = 0, j = 0;
  while (i < entries_.size() || j < o.entries_.size()) {
    if (j == o.entries_.size() || (i < entries_.size() && entries_[i].first < o.entries_[j].first)) {
      out.entries_.push_back(entries_[i++]);
    } else if (i == entries_.size() || o.entries_[j].first < entries_[i].first) {
      out.entries_.push_back(o.entries_[j++]);
    } else {
      Polynomial s = entries_[i].second + o.entries_[j].second;
      if (!s.isZero()) out.entries_.emplace_back(entries_[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

FreeElement FreeElement::operator-() const {
  FreeElement out = *this;
  for (auto& e : out.entries_) e.second = -e.second;
  return out;
}

FreeElement FreeElement::operator-(const FreeElement& o) const { return *this + (-o); }

FreeElement FreeElement::times(const Polynomial& p) const {
  FreeElement out;
  if (p.isZero()) return out;
  for (const auto& [j, c] : entries_) {
    Polynomial q = c * p;
    if (!q.isZero()) out.entries_.emplace_back(j, std::move(q));
  }
  return out;
}

FreeElement FreeElement::scaled(Coeff c) const {
  FreeElement out;
  for (const auto& [j, q] : entries_) {
    Polynomial s = q.scaled(c);
    if (!s.isZero()) out.entries_.emplace_back(j, std::move(s));
  }
  return out;
}

FreeElement FreeElement::mulTerm(Monomial m, Coeff c) const {
  FreeElement out;
  for (const auto& [j, q] : entries_) {
    Polynomial s = q.mulTerm(m, c);
    if (!s.isZero()) out.entries_.emplace_back(j, std::move(s));
  }
  return out;
}

int FreeElement::degree(const std::vector<int>& basisDegrees) const {
  int d = -1;
  for (const auto& [j, p] : entries_) {
    if (j < 0 || j >= static_cast<int>(basisDegrees.size()))
      throw StructuralError("basis index outside declared rank");
    if (!p.isHomogeneous()) throw InputError("inhomogeneous free module element");
    int e = p.degree() + basisDegrees[j];
    if (d >= 0 && e != d) throw InputError("inhomogeneous free module element");
    d = e;
  }
  return d;
}

bool FreeElement::isHomogeneous(const std::vector<int>& basisDegrees) const {
  try {
    degree(basisDegrees);
    return true;
  } catch (const InputError&) {
    return false;
  }
}

std::string FreeElement::toString(const char* basisName) const {
  if (entries_.empty()) return "0";
  std::string s;
  for (const auto& [j, p] : entries_) {
    if (!s.empty()) s += " + ";
    s += "(" + p.toString() + ")*" + basisName + std::to_string(j + 1);
  }
  return s;
}

PolyMatrix::PolyMatrix(RingPtr r, std::vector<int> rowDegrees, std::vector<int> colDegrees)
    : ring_(std::move(r)), rowDegrees_(std::move(rowDegrees)), colDegrees_(std::move(colDegrees)) {
  columns_.resize(colDegrees_.size());
}

PolyMatrix PolyMatrix::identity(RingPtr r, const std::vector<int>& degrees) {
  PolyMatrix m(r, degrees, degrees);
  for (int j = 0; j < m.cols(); ++j) m.columns_[j] = FreeElement::basis(r, j);
  return m;
}

void PolyMatrix::setColumn(int j, FreeElement v) {
  if (j < 0 || j >= cols()) throw StructuralError("column index out of range");
  if (v.support() > rows()) throw StructuralError("column has entries outside the target rank");
  columns_[j] = std::move(v);
}

void PolyMatrix::setEntry(int i, int j, const Polynomial& p) {
  if (i < 0 || i >= rows() || j < 0 || j >= cols()) throw StructuralError("entry index out of range");
  FreeElement& c = columns_[j];
  Polynomial old = c.at(i);
  c.add(i, p - old);
}

FreeElement PolyMatrix::apply(const FreeElement& v) const {
  if (v.support() > cols()) throw StructuralError("vector rank exceeds matrix source rank");
  FreeElement out;
  for (const auto& [j, p] : v.entries()) out += columns_[j].times(p);
  return out;
}

PolyMatrix PolyMatrix::compose(const PolyMatrix& rhs) const {
  if (rhs.rows() != cols()) throw StructuralError("rank mismatch in matrix composition");
  PolyMatrix out(ring_ ? ring_ : rhs.ring_, rowDegrees_, rhs.colDegrees_);
  for (int j = 0; j < rhs.cols(); ++j) out.columns_[j] = apply(rhs.columns_[j]);
  return out;
}

bool PolyMatrix::isZero() const {
  for (const auto& c : columns_)
    if (!c.isZero()) return false;
  return true;
}

bool PolyMatrix::isHomogeneous() const {
  for (int j = 0; j < cols(); ++j)
    for (const auto& [i, p] : columns_[j].entries()) {
      if (!p.isHomogeneous()) return false;
      if (p.degree() != colDegrees_[j] - rowDegrees_[i]) return false;
    }
  return true;
}

bool PolyMatrix::entriesInMaximalIdeal() const {
  for (const auto& c : columns_)
    for (const auto& [i, p] : c.entries())
      if (p.constantTerm() != 0) return false;
  return true;
}

}  // namespace burch
