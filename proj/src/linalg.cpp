#include "burch/linalg.hpp"

#include <algorithm>

#include "burch/error.hpp"

namespace burch {

void axpy(SparseVec& y, Coeff a, const SparseVec& x, const PrimeField& F) {
  if (a == 0 || x.empty()) return;
  SparseVec out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(y[i++]);
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, F.mul(a, x[j].second));
      ++j;
    } else {
      Coeff s = F.add(y[i].second, F.mul(a, x[j].second));
      if (s) out.emplace_back(y[i].first, s);
      ++i;
      ++j;
    }
  }
  y.swap(out);
}

SparseVec scaledVec(const SparseVec& x, Coeff a, const PrimeField& F) {
  SparseVec out;
  if (a == 0) return out;
  out.reserve(x.size());
  for (const auto& [i, v] : x) out.emplace_back(i, F.mul(v, a));
  return out;
}

SparseVec canonicalVec(std::vector<std::pair<int, Coeff>> raw, const PrimeField& F) {
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (const auto& [i, v] : raw) {
    if (!out.empty() && out.back().first == i) {
      out.back().second = F.add(out.back().second, v);
      if (out.back().second == 0) out.pop_back();
    } else if (v % F.prime()) {
      out.emplace_back(i, v % F.prime());
    }
  }
  return out;
}

void Echelon::reduce(SparseVec& v, SparseVec* hist) const {
  std::size_t pos = 0;
  while (pos < v.size()) {
    auto it = pivot_.find(v[pos].first);
    if (it == pivot_.end()) {
      ++pos;
      continue;
    }
    Coeff c = F_.neg(v[pos].second);
    if (hist && track_) axpy(*hist, c, hist_[it->second], F_);
    axpy(v, c, rows_[it->second], F_);
  }
}

bool Echelon::insert(SparseVec v, int id, SparseVec* dependency) {
  SparseVec h;
  if (track_) {
    if (id < 0) throw InternalError("tracked echelon insertion needs a label");
    h.emplace_back(id, 1);
  }
  reduce(v, track_ ? &h : nullptr);
  if (v.empty()) {
    if (dependency) *dependency = std::move(h);
    return false;
  }
  Coeff inv = F_.inv(v.front().second);
  if (inv != 1) {
    for (auto& e : v) e.second = F_.mul(e.second, inv);
    for (auto& e : h) e.second = F_.mul(e.second, inv);
  }
  pivot_[v.front().first] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(v));
  if (track_) hist_.push_back(std::move(h));
  return true;
}

bool Echelon::inSpan(SparseVec v) const {
  reduce(v);
  return v.empty();
}

std::vector<SparseVec> kernelBasis(const std::vector<SparseVec>& columns, const PrimeField& F) {
  Echelon e(F, true);
  std::vector<SparseVec> ker;
  for (int j = 0; j < static_cast<int>(columns.size()); ++j) {
    SparseVec dep;
    if (!e.insert(columns[j], j, &dep)) {
      std::sort(dep.begin(), dep.end());
      ker.push_back(std::move(dep));
    }
  }
  return ker;
}

int rankOf(const std::vector<SparseVec>& vectors, const PrimeField& F) {
  Echelon e(F);
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

}  // namespace burch
