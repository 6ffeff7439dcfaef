#pragma once

// Reference computations for the acceptance suite. Everything here works on
// explicit monomial bases of k[x_1..x_n]/I with I monomial, using sparse
// row echelon forms over F_p. It shares no algorithm with the library: no
// Groebner bases, no normal forms, no strand code.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "burch/complex.hpp"
#include "burch/contraction.hpp"
#include "burch/krank.hpp"

namespace oracle {

using u32 = std::uint32_t;
using Exps = std::array<int, 8>;
using SparseVec = std::vector<std::pair<int, u32>>;  // sorted by index, nonzero

struct Field {
  u32 p = 32003;
  u32 add(u32 a, u32 b) const { return (a + b) % p; }
  u32 sub(u32 a, u32 b) const { return (a + p - b) % p; }
  u32 mul(u32 a, u32 b) const { return static_cast<u32>(static_cast<std::uint64_t>(a) * b % p); }
  u32 inv(u32 a) const;
};

/// Row echelon form; each stored row is monic at its smallest index.
class Echelon {
 public:
  explicit Echelon(Field F) : F_(F) {}
  /// Adds v to the span; false if it was already there.
  bool insert(SparseVec v);
  bool contains(const SparseVec& v) const { return reduceFully(v).empty(); }
  /// Normal form modulo the span (no stored pivot index survives).
  SparseVec reduceFully(const SparseVec& v) const;
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  Field F_;
  std::unordered_map<int, SparseVec> rows_;
};

/// Basis of the kernel of the map sending basis vector c to images[c].
std::vector<SparseVec> kernel(const Field& F, const std::vector<SparseVec>& images);
int rankOf(const Field& F, const std::vector<SparseVec>& vs);

/// k[x_1..x_n]/I with I monomial and k-basis the standard monomials. With
/// truncate >= 0 the monomials of degree > truncate are dropped as well, which
/// models the polynomial ring in all degrees up to truncate.
class Ring {
 public:
  Ring(int n, std::vector<Exps> gens, int truncate = -1, u32 p = 32003);
  int nvars() const { return n_; }
  int size() const { return static_cast<int>(mono_.size()); }
  int degree(int b) const { return deg_[b]; }
  int top() const { return top_; }
  const Exps& monomial(int b) const { return mono_[b]; }
  /// Index of the monomial, or -1 when it is zero in the ring.
  int find(const Exps& e) const;
  int mul(int a, int b) const { return table_[a * size() + b]; }
  int mulVar(int b, int v) const { return varMul_[b * n_ + v]; }
  const std::vector<int>& ofDegree(int d) const;
  const Field& field() const { return F_; }

 private:
  int n_, top_ = 0;
  Field F_;
  std::vector<Exps> gens_, mono_;
  std::vector<int> deg_, table_, varMul_;
  std::map<Exps, int> index_;
  std::vector<std::vector<int>> byDeg_;
  std::vector<int> empty_;
};

/// A map of graded free modules; column c is an element of the target,
/// indexed by row * ring.size() + monomial.
struct Mat {
  std::vector<int> rowDeg, colDeg;
  std::vector<SparseVec> cols;
};

/// Element of a free module times a basis monomial of the ring.
SparseVec shift(const Ring& R, const SparseVec& v, int b);
SparseVec multiplyVar(const Ring& R, const SparseVec& v, int var);
/// Images of all basis vectors of the source strand in internal degree D.
std::vector<SparseVec> strandImages(const Ring& R, const Mat& d, int D);
/// Basis of the degree D part of the R-span of the columns.
std::vector<SparseVec> spanInDegree(const Ring& R, const Mat& d, int D);

SparseVec apply(const Ring& R, const Mat& d, const SparseVec& v);
/// d_{n-1} d_n = 0 on every basis column.
bool composesToZero(const Ring& R, const Mat& dn, const Mat& dn1);
/// dim_k H_n of C_{n+1} -> C_n -> C_{n-1} summed over all internal degrees
/// (for truncated rings, over degrees <= maxDeg).
long homology(const Ring& R, const std::vector<int>& degN, const Mat* dIn, const Mat* dOut, int maxDeg = 1 << 20);

/// k-rank of S/N for graded subspaces N <= S of a free module, via
/// kRank = dim (soc + mS + N) / (mS + N).
struct Subquotient {
  std::vector<int> ambientDeg;
  Mat S;  // generators of S
  Mat N;  // generators of N
};
int kRank(const Ring& R, const Subquotient& q);

/// Minimal free resolution of coker(rel) and k-ranks of its syzygy modules.
struct SyzygyTable {
  std::vector<int> betti;  // betti[i] = rank F_i
  std::vector<int> kRank;  // kRank[i] = k-rank of syz_i, syz_0 = M
};
SyzygyTable syzygies(const Ring& R, const std::vector<int>& genDeg, const Mat& rel, int upTo);

/// Monomial ideal arithmetic by enumeration of monomials.
std::vector<Exps> colonByMaximal(int n, const std::vector<Exps>& I);
std::vector<Exps> burchIdeal(int n, const std::vector<Exps>& I);
/// Number of variables outside the monomial ideal J.
int linearCodim(int n, const std::vector<Exps>& J);
std::vector<Exps> minimalize(std::vector<Exps> gens);
bool memberOf(const Exps& m, const std::vector<Exps>& gens);

/// Number of bar words [x_1|..|x_p] y of total degree n, each x_t of
/// positive degree, counted by iterating over the bar length.
std::vector<long> barRankCount(const std::vector<int>& xRanks, const std::vector<int>& yRanks, int upTo);

// Conversion of library objects into the representation above.
Exps exps(burch::Monomial m, int n);
std::vector<Exps> monomialGens(const burch::Ideal& I);
Ring ringOf(const burch::QuotientRing& R);
Mat matOf(const Ring& R, const burch::PolyMatrix& d);
SparseVec vecOf(const Ring& R, const burch::FreeElement& v);
SyzygyTable syzygies(const Ring& R, const burch::ModulePresentation& M, int upTo);

/// p i = id and id - i p = d h + h d on every basis element, evaluated with
/// the matrices converted into R. Empty string when both hold.
std::string contractionIdentities(const Ring& R, const burch::Contraction& c);

}  // namespace oracle
