#include "burch/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "burch/error.hpp"

namespace burch {

PolyRing::PolyRing(std::vector<std::string> names, std::uint32_t p)
    : field(p), vars(std::move(names)) {
  if (vars.empty()) throw InputError("at least one variable is required");
  if (static_cast<int>(vars.size()) > kMaxVars)
    throw InputError("at most 8 variables are supported");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const auto& v = vars[i];
    if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
      throw InputError("invalid variable name '" + v + "'");
    for (char ch : v)
      if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
        throw InputError("invalid variable name '" + v + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (vars[j] == v) throw InputError("duplicate variable '" + v + "'");
  }
}

int PolyRing::varIndex(std::string_view name) const {
  for (int i = 0; i < nvars(); ++i)
    if (vars[i] == name) return i;
  return -1;
}

RingPtr makeRing(std::vector<std::string> vars, std::uint32_t p) {
  return std::make_shared<const PolyRing>(std::move(vars), p);
}

bool sameRing(const PolyRing* a, const PolyRing* b) {
  if (a == b) return true;
  if (!a || !b) return true;  // an unbound zero matches anything
  return a->field == b->field && a->vars == b->vars;
}

const RingPtr& Polynomial::pickRing(const Polynomial& a, const Polynomial& b) {
  if (!sameRing(a.ring_.get(), b.ring_.get()))
    throw StructuralError("polynomials belong to different rings");
  return a.ring_ ? a.ring_ : b.ring_;
}

const PrimeField& Polynomial::field() const {
  if (!ring_) throw StructuralError("polynomial has no ring");
  return ring_->field;
}

Polynomial Polynomial::constant(RingPtr r, std::int64_t c) {
  Polynomial p(std::move(r));
  Coeff v = p.field().fromInt(c);
  if (v) p.terms_.push_back({Monomial(), v});
  return p;
}

Polynomial Polynomial::monomial(RingPtr r, Monomial m, Coeff c) {
  Polynomial p(std::move(r));
  c %= p.field().prime();
  if (c) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::variable(RingPtr r, int k) {
  if (k < 0 || k >= r->nvars()) throw StructuralError("variable index out of range");
  return monomial(std::move(r), Monomial::var(k), 1);
}

Polynomial Polynomial::fromTerms(RingPtr r, std::vector<Term> terms) {
  Polynomial p(std::move(r));
  const auto& F = p.field();
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grevlex(a.m, b.m) > 0; });
  for (const auto& t : terms) {
    Coeff c = t.c % F.prime();
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      p.terms_.back().c = F.add(p.terms_.back().c, c);
      if (p.terms_.back().c == 0) p.terms_.pop_back();
    } else if (c) {
      p.terms_.push_back({t.m, c});
    }
  }
  return p;
}

Polynomial Polynomial::fromSortedTerms(RingPtr r, std::vector<Term> terms) {
  Polynomial p(std::move(r));
  p.terms_ = std::move(terms);
  return p;
}

int Polynomial::lowDegree() const {
  int d = -1;
  for (const auto& t : terms_) {
    int e = t.m.degree();
    if (d < 0 || e < d) d = e;
  }
  return d;
}

bool Polynomial::isHomogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().m.degree();
  for (const auto& t : terms_)
    if (t.m.degree() != d) return false;
  return true;
}

Coeff Polynomial::constantTerm() const {
  if (!terms_.empty() && terms_.back().m.isOne()) return terms_.back().c;
  return 0;
}

Coeff Polynomial::coeff(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, Monomial x) {
    return grevlex(t.m, x) > 0;
  });
  if (it != terms_.end() && it->m == m) return it->c;
  return 0;
}

Polynomial Polynomial::homogeneousPart(int d) const {
  Polynomial p(ring_);
  for (const auto& t : terms_)
    if (t.m.degree() == d) p.terms_.push_back(t);
  return p;
}

Polynomial Polynomial::addMul(const Polynomial& o, Monomial m, Coeff c) const {
  const RingPtr& r = pickRing(*this, o);
  Polynomial out(r);
  if (!r) return out;
  if (o.terms_.empty() || c == 0) {
    out.terms_ = terms_;
    return out;
  }
  const auto& F = r->field;
  out.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size()) {
      out.terms_.push_back(terms_[i++]);
      continue;
    }
    Monomial mj = o.terms_[j].m * m;
    if (i == terms_.size()) {
      out.terms_.push_back({mj, F.mul(o.terms_[j].c, c)});
      ++j;
      continue;
    }
    auto cmp = grevlex(terms_[i].m, mj);
    if (cmp > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      out.terms_.push_back({mj, F.mul(o.terms_[j].c, c)});
      ++j;
    } else {
      Coeff s = F.add(terms_[i].c, F.mul(o.terms_[j].c, c));
      if (s) out.terms_.push_back({mj, s});
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const { return addMul(o, Monomial(), 1); }

Polynomial Polynomial::operator-(const Polynomial& o) const {
  const RingPtr& r = pickRing(*this, o);
  if (!r) return Polynomial();
  return addMul(o, Monomial(), r->field.prime() - 1);
}

Polynomial Polynomial::operator-() const {
  Polynomial out(ring_);
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.c = ring_->field.neg(t.c);
  return out;
}

Polynomial Polynomial::scaled(Coeff c) const {
  Polynomial out(ring_);
  if (terms_.empty()) return out;
  c %= field().prime();
  if (c == 0) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.c = ring_->field.mul(t.c, c);
  return out;
}

Polynomial Polynomial::mulTerm(Monomial m, Coeff c) const {
  Polynomial out(ring_);
  if (terms_.empty()) return out;
  c %= field().prime();
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  // multiplication by a monomial preserves the order
  for (const auto& t : terms_) out.terms_.push_back({t.m * m, ring_->field.mul(t.c, c)});
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  const RingPtr& r = pickRing(*this, o);
  Polynomial out(r);
  if (terms_.empty() || o.terms_.empty()) return out;
  if (terms_.size() == 1) return o.mulTerm(terms_[0].m, terms_[0].c);
  if (o.terms_.size() == 1) return mulTerm(o.terms_[0].m, o.terms_[0].c);
  const auto& F = r->field;
  std::unordered_map<Monomial, Coeff> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Coeff& slot = acc[a.m * b.m];
      slot = F.add(slot, F.mul(a.c, b.c));
    }
  std::vector<Term> ts;
  ts.reserve(acc.size());
  for (const auto& [m, c] : acc)
    if (c) ts.push_back({m, c});
  std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) { return grevlex(a.m, b.m) > 0; });
  out.terms_ = std::move(ts);
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!sameRing(a.ring_.get(), b.ring_.get())) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].m == b.terms_[i].m) || a.terms_[i].c != b.terms_[i].c) return false;
  return true;
}

std::string monomialToString(const PolyRing& r, Monomial m) {
  std::string s;
  for (int k = 0; k < r.nvars(); ++k) {
    int e = m.exponent(k);
    if (!e) continue;
    if (!s.empty()) s += '*';
    s += r.vars[k];
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::toString() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    std::int64_t c = ring_->field.toSigned(t.c);
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    first = false;
    if (t.m.isOne()) {
      s += std::to_string(c);
    } else {
      if (c != 1) s += std::to_string(c) + "*";
      s += monomialToString(*ring_, t.m);
    }
  }
  return s;
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  Parser(RingPtr r, std::string_view text) : ring_(std::move(r)), text_(text) {}

  Polynomial parseAll() {
    skip();
    if (pos_ == text_.size()) fail("empty polynomial");
    Polynomial p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("cannot parse polynomial \"" + std::string(text_) + "\" at column " +
                     std::to_string(pos_ + 1) + ": " + msg);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc;
    bool neg = eat('-');
    if (!neg) eat('+');
    Polynomial t = term();
    acc = neg ? -t : t;
    while (true) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = power();
    while (true) {
      skip();
      if (eat('*')) {
        acc = acc * power();
        continue;
      }
      if (pos_ < text_.size()) {
        char c = text_[pos_];
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_')
          fail("implicit multiplication is not allowed; use '*'");
      }
      break;
    }
    return acc;
  }

  Polynomial power() {
    Polynomial base = primary();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      long e = std::stol(std::string(text_.substr(start, pos_ - start)));
      if (e > kMaxExponent) fail("exponent too large");
      Polynomial r = Polynomial::constant(ring_, 1);
      for (long i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  Polynomial primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) fail("missing ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t v = 0;
      std::uint32_t p = ring_->field.prime();
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        v = (v * 10 + (text_[pos_++] - '0')) % p;
      return Polynomial::constant(ring_, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      int k = ring_->varIndex(name);
      if (k < 0) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Polynomial::variable(ring_, k);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  RingPtr ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(RingPtr r, std::string_view text) {
  Parser p(r, text);
  Polynomial out = p.parseAll();
  if (!out.ring_) out.ring_ = std::move(r);
  return out;
}

}  // namespace burch
