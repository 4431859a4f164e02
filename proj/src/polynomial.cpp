#include "eds/polynomial.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace eds {

namespace {

std::vector<std::uint32_t> values(const std::vector<FieldElement>& c) {
  std::vector<std::uint32_t> v(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) v[i] = c[i].value();
  return v;
}

std::uint32_t inv_prime(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

Polynomial::Polynomial(const FieldSpec& f, std::vector<FieldElement> coeffs) : field_(&f), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (&c.field() != field_) throw FieldMismatch();
  normalize();
}

void Polynomial::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Polynomial::check_same(const Polynomial& o) const {
  if (field_ != o.field_) throw FieldMismatch();
}

Polynomial Polynomial::from_ints(const FieldSpec& f, std::initializer_list<long long> low_to_high) {
  return from_ints(f, std::vector<long long>(low_to_high));
}

Polynomial Polynomial::from_ints(const FieldSpec& f, const std::vector<long long>& low_to_high) {
  std::vector<FieldElement> c;
  c.reserve(low_to_high.size());
  for (auto v : low_to_high) c.push_back(f.from_int(v));
  return Polynomial(f, std::move(c));
}

Polynomial Polynomial::constant(const FieldElement& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::monomial(const FieldElement& c, int k) {
  std::vector<FieldElement> v(k + 1, c.field().zero());
  v[k] = c;
  return Polynomial(c.field(), std::move(v));
}

Polynomial Polynomial::variable(const FieldSpec& f) { return monomial(f.one(), 1); }

FieldElement Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return field_->zero();
  return c_[i];
}

FieldElement Polynomial::leading() const { return c_.empty() ? field_->zero() : c_.back(); }

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same(o);
  const auto& big = c_.size() >= o.c_.size() ? c_ : o.c_;
  const auto& small = c_.size() >= o.c_.size() ? o.c_ : c_;
  Polynomial r(*field_);
  r.c_ = big;
  for (std::size_t i = 0; i < small.size(); ++i) r.c_[i] += small[i];
  r.normalize();
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same(o);
  Polynomial r(*field_);
  if (c_.empty() || o.c_.empty()) return r;
  const std::size_t n = c_.size(), m = o.c_.size();
  if (field_->is_prime()) {
    const std::uint32_t p = field_->characteristic();
    auto a = values(c_), b = values(o.c_);
    std::vector<std::uint64_t> acc(n + m - 1, 0);
    // products are below 2^32, so the sums never overflow at desk scale
    for (std::size_t i = 0; i < n; ++i) {
      if (!a[i]) continue;
      const std::uint64_t ai = a[i];
      std::uint64_t* dst = acc.data() + i;
      for (std::size_t j = 0; j < m; ++j) dst[j] += ai * b[j];
    }
    r.c_.resize(n + m - 1);
    for (std::size_t k = 0; k < acc.size(); ++k) r.c_[k] = field_->from_int(static_cast<long long>(acc[k] % p));
  } else {
    r.c_.assign(n + m - 1, field_->zero());
    for (std::size_t i = 0; i < n; ++i) {
      if (c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  r.normalize();
  return r;
}

Polynomial Polynomial::operator*(const FieldElement& c) const {
  if (&c.field() != field_) throw FieldMismatch();
  Polynomial r = *this;
  for (auto& x : r.c_) x *= c;
  r.normalize();
  return r;
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (&a.field() != &b.field()) throw FieldMismatch();
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const FieldSpec& f = a.field();
  if (a.degree() < b.degree()) return {Polynomial(f), a};
  const int db = b.degree();
  const int da = a.degree();
  if (f.is_prime()) {
    const std::uint32_t p = f.characteristic();
    auto r = values(a.coeffs());
    auto bv = values(b.coeffs());
    std::vector<std::uint32_t> q(da - db + 1, 0);
    const std::uint64_t lead_inv = inv_prime(bv[db], p);
    std::vector<std::uint64_t> neg_b(db + 1);
    for (int i = 0; i <= db; ++i) neg_b[i] = (p - bv[i]) % p;
    for (int k = da; k >= db; --k) {
      if (!r[k]) continue;
      const std::uint64_t c = r[k] * lead_inv % p;
      q[k - db] = static_cast<std::uint32_t>(c);
      std::uint32_t* dst = r.data() + (k - db);
      for (int i = 0; i < db; ++i) dst[i] = static_cast<std::uint32_t>((dst[i] + c * neg_b[i]) % p);
      r[k] = 0;
    }
    std::vector<FieldElement> qc(q.size()), rc(db > 0 ? db : 0);
    for (std::size_t i = 0; i < q.size(); ++i) qc[i] = f.from_int(q[i]);
    for (int i = 0; i < db; ++i) rc[i] = f.from_int(r[i]);
    return {Polynomial(f, std::move(qc)), Polynomial(f, std::move(rc))};
  }
  std::vector<FieldElement> r = a.coeffs();
  std::vector<FieldElement> q(da - db + 1, f.zero());
  const FieldElement lead_inv = b.leading().inverse();
  const auto& bc = b.coeffs();
  for (int k = da; k >= db; --k) {
    if (r[k].is_zero()) continue;
    FieldElement c = r[k] * lead_inv;
    q[k - db] = c;
    for (int i = 0; i < db; ++i) r[k - db + i] -= c * bc[i];
    r[k] = f.zero();
  }
  r.resize(db > 0 ? db : 0);
  return {Polynomial(f, std::move(q)), Polynomial(f, std::move(r))};
}

Polynomial Polynomial::operator/(const Polynomial& o) const {
  DivMod qr = divmod(*this, o);
  if (!qr.remainder.is_zero()) throw DomainError("inexact polynomial division");
  return qr.quotient;
}

Polynomial Polynomial::operator%(const Polynomial& o) const { return divmod(*this, o).remainder; }

Polynomial Polynomial::monic() const {
  if (c_.empty()) return *this;
  if (c_.back().is_one()) return *this;
  return *this * c_.back().inverse();
}

Polynomial Polynomial::derivative() const {
  Polynomial r(*field_);
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * field_->from_int(static_cast<long long>(i));
  r.normalize();
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(field_->one());
  Polynomial base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::shift(int k) const {
  if (c_.empty() || k == 0) return *this;
  Polynomial r(*field_);
  r.c_.assign(k, field_->zero());
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

FieldElement Polynomial::operator()(const FieldElement& x) const {
  if (&x.field() != field_) throw FieldMismatch();
  FieldElement acc = field_->zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

FieldElement Polynomial::eval_embedded(const FieldElement& x) const {
  if (!field_->is_prime() || x.field().characteristic() != field_->characteristic())
    throw DomainError("eval_embedded needs a prime-field polynomial and a point of the same characteristic");
  const FieldSpec& big = x.field();
  FieldElement acc = big.zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + big.from_int(it->value());
  return acc;
}

std::strong_ordering Polynomial::operator<=>(const Polynomial& o) const {
  if (degree() != o.degree()) return degree() <=> o.degree();
  for (int i = degree(); i >= 0; --i) {
    auto cmp = c_[i] <=> o.c_[i];
    if (cmp != 0) return cmp;
  }
  return std::strong_ordering::equal;
}

int Polynomial::term_count() const {
  int n = 0;
  for (const auto& c : c_)
    if (!c.is_zero()) ++n;
  return n;
}

std::string Polynomial::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const FieldElement& c = c_[i];
    if (c.is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    std::string cs = c.to_string();
    bool compound = cs.find(' ') != std::string::npos;
    if (i == 0) {
      out << (compound ? "(" + cs + ")" : cs);
      continue;
    }
    if (!c.is_one()) out << (compound ? "(" + cs + ")" : cs) << "*";
    out << var;
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

// ---------------------------------------------------------------------------

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field());
  return (a / gcd(a, b) * b).monic();
}

ExtendedGcd xgcd(const Polynomial& a, const Polynomial& b) {
  const FieldSpec& f = a.field();
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(f.one()), s1(f);
  Polynomial t0(f), t1 = Polynomial::constant(f.one());
  while (!r1.is_zero()) {
    DivMod qr = divmod(r0, r1);
    Polynomial s2 = s0 - qr.quotient * s1;
    Polynomial t2 = t0 - qr.quotient * t1;
    r0 = std::move(r1);
    r1 = std::move(qr.remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  FieldElement inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

Polynomial mulmod(const Polynomial& a, const Polynomial& b, const Polynomial& m) { return (a * b) % m; }

Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& m) {
  Polynomial result = Polynomial::constant(base.field().one()) % m;
  Polynomial b = base % m;
  while (e) {
    if (e & 1) result = mulmod(result, b, m);
    e >>= 1;
    if (e) b = mulmod(b, b, m);
  }
  return result;
}

Polynomial frobenius_powmod(const Polynomial& base, int k, const Polynomial& m) {
  const FieldSpec& f = base.field();
  Polynomial r = base % m;
  const int steps = k * f.degree();
  for (int i = 0; i < steps; ++i) r = powmod(r, f.characteristic(), m);
  return r;
}

int multiplicity(const Polynomial& f, const Polynomial& pi) {
  if (f.is_zero()) throw DomainError("multiplicity in the zero polynomial");
  if (pi.degree() < 1) throw DomainError("multiplicity of a constant");
  int k = 0;
  Polynomial g = f;
  while (g.degree() >= pi.degree()) {
    DivMod qr = divmod(g, pi);
    if (!qr.remainder.is_zero()) break;
    g = std::move(qr.quotient);
    ++k;
  }
  return k;
}

Polynomial Factorization::expand() const {
  Polynomial r = Polynomial::constant(unit);
  for (const auto& [g, e] : factors) r *= g.pow(static_cast<unsigned>(e));
  return r;
}

namespace {

// f = g(x^p) with coefficients replaced by their p-th roots
Polynomial pth_root_poly(const Polynomial& f) {
  const FieldSpec& fs = f.field();
  const int p = static_cast<int>(fs.characteristic());
  std::vector<FieldElement> c;
  for (int i = 0; i <= f.degree(); i += p) c.push_back(f.coeff(i).pth_root());
  for (int i = 0; i <= f.degree(); ++i)
    if (i % p != 0 && !f.coeff(i).is_zero()) throw ConsistencyError("pth_root_poly on a non p-th power");
  return Polynomial(fs, std::move(c));
}

void sff_into(const Polynomial& f, int mult, std::vector<std::pair<Polynomial, int>>& out) {
  if (f.degree() < 1) return;
  const int p = static_cast<int>(f.field().characteristic());
  Polynomial c = gcd(f, f.derivative());
  Polynomial w = f / c;
  int i = 1;
  while (w.degree() >= 1) {
    Polynomial y = gcd(w, c);
    Polynomial fac = w / y;
    if (fac.degree() >= 1) out.emplace_back(fac.monic(), i * mult);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() >= 1) sff_into(pth_root_poly(c.monic()), mult * p, out);
}

// g is squarefree, monic, a product of distinct irreducibles of degree k
void equal_degree_split(const Polynomial& g, int k, std::mt19937_64& rng, std::vector<Polynomial>& out) {
  if (g.degree() <= k) {
    out.push_back(g);
    return;
  }
  const FieldSpec& fs = g.field();
  const std::uint32_t p = fs.characteristic();
  const int steps = k * fs.degree();
  while (true) {
    std::vector<FieldElement> coeffs;
    for (int i = 0; i < g.degree(); ++i) coeffs.push_back(fs.random(rng));
    Polynomial a(fs, std::move(coeffs));
    if (a.degree() < 1) continue;
    Polynomial b(fs);
    if (p == 2) {
      Polynomial cur = a;
      b = a;
      for (int j = 1; j < steps; ++j) {
        cur = mulmod(cur, cur, g);
        b += cur;
      }
    } else {
      Polynomial cur = a;
      Polynomial norm = a;
      for (int j = 1; j < steps; ++j) {
        cur = powmod(cur, p, g);
        norm = mulmod(norm, cur, g);
      }
      b = powmod(norm, (p - 1) / 2, g) - Polynomial::constant(fs.one());
    }
    Polynomial d = gcd(b, g);
    if (d.degree() >= 1 && d.degree() < g.degree()) {
      equal_degree_split(d, k, rng, out);
      equal_degree_split(g / d, k, rng, out);
      return;
    }
  }
}

// distinct-degree factorization of a monic squarefree polynomial
std::vector<std::pair<Polynomial, int>> distinct_degree(Polynomial f) {
  std::vector<std::pair<Polynomial, int>> out;
  const FieldSpec& fs = f.field();
  const Polynomial x = Polynomial::variable(fs);
  Polynomial h = x % f;
  int i = 0;
  while (f.degree() >= 2 * (i + 1)) {
    ++i;
    h = frobenius_powmod(h, 1, f);
    Polynomial g = gcd(h - x, f);
    if (g.degree() >= 1) {
      out.emplace_back(g, i);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() >= 1) out.emplace_back(f, f.degree());
  return out;
}

}  // namespace

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("squarefree decomposition of zero");
  std::vector<std::pair<Polynomial, int>> out;
  sff_into(f.monic(), 1, out);
  return out;
}

bool is_irreducible(const Polynomial& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  Polynomial g = f.monic();
  if (gcd(g, g.derivative()).degree() >= 1) return false;
  auto dd = distinct_degree(g);
  return dd.size() == 1 && dd[0].second == g.degree();
}

Factorization poly_factor(const Polynomial& f, std::uint64_t seed) {
  if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
  Factorization result{f.leading(), {}};
  std::mt19937_64 rng(seed);
  for (const auto& [sq, mult] : squarefree_decomposition(f)) {
    for (const auto& [g, k] : distinct_degree(sq)) {
      std::vector<Polynomial> parts;
      equal_degree_split(g, k, rng, parts);
      for (auto& part : parts) result.factors.emplace_back(part.monic(), mult);
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<Polynomial, int>> merged;
  for (auto& fe : result.factors) {
    if (!merged.empty() && merged.back().first == fe.first)
      merged.back().second += fe.second;
    else
      merged.push_back(std::move(fe));
  }
  result.factors = std::move(merged);
  return result;
}

std::vector<FieldElement> roots(const Polynomial& f, std::uint64_t seed) {
  if (f.is_zero()) throw DomainError("roots of the zero polynomial");
  std::vector<FieldElement> out;
  if (f.degree() < 1) return out;
  const FieldSpec& fs = f.field();
  Polynomial g = f.monic();
  const Polynomial x = Polynomial::variable(fs);
  Polynomial split = gcd(frobenius_powmod(x, 1, g) - x, g);
  if (split.degree() < 1) return out;
  std::mt19937_64 rng(seed);
  std::vector<Polynomial> linear;
  equal_degree_split(split, 1, rng, linear);
  for (const auto& l : linear) out.push_back(-l.coeff(0));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace eds
