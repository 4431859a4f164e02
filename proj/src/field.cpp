#include "eds/field.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "eds/polynomial.hpp"

namespace eds {

namespace {

using SmallPoly = std::vector<std::int64_t>;

std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}

std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) { return a >= b ? a - b : a + p - b; }

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p, b = a % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw DomainError("division by zero in F_" + std::to_string(p));
  return pow_mod(a, p - 2, p);
}

void trim(SmallPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// r = a mod b over F_p, b nonzero
SmallPoly small_rem(SmallPoly a, const SmallPoly& b, std::uint32_t p, SmallPoly* quot) {
  trim(a);
  const std::int64_t lead_inv = inv_mod(static_cast<std::uint32_t>(b.back()), p);
  SmallPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    std::int64_t c = a.back() * lead_inv % p;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
    }
    trim(a);
  }
  if (quot) *quot = q;
  return a;
}

SmallPoly small_sub_mul(const SmallPoly& a, const SmallPoly& q, const SmallPoly& b, std::uint32_t p) {
  // a - q*b
  SmallPoly r(std::max(a.size(), q.size() + b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = ((r[i + j] - q[i] * b[j]) % p + p) % p;
  trim(r);
  return r;
}

}  // namespace

class FieldRegistry {
 public:
  static FieldRegistry& instance() {
    static FieldRegistry registry;
    return registry;
  }

  const FieldSpec* find(std::uint32_t p, const std::vector<std::uint32_t>& modulus) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = specs_.find(std::make_pair(p, modulus));
    return it == specs_.end() ? nullptr : it->second.get();
  }

  const FieldSpec& get(std::uint32_t p, const std::vector<std::uint32_t>& modulus) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = std::make_pair(p, modulus);
    auto it = specs_.find(key);
    if (it != specs_.end()) return *it->second;
    auto spec = std::unique_ptr<FieldSpec>(new FieldSpec(p, modulus));
    const FieldSpec& ref = *spec;
    specs_.emplace(std::move(key), std::move(spec));
    return ref;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::unique_ptr<FieldSpec>> specs_;
};

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int ord_p(long long n, long long p) {
  if (n == 0) throw DomainError("ord_p of zero");
  int k = 0;
  if (n < 0) n = -n;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

FieldSpec::FieldSpec(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), d_(modulus.empty() ? 1 : static_cast<int>(modulus.size()) - 1), modulus_(std::move(modulus)) {}

const FieldSpec& FieldSpec::prime(std::uint32_t p) {
  if (p > kMaxCharacteristic || !is_prime_number(p))
    throw DomainError("characteristic must be a prime <= 65536, got " + std::to_string(p));
  return FieldRegistry::instance().get(p, {});
}

const FieldSpec& FieldSpec::extension(std::uint32_t p, const std::vector<std::uint32_t>& modulus) {
  const FieldSpec& base = prime(p);
  if (modulus.size() < 2) throw DomainError("extension modulus must have degree >= 1");
  if (modulus.size() == 2) return base;
  if (static_cast<int>(modulus.size()) - 1 > kMaxExtensionDegree)
    throw DomainError("extension degree above " + std::to_string(kMaxExtensionDegree));
  if (modulus.back() != 1) throw DomainError("extension modulus must be monic");
  if (const FieldSpec* known = FieldRegistry::instance().find(p, modulus)) return *known;
  std::vector<FieldElement> coeffs;
  for (auto c : modulus) {
    if (c >= p) throw DomainError("modulus coefficient not reduced mod p");
    coeffs.push_back(base.from_int(c));
  }
  if (!is_irreducible(Polynomial(base, coeffs)))
    throw DomainError("extension modulus is not irreducible over F_" + std::to_string(p));
  return FieldRegistry::instance().get(p, modulus);
}

const FieldSpec& FieldSpec::of_degree(std::uint32_t p, int d) {
  if (d < 1 || d > kMaxExtensionDegree) throw DomainError("unsupported extension degree " + std::to_string(d));
  const FieldSpec& base = prime(p);
  if (d == 1) return base;
  // Canonical order on monic polynomials of fixed degree = numeric order of the
  // low coefficients read as base-p digits with the highest one most significant.
  std::vector<std::uint32_t> digits(d, 0);
  while (true) {
    if (digits[0] != 0) {
      std::vector<FieldElement> coeffs;
      for (auto c : digits) coeffs.push_back(base.from_int(c));
      coeffs.push_back(base.one());
      if (is_irreducible(Polynomial(base, coeffs))) {
        std::vector<std::uint32_t> modulus = digits;
        modulus.push_back(1);
        return FieldRegistry::instance().get(p, modulus);
      }
    }
    int i = 0;
    while (i < d && ++digits[i] == p) digits[i++] = 0;
    if (i == d) break;
  }
  throw ConsistencyError("no irreducible polynomial found");
}

std::optional<std::uint64_t> FieldSpec::order() const {
  unsigned __int128 q = 1;
  for (int i = 0; i < d_; ++i) {
    q *= p_;
    if (q > UINT64_MAX) return std::nullopt;
  }
  return static_cast<std::uint64_t>(q);
}

FieldElement FieldSpec::zero() const {
  FieldElement e;
  e.field_ = this;
  return e;
}

FieldElement FieldSpec::one() const { return from_int(1); }

FieldElement FieldSpec::from_int(long long n) const {
  FieldElement e = zero();
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  e.c_[0] = static_cast<std::uint16_t>(r);
  return e;
}

FieldElement FieldSpec::element(const std::vector<std::uint32_t>& coords) const {
  if (static_cast<int>(coords.size()) > d_) throw DomainError("too many coordinates for field " + name());
  FieldElement e = zero();
  for (std::size_t i = 0; i < coords.size(); ++i) e.c_[i] = static_cast<std::uint16_t>(coords[i] % p_);
  return e;
}

FieldElement FieldSpec::generator() const {
  if (d_ == 1) return zero();
  FieldElement e = zero();
  e.c_[1] = 1;
  return e;
}

FieldElement FieldSpec::from_index(std::uint64_t index) const {
  FieldElement e = zero();
  for (int i = 0; i < d_; ++i) {
    e.c_[i] = static_cast<std::uint16_t>(index % p_);
    index /= p_;
  }
  return e;
}

FieldElement FieldSpec::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint32_t> dist(0, p_ - 1);
  FieldElement e = zero();
  for (int i = 0; i < d_; ++i) e.c_[i] = static_cast<std::uint16_t>(dist(rng));
  return e;
}

std::string FieldSpec::name() const {
  if (d_ == 1) return "F" + std::to_string(p_);
  std::vector<FieldElement> coeffs;
  const FieldSpec& base = prime(p_);
  for (auto c : modulus_) coeffs.push_back(base.from_int(c));
  return "F" + std::to_string(p_) + "[z]/(" + Polynomial(base, coeffs).to_string('z') + ")";
}

// ---------------------------------------------------------------------------

const FieldSpec& FieldElement::field() const {
  if (!field_) throw DomainError("unbound field element");
  return *field_;
}

void FieldElement::check_same(const FieldElement& o) const {
  if (field_ != o.field_ || field_ == nullptr) throw FieldMismatch();
}

bool FieldElement::is_zero() const {
  for (int i = 0; i < kMaxExtensionDegree; ++i)
    if (c_[i]) return false;
  return true;
}

bool FieldElement::is_one() const {
  if (c_[0] != 1) return false;
  for (int i = 1; i < kMaxExtensionDegree; ++i)
    if (c_[i]) return false;
  return true;
}

std::uint64_t FieldElement::index() const {
  const FieldSpec& f = field();
  std::uint64_t idx = 0;
  for (int i = f.d_ - 1; i >= 0; --i) idx = idx * f.p_ + c_[i];
  return idx;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  FieldElement r = *this;
  const std::uint32_t p = field_->p_;
  for (int i = 0; i < field_->d_; ++i) r.c_[i] = static_cast<std::uint16_t>(add_mod(c_[i], o.c_[i], p));
  return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  FieldElement r = *this;
  const std::uint32_t p = field_->p_;
  for (int i = 0; i < field_->d_; ++i) r.c_[i] = static_cast<std::uint16_t>(sub_mod(c_[i], o.c_[i], p));
  return r;
}

FieldElement FieldElement::operator-() const { return field().zero() - *this; }

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  const std::uint32_t p = field_->p_;
  const int d = field_->d_;
  FieldElement r = field_->zero();
  if (d == 1) {
    r.c_[0] = static_cast<std::uint16_t>(mul_mod(c_[0], o.c_[0], p));
    return r;
  }
  std::uint64_t t[2 * kMaxExtensionDegree] = {0};
  for (int i = 0; i < d; ++i) {
    if (!c_[i]) continue;
    for (int j = 0; j < d; ++j) t[i + j] += static_cast<std::uint64_t>(c_[i]) * o.c_[j];
  }
  for (int k = 0; k < 2 * d - 1; ++k) t[k] %= p;
  const auto& m = field_->modulus_;
  for (int k = 2 * d - 2; k >= d; --k) {
    std::uint64_t c = t[k];
    if (!c) continue;
    for (int i = 0; i < d; ++i) t[k - d + i] = (t[k - d + i] + c * (p - m[i])) % p;
  }
  for (int i = 0; i < d; ++i) r.c_[i] = static_cast<std::uint16_t>(t[i]);
  return r;
}

FieldElement FieldElement::inverse() const {
  const FieldSpec& f = field();
  if (is_zero()) throw DomainError("division by zero in " + f.name());
  const std::uint32_t p = f.p_;
  FieldElement r = f.zero();
  if (f.d_ == 1) {
    r.c_[0] = static_cast<std::uint16_t>(inv_mod(c_[0], p));
    return r;
  }
  // extended Euclid: s*a + t*m = 1
  SmallPoly a(c_.begin(), c_.begin() + f.d_);
  trim(a);
  SmallPoly m(f.modulus_.begin(), f.modulus_.end());
  SmallPoly r0 = m, r1 = a, s0 = {}, s1 = {1};
  while (!r1.empty()) {
    SmallPoly q;
    SmallPoly rem = small_rem(r0, r1, p, &q);
    SmallPoly s2 = small_sub_mul(s0, q, s1, p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant
  std::int64_t g_inv = inv_mod(static_cast<std::uint32_t>(r0[0]), p);
  for (std::size_t i = 0; i < s0.size(); ++i) r.c_[i] = static_cast<std::uint16_t>(s0[i] * g_inv % p);
  return r;
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return *this * o.inverse();
}

FieldElement FieldElement::pow(long long k) const {
  if (k < 0) return inverse().pow(-k);
  FieldElement result = field().one();
  FieldElement base = *this;
  unsigned long long e = static_cast<unsigned long long>(k);
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

FieldElement FieldElement::frobenius() const { return pow(field().characteristic()); }

FieldElement FieldElement::pth_root() const {
  FieldElement r = *this;
  for (int i = 1; i < field().degree(); ++i) r = r.frobenius();
  return r;
}

std::strong_ordering FieldElement::operator<=>(const FieldElement& o) const {
  if (field_ != o.field_) return std::less<const FieldSpec*>()(field_, o.field_) ? std::strong_ordering::less
                                                                                  : std::strong_ordering::greater;
  for (int i = kMaxExtensionDegree - 1; i >= 0; --i)
    if (c_[i] != o.c_[i]) return c_[i] <=> o.c_[i];
  return std::strong_ordering::equal;
}

std::string FieldElement::to_string(char var) const {
  const FieldSpec& f = field();
  if (f.d_ == 1) return std::to_string(c_[0]);
  std::vector<FieldElement> coeffs;
  const FieldSpec& base = FieldSpec::prime(f.p_);
  for (int i = 0; i < f.d_; ++i) coeffs.push_back(base.from_int(c_[i]));
  return Polynomial(base, coeffs).to_string(var);
}

}  // namespace eds
