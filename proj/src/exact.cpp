#include "singwb/exact.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace swb {

const char* err_name(Err e) {
  switch (e) {
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::IncompatibleRadicals: return "IncompatibleRadicals";
    case Err::BudgetExceeded: return "BudgetExceeded";
    case Err::VariableMismatch: return "VariableMismatch";
    case Err::UnsupportedType: return "UnsupportedType";
    case Err::InvalidAutomorphism: return "InvalidAutomorphism";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::ShapeMismatch: return "ShapeMismatch";
    case Err::SingularSystem: return "SingularSystem";
    case Err::ClosureBudgetExceeded: return "ClosureBudgetExceeded";
    case Err::UnsupportedLabel: return "UnsupportedLabel";
    case Err::NormalFormMismatch: return "NormalFormMismatch";
    case Err::PullbackMismatch: return "PullbackMismatch";
    case Err::UnclassifiedSingularity: return "UnclassifiedSingularity";
    case Err::Parse: return "Parse";
    case Err::Usage: return "Usage";
  }
  return "Unknown";
}

Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw Error(Err::Parse, "bad rational '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) { return q.get_str(10); }

// ---------------------------------------------------------------- cyclotomic

namespace {

std::recursive_mutex g_cyc_mu;

std::vector<long> poly_div_exact(std::vector<long> a, const std::vector<long>& b) {
  int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
  std::vector<long> q(da - db + 1, 0);
  for (int k = da - db; k >= 0; --k) {
    long c = a[k + db];
    q[k] = c;
    for (int j = 0; j <= db; ++j) a[k + j] -= c * b[j];
  }
  return q;
}

}  // namespace

const std::vector<long>& cyclotomic_poly(int n) {
  static std::map<int, std::vector<long>> cache;
  std::lock_guard<std::recursive_mutex> lk(g_cyc_mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  std::vector<long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) num = poly_div_exact(num, cyclotomic_poly(d));
  return cache.emplace(n, num).first->second;
}

int euler_phi(int n) {
  int r = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

namespace {

// Reduce a coefficient vector (any length) modulo x^n - 1 and then Phi_n.
std::vector<Rational> reduce_mod(int n, std::vector<Rational> v) {
  int ph = euler_phi(n);
  if (static_cast<int>(v.size()) > n) {
    for (size_t k = n; k < v.size(); ++k) v[k % n] += v[k];
    v.resize(n);
  }
  const auto& phi = cyclotomic_poly(n);
  for (int k = static_cast<int>(v.size()) - 1; k >= ph; --k) {
    if (sgn(v[k]) == 0) continue;
    Rational c = v[k];
    for (int j = 0; j < ph; ++j)
      if (phi[j] != 0) v[k - ph + j] -= c * phi[j];
    v[k] = 0;
  }
  v.resize(ph);
  return v;
}

int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

}  // namespace

Cyclo::Cyclo(int n, std::vector<Rational> coords) : n_(n) {
  if (n < 1) throw Error(Err::Parse, "conductor must be positive");
  for (auto& x : coords) x.canonicalize();
  c_ = reduce_mod(n, std::move(coords));
  normalize();
}

void Cyclo::normalize() {
  if (n_ == 1) return;
  for (size_t j = 1; j < c_.size(); ++j)
    if (sgn(c_[j]) != 0) return;
  Rational q = c_[0];
  n_ = 1;
  c_.assign(1, q);
}

Cyclo Cyclo::zeta(int n, long k) {
  long kk = ((k % n) + n) % n;
  std::vector<Rational> v(kk + 1, 0);
  v[kk] = 1;
  return Cyclo(n, v);
}

Cyclo Cyclo::sqrt_int(long m) {
  // sqrt(-1) = z4, sqrt(2) = z8 + z8^-1, sqrt(3) = z12 + z12^-1,
  // sqrt(-2) = z8 + z8^3, sqrt(-3) = 2 z3 + 1, sqrt(6) = sqrt2 sqrt3, sqrt(-6) = sqrt(-2) sqrt3
  switch (m) {
    case 1: return Cyclo(1);
    case -1: return zeta(4);
    case 2: return zeta(8) + zeta(8, 7);
    case -2: return zeta(8) + zeta(8, 3);
    case 3: return zeta(12) + zeta(12, 11);
    case -3: return Cyclo(2) * zeta(3) + Cyclo(1);
    case 6: return sqrt_int(2) * sqrt_int(3);
    case -6: return sqrt_int(-2) * sqrt_int(3);
    default: break;
  }
  throw Error(Err::UnsupportedType, "sqrt(" + std::to_string(m) + ") is not in Q(zeta_24)");
}

bool Cyclo::is_zero() const { return n_ == 1 && sgn(c_[0]) == 0; }

Cyclo Cyclo::lift(int N) const {
  if (N == n_) return *this;
  if (N % n_) throw Error(Err::IncompatibleRadicals, "lift target not a multiple");
  int m = N / n_;
  std::vector<Rational> v(static_cast<size_t>(m) * (c_.size() - 1) + 1, 0);
  for (size_t j = 0; j < c_.size(); ++j) v[j * m] = c_[j];
  Cyclo r;
  r.n_ = N;
  r.c_ = reduce_mod(N, std::move(v));
  return r;  // deliberately not normalized: caller works in Q(zeta_N)
}

std::optional<Cyclo> Cyclo::restrict_to(int n) const {
  if (n_ == 1) return *this;
  if (n_ % n == 0 && n_ == n) return *this;
  int N = lcm_int(n_, n);
  Cyclo me = lift(N);
  // Solve sum_j a_j z_n^j = me over Q with j < phi(n).
  int ph = euler_phi(n), PH = euler_phi(N);
  std::vector<std::vector<Rational>> cols;
  for (int j = 0; j < ph; ++j) cols.push_back(zeta(n, j).lift(N).c_);
  // augmented matrix rows = PH equations, cols = ph unknowns
  std::vector<std::vector<Rational>> M(PH, std::vector<Rational>(ph + 1));
  for (int r = 0; r < PH; ++r) {
    for (int j = 0; j < ph; ++j) M[r][j] = cols[j][r];
    M[r][ph] = me.c_[r];
  }
  int row = 0;
  std::vector<int> piv;
  for (int col = 0; col < ph && row < PH; ++col) {
    int p = row;
    while (p < PH && sgn(M[p][col]) == 0) ++p;
    if (p == PH) continue;
    std::swap(M[p], M[row]);
    Rational inv = 1 / M[row][col];
    for (auto& x : M[row]) x *= inv;
    for (int r = 0; r < PH; ++r) {
      if (r == row || sgn(M[r][col]) == 0) continue;
      Rational f = M[r][col];
      for (int c = 0; c <= ph; ++c) M[r][c] -= f * M[row][c];
    }
    piv.push_back(col);
    ++row;
  }
  for (int r = row; r < PH; ++r)
    if (sgn(M[r][ph]) != 0) return std::nullopt;
  std::vector<Rational> a(ph, 0);
  for (int r = 0; r < row; ++r) a[piv[r]] = M[r][ph];
  Cyclo out;
  out.n_ = n;
  out.c_ = a;
  out.normalize();
  return out;
}

Cyclo Cyclo::conj() const {
  if (n_ == 1) return *this;
  std::vector<Rational> v(n_, 0);
  for (size_t j = 0; j < c_.size(); ++j) v[(n_ - j) % n_] += c_[j];
  return Cyclo(n_, v);
}

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (p.size() > 1 && sgn(p.back()) == 0) p.pop_back();
}

std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(a.size()) - 1 < db) return {QPoly{0}, a};
  QPoly q(a.size() - db, 0);
  for (int k = static_cast<int>(a.size()) - 1 - db; k >= 0; --k) {
    Rational c = a[k + db] / b.back();
    q[k] = c;
    if (sgn(c) != 0)
      for (int j = 0; j <= db; ++j) a[k + j] -= c * b[j];
  }
  a.resize(std::max(db, 1));
  trim(a);
  return {q, a};
}

QPoly sub_mul(const QPoly& s0, const QPoly& q, const QPoly& s1) {
  QPoly r(std::max(s0.size(), q.size() + s1.size() - 1), 0);
  for (size_t i = 0; i < s0.size(); ++i) r[i] += s0[i];
  for (size_t i = 0; i < q.size(); ++i)
    for (size_t j = 0; j < s1.size(); ++j) r[i + j] -= q[i] * s1[j];
  trim(r);
  return r;
}

bool is_zero_poly(const QPoly& p) { return p.size() == 1 && sgn(p[0]) == 0; }

// s with s*a = 1 mod b, for a coprime to b.
QPoly inverse_mod(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  QPoly r0 = b, r1 = a, s0{0}, s1{1};
  while (!is_zero_poly(r1)) {
    auto [q, r] = divmod(r0, r1);
    QPoly s2 = sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw Error(Err::DivisionByZero, "non-invertible cyclotomic element");
  Rational g = r0[0];
  for (auto& x : s0) x /= g;
  return s0;
}

}  // namespace

Cyclo Cyclo::inv() const {
  if (is_zero()) throw Error(Err::DivisionByZero, "division by zero");
  if (n_ == 1) return Cyclo(Rational(1) / c_[0]);
  std::vector<Rational> phi(cyclotomic_poly(n_).begin(), cyclotomic_poly(n_).end());
  return Cyclo(n_, inverse_mod(c_, phi));
}

ComplexF Cyclo::embed() const {
  ComplexF s(0, 0);
  for (size_t j = 0; j < c_.size(); ++j) {
    if (sgn(c_[j]) == 0) continue;
    double ang = 2.0 * M_PI * static_cast<double>(j) / n_;
    s += c_[j].get_d() * ComplexF(std::cos(ang), std::sin(ang));
  }
  return s;
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
  if (a.n_ == 1 && b.n_ == 1) return Cyclo(a.c_[0] + b.c_[0]);
  int N = lcm_int(a.n_, b.n_);
  Cyclo x = a.lift(N), y = b.lift(N);
  for (size_t j = 0; j < x.c_.size(); ++j) x.c_[j] += y.c_[j];
  x.normalize();
  return x;
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  if (a.n_ == 1 && b.n_ == 1) return Cyclo(a.c_[0] * b.c_[0]);
  if (a.n_ == 1 || b.n_ == 1) {
    const Cyclo& s = a.n_ == 1 ? a : b;
    Cyclo r = a.n_ == 1 ? b : a;
    if (sgn(s.c_[0]) == 0) return Cyclo();
    for (auto& x : r.c_) x *= s.c_[0];
    return r;
  }
  int N = lcm_int(a.n_, b.n_);
  Cyclo x = a.lift(N), y = b.lift(N);
  std::vector<Rational> v(x.c_.size() + y.c_.size() - 1, 0);
  for (size_t i = 0; i < x.c_.size(); ++i) {
    if (sgn(x.c_[i]) == 0) continue;
    for (size_t j = 0; j < y.c_.size(); ++j)
      if (sgn(y.c_[j]) != 0) v[i + j] += x.c_[i] * y.c_[j];
  }
  return Cyclo(N, std::move(v));
}

Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inv(); }

bool operator==(const Cyclo& a, const Cyclo& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  if (a.n_ == 1 || b.n_ == 1) return false;  // normalized: rational iff n == 1
  int N = lcm_int(a.n_, b.n_);
  return a.lift(N).c_ == b.lift(N).c_;
}

std::string Cyclo::str() const {
  if (n_ == 1) return rational_str(c_[0]);
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < c_.size(); ++j) {
    if (sgn(c_[j]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (j == 0) {
      os << rational_str(c_[j]);
    } else {
      if (c_[j] != 1) os << "(" << rational_str(c_[j]) << ")*";
      os << "z" << n_;
      if (j > 1) os << "^" << j;
    }
  }
  return first ? "0" : os.str();
}

// ------------------------------------------------------------------- Scalar

Scalar::Scalar(const Cyclo& c) {
  if (c.is_rational()) {
    q_ = c.rational();
  } else {
    auto e = std::make_shared<Ext>();
    e->parts = {c};
    ext_ = e;
  }
}

Scalar::Scalar(std::shared_ptr<const Radical> rel, std::vector<Cyclo> parts) {
  *this = from_ext(std::move(rel), std::move(parts));
}

Scalar Scalar::from_ext(std::shared_ptr<const Radical> rel, std::vector<Cyclo> parts) {
  if (rel) {
    bool pure = true;
    for (size_t j = 1; j < parts.size(); ++j)
      if (!parts[j].is_zero()) pure = false;
    if (pure) rel.reset();
  }
  if (!rel) {
    return Scalar(parts.empty() ? Cyclo() : parts[0]);
  }
  Scalar s;
  auto e = std::make_shared<Ext>();
  e->rel = std::move(rel);
  e->parts = std::move(parts);
  s.ext_ = e;
  return s;
}

Scalar Scalar::radical(int k, const Cyclo& c) {
  if (k < 1 || k > 8) throw Error(Err::IncompatibleRadicals, "radical degree must be 1..8");
  if (k == 1) return Scalar(c);
  auto rel = std::make_shared<Radical>(Radical{k, c});
  std::vector<Cyclo> p(k);
  p[1] = Cyclo(1);
  return from_ext(rel, p);
}

Scalar Scalar::sqrt_rational(const Rational& q) {
  if (sgn(q) == 0) return Scalar(0);
  // q = s^2 * m / d^2 handled as sqrt(num*den)/den
  mpz_class num = q.get_num(), den = q.get_den();
  mpz_class prod = num * den;
  int sign = sgn(prod) < 0 ? -1 : 1;
  mpz_class a = abs(prod);
  mpz_class sq = 1, free = 1;
  // factor out small squares and detect squarefree part
  mpz_class rem = a;
  for (unsigned long p = 2; p < 100000 && mpz_class(p) * p <= rem; ++p) {
    while (rem % (p * p) == 0) {
      rem /= (p * p);
      sq *= p;
    }
    if (rem % p == 0) {
      rem /= p;
      free *= p;
    }
  }
  if (mpz_perfect_square_p(rem.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), rem.get_mpz_t());
    sq *= r;
  } else {
    free *= rem;
  }
  Rational scale = Rational(sq) / Rational(den);
  if (free.fits_slong_p()) {
    long m = free.get_si() * sign;
    if (m == 1 || m == -1 || m == 2 || m == -2 || m == 3 || m == -3 || m == 6 || m == -6)
      return Scalar(scale) * Scalar(Cyclo::sqrt_int(m));
  }
  Rational c = Rational(free) * sign;
  return Scalar(scale) * radical(2, Cyclo(c));
}

bool Scalar::is_zero() const {
  if (!ext_) return sgn(q_) == 0;
  for (auto& p : ext_->parts)
    if (!p.is_zero()) return false;
  return true;
}

bool Scalar::is_one() const { return !ext_ && q_ == 1; }

bool Scalar::is_cyclo() const { return !ext_ || !ext_->rel; }

Cyclo Scalar::cyclo() const {
  if (!ext_) return Cyclo(q_);
  if (ext_->rel) throw Error(Err::IncompatibleRadicals, "scalar carries a radical");
  return ext_->parts[0];
}

std::shared_ptr<const Radical> Scalar::radical_rel() const { return ext_ ? ext_->rel : nullptr; }

std::vector<Cyclo> Scalar::parts() const {
  if (!ext_) return {Cyclo(q_)};
  return ext_->parts;
}

std::vector<Cyclo> Scalar::as_parts(int k) const {
  std::vector<Cyclo> p(k);
  if (!ext_) {
    p[0] = Cyclo(q_);
  } else {
    for (size_t j = 0; j < ext_->parts.size() && static_cast<int>(j) < k; ++j) p[j] = ext_->parts[j];
  }
  return p;
}

namespace {

std::shared_ptr<const Radical> common_rel(const std::shared_ptr<const Radical>& a,
                                          const std::shared_ptr<const Radical>& b) {
  if (!a) return b;
  if (!b) return a;
  if (a == b || a->same(*b)) return a;
  throw Error(Err::IncompatibleRadicals, "u^" + std::to_string(a->k) + "=" + a->c.str() + " vs u^" +
                                             std::to_string(b->k) + "=" + b->c.str());
}

}  // namespace

Scalar& Scalar::operator+=(const Scalar& b) {
  if (!ext_ && !b.ext_) {
    q_ += b.q_;
    return *this;
  }
  auto rel = common_rel(radical_rel(), b.radical_rel());
  int k = rel ? rel->k : 1;
  auto x = as_parts(k), y = b.as_parts(k);
  for (int j = 0; j < k; ++j) x[j] = x[j] + y[j];
  *this = from_ext(rel, std::move(x));
  return *this;
}

Scalar Scalar::operator-() const {
  if (!ext_) return Scalar(Rational(-q_));
  auto p = ext_->parts;
  for (auto& c : p) c = -c;
  return from_ext(ext_->rel, std::move(p));
}

Scalar& Scalar::operator-=(const Scalar& b) {
  if (!ext_ && !b.ext_) {
    q_ -= b.q_;
    return *this;
  }
  return *this += -b;
}

Scalar& Scalar::operator*=(const Scalar& b) {
  if (!ext_ && !b.ext_) {
    q_ *= b.q_;
    return *this;
  }
  if (!b.ext_ || !ext_) {
    const Scalar& r = b.ext_ ? *this : b;  // rational factor
    const Scalar& e = b.ext_ ? b : *this;
    if (sgn(r.q_) == 0) {
      *this = Scalar(0);
      return *this;
    }
    auto p = e.ext_->parts;
    Cyclo f(r.q_);
    for (auto& c : p) c = c * f;
    *this = from_ext(e.ext_->rel, std::move(p));
    return *this;
  }
  auto rel = common_rel(radical_rel(), b.radical_rel());
  int k = rel ? rel->k : 1;
  auto x = as_parts(k), y = b.as_parts(k);
  std::vector<Cyclo> z(2 * k - 1);
  for (int i = 0; i < k; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < k; ++j)
      if (!y[j].is_zero()) z[i + j] = z[i + j] + x[i] * y[j];
  }
  for (int d = 2 * k - 2; d >= k; --d) {
    if (z[d].is_zero()) continue;
    z[d - k] = z[d - k] + z[d] * rel->c;
  }
  z.resize(k);
  *this = from_ext(rel, std::move(z));
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& b) {
  if (b.is_zero()) throw Error(Err::DivisionByZero, "division by zero");
  if (!ext_ && !b.ext_) {
    q_ /= b.q_;
    return *this;
  }
  if (b.is_cyclo()) {
    Cyclo inv = b.cyclo().inv();
    return *this *= Scalar(inv);
  }
  // b = sum b_j u^j: solve M x = e_0 over the cyclotomic field, M = mult-by-b.
  auto rel = b.radical_rel();
  int k = rel->k;
  auto bp = b.as_parts(k);
  std::vector<std::vector<Cyclo>> M(k, std::vector<Cyclo>(k + 1));
  for (int col = 0; col < k; ++col) {
    // b * u^col
    std::vector<Cyclo> z(2 * k);
    for (int j = 0; j < k; ++j) z[j + col] = bp[j];
    for (int d = 2 * k - 1; d >= k; --d)
      if (!z[d].is_zero()) z[d - k] = z[d - k] + z[d] * rel->c;
    for (int r = 0; r < k; ++r) M[r][col] = z[r];
  }
  M[0][k] = Cyclo(1);
  for (int col = 0; col < k; ++col) {
    int p = col;
    while (p < k && M[p][col].is_zero()) ++p;
    if (p == k) throw Error(Err::DivisionByZero, "radical element not invertible");
    std::swap(M[p], M[col]);
    Cyclo inv = M[col][col].inv();
    for (auto& x : M[col]) x = x * inv;
    for (int r = 0; r < k; ++r) {
      if (r == col || M[r][col].is_zero()) continue;
      Cyclo f = M[r][col];
      for (int c = 0; c <= k; ++c) M[r][c] = M[r][c] - f * M[col][c];
    }
  }
  std::vector<Cyclo> x(k);
  for (int r = 0; r < k; ++r) x[r] = M[r][k];
  return *this *= from_ext(rel, std::move(x));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!a.ext_ && !b.ext_) return a.q_ == b.q_;
  return (a - b).is_zero();
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return (Scalar(1) / *this).pow(-e);
  Scalar r(1), base = *this;
  while (e) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

Scalar Scalar::conj_cyclo() const {
  if (!ext_) return *this;
  if (ext_->rel) throw Error(Err::IncompatibleRadicals, "conjugation of radical element");
  return Scalar(ext_->parts[0].conj());
}

ComplexF Scalar::embed() const {
  if (!ext_) return ComplexF(q_.get_d(), 0.0);
  if (!ext_->rel) return ext_->parts[0].embed();
  ComplexF c = ext_->rel->c.embed();
  ComplexF u = std::polar(std::pow(std::abs(c), 1.0 / ext_->rel->k), std::arg(c) / ext_->rel->k);
  ComplexF s(0, 0), up(1, 0);
  for (auto& p : ext_->parts) {
    s += p.embed() * up;
    up *= u;
  }
  return s;
}

std::string Scalar::str() const {
  if (!ext_) return rational_str(q_);
  if (!ext_->rel) return ext_->parts[0].str();
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < ext_->parts.size(); ++j) {
    if (ext_->parts[j].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << ext_->parts[j].str() << ")";
    if (j) os << "*u" << (j > 1 ? "^" + std::to_string(j) : "");
  }
  os << " [u^" << ext_->rel->k << "=" << ext_->rel->c.str() << "]";
  return os.str();
}

ComplexF embed_complex(const Scalar& s) { return s.embed(); }

}  // namespace swb
