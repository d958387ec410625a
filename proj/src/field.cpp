#include "field.hpp"

namespace quiverhom {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t acc = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) acc = mulmod_u64(acc, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return acc;
}

}  // namespace

// Deterministic Miller-Rabin; the bases 2, 3, 5, 7 decide primality for
// every n < 3,215,031,751, which covers the allowed range p <= 2^31.
bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Field Field::fp(std::uint32_t p) {
  if (p > (1u << 31)) throw DomainError("prime modulus exceeds 2^31");
  if (!is_prime_u32(p)) throw DomainError("modulus " + std::to_string(p) + " is not prime");
  return Field(p);
}

Scalar Scalar::zero(const Field& f) { return of_int(f, 0); }

Scalar Scalar::one(const Field& f) { return of_int(f, 1); }

Scalar Scalar::of_int(const Field& f, long n) {
  if (f.is_rational()) return rational(n);
  long p = static_cast<long>(f.characteristic());
  long r = n % p;
  if (r < 0) r += p;
  return residue(f.characteristic(), static_cast<std::uint64_t>(r));
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return rational(q);
}

Scalar Scalar::rational(const mpq_class& q) {
  Scalar s;
  s.p_ = 0;
  s.q_ = q;
  s.q_.canonicalize();
  return s;
}

Scalar Scalar::residue(std::uint32_t p, std::uint64_t value) {
  Scalar s;
  s.p_ = p;
  s.r_ = static_cast<std::uint32_t>(value % p);
  s.q_ = 0;
  return s;
}

Field Scalar::field() const { return p_ == 0 ? Field::rationals() : Field::fp(p_); }

bool Scalar::is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }

bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

const mpq_class& Scalar::rational_value() const {
  if (p_ != 0) throw FieldMismatchError("rational_value on a prime-field scalar");
  return q_;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (p_ != o.p_) throw FieldMismatchError("mixed field contexts");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  if (p_ == 0) return rational(mpq_class(q_ + o.q_));
  return residue(p_, static_cast<std::uint64_t>(r_) + o.r_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  if (p_ == 0) return rational(mpq_class(q_ - o.q_));
  return residue(p_, static_cast<std::uint64_t>(r_) + p_ - o.r_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  if (p_ == 0) return rational(mpq_class(q_ * o.q_));
  return residue(p_, static_cast<std::uint64_t>(r_) * o.r_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  if (p_ == 0) return rational(mpq_class(-q_));
  return residue(p_, static_cast<std::uint64_t>(p_) - r_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (p_ == 0) return rational(mpq_class(1 / q_));
  // Fermat: r^(p-2) mod p.
  std::uint64_t inv = 1, base = r_, exp = p_ - 2;
  while (exp > 0) {
    if (exp & 1) inv = inv * base % p_;
    base = base * base % p_;
    exp >>= 1;
  }
  return residue(p_, inv);
}

bool Scalar::operator==(const Scalar& o) const {
  check_same_field(o);
  return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
  if (p_ != 0) return std::to_string(r_);
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

}  // namespace quiverhom
