// field.hpp -- exact field contexts (rationals and prime fields) and scalars.
#ifndef QUIVERHOM_FIELD_HPP
#define QUIVERHOM_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "error.hpp"

namespace quiverhom {

// A field context: the rationals (characteristic 0) or Z/p for a prime
// p <= 2^31. Every scalar carries its context; mixing contexts throws.
class Field {
 public:
  Field() : p_(0) {}
  static Field rationals() { return Field(); }
  static Field fp(std::uint32_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string str() const { return p_ == 0 ? "q" : "fp " + std::to_string(p_); }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

// An exact field element. Rationals are kept reduced with positive
// denominator (gmp canonical form); prime-field residues live in [0, p).
class Scalar {
 public:
  Scalar() : p_(0), r_(0), q_(0) {}  // rational zero

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  // The image of the integer n in the field f.
  static Scalar of_int(const Field& f, long n);
  static Scalar rational(long num, long den = 1);
  static Scalar rational(const mpq_class& q);
  static Scalar residue(std::uint32_t p, std::uint64_t value);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;
  const mpq_class& rational_value() const;
  std::uint32_t residue_value() const { return r_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws DomainError on zero divisor
  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // "p/q" with "/q" omitted when q = 1; plain decimal residues mod p.
  std::string str() const;

 private:
  void check_same_field(const Scalar& o) const;

  std::uint32_t p_;  // 0 = rational
  std::uint32_t r_;  // residue when p_ != 0
  mpq_class q_;      // value when p_ == 0
};

bool is_prime_u32(std::uint32_t n);

}  // namespace quiverhom

#endif
