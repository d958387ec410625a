#include "pathalg.hpp"

#include <sstream>

namespace quiverhom {

AlgebraElement AlgebraElement::path_term(Quiver q, Field f, const Path& p, const Scalar& coeff) {
  AlgebraElement x(std::move(q), f);
  if (!path_in_quiver(x.quiver_, p)) throw DomainError("path uses foreign arrows: " + p.str());
  x.add_term(p, coeff);
  return x;
}

AlgebraElement AlgebraElement::path_term(Quiver q, Field f, const Path& p) {
  Scalar one = Scalar::one(f);
  return path_term(std::move(q), f, p, one);
}

AlgebraElement AlgebraElement::stationary(Quiver q, Field f, Vertex v) {
  return path_term(std::move(q), f, Path(v));
}

Scalar AlgebraElement::coeff(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void AlgebraElement::add_term(const Path& p, const Scalar& c) {
  if (c.field() != field_) throw FieldMismatchError("coefficient from a different field context");
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(p, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void AlgebraElement::check_compatible(const AlgebraElement& o) const {
  if (!(quiver_ == o.quiver_)) throw DomainError("algebra elements over different quivers");
  if (field_ != o.field_) throw FieldMismatchError("algebra elements over different fields");
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  check_compatible(o);
  AlgebraElement out = *this;
  for (const auto& [p, c] : o.terms_) out.add_term(p, c);
  return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  check_compatible(o);
  AlgebraElement out = *this;
  for (const auto& [p, c] : o.terms_) out.add_term(p, -c);
  return out;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out(quiver_, field_);
  for (const auto& [p, c] : terms_) out.terms_.emplace(p, -c);
  return out;
}

AlgebraElement AlgebraElement::scalar_mul(const Scalar& c) const {
  AlgebraElement out(quiver_, field_);
  if (c.is_zero()) return out;
  for (const auto& [p, coeff] : terms_) out.add_term(p, coeff * c);
  return out;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  check_compatible(o);
  AlgebraElement out(quiver_, field_);
  for (const auto& [p, cp] : terms_)
    for (const auto& [q, cq] : o.terms_)
      if (auto pq = compose(p, q)) out.add_term(*pq, cp * cq);
  return out;
}

AlgebraElement AlgebraElement::operator*(const Path& p) const {
  return *this * path_term(quiver_, field_, p);
}

AlgebraElement AlgebraElement::act_idempotent(Vertex v) const {
  AlgebraElement out(quiver_, field_);
  for (const auto& [p, c] : terms_)
    if (p.target() == v) out.terms_.emplace(p, c);
  return out;
}

std::optional<std::size_t> AlgebraElement::max_path_length() const {
  if (terms_.empty()) return std::nullopt;
  // The path order is primarily by length, so the last key is maximal.
  return terms_.rbegin()->first.length();
}

bool AlgebraElement::in_length_filtration(std::size_t n) const {
  auto m = max_path_length();
  return !m || *m <= n;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  check_compatible(o);
  return terms_ == o.terms_;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    Scalar coeff = c;
    bool negative_rational = coeff.field().is_rational() && coeff.rational_value() < 0;
    if (first) {
      first = false;
    } else if (negative_rational) {
      os << " - ";
      coeff = -coeff;
    } else {
      os << " + ";
    }
    if (coeff.is_one())
      os << p.str();
    else
      os << coeff.str() << "*" << p.str();
  }
  return os.str();
}

AlgebraElement coset_reduce(const AlgebraElement& x, const Path& ideal_gen,
                            std::size_t max_len) {
  if (!x.in_length_filtration(max_len))
    throw BoundsError("coset_reduce: element outside KQ_{<=max_len}");
  if (!path_in_quiver(x.quiver(), ideal_gen))
    throw DomainError("ideal generator uses foreign arrows");
  AlgebraElement out(x.quiver(), x.field());
  for (const auto& [p, c] : x.terms()) {
    // p = p' * ideal_gen for some path p' exactly when ideal_gen is a
    // suffix of p; such p is itself a basis path of the ideal.
    if (p.has_suffix(ideal_gen) && p.length() <= max_len) continue;
    out = out + AlgebraElement::path_term(x.quiver(), x.field(), p, c);
  }
  return out;
}

}  // namespace quiverhom
