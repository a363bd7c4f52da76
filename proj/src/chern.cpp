#include "prioritaire/chern.hpp"

#include "prioritaire/errors.hpp"

namespace prioritaire {

ChernCharacter& ChernCharacter::operator+=(const ChernCharacter& rhs) {
  rank += rhs.rank;
  c1 += rhs.c1;
  ch2 += rhs.ch2;
  return *this;
}

ChernCharacter& ChernCharacter::operator-=(const ChernCharacter& rhs) {
  rank -= rhs.rank;
  c1 -= rhs.c1;
  ch2 -= rhs.ch2;
  return *this;
}

ChernCharacter operator*(const Integer& k, const ChernCharacter& c) {
  return {k * c.rank, k * c.c1, Rational(k) * c.ch2};
}

std::string ChernCharacter::str() const {
  return "(" + rank.get_str() + ", " + c1.get_str() + ", " + ch2.str() + ")";
}

ChernData::ChernData(Integer rank, Integer c1, Integer c2)
    : rank_(std::move(rank)), c1_(std::move(c1)), c2_(std::move(c2)) {
  if (rank_ < 1) throw PreconditionError("rank must be at least 1, got " + rank_.get_str());
}

ChernData ChernData::from_character(const ChernCharacter& ch) {
  // c2 = c1^2/2 - ch2
  const Rational c2 = Rational(ch.c1 * ch.c1) / 2 - ch.ch2;
  if (!c2.is_integer()) throw PreconditionError("non-integral character " + ch.str());
  return {ch.rank, ch.c1, c2.num()};
}

ChernCharacter ChernData::character() const {
  return {rank_, c1_, Rational(c1_ * c1_ - 2 * c2_) / 2};
}

std::string ChernData::str() const {
  return "(" + rank_.get_str() + ", " + c1_.get_str() + ", " + c2_.get_str() + ")";
}

Rational hirzebruch_p(const Rational& x) {
  return x.square() / 2 + Rational(3, 2) * x + 1;
}

Rational slope(const ChernData& cd) { return {cd.c1(), cd.rank()}; }

Rational discriminant(const ChernData& cd) {
  const Rational r(cd.rank());
  const Rational c1(cd.c1());
  return (Rational(cd.c2()) - (r - 1) / (2 * r) * c1.square()) / r;
}

Rational euler_char(const ChernData& cd) {
  const Rational chi = Rational(cd.rank()) * (hirzebruch_p(slope(cd)) - discriminant(cd));
  if (!chi.is_integer()) throw InternalInconsistency("non-integral Euler characteristic");
  return chi;
}

Rational euler_pairing(const ChernData& a, const ChernData& b) {
  const Rational chi = Rational(a.rank() * b.rank()) *
                       (hirzebruch_p(slope(b) - slope(a)) - discriminant(a) - discriminant(b));
  if (!chi.is_integer()) throw InternalInconsistency("non-integral Euler pairing");
  return chi;
}

Rational euler_pairing(const ChernCharacter& a, const ChernCharacter& b) {
  // Integral of ch(a)^dual * ch(b) * (1 + 3/2 H + H^2).
  const Rational ra(a.rank);
  const Rational rb(b.rank);
  const Rational degree1 = Rational(a.rank * b.c1 - b.rank * a.c1);
  const Rational degree2 = ra * b.ch2 + rb * a.ch2 - Rational(a.c1 * b.c1);
  return degree2 + Rational(3, 2) * degree1 + ra * rb;
}

ChernCharacter twist(const ChernCharacter& ch, const Integer& k) {
  // ch * (1, k, k^2/2)
  const Rational kq(k);
  return {ch.rank, ch.c1 + k * ch.rank, ch.ch2 + kq * Rational(ch.c1) + Rational(ch.rank) * kq.square() / 2};
}

ChernData twist(const ChernData& cd, const Integer& k) {
  return ChernData::from_character(twist(cd.character(), k));
}

ChernData dual(const ChernData& cd) { return {cd.rank(), -cd.c1(), cd.c2()}; }

ChernCharacter dual(const ChernCharacter& ch) { return {ch.rank, -ch.c1, ch.ch2}; }

Integer normalizing_shift(const Rational& mu) { return -mu.ceil(); }

Normalized normalize(const ChernData& cd) {
  const Integer k = normalizing_shift(slope(cd));
  return {twist(cd, k), k};
}

}  // namespace prioritaire
