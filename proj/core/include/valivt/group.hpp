#pragma once

#include <string>
#include <vector>

#include "valivt/error.hpp"
#include "valivt/rational.hpp"

namespace valivt {

enum class Ordering { less, equal, greater };

enum class CoordKind { integer, rational };

// Value group G: Z, Q, or a finite lexicographic product of them.
// The order is always lexicographic (trivially so for rank 1).
class GroupSpec {
 public:
  GroupSpec() : kinds_{CoordKind::rational} {}
  explicit GroupSpec(std::vector<CoordKind> kinds);

  static GroupSpec integers();                  // Z
  static GroupSpec rationals();                 // Q
  static GroupSpec lex(CoordKind kind, int n);  // Z^n or Q^n, lex order

  int rank() const { return static_cast<int>(kinds_.size()); }
  CoordKind kind(int i) const { return kinds_[static_cast<std::size_t>(i)]; }

  // True iff every coordinate is rational-kind; exactly then divide_exact
  // is total on finite values.
  bool divisible() const;

  bool contains(const class GroupValue& g) const;

  bool operator==(const GroupSpec&) const = default;

 private:
  std::vector<CoordKind> kinds_;
};

// Element of G extended with +infinity. Infinity compares above every
// finite value and absorbs under addition.
class GroupValue {
 public:
  GroupValue() : coords_{Rat(0)} {}
  GroupValue(const Rat& scalar) : coords_{scalar} {}  // NOLINT: ergonomics
  GroupValue(long scalar) : coords_{Rat(scalar)} {}   // NOLINT
  explicit GroupValue(std::vector<Rat> coords);

  static GroupValue infinity(int rank = 1);
  static GroupValue zero(int rank = 1);

  bool is_infinity() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  int rank() const;

  // Rank-1 convenience accessor.
  const Rat& scalar() const;
  const std::vector<Rat>& coords() const;

  std::string to_string() const;  // "p/q", "(a,b,...)", "inf"

 private:
  GroupValue(bool infinite, int rank)
      : infinite_(infinite), coords_(static_cast<std::size_t>(rank), Rat(0)) {}

  bool infinite_ = false;
  std::vector<Rat> coords_;
};

Ordering cmp(const GroupValue& g1, const GroupValue& g2);

inline bool operator<(const GroupValue& a, const GroupValue& b) {
  return cmp(a, b) == Ordering::less;
}
inline bool operator>(const GroupValue& a, const GroupValue& b) {
  return cmp(a, b) == Ordering::greater;
}
inline bool operator<=(const GroupValue& a, const GroupValue& b) {
  return cmp(a, b) != Ordering::greater;
}
inline bool operator>=(const GroupValue& a, const GroupValue& b) {
  return cmp(a, b) != Ordering::less;
}
inline bool operator==(const GroupValue& a, const GroupValue& b) {
  return cmp(a, b) == Ordering::equal;
}
inline bool operator!=(const GroupValue& a, const GroupValue& b) {
  return cmp(a, b) != Ordering::equal;
}

GroupValue add(const GroupValue& g1, const GroupValue& g2);
GroupValue neg(const GroupValue& g);
GroupValue sub(const GroupValue& g1, const GroupValue& g2);
GroupValue scale_int(const GroupValue& g, const Int& n);
GroupValue scale_int(const GroupValue& g, long n);

inline GroupValue operator+(const GroupValue& a, const GroupValue& b) {
  return add(a, b);
}
inline GroupValue operator-(const GroupValue& a, const GroupValue& b) {
  return sub(a, b);
}

// Returns h with scale_int(h, n) == g, when such h exists in the group
// described by spec. Throws ErrorKind::divisibility otherwise; that error
// is the executable witness of a non-divisible value group.
GroupValue divide_exact(const GroupSpec& spec, const GroupValue& g, long n);

GroupValue parse_group_value(std::string_view text);

}  // namespace valivt
