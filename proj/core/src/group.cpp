#include "valivt/group.hpp"

#include <sstream>

namespace valivt {

GroupSpec::GroupSpec(std::vector<CoordKind> kinds) : kinds_(std::move(kinds)) {
  if (kinds_.empty()) fail(ErrorKind::structural, "group rank must be >= 1");
}

GroupSpec GroupSpec::integers() { return GroupSpec({CoordKind::integer}); }
GroupSpec GroupSpec::rationals() { return GroupSpec({CoordKind::rational}); }

GroupSpec GroupSpec::lex(CoordKind kind, int n) {
  if (n < 1) fail(ErrorKind::structural, "group rank must be >= 1");
  return GroupSpec(std::vector<CoordKind>(static_cast<std::size_t>(n), kind));
}

bool GroupSpec::divisible() const {
  for (CoordKind k : kinds_)
    if (k == CoordKind::integer) return false;
  return true;
}

bool GroupSpec::contains(const GroupValue& g) const {
  if (g.is_infinity()) return true;
  if (g.rank() != rank()) return false;
  for (int i = 0; i < rank(); ++i)
    if (kind(i) == CoordKind::integer &&
        !rat_is_integer(g.coords()[static_cast<std::size_t>(i)]))
      return false;
  return true;
}

GroupValue::GroupValue(std::vector<Rat> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) fail(ErrorKind::structural, "empty coordinate tuple");
}

GroupValue GroupValue::infinity(int rank) { return GroupValue(true, rank); }
GroupValue GroupValue::zero(int rank) { return GroupValue(false, rank); }

int GroupValue::rank() const { return static_cast<int>(coords_.size()); }

const Rat& GroupValue::scalar() const {
  if (infinite_ || coords_.size() != 1)
    fail(ErrorKind::structural, "scalar access on non-scalar group value");
  return coords_[0];
}

const std::vector<Rat>& GroupValue::coords() const {
  if (infinite_) fail(ErrorKind::structural, "coordinates of infinity");
  return coords_;
}

std::string GroupValue::to_string() const {
  if (infinite_) return "inf";
  if (coords_.size() == 1) return rat_to_string(coords_[0]);
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ",";
    os << rat_to_string(coords_[i]);
  }
  os << ")";
  return os.str();
}

static void check_ranks(const GroupValue& a, const GroupValue& b) {
  if (a.is_infinity() || b.is_infinity()) return;
  if (a.rank() != b.rank())
    fail(ErrorKind::structural, "group value rank mismatch");
}

Ordering cmp(const GroupValue& g1, const GroupValue& g2) {
  check_ranks(g1, g2);
  if (g1.is_infinity() && g2.is_infinity()) return Ordering::equal;
  if (g1.is_infinity()) return Ordering::greater;
  if (g2.is_infinity()) return Ordering::less;
  for (std::size_t i = 0; i < g1.coords().size(); ++i) {
    int c = cmp(g1.coords()[i], g2.coords()[i]);
    if (c < 0) return Ordering::less;
    if (c > 0) return Ordering::greater;
  }
  return Ordering::equal;
}

GroupValue add(const GroupValue& g1, const GroupValue& g2) {
  check_ranks(g1, g2);
  if (g1.is_infinity()) return g1;
  if (g2.is_infinity()) return g2;
  std::vector<Rat> c = g1.coords();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += g2.coords()[i];
  return GroupValue(std::move(c));
}

GroupValue neg(const GroupValue& g) {
  if (g.is_infinity())
    fail(ErrorKind::undefined_form, "negation of infinity");
  std::vector<Rat> c = g.coords();
  for (Rat& x : c) x = -x;
  return GroupValue(std::move(c));
}

GroupValue sub(const GroupValue& g1, const GroupValue& g2) {
  return add(g1, neg(g2));
}

GroupValue scale_int(const GroupValue& g, const Int& n) {
  if (g.is_infinity()) {
    if (n == 0) fail(ErrorKind::undefined_form, "0 * infinity");
    return g;
  }
  std::vector<Rat> c = g.coords();
  for (Rat& x : c) x *= Rat(n);
  return GroupValue(std::move(c));
}

GroupValue scale_int(const GroupValue& g, long n) {
  return scale_int(g, Int(n));
}

GroupValue divide_exact(const GroupSpec& spec, const GroupValue& g, long n) {
  if (g.is_infinity())
    fail(ErrorKind::precondition, "divide_exact on infinity");
  if (n < 1) fail(ErrorKind::precondition, "divide_exact needs n >= 1");
  if (g.rank() != spec.rank())
    fail(ErrorKind::structural, "group value rank mismatch");
  std::vector<Rat> c = g.coords();
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] /= n;
    if (spec.kind(static_cast<int>(i)) == CoordKind::integer &&
        !rat_is_integer(c[i]))
      fail(ErrorKind::divisibility,
           "no h in the value group with " + std::to_string(n) +
               "*h = " + g.to_string());
  }
  return GroupValue(std::move(c));
}

GroupValue parse_group_value(std::string_view text) {
  // "inf" | rational | "(r1,...,rn)"
  std::size_t b = 0, e = text.size();
  while (b < e && text[b] == ' ') ++b;
  while (e > b && text[e - 1] == ' ') --e;
  std::string_view s = text.substr(b, e - b);
  if (s == "inf" || s == "infinity") return GroupValue::infinity();
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw SyntaxError(text.size() - 1, ")", "unclosed tuple");
    std::vector<Rat> coords;
    std::string_view body = s.substr(1, s.size() - 2);
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = body.find(',', pos);
      std::string_view piece = body.substr(
          pos, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - pos);
      coords.push_back(rat_from_string(piece));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return GroupValue(std::move(coords));
  }
  return GroupValue(rat_from_string(s));
}

}  // namespace valivt
