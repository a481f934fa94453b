#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"

#include "valivt/group.hpp"

using namespace valivt;

TEST_CASE("lexicographic comparison") {
  GroupValue a(std::vector<Rat>{Rat(1), Rat(0)});
  GroupValue b(std::vector<Rat>{Rat(0), Rat(5)});
  CHECK(cmp(a, b) == Ordering::greater);

  CHECK(cmp(GroupValue::infinity(), GroupValue(Rat(1000000000))) ==
        Ordering::greater);

  GroupValue c(std::vector<Rat>{Rat(2), Rat(3)});
  CHECK(cmp(c, c) == Ordering::equal);
}

TEST_CASE("rank mismatch is a structural error") {
  GroupValue a(std::vector<Rat>{Rat(1), Rat(0)});
  GroupValue b(Rat(1));
  CHECK_THROWS_AS(cmp(a, b), Error);
}

TEST_CASE("addition and integer scaling") {
  CHECK(add(GroupValue(Rat(1, 2)), GroupValue(Rat(1, 3))) ==
        GroupValue(Rat(5, 6)));

  GroupValue g(std::vector<Rat>{Rat(1), Rat(-2)});
  GroupValue want(std::vector<Rat>{Rat(3), Rat(-6)});
  CHECK(scale_int(g, 3) == want);

  CHECK(add(GroupValue::infinity(), GroupValue(Rat(7))).is_infinity());
  CHECK(scale_int(GroupValue(Rat(9)), 0) == GroupValue(Rat(0)));
  CHECK_THROWS_AS(scale_int(GroupValue::infinity(), 0), Error);
}

TEST_CASE("exact division by an integer") {
  CHECK(divide_exact(GroupSpec::rationals(), GroupValue(Rat(1)), 2) ==
        GroupValue(Rat(1, 2)));

  CHECK_THROWS_WITH_AS(
      divide_exact(GroupSpec::integers(), GroupValue(Rat(1)), 2),
      doctest::Contains("DivisibilityError"), Error);

  GroupSpec z2 = GroupSpec::lex(CoordKind::integer, 2);
  GroupValue g(std::vector<Rat>{Rat(4), Rat(-6)});
  GroupValue want(std::vector<Rat>{Rat(2), Rat(-3)});
  CHECK(divide_exact(z2, g, 2) == want);
}

TEST_CASE("order laws and monotone addition") {
  std::mt19937 rng(0);
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 6);
  auto rnd = [&] { return GroupValue(frac(num(rng), den(rng))); };

  for (int i = 0; i < 200; ++i) {
    GroupValue a = rnd(), b = rnd(), c = rnd();
    // antisymmetry and totality
    if (a < b) CHECK(!(b < a));
    CHECK((a < b || b < a || a == b));
    // transitivity
    if (a < b && b < c) CHECK(a < c);
    // strict monotonicity of addition
    if (a < b) CHECK(add(a, c) < add(b, c));
  }
}

TEST_CASE("divide_exact round-trips and is total on divisible groups") {
  std::mt19937 rng(1);
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 8);
  std::uniform_int_distribution<long> nn(1, 7);

  GroupSpec q = GroupSpec::rationals();
  GroupSpec z = GroupSpec::integers();
  CHECK(q.divisible());
  CHECK(!z.divisible());

  for (int i = 0; i < 200; ++i) {
    long n = nn(rng);
    GroupValue g(frac(num(rng), den(rng)));
    GroupValue h = divide_exact(q, g, n);  // never throws: Q is divisible
    CHECK(scale_int(h, n) == g);

    GroupValue gi(Rat(num(rng)));
    try {
      GroupValue hi = divide_exact(z, gi, n);
      CHECK(scale_int(hi, n) == gi);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::divisibility);
      CHECK(gi.scalar().get_num() % n != 0);
    }
  }
}

TEST_CASE("text round-trip") {
  for (const char* s : {"3/4", "-2", "inf", "(1,-5/2)"}) {
    GroupValue g = parse_group_value(s);
    CHECK(parse_group_value(g.to_string()) == g);
    CHECK(g.to_string() == s);
  }
}
