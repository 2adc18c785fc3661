#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include <cotzeta/bounded.hpp>

using cotzeta::BoundedValue;

TEST_CASE("bounded constructors validate the error field") {
  CHECK_THROWS_AS(cotzeta::bounded(1.0, -1e-9), std::invalid_argument);
  CHECK_THROWS_AS(cotzeta::bounded(1.0, std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
  CHECK(cotzeta::exact(3.0).err == 0.0);
  CHECK(cotzeta::rounded(2.0).err > 0.0);
}

TEST_CASE("division by an interval containing zero is rejected") {
  CHECK_THROWS_AS(cotzeta::exact(1.0) / cotzeta::bounded(1e-12, 1e-9),
                  std::domain_error);
  CHECK_THROWS_AS(cotzeta::log(cotzeta::bounded(1e-12, 1e-9)), std::domain_error);
}

namespace {

// Recompute the same expression tree in long double; the difference between
// the double result and the (much more precise) long-double result is the
// true rounding error, which must stay within the reported bound.
struct Pair {
  BoundedValue bv;
  long double ref;
};

Pair apply(int op, Pair a, Pair b) {
  switch (op) {
    case 0: return {a.bv + b.bv, a.ref + b.ref};
    case 1: return {a.bv - b.bv, a.ref - b.ref};
    case 2: return {a.bv * b.bv, a.ref * b.ref};
    default: return {a.bv / b.bv, a.ref / b.ref};
  }
}

}  // namespace

TEST_CASE("propagated error bounds cover the true rounding error") {
  static_assert(std::numeric_limits<long double>::digits >
                std::numeric_limits<double>::digits);
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> val(-10.0, 10.0);
  std::uniform_int_distribution<int> op(0, 3);
  int checked = 0;
  while (checked < 10000) {
    const double a = val(rng), b = val(rng), c = val(rng), d = val(rng);
    if (std::abs(b) < 0.1 || std::abs(d) < 0.1) continue;  // keep divisors sane
    Pair pa{cotzeta::exact(a), a}, pb{cotzeta::exact(b), b};
    Pair pc{cotzeta::exact(c), c}, pd{cotzeta::exact(d), d};
    const int o1 = op(rng), o2 = op(rng);
    Pair left = apply(o1, pa, pb);
    Pair right = apply(o2, pc, pd);
    if (o1 == 3 && std::abs(left.bv.value) < 1e-6) continue;
    Pair top = apply(op(rng) % 3, left, right);  // +,-,* at the top
    const long double true_err = std::abs(static_cast<long double>(top.bv.value) - top.ref);
    REQUIRE(true_err <= static_cast<long double>(top.bv.err));
    ++checked;
  }
}

TEST_CASE("log and exp bounds cover the true error") {
  std::mt19937 rng(999);
  std::uniform_real_distribution<double> val(0.01, 20.0);
  for (int i = 0; i < 2000; ++i) {
    const double a = val(rng);
    const BoundedValue in = cotzeta::bounded(a, 1e-12);
    const BoundedValue l = cotzeta::log(in);
    const BoundedValue e = cotzeta::exp(cotzeta::bounded(std::log(a), 1e-13));
    CHECK(std::abs(static_cast<long double>(l.value) - std::log(static_cast<long double>(a))) <=
          l.err);
    CHECK(std::abs(static_cast<long double>(e.value) - static_cast<long double>(a)) <= e.err);
  }
}
