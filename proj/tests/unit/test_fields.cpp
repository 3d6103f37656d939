#include "doctest.h"
#include "support.hpp"

#include "infcov/laurent_field.hpp"

using namespace infcov;
using testsupport::lz;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> v) {
  std::vector<BigInt> out;
  for (long x : v)
    out.emplace_back(x);
  return out;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no infcov::Error thrown");
  return ErrorKind::InvariantBreach;
}

} // namespace

TEST_CASE("coprime part and multiplicative order") {
  CHECK(coprime_part(12, 2) == 3);
  CHECK(coprime_part(5, 0) == 5);
  CHECK(coprime_part(8, 2) == 1);
  CHECK(coprime_part(45, 3) == 5);
  CHECK(order_mod(2, 3) == 2);
  CHECK(order_mod(3, 7) == 6);
  CHECK(order_mod(5, 1) == 1);
}

TEST_CASE("splitting fields") {
  auto q3 = make_splitting_field(0, 3);
  CHECK(q3->characteristic() == 0);
  CHECK(q3->spec().modulus == ints({1, 1, 1}));
  CHECK(q3->cyclotomic_index() == 3);

  auto f4 = make_splitting_field(2, 3);
  CHECK(f4->characteristic() == 2);
  CHECK(f4->spec().modulus == ints({1, 1, 1}));
  CHECK(f4->size() == 4);

  auto f4b = make_splitting_field(2, 6);
  CHECK(f4b->spec().modulus == f4->spec().modulus);

  CHECK(make_splitting_field(5, 4)->degree() == 1);
  CHECK(make_splitting_field(3, 8)->size() == 9);
  CHECK(make_splitting_field(0, 1)->degree() == 1);
}

TEST_CASE("roots of unity") {
  auto q3 = make_splitting_field(0, 3);
  auto z = root_of_unity(*q3, 3);
  CHECK(z == q3->gen());
  CHECK(q3->multiplicative_order(z, 100) == std::optional<std::int64_t>(3));

  auto f4 = make_splitting_field(2, 3);
  auto w = root_of_unity(*f4, 3);
  CHECK(w == f4->gen());
  CHECK(f4->multiplicative_order(w, 100) == std::optional<std::int64_t>(3));

  auto f2 = prime_field(2);
  CHECK(f2->is_one(root_of_unity(*f2, 2)));

  for (std::int64_t n : {5, 7, 12}) {
    auto k = make_splitting_field(0, n);
    CHECK(k->multiplicative_order(root_of_unity(*k, n), 1000) == std::optional<std::int64_t>(n));
  }
  for (auto [p, n] : std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 7}, {3, 4}, {5, 6}, {2, 15}}) {
    auto k = make_splitting_field(p, n);
    CHECK(k->multiplicative_order(root_of_unity(*k, n), 100000) == std::optional<std::int64_t>(coprime_part(n, p)));
  }
}

TEST_CASE("field arithmetic") {
  auto f4 = make_splitting_field(2, 3);
  const auto x = f4->gen();
  CHECK(f4->mul(x, x) == f4->add(x, f4->one()));

  std::mt19937_64 rng(5);
  for (auto k : {make_splitting_field(3, 8), make_splitting_field(2, 7), make_splitting_field(0, 5), prime_field(101)}) {
    for (int i = 0; i < 40; ++i) {
      const auto a = k->random_nonzero(rng);
      const auto b = k->random(rng);
      CHECK(k->is_one(k->mul(a, k->inv(a))));
      CHECK(k->sub(k->add(a, b), b) == a);
      CHECK(k->mul(a, k->add(b, k->one())) == k->add(k->mul(a, b), a));
    }
  }
  auto f9 = make_splitting_field(3, 8);
  const auto g = f9->primitive_element();
  CHECK(f9->multiplicative_order(g, 100) == std::optional<std::int64_t>(8));
  CHECK(kind_of([&] { f9->inv(f9->zero()); }) == ErrorKind::DivisionByZero);
}

TEST_CASE("field validation") {
  CHECK_THROWS_AS(Field(FieldSpec{4, ints({-1, 1}), 1}), Error);
  CHECK_THROWS_AS(Field(FieldSpec{2, ints({1, 0, 1}), 1}), Error); // x^2 + 1 = (x + 1)^2 mod 2
  CHECK_NOTHROW(Field(FieldSpec{3, ints({1, 0, 1}), 4}));
}

TEST_CASE("enlarged finite fields") {
  auto k = make_field_with_min_size(2, 1, 1024);
  CHECK(k->size() - 1 >= 1024);
  auto k3 = make_field_with_min_size(3, 4, 200);
  CHECK(k3->size() - 1 >= 200);
  CHECK(k3->multiplicative_order(root_of_unity(*k3, 4), 100) == std::optional<std::int64_t>(4));
  auto q = make_field_with_min_size(0, 3, 1000);
  CHECK(q->characteristic() == 0);
}

TEST_CASE("gcd over a field") {
  auto q = rationals();
  auto L = [&](const LaurentPolyZ& p) { return LaurentPolyK::from_z(q, p); };
  CHECK(gcd_over_field(L(lz({-1, 0, 1})), L(lz({-1, 0, 0, 1}))) == L(lz({-1, 1})));
  CHECK(gcd_over_field(L(lz({-1, 0, 0, 0, 0, 0, 1})), L(lz({1, -3, 1}))) == L(lz({1})));

  auto f2 = prime_field(2);
  CHECK(gcd_over_field(reduce_mod_p(lz({-1, 0, 1}), f2), reduce_mod_p(lz({1, 0, 1}), f2)) ==
        reduce_mod_p(lz({1, 0, 1}), f2));

  CHECK(kind_of([&] { gcd_over_field(LaurentPolyK(q), LaurentPolyK(q)); }) == ErrorKind::BothZero);
  CHECK(kind_of([&] { gcd_over_field(L(lz({1, 1})), reduce_mod_p(lz({1, 1}), f2)); }) == ErrorKind::FieldMismatch);
}

TEST_CASE("reduction mod p") {
  CHECK(reduce_mod_p(lz({2, 2}), prime_field(2)).is_zero());
  auto f3 = prime_field(3);
  const auto lhs = reduce_mod_p(lz({-1, 1}) * lz({-1, 0, 0, 1}), f3);
  CHECK(lhs == reduce_mod_p(pow(lz({-1, 1}), 4), f3));
  CHECK(reduce_mod_p(lz({1, -3, 1}), f3) == reduce_mod_p(lz({1, 0, 1}), f3));
  auto [qt, rm] = poly_divmod(reduce_mod_p(lz({1, 0, 0, 1}), f3), reduce_mod_p(lz({1, 1}), f3));
  CHECK(rm.is_zero());
  CHECK(qt.monic() == reduce_mod_p(lz({1, -1, 1}), f3));
}
