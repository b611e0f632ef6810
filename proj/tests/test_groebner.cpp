#include <doctest.h>

#include <algorithm>
#include <random>

#include "cgs/groebner.hpp"

#include "support.hpp"

using namespace cgs;
using ts::poly;
using ts::polys;

namespace {

// Expected reduced basis of the two-circles ideal, increasing LPP order.
std::vector<Polynomial> circles_rgb(const RingPtr& r) {
  return polys(r, {
    "c^2*y^2 + 1/4*c^4 - 1/2*c^2*r - 1/2*c^2 + 1/4*r^2 - 1/2*r + 1/4",
    "r*x - x - 2*c*y^2 - 1/2*c^3 + 1/2*c*r + 3/2*c",
    "c*x - 1/2*c^2 + 1/2*r - 1/2",
    "x^2 + y^2 - 1",
  });
}

}  // namespace

TEST_CASE("normal_form reduces fully") {
  RingPtr r = ts::circles_ring();
  TermOrdering ord = r->ordering();

  CHECK(normal_form(poly(r, "x^2 + y^2"), polys(r, {"x^2 + y^2 - 1"}), ord) == poly(r, "1"));
  CHECK(normal_form(Polynomial(r), polys(r, {"x - c"}), ord).is_zero());

  // Repeated substitution x -> c.
  RingPtr rc = make_ring({"x", "y"}, {"c"}, BlockOrder::Lex, BlockOrder::Lex);
  CHECK(normal_form(poly(rc, "x^2*y"), polys(rc, {"x - c"}), rc->ordering()) ==
        poly(rc, "c^2*y"));

  // Tail terms are reduced too, not just the leading one.
  CHECK(normal_form(poly(r, "x^3 + x*y^2"), polys(r, {"y^2 - 1"}), ord) ==
        poly(r, "x^3 + x"));

  // Zero reducers are ignored.
  std::vector<Polynomial> with_zero = {Polynomial(r), poly(r, "x")};
  CHECK(normal_form(poly(r, "x + y"), with_zero, ord) == poly(r, "y"));

  // No monomial of the remainder is divisible by a reducer LPP.
  std::mt19937_64 rng(31);
  auto basis = polys(r, {"x^2 + y^2 - 1", "c*y - r"});
  for (int i = 0; i < 30; ++i) {
    auto f = ts::random_poly(rng, r, 5, 4);
    auto nf = normal_form(f, basis, ord);
    for (const auto& t : nf.terms())
      for (const auto& g : basis)
        CHECK_FALSE(pp_divides(t.pp, leading(g, ord).pp));
  }
}

TEST_CASE("s_polynomial") {
  RingPtr r = ts::circles_ring();
  TermOrdering ord = r->ordering();

  CHECK(s_polynomial(poly(r, "x"), poly(r, "y"), ord).is_zero());
  CHECK(s_polynomial(poly(r, "x*y - 1"), poly(r, "x"), ord) == poly(r, "-1"));
  auto f = poly(r, "x^2 + c*y");
  CHECK(s_polynomial(f, f, ord).is_zero());
  CHECK_THROWS_AS(s_polynomial(f, Polynomial(r), ord), usage_error);
  CHECK_THROWS_AS(s_polynomial(Polynomial(r), f, ord), usage_error);

  // Leading terms cancel by construction.
  std::mt19937_64 rng(32);
  for (int i = 0; i < 30; ++i) {
    auto a = ts::random_nonzero_poly(rng, r, 4, 3);
    auto b = ts::random_nonzero_poly(rng, r, 4, 3);
    auto s = s_polynomial(a, b, ord);
    if (!s.is_zero()) {
      auto lcm = pp_lcm(leading(a, ord).pp, leading(b, ord).pp);
      CHECK(ord.less(leading(s, ord).pp, lcm));
    }
  }
}

TEST_CASE("reduced_groebner_basis simple cases") {
  RingPtr r = ts::circles_ring();
  TermOrdering ord = r->ordering();

  CHECK(ts::rendered(reduced_groebner_basis(polys(r, {"x + y", "x - y"}), ord)) ==
        std::vector<std::string>{"y", "x"});
  CHECK(reduced_groebner_basis({Polynomial(r)}, ord).empty());
  CHECK(reduced_groebner_basis({}, ord).empty());
  CHECK(ts::rendered(reduced_groebner_basis(polys(r, {"2*x", "3"}), ord)) ==
        std::vector<std::string>{"1"});
  // Non-monic generator comes back monic.
  CHECK(ts::rendered(reduced_groebner_basis(polys(r, {"2*x - 4"}), ord)) ==
        std::vector<std::string>{"x - 2"});
}

TEST_CASE("two-circles reduced basis matches the worked example") {
  RingPtr r = ts::circles_ring();
  auto rgb = reduced_groebner_basis(ts::circles_gens(r), r->ordering());
  CHECK(rgb == circles_rgb(r));
}

TEST_CASE("reduced basis is invariant under permutation and duplication") {
  RingPtr r = ts::circles_ring();
  TermOrdering ord = r->ordering();
  auto gens = ts::circles_gens(r);
  auto expected = reduced_groebner_basis(gens, ord);

  auto flipped = gens;
  std::swap(flipped[0], flipped[1]);
  CHECK(reduced_groebner_basis(flipped, ord) == expected);

  auto doubled = gens;
  doubled.push_back(gens[0]);
  doubled.push_back(Rational(7, 3) * gens[1]);
  CHECK(reduced_groebner_basis(doubled, ord) == expected);

  // Idempotence.
  CHECK(reduced_groebner_basis(expected, ord) == expected);
}

TEST_CASE("membership through the reduced basis") {
  std::mt19937_64 rng(33);
  RingPtr r = ts::circles_ring();
  TermOrdering ord = r->ordering();
  auto gens = ts::circles_gens(r);
  auto rgb = reduced_groebner_basis(gens, ord);

  for (int i = 0; i < 25; ++i) {
    // Random combination sum q_i * f_i lies in the ideal.
    Polynomial member(r);
    for (const auto& g : gens) member = member + ts::random_poly(rng, r, 3, 2) * g;
    CHECK(normal_form(member, rgb, ord).is_zero());
    // Shifting by a nonzero normal form leaves the ideal.
    auto outside = member + poly(r, "x + 1");
    CHECK_FALSE(normal_form(outside, rgb, ord).is_zero());
  }
}

TEST_CASE("is_groebner_basis") {
  RingPtr r = ts::circles_ring();
  TermOrdering ord = r->ordering();

  CHECK(is_groebner_basis(circles_rgb(r), ord));
  CHECK_FALSE(is_groebner_basis(polys(r, {"x*y - 1", "x"}), ord));
  CHECK(is_groebner_basis(polys(r, {"x^2 + y^2 - 1"}), ord));
  CHECK(is_groebner_basis({}, ord));
  // The raw two-circles generators are not a Groebner basis.
  CHECK_FALSE(is_groebner_basis(ts::circles_gens(r), ord));

  std::mt19937_64 rng(34);
  for (int i = 0; i < 10; ++i) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(ts::random_poly(rng, r, 3, 3));
    CHECK(is_groebner_basis(reduced_groebner_basis(gens, ord), ord));
  }
}

TEST_CASE("divide_exact") {
  RingPtr r = ts::circles_ring();
  TermOrdering ord = r->ordering();

  CHECK(divide_exact(poly(r, "c^2 + 2*c*r + r^2"), poly(r, "c + r"), ord) == poly(r, "c + r"));
  CHECK(divide_exact(poly(r, "x^2 - y^2"), poly(r, "x - y"), ord) == poly(r, "x + y"));
  CHECK(divide_exact(Polynomial(r), poly(r, "x"), ord).is_zero());
  CHECK_THROWS_AS(divide_exact(poly(r, "x + 1"), poly(r, "y"), ord), usage_error);
  CHECK_THROWS_AS(divide_exact(poly(r, "x"), Polynomial(r), ord), usage_error);

  std::mt19937_64 rng(35);
  for (int i = 0; i < 30; ++i) {
    auto f = ts::random_nonzero_poly(rng, r, 3, 2);
    auto g = ts::random_nonzero_poly(rng, r, 3, 2);
    CHECK(divide_exact(f * g, g, ord) == f);
  }
}

TEST_CASE("reduced basis output shape") {
  std::mt19937_64 rng(36);
  RingPtr r = ts::circles_ring();
  TermOrdering ord = r->ordering();
  for (int i = 0; i < 15; ++i) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(ts::random_poly(rng, r, 3, 3));
    auto rgb = reduced_groebner_basis(gens, ord);
    for (std::size_t j = 0; j < rgb.size(); ++j) {
      CHECK(leading(rgb[j], ord).coeff == Rational(1));  // monic
      if (j + 1 < rgb.size())
        CHECK(ord.less(leading(rgb[j], ord).pp, leading(rgb[j + 1], ord).pp));  // increasing
      // Fully interreduced: no term divisible by another element's LPP.
      for (std::size_t k = 0; k < rgb.size(); ++k) {
        if (j == k) continue;
        for (const auto& t : rgb[j].terms())
          CHECK_FALSE(pp_divides(t.pp, leading(rgb[k], ord).pp));
      }
    }
  }
}
