#include "padic/mahler.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

using namespace padic;
namespace orc = padic::oracles;

namespace {

std::vector<PAdicNumber> integer_samples(const std::vector<long long>& vals, std::uint32_t p,
                                         const PrecisionPolicy& policy) {
  std::vector<PAdicNumber> out;
  out.reserve(vals.size());
  for (auto v : vals) out.push_back(PAdicNumber::from_integer(v, p, policy));
  return out;
}

// Integer polynomial evaluation through library arithmetic (Horner).
PAdicNumber eval_poly(const std::vector<long long>& coeffs, const PAdicNumber& x,
                      const PrecisionPolicy& policy) {
  PAdicNumber acc = PAdicNumber::zero(x.prime());
  for (std::size_t i = coeffs.size(); i > 0; --i) {
    acc = acc * x + PAdicNumber::from_integer(coeffs[i - 1], x.prime(), policy);
  }
  return acc;
}

}  // namespace

TEST_SUITE("mahler") {

TEST_CASE("factorial valuation via Legendre") {
  CHECK(factorial_valuation(2, 8) == 7);
  CHECK(factorial_valuation(3, 7) == 2);
  CHECK(factorial_valuation(5, 4) == 0);
  CHECK(factorial_valuation(2, 0) == 0);
}

TEST_CASE("omega_0 is constantly one") {
  Rng rng(3);
  for (int i = 0; i < 10; ++i) {
    const auto x = orc::random_ring_element(rng, 3, 12);
    CHECK(omega(0, x).same_value(PAdicNumber::from_integer(1, 3)));
  }
}

TEST_CASE("omega matches integer binomials") {
  CHECK(omega(2, PAdicNumber::from_integer(5, 3)).same_value(PAdicNumber::from_integer(10, 3)));
  CHECK(omega(3, PAdicNumber::from_integer(7, 5)).same_value(PAdicNumber::from_integer(35, 5)));
  // Random spot checks against the big-integer oracle.
  Rng rng(17);
  for (int iter = 0; iter < 50; ++iter) {
    const long long n = static_cast<long long>(rng.bounded(60));
    const int k = static_cast<int>(rng.bounded(7));
    const auto val = omega(k, PAdicNumber::from_integer(n, 3));
    CHECK(orc::matches_integer(val.truncated_rel(20), orc::binomial_big(BigInt(n), k)));
  }
}

TEST_CASE("omega at -1 over Q_2 alternates sign") {
  // Oracle: C(2^m - 1, k) mod 2^M for large m, by continuity on the dense
  // subset of nonnegative integers.
  const PrecisionPolicy policy(16, 8);
  const int m_big = 40;
  const auto minus_one = PAdicNumber::from_integer(-1, 2, policy);
  for (int k = 0; k <= 6; ++k) {
    const auto got = omega(k, minus_one, policy);
    const BigInt dense = orc::binomial_big(orc::pow_big(2, m_big) - 1, k);
    const BigInt modulus = orc::pow_big(2, got.abs_precision());
    CHECK(orc::mod_big(orc::pow_big(2, got.valuation()) * orc::unit_value(got), modulus) ==
          orc::mod_big(dense, modulus));
    // And the closed form (-1)^k.
    const auto expected = PAdicNumber::from_integer(k % 2 ? -1 : 1, 2, policy);
    CHECK(got.same_value(expected));
  }
}

TEST_CASE("omega stays in the ring") {
  Rng rng(23);
  const PrecisionPolicy policy(16, 8);
  for (int iter = 0; iter < 100; ++iter) {
    const std::uint32_t p = iter % 2 ? 2 : 3;
    const auto x = orc::random_ring_element(rng, p, 16);
    const auto w = omega(static_cast<int>(rng.bounded(8)), x, policy);
    CHECK(w.in_ring());
    CHECK(w.norm().value <= 1);
  }
}

TEST_CASE("omega reports an insufficient guard budget") {
  const auto x = PAdicNumber::from_integer(5, 2, PrecisionPolicy(16, 2));
  CHECK_THROWS_AS(omega(8, x, PrecisionPolicy(16, 2)), NumericError);  // v_2(8!) = 7
}

TEST_CASE("omega rejects arguments outside Z_p") {
  const auto x = PAdicNumber::from_rational(1, 3, 3);
  CHECK_THROWS_AS(omega(1, x), InvalidArgument);
}

TEST_CASE("coefficients of x^2 sampled at 0..3") {
  const PrecisionPolicy policy(16, 0);
  const auto series = mahler_coefficients(integer_samples({0, 1, 4, 9}, 3, policy));
  REQUIRE(series.degree() == 3);
  CHECK(series.weights[0].is_zero_at_precision());
  CHECK(series.weights[1].same_value(PAdicNumber::from_integer(1, 3)));
  CHECK(series.weights[2].same_value(PAdicNumber::from_integer(2, 3)));
  CHECK(series.weights[3].is_zero_at_precision());
}

TEST_CASE("constant samples give a constant series") {
  const PrecisionPolicy policy(12, 0);
  const auto series = mahler_coefficients(integer_samples({6, 6, 6, 6, 6}, 5, policy));
  CHECK(series.weights[0].same_value(PAdicNumber::from_integer(6, 5)));
  for (int i = 1; i <= series.degree(); ++i) {
    CHECK(series.weights[static_cast<std::size_t>(i)].is_zero_at_precision());
  }
}

TEST_CASE("biorthogonality: sampling omega_j gives the unit vector e_j") {
  const PrecisionPolicy policy(20, 4);
  const std::uint32_t p = 3;
  const int degree = 6;
  for (int j = 0; j <= degree; ++j) {
    std::vector<PAdicNumber> samples;
    for (int t = 0; t <= degree; ++t) {
      // Exact integer binomial as the sample value (independent oracle).
      const BigInt c = orc::binomial_big(BigInt(t), j);
      samples.push_back(PAdicNumber::from_integer(c.convert_to<long long>(), p, policy));
    }
    const auto series = mahler_coefficients(samples);
    for (int i = 0; i <= degree; ++i) {
      if (i == j) {
        CHECK(series.weights[static_cast<std::size_t>(i)].same_value(
            PAdicNumber::from_integer(1, p, policy)));
      } else {
        CHECK(series.weights[static_cast<std::size_t>(i)].is_zero_at_precision());
      }
    }
  }
}

TEST_CASE("difference table matches the alternating-sum oracle") {
  Rng rng(31);
  const PrecisionPolicy policy(20, 0);
  for (int iter = 0; iter < 20; ++iter) {
    std::vector<BigInt> big;
    std::vector<PAdicNumber> samples;
    for (int i = 0; i < 7; ++i) {
      const long long v = static_cast<long long>(rng.bounded(10000));
      big.emplace_back(v);
      samples.push_back(PAdicNumber::from_integer(v, 5, policy));
    }
    const auto expected = orc::difference_table(big);
    const auto series = mahler_coefficients(samples);
    for (std::size_t i = 0; i < expected.size(); ++i) {
      CHECK(orc::matches_integer(series.weights[i], expected[i]));
    }
  }
}

TEST_CASE("eval_series basics") {
  const PrecisionPolicy policy(16, 4);
  const std::uint32_t p = 3;
  // weights (0, 1) evaluate to x itself.
  const MahlerSeries ident{p, {PAdicNumber::zero(p), PAdicNumber::from_integer(1, p, policy)}};
  Rng rng(37);
  for (int i = 0; i < 10; ++i) {
    const auto x = orc::random_ring_element(rng, p, 12);
    CHECK(eval_series(ident, x, policy).same_value(x));
  }
  // weights (0,1,2,0) at x=5 give 25.
  const MahlerSeries quad{p,
                          {PAdicNumber::zero(p), PAdicNumber::from_integer(1, p, policy),
                           PAdicNumber::from_integer(2, p, policy), PAdicNumber::zero(p)}};
  CHECK(eval_series(quad, PAdicNumber::from_integer(5, p, policy), policy)
            .same_value(PAdicNumber::from_integer(25, p, policy)));
}

TEST_CASE("appending zero weights never changes the value") {
  const PrecisionPolicy policy(16, 4);
  const std::uint32_t p = 2;
  Rng rng(41);
  for (int iter = 0; iter < 20; ++iter) {
    std::vector<PAdicNumber> w;
    for (int k = 0; k < 4; ++k) w.push_back(orc::random_ring_element(rng, p, 16));
    MahlerSeries s{p, w};
    MahlerSeries extended{p, w};
    extended.weights.push_back(PAdicNumber::zero(p));
    extended.weights.push_back(PAdicNumber::zero(p));
    const auto x = orc::random_ring_element(rng, p, 16);
    CHECK(eval_series(s, x, policy).same_value(eval_series(extended, x, policy)));
  }
}

TEST_CASE("roundtrip: coefficients of a polynomial reproduce it") {
  Rng rng(43);
  for (const std::uint32_t p : {2u, 3u, 5u}) {
    const PrecisionPolicy policy(24, 8);
    for (int iter = 0; iter < 10; ++iter) {
      const int degree = 1 + static_cast<int>(rng.bounded(7));
      std::vector<long long> coeffs;
      for (int i = 0; i <= degree; ++i) {
        coeffs.push_back(static_cast<long long>(rng.bounded(201)) - 100);
      }
      std::vector<PAdicNumber> samples;
      for (int t = 0; t <= degree; ++t) {
        samples.push_back(eval_poly(coeffs, PAdicNumber::from_integer(t, p, policy), policy));
      }
      const auto series = mahler_coefficients(samples);
      for (int check = 0; check < 5; ++check) {
        const auto x = orc::random_ring_element(rng, p, 24);
        const auto direct = eval_poly(coeffs, x, policy);
        const auto via_series = eval_series(series, x, policy);
        const auto diff = direct - via_series;
        CHECK(diff.is_zero_at_precision());
        CHECK(diff.abs_precision() >= policy.working_digits - policy.guard_digits);
      }
    }
  }
}

TEST_CASE("coefficient extraction is linear in the samples") {
  Rng rng(47);
  const std::uint32_t p = 3;
  const PrecisionPolicy policy(16, 0);
  for (int iter = 0; iter < 20; ++iter) {
    std::vector<PAdicNumber> f, g, sum;
    const auto c = orc::random_ring_element(rng, p, 16);
    std::vector<PAdicNumber> scaled;
    for (int i = 0; i < 6; ++i) {
      f.push_back(orc::random_ring_element(rng, p, 16));
      g.push_back(orc::random_ring_element(rng, p, 16));
      sum.push_back(f.back() + g.back());
      scaled.push_back(c * f.back());
    }
    const auto wf = mahler_coefficients(f);
    const auto wg = mahler_coefficients(g);
    const auto wsum = mahler_coefficients(sum);
    const auto wscaled = mahler_coefficients(scaled);
    for (int i = 0; i < 6; ++i) {
      CHECK(wsum.weights[static_cast<std::size_t>(i)].same_value(
          wf.weights[static_cast<std::size_t>(i)] + wg.weights[static_cast<std::size_t>(i)]));
      CHECK(wscaled.weights[static_cast<std::size_t>(i)].same_value(
          c * wf.weights[static_cast<std::size_t>(i)]));
    }
  }
}

TEST_CASE("truncation error is bounded by the largest dropped weight") {
  Rng rng(53);
  const std::uint32_t p = 2;
  const PrecisionPolicy policy(20, 8);
  for (int iter = 0; iter < 40; ++iter) {
    std::vector<PAdicNumber> w;
    const int full = 7;
    for (int k = 0; k <= full; ++k) w.push_back(orc::random_ring_element(rng, p, 20));
    const int cut = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(full)));
    MahlerSeries all{p, w};
    MahlerSeries head{p, std::vector<PAdicNumber>(w.begin(), w.begin() + cut)};
    const auto x = orc::random_ring_element(rng, p, 20);
    const auto diff = eval_series(all, x, policy) - eval_series(head, x, policy);
    Rational tail_max = 0;
    for (int k = cut; k <= full; ++k) {
      const Rational nk = w[static_cast<std::size_t>(k)].norm().value;
      if (nk > tail_max) tail_max = nk;
    }
    CHECK(diff.norm().value <= tail_max);
  }
}

TEST_CASE("series integrality check") {
  const std::uint32_t p = 3;
  MahlerSeries s{p, {PAdicNumber::from_integer(4, p), PAdicNumber::zero(p)}};
  CHECK(s.is_integral());
  s.weights.push_back(PAdicNumber::from_rational(1, 3, p));
  CHECK_FALSE(s.is_integral());
}

}  // TEST_SUITE
