#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <string>

#include "upword/constructor.hpp"
#include "upword/feasibility.hpp"

using namespace upword;

namespace {

PartialWord W(const std::string& s, int a) { return parse_partial_word(s, Alphabet(a)); }

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    r *= b;
  }
  return r;
}

}  // namespace

TEST(ExpectedLength, Values) {
  EXPECT_EQ(expected_length(4, 4, 1), 67u);
  EXPECT_EQ(construct_n4(4).size(), 67u);
  EXPECT_EQ(expected_length(2, 3, 0), 10u);
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(expected_length(3, n, n), static_cast<std::uint64_t>(n));
  }
  EXPECT_THROW(expected_length(2, 3, 4), Error);
  EXPECT_THROW(expected_length(2, 3, -1), Error);
  EXPECT_THROW(expected_length(2, 50, 0), Error);
}

TEST(DiamondicityBound, Values) {
  EXPECT_EQ(diamondicity_bound(4), 2);
  EXPECT_EQ(diamondicity_bound(2), 1);
  EXPECT_EQ(diamondicity_bound(8), 5);
  EXPECT_EQ(diamondicity_bound(1), 2);
  EXPECT_THROW(diamondicity_bound(0), Error);
}

TEST(DiamondicityBound, AgreesWithClosedForm) {
  // Forbidden d are those with d >= n - sqrt(n - 7/4) - 1/2.
  for (int n = 2; n <= 500; ++n) {
    const double threshold = n - std::sqrt(n - 1.75) - 0.5;
    int least = n;
    while (least > 0 && static_cast<double>(least - 1) >= threshold - 1e-9) {
      --least;
    }
    ASSERT_EQ(diamondicity_bound(n), least) << n;
  }
}

TEST(Admissible, Values) {
  EXPECT_TRUE(admissible_diamondicities(3, 4).empty());
  EXPECT_EQ(admissible_diamondicities(4, 4), (std::set<int>{1}));
  EXPECT_TRUE(admissible_diamondicities(3, 3).empty());
  EXPECT_TRUE(admissible_diamondicities(5, 2).empty());
  EXPECT_THROW(admissible_diamondicities(2, 4), Error);
}

TEST(Admissible, MatchesDefinitionAndBound) {
  for (int a = 3; a <= 12; ++a) {
    for (int n = 1; n <= 24; ++n) {
      const auto adm = admissible_diamondicities(a, n);
      for (int d = 1; d < n; ++d) {
        // Independent restatement of the rules.
        std::uint64_t p = 1;
        for (int i = 0; i < n - d; ++i) {
          p = (p * static_cast<std::uint64_t>(a)) % static_cast<std::uint64_t>(n);
        }
        const std::uint64_t g = std::gcd(p, static_cast<std::uint64_t>(n));
        bool root = false;
        for (std::uint64_t i = 2; i <= g; ++i) {
          if (g % i == 0 && (static_cast<std::uint64_t>(d) * i) % static_cast<std::uint64_t>(n) == 0 &&
              static_cast<std::uint64_t>(d) * i / static_cast<std::uint64_t>(n) < i) {
            root = true;
          }
        }
        const bool expect = n > 3 && g != 2 && root && d < diamondicity_bound(n);
        ASSERT_EQ(adm.count(d) == 1, expect) << "a=" << a << " n=" << n << " d=" << d;
      }
      for (const int d : adm) {
        ASSERT_LT(d, diamondicity_bound(n));
      }
    }
  }
}

TEST(CheckParameters, TrivialNeverRefuted) {
  for (int a = 2; a <= 6; ++a) {
    for (int n = 1; n <= 8; ++n) {
      EXPECT_FALSE(check_parameters(a, n, 0).refuted());
      EXPECT_FALSE(check_parameters(a, n, n).refuted());
    }
  }
}

TEST(CheckParameters, RuleIdentifiers) {
  EXPECT_EQ(check_parameters(3, 4, 1).fired.front().rule, Rule::divisibility);
  EXPECT_EQ(check_parameters(3, 3, 1).fired.front().rule, Rule::small_n);
  EXPECT_TRUE(check_parameters(4, 4, 2).fired_rule(Rule::diam_bound));
  // gcd(3^5, 6) = 3 is prime and 1 is not a multiple of 6/3.
  EXPECT_EQ(check_parameters(3, 6, 1).fired.front().rule, Rule::gcd_prime);
  EXPECT_FALSE(check_parameters(3, 6, 4).fired_rule(Rule::gcd_prime));
  EXPECT_TRUE(check_parameters(2, 6, 2, {.pseudocyclic = true}).fired_rule(Rule::gcd2));
  // Binary words without the pseudocyclic hypothesis only meet the rules
  // that need none.
  EXPECT_FALSE(check_parameters(2, 6, 2).refuted());
}

TEST(CheckParameters, BadInput) {
  EXPECT_THROW(check_parameters(1, 4, 1), Error);
  EXPECT_THROW(check_parameters(3, 0, 0), Error);
  EXPECT_THROW(check_parameters(3, 4, 5), Error);
}

TEST(FrameDivisibility, Examples) {
  EXPECT_FALSE(check_frame_divisibility(parse_frame("_*_*"), 2, 4, {.pseudocyclic = true}).refuted());
  EXPECT_TRUE(check_frame_divisibility(parse_frame("__*_"), 3, 4).fired_rule(Rule::divisibility));
  EXPECT_TRUE(check_frame_divisibility(parse_frame("_**_"), 3, 4).refuted());
  EXPECT_FALSE(check_frame_divisibility(parse_frame("****"), 3, 4).refuted());
  EXPECT_FALSE(check_frame_divisibility(parse_frame("___*"), 4, 4).refuted());
  EXPECT_THROW(check_frame_divisibility(parse_frame("__*"), 3, 4), Error);
}

TEST(FrameDivisibility, NeverRefutesKnownWords) {
  for (int a = 2; a <= 10; a += 2) {
    EXPECT_FALSE(check_word_divisibility(construct_n4(a), 4).refuted()) << a;
  }
  EXPECT_FALSE(check_word_divisibility(W("01*110*001*", 2), 4).refuted());
  EXPECT_FALSE(check_word_divisibility(W("**0111", 2), 3).refuted());
}

TEST(Gcd2, Examples) {
  EXPECT_TRUE(refute_gcd2(2, 2, 1).fired_rule(Rule::gcd2));
  EXPECT_TRUE(refute_gcd2(2, 6, 2).fired_rule(Rule::gcd2));
  EXPECT_FALSE(refute_gcd2(2, 4, 1).refuted());
  for (int a = 2; a <= 8; ++a) {
    for (int n = 1; n <= 12; ++n) {
      for (int d = 0; d <= n; ++d) {
        const std::uint64_t g = std::gcd(ipow(static_cast<std::uint64_t>(a), n - d), static_cast<std::uint64_t>(n));
        ASSERT_EQ(refute_gcd2(a, n, d).refuted(), g == 2);
      }
    }
  }
}

TEST(Shape, DiamondRuns) {
  EXPECT_TRUE(refute_shape(W("00**0000", 2), 4).fired_rule(Rule::diamond_run));
  EXPECT_TRUE(refute_shape(W("0*21", 3), 3).fired_rule(Rule::diamond_run));
  EXPECT_TRUE(refute_shape(W("0120*1120", 3), 4).fired_rule(Rule::diamond_run));
  EXPECT_FALSE(refute_shape(W("01*110*001*", 2), 4).refuted());
  // ◊^n itself is never refuted.
  EXPECT_FALSE(refute_shape(W("***", 3), 3).refuted());
  EXPECT_THROW(refute_shape(W("0", 2), 0), Error);
}

TEST(Shape, PeriodicSuffix) {
  // u * v with |u| = 1, v = 00 of period 1, n = 3.
  const auto v = refute_shape(W("10*00", 2), 3);
  EXPECT_TRUE(v.fired_rule(Rule::periodic_suffix));
  EXPECT_FALSE(refute_shape(W("*001011*", 2), 3).refuted());
}

TEST(Shape, NeverFiresOnKnownWords) {
  for (const auto& [s, a, n] : std::vector<std::tuple<std::string, int, int>>{
           {"**0111", 2, 3}, {"*001011*", 2, 3}, {"0001011100", 2, 3}, {"01*110*001*", 2, 4},
           {"001*110*001", 2, 4}, {"***", 3, 3}}) {
    EXPECT_FALSE(refute_shape(W(s, a), n).refuted()) << s;
  }
  for (int a = 2; a <= 10; a += 2) {
    EXPECT_FALSE(refute_shape(construct_n4(a), 4).refuted()) << a;
  }
}
