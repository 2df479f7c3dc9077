#include <gtest/gtest.h>

#include <endochain/chain_endo.hpp>
#include <endochain/simplex.hpp>

#include "oracles.hpp"

using namespace endochain;

namespace {

  ChainEndo E(std::string_view text, std::size_t n) {
    return parse_compact(text, n);
  }

  ChainEndo from_map(oracle::Map const& m) {
    return make_endo(m.size(), m);
  }

  oracle::Map to_map(ChainEndo const& x) {
    return {x.values().begin(), x.values().end()};
  }

  ErrorKind kind_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.kind();
    }
    ADD_FAILURE() << "no endochain::Error thrown";
    return ErrorKind::DomainError;
  }

}  // namespace

TEST(MakeEndo, Accepts) {
  ChainEndo x = make_endo(4, {1, 2, 3, 3});
  EXPECT_EQ(format_compact(x), "1 2 3_2");
  EXPECT_EQ(make_endo(3, {0, 1, 2}), identity(3));
}

TEST(MakeEndo, Rejects) {
  EXPECT_EQ(kind_of([] { make_endo(4, {2, 1, 1, 1}); }), ErrorKind::NotMonotone);
  EXPECT_EQ(kind_of([] { make_endo(4, {0, 1, 2, 4}); }), ErrorKind::OutOfRange);
  EXPECT_EQ(kind_of([] { make_endo(4, {0, -1, 2, 3}); }), ErrorKind::OutOfRange);
  EXPECT_EQ(kind_of([] { make_endo(4, {0, 1, 2}); }), ErrorKind::LengthMismatch);
}

TEST(Arithmetic, AddExamples) {
  EXPECT_EQ(E("1_2 2_2", 4) + E("1_3 3", 4), E("1_2 2 3", 4));
  EXPECT_EQ(E("1 2_3", 4) + E("1_2 3_2", 4), make_endo(4, {1, 2, 3, 3}));
  ChainEndo x = E("0 2_3", 4);
  EXPECT_EQ(x + x, x);
}

TEST(Arithmetic, MulExamples) {
  ChainEndo x = make_endo(4, {1, 2, 3, 3});
  EXPECT_EQ(x * x, make_endo(4, {2, 3, 3, 3}));
  EXPECT_EQ(x * identity(4), x);
  EXPECT_EQ(E("1_2 2_2", 4) * E("0_2 3_2", 4), make_endo(4, {0, 0, 3, 3}));
}

TEST(Arithmetic, SizeMismatch) {
  EXPECT_EQ(kind_of([] { identity(3) + identity(4); }), ErrorKind::SizeMismatch);
  EXPECT_EQ(kind_of([] { identity(3) * identity(4); }), ErrorKind::SizeMismatch);
}

TEST(Arithmetic, PowerExamples) {
  EXPECT_EQ(power(identity(5), 5), identity(5));
  EXPECT_EQ(power(make_endo(5, {1, 1, 1, 2, 2}), 2), constant(5, 1));
  EXPECT_EQ(power(make_endo(4, {1, 2, 3, 3}), 3), constant(4, 3));
  EXPECT_EQ(kind_of([] { power(identity(3), 0); }), ErrorKind::RangeError);
}

TEST(Arithmetic, EventualIdempotentExamples) {
  EXPECT_EQ(eventual_idempotent(identity(4)), identity(4));
  EXPECT_EQ(eventual_idempotent(make_endo(4, {1, 2, 3, 3})), constant(4, 3));
  EXPECT_EQ(eventual_idempotent(make_endo(4, {1, 1, 2, 3})),
            make_endo(4, {1, 1, 2, 3}));
}

TEST(Arithmetic, NilpotencyExamples) {
  EXPECT_TRUE(is_nilpotent_to(constant(4, 2), 2));
  EXPECT_TRUE(is_nilpotent_to(make_endo(5, {1, 1, 1, 2, 2}), 1));
  EXPECT_FALSE(is_nilpotent_to(make_endo(4, {1, 1, 2, 3}), 1));
  EXPECT_EQ(kind_of([] { is_nilpotent_to(identity(3), 3); }),
            ErrorKind::OutOfRange);
}

TEST(Compact, Examples) {
  EXPECT_EQ(E("1_2 2 3", 4), make_endo(4, {1, 1, 2, 3}));
  EXPECT_EQ(E("3_4", 4), constant(4, 3));
  EXPECT_EQ(format_compact(make_endo(4, {0, 0, 3, 3})), "0_2 3_2");
  EXPECT_EQ(format_tuple(make_endo(4, {1, 1, 2, 3})), "<1,1,2,3>");
}

TEST(Compact, Errors) {
  EXPECT_EQ(kind_of([] { E("1_2 2", 4); }), ErrorKind::SumMismatch);
  EXPECT_EQ(kind_of([] { E("2 1_3", 4); }), ErrorKind::NotMonotone);
  EXPECT_EQ(kind_of([] { E("1 1_3", 4); }), ErrorKind::NotMonotone);
  EXPECT_EQ(kind_of([] { E("1_0 2_4", 4); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { E("1_2  2_2", 4); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { E(" 1_4", 4); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { E("1_x", 4); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { E("", 4); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { E("4_4", 4); }), ErrorKind::OutOfRange);
}

TEST(Compact, RoundTripExhaustive) {
  for (int n = 1; n <= 6; ++n) {
    for (oracle::Map const& m : oracle::all_monotone(n)) {
      ChainEndo const x = from_map(m);
      ASSERT_EQ(parse_compact(format_compact(x), static_cast<std::size_t>(n)), x);
      ASSERT_EQ(from_compact(to_compact(x), static_cast<std::size_t>(n)), x);
    }
  }
}

TEST(Properties, ClosureAgreesWithOracle) {
  for (int n = 1; n <= 5; ++n) {
    auto const maps = oracle::all_monotone(n);
    for (auto const& p : maps) {
      for (auto const& q : maps) {
        ChainEndo const x = from_map(p), y = from_map(q);
        ASSERT_TRUE((x + y).valid());
        ASSERT_TRUE((x * y).valid());
        ASSERT_EQ(to_map(x + y), oracle::add(p, q));
        ASSERT_EQ(to_map(x * y), oracle::mul(p, q));
      }
    }
  }
}

TEST(Properties, SemiringLaws) {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto const all = all_endomorphisms(n);
    for (auto const& x : all) {
      for (auto const& y : all) {
        ASSERT_EQ(x + y, y + x);
        for (auto const& z : all) {
          ASSERT_EQ((x + y) + z, x + (y + z));
          ASSERT_EQ((x * y) * z, x * (y * z));
          ASSERT_EQ(x * (y + z), x * y + x * z);
          ASSERT_EQ((x + y) * z, x * z + y * z);
        }
      }
      ASSERT_EQ(x + x, x);
    }
  }
}

TEST(Properties, MulNotCommutative) {
  for (std::size_t n = 2; n <= 5; ++n) {
    auto const all   = all_endomorphisms(n);
    bool       found = false;
    for (auto const& x : all) {
      for (auto const& y : all) {
        found = found || x * y != y * x;
      }
    }
    EXPECT_TRUE(found) << "n=" << n;
  }
}

TEST(Properties, PowersAndStabilisation) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (auto const& x : all_endomorphisms(n)) {
      for (std::size_t s = 1; s <= 3; ++s) {
        for (std::size_t t = 1; t <= 3; ++t) {
          ASSERT_EQ(power(x, s + t), power(x, s) * power(x, t));
        }
      }
      PowerTrajectory const tr = power_trajectory(x);
      ASSERT_EQ(tr.idempotent, power(x, n));
      ASSERT_LE(tr.exponent, n);
    }
  }
}

TEST(Properties, NilpotencyAgreesWithOracle) {
  for (int n = 1; n <= 6; ++n) {
    for (auto const& m : oracle::all_monotone(n)) {
      ChainEndo const x = from_map(m);
      for (int a = 0; a < n; ++a) {
        ASSERT_EQ(is_nilpotent_to(x, static_cast<Point>(a)),
                  oracle::nilpotent_to(m, a));
      }
    }
  }
}

TEST(Properties, IdempotentIffImageFixed) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto const& x : all_endomorphisms(n)) {
      auto const im = image(x);
      auto const fp = fixed_points(x);
      ASSERT_EQ(is_idempotent(x), im == fp);
      ASSERT_EQ(is_idempotent(x), oracle::idempotent(to_map(x)));
    }
  }
}
