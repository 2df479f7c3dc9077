#include <gtest/gtest.h>

#include <endochain/analysis.hpp>
#include <endochain/simplex.hpp>
#include <endochain/strings.hpp>
#include <endochain/triangle.hpp>

using namespace endochain;

namespace {

  ChainEndo E(std::string_view text, std::size_t n) {
    return parse_compact(text, n);
  }

  Subset S(std::size_t n, std::initializer_list<std::string_view> xs) {
    std::vector<ChainEndo> v;
    for (auto x : xs) {
      v.push_back(E(x, n));
    }
    return Subset(n, std::move(v));
  }

  Subset whole(StringSpec const& s) {
    return Subset(s.n, enumerate_string(s));
  }

}  // namespace

TEST(Subsemiring, InteriorOfFirstFigureTriangle) {
  SimplexSpec const t = make_simplex(4, {1, 2, 3});
  Subset const      in(4, interior(t));
  ASSERT_EQ(in, S(4, {"1_2 2 3", "1 2_2 3", "1 2 3_2"}));
  Verdict const v = is_subsemiring(in);
  ASSERT_FALSE(v);
  // The first failing pair in lexicographic order.
  EXPECT_EQ(v.witness->op, Operation::Mul);
  EXPECT_EQ(v.witness->lhs, E("1_2 2 3", 4));
  EXPECT_EQ(v.witness->rhs, E("1 2_2 3", 4));
  EXPECT_EQ(v.witness->result, E("2_3 3", 4));
  // The square of 1 2 3_2 also escapes.
  ChainEndo const x = E("1 2 3_2", 4);
  EXPECT_EQ(x * x, E("2 3_3", 4));
  EXPECT_FALSE(in.contains(x * x));
}

TEST(Subsemiring, SimplicesAndSingletons) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto const& spec : all_simplices(n)) {
      ASSERT_TRUE(is_subsemiring(simplex_set(spec))) << to_string(spec);
    }
  }
  EXPECT_TRUE(is_subsemiring(S(4, {"1_2 2 3"})));
}

TEST(Subsemiring, WitnessReallyEscapes) {
  for (std::size_t n = 3; n <= 5; ++n) {
    for (auto const& spec : all_simplices(n)) {
      Subset const in(n, interior(spec));
      if (in.empty()) {
        continue;
      }
      Verdict const v = is_subsemiring(in);
      if (!v) {
        Witness const& w = *v.witness;
        ChainEndo const r = w.op == Operation::Add ? w.lhs + w.rhs : w.lhs * w.rhs;
        ASSERT_EQ(r, w.result);
        ASSERT_FALSE(in.contains(r));
      }
    }
  }
}

TEST(Ideal, IdempotentTriangle) {
  TriangleSpec const t = make_triangle(6, 1, 3, 4);
  auto const         r = idempotent_triangle(t);
  EXPECT_TRUE(is_ideal(r.id_ac, r.it));
  EXPECT_TRUE(is_ideal(r.it_minus_ri, r.it));
  Verdict const ri = is_ideal(r.ri, r.it);
  ASSERT_FALSE(ri);
  ChainEndo const w = ri.witness->result;
  EXPECT_FALSE(r.ri.contains(w));
  EXPECT_THROW(is_ideal(r.it, r.ri), Error);
}

TEST(Triviality, StringParts) {
  StringSpec const s = make_string(5, 1, 3);
  auto const       p = partition_string(s);
  auto const       na = triviality(Subset(5, p.nil_a));
  EXPECT_TRUE(na.is_trivial);
  EXPECT_EQ(*na.iota, constant(5, 1));
  EXPECT_EQ(na.flavor(), TrivialFlavor::Lower);
  auto const nb = triviality(Subset(5, p.nil_b));
  EXPECT_TRUE(nb.is_trivial);
  EXPECT_EQ(*nb.iota, constant(5, 3));
  EXPECT_EQ(nb.flavor(), TrivialFlavor::Upper);
  EXPECT_FALSE(triviality(Subset(5, p.idem)).is_trivial);
}

TEST(Triviality, UnionOfNilBIsNeither) {
  // b-nilpotents of STR{a, b} and of STR{b, c}.
  StringSpec const ab = make_string(5, 1, 2), bc = make_string(5, 2, 3);
  Subset const     u = set_union(Subset(5, partition_string(ab).nil_b),
                             Subset(5, partition_string(bc).nil_a));
  auto const       v = triviality(u);
  EXPECT_TRUE(v.is_trivial);
  EXPECT_EQ(*v.iota, constant(5, 2));
  EXPECT_EQ(v.flavor(), TrivialFlavor::Neither);
}

TEST(Triviality, Errors) {
  EXPECT_THROW(triviality(Subset(4, {})), Error);
  try {
    triviality(Subset(4, interior(make_simplex(4, {1, 2, 3}))));
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotClosed);
  }
  auto const one = triviality(S(4, {"2_4"}));
  EXPECT_EQ(one.flavor(), TrivialFlavor::UpperAndLower);
}

TEST(Triviality, SquareIsIota) {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (auto const& v : vertex_sets(n, 2)) {
      StringSpec const s = make_string(n, v[0], v[1]);
      for (auto const& part : {partition_string(s).nil_a, partition_string(s).nil_b}) {
        auto const tv = triviality(Subset(n, part));
        ASSERT_TRUE(tv.is_trivial);
        for (auto const& x : part) {
          ASSERT_EQ(x * x, *tv.iota);
        }
        ASSERT_EQ(tv.lower, *tv.iota == *least(Subset(n, part)));
        ASSERT_EQ(tv.upper, *tv.iota == *greatest(Subset(n, part)));
      }
    }
  }
}

TEST(Identities, Examples) {
  auto const tri = identities(simplex_set(make_simplex(3, {0, 1, 2})));
  EXPECT_EQ(tri.two_sided, std::vector<ChainEndo>{identity(3)});

  auto const str = identities(whole(make_string(4, 1, 2)));
  EXPECT_EQ(str.right, std::vector<ChainEndo>{E("1_2 2_2", 4)});
  EXPECT_TRUE(str.left.empty());

  auto const t6 = identities(triangle_set(make_triangle(6, 1, 3, 4)));
  EXPECT_EQ(t6.right.size(), 2u);
  EXPECT_TRUE(t6.left.empty());
}

TEST(Similarity, Examples) {
  Subset const t = triangle_set(make_triangle(4, 1, 2, 3));
  auto const   left = similar_pairs(t, Side::Left);
  auto const   has  = [&](std::string_view x, std::string_view y) {
    auto p = std::pair{E(x, 4), E(y, 4)};
    if (p.second < p.first) {
      std::swap(p.first, p.second);
    }
    return std::find(left.begin(), left.end(), p) != left.end();
  };
  EXPECT_TRUE(has("1 2_3", "2_4"));
  EXPECT_TRUE(has("1 3_3", "2 3_3"));
  EXPECT_TRUE(has("2 3_3", "3_4"));
  EXPECT_TRUE(similar_pairs(t, Side::Right).empty());
  EXPECT_TRUE(similar_pairs(S(4, {"1_4"}), Side::Left).empty());
}

TEST(Similarity, RightIdentityKillsRightPairs) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (auto const& spec : all_simplices(n)) {
      Subset const s = simplex_set(spec);
      if (!identities(s).right.empty()) {
        ASSERT_TRUE(similar_pairs(s, Side::Right).empty()) << to_string(spec);
      }
    }
  }
}

TEST(Classify, Examples) {
  auto const c0 = classify_element(constant(4, 2));
  EXPECT_EQ(c0.kind, ElementClass::Idempotent);

  auto const c1 = classify_element(E("1_3 2", 4), whole(make_string(4, 1, 2)));
  EXPECT_EQ(c1.kind, ElementClass::NilpotentTo);
  EXPECT_EQ(*c1.vertex, 1);
  EXPECT_EQ(c1.exponent, 2u);

  auto const c2 = classify_element(E("1 2_2 3", 4));
  EXPECT_EQ(c2.kind, ElementClass::RootOfIdempotent);
  EXPECT_EQ(c2.idempotent, E("2_3 3", 4));
  EXPECT_EQ(c2.exponent, 2u);

  EXPECT_THROW(classify_element(E("0_4", 4), whole(make_string(4, 1, 2))), Error);
}

TEST(Iso, Examples) {
  TriangleSpec const t = make_triangle(4, 1, 2, 3);
  Subset const       layer(4, basic_layer(t, BasicVertex::A, 2).elements());
  Subset const       target = whole(make_string(2, 0, 1));
  EXPECT_TRUE(iso_check(layer, target).isomorphic);
  EXPECT_FALSE(iso_check(whole(make_string(4, 1, 2)), whole(make_string(4, 1, 3)))
                   .isomorphic);
  Subset const tri = triangle_set(t);
  auto const   self = iso_check(tri, tri);
  ASSERT_TRUE(self.isomorphic);
  EXPECT_THROW(iso_check(Subset(4, interior(as_simplex(t))), tri), Error);
  EXPECT_FALSE(iso_check(whole(make_string(4, 1, 2)), whole(make_string(5, 1, 2)))
                   .isomorphic);
}

TEST(Iso, EquivalenceOnLayerFamilies) {
  // Layers and strings that should all be isomorphic to each other.
  for (std::size_t n = 4; n <= 6; ++n) {
    for (auto const& t : all_triangles(n)) {
      for (BasicVertex v : {BasicVertex::A, BasicVertex::C}) {
        auto [lo, hi] = basic_range(t, v);
        for (std::size_t k = lo; k <= hi; ++k) {
          Subset const layer(n, basic_layer(t, v, k).elements());
          StringSpec const target = layer_target(t, v, k);
          Subset const     str    = whole(target);
          auto const       fwd    = iso_check(layer, str);
          auto const       back   = iso_check(str, layer);
          ASSERT_TRUE(fwd.isomorphic) << to_string(t);
          ASSERT_TRUE(back.isomorphic);
          ASSERT_TRUE(iso_check(layer, layer).isomorphic);
          for (auto const& [x, y] : fwd.mapping) {
            auto it = std::find_if(back.mapping.begin(), back.mapping.end(),
                                   [&](auto const& p) { return p.first == y; });
            ASSERT_NE(it, back.mapping.end());
            ASSERT_EQ(it->second, x);
          }
        }
      }
    }
  }
}

TEST(Iso, NonChainBacktracking) {
  Subset const x = triangle_set(make_triangle(4, 0, 1, 2));
  Subset const y = triangle_set(make_triangle(4, 1, 2, 3));
  EXPECT_FALSE(iso_check(x, y).isomorphic);
  auto const self = iso_check(x, x);
  ASSERT_TRUE(self.isomorphic);
  EXPECT_EQ(self.mapping.size(), x.size());
}
