#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include <endochain/cli.hpp>

#include "oracles.hpp"

using namespace endochain;

namespace {

  struct Outcome {
    int         code;
    std::string out;
    std::string err;
  };

  Outcome run(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int const          code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::vector<std::string> lines(std::string const& s) {
    std::vector<std::string> v;
    std::istringstream       in(s);
    for (std::string l; std::getline(in, l);) {
      v.push_back(l);
    }
    return v;
  }

  std::string golden(std::string const& name) {
    std::ifstream      in(std::string(ENDOCHAIN_GOLDEN_DIR) + "/" + name, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  // "1_2 2 3" read independently of the library parser.
  oracle::Map read_compact(std::string const& text) {
    oracle::Map        m;
    std::istringstream in(text);
    for (std::string tok; in >> tok;) {
      auto const u = tok.find('_');
      int const  v = std::stoi(tok.substr(0, u));
      int const  k = u == std::string::npos ? 1 : std::stoi(tok.substr(u + 1));
      m.insert(m.end(), static_cast<std::size_t>(k), v);
    }
    return m;
  }

  // Every "x * y = z" or "x + y = z" inside a witness must be arithmetic fact.
  std::size_t recheck_products(std::string const& witness) {
    std::regex const  eq("((?:[0-9]+(?:_[0-9]+)? ?)+) ([*+]) ((?:[0-9]+(?:_[0-9]+)? ?)+) = "
                        "((?:[0-9]+(?:_[0-9]+)?(?: (?=[0-9]))?)+)");
    std::size_t found = 0;
    for (std::sregex_iterator it(witness.begin(), witness.end(), eq), end; it != end; ++it) {
      oracle::Map const x = read_compact((*it)[1]), y = read_compact((*it)[3]),
                        z = read_compact((*it)[4]);
      EXPECT_EQ(x.size(), y.size()) << witness;
      EXPECT_EQ((*it)[2] == "*" ? oracle::mul(x, y) : oracle::add(x, y), z) << witness;
      ++found;
    }
    return found;
  }

}  // namespace

TEST(Elements, TriangleListsFifteenSortedLines) {
  Outcome const r = run({"elements", "tri n=4 a=1 b=2 c=3"});
  ASSERT_EQ(r.code, 0);
  auto const ls = lines(r.out);
  ASSERT_EQ(ls.size(), 15u);
  std::vector<oracle::Map> maps;
  for (auto const& l : ls) {
    maps.push_back(read_compact(l));
  }
  EXPECT_TRUE(std::is_sorted(maps.begin(), maps.end()));
  auto want = oracle::simplex(4, {1, 2, 3});
  std::sort(want.begin(), want.end());
  EXPECT_EQ(maps, want);
}

TEST(Elements, JsonRoundTripsByteForByte) {
  for (std::string spec : {"n=6 A=1,3,4", "str n=4 a=1 b=2", "tri n=5 a=0 b=2 c=4", "n=3 A=0,1,2",
                           "n=5 A=2"}) {
    Outcome const r = run({"elements", spec, "--json"});
    ASSERT_EQ(r.code, 0);
    ElementSet const parsed = parse_element_set(r.out);
    EXPECT_EQ(dump(element_set_json(parsed.spec, parsed.elements)), r.out) << spec;
    auto const j = nlohmann::json::parse(r.out);
    std::set<int> verts;
    for (auto const& v : j.at("A")) {
      verts.insert(v.get<int>());
    }
    EXPECT_EQ(j.at("elements").size(), oracle::simplex(j.at("n").get<int>(), verts).size());
  }
}

TEST(Elements, MalformedJsonIsAParseError) {
  EXPECT_THROW(parse_element_set("{\"n\":3}"), Error);
  EXPECT_THROW(parse_element_set("[1,"), Error);
  EXPECT_THROW(parse_element_set(R"({"n":3,"A":[0,2],"elements":[[2,1,0]]})"), Error);
}

TEST(Table, ProductsMatchComposition) {
  for (std::string op : {"add", "mul"}) {
    Outcome const r = run({"table", "tri n=4 a=0 b=2 c=3", "--op", op, "--json"});
    ASSERT_EQ(r.code, 0);
    auto const                j = nlohmann::json::parse(r.out);
    std::vector<oracle::Map>  el;
    for (auto const& e : j.at("elements")) {
      el.push_back(e.get<oracle::Map>());
    }
    auto const& t = j.at("table");
    ASSERT_EQ(t.size(), el.size());
    for (std::size_t i = 0; i < el.size(); ++i) {
      for (std::size_t k = 0; k < el.size(); ++k) {
        oracle::Map const want = op == "mul" ? oracle::mul(el[i], el[k]) : oracle::add(el[i], el[k]);
        ASSERT_EQ(el[t[i][k].get<std::size_t>()], want);
      }
    }
  }
}

TEST(Table, HumanFormHasSquareGrid) {
  Outcome const  r  = run({"table", "str n=3 a=0 b=2"});
  auto const ls = lines(r.out);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(ls.front(), "str n=3 a=0 b=2 mul");
  EXPECT_EQ(ls.back(), "3 | 0 3 3 3");
}

TEST(Classify, IdempotentsAgreeWithOracle) {
  Outcome const r = run({"classify", "n=5 A=0,2,4", "--json"});
  ASSERT_EQ(r.code, 0);
  auto const j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.at("subsemiring").at("holds").get<bool>());
  for (auto const& e : j.at("elements")) {
    auto const x = e.at("element").get<oracle::Map>();
    EXPECT_EQ(e.at("class") == "idempotent", oracle::idempotent(x));
    if (e.at("class") == "nilpotent") {
      EXPECT_TRUE(oracle::nilpotent_to(x, e.at("vertex").get<int>()));
    }
  }
}

TEST(Classify, StringPartsAreLabelled) {
  Outcome const r = run({"classify", "str n=4 a=1 b=2", "--json"});
  std::map<std::string, int> parts;
  auto const                 j = nlohmann::json::parse(r.out);
  for (auto const& e : j.at("elements")) {
    ++parts[e.at("part").get<std::string>()];
  }
  // Orders n - b, b - a, a + 1.
  EXPECT_EQ(parts, (std::map<std::string, int>{{"nil_a", 2}, {"id", 1}, {"nil_b", 2}}));
}

TEST(Decompose, FifthFigureJson) {
  Outcome const r = run({"decompose", "tri n=6 a=1 b=3 c=4", "--json"});
  ASSERT_EQ(r.code, 0);
  auto const j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.at("disjoint").get<bool>());
  EXPECT_TRUE(j.at("cover").get<bool>());
  std::map<std::string, std::size_t> const want{{"nil_a", 5}, {"nil_b", 4}, {"nil_c", 7},
                                                {"l_par", 4}, {"r_par", 2}, {"l_tri", 1},
                                                {"r_tri", 3}, {"ri", 2}};
  std::size_t total = 0;
  for (auto const& [name, count] : want) {
    auto const& g = j.at("regions").at(name);
    EXPECT_EQ(g.at("count").get<std::size_t>(), count) << name;
    EXPECT_EQ(g.at("formula").get<std::size_t>(), count) << name;
    EXPECT_EQ(g.at("elements").size(), count) << name;
    EXPECT_TRUE(g.at("closed").get<bool>()) << name;
    total += count;
  }
  EXPECT_EQ(total, 28u);
}

TEST(Decompose, RejectsNonTriangles) {
  EXPECT_EQ(run({"decompose", "str n=4 a=1 b=2"}).code, 2);
}

TEST(Check, EmptyRangeExitsCleanly) {
  Outcome const r = run({"check", "string-noniso", "--n-max", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out), (std::vector<std::string>{"0 results, 0 violations, 0 stated-form failures"}));
}

TEST(Check, OneResultPerTriangle) {
  Outcome const r = run({"check", "eight-region-partition", "--n-max", "6"});
  EXPECT_EQ(r.code, 0);
  auto const  ls    = lines(r.out);
  std::size_t tuples = 0;
  for (int n = 3; n <= 6; ++n) {
    tuples += oracle::binomial(n, 3);
  }
  ASSERT_EQ(ls.size(), tuples + 1);
  EXPECT_EQ(ls[0], "eight-region-partition  tri n=3 a=0 b=1 c=2  holds");
  EXPECT_EQ(ls[tuples - 1], "eight-region-partition  tri n=6 a=3 b=4 c=5  holds");
}

TEST(Check, UnknownClaimIsUsageError) {
  Outcome const r = run({"check", "no-such-claim"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("no-such-claim"), std::string::npos);
}

TEST(Check, ListCoversRegistryWithUniqueIds) {
  Outcome const r = run({"check", "--list", "--json"});
  ASSERT_EQ(r.code, 0);
  auto const            j = nlohmann::json::parse(r.out);
  std::set<std::string> ids;
  for (auto const& c : j) {
    ids.insert(c.at("id").get<std::string>());
    EXPECT_LE(c.at("n_min").get<int>(), c.at("n_cap").get<int>());
  }
  EXPECT_EQ(ids.size(), claim_registry().size());
  for (std::string id : {"thm5-dn-fixpoints", "string-noniso", "eight-region-partition", "it-ideals",
                         "left-similar-exists", "catalan-count"}) {
    EXPECT_EQ(ids.count(id), 1u) << id;
  }
}

TEST(Check, OutputIndependentOfJobs) {
  Outcome const one = run({"check", "all", "--n-max", "5", "--jobs", "1"});
  Outcome const many = run({"check", "all", "--n-max", "5", "--jobs", "3"});
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, many.out);
}

TEST(Check, FailuresCarryRecheckableWitnesses) {
  Outcome const r = run({"check", "all", "--n-max", "5", "--json"});
  ASSERT_EQ(r.code, 0);
  auto const  j          = nlohmann::json::parse(r.out);
  std::size_t rechecked  = 0;
  std::size_t stated_bad = 0;
  for (auto const& res : j.at("results")) {
    bool const holds = res.at("holds").get<bool>();
    if (!holds) {
      ++stated_bad;
      ASSERT_TRUE(res.at("witness").is_string()) << res.dump();
      rechecked += recheck_products(res.at("witness").get<std::string>());
      EXPECT_NE(res.at("kind"), "statement") << res.dump();
    }
    EXPECT_TRUE(res.at("passed").get<bool>()) << res.dump();
  }
  EXPECT_GT(stated_bad, 0u);
  EXPECT_GT(rechecked, 0u);
}

TEST(Check, StatedRightIdentityOrderFailsEverywhere) {
  Outcome const r = run({"check", "ri-order-as-stated", "--n-max", "6", "--json"});
  ASSERT_EQ(r.code, 0);
  auto const j = nlohmann::json::parse(r.out);
  for (auto const& res : j.at("results")) {
    auto const p = res.at("params").get<std::vector<int>>();
    int const  n = p[0], a = p[1], b = p[2], c = p[3];
    std::size_t ri = 0;
    for (auto const& x : oracle::simplex(n, {a, b, c})) {
      ri += x[a] == a && x[b] == b && x[c] == c ? 1 : 0;
    }
    EXPECT_EQ(ri, static_cast<std::size_t>((b - a) * (c - b)));
    EXPECT_FALSE(res.at("holds").get<bool>());
    EXPECT_TRUE(res.at("corrected").get<bool>());
  }
}

TEST(Check, MiddleVertexFindingOnOneTwoThree) {
  // DN^2 of the middle vertex of {1,2,3} over C_4, rebuilt from scratch.
  auto const  all = oracle::simplex(4, {1, 2, 3});
  std::vector<oracle::Map> dn;
  for (auto const& x : all) {
    if (oracle::count(x, 2) >= 2) {
      dn.push_back(x);
    }
  }
  EXPECT_FALSE(oracle::closed(dn));
  Outcome const r = run({"check", "dn-middle-radius", "--n-max", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("dn-middle-radius  n=4 A=1,2,3  observed to fail"), std::string::npos);
}

TEST(Counts, AuditPassesAndRejectsLargeN) {
  Outcome const r = run({"counts", "--n-max", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("disagree (expected)"), std::string::npos);
  EXPECT_EQ(r.out.find("DISAGREE"), std::string::npos);
  EXPECT_EQ(run({"counts", "--n-max", "11"}).code, 2);
}

TEST(Render, MatchesGoldensAndIsStable) {
  Outcome const a = run({"render", "tri n=4 a=1 b=2 c=3"});
  EXPECT_EQ(a.out, golden("fig1_ascii.txt"));
  Outcome const b = run({"render", "tri n=6 a=1 b=3 c=4", "--mode", "svg", "--color-by", "region"});
  EXPECT_EQ(b.out, golden("fig5_region.svg"));
  EXPECT_EQ(b.out, run({"render", "tri n=6 a=1 b=3 c=4", "--mode", "svg", "--color-by", "region"}).out);
  Outcome const big = run({"render", "tri n=31 a=0 b=1 c=2"});
  EXPECT_EQ(big.code, 0);
  EXPECT_NE(big.err.find("warning"), std::string::npos);
}

TEST(Iso, DistinctStringsAreNotIsomorphic) {
  EXPECT_EQ(run({"iso", "str n=4 a=1 b=2", "str n=4 a=0 b=3"}).code, 1);
  Outcome const same = run({"iso", "str n=4 a=1 b=2", "n=4 A=1,2", "--json"});
  EXPECT_EQ(same.code, 0);
  EXPECT_EQ(nlohmann::json::parse(same.out).at("mapping").size(), 5u);
  Outcome const sizes = run({"iso", "str n=4 a=1 b=2", "str n=5 a=1 b=2"});
  EXPECT_EQ(sizes.code, 1);
}

TEST(Usage, BadInputsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"elements"}).code, 2);
  EXPECT_EQ(run({"elements", "n=4 A=3,1"}).code, 2);
  EXPECT_EQ(run({"elements", "tri n=4 a=1 b=2"}).code, 2);
  EXPECT_EQ(run({"table", "n=3 A=0", "--op", "div"}).code, 2);
  EXPECT_EQ(run({"render", "tri n=4 a=1 b=2 c=3", "--mode", "png"}).code, 2);
  EXPECT_EQ(run({"check", "all", "--jobs", "0"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
