#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "orthotope/spd.hpp"

using namespace orthotope;

namespace {

SignedSpd P(const char* s) { return parse_expr(s); }
Spd S(const char* s) { return parse_expr(s).shape(); }

SignedSpd random_signs(const Spd& shape, std::mt19937& rng) {
  std::map<Axis, int> signs;
  for (Axis a : shape.edges()) signs[a] = rng() % 2 ? 1 : -1;
  return SignedSpd(shape, signs);
}

// Shape with labels permuted by `perm` (perm[i-1] is the new label of i).
Spd relabel(const Spd& s, const std::vector<Axis>& perm) {
  if (s.is_leaf()) return Spd::leaf(perm[s.axis() - 1]);
  std::vector<Spd> parts;
  for (const Spd& c : s.children()) parts.push_back(relabel(c, perm));
  return Spd::join(s.kind(), std::move(parts));
}

}  // namespace

TEST_CASE("parse builds normal forms") {
  const SignedSpd chain = P("1&2&3&4");
  CHECK(chain.shape().kind() == Spd::Kind::Series);
  CHECK(chain.shape().children().size() == 4);
  CHECK(chain.sign_product() == 1);

  const SignedSpd nested = P("((1|2)&3)|4");
  REQUIRE(nested.shape().kind() == Spd::Kind::Parallel);
  CHECK(format_expr(nested) == "((1|2)&3)|4");

  const SignedSpd negated = P("~1 & 2");
  CHECK(negated.sign(1) == -1);
  CHECK(negated.sign(2) == 1);
  CHECK(negated.shape().kind() == Spd::Kind::Series);

  // associativity and commutativity are absorbed
  CHECK(P("(1&2)&3") == P("3&(2&1)"));
  CHECK(P("1|(2|3)") == P("(3|1)|2"));
  // whitespace is ignored
  CHECK(P(" ( 1 | 2 ) & ~ 3 ") == P("(1|2)&~3"));
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(parse_expr(""), ParseError);
  CHECK_THROWS_AS(parse_expr("   "), ParseError);
  CHECK_THROWS_AS(parse_expr("1&1"), SpdError);
  CHECK_THROWS_AS(parse_expr("(1|2"), ParseError);
  CHECK_THROWS_AS(parse_expr("1&&2"), ParseError);
  CHECK_THROWS_AS(parse_expr("0"), SpdError);
  CHECK_THROWS_AS(parse_expr("1 2"), ParseError);
  try {
    parse_expr("1&(2|)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("format prints minimal parentheses") {
  CHECK(format_expr(P("2&1")) == "1&2");
  CHECK(format_expr(P("3|(1&2)")) == "(1&2)|3");
  CHECK(format_expr(P("~3")) == "~3");
}

TEST_CASE("dual swaps connections and signs") {
  CHECK(dual(P("1")) == P("~1"));
  CHECK(dual(P("1&2")) == P("~1|~2"));
  CHECK(dual(P("(1|2)&3&4")) == P("(~1&~2)|~3|~4"));
  CHECK(P("~(1&2)") == P("~1|~2"));
  const SignedSpd x = P("((~1|2)&3)|~4");
  CHECK(dual(dual(x)) == x);
}

TEST_CASE("bouquet rank and sign") {
  CHECK(bouquet(S("1")) == Bouquet{0, 1});
  CHECK(bouquet(S("1|2|3|4")) == Bouquet{3, -1});
  const Spd big = S("(((((1|2)&3)|4)&5)|6)&(7|8)");
  CHECK(bouquet(big).rank == oracle::rank_by_graph(big));
  CHECK(bouquet(big) == Bouquet{4, 1});
  CHECK(bouquet(Trivial{}) == Bouquet{0, 1});
}

TEST_CASE("vertex counts follow the connection rules") {
  CHECK(S("1").vertex_count() == 2);
  CHECK(S("1&2").vertex_count() == 3);
  CHECK(S("1|2").vertex_count() == 2);
  for (int d = 1; d <= 6; ++d)
    for (const Spd& s : enumerate_shapes(d)) CHECK(s.vertex_count() == oracle::graph_of(s).vertices);
}

TEST_CASE("mu values") {
  CHECK(mu(S("1&2")) == 1);
  CHECK(mu(S("(1|2)&(3|4)")) == 9);
  CHECK(mu(S("((1|2)&3)|4")) == 11);
  CHECK(mu(S("1|2|3")) == 7);
}

TEST_CASE("tau values") {
  CHECK(tau(P("1|2|3|4")) == -1);
  CHECK(tau(P("~1&~2")) == 1);
  const SignedSpd x = P("(~1|2)&3");
  CHECK(tau(dual(x)) == -tau(x));
}

TEST_CASE("edge kinds") {
  CHECK(edge_kind(S("(1&2)|3"), 3) == EdgeKind::Disjunctive);
  CHECK(edge_kind(S("(1&2)|3"), 1) == EdgeKind::Conjunctive);
  CHECK(edge_kind(S("1"), 1) == EdgeKind::Conjunctive);
  CHECK_THROWS_AS(edge_kind(S("1&2"), 3), SpdError);
}

TEST_CASE("edge deletion") {
  CHECK(delete_edge(S("(1|2)&3"), 3) == S("1|2"));
  CHECK(delete_edge(S("(1|2)&3"), 1) == S("2&3"));
  CHECK(delete_edge(S("(((((1|2)&3)|4)&5)|6)&(7|8)"), 6) == S("((((1|2)&3)|4)&5)&(7|8)"));
  CHECK_THROWS_AS(delete_edge(S("1"), 1), SpdError);
  CHECK_THROWS_AS(delete_edge(S("1&2"), 4), SpdError);
  CHECK(std::holds_alternative<Trivial>(delete_edge_or_trivial(S("1"), 1)));
}

TEST_CASE("residual diagrams") {
  CHECK(std::holds_alternative<Empty>(residual_diagram(S("1&2"), 1)));
  CHECK(std::holds_alternative<Full>(residual_diagram(S("1|2"), 1)));
  const Substitution r = residual_diagram(S("((1&2)|3)&4"), 1);
  REQUIRE(std::holds_alternative<Spd>(r));
  CHECK(std::get<Spd>(r) == S("3&4"));
  CHECK(std::holds_alternative<Empty>(residual_diagram(S("1"), 1)));
}

TEST_CASE("canonical keys identify shapes") {
  CHECK(canonical_key(S("(1&2)|3")) == canonical_key(S("3|(2&1)")));
  CHECK(canonical_key(S("1&2")) != canonical_key(S("1|2")));
  CHECK(canonical_key(S("(5&9)|2")) == canonical_key(S("(1&2)|3")));
  CHECK(canonical_key(S("(1&2)|3")).text == "(1&2)|3");
  std::set<CanonicalKey> keys;
  for (const Spd& s : enumerate_shapes(5)) keys.insert(canonical_key(s));
  CHECK(keys.size() == 24);

  // relabeling never changes the key
  std::mt19937 rng(11);
  for (const Spd& s : enumerate_shapes(6)) {
    std::vector<Axis> perm{1, 2, 3, 4, 5, 6};
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_key(relabel(s, perm)) == canonical_key(s));
  }
}

TEST_CASE("shape enumeration") {
  const std::vector<std::size_t> expected{1, 2, 4, 10, 24, 66, 180, 522};
  for (int d = 1; d <= 8; ++d) CHECK(enumerate_shapes(d).size() == expected[d - 1]);
  CHECK_THROWS(enumerate_shapes(0));
  CHECK_THROWS(enumerate_shapes(13));
  CHECK_THROWS(enumerate_shapes(5, 4));
  const auto four = enumerate_shapes(4);
  CHECK(std::is_sorted(four.begin(), four.end(),
                       [](const Spd& a, const Spd& b) { return canonical_key(a) < canonical_key(b); }));
}

TEST_CASE("duality identities over all shapes") {
  for (int d = 1; d <= 8; ++d) {
    for (const Spd& s : enumerate_shapes(d)) {
      const Spd t = dual(s);
      CHECK(bouquet(s).rank + bouquet(t).rank == d - 1);
      CHECK(bouquet(s).sign * bouquet(t).sign == (d % 2 == 1 ? 1 : -1));
      CHECK(mu(s) + mu(t) == (std::uint64_t{1} << d));
      CHECK(mu(s) % 2 == 1);
      CHECK(mu(t) % 2 == 1);
    }
  }
}

TEST_CASE("tau is the sign product times the bouquet sign") {
  for (int d = 1; d <= 6; ++d)
    for (const Spd& s : enumerate_shapes(d))
      for (const SignedSpd& x : oracle::all_signings(s)) {
        CHECK(tau(x) == x.sign_product() * bouquet(s).sign);
      }
}

TEST_CASE("mu counts satisfied orthants of the truth table") {
  for (int d = 1; d <= 6; ++d)
    for (const Spd& s : enumerate_shapes(d)) {
      const std::uint64_t table = oracle::truth_table(SignedSpd(s), d);
      CHECK(static_cast<std::uint64_t>(__builtin_popcountll(table)) == mu(s));
    }
}

TEST_CASE("format and parse round trip") {
  std::mt19937 rng(3);
  for (int d = 1; d <= 6; ++d)
    for (const Spd& s : enumerate_shapes(d)) {
      const SignedSpd x = random_signs(s, rng);
      CHECK(parse_expr(format_expr(x)) == x);
    }
}

TEST_CASE("bouquet sign product rules") {
  std::mt19937 rng(5);
  const auto pool3 = enumerate_shapes(3), pool4 = enumerate_shapes(4);
  for (int trial = 0; trial < 200; ++trial) {
    const Spd a = pool3[rng() % pool3.size()];
    // shift the second diagram onto edges 4..7
    const Spd b = relabel(pool4[rng() % pool4.size()], {4, 5, 6, 7});
    const int sa = bouquet(a).sign, sb = bouquet(b).sign;
    CHECK(bouquet(Spd::series({a, b})).sign == sa * sb);
    CHECK(bouquet(Spd::parallel({a, b})).sign == -sa * sb);
  }
}

TEST_CASE("join rejects shared edges") {
  CHECK_THROWS_AS(Spd::series({Spd::leaf(1), Spd::leaf(1)}), SpdError);
  CHECK_THROWS_AS(SignedSpd(Spd::leaf(1), {{2, 1}}), SpdError);
  CHECK_THROWS_AS(SignedSpd(Spd::leaf(1), {{1, 0}}), SpdError);
}
