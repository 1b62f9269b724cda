#include <doctest.h>

#include <set>

#include "spincone/linalg.hpp"
#include "spincone/relations.hpp"

using namespace spincone;

namespace {

Interval iv(const char* text) { return *parse_interval(text); }

Vertex V(const char* text) { return *parse_vertex(text); }

}  // namespace

TEST_CASE("ten cone relations, one clutter each") {
  auto rels = cone_relations();
  CHECK(rels.size() == 10);
  for (const auto& r : rels) {
    CHECK(r.is_homogeneous());
    auto cl = r.unique_clutter();
    REQUIRE(cl.has_value());
    // the clutter monomial appears with coefficient +-1
    mpq_class c = r.terms.at(*cl);
    CHECK((c == 1 || c == -1));
  }
  // the Pfaffian relation for s = (5) contains the (14)(23) clutter
  auto cl5 = rels[4].unique_clutter();
  REQUIRE(cl5.has_value());
  CHECK(cl5->a == V("(14)^0"));
  CHECK(cl5->b == V("(23)^0"));
}

TEST_CASE("loop relation counts") {
  CHECK(loop_relations(iv("[(0)^0:(1)^0]")).size() == 10);
  CHECK(loop_relations(iv("[(0)^0:(1)^1]")).size() == 30);
  CHECK(loop_relations(iv("[(0)^-1:(1)^1]")).size() == 50);
}

TEST_CASE("every loop relation of A_{-1}^{1} has a unique clutter and is homogeneous") {
  auto rels = loop_relations(iv("[(0)^-1:(1)^1]"));
  for (const auto& r : rels) {
    CHECK(r.is_homogeneous());
    CHECK(r.unique_clutter().has_value());
    // half-integer spin weights doubled stay integral and even in pairs
    Weight w = r.weight();
    CHECK(w.a == 2);
    for (int z : w.z) CHECK(z % 2 == 0);
  }
}

TEST_CASE("standard monomial counts") {
  CHECK(standard_monomial_count(iv("[(0)^0:(1)^0]"), 1) == 16);
  CHECK(standard_monomial_count(iv("[(0)^0:(1)^0]"), 2) == 126);
  CHECK(standard_monomial_count(iv("((0)^0:(1)^0]"), 1) == 15);
  CHECK(standard_monomial_count(iv("[(0)^0:(1)^0]"), 0) == 1);
  CHECK(standard_monomials(iv("[(0)^0:(1)^0]"), 2).size() == 126);
}

TEST_CASE("straightening of the basic clutter") {
  StraighteningTable st(iv("[(0)^0:(1)^0]"));
  CHECK(st.clutters().size() == 10);
  QuadricRelation r = st.relation(VertexPair(V("(14)^0"), V("(23)^0")));
  // w14 w23 = w13 w24 - w12 w34 + lambda p5 (up to the frozen global sign)
  REQUIRE(r.terms.size() == 4);
  mpq_class c_cl = r.terms.at(VertexPair(V("(14)^0"), V("(23)^0")));
  CHECK(c_cl == 1);
  mpq_class c_mj = r.terms.at(VertexPair(V("(13)^0"), V("(24)^0")));
  mpq_class c_12 = r.terms.at(VertexPair(V("(12)^0"), V("(34)^0")));
  mpq_class c_l5 = r.terms.at(VertexPair(V("(0)^0"), V("(5)^0")));
  CHECK(c_mj == -1);
  CHECK(c_12 == 1);
  CHECK(c_l5 == -1);
}

TEST_CASE("straightening shape: one meet-join term, tails nested") {
  for (const char* s : {"[(0)^0:(1)^0]", "[(0)^-1:(1)^0]", "[(35)^-1:(24)^0]"}) {
    Interval i = iv(s);
    StraighteningTable st(i);
    CHECK(st.clutters() == clutter_pairs(i));
    for (const VertexPair& cl : st.clutters()) {
      Vertex m = meet(cl.a, cl.b), j = join(cl.a, cl.b);
      QuadricRelation r = st.relation(cl);
      CHECK(r.is_homogeneous());
      int meet_join_terms = 0;
      for (const auto& [p, c] : r.terms) {
        if (p == cl) continue;
        if (p == VertexPair(m, j)) {
          ++meet_join_terms;
          CHECK((c == 1 || c == -1));
          continue;
        }
        // remaining terms: g < meet, d > join, with positive h-exponent
        CHECK(leq(p.a, m));
        CHECK(!(p.a == m));
        CHECK(leq(j, p.b));
        CHECK(!(p.b == j));
        CHECK(h_exponent(p, cl) > 0);
      }
      CHECK(meet_join_terms == 1);
      CHECK(h_exponent(VertexPair(m, j), cl) == 0);
    }
  }
}

TEST_CASE("hibi contraction") {
  StraighteningTable st(iv("[(0)^0:(1)^0]"));
  VertexPair cl(V("(14)^0"), V("(23)^0"));
  QuadricRelation r = hibi_contract(st.relation(cl));
  CHECK(r.terms.size() == 2);
  CHECK(r.terms.count(cl) == 1);
  CHECK(r.terms.count(VertexPair(V("(13)^0"), V("(24)^0"))) == 1);
  // h-exponent of the dropped lambda p5 term
  CHECK(h_exponent(VertexPair(V("(0)^0"), V("(5)^0")), cl) == 96);
}

TEST_CASE("straightening is unique per clutter") {
  // the degree-2 span of the relations meets {clutter + standard span} in
  // exactly one line per clutter: equivalently the relation count equals the
  // clutter count and the reduced rows are distinct pivots
  Interval i = iv("[(0)^0:(1)^0]");
  auto rels = loop_relations(i);
  CHECK(rels.size() == clutter_pairs(i).size());
  StraighteningTable st(i);
  std::set<VertexPair> pivots(st.clutters().begin(), st.clutters().end());
  CHECK(pivots.size() == 10);
}

TEST_CASE("dimension agreement through degree 4 validates the sign convention") {
  // dim(P_d / ideal_d) must equal the standard monomial count; this pins the
  // relative signs of the two relation families
  Interval i = iv("[(0)^0:(1)^0]");
  auto rels = loop_relations(i);
  const auto& el = i.elements();
  int n = i.size();

  // degree-2 monomial index
  std::map<std::pair<int, int>, int> pair_idx;
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      pair_idx[{a, b}] = static_cast<int>(pairs.size());
      pairs.push_back({a, b});
    }

  const long expected[5] = {1, 16, 126, 672, 2772};

  for (int d = 2; d <= 4; ++d) {
    // monomials of degree d as sorted index tuples
    std::vector<std::vector<int>> monos;
    std::vector<int> cur;
    auto gen = [&](auto&& self, int start, int left) -> void {
      if (left == 0) {
        monos.push_back(cur);
        return;
      }
      for (int j = start; j < n; ++j) {
        cur.push_back(j);
        self(self, j, left - 1);
        cur.pop_back();
      }
    };
    gen(gen, 0, d);
    std::map<std::vector<int>, int> mono_idx;
    for (std::size_t k = 0; k < monos.size(); ++k)
      mono_idx[monos[k]] = static_cast<int>(k);

    // rows: monomial * relation for all monomials of degree d-2
    std::vector<std::vector<int>> lows;
    std::vector<int> cur2;
    auto gen2 = [&](auto&& self, int start, int left) -> void {
      if (left == 0) {
        lows.push_back(cur2);
        return;
      }
      for (int j = start; j < n; ++j) {
        cur2.push_back(j);
        self(self, j, left - 1);
        cur2.pop_back();
      }
    };
    gen2(gen2, 0, d - 2);

    DenseMatrix m(static_cast<int>(lows.size() * rels.size()),
                  static_cast<int>(monos.size()));
    int row = 0;
    for (const auto& low : lows) {
      for (const auto& rel : rels) {
        for (const auto& [p, c] : rel.terms) {
          std::vector<int> mono = low;
          mono.push_back(i.index_of(p.a));
          mono.push_back(i.index_of(p.b));
          std::sort(mono.begin(), mono.end());
          m.at(row, mono_idx.at(mono)) += c;
        }
        ++row;
      }
    }
    long rank = m.rank();
    long quotient = static_cast<long>(monos.size()) - rank;
    CHECK(quotient == expected[d]);
    CHECK(mpz_class(quotient) == standard_monomial_count(i, d));
  }
}

TEST_CASE("annihilation after straightening (L:degrel shape)") {
  // delta in M with cover delta' in M_2^-: in A(delta, beta] the two
  // elements of CL^+(delta') multiply delta' into the ideal (the
  // straightening tail vanishes once lambda^delta is killed)
  Vertex delta = V("(13)^0");  // in M
  Vertex dp = V("(23)^0");     // cover, in M_2^-
  Vertex beta = V("(1)^0");
  auto cl = cl_set(dp, -1);  // partners above
  REQUIRE(cl.size() == 2);
  Interval big(delta, beta);
  StraighteningTable st(big);
  for (Vertex g : cl) {
    if (!big.contains(g)) continue;
    QuadricRelation r = st.relation(VertexPair(g, dp));
    // all tail terms contain lambda^delta, so they die in A(delta, beta]
    for (const auto& [p, c] : r.terms) {
      if (p == VertexPair(g, dp)) continue;
      CHECK((p.a == delta || p.b == delta));
    }
  }
}
