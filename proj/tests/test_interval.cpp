#include <doctest.h>

#include <set>

#include "spincone/character.hpp"
#include "spincone/interval.hpp"

using namespace spincone;

namespace {

Interval iv(const char* text) {
  auto r = parse_interval(text);
  REQUIRE(r.has_value());
  return *r;
}

}  // namespace

TEST_CASE("interval construction and element sets") {
  Interval a00 = iv("[(0)^0:(1)^0]");
  CHECK(a00.size() == 16);
  CHECK(a00.rank() == 10);

  Interval chain = iv("[(0)^0:(13)^0]");
  CHECK(chain.size() == 3);
  CHECK(chain.elements()[0] == Vertex{Label::L0, 0});
  CHECK(chain.elements()[1] == Vertex{Label::L12, 0});
  CHECK(chain.elements()[2] == Vertex{Label::L13, 0});

  Interval open = iv("((0)^0:(12)^0]");
  CHECK(open.size() == 1);
  CHECK(open.elements()[0] == Vertex{Label::L12, 0});

  CHECK_THROWS_AS(Interval(Vertex{Label::L14, 0}, Vertex{Label::L23, 0}),
                  NotComparable);

  Interval b01 = iv("[(0)^0:(0)^1]");
  CHECK(b01.size() == 12);  // matches [t^1](1+3t+t^2)/((1-t)^8(1-qt))
}

TEST_CASE("interval text round-trip") {
  for (const char* s : {"[(0)^-1:(1)^2]", "((45)^-1:(1)^0]", "[(13)^0:(25)^0)",
                        "((35)^-1:(24)^0)"}) {
    Interval i = iv(s);
    CHECK(i.to_string() == s);
  }
  CHECK(!parse_interval("[(0)^0:(14)^5").has_value());
  CHECK(!parse_interval("[(23)^0:(14)^0]").has_value());  // incomparable
}

TEST_CASE("core and capacity") {
  Interval a00 = iv("[(0)^0:(1)^0]");
  CHECK(capacity(a00) == 5);  // five doubled levels rho = 3..7
  CHECK(core(a00).size() == 10);

  CHECK(capacity(iv("[(0)^0:(13)^0]")) == 0);
  CHECK(core(iv("[(0)^0:(13)^0]")).empty());

  CHECK(capacity(iv("[(5)^-1:(24)^0]")) == 3);
  CHECK(capacity(iv("[(13)^0:(24)^0]")) == 1);  // diamond
  CHECK(capacity(iv("[(13)^0:(25)^0]")) == 2);
}

TEST_CASE("gorenstein classifier") {
  // the standard family is Gorenstein for all N < N'
  for (int n = -2; n <= 0; ++n)
    for (int np = n; np <= 2; ++np)
      CHECK(is_gorenstein(Interval(Vertex{Label::L0, n}, Vertex{Label::L1, np})));
  // (45)^r lies in M_2^+ and spoils the left end
  CHECK(!is_gorenstein(iv("[(45)^-1:(1)^0]")));
  CHECK(is_gorenstein(iv("[(0)^0:(13)^0]")));    // capacity 0
  CHECK(is_gorenstein(iv("[(13)^0:(24)^0]")));   // capacity 1, diamond
  CHECK(!is_gorenstein(iv("[(13)^0:(25)^0]")));  // capacity 2
  CHECK(is_gorenstein(iv("[(35)^-1:(24)^0]")));  // capacity >= 3, good ends
  CHECK(!is_gorenstein(iv("[(35)^-1:(23)^0]")));  // upper end in M_2^-
}

TEST_CASE("join irreducibles, purity, Birkhoff reconstruction") {
  for (const char* s :
       {"[(0)^0:(1)^0]", "[(0)^0:(0)^1]", "[(45)^-1:(1)^0]", "[(13)^0:(25)^0]",
        "[(35)^-1:(24)^0]", "[(0)^0:(13)^0]", "[(5)^-1:(24)^0]"}) {
    Interval i = iv(s);
    IrreduciblePoset p = join_irreducibles(i);
    // rank many irreducibles in a graded distributive lattice
    CHECK(static_cast<int>(p.vertices.size()) == i.rank());
    CHECK(count_order_ideals(p) == i.size());
    CHECK(is_pure(p) == is_gorenstein(i));
  }
}

TEST_CASE("reg and alt") {
  Interval chain = iv("[(0)^0:(13)^0]");
  RegAlt ra = reg_alt(chain.elements());
  CHECK(ra.reg_size() == 3);
  CHECK(ra.alt_size() == 0);

  Interval a00 = iv("[(0)^0:(1)^0]");
  RegAlt ra2 = reg_alt(a00.elements());
  CHECK(ra2.reg_size() == 11);  // one per rho level 0..10
  CHECK(ra2.alt_size() == 5);

  // |Reg[delta,(1)^{-1}]| = 3 - rho(delta) = s'(a)
  for (Vertex d : {Vertex{Label::L0, -1}, Vertex{Label::L35, -1},
                   Vertex{Label::L25, -1}}) {
    Interval seg(d, Vertex{Label::L1, -1});
    CHECK(reg_alt(seg.elements()).reg_size() == 3 - rho(d));
  }
}

TEST_CASE("gorenstein chains") {
  // trivial chain
  auto c0 = gorenstein_chain(Vertex{Label::L12, 0}, Vertex{Label::L12, 0},
                             Vertex{Label::L1, 0});
  CHECK(c0.size() == 1);

  // M_1^+ walk with consecutive rank steps
  auto c1 = gorenstein_chain(Vertex{Label::L12, 0}, Vertex{Label::L25, 0},
                             Vertex{Label::L1, 1});
  REQUIRE(c1.size() >= 2);
  for (std::size_t i = 0; i + 1 < c1.size(); ++i) {
    CHECK(rho(c1[i + 1]) == rho(c1[i]) + 1);
    CHECK(is_gorenstein(Interval(c1[i], Vertex{Label::L1, 1})));
  }
  CHECK(c1.front() == Vertex{Label::L12, 0});
  CHECK(c1.back() == Vertex{Label::L25, 0});

  // delta in M_3^-: the second element is the unique M_1^+ cover
  auto c2 = gorenstein_chain(Vertex{Label::L0, 0}, Vertex{Label::L13, 0},
                             Vertex{Label::L1, 1});
  REQUIRE(c2.size() == 3);
  CHECK(c2[1] == Vertex{Label::L12, 0});
  CHECK(m_class(c2[1], +1) == 1);

  CHECK_THROWS_AS(gorenstein_chain(Vertex{Label::L0, 0}, Vertex{Label::L14, 0},
                                   Vertex{Label::L24, 0}),
                  NoChain);
}

TEST_CASE("capacity-2 enumeration matches the published lists") {
  auto list = enumerate_cap2(0, 0);
  CHECK(list.size() == 24);
  std::set<std::string> names;
  for (const Interval& i : list) {
    names.insert(i.to_string());
    CHECK(capacity(i) == 2);
    // every listed interval has an end in M_2^+/M_2^-
    bool lower_m2p = m_class(i.lower(), +1) == 2;
    bool upper_m2m = m_class(i.upper(), -1) == 2;
    CHECK((lower_m2p || upper_m2m));
    CHECK(!is_gorenstein(i));
  }
  // the (25)^r family from the list
  CHECK(names.count("[(13)^0:(25)^0]"));
  CHECK(names.count("[(12)^0:(25)^0]"));
  CHECK(names.count("[(0)^0:(25)^0]"));
  // two more families, one from each side
  CHECK(names.count("[(2)^0:(24)^1]"));
  CHECK(names.count("[(14)^0:(0)^1]"));
}
