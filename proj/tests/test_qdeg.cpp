#include <algorithm>

#include "doctest.h"
#include "schub/qdeg.hpp"

using namespace schub;

TEST_CASE("native model per space") {
  CHECK(native_model(make_space(family::A, 5, 2)) == model::pprime);
  CHECK(native_model(make_space(family::C, 8, 5)) == model::pprime);
  CHECK(native_model(make_space(family::B, 8, 5)) == model::pprime);
  CHECK(native_model(make_space(family::C, 5, 5)) == model::kstrict);
  CHECK(native_model(make_space(family::B, 5, 5)) == model::kstrict);
}

TEST_CASE("minimum degree for the Gr(5,16) pair") {
  space a = make_space(family::A, 16, 5);
  degree_answer ans = min_degree_diagram(a, {11, 11, 11, 4, 4},
                                         {7, 7, 0, 0, 0});
  CHECK(ans.d == 3);
  REQUIRE(ans.chain.size() == 3);
  CHECK(ans.chain[0] == parts{10, 10, 3, 3, 0});
  CHECK(ans.chain[1] == parts{9, 2, 2, 0, 0});
  CHECK(ans.chain[2] == parts{1, 1, 0, 0, 0});
  CHECK(ans.witness == parts{1, 1, 0, 0, 0});
}

TEST_CASE("minimum degree for the IG(5,16) pair") {
  space c = make_space(family::C, 8, 5);
  degree_answer ans = min_degree_diagram(c, {11, 11, 11, 4, 4},
                                         {7, 7, 0, 0, 0});
  CHECK(ans.d == 3);
  REQUIRE(ans.chain.size() == 3);
  CHECK(ans.chain[0] == parts{10, 10, 3, 3, 0});
  CHECK(ans.chain[1] == parts{9, 2, 2, 0, 0});
  CHECK(ans.chain[2] == parts{1, 1, 0, 0, 0});
}

TEST_CASE("minimum degree for the OG(5,17) pair") {
  space b = make_space(family::B, 8, 5);
  degree_answer ans = min_degree_diagram(b, {11, 11, 11, 4, 4},
                                         {7, 7, 0, 0, 0});
  CHECK(ans.d == 4);
  REQUIRE(ans.chain.size() == 4);
  CHECK(ans.chain[0] == parts{10, 10, 3, 3, 3});
  CHECK(ans.chain[1] == parts{9, 2, 2, 0, 0});
  CHECK(ans.chain[2] == parts{1, 1, 1, 0, 0});
  CHECK(ans.chain[3] == parts{0, 0, 0, 0, 0});
}

TEST_CASE("minimum degree on the maximal isotropic spaces") {
  space c = make_space(family::C, 5, 5);  // IG(5,10), k-strict native
  degree_answer ans = min_degree_diagram(c, {4, 3, 2, 1, 0}, {3, 1, 0, 0, 0});
  CHECK(ans.d == 2);
  space b = make_space(family::B, 5, 5);  // OG(5,11)
  ans = min_degree_diagram(b, {4, 3, 2, 1, 0}, {3, 1, 0, 0, 0});
  CHECK(ans.d == 1);
}

TEST_CASE("degree zero iff containment") {
  space c = make_space(family::C, 3, 2);
  std::vector<parts> ps = all_pprime(c);
  for (const parts& lam : ps)
    for (const parts& mu : ps) {
      degree_answer ans = min_degree_diagram(c, lam, mu);
      CHECK((ans.d == 0) == contains(lam, mu));
      CHECK(ans.chain.size() == (size_t)ans.d);
      CHECK(ans.d <= 2 * c.k);
    }
}

TEST_CASE("monotonicity in the second argument") {
  space b = make_space(family::B, 3, 2);
  std::vector<parts> ps = all_pprime(b);
  for (const parts& lam : ps)
    for (const parts& mu : ps)
      for (const parts& nu : ps) {
        if (!contains(mu, nu)) continue;  // mu inside nu
        CHECK(min_degree_diagram(b, lam, nu).d <=
              min_degree_diagram(b, lam, mu).d);
      }
}

TEST_CASE("diagram and oracle algorithms agree pairwise") {
  for (family f : {family::A, family::B, family::C}) {
    space sp = f == family::A ? make_space(f, 5, 2) : make_space(f, 3, 2);
    model nat = native_model(sp);
    std::vector<window> ws = all_windows(sp);
    for (const window& u : ws)
      for (const window& v : ws) {
        parts lam = convert(model::window, nat, u, sp);
        parts mu = convert(model::window, nat, v, sp);
        degree_answer dia = min_degree_diagram(sp, lam, mu);
        degree_answer orc = min_degree_oracle(sp, u, v);
        CHECK(dia.d == orc.d);
        CHECK(orc.witness == native_nbhd(sp, lam, orc.d));
      }
  }
}

TEST_CASE("cross verify small spaces") {
  for (space sp : {make_space(family::A, 4, 2), make_space(family::C, 4, 3),
                   make_space(family::B, 4, 3), make_space(family::B, 2, 2)}) {
    verify_report rep = cross_verify(sp, 2, 10);
    long long count = (long long)all_windows(sp).size();
    CHECK(rep.pairs == count * count);
    CHECK(rep.mismatches == 0);
    CHECK(rep.first_mismatches.empty());
    CHECK(rep.space_name == sp.name());
  }
  CHECK_THROWS_AS(cross_verify(make_space(family::C, 8, 2), 1, 10),
                  model_error);
}

TEST_CASE("space roster respects the letter bound") {
  std::vector<space> all = all_spaces(10);
  long long a = 0, b = 0, c = 0;
  for (const space& sp : all) {
    CHECK(sp.letters() <= 10);
    if (sp.fam == family::A) ++a;
    if (sp.fam == family::B) ++b;
    if (sp.fam == family::C) ++c;
  }
  // A: n = 2..10 with 1 <= k <= n-1; B/C: n = 1..5 with 1 <= k <= n.
  CHECK(a == 45);  // sum over n = 2..10 of (n-1)
  CHECK(b == 15);
  CHECK(c == 15);
}
