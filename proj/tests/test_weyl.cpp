#include <algorithm>

#include "doctest.h"
#include "schub/weyl.hpp"

using namespace schub;

TEST_CASE("identity, simple reflections, mirror") {
  space a = make_space(family::A, 4, 2);
  CHECK(weyl_identity(a) == perm{1, 2, 3, 4});
  CHECK(apply_simple(weyl_identity(a), 2, a) == perm{1, 3, 2, 4});

  space b = make_space(family::B, 3, 2);
  perm id = weyl_identity(b);
  CHECK(id == perm{1, 2, 3, 4, 5, 6});
  CHECK(mirror_ok(id, b));
  CHECK(apply_simple(id, 3, b) == perm{1, 2, 4, 3, 5, 6});  // s_n: (n,n+1)
  CHECK(apply_simple(id, 1, b) == perm{2, 1, 3, 4, 6, 5});  // mirrored pair
  perm w = id;
  for (int i : {1, 2, 3, 2, 1, 3}) {
    w = apply_simple(w, i, b);
    CHECK(mirror_ok(w, b));
  }
  CHECK_FALSE(mirror_ok(perm{2, 1, 3, 4, 5, 6}, b));
}

TEST_CASE("lengths") {
  space a = make_space(family::A, 5, 2);
  CHECK(weyl_length(weyl_identity(a), a) == 0);
  CHECK(weyl_length(perm{5, 4, 3, 2, 1}, a) == 10);  // longest in S_5
  CHECK(weyl_length(perm{2, 1, 3, 4, 5}, a) == 1);

  space c = make_space(family::C, 3, 2);
  CHECK(weyl_length(perm{6, 5, 4, 3, 2, 1}, c) == 9);  // n^2 for w_0
  space c2 = make_space(family::C, 2, 1);
  CHECK(weyl_length(perm{4, 3, 2, 1}, c2) == 4);
  CHECK(weyl_length(apply_simple(weyl_identity(c), 3, c), c) == 1);
}

TEST_CASE("ascent and hecke absorption") {
  space c = make_space(family::C, 3, 2);
  perm id = weyl_identity(c);
  for (int i = 1; i <= c.rank(); ++i) {
    CHECK(ascent(id, i));
    perm w = apply_simple(id, i, c);
    CHECK_FALSE(ascent(w, i));
    CHECK(hecke_mul(w, {i}, c) == w);  // s_i . s_i = s_i in the Hecke monoid
    CHECK(hecke_mul(id, {i, i, i}, c) == w);
  }
}

TEST_CASE("z words") {
  space a = make_space(family::A, 4, 2);
  CHECK(z_word(a, 0).empty());
  CHECK(z_word(a, 1) == std::vector<int>{1, 2, 3, 2, 1});
  CHECK(z_word(a, 2) == std::vector<int>{1, 2, 3, 2, 1, 1, 2, 3, 2, 1});

  space c = make_space(family::C, 5, 3);
  CHECK(z_word(c, 1) == std::vector<int>{1, 2, 3, 4, 5, 4, 3, 2, 1});

  space b53 = make_space(family::B, 5, 3);
  std::vector<int> odd = {1, 2, 4, 3, 5, 4, 5, 3, 4, 2, 1};
  std::vector<int> even = {2, 1, 3, 2, 4, 3, 5, 4, 5, 3, 4, 2, 3, 1, 2};
  CHECK(z_word(b53, 1) == odd);
  CHECK(z_word(b53, 2) == even);
  std::vector<int> three = even;
  three.insert(three.end(), odd.begin(), odd.end());
  CHECK(z_word(b53, 3) == three);

  // Extremal k route through the even word only.
  space b51 = make_space(family::B, 5, 1);
  space b55 = make_space(family::B, 5, 5);
  CHECK(z_word(b51, 1) == even);
  CHECK(z_word(b55, 1) == even);
  std::vector<int> twice = even;
  twice.insert(twice.end(), even.begin(), even.end());
  CHECK(z_word(b55, 2) == twice);

  CHECK(z_word(make_space(family::B, 1, 1), 2) == std::vector<int>{1, 1});
  CHECK(z_word(make_space(family::B, 2, 2), 1) == std::vector<int>{2, 1, 2});
}

TEST_CASE("lift and minimal coset representative") {
  space c = make_space(family::C, 5, 3);
  CHECK(lift_window({1, 2, 7}, c) == perm{1, 2, 7, 3, 5, 6, 8, 4, 9, 10});
  CHECK(min_coset_rep(perm{1, 2, 7, 3, 5, 6, 8, 4, 9, 10}, c) ==
        window{1, 2, 7});
  CHECK(weyl_length(lift_window({1, 2, 7}, c), c) == 4);  // dim 18 - |(7,6,1)|

  space a = make_space(family::A, 4, 2);
  CHECK(lift_window({2, 4}, a) == perm{2, 4, 1, 3});
  CHECK(min_coset_rep(perm{4, 3, 2, 1}, a) == window{3, 4});

  for (family f : {family::B, family::C}) {
    space sp = make_space(f, 4, 2);
    for (const window& u : all_windows(sp)) {
      perm w = lift_window(u, sp);
      CHECK(mirror_ok(w, sp));
      CHECK(min_coset_rep(w, sp) == u);
    }
  }
}

TEST_CASE("hecke curve traces from small spaces") {
  space a = make_space(family::A, 4, 2);
  perm w = hecke_mul(lift_window({2, 4}, a), z_word(a, 1), a);
  CHECK(w == perm{4, 3, 2, 1});
  CHECK(min_coset_rep(w, a) == window{3, 4});

  space c = make_space(family::C, 5, 3);
  CHECK(curve_nbhd_oracle({1, 2, 7}, 1, c) == window{2, 7, 10});

  space b = make_space(family::B, 5, 3);
  CHECK(curve_nbhd_oracle({1, 2, 7}, 1, b) == window{2, 7, 8});
  CHECK(curve_nbhd_oracle({1, 2, 7}, 2, b) == window{7, 9, 10});
  CHECK(curve_nbhd_oracle({1, 2, 7}, 0, b) == window{1, 2, 7});
}

TEST_CASE("z_2 differs from z_1 squared exactly in family B") {
  space b = make_space(family::B, 5, 3);
  perm once = hecke_mul(weyl_identity(b), z_word(b, 1), b);
  perm twice = hecke_mul(once, z_word(b, 1), b);
  perm direct = hecke_mul(weyl_identity(b), z_word(b, 2), b);
  CHECK(twice != direct);

  for (family f : {family::A, family::C}) {
    space sp = f == family::A ? make_space(f, 6, 3) : make_space(f, 5, 3);
    perm p1 = hecke_mul(weyl_identity(sp), z_word(sp, 1), sp);
    CHECK(hecke_mul(p1, z_word(sp, 1), sp) ==
          hecke_mul(weyl_identity(sp), z_word(sp, 2), sp));
  }
}

TEST_CASE("bruhat order on windows") {
  // v_C = (1,5,-4) and w_C = (1,-4,-2) in IG(3,10); mu = (7,4,3),
  // lambda = (7,2,1) in P'(3,10); lambda inside mu matches v <= w.
  space c = make_space(family::C, 5, 3);
  window v = {1, 5, 7};
  window w = {1, 7, 9};
  CHECK(bruhat_leq(v, w));
  CHECK_FALSE(bruhat_leq(w, v));
  CHECK(word_to_partition(window_to_word(v, c), c) == parts{7, 4, 3});
  CHECK(word_to_partition(window_to_word(w, c), c) == parts{7, 2, 1});
  CHECK(contains(parts{7, 2, 1}, parts{7, 4, 3}));
  CHECK(bruhat_leq(v, v));
}

TEST_CASE("duality and colength") {
  space c = make_space(family::C, 8, 5);
  window u = {7, 9, 12, 13, 15};
  CHECK(dual_window(u, c) == window{2, 4, 5, 8, 10});
  CHECK(dual_window(dual_window(u, c), c) == u);
  CHECK(weyl_length(lift_window(u, c), c) == 45 - 13);
  CHECK(coset_colength(u, c) == 13);
  CHECK(weyl_length(lift_window(dual_window(u, c), c), c) == 13);

  space a = make_space(family::A, 4, 2);
  CHECK(dual_window({2, 4}, a) == window{1, 3});
  CHECK(coset_colength({2, 4}, a) == 1);
}

TEST_CASE("length against weight over full enumerations") {
  for (family f : {family::A, family::B, family::C}) {
    std::vector<space> spaces;
    if (f == family::A)
      for (int n = 2; n <= 6; ++n)
        for (int k = 1; k < n; ++k) spaces.push_back(make_space(f, n, k));
    else
      for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= n; ++k) spaces.push_back(make_space(f, n, k));
    for (const space& sp : spaces)
      for (const window& u : all_windows(sp)) {
        parts lam = f == family::A
                        ? word_to_partition(window_to_word(u, sp), sp)
                        : window_to_kstrict(u, sp);
        CHECK(weyl_length(lift_window(u, sp), sp) == sp.dim() - weight(lam));
        CHECK(coset_colength(u, sp) == weight(lam));
      }
  }
}
