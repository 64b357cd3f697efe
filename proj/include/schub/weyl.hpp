#pragma once

#include <vector>

#include "schub/models.hpp"

namespace schub {

// Independent oracle: the Weyl group as one-line permutations of 1..letters.
// Families B/C store the full hyperoctahedral element on 2n letters with the
// mirror redundancy w(bar(i)) = bar(w(i)).
using perm = std::vector<int>;

perm weyl_identity(const space& sp);
bool mirror_ok(const perm& w, const space& sp);

// Right multiplication by s_i (i in 1..rank): family A swaps positions
// (i, i+1); families B/C swap (i, i+1) together with the mirror pair
// (bar(i+1), bar(i)) for i < n, and (n, n+1) for i = n.
perm apply_simple(perm w, int i, const space& sp);

// True iff l(w s_i) = l(w) + 1, i.e. w(i) < w(i+1).
bool ascent(const perm& w, int i);

// Coxeter length via descent-driven reduction to the identity.
int weyl_length(perm w, const space& sp);

// Left-to-right Hecke fold: w . s_i = w s_i when the length grows, else w.
perm hecke_mul(perm w, const std::vector<int>& letters, const space& sp);

// Explicit reduced word for z_d (empty when d = 0). Family B uses k.
std::vector<int> z_word(const space& sp, int d);

window min_coset_rep(const perm& w, const space& sp);
perm lift_window(const window& u, const space& sp);

// Minimal representative of u . z_d W_P.
window curve_nbhd_oracle(const window& u, int d, const space& sp);

// Bruhat order on W^P: componentwise comparison of sorted windows.
bool bruhat_leq(const window& v, const window& u);

// Window of the opposite Schubert class: sorted {bar(u_i)}.
window dual_window(const window& u, const space& sp);

// Codimension of the class labelled by u: dim X - l(u), which equals the
// length of the minimal representative of w_0 u W_P.
int coset_colength(const window& u, const space& sp);

}  // namespace schub
