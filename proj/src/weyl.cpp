#include "schub/weyl.hpp"

#include <algorithm>
#include <numeric>

namespace schub {

perm weyl_identity(const space& sp) {
  perm w(sp.letters());
  std::iota(w.begin(), w.end(), 1);
  return w;
}

bool mirror_ok(const perm& w, const space& sp) {
  if (int(w.size()) != sp.letters()) return false;
  std::vector<char> seen(sp.letters() + 1, 0);
  for (int v : w) {
    if (v < 1 || v > sp.letters() || seen[v]) return false;
    seen[v] = 1;
  }
  if (sp.fam == family::A) return true;
  for (int i = 1; i <= sp.letters(); ++i)
    if (w[sp.bar(i) - 1] != sp.bar(w[i - 1])) return false;
  return true;
}

perm apply_simple(perm w, int i, const space& sp) {
  if (i < 1 || i > sp.rank())
    throw internal_error("simple reflection index out of range");
  if (sp.fam == family::A || i < sp.n) {
    std::swap(w[i - 1], w[i]);
    if (sp.fam != family::A)
      std::swap(w[sp.bar(i + 1) - 1], w[sp.bar(i) - 1]);
  } else {
    std::swap(w[sp.n - 1], w[sp.n]);
  }
  return w;
}

bool ascent(const perm& w, int i) { return w[i - 1] < w[i]; }

int weyl_length(perm w, const space& sp) {
  // Strip right descents one at a time; a mirror-symmetric permutation with
  // no descent among positions 1..rank is the identity.
  int len = 0;
  for (;;) {
    int i = 1;
    while (i <= sp.rank() && ascent(w, i)) ++i;
    if (i > sp.rank()) return len;
    w = apply_simple(std::move(w), i, sp);
    ++len;
  }
}

perm hecke_mul(perm w, const std::vector<int>& letters, const space& sp) {
  for (int i : letters)
    if (ascent(w, i)) w = apply_simple(std::move(w), i, sp);
  return w;
}

namespace {

// Reduced word of the reflection through the highest root: families A and C
// use it as z_1 directly.
std::vector<int> highest_root_word(const space& sp) {
  std::vector<int> z;
  if (sp.fam == family::A) {
    for (int i = 1; i <= sp.n - 1; ++i) z.push_back(i);
    for (int i = sp.n - 2; i >= 1; --i) z.push_back(i);
  } else {
    for (int i = 1; i <= sp.n; ++i) z.push_back(i);
    for (int i = sp.n - 1; i >= 1; --i) z.push_back(i);
  }
  return z;
}

// Family B, s_{t_1+t_2}: z_1 when k = 1 and z_2 when 2 <= k <= n-1.
std::vector<int> b_even_word(int n) {
  std::vector<int> z;
  for (int j = 1; j <= n - 1; ++j) {
    z.push_back(j + 1);
    z.push_back(j);
  }
  z.push_back(n);
  for (int j = n - 2; j >= 1; --j) {
    z.push_back(j);
    z.push_back(j + 1);
  }
  return z;
}

// Family B, s_{t_1+t_{k+1}}: z_1 for 2 <= k <= n-1.
std::vector<int> b_odd_word(int n, int k) {
  std::vector<int> z;
  for (int i = 1; i <= k - 1; ++i) z.push_back(i);
  for (int j = k; j <= n - 1; ++j) {
    z.push_back(j + 1);
    z.push_back(j);
  }
  z.push_back(n);
  for (int j = n - 2; j >= k; --j) {
    z.push_back(j);
    z.push_back(j + 1);
  }
  for (int i = k - 1; i >= 1; --i) z.push_back(i);
  return z;
}

void append_copies(std::vector<int>& out, const std::vector<int>& w,
                   int times) {
  for (int t = 0; t < times; ++t) out.insert(out.end(), w.begin(), w.end());
}

}  // namespace

std::vector<int> z_word(const space& sp, int d) {
  if (d < 0) throw model_error("degree must be nonnegative");
  std::vector<int> z;
  if (d == 0) return z;
  if (sp.fam != family::B) {
    append_copies(z, highest_root_word(sp), d);
    return z;
  }
  if (sp.k == 1 || sp.k == sp.n) {
    append_copies(z, b_even_word(sp.n), d);
    return z;
  }
  append_copies(z, b_even_word(sp.n), d / 2);
  if (d % 2 == 1) {
    std::vector<int> z1 = b_odd_word(sp.n, sp.k);
    z.insert(z.end(), z1.begin(), z1.end());
  }
  return z;
}

window min_coset_rep(const perm& w, const space& sp) {
  window u(w.begin(), w.begin() + sp.k);
  std::sort(u.begin(), u.end());
  return u;
}

perm lift_window(const window& u, const space& sp) {
  if (!is_window(u, sp)) throw model_error("invalid window");
  perm w(u);
  w.reserve(sp.letters());
  if (sp.fam == family::A) {
    std::vector<char> used(sp.n + 1, 0);
    for (int v : u) used[v] = 1;
    for (int v = 1; v <= sp.n; ++v)
      if (!used[v]) w.push_back(v);
    return w;
  }
  std::vector<char> used(sp.n + 1, 0);
  for (int v : u) used[std::min(v, sp.bar(v))] = 1;
  for (int v = 1; v <= sp.n; ++v)
    if (!used[v]) w.push_back(v);
  for (int j = sp.n + 1; j <= sp.letters(); ++j)
    w.push_back(sp.bar(w[sp.bar(j) - 1]));
  if (!mirror_ok(w, sp)) throw internal_error("lift_window broke the mirror");
  return w;
}

window curve_nbhd_oracle(const window& u, int d, const space& sp) {
  return min_coset_rep(hecke_mul(lift_window(u, sp), z_word(sp, d), sp), sp);
}

bool bruhat_leq(const window& v, const window& u) {
  if (v.size() != u.size()) throw internal_error("window sizes differ");
  for (size_t j = 0; j < v.size(); ++j)
    if (v[j] > u[j]) return false;
  return true;
}

window dual_window(const window& u, const space& sp) {
  window d;
  d.reserve(u.size());
  for (int v : u) d.push_back(sp.bar(v));
  std::sort(d.begin(), d.end());
  return d;
}

int coset_colength(const window& u, const space& sp) {
  return sp.dim() - weyl_length(lift_window(u, sp), sp);
}

}  // namespace schub
