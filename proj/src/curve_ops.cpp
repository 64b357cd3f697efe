#include "schub/curve_ops.hpp"

#include <algorithm>

namespace schub {

namespace {

void require_degree(int d) {
  if (d < 0) throw model_error("degree must be nonnegative");
}

// Every family stabilizes after at most k native steps (the partition loses
// its first row each time), so iteration counts are capped accordingly.
int capped(int d, const space& sp) { return std::min(d, sp.k); }

// Shared by families A and C: if the last letter of the alphabet is absent,
// drop u(1) and append it; otherwise drop u(1) and insert the letter just
// below the maximal tail run ...,L-1,L. A full run is the fundamental class.
window step_last_letter(const window& u, const space& sp) {
  const int L = sp.letters();
  const int k = int(u.size());
  if (u.back() < L) {
    window out(u.begin() + 1, u.end());
    out.push_back(L);
    return out;
  }
  int t = 1;
  while (t < k && u[k - 1 - t] == L - t) ++t;
  if (t == k) return u;
  window out(u.begin() + 1, u.end());
  out.insert(std::lower_bound(out.begin(), out.end(), L - t), L - t);
  if (!is_window(out, sp)) throw internal_error("window step left W^P");
  return out;
}

}  // namespace

parts stepA_partition(const parts& lam) {
  parts out(lam.size(), 0);
  for (size_t j = 1; j < lam.size(); ++j)
    out[j - 1] = std::max(lam[j] - 1, 0);
  return out;
}

parts nbhdA_partition(parts lam, int d) {
  require_degree(d);
  const int reps = std::min<int>(d, int(lam.size()));
  for (int t = 0; t < reps; ++t) lam = stepA_partition(lam);
  return lam;
}

window stepA_window(const window& u, const space& sp) {
  return step_last_letter(u, sp);
}

window nbhdA_window(window u, int d, const space& sp) {
  require_degree(d);
  const int reps = capped(d, sp);
  for (int t = 0; t < reps; ++t) u = step_last_letter(u, sp);
  return u;
}

word stepA_word(const word& g) {
  auto first1 = std::find(g.begin(), g.end(), 1);
  auto last0 = std::find(g.rbegin(), g.rend(), 0);
  if (first1 == g.end() || last0 == g.rend()) return g;
  size_t i = size_t(first1 - g.begin());
  size_t j = g.size() - 1 - size_t(last0 - g.rbegin());
  if (i > j) return g;  // 0...01...1: the fundamental class
  word out = g;
  std::swap(out[i], out[j]);
  return out;
}

word nbhdA_word(word g, int d) {
  require_degree(d);
  int k = 0;
  for (int b : g) k += b;
  const int reps = std::min(d, k);
  for (int t = 0; t < reps; ++t) g = stepA_word(g);
  return g;
}

parts stepC_kstrict(const parts& lam, const space& sp) {
  const int k = sp.k;
  int j = 2;
  while (j <= k && lam[0] + lam[j - 1] > 2 * (sp.n - sp.k) + j - 1) ++j;
  parts out;
  out.reserve(k);
  for (int i = 2; i <= k; ++i) {
    int x = lam[i - 1];
    if (i >= j) x = std::max(x - 1, 0);
    out.push_back(x);
  }
  out.push_back(0);
  if (!is_kstrict(out, sp)) throw internal_error("C-step left Lambda");
  return out;
}

parts nbhdC_kstrict(parts lam, int d, const space& sp) {
  require_degree(d);
  const int reps = capped(d, sp);
  for (int t = 0; t < reps; ++t) lam = stepC_kstrict(lam, sp);
  return lam;
}

parts cominuscule_stepC(const parts& lam, int d) {
  require_degree(d);
  const int k = int(lam.size());
  const int drop = std::min(d, k);
  parts out(lam.begin() + drop, lam.end());
  out.resize(k, 0);
  return out;
}

parts cominuscule_stepB(const parts& lam, int d) {
  require_degree(d);
  const int k = int(lam.size());
  const int drop = d > k ? k : std::min(2 * d, k);
  parts out(lam.begin() + drop, lam.end());
  out.resize(k, 0);
  return out;
}

parts stepB_kstrict_1(const parts& lam, const space& sp) {
  if (sp.k < 2 || sp.k > sp.n - 1)
    throw internal_error("stepB_kstrict_1 needs 2 <= k <= n-1");
  const int k = sp.k, n = sp.n;
  const int l = ell(lam);
  // Wing branch exactly when it would append at least one trailing 1, i.e.
  // lambda_1 - ell >= 2(n-k); the boundary case belongs here, not to the
  // type C rule.
  if (lam[0] - l < 2 * (n - k)) return stepC_kstrict(lam, sp);
  int j = 2;
  while (j <= k && lam[0] + lam[j - 1] > 2 * (n - k) + j - 1) ++j;
  parts out;
  out.reserve(k);
  int ones;
  const int zeros = 2 * n - k - lam[0];
  if (j > k) {
    for (int i = 2; i <= l; ++i) out.push_back(lam[i - 1]);
    ones = 1 + 2 * k + lam[0] - 2 * n - l;
  } else {
    const int l1 = ell1(lam);
    for (int i = 2; i <= l1; ++i) {
      int x = lam[i - 1];
      if (l1 >= j && i >= j) x -= 1;
      out.push_back(x);
    }
    ones = 1 + 2 * k + lam[0] - 2 * n - l1;
  }
  if (ones < 0 || zeros < 0 || int(out.size()) + ones + zeros != k)
    throw internal_error("stepB_kstrict_1 block sizes are inconsistent");
  out.insert(out.end(), ones, 1);
  out.insert(out.end(), zeros, 0);
  if (!is_kstrict(out, sp)) throw internal_error("B-step left Lambda");
  return out;
}

parts nbhdB_kstrict(const parts& lam, int d, const space& sp) {
  require_degree(d);
  if (d == 0) return lam;
  if (sp.k == sp.n) return cominuscule_stepB(lam, d);
  if (sp.k == 1) {
    if (d == 1 && lam[0] == 2 * sp.n - 1) return parts{1};
    return parts{0};
  }
  // Even degrees coincide with the type C neighborhood of the original
  // partition; odd degrees append a single B-step.
  parts cur = lam;
  const int reps = std::min(d % 2 == 0 ? d : d - 1, sp.k);
  for (int t = 0; t < reps; ++t) cur = stepC_kstrict(cur, sp);
  if (d % 2 == 1) cur = stepB_kstrict_1(cur, sp);
  return cur;
}

parts stepC_pprime(const parts& mu) { return stepA_partition(mu); }

parts nbhdC_pprime(parts mu, int d) { return nbhdA_partition(std::move(mu), d); }

parts stepB_pprime_1(const parts& mu, const space& sp) {
  if (sp.k < 2 || sp.k > sp.n - 1)
    throw internal_error("stepB_pprime_1 needs 2 <= k <= n-1");
  if (weight(mu) == 0) return mu;  // fundamental class
  const int m = wingtip(mu, sp);
  word g = boundary_word(mu, sp);
  int first1 = 0;
  while (g[first1] == 0) ++first1;
  const int target = 2 * sp.n - m - 1;  // 0-based slot of position 2n-m
  if (g[target] != 0 || first1 >= target)
    throw internal_error("stepB_pprime_1 surgery slot is not free");
  std::swap(g[first1], g[target]);
  parts out = word_to_partition(g, sp);
  if (!is_pprime(out, sp)) throw internal_error("B-step left P'");
  return out;
}

parts nbhdB_pprime(const parts& mu, int d, const space& sp) {
  require_degree(d);
  if (d == 0) return mu;
  if (sp.k == sp.n || sp.k == 1)
    return kstrict_to_pprime(nbhdB_kstrict(pprime_to_kstrict(mu, sp), d, sp),
                             sp);
  parts cur = mu;
  const int reps = std::min(d % 2 == 0 ? d : d - 1, sp.k);
  for (int t = 0; t < reps; ++t) cur = stepC_pprime(cur);
  if (d % 2 == 1) cur = stepB_pprime_1(cur, sp);
  return cur;
}

window stepC_window(const window& u, const space& sp) {
  return step_last_letter(u, sp);
}

window nbhdC_window(window u, int d, const space& sp) {
  require_degree(d);
  const int reps = capped(d, sp);
  for (int t = 0; t < reps; ++t) u = step_last_letter(u, sp);
  return u;
}

window stepB_window_1(const window& u, const space& sp) {
  if (sp.k < 2 || sp.k > sp.n - 1)
    throw internal_error("stepB_window_1 needs 2 <= k <= n-1");
  std::vector<char> present(sp.n + 1, 0);
  for (int v : u) present[std::min(v, sp.bar(v))] = 1;
  int J = 1;
  while (J <= sp.n && present[J]) ++J;
  if (J > sp.n) throw internal_error("window uses every letter with k < n");
  const int barJ = sp.bar(J);
  if (u[0] > barJ) return u;  // only the top class starts past bar(J)
  window out(u.begin() + 1, u.end());
  out.insert(std::lower_bound(out.begin(), out.end(), barJ), barJ);
  if (!is_window(out, sp)) throw internal_error("B window step left W^P");
  return out;
}

window nbhdB_window(const window& u, int d, const space& sp) {
  require_degree(d);
  if (d == 0) return u;
  if (sp.k == sp.n || sp.k == 1)
    return kstrict_to_window(nbhdB_kstrict(window_to_kstrict(u, sp), d, sp),
                             sp);
  window cur = u;
  const int reps = std::min(d % 2 == 0 ? d : d - 1, sp.k);
  for (int t = 0; t < reps; ++t) cur = stepC_window(cur, sp);
  if (d % 2 == 1) cur = stepB_window_1(cur, sp);
  return cur;
}

std::vector<int> nbhd(model m, const space& sp, const std::vector<int>& delta,
                      int d) {
  require_model(m, delta, sp);
  require_degree(d);
  switch (sp.fam) {
    case family::A:
      switch (m) {
        case model::kstrict: break;  // require_model already rejected it
        case model::pprime: return nbhdA_partition(delta, d);
        case model::window: return nbhdA_window(delta, d, sp);
        case model::word: return nbhdA_word(delta, d);
      }
      break;
    case family::C:
      switch (m) {
        case model::kstrict: return nbhdC_kstrict(delta, d, sp);
        case model::pprime:
          return nbhdC_pprime(delta, d);
        case model::window: return nbhdC_window(delta, d, sp);
        case model::word:
          return window_to_word(nbhdC_window(word_to_window(delta), d, sp),
                                sp);
      }
      break;
    case family::B:
      switch (m) {
        case model::kstrict: return nbhdB_kstrict(delta, d, sp);
        case model::pprime: return nbhdB_pprime(delta, d, sp);
        case model::window: return nbhdB_window(delta, d, sp);
        case model::word:
          return window_to_word(nbhdB_window(word_to_window(delta), d, sp),
                                sp);
      }
      break;
  }
  throw internal_error("nbhd dispatch fell through");
}

}  // namespace schub
