#include "schub/models.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

namespace schub {

const char* model_name(model m) {
  switch (m) {
    case model::kstrict: return "kstrict";
    case model::pprime: return "pprime";
    case model::window: return "window";
    case model::word: return "word";
  }
  return "?";
}

model parse_model(const std::string& text) {
  if (text == "kstrict") return model::kstrict;
  if (text == "pprime" || text == "partition") return model::pprime;
  if (text == "window") return model::window;
  if (text == "word") return model::word;
  throw parse_error("model: expected kstrict|pprime|window|word, got '" +
                    text + "'");
}

int weight(const parts& p) { return std::accumulate(p.begin(), p.end(), 0); }

int ell(const parts& p) {
  int m = 0;
  for (size_t j = 0; j < p.size(); ++j)
    if (p[j] > 0) m = int(j) + 1;
  return m;
}

int ell1(const parts& p) {
  int m = 0;
  for (size_t j = 0; j < p.size(); ++j)
    if (p[j] > 1) m = int(j) + 1;
  return m;
}

bool contains(const parts& inner, const parts& outer) {
  if (inner.size() != outer.size()) return false;
  for (size_t j = 0; j < inner.size(); ++j)
    if (inner[j] > outer[j]) return false;
  return true;
}

bool is_partition_in_box(const parts& p, const space& sp) {
  if (int(p.size()) != sp.k) return false;
  int prev = sp.box_cols();
  for (int x : p) {
    if (x < 0 || x > prev) return false;
    prev = x;
  }
  return true;
}

bool is_kstrict(const parts& p, const space& sp) {
  if (sp.fam == family::A) return false;
  if (!is_partition_in_box(p, sp)) return false;
  // parts exceeding n-k must strictly decrease
  for (int j = 0; j + 1 < sp.k; ++j)
    if (p[j] > sp.n - sp.k && p[j + 1] >= p[j]) return false;
  return true;
}

bool is_word(const word& g, const space& sp) {
  if (int(g.size()) != sp.letters()) return false;
  int ones = 0;
  for (int b : g) {
    if (b != 0 && b != 1) return false;
    ones += b;
  }
  return ones == sp.k;
}

bool is_window(const window& u, const space& sp) {
  if (int(u.size()) != sp.k) return false;
  int prev = 0;
  for (int v : u) {
    if (v <= prev || v > sp.letters()) return false;
    prev = v;
  }
  if (sp.fam != family::A) {
    std::vector<char> seen(sp.n + 1, 0);
    for (int v : u) {
      int a = std::min(v, sp.bar(v));
      if (seen[a]) return false;
      seen[a] = 1;
    }
  }
  return true;
}

word boundary_word(const parts& p, const space& sp) {
  if (!is_partition_in_box(p, sp))
    throw model_error("partition does not fit the " + std::to_string(sp.k) +
                      "x" + std::to_string(sp.box_cols()) + " box");
  word g(sp.letters(), 0);
  // The j-th down-step (one) sits at position box_cols + j - p[j-1].
  for (int j = 1; j <= sp.k; ++j) g[sp.box_cols() + j - p[j - 1] - 1] = 1;
  return g;
}

parts word_to_partition(const word& g, const space& sp) {
  if (!is_word(g, sp))
    throw model_error("word must have length " +
                      std::to_string(sp.letters()) + " with " +
                      std::to_string(sp.k) + " ones");
  parts p(sp.k, 0);
  int j = 0;
  for (int q = 1; q <= sp.letters(); ++q)
    if (g[q - 1] == 1) {
      p[j] = sp.box_cols() + j + 1 - q;
      ++j;
    }
  return p;
}

window word_to_window(const word& g) {
  window u;
  for (size_t q = 0; q < g.size(); ++q)
    if (g[q] == 1) u.push_back(int(q) + 1);
  return u;
}

word window_to_word(const window& u, const space& sp) {
  if (!is_window(u, sp)) throw model_error("invalid window");
  word g(sp.letters(), 0);
  for (int v : u) g[v - 1] = 1;
  return g;
}

window kstrict_to_window(const parts& lam, const space& sp) {
  if (!is_kstrict(lam, sp))
    throw model_error("not a valid " + std::to_string(sp.n - sp.k) +
                      "-strict partition for " + sp.name());
  const int k = sp.k, nk = sp.n - sp.k;
  window u(k);
  for (int j = 1; j <= k; ++j) {
    int c = 0;
    for (int i = 1; i < j; ++i)
      if (lam[i - 1] + lam[j - 1] <= 2 * nk + j - i) ++c;
    u[j - 1] = 2 * sp.n + 1 - k - lam[j - 1] + c;
  }
  if (!is_window(u, sp)) throw internal_error("kstrict_to_window broke");
  return u;
}

parts window_to_kstrict(const window& u, const space& sp) {
  if (sp.fam == family::A) throw model_error("no k-strict model in type A");
  if (!is_window(u, sp)) throw model_error("invalid window");
  const int k = sp.k;
  parts lam(k);
  for (int j = 1; j <= k; ++j) {
    int c = 0;
    for (int i = 1; i < j; ++i)
      if (u[i - 1] + u[j - 1] > 2 * sp.n + 1) ++c;
    lam[j - 1] = 2 * sp.n + 1 - k - u[j - 1] + c;
  }
  if (!is_kstrict(lam, sp)) throw internal_error("window_to_kstrict broke");
  return lam;
}

bool is_pprime(const parts& p, const space& sp) {
  if (sp.fam == family::A)
    throw model_error("P' is defined for families B/C only");
  if (!is_partition_in_box(p, sp)) return false;
  word g = boundary_word(p, sp);
  for (int i = 1; i <= sp.n; ++i)
    if (g[i - 1] == g[sp.bar(i) - 1] && g[i - 1] != 0) return false;
  return true;
}

parts kstrict_to_pprime(const parts& lam, const space& sp) {
  return word_to_partition(window_to_word(kstrict_to_window(lam, sp), sp), sp);
}

parts pprime_to_kstrict(const parts& mu, const space& sp) {
  if (!is_pprime(mu, sp)) throw model_error("partition not in P'");
  return window_to_kstrict(word_to_window(boundary_word(mu, sp)), sp);
}

int wingtip(const parts& mu, const space& sp) {
  if (!is_pprime(mu, sp)) throw model_error("partition not in P'");
  word g = boundary_word(mu, sp);
  int m = 0;
  while (m < sp.n && g[m] != g[sp.bar(m + 1) - 1]) ++m;
  return m;
}

parts type_a_dual(const parts& lam, const space& sp) {
  if (sp.fam != family::A) throw model_error("type A dual needs family A");
  if (!is_partition_in_box(lam, sp)) throw model_error("invalid partition");
  parts d(sp.k);
  for (int j = 0; j < sp.k; ++j) d[j] = sp.box_cols() - lam[sp.k - 1 - j];
  return d;
}

void require_model(model m, const std::vector<int>& v, const space& sp) {
  switch (m) {
    case model::kstrict:
      if (sp.fam == family::A)
        throw model_error("no k-strict model in type A");
      if (!is_kstrict(v, sp))
        throw model_error("not a valid k-strict partition for " + sp.name());
      return;
    case model::pprime:
      if (sp.fam == family::A) {
        if (!is_partition_in_box(v, sp))
          throw model_error("partition does not fit the box of " + sp.name());
      } else if (!is_pprime(v, sp)) {
        throw model_error("partition not in P' for " + sp.name());
      }
      return;
    case model::window:
      if (!is_window(v, sp))
        throw model_error("not a valid window for " + sp.name());
      return;
    case model::word:
      if (!is_word(v, sp))
        throw model_error("not a valid 01-word for " + sp.name());
      return;
  }
}

namespace {

window to_window(model from, const std::vector<int>& v, const space& sp) {
  switch (from) {
    case model::kstrict: return kstrict_to_window(v, sp);
    case model::pprime: return word_to_window(boundary_word(v, sp));
    case model::window: return v;
    case model::word: return word_to_window(v);
  }
  throw internal_error("bad model");
}

std::vector<int> from_window(model to, const window& u, const space& sp) {
  switch (to) {
    case model::kstrict: return window_to_kstrict(u, sp);
    case model::pprime: return word_to_partition(window_to_word(u, sp), sp);
    case model::window: return u;
    case model::word: return window_to_word(u, sp);
  }
  throw internal_error("bad model");
}

}  // namespace

std::vector<int> convert(model from, model to, const std::vector<int>& v,
                         const space& sp) {
  require_model(from, v, sp);
  return from_window(to, to_window(from, v, sp), sp);
}

std::vector<window> all_windows(const space& sp) {
  std::vector<window> out;
  window cur;
  std::function<void(int)> rec = [&](int next) {
    if (int(cur.size()) == sp.k) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= sp.letters(); ++v) {
      if (sp.letters() - v + 1 < sp.k - int(cur.size())) break;
      if (sp.fam != family::A) {
        bool clash = false;
        for (int w : cur)
          if (std::min(w, sp.bar(w)) == std::min(v, sp.bar(v))) clash = true;
        if (clash) continue;
      }
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

std::vector<parts> all_partitions_in_box(const space& sp) {
  std::vector<parts> out;
  parts cur(sp.k, 0);
  std::function<void(int, int)> rec = [&](int j, int maxpart) {
    if (j == sp.k) {
      out.push_back(cur);
      return;
    }
    for (int x = maxpart; x >= 0; --x) {
      cur[j] = x;
      rec(j + 1, x);
    }
  };
  rec(0, sp.box_cols());
  return out;
}

std::vector<parts> all_kstrict(const space& sp) {
  std::vector<parts> out;
  for (const parts& p : all_partitions_in_box(sp))
    if (is_kstrict(p, sp)) out.push_back(p);
  return out;
}

std::vector<parts> all_pprime(const space& sp) {
  std::vector<parts> out;
  for (const parts& p : all_partitions_in_box(sp))
    if (is_pprime(p, sp)) out.push_back(p);
  return out;
}

}  // namespace schub
