#include "schub/qdeg.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <thread>

#include "schub/render.hpp"

namespace schub {

model native_model(const space& sp) {
  if (sp.fam != family::A && sp.k == sp.n) return model::kstrict;
  return model::pprime;
}

parts native_nbhd(const space& sp, const parts& lam, int d) {
  return nbhd(native_model(sp), sp, lam, d);
}

degree_answer min_degree_diagram(const space& sp, const parts& lam,
                                 const parts& mu) {
  const model nat = native_model(sp);
  require_model(nat, lam, sp);
  require_model(nat, mu, sp);
  degree_answer ans;
  for (int d = 0; d <= 2 * sp.k; ++d) {
    parts cur = native_nbhd(sp, lam, d);
    if (d > 0) ans.chain.push_back(cur);
    if (contains(cur, mu)) {
      ans.d = d;
      ans.witness = std::move(cur);
      return ans;
    }
  }
  throw internal_error("minimum degree exceeded 2k; stabilization is broken");
}

degree_answer min_degree_oracle(const space& sp, const window& u,
                                const window& v) {
  require_model(model::window, u, sp);
  require_model(model::window, v, sp);
  degree_answer ans;
  for (int d = 0; d <= 2 * sp.k; ++d) {
    window cur = curve_nbhd_oracle(u, d, sp);
    if (bruhat_leq(v, cur)) {
      ans.d = d;
      ans.witness = convert(model::window, native_model(sp), cur, sp);
      return ans;
    }
  }
  throw internal_error("oracle minimum degree exceeded 2k");
}

verify_report cross_verify(const space& sp, int threads, int max_letters) {
  sp.validate();
  if (sp.letters() > max_letters)
    throw model_error("refusing " + sp.name() + ": " +
                      std::to_string(sp.letters()) + " letters exceeds the " +
                      std::to_string(max_letters) + "-letter bound");
  const auto start = std::chrono::steady_clock::now();
  verify_report rep;
  rep.space_name = sp.name();

  const std::vector<window> wins = all_windows(sp);
  const model nat = native_model(sp);
  std::vector<parts> labels(wins.size());
  for (size_t i = 0; i < wins.size(); ++i)
    labels[i] = convert(model::window, nat, wins[i], sp);

  unsigned pool = threads > 0 ? unsigned(threads)
                              : std::thread::hardware_concurrency();
  if (pool == 0) pool = 1;
  pool = std::min<unsigned>(pool, unsigned(wins.size()) + 1);

  std::vector<long long> bad(pool, 0);
  std::vector<std::vector<std::string>> notes(pool);
  auto run_rows = [&](unsigned tid) {
    for (size_t i = tid; i < wins.size(); i += pool)
      for (size_t j = 0; j < wins.size(); ++j) {
        std::string why;
        try {
          degree_answer a = min_degree_diagram(sp, labels[i], labels[j]);
          degree_answer b = min_degree_oracle(sp, wins[i], wins[j]);
          if (a.d == b.d && a.witness == b.witness) continue;
          std::ostringstream os;
          os << "diagram d=" << a.d << " (" << parts_to_string(a.witness)
             << ") vs oracle d=" << b.d << " (" << parts_to_string(b.witness)
             << ")";
          why = os.str();
        } catch (const std::exception& e) {
          why = e.what();
        }
        ++bad[tid];
        if (notes[tid].size() < 4)
          notes[tid].push_back("lambda=(" + parts_to_string(labels[i]) +
                               ") mu=(" + parts_to_string(labels[j]) + "): " +
                               why);
      }
  };
  std::vector<std::thread> workers;
  for (unsigned t = 1; t < pool; ++t) workers.emplace_back(run_rows, t);
  run_rows(0);
  for (auto& t : workers) t.join();

  rep.pairs = (long long)wins.size() * (long long)wins.size();
  for (unsigned t = 0; t < pool; ++t) {
    rep.mismatches += bad[t];
    for (const std::string& s : notes[t])
      if (rep.first_mismatches.size() < 8) rep.first_mismatches.push_back(s);
  }
  rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
                   .count();
  return rep;
}

std::vector<space> all_spaces(int max_letters) {
  std::vector<space> out;
  for (int n = 2; n <= max_letters; ++n)
    for (int k = 1; k <= n - 1; ++k) out.push_back(make_space(family::A, n, k));
  for (int n = 1; 2 * n <= max_letters; ++n)
    for (int k = 1; k <= n; ++k) {
      out.push_back(make_space(family::B, n, k));
      out.push_back(make_space(family::C, n, k));
    }
  return out;
}

}  // namespace schub
