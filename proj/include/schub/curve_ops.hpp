#pragma once

#include "schub/models.hpp"

namespace schub {

// Degree-d curve-neighborhood operators delta -> delta^d. All functions are
// pure; d = 0 is the identity everywhere.

parts stepA_partition(const parts& lam);
parts nbhdA_partition(parts lam, int d);
window stepA_window(const window& u, const space& sp);
window nbhdA_window(window u, int d, const space& sp);
word stepA_word(const word& g);
word nbhdA_word(word g, int d);

parts stepC_kstrict(const parts& lam, const space& sp);
parts nbhdC_kstrict(parts lam, int d, const space& sp);
parts cominuscule_stepC(const parts& lam, int d);
parts cominuscule_stepB(const parts& lam, int d);
parts stepB_kstrict_1(const parts& lam, const space& sp);  // 2 <= k <= n-1
parts nbhdB_kstrict(const parts& lam, int d, const space& sp);

parts stepC_pprime(const parts& mu);
parts nbhdC_pprime(parts mu, int d);
parts stepB_pprime_1(const parts& mu, const space& sp);  // 2 <= k <= n-1
parts nbhdB_pprime(const parts& mu, int d, const space& sp);

window stepC_window(const window& u, const space& sp);
window nbhdC_window(window u, int d, const space& sp);
window stepB_window_1(const window& u, const space& sp);  // 2 <= k <= n-1
window nbhdB_window(const window& u, int d, const space& sp);

// Gamma_d in any model for any space; result in the input model.
// Word inputs are handled by conjugation with the window bijection; family B
// with k = n routes every model through the k-strict cominuscule rule.
std::vector<int> nbhd(model m, const space& sp, const std::vector<int>& delta,
                      int d);

}  // namespace schub
