#pragma once

#include <vector>

#include "schub/space.hpp"

namespace schub {

// parts: weakly decreasing, fixed length k, trailing zeros explicit.
using parts = std::vector<int>;
// bits over {0,1}, length = letters, exactly k ones.
using word = std::vector<int>;
// strictly increasing letters in 1..letters, k entries; B/C additionally
// forbid both i and bar(i).
using window = std::vector<int>;

enum class model { kstrict, pprime, window, word };

const char* model_name(model m);
model parse_model(const std::string& text);  // throws parse_error

int weight(const parts& p);  // |lambda|
int ell(const parts& p);     // #{j : lambda_j > 0}
int ell1(const parts& p);    // #{j : lambda_j > 1}
bool contains(const parts& inner, const parts& outer);

bool is_partition_in_box(const parts& p, const space& sp);
bool is_kstrict(const parts& p, const space& sp);
bool is_pprime(const parts& p, const space& sp);  // families B/C only
bool is_word(const word& g, const space& sp);
bool is_window(const window& u, const space& sp);

// Throws model_error when v is not a valid element of model m for sp, or when
// the model itself is unavailable in sp's family (kstrict in type A).
void require_model(model m, const std::vector<int>& v, const space& sp);

word boundary_word(const parts& p, const space& sp);
parts word_to_partition(const word& g, const space& sp);
window word_to_window(const word& g);
word window_to_word(const window& u, const space& sp);
window kstrict_to_window(const parts& lam, const space& sp);
parts window_to_kstrict(const window& u, const space& sp);
parts kstrict_to_pprime(const parts& lam, const space& sp);
parts pprime_to_kstrict(const parts& mu, const space& sp);

// Largest m >= 0 such that bits i and bar(i) of the boundary word differ for
// all 1 <= i <= m (equivalently D(mu)(i) = D(mu^t)(i) on that prefix).
int wingtip(const parts& mu, const space& sp);

// 180-degree rotated complement in the k x (n-k) box (type A only).
// Exposed for completeness; not wired into any other operation.
parts type_a_dual(const parts& lam, const space& sp);

std::vector<int> convert(model from, model to, const std::vector<int>& v,
                         const space& sp);

// Exhaustive enumerations for sweeps; windows are lexicographic.
std::vector<window> all_windows(const space& sp);
std::vector<parts> all_partitions_in_box(const space& sp);
std::vector<parts> all_kstrict(const space& sp);
std::vector<parts> all_pprime(const space& sp);

}  // namespace schub
