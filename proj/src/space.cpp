#include "schub/space.hpp"

#include <cctype>

namespace schub {

int space::dim() const {
  if (fam == family::A) return k * (n - k);
  return 2 * k * (n - k) + k * (k + 1) / 2;
}

void space::validate() const {
  if (fam == family::A) {
    if (n < 2 || k < 1 || k > n - 1)
      throw model_error("Gr(k,n) needs 1 <= k <= n-1, n >= 2; got " + name());
  } else {
    if (n < 1 || k < 1 || k > n)
      throw model_error("IG/OG need 1 <= k <= n; got " + name());
  }
}

std::string space::name() const {
  switch (fam) {
    case family::A:
      return "Gr(" + std::to_string(k) + "," + std::to_string(n) + ")";
    case family::B:
      return "OG(" + std::to_string(k) + "," + std::to_string(2 * n + 1) + ")";
    case family::C:
      return "IG(" + std::to_string(k) + "," + std::to_string(2 * n) + ")";
  }
  return "?";
}

space make_space(family f, int n, int k) {
  space sp{f, n, k};
  sp.validate();
  return sp;
}

namespace {

// "IG(5,16)" -> family C with k=5, ambient dimension 16 (so n=8).
space_spec parse_sugar(family f, const std::string& text, size_t open) {
  size_t comma = text.find(',', open);
  size_t close = text.find(')', open);
  if (comma == std::string::npos || close == std::string::npos || close < comma)
    throw parse_error("space: expected NAME(k,N): " + text);
  int k = 0, N = 0;
  try {
    k = std::stoi(text.substr(open + 1, comma - open - 1));
    N = std::stoi(text.substr(comma + 1, close - comma - 1));
  } catch (const std::exception&) {
    throw parse_error("space: bad integer in " + text);
  }
  space_spec s{f, true, 0, k};
  switch (f) {
    case family::A:
      s.n = N;
      break;
    case family::C:
      if (N % 2 != 0) throw parse_error("IG(k,N) needs even N: " + text);
      s.n = N / 2;
      break;
    case family::B:
      if (N % 2 != 1) throw parse_error("OG(k,N) needs odd N: " + text);
      s.n = (N - 1) / 2;
      break;
  }
  return s;
}

}  // namespace

space_spec parse_space_spec(const std::string& text) {
  std::string head;
  size_t i = 0;
  while (i < text.size() && text[i] != '(') head += text[i++];
  family f;
  if (head == "Gr" || head == "gr" || head == "GR" || head == "A")
    f = family::A;
  else if (head == "OG" || head == "og" || head == "B")
    f = family::B;
  else if (head == "IG" || head == "ig" || head == "C")
    f = family::C;
  else
    throw parse_error("space: unknown family '" + head +
                      "' (expected Gr, IG, or OG)");
  if (i < text.size()) return parse_sugar(f, text, i);
  return space_spec{f, false, 0, 0};
}

}  // namespace schub
