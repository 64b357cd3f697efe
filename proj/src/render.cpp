#include "schub/render.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace schub {

namespace {

std::vector<int> split_ints(const std::string& text, const char* what) {
  std::vector<int> out;
  size_t pos = 0;
  bool any = false;
  for (const char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) any = true;
  if (!any) return out;  // blank input: the empty tuple
  while (true) {
    size_t comma = text.find(',', pos);
    std::string tok = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    size_t b = 0, e = tok.size();
    while (b < e && std::isspace(static_cast<unsigned char>(tok[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(tok[e - 1]))) --e;
    tok = tok.substr(b, e - b);
    if (tok.empty())
      throw parse_error(std::string(what) + ": empty entry in '" + text + "'");
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw parse_error(std::string(what) + ": '" + tok +
                        "' is not an integer");
    }
    if (used != tok.size())
      throw parse_error(std::string(what) + ": '" + tok +
                        "' is not an integer");
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

parts parse_parts(const std::string& text, const space& sp) {
  std::vector<int> vals = split_ints(text, "partition");
  if (int(vals.size()) > sp.k)
    throw model_error("partition has " + std::to_string(vals.size()) +
                      " parts but k = " + std::to_string(sp.k));
  vals.resize(sp.k, 0);
  return vals;
}

window parse_window(const std::string& text, const space& sp) {
  std::vector<int> vals = split_ints(text, "window");
  window u;
  u.reserve(vals.size());
  for (int v : vals) {
    if (v == 0)
      throw model_error("window letters are 1..n or their negatives, not 0");
    u.push_back(v > 0 ? v : sp.bar(-v));
  }
  std::sort(u.begin(), u.end());
  return u;
}

word parse_word(const std::string& text) {
  word g;
  g.reserve(text.size());
  for (const char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c != '0' && c != '1')
      throw parse_error(std::string("word: unexpected character '") + c +
                        "' (expected 0 or 1)");
    g.push_back(c - '0');
  }
  return g;
}

std::vector<int> parse_payload(model m, const std::string& text,
                               const space& sp) {
  switch (m) {
    case model::kstrict:
    case model::pprime: return parse_parts(text, sp);
    case model::window: return parse_window(text, sp);
    case model::word: return parse_word(text);
  }
  throw internal_error("bad model");
}

std::string parts_to_string(const parts& p) {
  std::string out;
  for (size_t j = 0; j < p.size(); ++j) {
    if (j) out.push_back(',');
    out += std::to_string(p[j]);
  }
  return out;
}

std::string window_to_string(const window& u, const space& sp) {
  std::string out;
  for (size_t j = 0; j < u.size(); ++j) {
    if (j) out.push_back(',');
    out += u[j] <= sp.n ? std::to_string(u[j])
                        : "-" + std::to_string(sp.bar(u[j]));
  }
  return out;
}

std::string word_to_string(const word& g) {
  std::string out;
  out.reserve(g.size());
  for (int b : g) out.push_back(char('0' + b));
  return out;
}

std::string payload_to_string(model m, const std::vector<int>& v,
                              const space& sp) {
  switch (m) {
    case model::kstrict:
    case model::pprime: return parts_to_string(v);
    case model::window: return window_to_string(v, sp);
    case model::word: return word_to_string(v);
  }
  throw internal_error("bad model");
}

std::string ascii_diagram(const parts& p) {
  std::string out;
  for (int x : p)
    if (x > 0) {
      out.append(size_t(x), '#');
      out.push_back('\n');
    }
  if (out.empty()) return "(empty)\n";
  return out;
}

}  // namespace schub
