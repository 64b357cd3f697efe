#pragma once

#include <stdexcept>
#include <string>

namespace schub {

// Text that fails a grammar rule.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Well-formed text whose value violates a model or space constraint.
struct model_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A broken internal assumption or a formula/oracle disagreement; always a bug.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

enum class family { A, B, C };

// Gr(k,n) (family A), OG(k,2n+1) (family B), IG(k,2n) (family C).
// Letter conventions of the ambient Weyl group: letters = n in type A and 2n
// in types B/C, with bar(i) = letters+1-i so the order 1<...<n<nbar<...<1bar
// is plain integer order.
struct space {
  family fam = family::A;
  int n = 2;
  int k = 1;

  int letters() const { return fam == family::A ? n : 2 * n; }
  int bar(int i) const { return letters() + 1 - i; }
  int rank() const { return fam == family::A ? n - 1 : n; }
  int box_cols() const { return letters() - k; }
  bool cominuscule() const { return fam == family::A || k == n; }
  int dim() const;

  void validate() const;  // throws model_error on bad (fam, n, k)
  std::string name() const;
};

space make_space(family f, int n, int k);

// Accepts a bare family name ("Gr", "IG", "OG", "A", "B", "C") or the sugar
// forms Gr(k,n), IG(k,2n), OG(k,2n+1); the sugar fixes n and k.
struct space_spec {
  family fam;
  bool has_params = false;
  int n = 0;
  int k = 0;
};
space_spec parse_space_spec(const std::string& text);

}  // namespace schub
