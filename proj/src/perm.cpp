#include "segkl/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace segkl {

Perm Perm::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Perm(std::move(v));
}

Perm Perm::simple(int i, int n) {
  Perm w = identity(n);
  std::swap(w.p[i - 1], w.p[i]);
  return w;
}

Perm Perm::longest(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Perm(std::move(v));
}

Perm Perm::inverse() const {
  std::vector<int> v(p.size());
  for (int i = 0; i < n(); ++i) v[p[i] - 1] = i + 1;
  return Perm(std::move(v));
}

long Perm::length() const {
  long inv = 0;
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv;
}

std::string Perm::str() const {
  std::string s;
  for (int i = 0; i < n(); ++i) {
    if (n() > 9 && i) s += ",";
    s += std::to_string(p[i]);
  }
  return s;
}

Perm operator*(const Perm& u, const Perm& v) {
  if (u.n() != v.n()) throw std::invalid_argument("perm product: size mismatch");
  std::vector<int> w(u.n());
  for (int i = 1; i <= u.n(); ++i) w[i - 1] = u(v(i));
  return Perm(std::move(w));
}

std::vector<Rat> act(const Perm& w, const std::vector<Rat>& lam) {
  if (static_cast<int>(lam.size()) != w.n())
    throw std::invalid_argument("act: size mismatch");
  std::vector<Rat> out(lam.size());
  for (int i = 1; i <= w.n(); ++i) out[w(i) - 1] = lam[i - 1];
  return out;
}

bool right_descent(const Perm& w, int i) { return w(i) > w(i + 1); }

bool left_descent(const Perm& w, int i) {
  Perm wi = w.inverse();
  return wi(i) > wi(i + 1);
}

bool bruhat_leq(const Perm& x, const Perm& w) {
  if (x.n() != w.n()) throw std::invalid_argument("bruhat_leq: size mismatch");
  int n = x.n();
  std::vector<int> xs, ws;
  xs.reserve(n);
  ws.reserve(n);
  for (int k = 0; k < n - 1; ++k) {
    xs.insert(std::upper_bound(xs.begin(), xs.end(), x.p[k]), x.p[k]);
    ws.insert(std::upper_bound(ws.begin(), ws.end(), w.p[k]), w.p[k]);
    for (int t = 0; t <= k; ++t)
      if (xs[t] > ws[t]) return false;
  }
  return true;
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Perm> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<int> reduced_word(const Perm& w) {
  std::vector<int> word;
  Perm cur = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i < cur.n(); ++i) {
      if (right_descent(cur, i)) {
        word.push_back(i);
        cur = cur * Perm::simple(i, cur.n());
        moved = true;
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

int sign_of_length(const Perm& w) { return w.length() % 2 == 0 ? 1 : -1; }

}  // namespace segkl
