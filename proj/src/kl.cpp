#include "segkl/kl.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace segkl {

void Poly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

long long Poly::at_one() const {
  long long s = 0;
  for (long long x : c) s += x;
  return s;
}

std::string Poly::str() const {
  if (c.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    if (!first) out << (c[k] > 0 ? "+" : "");
    if (k == 0) {
      out << c[k];
    } else {
      if (c[k] == -1)
        out << "-";
      else if (c[k] != 1)
        out << c[k];
      out << "q";
      if (k > 1) out << "^" << k;
    }
    first = false;
  }
  return out.str();
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t k = 0; k < r.c.size(); ++k)
    r.c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t k = 0; k < r.c.size(); ++k)
    r.c[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
  r.trim();
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}

Poly shift(const Poly& a, int k) {
  if (a.is_zero()) return a;
  Poly r;
  r.c.assign(a.c.size() + static_cast<size_t>(k), 0);
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i + static_cast<size_t>(k)] = a.c[i];
  return r;
}

const Poly& KLContext::kl(const Perm& x, const Perm& w) {
  static const Poly zero;
  if (!bruhat_leq(x, w)) return zero;
  auto key = std::make_pair(x, w);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  Poly val;
  if (x == w) {
    val = Poly::one();
  } else {
    int s = 0;
    for (int i = 1; i < n_; ++i)
      if (right_descent(w, i)) {
        s = i;
        break;
      }
    Perm si = Perm::simple(s, n_);
    Perm ws = w * si;
    Perm xs = x * si;
    if (!right_descent(x, s)) {
      // x s > x with w s < w forces P_{x,w} = P_{xs,w}
      val = kl(xs, w);
    } else {
      /* P_{x,w} = P_{xs,ws} + q P_{x,ws}
       *           - sum over x <= z <= ws with zs < z of
       *             mu(z,ws) q^{(l(w)-l(z))/2} P_{x,z}. */
      val = kl(xs, ws) + Poly::q() * kl(x, ws);
      for (const Perm& z : all_perms(n_)) {
        if (!right_descent(z, s)) continue;
        if (!bruhat_leq(x, z) || !bruhat_leq(z, ws)) continue;
        long long m = mu(z, ws);
        if (m == 0) continue;
        long e2 = w.length() - z.length();
        Poly term = shift(kl(x, z), static_cast<int>(e2 / 2));
        Poly mp(std::vector<long long>{m});
        val = val - mp * term;
      }
    }
  }
  // degree bound off the diagonal: deg P_{x,w} <= (l(w)-l(x)-1)/2
  if (!(x == w) && 2 * val.degree() > w.length() - x.length() - 1)
    throw std::logic_error("kl: degree bound violated");
  return memo_[key] = val;
}

long long KLContext::mu(const Perm& x, const Perm& w) {
  if (!bruhat_leq(x, w) || x == w) return 0;
  long d = w.length() - x.length();
  if (d % 2 == 0) return 0;
  return kl(x, w).coeff(static_cast<int>((d - 1) / 2));
}

void KLContext::save_cache(std::ostream& out) const {
  for (const auto& [key, poly] : memo_) {
    out << n_ << " " << key.first.str() << " " << key.second.str() << " :";
    if (poly.is_zero()) {
      out << " 0";
    } else {
      for (long long c : poly.c) out << " " << c;
    }
    out << "\n";
  }
}

namespace {

Perm parse_perm_code(const std::string& code, int n) {
  std::vector<int> v;
  if (code.find(',') != std::string::npos) {
    std::istringstream in(code);
    std::string tok;
    while (std::getline(in, tok, ',')) v.push_back(std::stoi(tok));
  } else {
    for (char ch : code) v.push_back(ch - '0');
  }
  if (static_cast<int>(v.size()) != n)
    throw std::invalid_argument("cache: bad permutation code " + code);
  return Perm(std::move(v));
}

}  // namespace

size_t KLContext::load_cache(std::istream& in) {
  size_t loaded = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    int n;
    std::string xs, ws, colon;
    if (!(ls >> n >> xs >> ws >> colon) || colon != ":")
      throw std::invalid_argument("cache: malformed line: " + line);
    std::vector<long long> coeffs;
    long long c;
    while (ls >> c) coeffs.push_back(c);
    if (n != n_) continue;
    Perm x = parse_perm_code(xs, n), w = parse_perm_code(ws, n);
    memo_[std::make_pair(x, w)] = Poly(std::move(coeffs));
    ++loaded;
  }
  return loaded;
}

std::map<Perm, long long> kl_basis_at_one(const ParabSet& J, int n) {
  Perm wj = longest_parabolic(J, n);
  long lj = wj.length();
  std::map<Perm, long long> out;
  for (const Perm& w : parabolic_elements(J, n))
    out[w] = ((lj - w.length()) % 2 == 0) ? 1 : -1;
  return out;
}

std::map<Perm, long long> kl_basis_at_one_via_table(const ParabSet& J, int n,
                                                    KLContext& ctx) {
  Perm wj = longest_parabolic(J, n);
  long lj = wj.length();
  std::map<Perm, long long> out;
  for (const Perm& x : all_perms(n)) {
    if (!bruhat_leq(x, wj)) continue;
    long long v = ctx.kl_at_one(x, wj);
    if (v == 0) continue;
    out[x] = (((lj - x.length()) % 2 == 0) ? 1 : -1) * v;
  }
  return out;
}

HeckeElt hecke_unit(const Perm& w) { return {{w, Poly::one()}}; }

namespace {

// h * T_s in the standard basis
HeckeElt mult_simple(const HeckeElt& h, int s, int n) {
  Perm si = Perm::simple(s, n);
  HeckeElt out;
  Poly qm1(std::vector<long long>{-1, 1});
  for (const auto& [w, p] : h) {
    if (!right_descent(w, s)) {
      Poly& slot = out[w * si];
      slot = slot + p;
    } else {
      Poly& a = out[w];
      a = a + qm1 * p;
      Poly& b = out[w * si];
      b = b + Poly::q() * p;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

HeckeElt hecke_multiply(const HeckeElt& a, const HeckeElt& b) {
  HeckeElt out;
  for (const auto& [w, pw] : b) {
    HeckeElt cur = a;
    for (int s : reduced_word(w)) cur = mult_simple(cur, s, w.n());
    for (const auto& [x, px] : cur) {
      Poly& slot = out[x];
      slot = slot + px * pw;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

std::map<Perm, long long> hecke_specialize_q1(const HeckeElt& a) {
  std::map<Perm, long long> out;
  for (const auto& [w, p] : a) {
    long long v = p.at_one();
    if (v != 0) out[w] = v;
  }
  return out;
}

}  // namespace segkl
