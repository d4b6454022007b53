#include "orbitcalc/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace orbitcalc {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, int power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, int e) {
  degree_ += e - exps_[i];
  exps_[i] = e;
}

Monomial Monomial::operator*(const Monomial& other) const {
  assert(size() == other.size());
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  assert(other.divides(*this));
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
  r.degree_ = degree_ - other.degree_;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  r.degree_ = std::accumulate(r.exps_.begin(), r.exps_.end(), 0);
  return r;
}

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end, int deg_a,
                  int deg_b) {
  if (deg_a != deg_b) return deg_a < deg_b ? -1 : 1;
  for (std::size_t i = end; i-- > begin;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

int partial_degree(const Monomial& m, std::size_t begin, std::size_t end) {
  int d = 0;
  for (std::size_t i = begin; i < end; ++i) d += m[i];
  return d;
}

}  // namespace

int compare_grevlex(const Monomial& a, const Monomial& b) {
  return grevlex_range(a, b, 0, a.size(), a.degree(), b.degree());
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::grevlex:
      return compare_grevlex(a, b);
    case Kind::lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case Kind::block: {
      const std::size_t k = std::min(block_, a.size());
      const int da = partial_degree(a, 0, k);
      const int db = partial_degree(b, 0, k);
      if (int c = grevlex_range(a, b, 0, k, da, db); c != 0) return c;
      return grevlex_range(a, b, k, a.size(), a.degree() - da, b.degree() - db);
    }
  }
  return 0;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int e : m.exponents()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  std::vector<int> e(nvars, 0);
  // Enumerate compositions recursively.
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return compare_grevlex(a, b) > 0; });
  return out;
}

}  // namespace orbitcalc
