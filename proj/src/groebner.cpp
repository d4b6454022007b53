#include "orbitcalc/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "orbitcalc/error.hpp"

namespace orbitcalc {

namespace {

struct Descending {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->compare(a, b) > 0; }
};

using TermList = std::vector<Term>;
using WorkMap = std::map<Monomial, Rational, Descending>;

TermList sorted_terms(const Polynomial& p, const MonomialOrder& order) {
  TermList t = p.terms();
  if (order.kind() != MonomialOrder::Kind::grevlex) {
    std::sort(t.begin(), t.end(),
              [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  }
  return t;
}

void make_monic(TermList& t) {
  if (t.empty() || t.front().coeff == 1) return;
  const Rational inv = 1 / t.front().coeff;
  for (auto& term : t) term.coeff *= inv;
}

// Adds c * m * g to `work`.
void add_multiple(WorkMap& work, const TermList& g, const Monomial& m, const Rational& c) {
  for (const auto& t : g) {
    Monomial mono = t.mono * m;
    auto [it, inserted] = work.try_emplace(std::move(mono), c * t.coeff);
    if (!inserted) {
      it->second += c * t.coeff;
      if (it->second == 0) work.erase(it);
    }
  }
}

// Full reduction of f by monic divisors; returns the remainder sorted
// descending under `order`.
TermList reduce(const TermList& f, const std::vector<const TermList*>& divisors, const MonomialOrder& order,
                const DivisorChooser* choose) {
  WorkMap work(Descending{&order});
  for (const auto& t : f) work.emplace(t.mono, t.coeff);
  TermList rem;
  std::vector<std::size_t> candidates;
  while (!work.empty()) {
    auto it = work.begin();
    candidates.clear();
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (divisors[i]->front().mono.divides(it->first)) {
        candidates.push_back(i);
        if (!choose) break;
      }
    }
    if (candidates.empty()) {
      rem.push_back({it->first, it->second});
      work.erase(it);
      continue;
    }
    const std::size_t pick = choose ? candidates[(*choose)(candidates)] : candidates.front();
    const TermList& g = *divisors[pick];
    const Monomial m = it->first / g.front().mono;
    const Rational c = -it->second;
    add_multiple(work, g, m, c);
  }
  return rem;
}

Polynomial to_polynomial(const Ring& ring, TermList t) { return Polynomial::from_terms(ring, std::move(t)); }

struct Element {
  TermList poly;
  int sugar;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  int sugar;
};

int max_degree(const TermList& t) {
  int d = 0;
  for (const auto& term : t) d = std::max(d, term.mono.degree());
  return d;
}

TermList s_polynomial(const TermList& f, const TermList& g, const Monomial& lcm, const MonomialOrder& order) {
  WorkMap work(Descending{&order});
  add_multiple(work, f, lcm / f.front().mono, 1);
  add_multiple(work, g, lcm / g.front().mono, -1);
  TermList out;
  out.reserve(work.size());
  for (auto& [m, c] : work) out.push_back({m, c});
  return out;
}

}  // namespace

GroebnerBasis::GroebnerBasis(Ring ring, MonomialOrder order, std::vector<Polynomial> gens, bool reduced)
    : ring_(ring), order_(order), gens_(std::move(gens)), reduced_(reduced) {
  for (const auto& g : gens_) {
    check_same_ring(ring_, g.ring());
    if (g.is_zero()) throw MathError("GroebnerBasis: zero generator");
    leading_.push_back(leading_term(g, order_).mono);
  }
}

bool GroebnerBasis::is_unit_ideal() const {
  return std::any_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_constant(); });
}

Term leading_term(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) throw MathError("leading_term of zero polynomial");
  const Term* best = &p.terms().front();
  if (order.kind() != MonomialOrder::Kind::grevlex) {
    for (const auto& t : p.terms())
      if (order.compare(t.mono, best->mono) > 0) best = &t;
  }
  return *best;
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order, std::stop_token stop) {
  if (gens.empty()) throw MathError("buchberger: cannot infer ring of an empty generator list");
  return buchberger(gens, order, gens.front().ring(), stop);
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order, Ring ring,
                         std::stop_token stop) {
  std::vector<Element> basis;
  for (const auto& g : gens) {
    check_same_ring(ring, g.ring());
    if (g.is_zero()) continue;
    TermList t = sorted_terms(g, order);
    make_monic(t);
    const int sugar = max_degree(t);
    basis.push_back({std::move(t), sugar});
  }

  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_keys;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Monomial& a = basis[i].poly.front().mono;
      const Monomial& b = basis[j].poly.front().mono;
      Monomial l = a.lcm(b);
      const int sugar =
          std::max(basis[i].sugar + (l.degree() - a.degree()), basis[j].sugar + (l.degree() - b.degree()));
      pending.push_back({i, j, std::move(l), sugar});
      pending_keys.emplace(i, j);
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending_keys.count({std::min(a, b), std::max(a, b)}) != 0;
  };

  while (!pending.empty()) {
    if (stop.stop_requested()) throw Cancelled();
    // Sugar strategy: smallest sugar, ties by smallest lcm.
    auto best = std::min_element(pending.begin(), pending.end(), [&](const Pair& p, const Pair& q) {
      if (p.sugar != q.sugar) return p.sugar < q.sugar;
      const int c = order.compare(p.lcm, q.lcm);
      if (c != 0) return c < 0;
      return std::tie(p.j, p.i) < std::tie(q.j, q.i);
    });
    Pair pair = std::move(*best);
    *best = std::move(pending.back());
    pending.pop_back();
    pending_keys.erase({pair.i, pair.j});

    const Monomial& lm_i = basis[pair.i].poly.front().mono;
    const Monomial& lm_j = basis[pair.j].poly.front().mono;
    if (lm_i.coprime(lm_j)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (basis[k].poly.front().mono.divides(pair.lcm) && !is_pending(pair.i, k) && !is_pending(pair.j, k))
        chain = true;
    }
    if (chain) continue;

    TermList s = s_polynomial(basis[pair.i].poly, basis[pair.j].poly, pair.lcm, order);
    std::vector<const TermList*> divisors;
    divisors.reserve(basis.size());
    for (const auto& e : basis) divisors.push_back(&e.poly);
    TermList r = reduce(s, divisors, order, nullptr);
    if (r.empty()) continue;
    make_monic(r);
    basis.push_back({std::move(r), pair.sugar});
    add_pairs_for(basis.size() - 1);
  }

  // Minimalise: drop elements whose leading monomial is a multiple of
  // another's (keeping the earliest among equal leading monomials).
  std::vector<const TermList*> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Monomial& mi = basis[i].poly.front().mono;
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& mj = basis[j].poly.front().mono;
      if (mj.divides(mi) && (!(mj == mi) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(&basis[i].poly);
  }

  // Inter-reduce.
  std::vector<TermList> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<const TermList*> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    TermList head{minimal[i]->front()};
    TermList tail(minimal[i]->begin() + 1, minimal[i]->end());
    TermList rt = reduce(tail, others, order, nullptr);
    head.insert(head.end(), rt.begin(), rt.end());
    reduced.push_back(std::move(head));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const TermList& a, const TermList& b) {
    return order.compare(a.front().mono, b.front().mono) < 0;
  });

  std::vector<Polynomial> out;
  out.reserve(reduced.size());
  for (auto& t : reduced) out.push_back(to_polynomial(ring, std::move(t)));
  return GroebnerBasis(ring, order, std::move(out), true);
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  return normal_form(p, gb, DivisorChooser{});
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb, const DivisorChooser& choose) {
  check_same_ring(p.ring(), gb.ring());
  if (p.is_zero() || gb.is_zero_ideal()) return p;
  std::vector<TermList> storage;
  storage.reserve(gb.generators().size());
  for (const auto& g : gb.generators()) {
    TermList t = sorted_terms(g, gb.order());
    make_monic(t);
    storage.push_back(std::move(t));
  }
  std::vector<const TermList*> divisors;
  for (const auto& t : storage) divisors.push_back(&t);
  TermList rem = reduce(sorted_terms(p, gb.order()), divisors, gb.order(), choose ? &choose : nullptr);
  return to_polynomial(p.ring(), std::move(rem));
}

bool ideal_member(const Polynomial& p, const GroebnerBasis& gb) { return normal_form(p, gb).is_zero(); }

GroebnerBasis eliminate(std::span<const Polynomial> gens, Ring combined, std::stop_token stop) {
  if (combined.alphabet != Alphabet::xy) throw MathError("eliminate: generators must live in the combined x,y ring");
  const Ring yring = Ring::y(combined.nvars - combined.split);
  GroebnerBasis full = buchberger(gens, MonomialOrder::block(combined.split), combined, stop);
  std::vector<Polynomial> kept;
  for (const auto& g : full.generators())
    if (uses_only(g, combined.split, combined.nvars)) kept.push_back(restrict(g, yring, combined.split));
  return GroebnerBasis(yring, MonomialOrder::grevlex(), std::move(kept), true);
}

namespace {

// Rank-R vectors over Q[y] encoded as polynomials linear in tag variables
// e1..eR. With the block order (e-block first, grevlex), tags compare as
// e1 > e2 > ... ahead of any y-monomial, i.e. position-over-term.
class ModuleEncoding {
 public:
  ModuleEncoding(std::size_t positions, Ring yring)
      : positions_(positions), yring_(yring), ring_(Ring::tagged(positions, yring.nvars)) {}

  const Ring& ring() const { return ring_; }
  MonomialOrder order() const { return MonomialOrder::block(positions_); }

  Polynomial encode(const PolyVector& v, std::size_t offset) const {
    Polynomial out(ring_);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].is_zero()) continue;
      check_same_ring(yring_, v[i].ring());
      out += embed(v[i], ring_, positions_) * tag(offset + i);
    }
    return out;
  }

  Polynomial tag(std::size_t position) const { return Polynomial::variable(ring_, position); }

  // Entries [begin, begin + count) of the vector encoded by p.
  PolyVector decode(const Polynomial& p, std::size_t begin, std::size_t count) const {
    std::vector<std::vector<Term>> parts(count);
    for (const auto& t : p.terms()) {
      std::size_t pos = positions_;
      for (std::size_t i = 0; i < positions_; ++i) {
        if (t.mono[i] != 0) {
          if (t.mono[i] != 1 || pos != positions_) throw MathError("module encoding: term is not linear in tags");
          pos = i;
        }
      }
      if (pos == positions_) throw MathError("module encoding: term carries no position tag");
      if (pos < begin || pos >= begin + count) continue;
      Monomial m(yring_.nvars);
      for (std::size_t k = 0; k < yring_.nvars; ++k) m.set(k, t.mono[positions_ + k]);
      parts[pos - begin].push_back({std::move(m), t.coeff});
    }
    PolyVector out;
    out.reserve(count);
    for (auto& part : parts) out.push_back(Polynomial::from_terms(yring_, std::move(part)));
    return out;
  }

  // First tag position carried by the leading term of p.
  std::size_t leading_position(const Polynomial& p) const {
    const Term lt = leading_term(p, order());
    for (std::size_t i = 0; i < positions_; ++i)
      if (lt.mono[i] != 0) return i;
    return positions_;
  }

 private:
  std::size_t positions_;
  Ring yring_;
  Ring ring_;
};

// Groebner basis of the module generated by (column_k, eps_k), the ideal
// padding in every position, and the products e_a*e_b that keep the
// encoding linear in tags.
GroebnerBasis augmented_basis(const ModuleEncoding& enc, std::size_t rank, std::span<const PolyVector> columns,
                              const GroebnerBasis& ideal, std::stop_token stop) {
  const std::size_t positions = rank + columns.size();
  std::vector<Polynomial> gens;
  for (std::size_t k = 0; k < columns.size(); ++k) {
    if (columns[k].size() != rank) throw MathError("module: column " + std::to_string(k + 1) + " has wrong rank");
    gens.push_back(enc.encode(columns[k], 0) + enc.tag(rank + k));
  }
  for (std::size_t pos = 0; pos < positions; ++pos)
    for (const auto& g : ideal.generators()) gens.push_back(embed(g, enc.ring(), positions) * enc.tag(pos));
  for (std::size_t a = 0; a < positions; ++a)
    for (std::size_t b = a; b < positions; ++b) gens.push_back(enc.tag(a) * enc.tag(b));
  return buchberger(gens, enc.order(), enc.ring(), stop);
}

bool all_zero(const PolyVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Polynomial& p) { return p.is_zero(); });
}

bool in_ideal_power(const PolyVector& v, const GroebnerBasis& ideal) {
  return std::all_of(v.begin(), v.end(), [&](const Polynomial& p) { return ideal_member(p, ideal); });
}

}  // namespace

ModuleResult module_solve(const PolyVector& target, const SubmoduleProblem& problem, std::stop_token stop) {
  const std::size_t rank = problem.ambient_rank;
  if (target.size() != rank)
    throw MathError("module_solve: rank mismatch (target has " + std::to_string(target.size()) + ", expected " +
                    std::to_string(rank) + ")");
  const Ring yring = problem.ideal_padding.ring();
  const std::size_t n_cols = problem.columns.size();
  ModuleEncoding enc(rank + n_cols, yring);
  GroebnerBasis gb = augmented_basis(enc, rank, problem.columns, problem.ideal_padding, stop);
  const Polynomial nf = normal_form(enc.encode(target, 0), gb);
  PolyVector head = enc.decode(nf, 0, rank);
  if (!all_zero(head)) return NotMember{std::move(head)};

  ModuleWitness w;
  for (auto& c : enc.decode(nf, rank, n_cols)) w.coefficients.push_back(-c);
  w.ideal_part = target;
  for (std::size_t k = 0; k < n_cols; ++k)
    for (std::size_t i = 0; i < rank; ++i) w.ideal_part[i] -= w.coefficients[k] * problem.columns[k][i];
  if (!in_ideal_power(w.ideal_part, problem.ideal_padding))
    throw MathError("module_solve: internal error, witness does not reconstruct the target");
  return w;
}

std::vector<PolyVector> syzygies(std::span<const PolyVector> columns, const GroebnerBasis& ideal,
                                 std::stop_token stop) {
  if (columns.empty()) return {};
  const std::size_t rank = columns.front().size();
  ModuleEncoding enc(rank + columns.size(), ideal.ring());
  GroebnerBasis gb = augmented_basis(enc, rank, columns, ideal, stop);
  std::vector<PolyVector> out;
  for (const auto& g : gb.generators()) {
    if (g.total_degree() >= 0 && enc.leading_position(g) < rank) continue;
    // Drop the e_a*e_b helpers (not linear in tags).
    const Term lt = leading_term(g, enc.order());
    int tag_degree = 0;
    for (std::size_t i = 0; i < rank + columns.size(); ++i) tag_degree += lt.mono[i];
    if (tag_degree != 1) continue;
    PolyVector syz = enc.decode(g, rank, columns.size());
    if (in_ideal_power(syz, ideal)) continue;
    PolyVector check(rank, Polynomial(ideal.ring()));
    for (std::size_t k = 0; k < columns.size(); ++k)
      for (std::size_t i = 0; i < rank; ++i) check[i] += syz[k] * columns[k][i];
    if (!in_ideal_power(check, ideal)) throw MathError("syzygies: internal error, relation does not hold");
    out.push_back(std::move(syz));
  }
  return out;
}

}  // namespace orbitcalc
