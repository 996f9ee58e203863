#include "morgan/algebra.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

#include "morgan/translations.hpp"

namespace morgan {

Variety variety_from_name(std::string_view name) {
  std::string s(name);
  for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (s == "sdm") return Variety::sdm;
  if (s == "dm") return Variety::dm;
  throw std::invalid_argument("unknown variety '" + std::string(name) + "'");
}

std::string_view variety_name(Variety v) { return v == Variety::sdm ? "sdm" : "dm"; }

FiniteAlgebra::FiniteAlgebra(std::size_t size, std::vector<Element> join, std::vector<Element> meet,
                             std::vector<Element> neg, Element zero, Element one,
                             std::vector<std::string> names)
    : n_(size), join_(std::move(join)), meet_(std::move(meet)), neg_(std::move(neg)),
      zero_(zero), one_(one), names_(std::move(names)) {
  if (n_ == 0 || n_ > 64) throw std::invalid_argument("algebra size must be in 1..64");
  if (join_.size() != n_ * n_ || meet_.size() != n_ * n_ || neg_.size() != n_)
    throw std::invalid_argument("operation tables are not total over the carrier");
  auto in_range = [this](Element e) { return e < n_; };
  if (!std::all_of(join_.begin(), join_.end(), in_range) ||
      !std::all_of(meet_.begin(), meet_.end(), in_range) ||
      !std::all_of(neg_.begin(), neg_.end(), in_range) || !in_range(zero_) || !in_range(one_))
    throw std::invalid_argument("table entry outside the carrier");
  if (names_.empty()) {
    for (std::size_t i = 0; i < n_; ++i)
      names_.push_back(i == zero_ ? "0" : i == one_ ? "1" : "x" + std::to_string(i));
  }
  if (names_.size() != n_) throw std::invalid_argument("one name per element expected");
}

FiniteAlgebra FiniteAlgebra::from_order(std::size_t n, const std::vector<bool>& leq,
                                        std::vector<Element> neg, std::vector<std::string> names) {
  if (leq.size() != n * n) throw std::invalid_argument("order matrix is not n×n");
  auto le = [&](std::size_t a, std::size_t b) { return bool(leq[a * n + b]); };
  std::vector<Element> join(n * n), meet(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::optional<std::size_t> lub, glb;
      for (std::size_t c = 0; c < n; ++c) {
        if (le(a, c) && le(b, c)) {
          bool least = true;
          for (std::size_t d = 0; d < n && least; ++d)
            if (le(a, d) && le(b, d) && !le(c, d)) least = false;
          if (least) lub = c;
        }
        if (le(c, a) && le(c, b)) {
          bool greatest = true;
          for (std::size_t d = 0; d < n && greatest; ++d)
            if (le(d, a) && le(d, b) && !le(d, c)) greatest = false;
          if (greatest) glb = c;
        }
      }
      if (!lub || !glb) throw std::invalid_argument("order is not a lattice");
      join[a * n + b] = static_cast<Element>(*lub);
      meet[a * n + b] = static_cast<Element>(*glb);
    }
  std::optional<Element> zero, one;
  for (std::size_t a = 0; a < n; ++a) {
    bool bottom = true, top = true;
    for (std::size_t b = 0; b < n; ++b) {
      bottom = bottom && le(a, b);
      top = top && le(b, a);
    }
    if (bottom) zero = static_cast<Element>(a);
    if (top) one = static_cast<Element>(a);
  }
  if (!zero || !one) throw std::invalid_argument("order has no bounds");
  return FiniteAlgebra(n, std::move(join), std::move(meet), std::move(neg), *zero, *one,
                       std::move(names));
}

json FiniteAlgebra::to_json() const {
  json order = json::array();
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      if (a != b && leq(static_cast<Element>(a), static_cast<Element>(b))) order.push_back({a, b});
  return {{"schema", kAlgebraSchema}, {"size", n_}, {"names", names_},
          {"order", std::move(order)}, {"neg", neg_}};
}

FiniteAlgebra FiniteAlgebra::from_json(const json& j) {
  if (j.contains("schema") && j.at("schema") != kAlgebraSchema)
    throw std::invalid_argument("unsupported algebra schema " + j.at("schema").dump());
  std::size_t n = j.at("size").get<std::size_t>();
  std::vector<bool> leq(n * n, false);
  for (std::size_t a = 0; a < n; ++a) leq[a * n + a] = true;
  for (const auto& pr : j.at("order")) {
    std::size_t a = pr.at(0).get<std::size_t>(), b = pr.at(1).get<std::size_t>();
    if (a >= n || b >= n) throw std::invalid_argument("order pair outside the carrier");
    leq[a * n + b] = true;
  }
  std::vector<std::string> names;
  if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
  return from_order(n, leq, j.at("neg").get<std::vector<Element>>(), std::move(names));
}

std::optional<std::string> variety_violation(const FiniteAlgebra& A, Variety v) {
  const auto n = static_cast<Element>(A.size());
  auto at = [&](const char* what, std::initializer_list<Element> xs) {
    std::string s = std::string(what) + " fails at (";
    bool first = true;
    for (Element x : xs) {
      if (!first) s += ", ";
      s += A.name(x);
      first = false;
    }
    return s + ")";
  };
  const Element O = A.zero(), I = A.one();
  for (Element a = 0; a < n; ++a) {
    if (A.join(a, a) != a || A.meet(a, a) != a) return at("idempotence", {a});
    if (A.meet(O, a) != O || A.join(O, a) != a || A.join(I, a) != I || A.meet(I, a) != a)
      return at("bounds", {a});
    for (Element b = 0; b < n; ++b) {
      if (A.join(a, b) != A.join(b, a) || A.meet(a, b) != A.meet(b, a)) return at("commutativity", {a, b});
      if (A.join(a, A.meet(a, b)) != a || A.meet(a, A.join(a, b)) != a) return at("absorption", {a, b});
      for (Element c = 0; c < n; ++c) {
        if (A.join(a, A.join(b, c)) != A.join(A.join(a, b), c) ||
            A.meet(a, A.meet(b, c)) != A.meet(A.meet(a, b), c))
          return at("associativity", {a, b, c});
        if (A.meet(a, A.join(b, c)) != A.join(A.meet(a, b), A.meet(a, c)))
          return at("distributivity", {a, b, c});
      }
    }
  }
  auto N = [&](Element x) { return A.neg(x); };
  if (N(O) != I) return std::string("~0 = 1 fails");
  if (N(I) != O) return std::string("~1 = 0 fails");
  for (Element a = 0; a < n; ++a) {
    if (N(N(N(a))) != N(a)) return at("~~~a = ~a", {a});
    if (v == Variety::dm && N(N(a)) != a) return at("~~a = a", {a});
    for (Element b = 0; b < n; ++b) {
      if (N(A.join(a, b)) != A.meet(N(a), N(b))) return at("~(a|b) = ~a&~b", {a, b});
      if (N(N(A.meet(a, b))) != A.meet(N(N(a)), N(N(b)))) return at("~~(a&b) = ~~a&~~b", {a, b});
      if (v == Variety::dm) {
        if (N(A.meet(a, b)) != A.join(N(a), N(b))) return at("~(a&b) = ~a|~b", {a, b});
        if (A.join(a, b) != N(A.meet(N(a), N(b)))) return at("a|b = ~(~a&~b)", {a, b});
      }
    }
  }
  return std::nullopt;
}

bool check_variety(const FiniteAlgebra& alg, Variety v) { return !variety_violation(alg, v); }

FiniteAlgebra dm4() {
  // The diamond 0 < a, b < 1 with a, b incomparable.
  std::vector<bool> leq(16, false);
  for (int i = 0; i < 4; ++i) {
    leq[i * 4 + i] = true;
    leq[0 * 4 + i] = true;
    leq[i * 4 + 3] = true;
  }
  return FiniteAlgebra::from_order(4, leq, {3, 1, 2, 0}, {"0", "a", "b", "1"});
}

namespace {

using FastAssignment = std::vector<std::pair<Term, Element>>;

Element eval(const Term& t, const FastAssignment& sigma, const FiniteAlgebra& A) {
  switch (t.op()) {
    case Op::var:
      for (const auto& [v, e] : sigma)
        if (v == t) return e;
      throw std::invalid_argument("no value assigned to variable");
    case Op::bottom: return A.zero();
    case Op::neg: return A.neg(eval(t.arg(), sigma, A));
    case Op::conj: return A.meet(eval(t.left(), sigma, A), eval(t.right(), sigma, A));
    case Op::disj: return A.join(eval(t.left(), sigma, A), eval(t.right(), sigma, A));
    case Op::imp: break;
  }
  throw std::invalid_argument("algebras interpret SDM/DM terms only");
}

}  // namespace

Element evaluate(const Term& phi, const Assignment& sigma, const FiniteAlgebra& alg) {
  FastAssignment fast(sigma.begin(), sigma.end());
  for (const auto& [v, e] : fast)
    if (e >= alg.size()) throw std::invalid_argument("assigned value outside the carrier");
  return eval(phi, fast, alg);
}

std::optional<Assignment> counter_assignment(const Sequent& s, const FiniteAlgebra& alg) {
  if (s.calculus() != Calculus::sdm && s.calculus() != Calculus::dm)
    throw std::invalid_argument("validity is defined for SDM/DM sequents");
  const Term lhs = flatten(std::span<const Structure>(s.antecedent()));
  const Term rhs = flatten(s.succedent());
  VarSet vs = vars(s);
  FastAssignment sigma;
  for (const auto& v : vs) sigma.emplace_back(v, Element{0});
  const auto n = static_cast<Element>(alg.size());
  while (true) {
    if (!alg.leq(eval(lhs, sigma, alg), eval(rhs, sigma, alg)))
      return Assignment(sigma.begin(), sigma.end());
    std::size_t i = 0;
    for (; i < sigma.size(); ++i) {
      if (++sigma[i].second < n) break;
      sigma[i].second = 0;
    }
    if (i == sigma.size()) return std::nullopt;
  }
}

bool valid(const Sequent& s, const FiniteAlgebra& alg) { return !counter_assignment(s, alg); }

namespace {

// Bounded distributive lattices on {0..n-1}, 0 the bottom and n-1 the top,
// as order matrices, one per isomorphism class.
std::vector<std::vector<bool>> lattice_orders(std::size_t n) {
  const std::size_t k = n - 2;  // interior elements 1..n-2
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = i + 1; j <= k; ++j) pairs.emplace_back(i, j);
  std::size_t combos = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) combos *= 3;

  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 1);
  std::set<std::vector<bool>> seen;
  std::vector<std::vector<bool>> out;

  for (std::size_t code = 0; code < combos; ++code) {
    std::vector<bool> le(n * n, false);
    for (std::size_t a = 0; a < n; ++a) {
      le[a * n + a] = true;
      le[0 * n + a] = true;
      le[a * n + (n - 1)] = true;
    }
    std::size_t c = code;
    for (const auto& [i, j] : pairs) {
      std::size_t r = c % 3;
      c /= 3;
      if (r == 1) le[i * n + j] = true;
      if (r == 2) le[j * n + i] = true;
    }
    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a)
      for (std::size_t b = 0; b < n && transitive; ++b)
        for (std::size_t d = 0; d < n && transitive; ++d)
          if (le[a * n + b] && le[b * n + d] && !le[a * n + d]) transitive = false;
    if (!transitive) continue;
    std::vector<Element> neg(n, 0);
    try {
      FiniteAlgebra lat = FiniteAlgebra::from_order(n, le, neg);
      bool distributive = true;
      for (Element a = 0; a < n && distributive; ++a)
        for (Element b = 0; b < n && distributive; ++b)
          for (Element d = 0; d < n && distributive; ++d)
            if (lat.meet(a, lat.join(b, d)) != lat.join(lat.meet(a, b), lat.meet(a, d)))
              distributive = false;
      if (!distributive) continue;
    } catch (const std::invalid_argument&) {
      continue;
    }
    // Canonical form over interior relabelings.
    std::vector<bool> best;
    std::sort(perm.begin(), perm.end());
    do {
      std::vector<std::size_t> map(n);
      map[0] = 0;
      map[n - 1] = n - 1;
      for (std::size_t i = 0; i < k; ++i) map[i + 1] = perm[i];
      std::vector<bool> img(n * n, false);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) img[map[a] * n + map[b]] = le[a * n + b];
      if (best.empty() || img < best) best = img;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (seen.insert(best).second) out.push_back(best);
  }
  return out;
}

std::vector<FiniteAlgebra> algebras_of_size(Variety v, std::size_t n) {
  std::vector<FiniteAlgebra> out;
  if (n < 2) return out;
  const std::size_t k = n - 2;
  std::vector<std::size_t> perm(k);
  for (const auto& le : lattice_orders(n)) {
    std::set<std::vector<int>> seen;
    std::size_t tables = 1;
    for (std::size_t i = 0; i < k; ++i) tables *= n;
    for (std::size_t code = 0; code < tables; ++code) {
      std::vector<Element> neg(n);
      neg[0] = static_cast<Element>(n - 1);
      neg[n - 1] = 0;
      std::size_t c = code;
      for (std::size_t i = 1; i <= k; ++i) {
        neg[i] = static_cast<Element>(c % n);
        c /= n;
      }
      FiniteAlgebra alg = FiniteAlgebra::from_order(n, le, neg);
      if (!check_variety(alg, v)) continue;
      // Isomorphism classes: relabel interior points, keep the least encoding.
      std::iota(perm.begin(), perm.end(), 1);
      std::vector<int> best;
      do {
        std::vector<std::size_t> map(n);
        map[0] = 0;
        map[n - 1] = n - 1;
        for (std::size_t i = 0; i < k; ++i) map[i + 1] = perm[i];
        std::vector<int> img(n * n + n, 0);
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) img[map[a] * n + map[b]] = le[a * n + b];
          img[n * n + map[a]] = static_cast<int>(map[neg[a]]);
        }
        if (best.empty() || img < best) best = img;
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (seen.insert(best).second) out.push_back(std::move(alg));
    }
  }
  return out;
}

}  // namespace

const std::vector<FiniteAlgebra>& enumerate_algebras(Variety v, std::size_t max_size) {
  if (max_size < 2 || max_size > 6) throw std::invalid_argument("max_size must be in 2..6");
  static std::mutex mu;
  static std::array<std::vector<std::vector<FiniteAlgebra>>, 2> by_size;  // [variety][n]
  static std::array<std::array<std::vector<FiniteAlgebra>, 7>, 2> prefix;
  static std::array<std::array<bool, 7>, 2> ready{};
  std::lock_guard lock(mu);
  auto vi = static_cast<std::size_t>(v);
  if (!ready[vi][max_size]) {
    auto& sizes = by_size[vi];
    while (sizes.size() <= max_size) sizes.push_back(algebras_of_size(v, sizes.size()));
    auto& list = prefix[vi][max_size];
    for (std::size_t n = 2; n <= max_size; ++n) list.insert(list.end(), sizes[n].begin(), sizes[n].end());
    ready[vi][max_size] = true;
  }
  return prefix[vi][max_size];
}

std::optional<CounterWitness> refute(const Sequent& s, Variety v, std::size_t max_size) {
  for (const auto& alg : enumerate_algebras(v, max_size))
    if (auto sigma = counter_assignment(s, alg)) return CounterWitness{alg, *sigma};
  return std::nullopt;
}

json to_json(const Assignment& sigma, const FiniteAlgebra& alg) {
  json j = json::object();
  for (const auto& [v, e] : sigma) j[v.name()] = alg.name(e);
  return j;
}

}  // namespace morgan
