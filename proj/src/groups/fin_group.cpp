#include "vatwist/groups/fin_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "vatwist/error.hpp"
#include "vatwist/kernels/parallel.hpp"

namespace vatwist {
namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::InvalidGroup, what); }

}  // namespace

FinGroup FinGroup::from_table(std::size_t order, std::vector<std::int32_t> table, std::vector<std::string> labels) {
  if (order == 0) fail("group of order 0");
  if (table.size() != order * order) fail("multiplication table has wrong size");
  for (auto v : table)
    if (v < 0 || static_cast<std::size_t>(v) >= order) fail("table entry out of range");
  if (!labels.empty() && labels.size() != order) fail("label count differs from order");
  FinGroup g;
  g.order_ = order;
  g.table_ = std::move(table);
  g.labels_ = std::move(labels);
  g.finish();
  return g;
}

void FinGroup::finish() {
  const std::size_t n = order_;
  // Identity: the unique e with e*x = x for all x.
  std::optional<int> ident;
  for (std::size_t e = 0; e < n && !ident; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = mul(static_cast<int>(e), static_cast<int>(x)) == static_cast<int>(x) &&
           mul(static_cast<int>(x), static_cast<int>(e)) == static_cast<int>(x);
    if (ok) ident = static_cast<int>(e);
  }
  if (!ident) fail("no two-sided identity in table");
  id_ = *ident;
  inv_.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (mul(static_cast<int>(a), static_cast<int>(b)) == id_) {
        inv_[a] = static_cast<int>(b);
        break;
      }
    if (inv_[a] < 0 || mul(inv_[a], static_cast<int>(a)) != id_) fail("element without two-sided inverse");
  }
  auto violates = [&](std::size_t a, std::size_t b, std::size_t c) {
    const int ia = static_cast<int>(a), ib = static_cast<int>(b), ic = static_cast<int>(c);
    return mul(mul(ia, ib), ic) != mul(ia, mul(ib, ic));
  };
  if (n <= kExhaustiveCheckOrder) {
    auto bad = kernels::find_first(n, [&](std::size_t a) {
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (violates(a, b, c)) return true;
      return false;
    });
    if (bad) fail("multiplication table is not associative");
  } else {
    std::mt19937_64 rng(n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t k = 0; k < kSampledTriples; ++k)
      if (violates(pick(rng), pick(rng), pick(rng))) fail("multiplication table is not associative (sampled)");
  }
  // Greedy generating set.
  generators_.clear();
  std::vector<char> covered(n, 0);
  covered[static_cast<std::size_t>(id_)] = 1;
  std::vector<int> current{id_};
  for (std::size_t x = 0; x < n; ++x) {
    if (covered[x]) continue;
    generators_.push_back(static_cast<int>(x));
    current = generated_subgroup(generators_);
    for (int y : current) covered[static_cast<std::size_t>(y)] = 1;
  }
}

FinGroup FinGroup::from_permutations(const std::vector<std::vector<int>>& generators, std::size_t max_order) {
  if (generators.empty()) return trivial();
  const std::size_t degree = generators.front().size();
  for (const auto& g : generators) {
    if (g.size() != degree) fail("permutation generators of different degree");
    std::vector<int> sorted = g;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < degree; ++i)
      if (sorted[i] != static_cast<int>(i)) fail("generator is not a permutation");
  }
  auto compose = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) out[x] = a[static_cast<std::size_t>(b[x])];
    return out;
  };
  std::vector<int> identity(degree);
  std::iota(identity.begin(), identity.end(), 0);
  std::map<std::vector<int>, int> index{{identity, 0}};
  std::vector<std::vector<int>> elements{identity};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : generators) {
      auto next = compose(elements[head], g);
      if (index.emplace(next, static_cast<int>(elements.size())).second) {
        elements.push_back(std::move(next));
        if (elements.size() > max_order)
          throw Error(ErrorKind::ResourceBound, "permutation group exceeds order cap " + std::to_string(max_order));
      }
    }
  }
  const std::size_t n = elements.size();
  std::vector<std::int32_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(compose(elements[a], elements[b]));
  FinGroup g = from_table(n, std::move(table));
  // Keep the user's generators rather than the greedy ones.
  g.generators_.clear();
  for (const auto& gen : generators) g.generators_.push_back(index.at(gen));
  return g;
}

FinGroup FinGroup::cyclic(std::size_t n) {
  if (n == 0) fail("cyclic group of order 0");
  std::vector<std::int32_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<std::int32_t>((a + b) % n);
  FinGroup g = from_table(n, std::move(table));
  g.generators_ = n > 1 ? std::vector<int>{1} : std::vector<int>{};
  return g;
}

FinGroup FinGroup::direct_product(const FinGroup& a, const FinGroup& b) {
  const std::size_t n = a.order() * b.order();
  std::vector<std::int32_t> table(n * n);
  const auto nb = b.order();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      int p = a.mul(static_cast<int>(x / nb), static_cast<int>(y / nb));
      int q = b.mul(static_cast<int>(x % nb), static_cast<int>(y % nb));
      table[x * n + y] = static_cast<std::int32_t>(static_cast<std::size_t>(p) * nb + static_cast<std::size_t>(q));
    }
  return from_table(n, std::move(table));
}

int FinGroup::pow(int a, long k) const {
  if (k < 0) return pow(inv(a), -k);
  int result = id_;
  int base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

int FinGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != id_; x = mul(x, a)) ++k;
  return k;
}

bool FinGroup::is_central(int a) const {
  for (std::size_t x = 0; x < order_; ++x)
    if (mul(a, static_cast<int>(x)) != mul(static_cast<int>(x), a)) return false;
  return true;
}

bool FinGroup::is_abelian() const {
  for (std::size_t x = 0; x < order_; ++x)
    if (!is_central(static_cast<int>(x))) return false;
  return true;
}

std::vector<int> FinGroup::generated_subgroup(const std::vector<int>& gens) const {
  std::vector<char> seen(order_, 0);
  std::vector<int> out{id_};
  seen[static_cast<std::size_t>(id_)] = 1;
  for (std::size_t head = 0; head < out.size(); ++head)
    for (int g : gens) {
      int next = mul(out[head], g);
      if (!seen[static_cast<std::size_t>(next)]) {
        seen[static_cast<std::size_t>(next)] = 1;
        out.push_back(next);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool FinGroup::is_normal(const std::vector<int>& subgroup) const {
  std::vector<char> member(order_, 0);
  for (int h : subgroup) member[static_cast<std::size_t>(h)] = 1;
  for (int h : subgroup)
    for (std::size_t g = 0; g < order_; ++g)
      if (!member[static_cast<std::size_t>(conjugate(static_cast<int>(g), h))]) return false;
  return true;
}

std::vector<int> FinGroup::conjugacy_classes() const {
  std::vector<int> cls(order_, -1);
  int next = 0;
  for (std::size_t x = 0; x < order_; ++x) {
    if (cls[x] >= 0) continue;
    for (std::size_t g = 0; g < order_; ++g) cls[static_cast<std::size_t>(conjugate(static_cast<int>(g), static_cast<int>(x)))] = next;
    ++next;
  }
  return cls;
}

Subgroup make_subgroup(const FinGroup& parent, const std::vector<int>& elements) {
  Subgroup s;
  s.to_parent = elements;
  std::sort(s.to_parent.begin(), s.to_parent.end());
  s.to_parent.erase(std::unique(s.to_parent.begin(), s.to_parent.end()), s.to_parent.end());
  s.from_parent.assign(parent.order(), -1);
  for (std::size_t i = 0; i < s.to_parent.size(); ++i) s.from_parent[static_cast<std::size_t>(s.to_parent[i])] = static_cast<int>(i);
  const std::size_t n = s.to_parent.size();
  std::vector<std::int32_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      int p = s.from_parent[static_cast<std::size_t>(parent.mul(s.to_parent[a], s.to_parent[b]))];
      if (p < 0) fail("element list is not closed under multiplication");
      table[a * n + b] = p;
    }
  s.group = FinGroup::from_table(n, std::move(table));
  return s;
}

QuotientGroup quotient(const FinGroup& parent, const std::vector<int>& normal) {
  if (!parent.is_normal(normal)) fail("quotient by a non-normal subgroup");
  QuotientGroup q;
  q.projection.assign(parent.order(), -1);
  for (std::size_t g = 0; g < parent.order(); ++g) {
    if (q.projection[g] >= 0) continue;
    const int idx = static_cast<int>(q.representative.size());
    q.representative.push_back(static_cast<int>(g));
    for (int h : normal) q.projection[static_cast<std::size_t>(parent.mul(static_cast<int>(g), h))] = idx;
  }
  const std::size_t n = q.representative.size();
  std::vector<std::int32_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = q.projection[static_cast<std::size_t>(parent.mul(q.representative[a], q.representative[b]))];
  q.group = FinGroup::from_table(n, std::move(table));
  return q;
}

std::vector<int> commutator_subgroup(const FinGroup& g) {
  std::vector<int> comms;
  std::vector<char> seen(g.order(), 0);
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) {
      int c = g.commutator(static_cast<int>(a), static_cast<int>(b));
      if (!seen[static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(c)] = 1;
        comms.push_back(c);
      }
    }
  return g.generated_subgroup(comms);
}

QuotientGroup abelianization(const FinGroup& g) { return quotient(g, commutator_subgroup(g)); }

FinGroup heisenberg_mod2() {
  // (x, y, z) <-> [[1,x,z],[0,1,y],[0,0,1]]; index = x + 2y + 4z.
  std::vector<std::int32_t> table(64);
  std::vector<std::string> labels(8);
  for (int a = 0; a < 8; ++a) {
    labels[static_cast<std::size_t>(a)] = "(" + std::to_string(a & 1) + "," + std::to_string((a >> 1) & 1) + "," +
                                          std::to_string((a >> 2) & 1) + ")";
    for (int b = 0; b < 8; ++b) {
      int x = ((a & 1) + (b & 1)) & 1;
      int y = (((a >> 1) & 1) + ((b >> 1) & 1)) & 1;
      int z = (((a >> 2) & 1) + ((b >> 2) & 1) + (a & 1) * ((b >> 1) & 1)) & 1;
      table[static_cast<std::size_t>(a * 8 + b)] = x + 2 * y + 4 * z;
    }
  }
  return FinGroup::from_table(8, std::move(table), std::move(labels));
}

}  // namespace vatwist
