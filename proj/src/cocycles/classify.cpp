#include "vatwist/cocycles/classify.hpp"

#include <deque>

#include "vatwist/error.hpp"
#include "vatwist/exact/normal_form.hpp"

namespace vatwist {

Integer least_square_root_multiple(const Integer& q) {
  Integer rest = abs(q), out = 1;
  for (Integer p = 2; p * p <= rest; ++p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i < (e + 1) / 2; ++i) out *= p;
  }
  if (rest > 1) out *= rest;
  return out;
}

Integer finite_class_order(const FinGroup& F, const std::vector<CircleValue>& table) {
  const std::size_t n = F.order();
  const auto& gens = F.generators();
  const std::size_t k = gens.size();
  auto sigma = [&](int a, int b) -> const CircleValue& {
    return table[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)];
  };
  for (const auto& v : table)
    if (!v.is_root_of_unity()) throw Error(ErrorKind::Unsupported, "finite table with alpha-valued entries");

  // gamma(x) = c_x . Gamma + f_x with Gamma_i = gamma(g_i). A normalized
  // cochain gamma with d(gamma) = sigma on all pairs (a, g_i) already
  // satisfies it everywhere, so only those edges give equations.
  std::vector<std::vector<long>> c(n);
  std::vector<Rational> f(n);
  std::vector<bool> seen(n, false);
  std::vector<std::vector<long>> rows;
  std::vector<Rational> rhs;
  const std::size_t id = static_cast<std::size_t>(F.id());
  seen[id] = true;
  c[id].assign(k, 0);
  std::deque<int> queue{F.id()};
  for (std::size_t i = 0; i < k; ++i) {
    const auto g = static_cast<std::size_t>(gens[i]);
    std::vector<long> e(k, 0);
    e[i] = 1;
    if (!seen[g]) {
      seen[g] = true;
      c[g] = e;
      queue.push_back(gens[i]);
    } else {
      for (std::size_t j = 0; j < k; ++j) e[j] -= c[g][j];
      rows.push_back(e);
      rhs.push_back(f[g]);
    }
  }
  while (!queue.empty()) {
    const int a = queue.front();
    queue.pop_front();
    const auto ua = static_cast<std::size_t>(a);
    for (std::size_t i = 0; i < k; ++i) {
      const int b = F.mul(a, gens[i]);
      const auto ub = static_cast<std::size_t>(b);
      if (!seen[ub]) {
        seen[ub] = true;
        c[ub] = c[ua];
        c[ub][i] += 1;
        f[ub] = f[ua] - sigma(a, gens[i]).turns();
        queue.push_back(b);
        continue;
      }
      std::vector<long> row = c[ua];
      row[i] += 1;
      for (std::size_t j = 0; j < k; ++j) row[j] -= c[ub][j];
      rows.push_back(std::move(row));
      rhs.push_back(sigma(a, gens[i]).turns() - f[ua] + f[ub]);
    }
  }
  Integer L = 1;
  for (const auto& v : rhs) L = lcm(L, v.den());
  IntMatrix aug(rows.size(), k + 1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = rows[i][j];
    aug(i, k) = rhs[i].num() * (L / rhs[i].den());
  }
  // Integer relations w C = 0 pair rhs into (g / L) Z, where g is the pivot
  // of the last column of the Hermite form (rows with zero C-part).
  IntMatrix H = hermite_normal_form(aug);
  Integer g = 0;
  for (std::size_t i = 0; i < H.rows(); ++i) {
    bool zero_prefix = true;
    for (std::size_t j = 0; j < k && zero_prefix; ++j) zero_prefix = H(i, j) == 0;
    if (zero_prefix && H(i, k) != 0) g = abs(H(i, k));
  }
  return L / gcd(L, g);
}

CocycleSpec canonical_lattice_representative(const CircleMatrix& kappa) {
  const std::size_t r = kappa.size();
  QAlphaMatrix B(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      if (!kappa[i][j].is_root_of_unity())
        throw Error(ErrorKind::IrrationalCocycle, "class is not rational");
      // value B_ji x_i y_j
      B(j, i) = QAlpha(kappa[i][j].turns());
    }
  return CocycleSpec::bilinear(std::move(B));
}

namespace {

CocycleSpec strip_alpha(const CocycleSpec& sigma) {
  std::vector<CocycleSpec> parts;
  for (const auto& part : flatten(sigma)) {
    if (const auto* b = std::get_if<BilinearPart>(&part.variant())) {
      QAlphaMatrix B = b->B;
      for (std::size_t i = 0; i < B.rows(); ++i)
        for (std::size_t j = 0; j < B.cols(); ++j) B(i, j).alpha = Rational();
      parts.push_back(CocycleSpec::bilinear(std::move(B)));
    } else {
      parts.push_back(part);
    }
  }
  return parts.size() == 1 ? parts.front() : CocycleSpec::sum(std::move(parts));
}

}  // namespace

ClassificationReport classify(const CocycleSpec& sigma, const VAGroup& G) {
  const auto parts = flatten(sigma);
  for (const auto& part : parts) {
    const std::vector<CircleValue>* table = nullptr;
    if (const auto* t = std::get_if<FiniteTablePart>(&part.variant())) table = &t->table;
    if (const auto* t = std::get_if<InflationPart>(&part.variant())) table = &t->table;
    if (!table) continue;
    for (const auto& v : *table)
      if (!v.is_root_of_unity())
        throw Error(ErrorKind::Unsupported, "classification of table parts with alpha-valued entries");
  }

  ClassificationReport rep;
  rep.kronecker = kronecker_matrix(sigma, G);
  rep.representative = sigma;
  rep.is_rational = true;
  for (const auto& row : rep.kronecker)
    for (const auto& v : row) rep.is_rational = rep.is_rational && v.is_root_of_unity();
  if (!rep.is_rational) return rep;

  if (!value_order(sigma)) {
    // The alpha part of the bilinear terms is symmetric here, hence a
    // coboundary on the lattice; drop it and confirm the result on G.
    rep.representative = strip_alpha(sigma);
    rep.representative_changed = true;
    if (!check_cocycle_identity(rep.representative, G))
      throw Error(ErrorKind::Unsupported, "no root-of-unity representative of this shape");
  }
  rep.value_order_n = value_order(rep.representative);

  Integer torsion = 1;
  for (const auto& row : rep.kronecker)
    for (const auto& v : row) torsion = lcm(torsion, v.torsion_order());

  const std::size_t r = G.rank();
  QAlphaMatrix B(r, r);
  Integer m = 1;
  for (const auto& part : flatten(rep.representative)) {
    if (const auto* b = std::get_if<BilinearPart>(&part.variant())) {
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) B(i, j) += b->B(i, j);
    } else if (const auto* t = std::get_if<FiniteTablePart>(&part.variant())) {
      rep.finite_class_orders.push_back(finite_class_order(G.point_group(), t->table));
    } else if (const auto* inf = std::get_if<InflationPart>(&part.variant())) {
      FiniteQuotient q(G, inf->modulus);
      rep.finite_class_orders.push_back(finite_class_order(q.group(), inf->table));
      m = lcm(m, Integer(inf->modulus));
    }
  }
  for (const auto& o : rep.finite_class_orders) torsion = lcm(torsion, o);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) m = lcm(m, least_square_root_multiple(B(i, j).rat.den()));

  rep.class_torsion_order = torsion;
  rep.type_one_witness_m = m;
  Integer index = G.point_group().order();
  for (std::size_t i = 0; i < r; ++i) index *= m;
  rep.witness_index = index;
  return rep;
}

CocycleSpec minimal_representative(const CocycleSpec& sigma, const VAGroup& G) {
  auto report = classify(sigma, G);
  if (!report.is_rational) throw Error(ErrorKind::IrrationalCocycle, "class is not rational");
  if (G.point_group().order() == 1) return canonical_lattice_representative(report.kronecker);
  return report.representative;
}

}  // namespace vatwist
