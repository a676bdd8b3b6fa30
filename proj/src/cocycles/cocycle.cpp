#include "vatwist/cocycles/cocycle.hpp"

#include <functional>
#include <numeric>

#include "vatwist/error.hpp"
#include "vatwist/kernels/parallel.hpp"

namespace vatwist {

namespace {

long ipow(long base, std::size_t e) {
  long out = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (__builtin_mul_overflow(out, base, &out)) throw Error(ErrorKind::ResourceBound, "table index overflow");
  }
  return out;
}

std::size_t inflation_index(const InflationPart& p, const GroupElement& g) {
  long idx = 0, scale = 1;
  for (std::size_t i = 0; i < p.rank; ++i) {
    idx += floor_mod(g.vec[i], p.modulus) * scale;
    scale *= p.modulus;
  }
  return static_cast<std::size_t>(idx + static_cast<long>(g.pt) * scale);
}

std::size_t inflation_order(const InflationPart& p) {
  return static_cast<std::size_t>(ipow(p.modulus, p.rank)) * p.point_order;
}

QAlpha bilinear_value(const QAlphaMatrix& B, const ZVec& x, const ZVec& y) {
  QAlpha out;
  for (std::size_t i = 0; i < B.rows(); ++i) {
    if (y[i] == 0) continue;
    for (std::size_t j = 0; j < B.cols(); ++j) {
      if (x[j] == 0) continue;
      out += B(i, j) * Rational(Integer(Integer(x[j]) * y[i]));
    }
  }
  return out;
}

void flatten_into(const CocycleSpec& s, std::vector<CocycleSpec>& out) {
  if (const auto* sum = std::get_if<SumPart>(&s.variant())) {
    for (const auto& p : sum->parts) flatten_into(p, out);
  } else {
    out.push_back(s);
  }
}

std::string triple_str(const GroupElement& g, const GroupElement& h, const GroupElement& k) {
  return "(" + g.str() + ", " + h.str() + ", " + k.str() + ")";
}

}  // namespace

CocycleSpec CocycleSpec::bilinear(QAlphaMatrix B) {
  if (B.rows() != B.cols()) throw Error(ErrorKind::InvalidInput, "bilinear cocycle matrix must be square");
  return CocycleSpec(BilinearPart{std::move(B)});
}

CocycleSpec CocycleSpec::finite_table(std::size_t point_order, std::vector<CircleValue> table) {
  if (table.size() != point_order * point_order)
    throw Error(ErrorKind::InvalidInput, "finite cocycle table must have |D|^2 entries");
  return CocycleSpec(FiniteTablePart{point_order, std::move(table)});
}

CocycleSpec CocycleSpec::inflation(long modulus, std::size_t rank, std::size_t point_order,
                                   std::vector<CircleValue> table) {
  if (modulus < 1) throw Error(ErrorKind::InvalidInput, "inflation modulus must be positive");
  InflationPart p{modulus, rank, point_order, {}};
  const std::size_t q = inflation_order(p);
  if (table.size() != q * q) throw Error(ErrorKind::InvalidInput, "inflation table must have |Q|^2 entries");
  p.table = std::move(table);
  return CocycleSpec(std::move(p));
}

CocycleSpec CocycleSpec::sum(std::vector<CocycleSpec> parts) { return CocycleSpec(SumPart{std::move(parts)}); }

CocycleSpec CocycleSpec::zero(std::size_t rank) { return bilinear(QAlphaMatrix(rank, rank)); }

std::string CocycleSpec::kind() const {
  switch (v_.index()) {
    case 0: return "bilinear";
    case 1: return "finite_table";
    case 2: return "inflation";
    default: return "sum";
  }
}

std::vector<CocycleSpec> flatten(const CocycleSpec& sigma) {
  std::vector<CocycleSpec> out;
  flatten_into(sigma, out);
  return out;
}

CircleValue eval(const CocycleSpec& sigma, const GroupElement& g1, const GroupElement& g2) {
  return std::visit(
      [&](const auto& p) -> CircleValue {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, BilinearPart>) {
          if (g1.vec.size() != p.B.rows() || g2.vec.size() != p.B.rows())
            throw Error(ErrorKind::RankMismatch, "bilinear cocycle rank does not match element");
          return CircleValue(bilinear_value(p.B, g1.vec, g2.vec));
        } else if constexpr (std::is_same_v<T, FiniteTablePart>) {
          return p.table[static_cast<std::size_t>(g1.pt) * p.point_order + static_cast<std::size_t>(g2.pt)];
        } else if constexpr (std::is_same_v<T, InflationPart>) {
          if (g1.vec.size() != p.rank || g2.vec.size() != p.rank)
            throw Error(ErrorKind::RankMismatch, "inflation cocycle rank does not match element");
          return p.table[inflation_index(p, g1) * inflation_order(p) + inflation_index(p, g2)];
        } else {
          CircleValue out;
          for (const auto& part : p.parts) out += eval(part, g1, g2);
          return out;
        }
      },
      sigma.variant());
}

CircleValue coboundary_defect(const CocycleSpec& sigma, const VAGroup& G, const GroupElement& g,
                              const GroupElement& h, const GroupElement& k) {
  return eval(sigma, h, k) - eval(sigma, G.multiply(g, h), k) + eval(sigma, g, G.multiply(h, k)) - eval(sigma, g, h);
}

namespace {

CocycleCheck check_normalized(const CocycleSpec& part, const VAGroup& G, const std::vector<GroupElement>& elements) {
  const GroupElement e = G.identity();
  for (const auto& g : elements) {
    if (!eval(part, e, g).is_zero() || !eval(part, g, e).is_zero()) {
      return {false, "cocycle is not normalized at " + g.str(), {e, g}};
    }
  }
  return {};
}

CocycleCheck check_triples(const CocycleSpec& part, const VAGroup& G, const std::vector<GroupElement>& elements) {
  if (auto n = check_normalized(part, G, elements); !n.ok) return n;
  const std::size_t n = elements.size();
  auto bad = kernels::find_first(n, [&](std::size_t a) {
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (!coboundary_defect(part, G, elements[a], elements[b], elements[c]).is_zero()) return true;
    return false;
  });
  if (!bad) return {};
  const auto& g = elements[*bad];
  for (const auto& h : elements)
    for (const auto& k : elements) {
      auto d = coboundary_defect(part, G, g, h, k);
      if (!d.is_zero()) return {false, "cocycle identity fails at " + triple_str(g, h, k) + ": defect " + d.str(), {g, h, k}};
    }
  return {};
}

// Scaled-integer scan of a table cocycle on a finite group: values are kept
// as numerators over a common denominator so the O(|Q|^3) loop avoids GMP.
CocycleCheck check_finite_table(const FinGroup& Q, const std::vector<CircleValue>& table,
                                const std::function<GroupElement(int)>& witness) {
  const std::size_t n = Q.order();
  Integer L = 1;
  for (const auto& v : table) {
    L = lcm(L, v.turns().den());
    L = lcm(L, v.alpha_coeff().den());
  }
  if (L > Integer(1L << 40)) throw Error(ErrorKind::ResourceBound, "table denominators too large");
  const long l = to_long(L);
  std::vector<long> rat(table.size()), alp(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    rat[i] = to_long(table[i].turns().num() * (L / table[i].turns().den()));
    alp[i] = to_long(table[i].alpha_coeff().num() * (L / table[i].alpha_coeff().den()));
    if (alp[i] > (1L << 40) || alp[i] < -(1L << 40)) throw Error(ErrorKind::ResourceBound, "table values too large");
  }
  const std::size_t id = static_cast<std::size_t>(Q.id());
  for (std::size_t g = 0; g < n; ++g) {
    if (!table[id * n + g].is_zero() || !table[g * n + id].is_zero()) {
      return {false, "cocycle is not normalized at " + witness(static_cast<int>(g)).str(), {witness(Q.id()), witness(static_cast<int>(g))}};
    }
  }
  auto defect = [&](std::size_t g, std::size_t h, std::size_t k) {
    const std::size_t gh = static_cast<std::size_t>(Q.mul(static_cast<int>(g), static_cast<int>(h)));
    const std::size_t hk = static_cast<std::size_t>(Q.mul(static_cast<int>(h), static_cast<int>(k)));
    long r = rat[h * n + k] - rat[gh * n + k] + rat[g * n + hk] - rat[g * n + h];
    long a = alp[h * n + k] - alp[gh * n + k] + alp[g * n + hk] - alp[g * n + h];
    return floor_mod(r, l) != 0 || a != 0;
  };
  auto bad = kernels::find_first(n, [&](std::size_t g) {
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t k = 0; k < n; ++k)
        if (defect(g, h, k)) return true;
    return false;
  });
  if (!bad) return {};
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t k = 0; k < n; ++k)
      if (defect(*bad, h, k)) {
        auto g0 = witness(static_cast<int>(*bad)), h0 = witness(static_cast<int>(h)), k0 = witness(static_cast<int>(k));
        return {false, "cocycle identity fails at " + triple_str(g0, h0, k0), {g0, h0, k0}};
      }
  return {};
}

}  // namespace

CocycleCheck check_cocycle_identity(const CocycleSpec& sigma, const VAGroup& G) {
  const std::size_t r = G.rank();
  const std::size_t nd = G.point_group().order();
  for (const auto& part : flatten(sigma)) {
    CocycleCheck res;
    if (const auto* b = std::get_if<BilinearPart>(&part.variant())) {
      if (b->B.rows() != r) throw Error(ErrorKind::RankMismatch, "bilinear cocycle rank does not match group");
      // For fixed point-group parts the defect is affine in each lattice
      // argument with no products inside one argument, so it vanishes on Z^{3r}
      // iff it vanishes with every lattice argument in {0, e_1, ..., e_r}.
      std::vector<GroupElement> candidates;
      for (std::size_t d = 0; d < nd; ++d) {
        candidates.push_back({ZVec(r, 0), static_cast<int>(d)});
        for (std::size_t i = 0; i < r; ++i) {
          ZVec v(r, 0);
          v[i] = 1;
          candidates.push_back({v, static_cast<int>(d)});
        }
      }
      res = check_triples(part, G, candidates);
    } else if (const auto* t = std::get_if<FiniteTablePart>(&part.variant())) {
      if (t->point_order != nd) throw Error(ErrorKind::RankMismatch, "finite table size does not match point group");
      res = check_finite_table(G.point_group(), t->table, [&](int d) { return G.point_lift(d); });
    } else if (const auto* inf = std::get_if<InflationPart>(&part.variant())) {
      if (inf->rank != r || inf->point_order != nd)
        throw Error(ErrorKind::RankMismatch, "inflation table shape does not match group");
      FiniteQuotient q(G, inf->modulus);
      res = check_finite_table(q.group(), inf->table, [&](int i) { return q.element(i); });
    }
    if (!res.ok) return res;
  }
  return {};
}

CircleMatrix kronecker_matrix(const CocycleSpec& sigma, const VAGroup& G) {
  const std::size_t r = G.rank();
  CircleMatrix out(r, std::vector<CircleValue>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      auto ei = G.basis_element(i), ej = G.basis_element(j);
      out[i][j] = eval(sigma, ei, ej) - eval(sigma, ej, ei);
    }
  return out;
}

CocycleSpec restrict_to_sublattice(const CocycleSpec& sigma, const VAGroup& G, long m) {
  if (m < 1) throw Error(ErrorKind::InvalidInput, "sublattice scale must be positive");
  const std::size_t r = G.rank();
  const int id = G.point_group().id();
  std::vector<CocycleSpec> parts;
  for (const auto& part : flatten(sigma)) {
    if (const auto* b = std::get_if<BilinearPart>(&part.variant())) {
      QAlphaMatrix B = b->B;
      const Rational m2(Integer(Integer(m) * m));
      for (std::size_t i = 0; i < B.rows(); ++i)
        for (std::size_t j = 0; j < B.cols(); ++j) B(i, j) *= m2;
      parts.push_back(CocycleSpec::bilinear(std::move(B)));
    } else if (const auto* inf = std::get_if<InflationPart>(&part.variant())) {
      const long g = std::gcd(m, inf->modulus);
      const long mod = inf->modulus / g;
      InflationPart shape{mod, r, 1, {}};
      const std::size_t q = inflation_order(shape);
      std::vector<CircleValue> table(q * q);
      auto lift = [&](std::size_t idx) {
        GroupElement x{ZVec(r), id};
        for (std::size_t i = 0; i < r; ++i) {
          x.vec[i] = static_cast<long>(idx % static_cast<std::size_t>(mod)) * m;
          idx /= static_cast<std::size_t>(mod);
        }
        return x;
      };
      for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b) table[a * q + b] = eval(part, lift(a), lift(b));
      parts.push_back(CocycleSpec::inflation(mod, r, 1, std::move(table)));
    }
    // Point-group tables are constant zero on lattice elements.
  }
  if (parts.empty()) return CocycleSpec::zero(r);
  if (parts.size() == 1) return parts.front();
  return CocycleSpec::sum(std::move(parts));
}

GroupElement GroupHom::apply(const VAGroup& source, const GroupElement& g) const {
  switch (kind) {
    case Kind::Identity:
      return g;
    case Kind::LatticeMap: {
      ZVec out(matrix.rows(), 0);
      for (std::size_t i = 0; i < matrix.rows(); ++i) {
        Integer acc = 0;
        for (std::size_t j = 0; j < matrix.cols(); ++j) acc += matrix(i, j) * g.vec[j];
        out[i] = to_long(acc);
      }
      return {out, 0};
    }
    case Kind::PointProjection:
      return {{}, g.pt};
    case Kind::QuotientProjection:
      return {{}, quotient_index(source, modulus, g)};
  }
  return g;
}

VAGroup quotient_as_group(const VAGroup& G, long m) {
  FiniteQuotient q(G, m);
  std::vector<IntMatrix> action(q.order(), IntMatrix(0, 0));
  return VAGroup(0, q.group(), std::move(action));
}

VAGroup point_group_as_group(const VAGroup& G) {
  std::vector<IntMatrix> action(G.point_group().order(), IntMatrix(0, 0));
  return VAGroup(0, G.point_group(), std::move(action));
}

CocycleSpec pullback(const CocycleSpec& sigma, const VAGroup& source, const GroupHom& hom) {
  if (hom.kind == GroupHom::Kind::Identity) return sigma;
  const std::size_t r = source.rank();
  const std::size_t nd = source.point_group().order();
  std::vector<CocycleSpec> parts;
  for (const auto& part : flatten(sigma)) {
    const auto& v = part.variant();
    switch (hom.kind) {
      case GroupHom::Kind::LatticeMap: {
        if (nd != 1) throw Error(ErrorKind::Unsupported, "lattice-map pullback needs a trivial point group");
        const IntMatrix& A = hom.matrix;
        if (A.cols() != r) throw Error(ErrorKind::RankMismatch, "lattice map does not match source rank");
        if (const auto* b = std::get_if<BilinearPart>(&v)) {
          // <B A x, A y> = <A^T B A x, y>
          QAlphaMatrix out(r, r);
          for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
              QAlpha acc;
              for (std::size_t a = 0; a < A.rows(); ++a)
                for (std::size_t c = 0; c < A.rows(); ++c) {
                  if (A(a, i) == 0 || A(c, j) == 0) continue;
                  acc += b->B(a, c) * Rational(Integer(A(a, i) * A(c, j)));
                }
              out(i, j) = acc;
            }
          parts.push_back(CocycleSpec::bilinear(std::move(out)));
        } else if (const auto* inf = std::get_if<InflationPart>(&v)) {
          if (inf->point_order != 1) throw Error(ErrorKind::Unsupported, "lattice-map pullback of a point-group table");
          InflationPart shape{inf->modulus, r, 1, {}};
          const std::size_t q = inflation_order(shape);
          std::vector<CircleValue> table(q * q);
          for (std::size_t a = 0; a < q; ++a)
            for (std::size_t b = 0; b < q; ++b) {
              auto x = quotient_element(source, inf->modulus, static_cast<int>(a));
              auto y = quotient_element(source, inf->modulus, static_cast<int>(b));
              table[a * q + b] = eval(part, hom.apply(source, x), hom.apply(source, y));
            }
          parts.push_back(CocycleSpec::inflation(inf->modulus, r, 1, std::move(table)));
        } else if (const auto* t = std::get_if<FiniteTablePart>(&v)) {
          if (t->point_order != 1) throw Error(ErrorKind::Unsupported, "lattice-map pullback of a point-group table");
        }
        break;
      }
      case GroupHom::Kind::PointProjection:
      case GroupHom::Kind::QuotientProjection: {
        // Target is a rank-0 group whose point group is D or G / m Z^r.
        const bool to_point = hom.kind == GroupHom::Kind::PointProjection;
        const long modulus = to_point ? 1 : hom.modulus;
        const std::size_t target_order = to_point ? nd : quotient_order(source, modulus);
        const std::vector<CircleValue>* table = nullptr;
        if (const auto* b = std::get_if<BilinearPart>(&v)) {
          if (b->B.rows() != 0) throw Error(ErrorKind::RankMismatch, "bilinear part on a rank-0 target");
          continue;
        } else if (const auto* t = std::get_if<FiniteTablePart>(&v)) {
          if (t->point_order != target_order) throw Error(ErrorKind::RankMismatch, "table does not match target group");
          table = &t->table;
        } else if (const auto* inf = std::get_if<InflationPart>(&v)) {
          if (inf->rank != 0 || inf->point_order != target_order)
            throw Error(ErrorKind::RankMismatch, "table does not match target group");
          table = &inf->table;
        }
        // The target index of (v, d) is d for D and quotient_index for G / m Z^r,
        // which is exactly the inflation index at that modulus.
        parts.push_back(CocycleSpec::inflation(modulus, r, nd, *table));
        break;
      }
      case GroupHom::Kind::Identity:
        break;
    }
  }
  if (parts.empty()) return CocycleSpec::zero(r);
  if (parts.size() == 1) return parts.front();
  return CocycleSpec::sum(std::move(parts));
}

std::optional<Integer> value_order(const CocycleSpec& sigma) {
  Integer out = 1;
  auto absorb = [&](const QAlpha& v) {
    if (!v.alpha.is_zero()) return false;
    out = lcm(out, v.rat.den());
    return true;
  };
  for (const auto& part : flatten(sigma)) {
    if (const auto* b = std::get_if<BilinearPart>(&part.variant())) {
      for (std::size_t i = 0; i < b->B.rows(); ++i)
        for (std::size_t j = 0; j < b->B.cols(); ++j)
          if (!absorb(b->B(i, j))) return std::nullopt;
    } else {
      const auto& table = std::holds_alternative<FiniteTablePart>(part.variant())
                              ? std::get<FiniteTablePart>(part.variant()).table
                              : std::get<InflationPart>(part.variant()).table;
      for (const auto& c : table)
        if (!absorb(QAlpha(c.turns(), c.alpha_coeff()))) return std::nullopt;
    }
  }
  return out;
}

namespace {

long torsion_numerator(const Rational& turns, const Rational& alpha, long n) {
  if (!alpha.is_zero()) throw Error(ErrorKind::ValueNotTorsionOfOrderN, "cocycle value is not a root of unity");
  Rational scaled = turns * Rational(n);
  if (!scaled.is_integer())
    throw Error(ErrorKind::ValueNotTorsionOfOrderN,
                "cocycle value " + turns.str() + " is not an n-th root of unity for n = " + std::to_string(n));
  Integer v = scaled.num() % n;
  if (v < 0) v += n;
  return to_long(v);
}

}  // namespace

TorsionCocycle::TorsionCocycle(const CocycleSpec& sigma, long n) : n_(n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "torsion order must be positive");
  if (n > (1L << 20)) throw Error(ErrorKind::ResourceBound, "torsion order too large");
  for (const auto& part : flatten(sigma)) {
    if (const auto* b = std::get_if<BilinearPart>(&part.variant())) {
      rank_ = b->B.rows();
      std::vector<long> m(rank_ * rank_);
      for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = 0; j < rank_; ++j) m[i * rank_ + j] = torsion_numerator(b->B(i, j).rat, b->B(i, j).alpha, n);
      bilinear_.push_back(std::move(m));
    } else if (const auto* t = std::get_if<FiniteTablePart>(&part.variant())) {
      Table tab{Table::Index::Point, 1, 0, t->point_order, {}};
      for (const auto& c : t->table) tab.values.push_back(torsion_numerator(c.turns(), c.alpha_coeff(), n));
      tables_.push_back(std::move(tab));
    } else if (const auto* inf = std::get_if<InflationPart>(&part.variant())) {
      Table tab{Table::Index::Quotient, inf->modulus, inf->rank, inflation_order(*inf), {}};
      for (const auto& c : inf->table) tab.values.push_back(torsion_numerator(c.turns(), c.alpha_coeff(), n));
      tables_.push_back(std::move(tab));
    }
  }
}

long TorsionCocycle::operator()(const GroupElement& g1, const GroupElement& g2) const {
  long acc = 0;
  for (const auto& m : bilinear_) {
    for (std::size_t i = 0; i < rank_; ++i) {
      const long y = floor_mod(g2.vec[i], n_);
      if (y == 0) continue;
      for (std::size_t j = 0; j < rank_; ++j) {
        const long x = floor_mod(g1.vec[j], n_);
        acc = (acc + m[i * rank_ + j] * x % n_ * y) % n_;
      }
    }
  }
  for (const auto& t : tables_) {
    std::size_t a = 0, b = 0;
    if (t.index == Table::Index::Point) {
      a = static_cast<std::size_t>(g1.pt);
      b = static_cast<std::size_t>(g2.pt);
    } else {
      long sa = 0, sb = 0, scale = 1;
      for (std::size_t i = 0; i < t.rank; ++i) {
        sa += floor_mod(g1.vec[i], t.modulus) * scale;
        sb += floor_mod(g2.vec[i], t.modulus) * scale;
        scale *= t.modulus;
      }
      a = static_cast<std::size_t>(sa + g1.pt * scale);
      b = static_cast<std::size_t>(sb + g2.pt * scale);
    }
    acc = (acc + t.values[a * t.width + b]) % n_;
  }
  return acc;
}

}  // namespace vatwist
