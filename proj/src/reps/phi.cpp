#include "vatwist/reps/phi.hpp"

#include <algorithm>
#include <cmath>

#include "vatwist/error.hpp"
#include "vatwist/exact/normal_form.hpp"

namespace vatwist {

std::pair<ZVec, int> CentralizerEmbedding::apply(const GroupElement& g) const {
  ZVec out(g.vec.size());
  const ZVec& c = gamma[static_cast<std::size_t>(g.pt)];
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = d * g.vec[i] + c[i];
  return {out, g.pt};
}

CentralizerEmbedding embed_centralizer(const VAGroup& L) {
  const FinGroup& F = L.point_group();
  const std::size_t n = F.order(), r = L.rank();
  for (std::size_t f = 0; f < n; ++f)
    if (!L.action(static_cast<int>(f)).is_identity())
      throw Error(ErrorKind::InvalidInput, "embed_centralizer needs a trivial point-group action");

  CentralizerEmbedding out;
  out.d = static_cast<long>(n);
  out.gamma.assign(n, ZVec(r, 0));
  if (r == 0) return out;

  // gamma(f1) + gamma(f2) - gamma(f1 f2) = d delta(f1, f2); the coordinates
  // decouple, so one Smith form serves all of them.
  IntMatrix C(n * n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t row = a * n + b;
      C(row, a) += 1;
      C(row, b) += 1;
      C(row, static_cast<std::size_t>(F.mul(static_cast<int>(a), static_cast<int>(b)))) -= 1;
    }
  const SmithForm snf = smith_normal_form(C);
  for (std::size_t i = 0; i < r; ++i) {
    IntVector rhs(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        rhs[a * n + b] = Integer(out.d) * Integer(L.delta(static_cast<int>(a), static_cast<int>(b))[i]);
    const IntVector ub = snf.U * rhs;
    IntVector y(n);
    for (std::size_t k = 0; k < ub.size(); ++k) {
      if (k < snf.rank) {
        const Integer& s = snf.S(k, k);
        if (ub[k] % s != 0) throw Error(ErrorKind::NoSolution, "coboundary equation has no integral solution");
        y[k] = ub[k] / s;
      } else if (ub[k] != 0) {
        throw Error(ErrorKind::NoSolution, "coboundary equation is inconsistent");
      }
    }
    const IntVector g = snf.V * y;
    for (std::size_t f = 0; f < n; ++f) out.gamma[f][i] = to_long(g[f]);
  }
  return out;
}

bool check_embedding(const VAGroup& L, const CentralizerEmbedding& iota, const std::vector<GroupElement>& sample) {
  const FinGroup& F = L.point_group();
  for (const auto& g : sample)
    for (const auto& h : sample) {
      auto [x, f] = iota.apply(g);
      auto [y, k] = iota.apply(h);
      auto [z, fk] = iota.apply(L.multiply(g, h));
      for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] + y[i] != z[i]) return false;
      if (F.mul(f, k) != fk) return false;
    }
  return true;
}

CentralCharIrrep central_char_irrep(const FinGroup& F, int b, const CircleValue& omega, const DecomposeOptions& opt) {
  if (!F.is_central(b)) throw Error(ErrorKind::NotCentral, "element " + std::to_string(b) + " is not central");
  const int ord = F.element_order(b);
  if (!omega.is_root_of_unity() || !(omega.turns() * Rational(ord)).frac().is_zero())
    throw Error(ErrorKind::InvalidInput, "omega must be a root of unity of order dividing the order of b");
  std::vector<int> H;
  std::vector<Rational> value(F.order());
  int x = F.id();
  for (int k = 0; k < ord; ++k) {
    H.push_back(x);
    value[static_cast<std::size_t>(x)] = (omega.turns() * Rational(k)).frac();
    x = F.mul(x, b);
  }
  std::sort(H.begin(), H.end());
  const GroupRep ind = induce_finite(F, H, 1, [&](int h) {
    CMatrix m(1, 1);
    m(0, 0) = unit(value[static_cast<std::size_t>(h)]);
    return m;
  });
  auto comps = decompose(F, ind, opt);
  CentralCharIrrep out;
  out.m = comps.front().rep.dim;
  out.pi = std::move(comps.front().rep);
  out.character = std::move(comps.front().character);
  return out;
}

std::vector<Rational> root_coords(const RationalCharacter& chi, long d) {
  std::vector<Rational> out;
  for (const auto& c : chi.coords) {
    Rational t = c > Rational(1, 2) ? c - Rational(1) : c;
    out.push_back(t / Rational(d));
  }
  return out;
}

PhiRep phi_rep(const VAGroup& G, const RationalCharacter& chi, const std::optional<CentralCharacter>& central,
               const DecomposeOptions& opt) {
  if (!in_U(G, chi)) throw Error(ErrorKind::NotInU, "character " + chi.str() + " is not in U");
  const CentralizerData cd = centralizer_of_lattice(G);
  const VAGroup& L = cd.centralizer;
  const Subgroup& K = cd.kernel;
  const FinGroup& F = L.point_group();

  PhiRep out;
  out.iota = embed_centralizer(L);
  out.index = static_cast<std::size_t>(cd.index);

  int b = F.id();
  CircleValue omega;
  if (central) {
    if (!is_central_element(G, central->a))
      throw Error(ErrorKind::NotCentral, "element " + central->a.str() + " is not central");
    const int fb = K.from_parent[static_cast<std::size_t>(central->a.pt)];
    if (fb < 0) throw Error(ErrorKind::InvalidInput, "central element does not lie in the centralizer");
    b = fb;
    omega = central->omega;
  }
  const CentralCharIrrep pi = central_char_irrep(F, b, omega, opt);
  out.m = pi.m;

  const std::vector<Rational> root = root_coords(chi, out.iota.d);
  auto phase = [&](const GroupElement& h) {
    const auto [x, f] = out.iota.apply(GroupElement{h.vec, K.from_parent[static_cast<std::size_t>(h.pt)]});
    Rational t;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] != 0) t += root[i] * Rational(x[i]);
    return std::pair<Complex, int>(unit(t), f);
  };
  SubgroupRep sub;
  sub.dim = pi.m;
  sub.image = [&](const GroupElement& h) {
    auto [z, f] = phase(h);
    return CMatrix(z * pi.pi.image(f));
  };
  sub.trace = [&](const GroupElement& h) {
    auto [z, f] = phase(h);
    return z * pi.character[static_cast<std::size_t>(f)];
  };

  const long q = chi.modulus();
  IrrepRecord& rec = out.record;
  rec.dim = out.index * out.m;
  rec.factor_modulus = q;
  rec.lattice_character = chi;
  const std::vector<int> Kp = [&] {
    std::vector<int> v = K.to_parent;
    std::sort(v.begin(), v.end());
    return v;
  }();
  rec.character = kernels::map_indices<Complex>(
      quotient_order(G, q),
      [&](std::size_t i) {
        return round_character_value(induced_character(G, Kp, sub.trace, quotient_element(G, q, static_cast<int>(i))));
      },
      opt.exec);
  if (rec.dim <= kMaxRepDim) rec.rep = induce(G, Kp, sub, q, opt.tol);

  if (std::abs(rec.character_norm() - 1.0) > 1e-6)
    throw Error(ErrorKind::DecompositionFailed, "Phi(chi) is not irreducible");
  if (central) {
    const Complex expect = static_cast<double>(rec.dim) * unit(omega.turns());
    if (std::abs(rec.character_at(G, central->a) - expect) > 1e-6 * static_cast<double>(rec.dim))
      throw Error(ErrorKind::DecompositionFailed, "Phi(chi) does not send the central element to omega");
    rec.central_value = omega;
  }
  // Lattice restriction is m times the orbit sum.
  const auto orbit = orbit_stabilizer(G, chi).orbit;
  for (std::size_t i = 0; i < G.rank(); ++i) {
    Complex expect = 0;
    ZVec e(G.rank(), 0);
    e[i] = 1;
    for (const auto& psi : orbit) expect += static_cast<double>(out.m) * unit(psi.value(e));
    if (std::abs(rec.character_at(G, G.lattice_element(e)) - expect) > 1e-6 * static_cast<double>(rec.dim))
      throw Error(ErrorKind::DecompositionFailed, "lattice restriction of Phi(chi) is not the orbit sum");
  }
  return out;
}

}  // namespace vatwist
