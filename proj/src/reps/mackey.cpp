#include "vatwist/reps/mackey.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "vatwist/cocycles/classify.hpp"
#include "vatwist/error.hpp"
#include "vatwist/groups/extension.hpp"

namespace vatwist {
namespace {

std::vector<long> scaled_coords(const RationalCharacter& chi, long q) {
  std::vector<long> out;
  for (const auto& c : chi.coords) out.push_back(to_long(Integer((c * Rational(q)).num())));
  return out;
}

long dot_mod(const std::vector<long>& qc, const ZVec& v, long q) {
  long t = 0;
  for (std::size_t i = 0; i < v.size(); ++i) t = floor_mod(t + floor_mod(qc[i], q) * floor_mod(v[i], q), q);
  return t;
}

std::vector<int> sorted_elements(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

/// G_chi / ker chi as a finite group: elements (t, k), t in Z_q, k in K,
/// index t + q * (subgroup index of k).
struct LittleGroup {
  long q = 1;
  std::vector<long> qc;
  Subgroup K;
  FinGroup group;

  int index_of(const GroupElement& x) const {
    return static_cast<int>(dot_mod(qc, x.vec, q) + q * K.from_parent[static_cast<std::size_t>(x.pt)]);
  }
};

LittleGroup little_group(const VAGroup& G, const RationalCharacter& chi, const Subgroup& K) {
  LittleGroup lg;
  lg.q = chi.modulus();
  lg.qc = scaled_coords(chi, lg.q);
  lg.K = K;
  const std::size_t k = K.group.order();
  const auto q = static_cast<std::size_t>(lg.q);
  const std::size_t n = q * k;
  if (n > kMaxLittleGroupOrder)
    throw Error(ErrorKind::ResourceBound,
                "little group G_chi / ker chi has " + std::to_string(n) + " elements (cap 5000)");
  std::vector<std::int32_t> table(n * n);
  for (std::size_t k1 = 0; k1 < k; ++k1)
    for (std::size_t k2 = 0; k2 < k; ++k2) {
      const int p1 = K.to_parent[k1], p2 = K.to_parent[k2];
      const long shift = dot_mod(lg.qc, G.delta(p1, p2), lg.q);
      const auto k12 = static_cast<std::size_t>(K.group.mul(static_cast<int>(k1), static_cast<int>(k2)));
      for (std::size_t t1 = 0; t1 < q; ++t1)
        for (std::size_t t2 = 0; t2 < q; ++t2) {
          const auto t = static_cast<std::size_t>(floor_mod(static_cast<long>(t1 + t2) + shift, lg.q));
          table[(t1 + q * k1) * n + (t2 + q * k2)] = static_cast<std::int32_t>(t + q * k12);
        }
    }
  lg.group = FinGroup::from_table(n, std::move(table));
  return lg;
}

/// Linear character on the abelian subgroup generated by `gens` with the
/// given values, or nullopt when the assignment is inconsistent.
std::optional<std::map<int, Rational>> extend_linear(const FinGroup& Q, const std::vector<int>& gens,
                                                     const std::vector<Rational>& values) {
  std::map<int, Rational> val{{Q.id(), Rational()}};
  std::vector<int> frontier{Q.id()};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const int y = Q.mul(x, gens[i]);
        const Rational v = (val[x] + values[i]).frac();
        auto it = val.find(y);
        if (it == val.end()) {
          val.emplace(y, v);
          next.push_back(y);
        } else if (it->second != v) {
          return std::nullopt;
        }
      }
    frontier = std::move(next);
  }
  return val;
}

}  // namespace

RationalCharacter act_on_character(const VAGroup& G, int d, const RationalCharacter& chi) {
  const IntMatrix& m = G.action(G.point_group().inv(d));
  std::vector<Rational> out(chi.rank());
  for (std::size_t j = 0; j < chi.rank(); ++j)
    for (std::size_t i = 0; i < chi.rank(); ++i)
      if (m(i, j) != 0) out[j] += chi.coords[i] * Rational(m(i, j));
  return RationalCharacter(std::move(out));
}

OrbitStabilizer orbit_stabilizer(const VAGroup& G, const RationalCharacter& chi) {
  if (chi.rank() != G.rank()) throw Error(ErrorKind::RankMismatch, "character rank differs from the lattice rank");
  OrbitStabilizer out;
  for (std::size_t d = 0; d < G.point_group().order(); ++d) {
    RationalCharacter img = act_on_character(G, static_cast<int>(d), chi);
    if (img == chi) out.stabilizer.push_back(static_cast<int>(d));
    if (std::find(out.orbit.begin(), out.orbit.end(), img) == out.orbit.end()) out.orbit.push_back(std::move(img));
  }
  out.stabilizer_subgroup = make_subgroup(G.point_group(), out.stabilizer);
  out.stab = preimage(G, out.stabilizer_subgroup);
  return out;
}

RationalCharacter orbit_representative(const VAGroup& G, const RationalCharacter& chi) {
  RationalCharacter best = chi;
  for (std::size_t d = 0; d < G.point_group().order(); ++d) {
    RationalCharacter img = act_on_character(G, static_cast<int>(d), chi);
    if (img < best) best = std::move(img);
  }
  return best;
}

bool in_U(const VAGroup& G, const RationalCharacter& chi) {
  for (const auto& c : chi.coords)
    if (c == Rational(1, 2)) return false;
  const auto os = orbit_stabilizer(G, chi);
  for (int d : os.stabilizer)
    if (!G.action(d).is_identity()) return false;
  return true;
}

Complex induced_character(const VAGroup& G, const std::vector<int>& K,
                          const std::function<Complex(const GroupElement&)>& trace, const GroupElement& g) {
  const auto& D = G.point_group();
  std::vector<char> in_k(D.order(), 0);
  for (int k : K) in_k[static_cast<std::size_t>(k)] = 1;
  Complex sum = 0;
  for (int t : left_transversal(D, K)) {
    const int conj = D.mul(D.mul(D.inv(t), g.pt), t);
    if (!in_k[static_cast<std::size_t>(conj)]) continue;
    const GroupElement lift = G.point_lift(t);
    sum += trace(G.multiply(G.multiply(G.invert(lift), g), lift));
  }
  return sum;
}

UnitaryRep induce(const VAGroup& G, const std::vector<int>& K, const SubgroupRep& rep, long factor_modulus,
                  double tol) {
  const auto& D = G.point_group();
  const std::vector<int> T = left_transversal(D, K);
  const std::size_t dim = T.size() * rep.dim;
  if (dim > kMaxRepDim)
    throw Error(ErrorKind::ResourceBound, "induced dimension " + std::to_string(dim) + " exceeds 64");
  std::vector<char> in_k(D.order(), 0);
  for (int k : K) in_k[static_cast<std::size_t>(k)] = 1;
  std::vector<GroupElement> lifts, inv_lifts;
  for (int t : T) {
    lifts.push_back(G.point_lift(t));
    inv_lifts.push_back(G.invert(lifts.back()));
  }
  const auto b = static_cast<Eigen::Index>(rep.dim);
  auto image = [&](const GroupElement& g) {
    CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t j = 0; j < T.size(); ++j)
      for (std::size_t i = 0; i < T.size(); ++i) {
        const int p = D.mul(D.mul(D.inv(T[i]), g.pt), T[j]);
        if (!in_k[static_cast<std::size_t>(p)]) continue;
        m.block(static_cast<Eigen::Index>(i) * b, static_cast<Eigen::Index>(j) * b, b, b) =
            rep.image(G.multiply(G.multiply(inv_lifts[i], g), lifts[j]));
      }
    return m;
  };
  std::vector<CMatrix> lattice, point;
  for (std::size_t i = 0; i < G.rank(); ++i) lattice.push_back(image(G.basis_element(i)));
  for (std::size_t d = 0; d < D.order(); ++d) point.push_back(image(G.point_lift(static_cast<int>(d))));
  return UnitaryRep(std::move(lattice), std::move(point), factor_modulus, tol);
}

UnitaryRep induce(const VAGroup& G, const Subgroup& K, const UnitaryRep& rep_on_preimage) {
  SubgroupRep sub;
  sub.dim = rep_on_preimage.dim();
  sub.image = [&](const GroupElement& h) {
    return rep_on_preimage.image(GroupElement{h.vec, K.from_parent[static_cast<std::size_t>(h.pt)]});
  };
  sub.trace = [&](const GroupElement& h) { return Complex(sub.image(h).trace()); };
  return induce(G, sorted_elements(K.to_parent), sub, rep_on_preimage.factor_modulus(), rep_on_preimage.tol());
}

bool is_central_element(const VAGroup& G, const GroupElement& a) {
  G.check_element(a);
  auto commutes = [&](const GroupElement& g) { return G.multiply(a, g) == G.multiply(g, a); };
  for (std::size_t i = 0; i < G.rank(); ++i)
    if (!commutes(G.basis_element(i))) return false;
  for (std::size_t d = 0; d < G.point_group().order(); ++d)
    if (!commutes(G.point_lift(static_cast<int>(d)))) return false;
  return true;
}

std::vector<IrrepRecord> irreps_over_character(const VAGroup& G, const RationalCharacter& chi,
                                               const IrrepsOptions& opt) {
  const OrbitStabilizer os = orbit_stabilizer(G, chi);
  const LittleGroup lg = little_group(G, chi, os.stabilizer_subgroup);
  const FinGroup& Q = lg.group;
  const long q = lg.q;
  const int kid = os.stabilizer_subgroup.from_parent[static_cast<std::size_t>(G.point_group().id())];

  // Induce from the abelian subgroup generated by the image of Z^r (and of
  // the central element, when constrained).
  std::vector<int> gens{static_cast<int>(floor_mod(1, q) + q * kid)};
  std::vector<Rational> values{Rational(1, q)};
  if (opt.central) {
    const GroupElement& a = opt.central->a;
    if (!is_central_element(G, a)) throw Error(ErrorKind::NotCentral, "element " + a.str() + " is not central");
    if (!opt.central->omega.is_root_of_unity())
      throw Error(ErrorKind::InvalidInput, "central value must be a root of unity");
    gens.push_back(lg.index_of(a));
    values.push_back(opt.central->omega.turns());
  }
  const auto linear = extend_linear(Q, gens, values);
  if (!linear) return {};
  std::vector<int> H;
  for (const auto& [h, v] : *linear) H.push_back(h);
  const GroupRep ind = induce_finite(Q, H, 1, [&](int h) {
    CMatrix m(1, 1);
    m(0, 0) = unit(linear->at(h));
    return m;
  });
  const std::vector<Component> comps = decompose(Q, ind, opt.decompose);

  std::vector<IrrepRecord> out;
  for (const auto& comp : comps) {
    IrrepRecord rec;
    rec.dim = comp.rep.dim * static_cast<std::size_t>(G.point_group().order() / os.stabilizer.size());
    rec.factor_modulus = q;
    rec.lattice_character = chi;
    if (opt.central) rec.central_value = opt.central->omega;
    auto trace = [&](const GroupElement& h) { return comp.character[static_cast<std::size_t>(lg.index_of(h))]; };
    const std::size_t n = quotient_order(G, q);
    rec.character = kernels::map_indices<Complex>(
        n,
        [&](std::size_t i) {
          return round_character_value(
              induced_character(G, os.stabilizer, trace, quotient_element(G, q, static_cast<int>(i))));
        },
        opt.decompose.exec);
    if (opt.build_matrices && rec.dim <= kMaxRepDim) {
      SubgroupRep sub;
      sub.dim = comp.rep.dim;
      sub.image = [&](const GroupElement& h) { return comp.rep.image(lg.index_of(h)); };
      sub.trace = trace;
      rec.rep = induce(G, os.stabilizer, sub, q, opt.decompose.tol);
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<IrrepRecord> central_filter(const std::vector<IrrepRecord>& records, const VAGroup& G,
                                        const GroupElement& a, const CircleValue& omega, double tol) {
  if (!is_central_element(G, a)) throw Error(ErrorKind::NotCentral, "element " + a.str() + " is not central");
  if (!omega.is_root_of_unity()) throw Error(ErrorKind::InvalidInput, "central value must be a root of unity");
  const Complex w = unit(omega.turns());
  std::vector<IrrepRecord> out;
  for (const auto& rec : records) {
    const auto dim = static_cast<double>(rec.dim);
    if (std::abs(rec.character_at(G, a) - dim * w) <= tol * std::max(1.0, dim)) {
      out.push_back(rec);
      out.back().central_value = omega;
    }
  }
  return out;
}

TwistedIrreps twisted_irreps(const VAGroup& G, const CocycleSpec& sigma, const RationalCharacter& chi,
                             const IrrepsOptions& opt) {
  const ClassificationReport report = classify(sigma, G);
  if (!report.is_rational)
    throw Error(ErrorKind::IrrationalCocycle,
                "cocycle class is not torsion; the twisted group algebra is not subhomogeneous");
  const CocycleSpec rep = minimal_representative(sigma, G);
  const auto n_opt = value_order(rep);
  if (!n_opt) throw Error(ErrorKind::NotTorsion, "representative has non-torsion values");
  TwistedIrreps out;
  out.n = to_long(*n_opt);
  if (out.n == 1) {
    IrrepsOptions plain = opt;
    plain.central.reset();
    out.lifted = chi;
    out.records = irreps_over_character(G, chi, plain);
    for (auto& r : out.records) r.central_value = CircleValue();
    return out;
  }
  ExtensionResult ext = central_extension(G, rep, out.n);
  out.s = ext.scale_s();
  std::vector<Rational> lifted;
  for (const auto& c : chi.coords) lifted.push_back(c * Rational(out.s));
  out.lifted = RationalCharacter(std::move(lifted));
  const CircleValue omega(Rational(1, out.n));
  IrrepsOptions constrained = opt;
  constrained.central = CentralCharacter{ext.central_gen(), omega};
  out.records = central_filter(irreps_over_character(ext.extended(), out.lifted, constrained), ext.extended(),
                               ext.central_gen(), omega);
  out.extended = ext.extended();
  return out;
}

std::vector<RationalCharacter> orbit_cross_section(const VAGroup& G, long q, kernels::Exec exec) {
  if (q < 1) throw Error(ErrorKind::InvalidInput, "modulus must be positive");
  const std::size_t r = G.rank();
  std::size_t count = 1;
  for (std::size_t i = 0; i < r; ++i) {
    count *= static_cast<std::size_t>(q);
    if (count > (1u << 24)) throw Error(ErrorKind::ResourceBound, "too many characters to enumerate");
  }
  auto character = [&](std::size_t idx) {
    std::vector<Rational> c(r);
    for (std::size_t i = 0; i < r; ++i) {
      c[i] = Rational(static_cast<long>(idx % static_cast<std::size_t>(q)), q);
      idx /= static_cast<std::size_t>(q);
    }
    return RationalCharacter(std::move(c));
  };
  const auto keep = kernels::map_indices<char>(
      count,
      [&](std::size_t idx) {
        const RationalCharacter chi = character(idx);
        return static_cast<char>(orbit_representative(G, chi) == chi);
      },
      exec);
  std::vector<RationalCharacter> out;
  for (std::size_t idx = 0; idx < count; ++idx)
    if (keep[idx]) out.push_back(character(idx));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> mackey_dimensions(const VAGroup& G, long q, const DecomposeOptions& opt) {
  const auto reps = orbit_cross_section(G, q, opt.exec);
  IrrepsOptions io;
  io.decompose = opt;
  io.build_matrices = false;
  const auto per = kernels::map_indices<std::vector<std::size_t>>(
      reps.size(),
      [&](std::size_t i) {
        std::vector<std::size_t> dims;
        for (const auto& rec : irreps_over_character(G, reps[i], io)) dims.push_back(rec.dim);
        return dims;
      },
      opt.exec);
  std::vector<std::size_t> out;
  for (const auto& v : per) out.insert(out.end(), v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace vatwist
