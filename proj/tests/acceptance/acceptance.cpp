// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>

#include "corpus.hpp"
#include "vatwist/cocycles/classify.hpp"
#include "vatwist/error.hpp"
#include "vatwist/groups/extension.hpp"
#include "vatwist/nctorus/torus.hpp"
#include "vatwist/reps/decompose.hpp"
#include "vatwist/reps/mackey.hpp"
#include "vatwist/reps/phi.hpp"

using namespace vatwist;
using namespace vatwist::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

QAlpha rat(long p, long q) { return QAlpha(Rational(p, q)); }

std::vector<std::size_t> sorted_dims(const std::vector<IrrepRecord>& recs) {
  std::vector<std::size_t> d;
  for (const auto& r : recs) d.push_back(r.dim);
  std::sort(d.begin(), d.end());
  return d;
}

Outcome rotation_classification() {
  Outcome out;
  for (auto [p, q] : {std::pair{1L, 2L}, {1L, 3L}, {2L, 5L}}) {
    const TorusReport r = dimnuc(ThetaMatrix::rotation(rat(p, q)));
    const std::string tag = "theta=" + std::to_string(p) + "/" + std::to_string(q);
    out.require(r.rational_class, tag + ": rational_class false");
    out.require(r.dimnuc_kind == TorusReport::DimKind::Exact && r.dimnuc_value == 2, tag + ": dimnuc not exact 2");
  }
  const TorusReport a = dimnuc(ThetaMatrix::rotation(alpha()));
  out.require(!a.rational_class, "theta=alpha: rational_class true");
  out.require(a.dimnuc_kind == TorusReport::DimKind::UpperBound && a.dimnuc_value == 1,
              "theta=alpha: bound " + std::to_string(a.dimnuc_value));
  return out;
}

Outcome twisted_generic_dimension() {
  Outcome out;
  std::mt19937_64 rng(2024);
  std::size_t runs = 0;
  for (auto [p, q] : {std::pair{1L, 2L}, {1L, 3L}, {2L, 5L}}) {
    std::vector<long> dens;
    for (long d = 2; d <= 7; ++d)
      if (std::gcd(d, q) == 1) dens.push_back(d);
    for (int t = 0; t < 5; ++t) {
      std::vector<Rational> coords;
      for (int i = 0; i < 2; ++i) {
        const long den = dens[rng() % dens.size()];
        long num = 1 + static_cast<long>(rng() % static_cast<unsigned long>(den - 1));
        while (std::gcd(num, den) != 1) num = 1 + static_cast<long>(rng() % static_cast<unsigned long>(den - 1));
        coords.emplace_back(num, den);
      }
      const RationalCharacter chi(coords);
      const auto tw = twisted_irreps(VAGroup::lattice(2), rotation_cocycle(rat(p, q)), chi);
      ++runs;
      const std::string tag = "theta=" + std::to_string(p) + "/" + std::to_string(q) + " chi=" + chi.str();
      out.require(!tw.records.empty(), tag + ": no records");
      for (const auto& r : tw.records)
        out.require(r.dim == static_cast<std::size_t>(q), tag + ": dim " + std::to_string(r.dim));
    }
  }
  if (out.ok) out.detail = std::to_string(runs) + " runs";
  return out;
}

Outcome mackey_vs_oracle() {
  Outcome out;
  const std::vector<std::pair<std::string, VAGroup>> groups{{"Z^2", VAGroup::lattice(2)},
                                                             {"Z^2 x| Z_2", catalog::inversion_semidirect()},
                                                             {"Z^2 x| Z_4", catalog::quarter_turn_semidirect()}};
  IrrepsOptions io;
  io.build_matrices = false;
  for (const auto& [name, G] : groups)
    for (long q : {2L, 3L, 5L}) {
      const std::string tag = name + " q=" + std::to_string(q);
      const FiniteQuotient fq = finite_quotient(G, q);
      const auto oracle = finite_irreps(fq.group());
      std::size_t sum = 0;
      for (const auto& r : oracle) sum += r.dim * r.dim;
      out.require(sum == fq.order(), tag + ": oracle sum of squares");
      std::vector<IrrepRecord> mackey;
      for (const auto& chi : orbit_cross_section(G, q))
        for (auto& r : irreps_over_character(G, chi, io)) mackey.push_back(std::move(r));
      out.require(sorted_dims(mackey) == sorted_dims(oracle), tag + ": dimension multisets differ");
      std::size_t msum = 0;
      for (const auto& r : mackey) msum += r.dim * r.dim;
      out.require(msum == fq.order(), tag + ": Mackey sum of squares");
      // Character matching: each Mackey record equals exactly one oracle record.
      for (auto& o : oracle) {
        IrrepRecord as_g = o;
        as_g.factor_modulus = q;
        std::size_t hits = 0;
        for (const auto& m : mackey) hits += character_distance(G, m, as_g) <= 1e-6;
        out.require(hits == 1, tag + ": oracle character matched " + std::to_string(hits) + " times");
      }
    }
  return out;
}

Outcome heisenberg_obstruction() {
  Outcome out;
  const FinGroup F = heisenberg_mod2();
  const int b = 4;
  out.require(F.is_central(b), "b not central");
  const auto pi = central_char_irrep(F, b, CircleValue(Rational(1, 2)));
  out.require(pi.m == 2, "m = " + std::to_string(pi.m));
  const auto comm = commutator_subgroup(F);
  out.require(std::find(comm.begin(), comm.end(), b) != comm.end(), "b not in [F,F]");
  const auto ab = abelianization(F);
  out.require(ab.projection[static_cast<std::size_t>(b)] == ab.group.id(), "b survives in the abelianization");
  return out;
}

Outcome extension_invariants() {
  Outcome out;
  const VAGroup z2 = VAGroup::lattice(2);
  const CocycleSpec rep = minimal_representative(rotation_cocycle(rat(1, 2)), z2);
  const ExtensionResult ext = central_extension(z2, rep, 2);
  const VAGroup& E = ext.extended();
  const GroupElement& a = ext.central_gen();
  out.require(validate(E).ok, "extension data invalid");
  out.require(hirsch_length(E) == 2, "Hirsch length");
  out.require(is_central_element(E, a), "a not central");
  out.require(E.power(a, 2) == E.identity() && !(a == E.identity()), "a does not have order 2");
  std::size_t kernel = 0;
  for (std::size_t d = 0; d < E.point_group().order(); ++d) {
    const GroupElement t = E.point_lift(static_cast<int>(d));
    if (ext.project(t) == z2.identity()) {
      ++kernel;
      out.require(t == E.identity() || t == a, "kernel element outside <a>");
    }
  }
  out.require(kernel == 2, "kernel order " + std::to_string(kernel));
  std::vector<IrrepRecord> all;
  for (long q : {1L, 2L, 3L, 4L})
    for (const auto& chi : orbit_cross_section(E, q))
      for (auto& r : irreps_over_character(E, chi)) all.push_back(std::move(r));
  const auto filtered = central_filter(all, E, a, CircleValue(Rational(1, 2)));
  out.require(!filtered.empty(), "no records at omega = -1");
  for (const auto& r : filtered) out.require(r.dim % 2 == 0, "odd-dimensional record at omega = -1");
  if (out.ok) out.detail = std::to_string(filtered.size()) + " of " + std::to_string(all.size()) + " records kept";
  return out;
}

bool pairs_integrally_brute(const ThetaMatrix& t, const std::vector<long>& x) {
  for (std::size_t j = 0; j < t.rank(); ++j) {
    QAlpha s;
    for (std::size_t i = 0; i < t.rank(); ++i) s += QAlpha(t(i, j).rat * Rational(x[i]), t(i, j).alpha * Rational(x[i]));
    if (!s.alpha.is_zero() || !s.rat.is_integer()) return false;
  }
  return true;
}

Outcome degeneracy() {
  Outcome out;
  const ThetaMatrix block = ThetaMatrix::rotation(alpha());
  for (std::size_t k = 0; k <= 6; ++k) {
    const ThetaMatrix t = ThetaMatrix::block_diagonal(k, block);
    const std::string tag = "k=" + std::to_string(k);
    const auto h = degenerate_rank(t);
    out.require(h.r_minus_d == k && h.d == 2, tag + ": degenerate_rank " + std::to_string(h.r_minus_d));
    const TorusReport rep = dimnuc(t);
    out.require(rep.dimnuc_kind == TorusReport::DimKind::UpperBound &&
                    rep.dimnuc_value == std::min<std::size_t>(5, k + 1),
                tag + ": bound " + std::to_string(rep.dimnuc_value));
    const std::size_t r = t.rank();
    if (r > 4) continue;
    std::vector<long> x(r, -3);
    for (;;) {
      IntVector v;
      for (long c : x) v.emplace_back(c);
      out.require(pairs_integrally_brute(t, x) == h.kernel.contains(v), tag + ": kernel scan disagrees");
      std::size_t i = 0;
      while (i < r && x[i] == 3) x[i++] = -3;
      if (i == r) break;
      ++x[i];
    }
  }
  return out;
}

bool restriction_vanishes(const CocycleSpec& restricted, std::size_t r) {
  QAlphaMatrix total(r, r);
  std::vector<CocycleSpec> periodic;
  long period = 1;
  for (const auto& leaf : flatten(restricted)) {
    if (const auto* b = std::get_if<BilinearPart>(&leaf.variant())) {
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) total(i, j) += b->B(i, j);
    } else if (const auto* inf = std::get_if<InflationPart>(&leaf.variant())) {
      periodic.push_back(leaf);
      period = std::lcm(period, inf->modulus);
    } else {
      return false;
    }
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (!total(i, j).alpha.is_zero() || !total(i, j).rat.is_integer()) return false;
  if (periodic.empty()) return true;
  // Integral bilinear part: the remaining sum is periodic, scan one period.
  const CocycleSpec sum = CocycleSpec::sum(periodic);
  std::size_t cells = 1;
  for (std::size_t i = 0; i < r; ++i) cells *= static_cast<std::size_t>(period);
  auto point = [&](std::size_t idx) {
    GroupElement g{ZVec(r), 0};
    for (std::size_t i = 0; i < r; ++i) {
      g.vec[i] = static_cast<long>(idx % static_cast<std::size_t>(period));
      idx /= static_cast<std::size_t>(period);
    }
    return g;
  };
  for (std::size_t a = 0; a < cells; ++a)
    for (std::size_t b = 0; b < cells; ++b)
      if (!eval(sum, point(a), point(b)).is_zero()) return false;
  return true;
}

Outcome classification_chain() {
  Outcome out;
  const auto corpus = cocycle_corpus();
  out.require(corpus.size() >= 20, "corpus has fewer than 20 cocycles");
  std::size_t witnessed = 0;
  for (const auto& e : corpus) {
    const ClassificationReport r = classify(e.sigma, e.group);
    const bool flags[4] = {r.is_rational, r.value_order_n.has_value(), r.type_one_witness_m.has_value(),
                           r.class_torsion_order.has_value()};
    out.require(std::all_of(flags, flags + 4, [&](bool f) { return f == flags[0]; }), e.name + ": flags disagree");
    out.require(flags[0] == e.rational, e.name + ": rationality differs from the expected value");
    if (r.type_one_witness_m) {
      const long m = to_long(*r.type_one_witness_m);
      out.require(restriction_vanishes(restrict_to_sublattice(r.representative, e.group, m), e.group.rank()),
                  e.name + ": restriction to mZ^r does not vanish");
      ++witnessed;
    }
  }
  if (out.ok) out.detail = std::to_string(corpus.size()) + " cocycles, " + std::to_string(witnessed) + " witnesses";
  return out;
}

Outcome phi_pipeline() {
  Outcome out;
  std::mt19937_64 rng(77);
  struct Case {
    std::string name;
    VAGroup G;
    CentralCharacter central;
  };
  const VAGroup z2 = VAGroup::lattice(2);
  const ExtensionResult ext = central_extension(z2, minimal_representative(rotation_cocycle(rat(1, 2)), z2), 2);
  const VAGroup p2 = catalog::inversion_semidirect();
  std::vector<Case> cases{{"Z^2 x| Z_2", p2, CentralCharacter{p2.identity(), CircleValue()}},
                          {"Z x H3(Z_2)", z_times_heisenberg(), CentralCharacter{GroupElement{{0}, 4}, CircleValue(Rational(1, 2))}},
                          {"Heisenberg extension", ext.extended(), CentralCharacter{ext.central_gen(), CircleValue(Rational(1, 2))}}};
  std::size_t runs = 0;
  for (const auto& c : cases) {
    int done = 0;
    while (done < 10) {
      std::vector<Rational> coords;
      for (std::size_t i = 0; i < c.G.rank(); ++i) {
        const long den = 3 + static_cast<long>(rng() % 20);
        coords.emplace_back(static_cast<long>(rng() % static_cast<unsigned long>(den)), den);
      }
      const RationalCharacter chi(coords);
      if (!in_U(c.G, chi)) continue;
      ++done;
      ++runs;
      const std::string tag = c.name + " chi=" + chi.str();
      const PhiRep phi = phi_rep(c.G, chi, c.central);
      out.require(std::abs(phi.record.character_norm() - 1.0) <= 1e-6, tag + ": character norm");
      out.require(phi.record.dim == phi.index * phi.m, tag + ": dim is not K*m");
      const Complex w = unit(c.central.omega.turns());
      out.require(std::abs(phi.record.character_at(c.G, c.central.a) - static_cast<double>(phi.record.dim) * w) <= 1e-6,
                  tag + ": central value");
      const auto orbit = orbit_stabilizer(c.G, chi).orbit;
      for (int k = 0; k < 50; ++k) {
        ZVec v(c.G.rank());
        for (auto& x : v) x = static_cast<long>(rng() % 201) - 100;
        Complex expect = 0;
        for (const auto& psi : orbit) expect += static_cast<double>(phi.m) * unit(psi.value(v));
        out.require(std::abs(phi.record.character_at(c.G, c.G.lattice_element(v)) - expect) <= 1e-6,
                    tag + ": lattice restriction");
      }
    }
  }
  if (out.ok) out.detail = std::to_string(runs) + " characters in U";
  return out;
}

ThetaMatrix random_theta(std::mt19937_64& rng, std::size_t r, bool irrational) {
  QAlphaMatrix M(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      const long den = 1 + static_cast<long>(rng() % 7);
      M(i, j) = QAlpha(Rational(static_cast<long>(rng() % 13) - 6, den),
                       irrational ? Rational(static_cast<long>(rng() % 5) - 2, 3) : Rational());
      M(j, i) = -M(i, j);
    }
  return ThetaMatrix(std::move(M));
}

Outcome dimnuc_outputs() {
  Outcome out;
  std::size_t rational = 0, irrational = 0;
  for (const auto& e : cocycle_corpus()) {
    const auto rep = dimnuc_for_cocycle(e.sigma, e.group);
    if (!rep) continue;
    const std::size_t r = e.group.rank();
    if (rep->rational_class) {
      ++rational;
      out.require(rep->dimnuc_kind == TorusReport::DimKind::Exact && rep->dimnuc_value == r,
                  e.name + ": exact dimnuc " + std::to_string(rep->dimnuc_value));
    } else {
      ++irrational;
      out.require(rep->dimnuc_kind == TorusReport::DimKind::UpperBound &&
                      rep->dimnuc_value <= std::min<std::size_t>(5, r - 1),
                  e.name + ": bound " + std::to_string(rep->dimnuc_value));
    }
  }
  std::mt19937_64 rng(99);
  for (std::size_t r = 2; r <= 7; ++r)
    for (bool irr : {false, true})
      for (int t = 0; t < 3; ++t) {
        const ThetaMatrix th = random_theta(rng, r, irr);
        const TorusReport rep = dimnuc(th);
        const std::string tag = "random theta r=" + std::to_string(r);
        if (rep.rational_class) {
          ++rational;
          out.require(rep.dimnuc_kind == TorusReport::DimKind::Exact && rep.dimnuc_value == r, tag + ": exact");
        } else {
          ++irrational;
          out.require(rep.dimnuc_kind == TorusReport::DimKind::UpperBound &&
                          rep.dimnuc_value <= std::min<std::size_t>(5, r - 1),
                      tag + ": bound");
        }
      }
  if (out.ok) out.detail = std::to_string(rational) + " rational, " + std::to_string(irrational) + " irrational jobs";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "rotation classification", 1, rotation_classification},
      {2, "twisted generic dimension", 30, twisted_generic_dimension},
      {3, "Mackey vs oracle", 60, mackey_vs_oracle},
      {4, "Heisenberg obstruction", 1, heisenberg_obstruction},
      {5, "central extension invariants", 5, extension_invariants},
      {6, "degeneracy and d", 10, degeneracy},
      {7, "classification chain coherence", 30, classification_chain},
      {8, "centralizer and Phi pipeline", 60, phi_pipeline},
      {9, "integer dim_nuc output", 5, dimnuc_outputs},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.limit_s) {
      o.ok = false;
      o.detail = "over the time limit of " + std::to_string(c.limit_s) + " s";
    }
    failed += !o.ok;
    std::printf("criterion %d %-32s %s  %.3f s  %s\n", c.id, c.name, o.ok ? "PASS" : "FAIL", secs, o.detail.c_str());
  }
  return failed ? 1 : 0;
}
