#include "vatwist/groups/extension.hpp"

#include "vatwist/error.hpp"
#include "vatwist/kernels/parallel.hpp"

namespace vatwist {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Element (c, g) of the concrete extension.
struct Concrete {
  long c = 0;
  GroupElement g;
  friend bool operator==(const Concrete&, const Concrete&) = default;
};

class ConcreteExtension {
 public:
  ConcreteExtension(const VAGroup& G, const TorsionCocycle& tau) : G_(G), tau_(tau) {}

  Concrete mul(const Concrete& x, const Concrete& y) const {
    return {floor_mod(x.c + y.c + tau_(x.g, y.g), tau_.n()), G_.multiply(x.g, y.g)};
  }
  Concrete inv(const Concrete& x) const {
    GroupElement gi = G_.invert(x.g);
    // (c, g)(c', g^-1) = (c + c' + tau(g, g^-1), e)
    return {floor_mod(-x.c - tau_(x.g, gi), tau_.n()), gi};
  }
  Concrete pow(Concrete x, long k) const {
    if (k < 0) {
      x = inv(x);
      k = -k;
    }
    Concrete out{0, G_.identity()};
    while (k > 0) {
      if (k & 1) out = mul(out, x);
      x = mul(x, x);
      k >>= 1;
    }
    return out;
  }
  Concrete section(const GroupElement& g) const { return {0, g}; }
  const VAGroup& base() const { return G_; }

 private:
  const VAGroup& G_;
  const TorsionCocycle& tau_;
};

long checked_pow(long b, std::size_t e, long cap) {
  long out = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (__builtin_mul_overflow(out, b, &out) || out > cap) return cap + 1;
  }
  return out;
}

struct Ladder {
  const ConcreteExtension& ext;
  long s;
  std::vector<Concrete> h;

  Ladder(const ConcreteExtension& e, long scale) : ext(e), s(scale) {
    const auto& G = ext.base();
    for (std::size_t i = 0; i < G.rank(); ++i) {
      ZVec v(G.rank(), 0);
      v[i] = s;
      h.push_back(ext.section(G.lattice_element(v)));
    }
  }

  Concrete h_pow(const ZVec& x) const {
    Concrete out{0, ext.base().identity()};
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] != 0) out = ext.mul(out, ext.pow(h[i], x[i]));
    return out;
  }

  bool works() const {
    const auto& G = ext.base();
    const std::size_t r = G.rank();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j)
        if (!(ext.mul(h[i], h[j]) == ext.mul(h[j], h[i]))) return false;
    std::vector<Concrete> conjugators;
    for (std::size_t j = 0; j < r; ++j) conjugators.push_back(ext.section(G.basis_element(j)));
    for (std::size_t d = 0; d < G.point_group().order(); ++d)
      conjugators.push_back(ext.section(G.point_lift(static_cast<int>(d))));
    for (const auto& t : conjugators) {
      const Concrete ti = ext.inv(t);
      for (std::size_t i = 0; i < r; ++i) {
        ZVec e(r, 0);
        e[i] = 1;
        const Concrete lhs = ext.mul(ext.mul(t, h[i]), ti);
        if (!(lhs == h_pow(G.act(t.g.pt, e)))) return false;
      }
    }
    return true;
  }
};

}  // namespace

ExtensionResult central_extension(const VAGroup& G, const CocycleSpec& sigma, long n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "extension order must be positive");
  auto tau = std::make_shared<const TorsionCocycle>(sigma, n);
  const ConcreteExtension ext(G, *tau);
  const std::size_t r = G.rank();
  const std::size_t nd = G.point_group().order();
  const long cap = static_cast<long>(kMaxExtensionPointOrder);

  long s = 0;
  long lattice_cells = 0;
  for (long candidate : {1L, n, n * n}) {
    Ladder ladder(ext, candidate);
    if (!ladder.works()) continue;
    s = candidate;
    lattice_cells = checked_pow(candidate, r, cap);
    break;
  }
  if (s == 0) throw Error(ErrorKind::ValueNotTorsionOfOrderN, "no lattice scale gives a central extension");
  if (lattice_cells > cap || n * static_cast<long>(nd) * lattice_cells > cap)
    throw Error(ErrorKind::ResourceBound, "extended point group exceeds " + std::to_string(cap) + " elements");

  const Ladder ladder(ext, s);
  const std::size_t order = static_cast<std::size_t>(n * static_cast<long>(nd) * lattice_cells);
  ExtensionResult out;
  out.original_ = G;
  out.n_ = n;
  out.s_ = s;
  out.tau_ = tau;
  out.points_.resize(order);

  auto encode = [&](long c, const ZVec& w, int d) {
    long idx = 0, scale = 1;
    for (std::size_t i = 0; i < r; ++i) {
      idx += w[i] * scale;
      scale *= s;
    }
    return static_cast<int>(c + n * (idx + lattice_cells * d));
  };
  auto representative = [&](int index) {
    ExtensionResult::PointData p;
    long rest = index;
    p.c = rest % n;
    rest /= n;
    p.w.assign(r, 0);
    long cell = rest % lattice_cells;
    for (std::size_t i = 0; i < r; ++i) {
      p.w[i] = cell % s;
      cell /= s;
    }
    p.d = static_cast<int>(rest / lattice_cells);
    return p;
  };
  // rep(c, w, d) = (c, (w, d)) in the concrete extension.
  auto concrete_rep = [&](const ExtensionResult::PointData& p) { return Concrete{p.c, GroupElement{p.w, p.d}}; };
  // g~ = h^x rep  with  x = floor(v / s).
  auto normal_form = [&](const Concrete& g) {
    ZVec x(r);
    for (std::size_t i = 0; i < r; ++i) x[i] = floor_div(g.g.vec[i], s);
    const Concrete rep = ext.mul(ext.inv(ladder.h_pow(x)), g);
    return std::pair{x, encode(rep.c, rep.g.vec, rep.g.pt)};
  };

  for (std::size_t i = 0; i < order; ++i) out.points_[i] = representative(static_cast<int>(i));

  std::vector<std::int32_t> table(order * order);
  std::vector<ZVec> delta(order * order);
  kernels::for_each_index(order, [&](std::size_t a) {
    const Concrete ta = concrete_rep(out.points_[a]);
    for (std::size_t b = 0; b < order; ++b) {
      auto [x, idx] = normal_form(ext.mul(ta, concrete_rep(out.points_[b])));
      table[a * order + b] = idx;
      delta[a * order + b] = std::move(x);
    }
  });
  std::vector<IntMatrix> action;
  action.reserve(order);
  for (const auto& p : out.points_) action.push_back(G.action(p.d));

  FinGroup point = FinGroup::from_table(order, std::move(table));
  out.extended_ = VAGroup(r, std::move(point), std::move(action), std::move(delta));
  out.central_gen_ = GroupElement{ZVec(r, 0), encode(1 % n, ZVec(r, 0), G.point_group().id())};

  return out;
}

GroupElement ExtensionResult::project(const GroupElement& x) const {
  const auto& p = point_data(x.pt);
  GroupElement g{ZVec(x.vec.size()), p.d};
  for (std::size_t i = 0; i < x.vec.size(); ++i) g.vec[i] = s_ * x.vec[i] + p.w[i];
  return g;
}

GroupElement ExtensionResult::lift(const GroupElement& g) const {
  original_.check_element(g);
  const ConcreteExtension ext(original_, *tau_);
  const Ladder ladder(ext, s_);
  const std::size_t r = g.vec.size();
  ZVec x(r);
  for (std::size_t i = 0; i < r; ++i) x[i] = floor_div(g.vec[i], s_);
  const Concrete rep = ext.mul(ext.inv(ladder.h_pow(x)), ext.section(g));
  long idx = 0, scale = 1;
  for (std::size_t i = 0; i < r; ++i) {
    idx += rep.g.vec[i] * scale;
    scale *= s_;
  }
  return {x, static_cast<int>(rep.c + n_ * (idx + scale * rep.g.pt))};
}

GroupElement ExtensionResult::embed_centre(long k) const { return extended_.power(central_gen_, k); }

}  // namespace vatwist
