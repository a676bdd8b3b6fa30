#include "vatwist/groups/va_group.hpp"

#include <sstream>

#include "vatwist/error.hpp"
#include "vatwist/kernels/parallel.hpp"

namespace vatwist {
namespace {

long checked_add(long a, long b) {
  long out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorKind::ResourceBound, "lattice coordinate overflow");
  return out;
}

long checked_mul(long a, long b) {
  long out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorKind::ResourceBound, "lattice coordinate overflow");
  return out;
}

std::string vec_str(const ZVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace

std::string GroupElement::str() const { return "(" + vec_str(vec) + ", " + std::to_string(pt) + ")"; }

VAGroup::VAGroup(std::size_t rank, FinGroup point_group, std::vector<IntMatrix> action, std::vector<ZVec> delta)
    : rank_(rank), point_(std::move(point_group)), action_(std::move(action)), delta_(std::move(delta)) {
  const std::size_t n = point_.order();
  if (action_.size() != n) throw Error(ErrorKind::InvalidGroup, "action must list one matrix per point-group element");
  for (const auto& a : action_)
    if (a.rows() != rank_ || a.cols() != rank_) throw Error(ErrorKind::RankMismatch, "action matrix has wrong size");
  if (delta_.empty()) delta_.assign(n * n, ZVec(rank_, 0));
  if (delta_.size() != n * n) throw Error(ErrorKind::InvalidGroup, "translation cocycle must have |D|^2 entries");
  for (const auto& v : delta_)
    if (v.size() != rank_) throw Error(ErrorKind::RankMismatch, "translation cocycle vector has wrong length");
  action_small_.resize(n);
  for (std::size_t d = 0; d < n; ++d) {
    action_small_[d].resize(rank_ * rank_);
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = 0; j < rank_; ++j) action_small_[d][i * rank_ + j] = to_long(action_[d](i, j));
  }
  // delta(id,id) = c forces delta(id,d) = c and delta(d,id) = rho(d)c; the
  // section shift by -c gives delta'(d1,d2) = delta(d1,d2) - rho(d1)c.
  const ZVec c = this->delta(point_.id(), point_.id());
  bool nonzero = false;
  for (long x : c) nonzero = nonzero || x != 0;
  if (nonzero) {
    for (std::size_t d1 = 0; d1 < n; ++d1) {
      ZVec shift = act(static_cast<int>(d1), c);
      for (std::size_t d2 = 0; d2 < n; ++d2)
        for (std::size_t i = 0; i < rank_; ++i) delta_[d1 * n + d2][i] -= shift[i];
    }
  }
}

VAGroup VAGroup::lattice(std::size_t r) {
  return VAGroup(r, FinGroup::trivial(), {IntMatrix::identity(r)});
}

VAGroup VAGroup::semidirect(std::size_t r, FinGroup point_group, std::vector<IntMatrix> action) {
  return VAGroup(r, std::move(point_group), std::move(action));
}

GroupElement VAGroup::identity() const { return {ZVec(rank_, 0), point_.id()}; }

GroupElement VAGroup::lattice_element(ZVec v) const {
  if (v.size() != rank_) throw Error(ErrorKind::RankMismatch, "lattice vector has wrong length");
  return {std::move(v), point_.id()};
}

GroupElement VAGroup::basis_element(std::size_t i) const {
  ZVec v(rank_, 0);
  v.at(i) = 1;
  return {std::move(v), point_.id()};
}

GroupElement VAGroup::point_lift(int d) const { return {ZVec(rank_, 0), d}; }

ZVec VAGroup::act(int d, const ZVec& v) const {
  const auto& a = action_small_[static_cast<std::size_t>(d)];
  ZVec out(rank_, 0);
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) out[i] = checked_add(out[i], checked_mul(a[i * rank_ + j], v[j]));
  return out;
}

void VAGroup::check_element(const GroupElement& g) const {
  if (g.vec.size() != rank_ || g.pt < 0 || static_cast<std::size_t>(g.pt) >= point_.order()) {
    throw Error(ErrorKind::RankMismatch, "element " + g.str() + " does not belong to this group");
  }
}

GroupElement VAGroup::multiply(const GroupElement& a, const GroupElement& b) const {
  check_element(a);
  check_element(b);
  ZVec v = act(a.pt, b.vec);
  const ZVec& d = delta(a.pt, b.pt);
  for (std::size_t i = 0; i < rank_; ++i) v[i] = checked_add(checked_add(v[i], a.vec[i]), d[i]);
  return {std::move(v), point_.mul(a.pt, b.pt)};
}

GroupElement VAGroup::invert(const GroupElement& a) const {
  check_element(a);
  const int dinv = point_.inv(a.pt);
  ZVec s = a.vec;
  const ZVec& d = delta(a.pt, dinv);
  for (std::size_t i = 0; i < rank_; ++i) s[i] = checked_add(s[i], d[i]);
  ZVec w = act(dinv, s);
  for (auto& x : w) x = -x;
  return {std::move(w), dinv};
}

GroupElement VAGroup::power(const GroupElement& a, long k) const {
  if (k < 0) return power(invert(a), -k);
  GroupElement result = identity();
  GroupElement base = a;
  while (k > 0) {
    if (k & 1) result = multiply(result, base);
    k >>= 1;
    if (k) base = multiply(base, base);
  }
  return result;
}

ValidationReport validate(const VAGroup& g) {
  const FinGroup& D = g.point_group();
  const std::size_t n = D.order();
  const std::size_t r = g.rank();
  if (n > FinGroup::kExhaustiveCheckOrder) {
    return {false, "point group order " + std::to_string(n) + " exceeds exhaustive validation cap"};
  }
  if (!g.action(D.id()).is_identity()) return {false, "rho(id) is not the identity"};
  for (std::size_t d = 0; d < n; ++d) {
    Integer det = determinant(g.action(static_cast<int>(d)));
    if (det != 1 && det != -1) return {false, "rho(" + std::to_string(d) + ") is not in GL(r,Z)"};
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const int ia = static_cast<int>(a), ib = static_cast<int>(b);
      if (g.action(ia) * g.action(ib) != g.action(D.mul(ia, ib))) {
        return {false, "rho is not a homomorphism at (" + std::to_string(a) + "," + std::to_string(b) + ")"};
      }
    }
  for (std::size_t d = 0; d < n; ++d) {
    for (long x : g.delta(D.id(), static_cast<int>(d)))
      if (x != 0) return {false, "delta(id," + std::to_string(d) + ") != 0"};
    for (long x : g.delta(static_cast<int>(d), D.id()))
      if (x != 0) return {false, "delta(" + std::to_string(d) + ",id) != 0"};
  }
  // rho(d1) delta(d2,d3) - delta(d1 d2, d3) + delta(d1, d2 d3) - delta(d1, d2) = 0
  auto defect = [&](int d1, int d2, int d3) {
    ZVec lhs = g.act(d1, g.delta(d2, d3));
    const ZVec& b = g.delta(D.mul(d1, d2), d3);
    const ZVec& c = g.delta(d1, D.mul(d2, d3));
    const ZVec& e = g.delta(d1, d2);
    for (std::size_t i = 0; i < r; ++i) lhs[i] = lhs[i] - b[i] + c[i] - e[i];
    return lhs;
  };
  auto bad = kernels::find_first(n, [&](std::size_t d1) {
    for (std::size_t d2 = 0; d2 < n; ++d2)
      for (std::size_t d3 = 0; d3 < n; ++d3)
        for (long x : defect(static_cast<int>(d1), static_cast<int>(d2), static_cast<int>(d3)))
          if (x != 0) return true;
    return false;
  });
  if (bad) {
    const int d1 = static_cast<int>(*bad);
    for (std::size_t d2 = 0; d2 < n; ++d2)
      for (std::size_t d3 = 0; d3 < n; ++d3) {
        ZVec v = defect(d1, static_cast<int>(d2), static_cast<int>(d3));
        bool nz = false;
        for (long x : v) nz = nz || x != 0;
        if (nz) {
          return {false, "twisted cocycle identity fails at (" + std::to_string(d1) + "," + std::to_string(d2) +
                             "," + std::to_string(d3) + "): defect " + vec_str(v)};
        }
      }
  }
  return {};
}

std::size_t hirsch_length(const VAGroup& g) { return g.rank(); }

VAGroup preimage(const VAGroup& g, const Subgroup& k) {
  const std::size_t n = k.to_parent.size();
  std::vector<IntMatrix> action;
  action.reserve(n);
  for (int d : k.to_parent) action.push_back(g.action(d));
  std::vector<ZVec> delta(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) delta[a * n + b] = g.delta(k.to_parent[a], k.to_parent[b]);
  return VAGroup(g.rank(), k.group, std::move(action), std::move(delta));
}

CentralizerData centralizer_of_lattice(const VAGroup& g) {
  std::vector<int> trivial;
  for (std::size_t d = 0; d < g.point_group().order(); ++d)
    if (g.action(static_cast<int>(d)).is_identity()) trivial.push_back(static_cast<int>(d));
  CentralizerData out;
  out.kernel = make_subgroup(g.point_group(), trivial);
  out.centralizer = preimage(g, out.kernel);
  out.index = static_cast<long>(g.point_group().order() / trivial.size());
  return out;
}

std::size_t quotient_order(const VAGroup& g, long m) {
  if (m < 1) throw Error(ErrorKind::InvalidInput, "quotient modulus must be positive");
  std::size_t size = g.point_group().order();
  for (std::size_t i = 0; i < g.rank(); ++i) {
    size *= static_cast<std::size_t>(m);
    if (size > (1u << 30)) throw Error(ErrorKind::ResourceBound, "finite quotient too large");
  }
  return size;
}

int quotient_index(const VAGroup& g, long m, const GroupElement& x) {
  long idx = 0;
  long scale = 1;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    idx += floor_mod(x.vec[i], m) * scale;
    scale *= m;
  }
  return static_cast<int>(idx + static_cast<long>(x.pt) * scale);
}

GroupElement quotient_element(const VAGroup& g, long m, int index) {
  long lattice_size = 1;
  for (std::size_t i = 0; i < g.rank(); ++i) lattice_size *= m;
  GroupElement x{ZVec(g.rank(), 0), static_cast<int>(index / lattice_size)};
  long rest = index % lattice_size;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    x.vec[i] = rest % m;
    rest /= m;
  }
  return x;
}

FiniteQuotient::FiniteQuotient(const VAGroup& g, long m) : rank_(g.rank()), m_(m) {
  order_ = quotient_order(g, m);
  if (order_ > kMaxOrder) {
    throw Error(ErrorKind::ResourceBound,
                "finite quotient of order " + std::to_string(order_) + " exceeds cap " + std::to_string(kMaxOrder));
  }
  lattice_size_ = order_ / g.point_group().order();
  std::vector<std::int32_t> table(order_ * order_);
  kernels::for_each_index(order_, [&](std::size_t a) {
    const GroupElement ga = quotient_element(g, m, static_cast<int>(a));
    for (std::size_t b = 0; b < order_; ++b) {
      const GroupElement gb = quotient_element(g, m, static_cast<int>(b));
      table[a * order_ + b] = quotient_index(g, m, g.multiply(ga, gb));
    }
  });
  quotient_ = FinGroup::from_table(order_, std::move(table));
}

int FiniteQuotient::index_of(const GroupElement& g) const {
  long idx = 0;
  long scale = 1;
  for (std::size_t i = 0; i < rank_; ++i) {
    idx += floor_mod(g.vec[i], m_) * scale;
    scale *= m_;
  }
  return static_cast<int>(idx + static_cast<long>(g.pt) * scale);
}

GroupElement FiniteQuotient::element(int index) const {
  const long ls = static_cast<long>(lattice_size_);
  GroupElement x{ZVec(rank_, 0), static_cast<int>(index / ls)};
  long rest = index % ls;
  for (std::size_t i = 0; i < rank_; ++i) {
    x.vec[i] = rest % m_;
    rest /= m_;
  }
  return x;
}

FiniteQuotient finite_quotient(const VAGroup& g, long m) { return FiniteQuotient(g, m); }

}  // namespace vatwist
