#include "vatwist/reps/decompose.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>

#include "vatwist/error.hpp"

namespace vatwist {
namespace {

constexpr std::size_t kChunks = 64;
constexpr double kCharTol = 1e-6;

CMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  const auto N = static_cast<Eigen::Index>(n);
  CMatrix X(N, N);
  for (Eigen::Index i = 0; i < N; ++i) {
    X(i, i) = normal(rng);
    for (Eigen::Index j = i + 1; j < N; ++j) {
      X(i, j) = Complex(normal(rng), normal(rng));
      X(j, i) = std::conj(X(i, j));
    }
  }
  return X;
}

/// Groups of consecutive (sorted) eigenvalues closer than the gap tolerance.
std::vector<std::pair<Eigen::Index, Eigen::Index>> clusters(const Eigen::VectorXd& ev) {
  std::vector<std::pair<Eigen::Index, Eigen::Index>> out;
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  const double gap = 1e-7 * scale;
  Eigen::Index start = 0;
  for (Eigen::Index i = 1; i <= ev.size(); ++i) {
    if (i == ev.size() || ev(i) - ev(i - 1) > gap) {
      out.emplace_back(start, i - start);
      start = i;
    }
  }
  return out;
}

double norm_of(const std::vector<Complex>& chi) {
  double s = 0;
  for (const auto& z : chi) s += std::norm(z);
  return s / static_cast<double>(chi.size());
}

bool same_character(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > kCharTol) return false;
  return true;
}

std::vector<Complex> rounded(std::vector<Complex> chi) {
  for (auto& z : chi) z = round_character_value(z);
  return chi;
}

GroupRep restrict_to_subspace(const GroupRep& pi, const CMatrix& V, kernels::Exec exec) {
  GroupRep out;
  out.dim = static_cast<std::size_t>(V.cols());
  out.dense = kernels::map_indices<CMatrix>(
      pi.group_order(), [&](std::size_t g) { return CMatrix(V.adjoint() * pi.apply(static_cast<int>(g), V)); }, exec);
  return out;
}

void sort_components(std::vector<Component>& comps) {
  std::stable_sort(comps.begin(), comps.end(), [](const Component& a, const Component& b) {
    if (a.rep.dim != b.rep.dim) return a.rep.dim < b.rep.dim;
    return character_key_less(a.character, b.character);
  });
}

std::vector<Component> decompose_once(const FinGroup& Q, const GroupRep& pi, const DecomposeOptions& opt,
                                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const CMatrix H = average_commutant(pi, random_hermitian(pi.dim, rng), opt.exec);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(H);
  if (es.info() != Eigen::Success) return {};
  const auto& vecs = es.eigenvectors();

  std::vector<Component> comps;
  for (auto [start, len] : clusters(es.eigenvalues())) {
    const CMatrix V = vecs.middleCols(start, len);
    std::vector<Complex> chi = kernels::map_indices<Complex>(
        Q.order(), [&](std::size_t g) { return Complex((V.adjoint() * pi.apply(static_cast<int>(g), V)).trace()); },
        opt.exec);
    if (std::abs(norm_of(chi) - 1.0) > std::max(opt.tol, 1e-12) * 1e3) return {};
    chi = rounded(std::move(chi));
    auto hit = std::find_if(comps.begin(), comps.end(),
                            [&](const Component& c) { return same_character(c.character, chi); });
    if (hit != comps.end()) {
      ++hit->multiplicity;
      continue;
    }
    Component c;
    c.rep = restrict_to_subspace(pi, V, opt.exec);
    c.character = std::move(chi);
    comps.push_back(std::move(c));
  }
  std::size_t total = 0;
  for (const auto& c : comps) total += c.rep.dim * c.multiplicity;
  if (total != pi.dim) return {};
  sort_components(comps);
  return comps;
}

std::uint64_t attempt_seed(std::uint64_t seed, int attempt) {
  return seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(attempt);
}

}  // namespace

CMatrix average_commutant(const GroupRep& pi, const CMatrix& X, kernels::Exec exec) {
  const std::size_t n = pi.group_order();
  const std::size_t per = (n + kChunks - 1) / kChunks;
  std::vector<CMatrix> partial = kernels::map_indices<CMatrix>(
      kChunks,
      [&](std::size_t c) {
        CMatrix acc = CMatrix::Zero(X.rows(), X.cols());
        for (std::size_t g = c * per; g < std::min(n, (c + 1) * per); ++g) acc += pi.conjugate(static_cast<int>(g), X);
        return acc;
      },
      exec);
  CMatrix sum = CMatrix::Zero(X.rows(), X.cols());
  for (const auto& p : partial) sum += p;
  sum /= static_cast<double>(n);
  // Restore exact self-adjointness before the eigensolver.
  return (sum + sum.adjoint()) / 2.0;
}

std::vector<Component> decompose(const FinGroup& Q, const GroupRep& pi, const DecomposeOptions& opt) {
  if (pi.group_order() != Q.order()) throw Error(ErrorKind::InvalidInput, "representation does not match group order");
  for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
    auto comps = decompose_once(Q, pi, opt, attempt_seed(opt.seed, attempt));
    if (!comps.empty()) return comps;
  }
  throw Error(ErrorKind::DecompositionFailed,
              "eigenspace splitting did not produce irreducible components after " + std::to_string(opt.max_attempts) +
                  " commutant samples");
}

std::vector<IrrepRecord> finite_irreps(const FinGroup& Q, const DecomposeOptions& opt) {
  const std::size_t N = Q.order();
  if (N > kMaxFiniteIrrepsOrder)
    throw Error(ErrorKind::ResourceBound, "finite_irreps: group order " + std::to_string(N) + " exceeds 5000");
  const auto n = static_cast<Eigen::Index>(N);

  for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
    // Commutant of the left regular representation: H(x, y) = c(y^-1 x)
    // with c(a^-1) = conj c(a).
    std::mt19937_64 rng(attempt_seed(opt.seed, attempt));
    std::normal_distribution<double> normal;
    std::vector<Complex> c(N);
    std::vector<char> set(N, 0);
    for (std::size_t a = 0; a < N; ++a) {
      if (set[a]) continue;
      const auto ai = static_cast<std::size_t>(Q.inv(static_cast<int>(a)));
      if (ai == a) {
        c[a] = normal(rng);
      } else {
        c[a] = Complex(normal(rng), normal(rng));
        c[ai] = std::conj(c[a]);
        set[ai] = 1;
      }
      set[a] = 1;
    }
    CMatrix H(n, n);
    kernels::for_each_index(
        N,
        [&](std::size_t y) {
          const int yi = Q.inv(static_cast<int>(y));
          for (std::size_t x = 0; x < N; ++x)
            H(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) =
                c[static_cast<std::size_t>(Q.mul(yi, static_cast<int>(x)))];
        },
        opt.exec);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(H);
    if (es.info() != Eigen::Success) continue;
    const CMatrix& vecs = es.eigenvectors();

    // (V^* lambda(g) V) has trace sum_x conj(V(x, :)) . V(g^-1 x, :).
    struct Found {
      std::vector<Complex> chi;
      Eigen::Index start, len;
      std::size_t count;
    };
    std::vector<Found> found;
    bool ok = true;
    for (auto [start, len] : clusters(es.eigenvalues())) {
      const CMatrix V = vecs.middleCols(start, len);
      std::vector<Complex> chi = kernels::map_indices<Complex>(
          N,
          [&](std::size_t g) {
            const int gi = Q.inv(static_cast<int>(g));
            Complex t = 0;
            for (std::size_t x = 0; x < N; ++x)
              t += V.row(static_cast<Eigen::Index>(x)).dot(V.row(Q.mul(gi, static_cast<int>(x))));
            return t;
          },
          opt.exec);
      if (std::abs(norm_of(chi) - 1.0) > 1e-6) {
        ok = false;
        break;
      }
      chi = rounded(std::move(chi));
      auto hit = std::find_if(found.begin(), found.end(), [&](const Found& f) { return same_character(f.chi, chi); });
      if (hit != found.end()) {
        ++hit->count;
      } else {
        found.push_back({std::move(chi), start, len, 1});
      }
    }
    if (!ok) continue;
    std::size_t sum_sq = 0;
    for (const auto& f : found) {
      const auto dim = static_cast<std::size_t>(std::llround(f.chi[static_cast<std::size_t>(Q.id())].real()));
      if (f.count != dim || static_cast<std::size_t>(f.len) != dim) ok = false;
      sum_sq += dim * dim;
    }
    if (!ok || sum_sq != N) continue;

    GroupRep lambda;
    lambda.dim = N;
    lambda.perm.resize(N);
    lambda.phase.assign(N, std::vector<Complex>(N, Complex(1.0, 0.0)));
    for (std::size_t g = 0; g < N; ++g) {
      lambda.perm[g].resize(N);
      for (std::size_t x = 0; x < N; ++x) lambda.perm[g][x] = Q.mul(static_cast<int>(g), static_cast<int>(x));
    }
    std::vector<Component> comps;
    for (auto& f : found) {
      Component comp;
      comp.rep = restrict_to_subspace(lambda, vecs.middleCols(f.start, f.len), opt.exec);
      comp.character = std::move(f.chi);
      comp.multiplicity = f.count;
      comps.push_back(std::move(comp));
    }
    sort_components(comps);
    std::vector<IrrepRecord> out;
    for (auto& comp : comps) {
      IrrepRecord rec;
      rec.dim = comp.rep.dim;
      rec.character = std::move(comp.character);
      rec.multiplicity = comp.multiplicity;
      rec.finite_rep = std::move(comp.rep);
      out.push_back(std::move(rec));
    }
    return out;
  }
  throw Error(ErrorKind::DecompositionFailed, "finite_irreps: regular representation did not split after " +
                                                  std::to_string(opt.max_attempts) + " commutant samples");
}

std::vector<int> left_transversal(const FinGroup& Q, const std::vector<int>& H) {
  std::vector<char> seen(Q.order(), 0);
  std::vector<int> reps;
  for (std::size_t g = 0; g < Q.order(); ++g) {
    if (seen[g]) continue;
    reps.push_back(static_cast<int>(g));
    for (int h : H) seen[static_cast<std::size_t>(Q.mul(static_cast<int>(g), h))] = 1;
  }
  return reps;
}

GroupRep induce_finite(const FinGroup& Q, const std::vector<int>& H, std::size_t dim_h,
                       const std::function<CMatrix(int)>& rep_h) {
  const std::vector<int> T = left_transversal(Q, H);
  std::vector<int> coset_of(Q.order(), -1);
  for (std::size_t j = 0; j < T.size(); ++j)
    for (int h : H) coset_of[static_cast<std::size_t>(Q.mul(T[j], h))] = static_cast<int>(j);
  std::vector<char> in_h(Q.order(), 0);
  for (int h : H) in_h[static_cast<std::size_t>(h)] = 1;

  GroupRep out;
  out.dim = T.size() * dim_h;
  const std::size_t N = Q.order();
  if (dim_h == 1) {
    out.perm.assign(N, std::vector<int>(T.size()));
    out.phase.assign(N, std::vector<Complex>(T.size()));
    for (std::size_t x = 0; x < N; ++x)
      for (std::size_t j = 0; j < T.size(); ++j) {
        const int y = Q.mul(static_cast<int>(x), T[j]);
        const auto i = static_cast<std::size_t>(coset_of[static_cast<std::size_t>(y)]);
        out.perm[x][j] = static_cast<int>(i);
        out.phase[x][j] = rep_h(Q.mul(Q.inv(T[i]), y))(0, 0);
      }
    return out;
  }
  const auto d = static_cast<Eigen::Index>(dim_h);
  out.dense.resize(N);
  for (std::size_t x = 0; x < N; ++x) {
    CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(out.dim), static_cast<Eigen::Index>(out.dim));
    for (std::size_t j = 0; j < T.size(); ++j) {
      const int y = Q.mul(static_cast<int>(x), T[j]);
      const auto i = static_cast<std::size_t>(coset_of[static_cast<std::size_t>(y)]);
      m.block(static_cast<Eigen::Index>(i) * d, static_cast<Eigen::Index>(j) * d, d, d) = rep_h(Q.mul(Q.inv(T[i]), y));
    }
    out.dense[x] = std::move(m);
  }
  return out;
}

bool character_key_less(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  auto key = [](Complex z) {
    return std::pair<long long, long long>(-std::llround(z.real() * 1e6), -std::llround(z.imag() * 1e6));
  };
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto ka = key(a[i]), kb = key(b[i]);
    if (ka != kb) return ka < kb;
  }
  return a.size() < b.size();
}

}  // namespace vatwist
