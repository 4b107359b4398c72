#include "qrg/roots.hpp"

#include <algorithm>
#include <random>

#include "qrg/error.hpp"
#include "qrg/modring.hpp"

namespace qrg {

namespace {

// Eigenvectors from a clustered solve are accurate to roughly eps/gap, so
// scalar-action checks get some slack over the clustering tolerance.
constexpr double kResidualSlack = 100.0;
constexpr int kMaxSplitAttempts = 8;

double max_abs(const Eigen::MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

bool values_before(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i].real() - b[i].real()) > 1e-6) return a[i].real() < b[i].real();
    if (std::abs(a[i].imag() - b[i].imag()) > 1e-6) return a[i].imag() < b[i].imag();
  }
  return false;
}

struct Splitter {
  const std::vector<Eigen::MatrixXcd>& family;
  double tolerance;
  std::mt19937_64 rng;
  std::vector<Root> out;

  // Root values when every member is scalar on span(q).
  bool scalar_values(const Eigen::MatrixXcd& q, std::vector<std::complex<double>>& values) const {
    values.clear();
    const double c = static_cast<double>(q.cols());
    for (const auto& s : family) {
      const Eigen::MatrixXcd sq = s * q;
      const std::complex<double> lambda = (q.adjoint() * sq).trace() / c;
      if (max_abs(sq - lambda * q) > kResidualSlack * tolerance) return false;
      values.push_back(lambda);
    }
    return true;
  }

  void split(const Eigen::MatrixXcd& q) {
    std::vector<std::complex<double>> values;
    if (scalar_values(q, values)) {
      out.push_back(Root{std::move(values), q});
      return;
    }
    std::normal_distribution<double> normal;
    const auto dim = q.rows();
    for (int attempt = 0; attempt < kMaxSplitAttempts; ++attempt) {
      // Hermitian parts of S and of iS, so conjugate eigenvalues separate.
      Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(dim, dim);
      const std::complex<double> i(0.0, 1.0);
      for (const auto& s : family) {
        x += normal(rng) * 0.5 * (s + s.adjoint());
        x += normal(rng) * 0.5 * (i * s - i * s.adjoint());
      }
      const Eigen::MatrixXcd y = q.adjoint() * x * q;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(0.5 * (y + y.adjoint()));
      const Eigen::VectorXd& ev = solver.eigenvalues();
      const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
      std::vector<std::pair<Eigen::Index, Eigen::Index>> clusters;
      Eigen::Index start = 0;
      for (Eigen::Index j = 1; j <= ev.size(); ++j) {
        if (j == ev.size() || ev[j] - ev[j - 1] > tolerance * scale) {
          clusters.emplace_back(start, j - start);
          start = j;
        }
      }
      if (clusters.size() < 2) continue;
      for (const auto& [first, count] : clusters) {
        split(q * solver.eigenvectors().middleCols(first, count));
      }
      return;
    }
    fail(ErrorKind::Internal, "random combinations did not split a non-scalar block");
  }
};

}  // namespace

std::vector<std::size_t> RootDecomposition::dimensions() const {
  std::vector<std::size_t> d;
  for (const auto& r : roots) d.push_back(r.dimension());
  return d;
}

RootDecomposition root_decomposition(const std::vector<Eigen::MatrixXcd>& family, double tolerance,
                                     std::uint64_t seed) {
  if (family.empty()) fail(ErrorKind::InvalidArgument, "empty matrix family");
  const auto d = family.front().rows();
  for (const auto& s : family) {
    if (s.rows() != d || s.cols() != d) fail(ErrorKind::InvalidArgument, "family members differ in shape");
    if (max_abs(s.adjoint() * s - Eigen::MatrixXcd::Identity(d, d)) > tolerance) {
      fail(ErrorKind::NotUnitary, "family member is not unitary");
    }
  }
  for (std::size_t a = 0; a < family.size(); ++a)
    for (std::size_t b = a + 1; b < family.size(); ++b)
      if (max_abs(family[a] * family[b] - family[b] * family[a]) > tolerance) {
        fail(ErrorKind::NotCommuting, "members " + std::to_string(a) + " and " + std::to_string(b) + " do not commute");
      }

  Splitter splitter{family, tolerance, std::mt19937_64(seed), {}};
  splitter.split(Eigen::MatrixXcd::Identity(d, d));

  RootDecomposition out;
  out.tolerance = tolerance;
  out.roots = std::move(splitter.out);
  std::sort(out.roots.begin(), out.roots.end(), [](const Root& a, const Root& b) {
    if (a.dimension() != b.dimension()) return a.dimension() > b.dimension();
    return values_before(a.values, b.values);
  });
  return out;
}

ConjugatedRoot conjugated_root(const std::vector<Eigen::MatrixXcd>& family, const Eigen::MatrixXcd& h,
                               const RootDecomposition& decomposition, std::size_t root) {
  if (root >= decomposition.roots.size()) fail(ErrorKind::InvalidArgument, "root index out of range");
  const double tol = decomposition.tolerance;
  const auto d = h.rows();
  if (h.cols() != d || max_abs(h.adjoint() * h - Eigen::MatrixXcd::Identity(d, d)) > tol) {
    fail(ErrorKind::NotUnitary, "conjugating matrix is not unitary");
  }
  const Eigen::MatrixXcd h_inv = h.adjoint();
  const Eigen::MatrixXcd& basis = decomposition.roots[root].basis;
  const double c = static_cast<double>(basis.cols());

  ConjugatedRoot result;
  for (const auto& s : family) {
    const Eigen::MatrixXcd mb = h * s * h_inv * basis;
    const std::complex<double> lambda = (basis.adjoint() * mb).trace() / c;
    if (max_abs(mb - lambda * basis) > kResidualSlack * tol) {
      fail(ErrorKind::NotNormalizing, "h S h^-1 is not scalar on the root subspace");
    }
    result.values.push_back(lambda);
  }

  bool found = false;
  for (std::size_t j = 0; j < decomposition.roots.size(); ++j) {
    const auto& cand = decomposition.roots[j].values;
    bool same = true;
    for (std::size_t i = 0; i < cand.size(); ++i) same = same && std::abs(cand[i] - result.values[i]) <= 1e-6;
    if (same) {
      result.index = j;
      found = true;
      break;
    }
  }
  if (!found) fail(ErrorKind::NotNormalizing, "r_h is not a root of the family");

  const Eigen::MatrixXcd moved = h_inv * basis;
  result.projector_gap = max_abs(moved * moved.adjoint() - decomposition.roots[result.index].projector());
  if (result.projector_gap > kResidualSlack * tol) {
    fail(ErrorKind::NotNormalizing, "h^-1 V(r) differs from V(r_h)");
  }
  return result;
}

Eigen::MatrixXcd nonzero_vector_action(const ModMatrix& a) {
  const std::uint32_t p = a.modulus;
  const std::uint32_t k = a.dim;
  if (!is_prime(p)) fail(ErrorKind::InvalidArgument, "vector action needs a prime modulus");
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    count *= p;
    if (count > 4096) fail(ErrorKind::TooLarge, "vector action is built for p^k <= 4096");
  }
  const auto n = static_cast<Eigen::Index>(count - 1);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  std::vector<std::uint32_t> v(k), w(k);
  for (std::uint64_t code = 1; code < count; ++code) {
    std::uint64_t rest = code;
    for (std::uint32_t i = 0; i < k; ++i) {
      v[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    std::uint64_t image = 0;
    for (std::uint32_t i = k; i-- > 0;) {
      std::uint64_t acc = 0;
      for (std::uint32_t j = 0; j < k; ++j) acc += std::uint64_t{a.at(i, j)} * v[j];
      image = image * p + acc % p;
    }
    if (image == 0) fail(ErrorKind::InvalidArgument, "matrix is singular modulo p");
    m(static_cast<Eigen::Index>(image - 1), static_cast<Eigen::Index>(code - 1)) = 1.0;
  }
  return m;
}

}  // namespace qrg
