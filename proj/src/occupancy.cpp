#include "occupancy.hpp"

#include <bit>
#include <cstdint>

#include <Eigen/Dense>
#include <Eigen/IterativeLinearSolvers>

#include "zdt/errors.hpp"

namespace zdt::detail {

// Matrix-free operator x -> x - delta M^T x for the profile chain. Only the
// per-profile cooperation probabilities are stored; rows of M are rebuilt on
// the fly, so memory stays O(n 2^n).
class DiscountedTransposeOperator;

}  // namespace zdt::detail

namespace Eigen::internal {
template <>
struct traits<zdt::detail::DiscountedTransposeOperator>
    : public Eigen::internal::traits<Eigen::SparseMatrix<double>> {};
}  // namespace Eigen::internal

namespace zdt::detail {

class DiscountedTransposeOperator : public Eigen::EigenBase<DiscountedTransposeOperator> {
public:
  using Scalar = double;
  using RealScalar = double;
  using StorageIndex = int;
  enum { ColsAtCompileTime = Eigen::Dynamic, MaxColsAtCompileTime = Eigen::Dynamic, IsRowMajor = false };

  DiscountedTransposeOperator(const std::vector<double>& coop, int n, double delta)
      : coop_(&coop), n_(n), size_(Eigen::Index{1} << n), delta_(delta), row_(static_cast<std::size_t>(size_)) {}

  Eigen::Index rows() const { return size_; }
  Eigen::Index cols() const { return size_; }

  template <typename Rhs>
  Eigen::Product<DiscountedTransposeOperator, Rhs, Eigen::AliasFreeProduct> operator*(
      const Eigen::MatrixBase<Rhs>& x) const {
    return Eigen::Product<DiscountedTransposeOperator, Rhs, Eigen::AliasFreeProduct>(*this, x.derived());
  }

  template <typename Dest, typename Rhs>
  void apply_add(Dest& dst, const Rhs& x, double alpha) const {
    // dst += alpha (x - delta M^T x)
    for (Eigen::Index s = 0; s < size_; ++s) {
      const double xs = x(s);
      dst(s) += alpha * xs;
      if (xs == 0.0) continue;
      product_distribution(coop_->data() + s * n_, n_, row_.data());
      const double w = -alpha * delta_ * xs;
      for (Eigen::Index t = 0; t < size_; ++t) dst(t) += w * row_[static_cast<std::size_t>(t)];
    }
  }

private:
  const std::vector<double>* coop_;
  int n_;
  Eigen::Index size_;
  double delta_;
  mutable std::vector<double> row_;
};

}  // namespace zdt::detail

namespace Eigen::internal {
template <typename Rhs>
struct generic_product_impl<zdt::detail::DiscountedTransposeOperator, Rhs, SparseShape, DenseShape, GemvProduct>
    : generic_product_impl_base<zdt::detail::DiscountedTransposeOperator, Rhs,
                                generic_product_impl<zdt::detail::DiscountedTransposeOperator, Rhs>> {
  using Scalar = typename Product<zdt::detail::DiscountedTransposeOperator, Rhs>::Scalar;

  template <typename Dest>
  static void scaleAndAddTo(Dest& dst, const zdt::detail::DiscountedTransposeOperator& lhs, const Rhs& rhs,
                            const Scalar& alpha) {
    lhs.apply_add(dst, rhs, alpha);
  }
};
}  // namespace Eigen::internal

namespace zdt::detail {

std::vector<double> next_round_coop(const StrategyProfile& profile) {
  const int n = profile.n();
  const std::size_t states = std::size_t{1} << n;
  std::vector<double> coop(states * static_cast<std::size_t>(n));
  for (std::size_t s = 0; s < states; ++s) {
    const int cooperators = std::popcount(static_cast<std::uint64_t>(s));
    for (int j = 0; j < n; ++j) {
      const bool cooperated = (s >> j) & 1U;
      const int z = cooperators - (cooperated ? 1 : 0);
      coop[s * n + j] = profile.strategies[static_cast<std::size_t>(j)].coop_prob(cooperated, z);
    }
  }
  return coop;
}

void product_distribution(const double* coop, int n, double* out) {
  out[0] = 1.0;
  std::size_t len = 1;
  for (int j = 0; j < n; ++j) {
    const double p = coop[j];
    const double q = 1.0 - p;
    for (std::size_t k = 0; k < len; ++k) {
      out[k + len] = out[k] * p;
      out[k] *= q;
    }
    len <<= 1;
  }
}

namespace {

std::vector<double> solve_dense(const std::vector<double>& coop, const Eigen::VectorXd& v0, int n,
                                double delta) {
  const Eigen::Index size = v0.size();
  // A = I - delta M^T, filled column by column from the rows of M.
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(size, size);
  std::vector<double> row(static_cast<std::size_t>(size));
  for (Eigen::Index s = 0; s < size; ++s) {
    product_distribution(coop.data() + s * n, n, row.data());
    for (Eigen::Index t = 0; t < size; ++t) a(t, s) -= delta * row[static_cast<std::size_t>(t)];
  }
  const Eigen::VectorXd x = a.partialPivLu().solve(v0);
  if (!x.allFinite()) throw NumericFailure("dense occupancy solve produced non-finite values");
  return {x.data(), x.data() + x.size()};
}

std::vector<double> solve_iterative(const std::vector<double>& coop, const Eigen::VectorXd& v0, int n,
                                    double delta) {
  DiscountedTransposeOperator op(coop, n, delta);
  Eigen::BiCGSTAB<DiscountedTransposeOperator, Eigen::IdentityPreconditioner> solver;
  solver.setTolerance(1e-14);
  solver.setMaxIterations(5000);
  solver.compute(op);
  // v0 is the leading term of the Neumann series, a reasonable first guess.
  const Eigen::VectorXd x = solver.solveWithGuess(v0, v0);
  if (solver.info() != Eigen::Success && solver.error() > 1e-11) {
    throw NumericFailure("iterative occupancy solve did not converge (residual " +
                         std::to_string(solver.error()) + ")");
  }
  return {x.data(), x.data() + x.size()};
}

}  // namespace

std::vector<double> discounted_occupancy(const StrategyProfile& profile, double delta, SolverKind solver) {
  const int n = profile.n();
  const auto coop = next_round_coop(profile);
  const auto v0_std = initial_distribution(profile);
  const Eigen::VectorXd v0 = Eigen::Map<const Eigen::VectorXd>(v0_std.data(), static_cast<Eigen::Index>(v0_std.size()));
  if (solver == SolverKind::Auto) solver = n <= kDenseMaxPlayers ? SolverKind::Dense : SolverKind::Iterative;
  return solver == SolverKind::Dense ? solve_dense(coop, v0, n, delta) : solve_iterative(coop, v0, n, delta);
}

}  // namespace zdt::detail
