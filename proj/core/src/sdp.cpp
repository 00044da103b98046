#include "weylps/sdp.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace weylps::sdp {

std::vector<double> falling_coefficients(unsigned k) {
  std::vector<double> c{1.0};
  for (unsigned i = 0; i < k; ++i) {
    // multiply by (nu - i)
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j + 1] += c[j];
      next[j] -= static_cast<double>(i) * c[j];
    }
    c = std::move(next);
  }
  return c;
}

namespace {

struct Entry {
  unsigned k, a, b;
};

struct Layout {
  unsigned degree = 0;
  std::vector<unsigned> sizes;  // m_k
  std::vector<Entry> entries;   // upper triangles of all blocks
  std::vector<std::vector<double>> ff;

  explicit Layout(unsigned d) : degree(d) {
    for (unsigned k = 0; k <= d; ++k) {
      sizes.push_back((d - k) / 2 + 1);
      ff.push_back(falling_coefficients(k));
      for (unsigned a = 0; a < sizes.back(); ++a) {
        for (unsigned b = a; b < sizes.back(); ++b) entries.push_back({k, a, b});
      }
    }
  }

  // Coefficient-matching map: (D+1) x #entries.
  Eigen::MatrixXd matching() const {
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(degree + 1, static_cast<Eigen::Index>(entries.size()));
    for (std::size_t e = 0; e < entries.size(); ++e) {
      const auto& [k, a, b] = entries[e];
      const double mult = a == b ? 1.0 : 2.0;
      for (std::size_t i = 0; i < ff[k].size(); ++i) {
        const unsigned j = static_cast<unsigned>(i) + a + b;
        if (j <= degree) A(j, static_cast<Eigen::Index>(e)) += mult * ff[k][i];
      }
    }
    return A;
  }

  std::vector<Eigen::MatrixXd> blocks(const Eigen::VectorXd& g) const {
    std::vector<Eigen::MatrixXd> out;
    for (unsigned s : sizes) out.push_back(Eigen::MatrixXd::Zero(s, s));
    for (std::size_t e = 0; e < entries.size(); ++e) {
      const auto& [k, a, b] = entries[e];
      out[k](a, b) = g(static_cast<Eigen::Index>(e));
      out[k](b, a) = g(static_cast<Eigen::Index>(e));
    }
    return out;
  }
};

constexpr double kInfeasible = std::numeric_limits<double>::infinity();

}  // namespace

FallingGramResult solve_falling_gram(const std::vector<double>& p) {
  if (p.empty()) throw std::invalid_argument("empty polynomial");
  const unsigned D = static_cast<unsigned>(p.size() - 1);
  const Layout layout(D);
  const Eigen::MatrixXd A = layout.matching();
  const Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(p.data(), static_cast<Eigen::Index>(p.size()));

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::VectorXd g0 = svd.solve(rhs);
  const Eigen::Index rank = svd.rank();
  const Eigen::MatrixXd null = svd.matrixV().rightCols(A.cols() - rank);
  const Eigen::Index r = null.cols();

  const auto base = layout.blocks(g0);
  std::vector<std::vector<Eigen::MatrixXd>> dirs(static_cast<std::size_t>(r));
  for (Eigen::Index i = 0; i < r; ++i) dirs[static_cast<std::size_t>(i)] = layout.blocks(null.col(i));
  const std::size_t nblocks = base.size();

  // z = (w_1..w_r, t); S_k(z) = base_k + sum_i w_i dir_{i,k} - t I.
  auto slack = [&](const Eigen::VectorXd& z) {
    std::vector<Eigen::MatrixXd> S = base;
    for (std::size_t k = 0; k < nblocks; ++k) {
      for (Eigen::Index i = 0; i < r; ++i) S[k] += z(i) * dirs[static_cast<std::size_t>(i)][k];
      S[k].diagonal().array() -= z(r);
    }
    return S;
  };
  auto barrier = [&](const Eigen::VectorXd& z, double mu) {
    double value = -z(r);
    for (const auto& S : slack(z)) {
      Eigen::LLT<Eigen::MatrixXd> llt(S);
      if (llt.info() != Eigen::Success) return kInfeasible;
      const Eigen::MatrixXd L = llt.matrixL();
      double logdet = 0;
      for (Eigen::Index j = 0; j < L.rows(); ++j) {
        if (!(L(j, j) > 0)) return kInfeasible;
        logdet += 2 * std::log(L(j, j));
      }
      value -= mu * logdet;
    }
    return value;
  };

  Eigen::VectorXd z = Eigen::VectorXd::Zero(r + 1);
  double lowest = std::numeric_limits<double>::infinity();
  for (const auto& S : base) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(S);
    lowest = std::min(lowest, eig.eigenvalues()(0));
  }
  z(r) = lowest - 1.0;

  FallingGramResult result;
  double total_size = 0;
  for (unsigned s : layout.sizes) total_size += s;

  double mu = 1.0;
  std::vector<Eigen::MatrixXd> inverses(nblocks);
  while (true) {
    for (int iter = 0; iter < 100; ++iter) {
      const auto S = slack(z);
      for (std::size_t k = 0; k < nblocks; ++k) inverses[k] = S[k].llt().solve(Eigen::MatrixXd::Identity(S[k].rows(), S[k].cols()));
      Eigen::VectorXd grad = Eigen::VectorXd::Zero(r + 1);
      Eigen::MatrixXd hess = Eigen::MatrixXd::Zero(r + 1, r + 1);
      // Directions F_i: dirs for i < r and -I for t.
      std::vector<std::vector<Eigen::MatrixXd>> sf(nblocks);
      for (std::size_t k = 0; k < nblocks; ++k) {
        sf[k].resize(static_cast<std::size_t>(r + 1));
        for (Eigen::Index i = 0; i <= r; ++i) {
          sf[k][static_cast<std::size_t>(i)] =
              i < r ? Eigen::MatrixXd(inverses[k] * dirs[static_cast<std::size_t>(i)][k]) : Eigen::MatrixXd(-inverses[k]);
          grad(i) -= mu * sf[k][static_cast<std::size_t>(i)].trace();
        }
        for (Eigen::Index i = 0; i <= r; ++i) {
          for (Eigen::Index j = i; j <= r; ++j) {
            const double h = mu * (sf[k][static_cast<std::size_t>(i)] * sf[k][static_cast<std::size_t>(j)]).trace();
            hess(i, j) += h;
            if (j != i) hess(j, i) += h;
          }
        }
      }
      grad(r) -= 1.0;
      hess.diagonal().array() += 1e-14;
      const Eigen::VectorXd step = -hess.ldlt().solve(grad);
      const double decrement = -grad.dot(step);
      ++result.newton_steps;
      if (!(decrement > 1e-14)) break;
      double s = 1.0;
      const double current = barrier(z, mu);
      bool moved = false;
      for (int ls = 0; ls < 60; ++ls) {
        const Eigen::VectorXd trial = z + s * step;
        const double value = barrier(trial, mu);
        if (value <= current - 1e-4 * s * decrement) {
          z = trial;
          moved = true;
          break;
        }
        s *= 0.5;
      }
      if (!moved || decrement < 1e-12) break;
    }
    if (mu * total_size < 1e-10) {
      result.converged = true;
      break;
    }
    mu *= 0.2;
  }

  result.t = z(r);
  const Eigen::VectorXd g = g0 + null * z.head(r);
  const auto G = layout.blocks(g);
  for (unsigned k = 0; k <= D; ++k) {
    std::vector<double> s(2 * (layout.sizes[k] - 1) + 1, 0.0);
    for (unsigned a = 0; a < layout.sizes[k]; ++a) {
      for (unsigned b = 0; b < layout.sizes[k]; ++b) s[a + b] += G[k](a, b);
    }
    result.levels.push_back(std::move(s));
  }

  // Dual estimate Z_k = mu S_k^{-1}; recover y from Z_k = M_k(y) by least squares.
  const auto S = slack(z);
  Eigen::Index rows = 0;
  for (unsigned s : layout.sizes) rows += static_cast<Eigen::Index>(s * (s + 1) / 2);
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(rows, D + 1);
  Eigen::VectorXd zvec(rows);
  Eigen::Index row = 0;
  for (unsigned k = 0; k <= D; ++k) {
    const Eigen::MatrixXd Z = mu * S[k].llt().solve(Eigen::MatrixXd::Identity(S[k].rows(), S[k].cols()));
    for (unsigned a = 0; a < layout.sizes[k]; ++a) {
      for (unsigned b = a; b < layout.sizes[k]; ++b) {
        for (std::size_t i = 0; i < layout.ff[k].size(); ++i) {
          const unsigned j = static_cast<unsigned>(i) + a + b;
          if (j <= D) M(row, j) += layout.ff[k][i];
        }
        zvec(row) = Z(a, b);
        ++row;
      }
    }
  }
  const Eigen::VectorXd y = M.colPivHouseholderQr().solve(zvec);
  result.moments.assign(y.data(), y.data() + y.size());
  return result;
}

}  // namespace weylps::sdp
