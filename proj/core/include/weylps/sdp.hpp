#pragma once

#include <vector>

namespace weylps::sdp {

/// max t subject to p = sum_k nu^{(k)} v_k^T G_k v_k, G_k - t I PSD, where v_k is the
/// monomial vector of length floor((D - k)/2) + 1. Solved by a log-det barrier method.
struct FallingGramResult {
  double t = 0;
  std::vector<std::vector<double>> levels;  // s_k coefficients, low-to-high
  std::vector<double> moments;              // dual functional y_0..y_D
  bool converged = false;
  unsigned newton_steps = 0;
};

FallingGramResult solve_falling_gram(const std::vector<double>& p);

/// Coefficients of nu^{(k)}, low-to-high.
std::vector<double> falling_coefficients(unsigned k);

}  // namespace weylps::sdp
