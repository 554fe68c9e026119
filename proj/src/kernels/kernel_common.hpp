#pragma once

namespace folia::kernels::detail {

// The computed absolute sum can itself be low by a factor (1 + gamma); the
// additive term covers underflow.
inline double finish_bound(double abs_sum, double gamma) {
  return (gamma * abs_sum) * (1.0 + 2.0 * gamma) + 0x1p-1000;
}

}  // namespace folia::kernels::detail
