// Copyright 2026 The ldpc-moments Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Binomial-power forms of the check-node generating functions, generic over
// the scalar type (double or Jet). Every term is homogenised to total degree
// r in the linear forms and multiplied by inv^r, where inv is a constant
// chosen near 1/(1 + sum x). The scale cancels in every log-derivative, so
// a and B are unaffected while the powers stay inside double range.

#include "jet.hpp"

namespace ldpc::detail {

template <class T>
T weight_uni(int r, const T& x, double inv) {
  return 0.5 * (ipow((1.0 + x) * inv, r) + ipow((1.0 - x) * inv, r));
}

template <class T>
T stop_uni(int r, const T& x, double inv) {
  return ipow((1.0 + x) * inv, r) - (r * ipow(inv, r)) * x;
}

template <class T>
T pair_weight(int r, const T& x1, const T& x2, const T& x3, double inv) {
  return 0.25 * (ipow((1.0 + x1 + x2 + x3) * inv, r) +
                 ipow((1.0 + x1 - x2 - x3) * inv, r) +
                 ipow((1.0 - x1 + x2 - x3) * inv, r) +
                 ipow((1.0 - x1 - x2 + x3) * inv, r));
}

// (1+x1+x2+x3)^r - r(1+x1)^{r-1}(x2+x3) - r x1((1+x3)^{r-1} - (r-1)x3)
//   - r x2((1+x3)^{r-1} - 1)
template <class T>
T pair_stop(int r, const T& x1, const T& x2, const T& x3, double inv) {
  const double invr2 = ipow(inv, r - 2);
  const double invr1 = invr2 * inv;
  const T p13 = ipow((1.0 + x3) * inv, r - 1);
  return ipow((1.0 + x1 + x2 + x3) * inv, r) -
         static_cast<double>(r) * ipow((1.0 + x1) * inv, r - 1) * ((x2 + x3) * inv) -
         static_cast<double>(r) * (x1 * inv) * (p13 - ((r - 1) * inv * invr2) * x3) -
         static_cast<double>(r) * (x2 * inv) * (p13 - invr1);
}

}  // namespace ldpc::detail
