// Copyright 2026 The lindest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LINDEST_LINALG_HPP
#define LINDEST_LINALG_HPP

#include "lindest/types.hpp"

namespace lindest {

/// Hilbert-Schmidt inner product tr(A^dag B).
Complex hs_inner(const CMatrix& a, const CMatrix& b);
double hs_norm(const CMatrix& m);

/// Largest singular value (spectral norm).
double operator_norm(const CMatrix& m);

/// Sum of singular values.
double trace_norm(const CMatrix& m);

struct HermitianEigs {
  RVector values;   // descending
  CMatrix vectors;  // columns match values
};

/// Eigendecomposition of a Hermitian matrix with a reproducible ordering:
/// descending eigenvalue, ties broken by lexicographic comparison of the
/// eigenvector components rounded to a 1e-12 grid. Each eigenvector's global
/// phase is fixed by making its largest component real positive.
HermitianEigs hermitian_eigs(const CMatrix& m);

/// Largest eigenvalue of a Hermitian matrix.
double max_eigenvalue(const CMatrix& m);

/// Moore-Penrose pseudoinverse of a Hermitian PSD matrix; eigenvalues below
/// rcond times the largest are treated as zero.
CMatrix pinv_hermitian(const CMatrix& g, double rcond = 1e-10);

CMatrix kron(const CMatrix& a, const CMatrix& b);

}  // namespace lindest

#endif  // LINDEST_LINALG_HPP
