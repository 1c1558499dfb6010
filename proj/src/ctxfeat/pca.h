// ctxfeat/pca.h

// Copyright 2026  The ctxasr Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef CTXASR_CTXFEAT_PCA_H_
#define CTXASR_CTXFEAT_PCA_H_

#include <string>
#include <vector>

#include "nncore/tensor.h"

namespace ctxasr {

// Principal component analysis fit on plain (unnormalized) vectors.
// Immutable after fit; transforms are pure.
struct PcaModel {
  Vector mean;                 // D
  Matrix projection;           // k x D, rows are principal directions
  Vector explained_variance;   // k, non-increasing, >= 0

  int InputDim() const { return static_cast<int>(projection.cols()); }
  int OutputDim() const { return static_cast<int>(projection.rows()); }
};

// Top-k eigenvectors of the sample covariance (eigendecomposition of the
// centered covariance, denominator n-1).  Each row is sign-normalized so its
// largest-magnitude entry is positive; eigenvalues are clamped at 0.
PcaModel PcaFit(const std::vector<Vector>& samples, int target_dim);

// projection * (vector - mean).
Vector PcaTransform(const PcaModel& model, const Vector& vector);

// Back-projection from component space: mean + projection^T * coords.
Vector PcaReconstruct(const PcaModel& model, const Vector& coords);

// Stored in the checkpoint format with tensors `mean`, `proj`, `evals`.
void SavePca(const std::string& path, const PcaModel& model);
PcaModel LoadPca(const std::string& path);

}  // namespace ctxasr

#endif  // CTXASR_CTXFEAT_PCA_H_
