// ctxfeat/pca.cc

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

#include "ctxfeat/pca.h"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "nncore/checkpoint.h"
#include "util/common.h"

namespace ctxasr {

PcaModel PcaFit(const std::vector<Vector>& samples, int target_dim) {
  const int count = static_cast<int>(samples.size());
  if (count < 2) throw ContractError(Msg("pca_fit: need at least 2 vectors, got ", count));
  const int dim = static_cast<int>(samples[0].size());
  if (target_dim < 1 || target_dim > dim)
    throw ContractError(Msg("pca_fit: target dim ", target_dim, " out of [1,", dim, "]"));
  if (count < target_dim + 1)
    throw ContractError(Msg("pca_fit: need at least ", target_dim + 1, " vectors for k=",
                            target_dim, ", got ", count));

  Matrix data(count, dim);
  for (int i = 0; i < count; ++i) {
    if (samples[i].size() != dim)
      throw ContractError(Msg("pca_fit: vector ", i, " has dim ", samples[i].size(),
                              ", expected ", dim));
    data.row(i) = samples[i].transpose();
  }

  PcaModel model;
  model.mean = data.colwise().mean().transpose();
  Matrix centered = data.rowwise() - model.mean.transpose();
  Matrix covariance = (centered.transpose() * centered) / static_cast<double>(count - 1);

  Eigen::SelfAdjointEigenSolver<Matrix> solver(covariance);
  if (solver.info() != Eigen::Success)
    throw NumericError("pca_fit: eigendecomposition failed to converge");

  // Eigen returns eigenvalues in increasing order; take the top k reversed.
  model.projection.resize(target_dim, dim);
  model.explained_variance.resize(target_dim);
  for (int k = 0; k < target_dim; ++k) {
    int src = dim - 1 - k;
    model.explained_variance[k] = std::max(solver.eigenvalues()[src], 0.0);
    Vector direction = solver.eigenvectors().col(src);
    // Sign convention: the largest-magnitude entry is positive.
    Eigen::Index peak;
    direction.cwiseAbs().maxCoeff(&peak);
    if (direction[peak] < 0.0) direction = -direction;
    model.projection.row(k) = direction.transpose();
  }
  return model;
}

Vector PcaTransform(const PcaModel& model, const Vector& vector) {
  if (vector.size() != model.InputDim())
    throw ShapeError(Msg("pca_transform: vector dim ", vector.size(), " != model dim ",
                         model.InputDim()));
  return model.projection * (vector - model.mean);
}

Vector PcaReconstruct(const PcaModel& model, const Vector& coords) {
  if (coords.size() != model.OutputDim())
    throw ShapeError(Msg("pca_reconstruct: coords dim ", coords.size(), " != model dim ",
                         model.OutputDim()));
  return model.mean + model.projection.transpose() * coords;
}

void SavePca(const std::string& path, const PcaModel& model) {
  TensorMap tensors;
  tensors["mean"] = model.mean;
  tensors["proj"] = model.projection;
  tensors["evals"] = model.explained_variance;
  WriteCheckpoint(path, tensors);
}

PcaModel LoadPca(const std::string& path) {
  TensorMap tensors = ReadCheckpoint(path);
  for (const char* name : {"mean", "evals"})
    if (GetTensor(tensors, name).cols() != 1)
      throw DataError(Msg("pca model ", path, ": tensor ", name, " must be a column"));
  PcaModel model;
  model.mean = GetTensor(tensors, "mean");
  model.projection = GetTensor(tensors, "proj");
  model.explained_variance = GetTensor(tensors, "evals");
  if (model.mean.size() != model.projection.cols())
    throw DataError(Msg("pca model ", path, ": mean/proj dims disagree"));
  if (model.explained_variance.size() != model.projection.rows())
    throw DataError(Msg("pca model ", path, ": evals/proj dims disagree"));
  return model;
}

}  // namespace ctxasr
