// nncore/lstm.cc

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

#include "nncore/lstm.h"

#include "nncore/dense.h"
#include "util/common.h"

namespace ctxasr {

namespace {

inline Eigen::ArrayXd Sigmoid(const Eigen::ArrayXd& x) {
  return 1.0 / (1.0 + (-x).exp());
}

}  // namespace

LstmCellParams LstmCellParams::Create(int hidden_size, int input_dim, Rng* rng) {
  LstmCellParams params;
  params.hidden_size = hidden_size;
  params.input_weights = GlorotUniform(4 * hidden_size, input_dim, input_dim, hidden_size, rng);
  params.hidden_weights = GlorotUniform(4 * hidden_size, hidden_size, hidden_size, hidden_size, rng);
  params.bias = Vector::Zero(4 * hidden_size);
  params.bias.segment(hidden_size, hidden_size).setConstant(1.0);  // forget gate
  return params;
}

void LstmStep(const LstmCellParams& params, const Vector& input, const Vector& h_prev,
              const Vector& c_prev, Vector* h, Vector* c, LstmStepCache* cache) {
  const int hidden = params.hidden_size;
  if (input.size() != params.input_weights.cols() || h_prev.size() != hidden ||
      c_prev.size() != hidden)
    throw ShapeError(Msg("lstm_step: input ", input.size(), ", h ", h_prev.size(), ", c ",
                         c_prev.size(), " vs cell with input_dim ",
                         params.input_weights.cols(), ", hidden ", hidden));

  Vector pre = params.input_weights * input + params.hidden_weights * h_prev + params.bias;
  Eigen::ArrayXd gate_in = Sigmoid(pre.segment(0, hidden).array());
  Eigen::ArrayXd gate_forget = Sigmoid(pre.segment(hidden, hidden).array());
  Eigen::ArrayXd gate_cell = pre.segment(2 * hidden, hidden).array().tanh();
  Eigen::ArrayXd gate_out = Sigmoid(pre.segment(3 * hidden, hidden).array());

  Eigen::ArrayXd cell = gate_forget * c_prev.array() + gate_in * gate_cell;
  Eigen::ArrayXd cell_tanh = cell.tanh();
  *c = cell.matrix();
  *h = (gate_out * cell_tanh).matrix();

  if (cache != nullptr) {
    cache->input = input;
    cache->h_prev = h_prev;
    cache->c_prev = c_prev;
    cache->gate_in = gate_in.matrix();
    cache->gate_forget = gate_forget.matrix();
    cache->gate_cell = gate_cell.matrix();
    cache->gate_out = gate_out.matrix();
    cache->cell = *c;
    cache->cell_tanh = cell_tanh.matrix();
  }
}

void LstmStepBackward(const LstmCellParams& params, const LstmStepCache& cache,
                      const Vector& dh, const Vector& dc, Vector* dinput, Vector* dh_prev,
                      Vector* dc_prev, Matrix* dinput_weights, Matrix* dhidden_weights,
                      Vector* dbias) {
  const int hidden = params.hidden_size;
  if (cache.gate_in.size() != hidden)
    throw ContractError("lstm_step backward: cache does not match the cell");

  Eigen::ArrayXd dgate_out = dh.array() * cache.cell_tanh.array();
  Eigen::ArrayXd dcell = dc.array() +
                         dh.array() * cache.gate_out.array() * (1.0 - cache.cell_tanh.array().square());
  Eigen::ArrayXd dgate_forget = dcell * cache.c_prev.array();
  Eigen::ArrayXd dgate_in = dcell * cache.gate_cell.array();
  Eigen::ArrayXd dgate_cell = dcell * cache.gate_in.array();
  *dc_prev = (dcell * cache.gate_forget.array()).matrix();

  Vector dpre(4 * hidden);
  dpre.segment(0, hidden) =
      (dgate_in * cache.gate_in.array() * (1.0 - cache.gate_in.array())).matrix();
  dpre.segment(hidden, hidden) =
      (dgate_forget * cache.gate_forget.array() * (1.0 - cache.gate_forget.array())).matrix();
  dpre.segment(2 * hidden, hidden) =
      (dgate_cell * (1.0 - cache.gate_cell.array().square())).matrix();
  dpre.segment(3 * hidden, hidden) =
      (dgate_out * cache.gate_out.array() * (1.0 - cache.gate_out.array())).matrix();

  *dinput_weights += dpre * cache.input.transpose();
  *dhidden_weights += dpre * cache.h_prev.transpose();
  *dbias += dpre;
  *dinput = params.input_weights.transpose() * dpre;
  *dh_prev = params.hidden_weights.transpose() * dpre;
}

}  // namespace ctxasr
