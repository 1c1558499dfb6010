// nncore/lstm.h

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

#ifndef CTXASR_NNCORE_LSTM_H_
#define CTXASR_NNCORE_LSTM_H_

#include "nncore/tensor.h"
#include "util/rng.h"

namespace ctxasr {

// One LSTM cell.  The 4h gate rows are ordered [input, forget, cell, output];
// the forget-gate bias block starts at 1.0.
struct LstmCellParams {
  Matrix input_weights;   // 4h x input_dim
  Matrix hidden_weights;  // 4h x h
  Vector bias;            // 4h
  int hidden_size = 0;

  int InputDim() const { return static_cast<int>(input_weights.cols()); }

  static LstmCellParams Create(int hidden_size, int input_dim, Rng* rng);
};

struct LstmStepCache {
  Vector input, h_prev, c_prev;
  Vector gate_in, gate_forget, gate_cell, gate_out;  // post-nonlinearity
  Vector cell, cell_tanh;
};

// Standard recurrence: sigmoid gates, tanh candidate and output
// nonlinearity.  Fills `cache` when given.
void LstmStep(const LstmCellParams& params, const Vector& input, const Vector& h_prev,
              const Vector& c_prev, Vector* h, Vector* c, LstmStepCache* cache = nullptr);

// Backward through one step.  dh/dc are the gradients arriving at this
// step's hidden and cell outputs; parameter gradients are accumulated.
void LstmStepBackward(const LstmCellParams& params, const LstmStepCache& cache,
                      const Vector& dh, const Vector& dc, Vector* dinput, Vector* dh_prev,
                      Vector* dc_prev, Matrix* dinput_weights, Matrix* dhidden_weights,
                      Vector* dbias);

}  // namespace ctxasr

#endif  // CTXASR_NNCORE_LSTM_H_
