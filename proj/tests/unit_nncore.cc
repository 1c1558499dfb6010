// tests/unit_nncore.cc

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nncore/checkpoint.h"
#include "nncore/dense.h"
#include "nncore/gradcheck.h"
#include "nncore/loss.h"
#include "nncore/lstm.h"
#include "nncore/optim.h"
#include "testutil.h"
#include "util/common.h"

using namespace ctxasr;
using test::RandomMatrix;
using test::RandomVector;

TEST_CASE("dense forward identity, softmax symmetry, relu definition") {
  DenseLayer layer;
  layer.weights = Matrix::Identity(2, 2);
  layer.bias = Vector::Zero(2);
  layer.activation = Activation::kLinear;
  Matrix input(1, 2);
  input << 1.0, 2.0;
  Matrix out = DenseForward(layer, input);
  CHECK(out(0, 0) == doctest::Approx(1.0));
  CHECK(out(0, 1) == doctest::Approx(2.0));

  layer.activation = Activation::kSoftmax;
  layer.bias.setZero();
  layer.weights = Matrix::Zero(2, 2);  // logits [0, 0]
  out = DenseForward(layer, input);
  CHECK(out(0, 0) == doctest::Approx(0.5));
  CHECK(out(0, 1) == doctest::Approx(0.5));

  layer.activation = Activation::kRelu;
  layer.weights = Matrix::Identity(2, 2);
  Matrix pre(1, 2);
  pre << -1.0, 3.0;
  out = DenseForward(layer, pre);
  CHECK(out(0, 0) == 0.0);
  CHECK(out(0, 1) == doctest::Approx(3.0));
}

TEST_CASE("dense forward rejects mismatched shapes naming both") {
  Rng rng(1);
  DenseLayer layer = DenseLayer::Create(3, 4, Activation::kLinear, &rng);
  Matrix input(2, 5);
  input.setZero();
  CHECK_THROWS_WITH_AS(DenseForward(layer, input),
                       doctest::Contains("2x5"), ShapeError);
}

TEST_CASE("dense backward: linear layer with sum loss gives column-sum weight grads") {
  Rng rng(7);
  DenseLayer layer = DenseLayer::Create(2, 3, Activation::kLinear, &rng);
  Matrix input = RandomMatrix(4, 3, &rng);
  DenseCache cache;
  DenseForward(layer, input, &cache);
  Matrix dw = Matrix::Zero(2, 3);
  Vector db = Vector::Zero(2);
  Matrix upstream = Matrix::Ones(4, 2);  // loss = sum of outputs
  DenseBackward(layer, cache, upstream, &dw, &db);
  Eigen::RowVectorXd colsum = input.colwise().sum();
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 3; ++c) CHECK(dw(r, c) == doctest::Approx(colsum[c]));
  CHECK(db[0] == doctest::Approx(4.0));
}

TEST_CASE("dense backward: relu gates gradient at negative pre-activations") {
  DenseLayer layer;
  layer.weights = Matrix::Identity(2, 2);
  layer.bias = Vector::Zero(2);
  layer.activation = Activation::kRelu;
  Matrix input(1, 2);
  input << -5.0, 5.0;
  DenseCache cache;
  DenseForward(layer, input, &cache);
  Matrix dw = Matrix::Zero(2, 2);
  Vector db = Vector::Zero(2);
  Matrix din = DenseBackward(layer, cache, Matrix::Ones(1, 2), &dw, &db);
  CHECK(din(0, 0) == 0.0);  // the negative unit passes no gradient
  CHECK(din(0, 1) == doctest::Approx(1.0));
  CHECK(db[0] == 0.0);
}

// Finite-difference oracle for a dense layer under the loss
// sum(coeff .* output); checks weight, bias, and input gradients.
static void CheckDenseLayerGradients(Activation activation, uint64_t seed, double tol) {
  Rng rng(seed);
  DenseLayer layer = DenseLayer::Create(3, 4, activation, &rng);
  Matrix input = RandomMatrix(2, 4, &rng);
  Matrix coeff = RandomMatrix(2, 3, &rng);

  Matrix dw = Matrix::Zero(3, 4), din = Matrix::Zero(2, 4);
  Vector db = Vector::Zero(3);
  auto loss_fn = [&]() {
    DenseCache cache;
    Matrix out = DenseForward(layer, input, &cache);
    dw.setZero();
    db.setZero();
    // noalias keeps the buffer in place; a move would invalidate the ParamRef.
    din.noalias() = DenseBackward(layer, cache, coeff, &dw, &db);
    return (coeff.array() * out.array()).sum();
  };
  std::vector<ParamRef> params = {
      MakeParamRef("weights", &layer.weights, &dw),
      MakeParamRef("bias", &layer.bias, &db),
      MakeParamRef("input", &input, &din),
  };
  GradCheckReport report = CheckGradients(loss_fn, params, tol);
  INFO("activation ", ActivationName(activation), " worst ", report.worst_tensor, " err ",
       report.max_rel_error);
  CHECK(report.pass);
}

TEST_CASE("dense backward matches central finite differences within 1e-6") {
  CheckDenseLayerGradients(Activation::kLinear, 11, 1e-6);
  CheckDenseLayerGradients(Activation::kTanh, 12, 1e-6);
  CheckDenseLayerGradients(Activation::kSigmoid, 13, 1e-6);
  CheckDenseLayerGradients(Activation::kSoftmax, 14, 1e-6);
}

TEST_CASE("every layer type passes grad_check on randomized shapes over 20 seeds") {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    for (Activation act : {Activation::kLinear, Activation::kRelu, Activation::kTanh,
                           Activation::kSigmoid, Activation::kSoftmax}) {
      Rng rng(MixSeed(seed, static_cast<uint64_t>(act)));
      int out_dim = 1 + rng.UniformInt(5);
      int in_dim = 1 + rng.UniformInt(5);
      int batch = 1 + rng.UniformInt(3);
      DenseLayer layer = DenseLayer::Create(out_dim, in_dim, act, &rng);
      // Keep relu pre-activations away from the kink.
      Matrix input = RandomMatrix(batch, in_dim, &rng) * 2.0;
      Matrix coeff = RandomMatrix(batch, out_dim, &rng);
      Matrix dw = Matrix::Zero(out_dim, in_dim), din = Matrix::Zero(batch, in_dim);
      Vector db = Vector::Zero(out_dim);
      auto loss_fn = [&]() {
        DenseCache cache;
        Matrix out = DenseForward(layer, input, &cache);
        dw.setZero();
        db.setZero();
        din = DenseBackward(layer, cache, coeff, &dw, &db);
        return (coeff.array() * out.array()).sum();
      };
      std::vector<ParamRef> params = {
          MakeParamRef("weights", &layer.weights, &dw),
          MakeParamRef("bias", &layer.bias, &db),
      };
      GradCheckReport report = CheckGradients(loss_fn, params, 1e-4);
      INFO("seed ", seed, " act ", ActivationName(act));
      REQUIRE(report.pass);
    }
  }
}

TEST_CASE("softmax rows live in (0,1) and sum to 1 within 1e-9") {
  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix logits = RandomMatrix(3, 6, &rng, trial % 5 == 0 ? 8.0 : 3.0);
    Matrix probs = RowSoftmax(logits);
    for (int r = 0; r < probs.rows(); ++r) {
      CHECK(std::abs(probs.row(r).sum() - 1.0) <= 1e-9);
      for (int c = 0; c < probs.cols(); ++c) {
        CHECK(probs(r, c) > 0.0);
        CHECK(probs(r, c) < 1.0);
      }
    }
  }
}

TEST_CASE("forward passes are pure: identical inputs give bit-identical outputs") {
  Rng rng(5);
  DenseLayer layer = DenseLayer::Create(4, 3, Activation::kTanh, &rng);
  Matrix input = RandomMatrix(5, 3, &rng);
  Matrix a = DenseForward(layer, input);
  Matrix b = DenseForward(layer, input);
  CHECK(a == b);
}

TEST_CASE("cross entropy: perfect, uniform, and hand-computed batches") {
  Matrix perfect(1, 3);
  perfect << 1.0, 0.0, 0.0;
  CHECK(CrossEntropy(perfect, {0}).loss == doctest::Approx(0.0));

  Matrix uniform = Matrix::Constant(1, 4, 0.25);
  CHECK(CrossEntropy(uniform, {2}).loss == doctest::Approx(std::log(4.0)));

  // Oracle: mean of -ln 0.5 and -ln 0.25.
  Matrix batch(2, 2);
  batch << 0.5, 0.5, 0.25, 0.75;
  double expected = (std::log(2.0) + std::log(4.0)) / 2.0;
  CHECK(CrossEntropy(batch, {0, 0}).loss == doctest::Approx(expected));
}

TEST_CASE("cross entropy gradient equals (p - onehot)/B and matches finite differences") {
  Rng rng(21);
  Matrix logits = RandomMatrix(3, 4, &rng);
  std::vector<int> labels = {1, 3, 0};

  DenseLayer softmax;
  softmax.weights = Matrix::Identity(4, 4);
  softmax.bias = Vector::Zero(4);
  softmax.activation = Activation::kSoftmax;

  Matrix probs = DenseForward(softmax, logits);
  CrossEntropyResult ce = CrossEntropy(probs, labels);
  Matrix expected = probs / 3.0;
  for (int r = 0; r < 3; ++r) expected(r, labels[r]) -= 1.0 / 3.0;
  CHECK((ce.softmax_grad - expected).cwiseAbs().maxCoeff() <= 1e-12);

  Matrix grad = Matrix::Zero(3, 4);
  auto loss_fn = [&]() {
    Matrix p = RowSoftmax(logits);
    CrossEntropyResult r = CrossEntropy(p, labels);
    grad = r.softmax_grad;
    return r.loss;
  };
  std::vector<ParamRef> params = {MakeParamRef("logits", &logits, &grad)};
  GradCheckReport report = CheckGradients(loss_fn, params, 1e-6);
  CHECK(report.pass);
}

TEST_CASE("cross entropy floors zero probabilities and counts them") {
  Matrix probs(1, 2);
  probs << 1.0, 0.0;
  CrossEntropyResult result = CrossEntropy(probs, {1});
  CHECK(result.floored == 1);
  CHECK(result.loss == doctest::Approx(-std::log(1e-12)));
}

TEST_CASE("cross entropy validates rows and labels") {
  Matrix bad(1, 2);
  bad << 0.7, 0.7;
  CHECK_THROWS_AS(CrossEntropy(bad, {0}), ContractError);
  Matrix ok(1, 2);
  ok << 0.5, 0.5;
  CHECK_THROWS_AS(CrossEntropy(ok, {2}), ContractError);
}

TEST_CASE("lstm step: all-zero parameters and state give zero hidden output") {
  LstmCellParams cell;
  cell.hidden_size = 3;
  cell.input_weights = Matrix::Zero(12, 2);
  cell.hidden_weights = Matrix::Zero(12, 3);
  cell.bias = Vector::Zero(12);
  Vector h(3), c(3);
  LstmStep(cell, Vector::Zero(2), Vector::Zero(3), Vector::Zero(3), &h, &c);
  CHECK(h.cwiseAbs().maxCoeff() == 0.0);
  CHECK(c.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("lstm step: saturated forget gate carries the cell state") {
  // sigmoid(50) differs from 1 by ~2e-22, so the cell passes through.
  LstmCellParams cell;
  cell.hidden_size = 2;
  cell.input_weights = Matrix::Zero(8, 2);
  cell.hidden_weights = Matrix::Zero(8, 2);
  cell.bias = Vector::Zero(8);
  cell.bias.segment(2, 2).setConstant(50.0);
  Vector c_prev(2);
  c_prev << 0.7, -1.3;
  Vector h(2), c(2);
  LstmStep(cell, Vector::Zero(2), Vector::Zero(2), c_prev, &h, &c);
  CHECK((c - c_prev).cwiseAbs().maxCoeff() <= 1e-9);
}

TEST_CASE("lstm step gradients match finite differences on a random 4-unit cell") {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    Rng rng(seed * 31);
    const int hidden = 4, in_dim = 3;
    LstmCellParams cell = LstmCellParams::Create(hidden, in_dim, &rng);
    Vector input = RandomVector(in_dim, &rng);
    Vector h_prev = RandomVector(hidden, &rng, 0.5);
    Vector c_prev = RandomVector(hidden, &rng, 0.5);
    Vector coeff_h = RandomVector(hidden, &rng);
    Vector coeff_c = RandomVector(hidden, &rng);

    Matrix dwx = Matrix::Zero(4 * hidden, in_dim);
    Matrix dwh = Matrix::Zero(4 * hidden, hidden);
    Vector db = Vector::Zero(4 * hidden);
    Vector din(in_dim), dh_prev(hidden), dc_prev(hidden);
    Matrix din_m(in_dim, 1), dh_prev_m(hidden, 1), dc_prev_m(hidden, 1);
    Matrix input_m = input, h_prev_m = h_prev, c_prev_m = c_prev;

    auto loss_fn = [&]() {
      LstmStepCache cache;
      Vector h(hidden), c(hidden);
      LstmStep(cell, input_m, h_prev_m, c_prev_m, &h, &c, &cache);
      dwx.setZero();
      dwh.setZero();
      db.setZero();
      LstmStepBackward(cell, cache, coeff_h, coeff_c, &din, &dh_prev, &dc_prev, &dwx, &dwh,
                       &db);
      din_m = din;
      dh_prev_m = dh_prev;
      dc_prev_m = dc_prev;
      return coeff_h.dot(h) + coeff_c.dot(c);
    };
    std::vector<ParamRef> params = {
        MakeParamRef("input_weights", &cell.input_weights, &dwx),
        MakeParamRef("hidden_weights", &cell.hidden_weights, &dwh),
        MakeParamRef("bias", &cell.bias, &db),
        MakeParamRef("input", &input_m, &din_m),
        MakeParamRef("h_prev", &h_prev_m, &dh_prev_m),
        MakeParamRef("c_prev", &c_prev_m, &dc_prev_m),
    };
    GradCheckReport report = CheckGradients(loss_fn, params, 1e-6);
    INFO("seed ", seed, " worst ", report.worst_tensor, " err ", report.max_rel_error);
    REQUIRE(report.pass);
  }
}

TEST_CASE("gradient clipping examples and idempotence") {
  Vector v(2);
  Matrix g(2, 1);

  // Norm 50 stays unchanged at threshold 100.
  g << 30.0, 40.0;
  Matrix value = g;
  std::vector<ParamRef> one = {MakeParamRef("g", &value, &g)};
  double norm = ClipGradients(one, 100.0);
  CHECK(norm == doctest::Approx(50.0));
  CHECK(g(0, 0) == 30.0);

  // Norm 500 scales by 0.2.
  g << 300.0, 400.0;
  norm = ClipGradients(one, 100.0);
  CHECK(norm == doctest::Approx(500.0));
  CHECK(g(0, 0) == doctest::Approx(60.0));
  CHECK(g(1, 0) == doctest::Approx(80.0));

  // Zero gradients stay zero.
  g.setZero();
  ClipGradients(one, 100.0);
  CHECK(g.cwiseAbs().maxCoeff() == 0.0);

  // Idempotence, bit for bit, over random collections.
  Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix a = RandomMatrix(3, 4, &rng, 40.0);
    Matrix b = RandomMatrix(2, 2, &rng, 40.0);
    Matrix av = a, bv = b;
    std::vector<ParamRef> params = {MakeParamRef("a", &av, &a), MakeParamRef("b", &bv, &b)};
    ClipGradients(params, 10.0);
    Matrix a_once = a, b_once = b;
    ClipGradients(params, 10.0);
    CHECK(a == a_once);
    CHECK(b == b_once);
  }

  CHECK_THROWS_AS(ClipGradients(one, 0.0), ContractError);
}

TEST_CASE("optimizer: sgd and adagrad updates") {
  Matrix p(1, 1), g(1, 1);
  std::vector<ParamRef> params = {MakeParamRef("p", &p, &g)};

  p << 1.0;
  g << 2.0;
  Optimizer sgd(OptKind::kSgd, 0.1);
  sgd.Step(params);
  CHECK(p(0, 0) == doctest::Approx(0.8));

  // Adagrad first step: update = -lr * g / (sqrt(g^2) + eps) ~ -lr.
  p << 1.0;
  g << 4.0;
  Optimizer adagrad(OptKind::kAdagrad, 0.01);
  adagrad.Step(params);
  CHECK(p(0, 0) == doctest::Approx(1.0 - 0.01).epsilon(1e-6));

  // Zero gradient leaves parameter and accumulator unchanged.
  double before = p(0, 0);
  Vector acc_before = adagrad.Accumulator("p");
  g << 0.0;
  adagrad.Step(params);
  CHECK(p(0, 0) == before);
  CHECK(adagrad.Accumulator("p") == acc_before);
}

TEST_CASE("optimizer rejects non-finite gradients naming the tensor, no partial update") {
  Matrix p1(1, 1), g1(1, 1), p2(1, 1), g2(1, 1);
  p1 << 1.0;
  p2 << 2.0;
  g1 << 1.0;
  g2 << std::numeric_limits<double>::quiet_NaN();
  std::vector<ParamRef> params = {MakeParamRef("alpha", &p1, &g1),
                                  MakeParamRef("beta", &p2, &g2)};
  Optimizer sgd(OptKind::kSgd, 0.1);
  CHECK_THROWS_WITH_AS(sgd.Step(params), doctest::Contains("beta"), NumericError);
  CHECK(p1(0, 0) == 1.0);  // step rejected entirely
  CHECK(p2(0, 0) == 2.0);
}

TEST_CASE("adagrad accumulators are monotonically non-decreasing") {
  Rng rng(23);
  Matrix p = RandomMatrix(3, 3, &rng);
  Matrix g(3, 3);
  std::vector<ParamRef> params = {MakeParamRef("w", &p, &g)};
  Optimizer adagrad(OptKind::kAdagrad, 0.05);
  Vector prev = Vector::Zero(9);
  for (int step = 0; step < 25; ++step) {
    g = RandomMatrix(3, 3, &rng);
    adagrad.Step(params);
    const Vector& acc = adagrad.Accumulator("w");
    for (int i = 0; i < 9; ++i) CHECK(acc[i] >= prev[i]);
    prev = acc;
  }
}

TEST_CASE("grad_check: closed-form linear regression gradients are near-exact") {
  // loss = sum_i (w0*x_i + w1 - y_i)^2, gradient known in closed form.
  Vector w(2);
  w << 0.3, -0.2;
  Vector x(4), y(4);
  x << 1.0, 2.0, 3.0, 4.0;
  y << 1.1, 1.9, 3.2, 3.9;
  Matrix wv = w, wg(2, 1);
  auto loss_fn = [&]() {
    double loss = 0.0, g0 = 0.0, g1 = 0.0;
    for (int i = 0; i < 4; ++i) {
      double r = wv(0, 0) * x[i] + wv(1, 0) - y[i];
      loss += r * r;
      g0 += 2.0 * r * x[i];
      g1 += 2.0 * r;
    }
    wg(0, 0) = g0;
    wg(1, 0) = g1;
    return loss;
  };
  std::vector<ParamRef> params = {MakeParamRef("w", &wv, &wg)};
  GradCheckReport report = CheckGradients(loss_fn, params, 1e-8);
  CHECK(report.pass);
  CHECK(report.max_rel_error < 1e-8);
}

// Two dense tanh layers into a scalar output; about 50 parameters.
TEST_CASE("grad_check: 2-layer tanh network passes at tolerance 1e-4") {
  Rng rng(31);
  DenseLayer l1 = DenseLayer::Create(5, 4, Activation::kTanh, &rng);
  DenseLayer l2 = DenseLayer::Create(1, 5, Activation::kTanh, &rng);
  Matrix input = RandomMatrix(3, 4, &rng);
  Matrix dw1 = Matrix::Zero(5, 4), dw2 = Matrix::Zero(1, 5);
  Vector db1 = Vector::Zero(5), db2 = Vector::Zero(1);
  auto loss_fn = [&]() {
    DenseCache c1, c2;
    Matrix h = DenseForward(l1, input, &c1);
    Matrix out = DenseForward(l2, h, &c2);
    dw1.setZero();
    db1.setZero();
    dw2.setZero();
    db2.setZero();
    Matrix dh = DenseBackward(l2, c2, Matrix::Ones(3, 1), &dw2, &db2);
    DenseBackward(l1, c1, dh, &dw1, &db1);
    return out.sum();
  };
  std::vector<ParamRef> params = {
      MakeParamRef("l1.weights", &l1.weights, &dw1), MakeParamRef("l1.bias", &l1.bias, &db1),
      MakeParamRef("l2.weights", &l2.weights, &dw2), MakeParamRef("l2.bias", &l2.bias, &db2)};
  GradCheckReport report = CheckGradients(loss_fn, params, 1e-4);
  CHECK(report.pass);
}

TEST_CASE("grad_check: a corrupted bias gradient is caught and named") {
  Rng rng(37);
  DenseLayer layer = DenseLayer::Create(2, 3, Activation::kTanh, &rng);
  Matrix input = RandomMatrix(2, 3, &rng);
  Matrix dw = Matrix::Zero(2, 3);
  Vector db = Vector::Zero(2);
  auto loss_fn = [&]() {
    DenseCache cache;
    Matrix out = DenseForward(layer, input, &cache);
    dw.setZero();
    db.setZero();
    DenseBackward(layer, cache, Matrix::Ones(2, 2), &dw, &db);
    db[0] += 0.1;  // injected fault
    return out.sum();
  };
  std::vector<ParamRef> params = {MakeParamRef("weights", &layer.weights, &dw),
                                  MakeParamRef("bias", &layer.bias, &db)};
  GradCheckReport report = CheckGradients(loss_fn, params, 1e-4);
  CHECK_FALSE(report.pass);
  CHECK(report.worst_tensor == "bias");
}

TEST_CASE("grad_check rejects non-deterministic closures") {
  Matrix p(1, 1), g(1, 1);
  p << 1.0;
  int calls = 0;
  auto loss_fn = [&]() {
    g(0, 0) = 1.0;
    return p(0, 0) + 0.001 * (calls++);
  };
  std::vector<ParamRef> params = {MakeParamRef("p", &p, &g)};
  CHECK_THROWS_AS(CheckGradients(loss_fn, params, 1e-4), ContractError);
}

TEST_CASE("checkpoint round-trips exactly and orders tensors by name") {
  Rng rng(41);
  TensorMap tensors;
  tensors["zeta"] = RandomMatrix(2, 3, &rng, 1e-7);
  tensors["alpha"] = RandomMatrix(3, 1, &rng, 1e9);
  tensors["mid.bias"] = RandomMatrix(1, 4, &rng);
  tensors["neg"] = Matrix::Constant(1, 1, -0.0);

  std::string text = CheckpointToString(tensors);
  CHECK(text.rfind("CKPT v1\n", 0) == 0);
  CHECK(text.find("alpha") < text.find("mid.bias"));
  CHECK(text.find("mid.bias") < text.find("zeta"));

  TensorMap back = CheckpointFromString(text);
  REQUIRE(back.size() == tensors.size());
  for (const auto& [name, tensor] : tensors) {
    REQUIRE(back.count(name) == 1);
    CHECK(back[name] == tensor);  // exact, not approximate
  }
  CHECK(CheckpointHash(back) == CheckpointHash(tensors));

  tensors["zeta"](0, 0) = std::nextafter(tensors["zeta"](0, 0), 1.0);
  CHECK(CheckpointHash(back) != CheckpointHash(tensors));
}

TEST_CASE("checkpoint file I/O and validation errors") {
  test::TempDir dir;
  Rng rng(43);
  TensorMap tensors;
  tensors["w"] = RandomMatrix(4, 2, &rng);
  WriteCheckpoint(dir.File("model.ckpt"), tensors);
  TensorMap back = ReadCheckpoint(dir.File("model.ckpt"));
  CHECK(back["w"] == tensors["w"]);

  CHECK_THROWS_AS(CheckpointFromString("BOGUS\n"), DataError);
  CHECK_THROWS_AS(CheckpointFromString("CKPT v1\nw 2 2\n1 2\n"), DataError);
  CHECK_THROWS_AS(GetTensor(back, "missing"), DataError);

  TensorMap bad;
  bad["has space"] = Matrix::Zero(1, 1);
  CHECK_THROWS_AS(CheckpointToString(bad), DataError);
}
