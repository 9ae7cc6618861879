// Copyright 2026 The scf Authors
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

#include "scf/channels.hpp"

#include <cmath>
#include <stdexcept>

#include "scf/csd.hpp"

namespace scf {

namespace {

// row-major vectorization scaled for the Choi construction:
// (K (x) I)|omega> has component K[i,l]/sqrt(d_in) at |i,l>.
Vector choi_column(const Matrix& k) {
  const Eigen::Index d_out = k.rows(), d_in = k.cols();
  Vector v(d_out * d_in);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d_in));
  for (Eigen::Index i = 0; i < d_out; ++i)
    for (Eigen::Index l = 0; l < d_in; ++l) v[i * d_in + l] = scale * k(i, l);
  return v;
}

void check_channel_dims(const KrausChannel& ch) {
  if (ch.kraus.empty()) throw std::invalid_argument("channel has no Kraus operators");
  if (ch.d_in < 1 || ch.d_out < 1)
    throw std::invalid_argument("channel dimensions must be positive");
  for (const Matrix& k : ch.kraus)
    if (k.rows() != ch.d_out || k.cols() != ch.d_in)
      throw std::invalid_argument("Kraus operator shape does not match channel dims");
}

}  // namespace

int kraus_rank(const KrausChannel& ch, double tol) {
  const double t = tol < 0.0 ? tolerance() : tol;
  int r = 0;
  for (const Matrix& k : ch.kraus)
    if (max_abs(k) > t) ++r;
  return r;
}

double completeness_residual(const KrausChannel& ch) {
  check_channel_dims(ch);
  Matrix sum = Matrix::Zero(ch.d_in, ch.d_in);
  for (const Matrix& k : ch.kraus) sum += k.adjoint() * k;
  return max_abs(sum - Matrix::Identity(ch.d_in, ch.d_in));
}

bool is_cptp(const KrausChannel& ch, double tol) {
  const double t = tol < 0.0 ? tolerance() : tol;
  if (ch.kraus.empty() || ch.d_in < 1 || ch.d_out < 1) return false;
  for (const Matrix& k : ch.kraus)
    if (k.rows() != ch.d_out || k.cols() != ch.d_in) return false;
  return completeness_residual(ch) <= t;
}

bool is_valid_choi(const ChoiState& w, double tol) {
  const double t = tol < 0.0 ? tolerance() : tol;
  const long dim = static_cast<long>(w.d_in) * w.d_out;
  if (w.matrix.rows() != dim || w.matrix.cols() != dim) return false;
  if (std::abs(w.matrix.trace() - Complex(1.0)) > t) return false;
  if (!is_psd(w.matrix, t)) return false;
  const Matrix marginal =
      partial_trace(w.matrix, DimVector{w.d_out, w.d_in}, std::vector<int>{1});
  return max_abs(marginal - Matrix::Identity(w.d_in, w.d_in) / w.d_in) <= t;
}

Matrix apply_channel(const KrausChannel& ch, const Matrix& rho) {
  check_channel_dims(ch);
  if (rho.rows() != ch.d_in || rho.cols() != ch.d_in)
    throw std::invalid_argument("apply_channel: state dimension mismatch");
  Matrix out = Matrix::Zero(ch.d_out, ch.d_out);
  for (const Matrix& k : ch.kraus) out += k * rho * k.adjoint();
  return out;
}

ChoiState choi_from_kraus(const KrausChannel& ch) {
  check_channel_dims(ch);
  const long dim = static_cast<long>(ch.d_in) * ch.d_out;
  Matrix w = Matrix::Zero(dim, dim);
  for (const Matrix& k : ch.kraus) {
    const Vector v = choi_column(k);
    w.noalias() += v * v.adjoint();
  }
  return ChoiState{std::move(w), ch.d_in, ch.d_out};
}

KrausChannel kraus_from_choi(const ChoiState& w) {
  if (!is_valid_choi(w))
    throw std::invalid_argument("kraus_from_choi: not a PSD trace-preserving Choi state");
  Eigen::SelfAdjointEigenSolver<Matrix> es(w.matrix);
  KrausChannel ch;
  ch.d_in = w.d_in;
  ch.d_out = w.d_out;
  const double tol = tolerance();
  for (Eigen::Index a = es.eigenvalues().size() - 1; a >= 0; --a) {
    const double lambda = es.eigenvalues()[a];
    if (lambda <= tol) continue;
    const double scale = std::sqrt(lambda * w.d_in);
    Matrix k(w.d_out, w.d_in);
    for (int i = 0; i < w.d_out; ++i)
      for (int l = 0; l < w.d_in; ++l) k(i, l) = scale * es.eigenvectors()(i * w.d_in + l, a);
    ch.kraus.push_back(std::move(k));
  }
  if (ch.kraus.empty())
    throw std::invalid_argument("kraus_from_choi: Choi state has no positive eigenvalues");
  return ch;
}

KrausChannel canonicalize(const KrausChannel& ch) {
  return kraus_from_choi(choi_from_kraus(ch));
}

bool is_extreme(const KrausChannel& ch) {
  const KrausChannel canon = canonicalize(ch);
  const std::size_t r = canon.kraus.size();
  std::vector<Matrix> products;
  products.reserve(r * r);
  for (const Matrix& ki : canon.kraus)
    for (const Matrix& kj : canon.kraus) products.push_back(ki.adjoint() * kj);
  return operator_set_rank(products) == static_cast<int>(r * r);
}

bool is_gen_extreme(const KrausChannel& ch) {
  return psd_rank(choi_from_kraus(ch).matrix) <= ch.d_in;
}

bool is_unital(const KrausChannel& ch) {
  check_channel_dims(ch);
  if (ch.d_in != ch.d_out)
    throw std::invalid_argument("is_unital: requires d_in = d_out");
  Matrix sum = Matrix::Zero(ch.d_out, ch.d_out);
  for (const Matrix& k : ch.kraus) sum += k * k.adjoint();
  return max_abs(sum - Matrix::Identity(ch.d_out, ch.d_out)) <= tolerance();
}

Matrix complementary_channel(const KrausChannel& ch, const Matrix& rho) {
  check_channel_dims(ch);
  if (rho.rows() != ch.d_in || rho.cols() != ch.d_in)
    throw std::invalid_argument("complementary_channel: state dimension mismatch");
  const std::size_t r = ch.kraus.size();
  Matrix out(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          (ch.kraus[j].adjoint() * ch.kraus[i] * rho).trace();
  return out;
}

std::pair<Matrix, Matrix> nonunitality_witnesses(const KrausChannel& ch) {
  check_channel_dims(ch);
  Matrix image_of_identity = Matrix::Zero(ch.d_out, ch.d_out);
  for (const Matrix& k : ch.kraus) image_of_identity += k * k.adjoint();
  const std::size_t r = ch.kraus.size();
  Matrix gram(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          (ch.kraus[j].adjoint() * ch.kraus[i]).trace();
  return {std::move(image_of_identity), std::move(gram)};
}

KrausChannel gen_extreme_channel(const GenExtremeQubitAnsatz& ansatz) {
  if (static_cast<int>(ansatz.angles.size()) != GenExtremeQubitAnsatz::kParamCount)
    throw std::invalid_argument("gen_extreme_channel: wrong parameter count");
  const std::span<const double> a(ansatz.angles);
  const int p4 = csd_param_count(4);
  const Matrix pre = csd_unitary(2, a.subspan(0, p4));
  const Matrix post = csd_unitary(2, a.subspan(p4, p4));
  const double t1 = a[2 * p4], t2 = a[2 * p4 + 1];

  Matrix rot = Matrix::Zero(4, 4);
  rot(0, 0) = std::cos(t1);
  rot(1, 1) = std::cos(t2);
  rot(2, 2) = std::cos(t1);
  rot(3, 3) = std::cos(t2);
  rot(0, 2) = -std::sin(t1);
  rot(1, 3) = -std::sin(t2);
  rot(2, 0) = std::sin(t1);
  rot(3, 1) = std::sin(t2);

  const Matrix u = post * rot * pre;
  KrausChannel ch;
  ch.d_in = 2;
  ch.d_out = 2;
  ch.kraus = {u.block(0, 0, 2, 2), u.block(2, 0, 2, 2)};
  return ch;
}

KrausChannel gen_extreme_channel_blocks(const Matrix& v, const Matrix& w1,
                                        const Matrix& w2, double theta1,
                                        double theta2) {
  RealVector c(2), s(2);
  c << std::cos(theta1), std::cos(theta2);
  s << std::sin(theta1), std::sin(theta2);
  KrausChannel ch;
  ch.d_in = 2;
  ch.d_out = 2;
  ch.kraus = {w1 * c.asDiagonal() * v, w2 * s.asDiagonal() * v};
  return ch;
}

KrausChannel rsw_canonical_channel(const RswCanonicalPair& p) {
  Matrix f0 = Matrix::Zero(2, 2), f1 = Matrix::Zero(2, 2);
  f0(0, 0) = std::cos(p.beta);
  f0(1, 1) = std::cos(p.alpha);
  f1(0, 1) = std::sin(p.alpha);
  f1(1, 0) = std::sin(p.beta);
  KrausChannel ch;
  ch.d_in = 2;
  ch.d_out = 2;
  ch.kraus = {std::move(f0), std::move(f1)};
  return ch;
}

Matrix choi_to_isometry(const ChoiState& w) {
  if (!is_valid_choi(w)) throw std::invalid_argument("choi_to_isometry: invalid Choi state");
  if (psd_rank(w.matrix) > w.d_in)
    throw std::invalid_argument("choi_to_isometry: Choi rank exceeds d_in (not gen-extreme)");
  const int d_in = w.d_in, d_out = w.d_out;

  auto block = [&](int i, int j) {
    return Matrix(w.matrix.block(i * d_in, j * d_in, d_in, d_in));
  };

  const Matrix c0 = block(0, 0);
  const Matrix s0_pinv = psd_sqrt_pinv(c0);
  Matrix v(d_out * d_in, d_in);
  for (int i = 0; i < d_out; ++i) {
    const Matrix ci = block(i, i);
    const Matrix sqrt_ci = psd_sqrt(ci);
    Matrix ui;
    if (i == 0) {
      ui = Matrix::Identity(d_in, d_in);  // gauge choice
    } else {
      ui = closest_unitary(s0_pinv * block(0, i) * psd_sqrt_pinv(ci));
    }
    v.block(i * d_in, 0, d_in, d_in) =
        std::sqrt(static_cast<double>(d_in)) * ui * sqrt_ci;
  }
  return v;
}

KrausChannel kraus_from_isometry(const Matrix& v, int d_out, int d_in) {
  if (v.rows() != static_cast<long>(d_out) * d_in || v.cols() != d_in)
    throw std::invalid_argument("kraus_from_isometry: shape mismatch");
  KrausChannel ch;
  ch.d_in = d_in;
  ch.d_out = d_out;
  for (int a = 0; a < d_in; ++a) {
    Matrix k(d_out, d_in);
    for (int i = 0; i < d_out; ++i)
      for (int l = 0; l < d_in; ++l) k(i, l) = std::conj(v(i * d_in + a, l));
    ch.kraus.push_back(std::move(k));
  }
  return ch;
}

std::pair<KrausChannel, KrausChannel> rsw_decompose(const KrausChannel& ch) {
  check_channel_dims(ch);
  if (ch.d_in != 2 || ch.d_out != 2)
    throw std::invalid_argument("rsw_decompose: only qubit channels are supported");
  const ChoiState w = choi_from_kraus(ch);

  const Matrix c00 = w.matrix.block(0, 0, 2, 2);
  const Matrix c01 = w.matrix.block(0, 2, 2, 2);
  const Matrix c11 = w.matrix.block(2, 2, 2, 2);

  const Matrix contraction = psd_sqrt_pinv(c00) * c01 * psd_sqrt_pinv(c11);
  Eigen::JacobiSVD<Matrix> svd(contraction, Eigen::ComputeFullU | Eigen::ComputeFullV);

  // A = V diag(cos t) W^dag = (U_+ + U_-)/2 with U_+- = V diag(e^{+-it}) W^dag
  Vector phases(2);
  for (int k = 0; k < 2; ++k) {
    const double sigma = std::clamp(svd.singularValues()[k], 0.0, 1.0);
    const double theta = std::acos(sigma);
    phases[k] = Complex(std::cos(theta), std::sin(theta));
  }
  const Matrix sqrt_c00 = psd_sqrt(c00);
  const Matrix sqrt_c11 = psd_sqrt(c11);

  auto build = [&](bool conjugate) {
    Vector d = conjugate ? phases.conjugate() : phases;
    const Matrix u = svd.matrixU() * d.asDiagonal() * svd.matrixV().adjoint();
    const Matrix off = sqrt_c00 * u * sqrt_c11;
    Matrix m(4, 4);
    m.block(0, 0, 2, 2) = c00;
    m.block(0, 2, 2, 2) = off;
    m.block(2, 0, 2, 2) = off.adjoint();
    m.block(2, 2, 2, 2) = c11;
    return ChoiState{std::move(m), 2, 2};
  };

  const ChoiState w1 = build(false);
  const ChoiState w2 = build(true);
  if (max_abs(0.5 * (w1.matrix + w2.matrix) - w.matrix) > 1e-8)
    throw std::runtime_error("rsw_decompose: reconstruction residual exceeds 1e-8");
  return {kraus_from_choi(w1), kraus_from_choi(w2)};
}

KrausChannel compose_channels(const KrausChannel& after, const KrausChannel& before) {
  check_channel_dims(after);
  check_channel_dims(before);
  if (after.d_in != before.d_out)
    throw std::invalid_argument("compose_channels: dimension mismatch");
  KrausChannel ch;
  ch.d_in = before.d_in;
  ch.d_out = after.d_out;
  for (const Matrix& a : after.kraus)
    for (const Matrix& b : before.kraus) ch.kraus.push_back(a * b);
  return ch;
}

KrausChannel identity_channel(int d) {
  KrausChannel ch;
  ch.d_in = d;
  ch.d_out = d;
  ch.kraus = {Matrix::Identity(d, d)};
  return ch;
}

KrausChannel unitary_channel(const Matrix& u) {
  if (!is_unitary(u)) throw std::invalid_argument("unitary_channel: input is not unitary");
  KrausChannel ch;
  ch.d_in = static_cast<int>(u.cols());
  ch.d_out = static_cast<int>(u.rows());
  ch.kraus = {u};
  return ch;
}

KrausChannel amplitude_damping_channel(double gamma) {
  if (gamma < 0.0 || gamma > 1.0)
    throw std::invalid_argument("amplitude_damping_channel: gamma must be in [0, 1]");
  Matrix k0 = Matrix::Zero(2, 2), k1 = Matrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - gamma);
  k1(0, 1) = std::sqrt(gamma);
  KrausChannel ch;
  ch.d_in = 2;
  ch.d_out = 2;
  ch.kraus = {std::move(k0), std::move(k1)};
  return ch;
}

KrausChannel completely_depolarizing_channel(int d) {
  KrausChannel ch;
  ch.d_in = d;
  ch.d_out = d;
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Matrix k = Matrix::Zero(d, d);
      k(i, j) = scale;
      ch.kraus.push_back(std::move(k));
    }
  return ch;
}

KrausChannel random_kraus_channel(int d_in, int d_out, int rank, Rng& rng) {
  if (rank < 1 || d_in < 1 || d_out < 1)
    throw std::invalid_argument("random_kraus_channel: dimensions must be positive");
  if (static_cast<long>(d_out) * rank < d_in)
    throw std::invalid_argument("random_kraus_channel: d_out * rank must be >= d_in");
  const Matrix u = haar_unitary(d_out * rank, rng);
  KrausChannel ch;
  ch.d_in = d_in;
  ch.d_out = d_out;
  for (int a = 0; a < rank; ++a)
    ch.kraus.push_back(u.block(a * d_out, 0, d_out, d_in));
  return ch;
}

}  // namespace scf
