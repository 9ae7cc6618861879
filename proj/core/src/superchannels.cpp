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

#include "scf/superchannels.hpp"

#include <cmath>
#include <stdexcept>

#include "scf/csd.hpp"

namespace scf {

namespace {

void check_superchannel(const Superchannel& sc) {
  if (sc.d < 1 || sc.a1 < 1 || sc.a2 < 1)
    throw std::invalid_argument("superchannel dimensions must be positive");
  if (sc.pre.rows() != sc.pre.cols() || sc.post.rows() != sc.post.cols())
    throw std::invalid_argument("superchannel unitaries must be square");
  if (sc.pre.rows() != static_cast<long>(sc.d) * sc.a1)
    throw std::invalid_argument("pre unitary dimension must be d * a1");
  if (sc.post.rows() % (static_cast<long>(sc.d) * sc.a2) != 0)
    throw std::invalid_argument("post unitary dimension must be d * m * a2");
  const int m = sc.memory();
  if (m < 1 || sc.a1 % m != 0)
    throw std::invalid_argument("memory dimension must divide a1");
}

// d x d block of V at row block (m, e), column block 0.
Matrix pre_block(const Superchannel& sc, int m, int e) {
  const int d = sc.d;
  const int row = (m * sc.env_pre() + e) * d;
  return sc.pre.block(row, 0, d, d);
}

// d x d block of W at row block a, column block (m, anc2 = 0).
Matrix post_block(const Superchannel& sc, int m, int a) {
  const int d = sc.d;
  return sc.post.block(a * d, m * sc.a2 * d, d, d);
}

}  // namespace

bool is_valid_superchannel(const Superchannel& sc, double tol) {
  try {
    check_superchannel(sc);
  } catch (const std::invalid_argument&) {
    return false;
  }
  return is_unitary(sc.pre, tol) && is_unitary(sc.post, tol);
}

SuperKraus super_kraus(const Superchannel& sc) {
  check_superchannel(sc);
  const int d = sc.d;
  const int m_dim = sc.memory();
  const int e_dim = sc.env_pre();
  const int a_dim = sc.env_post();

  SuperKraus sk;
  sk.d = d;
  sk.ops.reserve(static_cast<std::size_t>(e_dim) * a_dim);
  for (int e = 0; e < e_dim; ++e) {
    for (int a = 0; a < a_dim; ++a) {
      Matrix s = Matrix::Zero(d * d, d * d);
      for (int m = 0; m < m_dim; ++m)
        s += tensor(post_block(sc, m, a), pre_block(sc, m, e));
      sk.ops.push_back(std::move(s));
    }
  }
  return sk;
}

double super_completeness_residual(const SuperKraus& sk) {
  if (sk.ops.empty()) throw std::invalid_argument("empty superchannel Kraus set");
  const long dim = sk.ops[0].rows();
  Matrix sum = Matrix::Zero(dim, dim);
  for (const Matrix& s : sk.ops) sum += s.adjoint() * s;
  return max_abs(sum - Matrix::Identity(dim, dim));
}

SuperKraus canonicalize_super_kraus(const SuperKraus& sk) {
  const KrausChannel ch = kraus_from_choi(as_channel_choi(super_choi_from_kraus(sk)));
  SuperKraus out;
  out.d = sk.d;
  out.ops = ch.kraus;
  return out;
}

KrausChannel apply_superchannel(const Superchannel& sc, const KrausChannel& ch) {
  check_superchannel(sc);
  if (ch.d_in != sc.d || ch.d_out != sc.d)
    throw std::invalid_argument("apply_superchannel: channel must act on the superchannel's system dimension");
  const int d = sc.d;
  const int m_dim = sc.memory();
  const int e_dim = sc.env_pre();
  const int a_dim = sc.env_post();

  KrausChannel out;
  out.d_in = d;
  out.d_out = d;
  for (const Matrix& k : ch.kraus) {
    for (int e = 0; e < e_dim; ++e) {
      for (int a = 0; a < a_dim; ++a) {
        Matrix f = Matrix::Zero(d, d);
        for (int m = 0; m < m_dim; ++m)
          f += post_block(sc, m, a) * k * pre_block(sc, m, e).transpose();
        out.kraus.push_back(std::move(f));
      }
    }
  }
  return out;
}

SuperChoi super_choi_from_kraus(const SuperKraus& sk) {
  if (sk.ops.empty()) throw std::invalid_argument("empty superchannel Kraus set");
  const int d = sk.d;
  const int d2 = d * d;
  const long dim = static_cast<long>(d2) * d2;

  // (S (x) I) applied to the maximally entangled state on the doubled Choi
  // space: columns are the row-major vectorizations of the S_a.
  Matrix raw = Matrix::Zero(dim, dim);
  for (const Matrix& s : sk.ops) {
    Vector v(dim);
    for (int r = 0; r < d2; ++r)
      for (int c = 0; c < d2; ++c) v[r * d2 + c] = s(r, c) / static_cast<double>(d);
    raw.noalias() += v * v.adjoint();
  }

  // raw factor order is (H3, H1, H2, H0); swap the middle factors.
  const DimVector dims{d, d, d, d};
  SuperChoi w;
  w.d = d;
  w.matrix = permute_subsystems(raw, dims, std::vector<int>{0, 2, 1, 3});
  return w;
}

SuperChoi super_choi(const Superchannel& sc) {
  return super_choi_from_kraus(super_kraus(sc));
}

ChoiState as_channel_choi(const SuperChoi& w) {
  const int d = w.d;
  const DimVector dims{d, d, d, d};
  // the middle-factor swap is its own inverse
  ChoiState ch;
  ch.d_in = d * d;
  ch.d_out = d * d;
  ch.matrix = permute_subsystems(w.matrix, dims, std::vector<int>{0, 2, 1, 3});
  return ch;
}

int super_choi_rank(const SuperChoi& w, double tol) {
  return psd_rank(w.matrix, tol);
}

bool comb_validity(const SuperChoi& w) {
  const int d = w.d;
  const double tol = tolerance();
  const long dim = static_cast<long>(d) * d * d * d;
  if (w.matrix.rows() != dim || w.matrix.cols() != dim) return false;
  if (std::abs(w.matrix.trace() - Complex(1.0)) > tol) return false;
  if (!is_psd(w.matrix)) return false;

  const DimVector dims{d, d, d, d};
  const Matrix no_h3 = partial_trace(w.matrix, dims, std::vector<int>{1, 2, 3});
  const Matrix reduced = partial_trace(w.matrix, dims, std::vector<int>{2, 3});
  const Matrix expected = tensor(Matrix::Identity(d, d) / d, reduced);
  if (max_abs(no_h3 - expected) > tol) return false;

  // the reduced state must itself be a valid channel Choi on (H1, H0)
  const Matrix in_marginal = partial_trace(reduced, DimVector{d, d}, std::vector<int>{1});
  return max_abs(in_marginal - Matrix::Identity(d, d) / d) <= tol;
}

long long parameter_count(int n, int d) {
  if (n < 0 || d < 2) throw std::invalid_argument("parameter_count: need n >= 0 and d >= 2");
  long long power = 1;
  for (int i = 0; i < 4 * (n + 1); ++i) power *= d;
  const long long d2 = static_cast<long long>(d) * d;
  return d2 * ((power - 1) / (d2 + 1));
}

bool super_extreme_necessary(const SuperKraus& sk) {
  const SuperKraus canon = canonicalize_super_kraus(sk);
  const std::size_t r = canon.ops.size();
  std::vector<Matrix> products;
  products.reserve(r * r);
  for (const Matrix& sa : canon.ops)
    for (const Matrix& sb : canon.ops) products.push_back(sa.adjoint() * sb);
  return operator_set_rank(products) == static_cast<int>(r * r);
}

int gen_extreme_super_param_count(SuperCircuitType type) {
  switch (type) {
    case SuperCircuitType::kTypeI:
      return csd_param_count(8) + csd_param_count(8);
    case SuperCircuitType::kTypeII:
      return csd_param_count(4) + csd_param_count(8);
    case SuperCircuitType::kTypeIII:
      return csd_param_count(4) + csd_param_count(4);
  }
  throw std::invalid_argument("unknown circuit type");
}

Superchannel gen_extreme_super(const GenExtremeSuperCircuit& c) {
  const std::span<const double> a(c.angles);
  if (static_cast<int>(a.size()) != gen_extreme_super_param_count(c.circuit_type))
    throw std::invalid_argument("gen_extreme_super: wrong parameter count");

  Superchannel sc;
  sc.d = 2;
  switch (c.circuit_type) {
    case SuperCircuitType::kTypeI: {
      const int p = csd_param_count(8);
      sc.pre = csd_unitary(3, a.subspan(0, p));
      sc.post = csd_unitary(3, a.subspan(p, p));
      sc.a1 = 4;
      sc.a2 = 1;  // memory 4
      break;
    }
    case SuperCircuitType::kTypeII: {
      const int p4 = csd_param_count(4);
      sc.pre = csd_unitary(2, a.subspan(0, p4));
      sc.post = csd_unitary(3, a.subspan(p4, csd_param_count(8)));
      sc.a1 = 2;
      sc.a2 = 2;  // memory 2
      break;
    }
    case SuperCircuitType::kTypeIII: {
      const int p4 = csd_param_count(4);
      sc.pre = csd_unitary(2, a.subspan(0, p4));
      sc.post = csd_unitary(2, a.subspan(p4, p4));
      sc.a1 = 2;
      sc.a2 = 2;  // no memory
      break;
    }
  }
  return sc;
}

int rank8_param_count() { return csd_param_count(8) + csd_param_count(16); }

Superchannel rank8_superchannel(std::span<const double> angles) {
  if (static_cast<int>(angles.size()) != rank8_param_count())
    throw std::invalid_argument("rank8_superchannel: wrong parameter count");
  const int p8 = csd_param_count(8);
  Superchannel sc;
  sc.d = 2;
  sc.pre = csd_unitary(3, angles.subspan(0, p8));
  sc.post = csd_unitary(4, angles.subspan(p8, csd_param_count(16)));
  sc.a1 = 4;
  sc.a2 = 2;  // memory 4, fresh qubit ancilla
  return sc;
}

UnitalClassFlags unital_class_check(const Superchannel& sc) {
  const SuperChoi w = super_choi(sc);
  const int d = w.d;
  const double tol = tolerance();
  const DimVector dims{d, d, d, d};
  const Matrix eye = Matrix::Identity(d, d) / d;

  // factor indices: 0 = H3, 1 = H2, 2 = H1, 3 = H0
  const Matrix m013 = partial_trace(w.matrix, dims, std::vector<int>{0, 2, 3});
  const Matrix m01 = partial_trace(w.matrix, dims, std::vector<int>{2, 3});
  const bool cond_a = max_abs(m013 - tensor(eye, m01)) <= tol;

  const Matrix m13 = partial_trace(w.matrix, dims, std::vector<int>{0, 2});
  const bool cond_b =
      max_abs(m13 - Matrix::Identity(d * d, d * d) / (d * d)) <= tol;

  const Matrix m123 = partial_trace(w.matrix, dims, std::vector<int>{0, 1, 2});
  const Matrix m23 = partial_trace(w.matrix, dims, std::vector<int>{0, 1});
  const bool cond_c = max_abs(m123 - tensor(m23, eye)) <= tol;

  UnitalClassFlags flags;
  flags.identity_preserving = cond_a;
  flags.doubly_stochastic = cond_a && cond_b;
  flags.unital_preserving = cond_b && cond_c;
  return flags;
}

Matrix complementary_superchannel(const SuperKraus& sk, const ChoiState& w) {
  if (sk.ops.empty()) throw std::invalid_argument("empty superchannel Kraus set");
  if (w.matrix.rows() != sk.ops[0].cols())
    throw std::invalid_argument("complementary_superchannel: Choi dimension mismatch");
  const std::size_t r = sk.ops.size();
  Matrix out(r, r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
          (sk.ops[b].adjoint() * sk.ops[a] * w.matrix).trace();
  return out;
}

Superchannel random_superchannel(SuperchannelClass cls, Rng& rng) {
  Superchannel sc;
  sc.d = 2;
  sc.a1 = 4;
  switch (cls) {
    case SuperchannelClass::kFull:
      sc.pre = haar_unitary(8, rng);
      sc.post = haar_unitary(32, rng);
      sc.a2 = 4;
      break;
    case SuperchannelClass::kRank8:
      sc.pre = haar_unitary(8, rng);
      sc.post = haar_unitary(16, rng);
      sc.a2 = 2;
      break;
    case SuperchannelClass::kGenExtreme:
      sc.pre = haar_unitary(8, rng);
      sc.post = haar_unitary(8, rng);
      sc.a2 = 1;
      break;
  }
  return sc;
}

Superchannel identity_superchannel(int d) {
  Superchannel sc;
  sc.d = d;
  sc.a1 = 1;
  sc.a2 = 1;
  sc.pre = Matrix::Identity(d, d);
  sc.post = Matrix::Identity(d, d);
  return sc;
}

Superchannel pauli_twirl_superchannel() {
  Matrix x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  z << 1, 0, 0, -1;
  const std::vector<Matrix> paulis = {Matrix::Identity(2, 2), x, y, z};

  Matrix controlled = Matrix::Zero(8, 8);
  for (int k = 0; k < 4; ++k)
    controlled.block(2 * k, 2 * k, 2, 2) = paulis[static_cast<std::size_t>(k)];

  Matrix h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  const Matrix prep = tensor(tensor(h, h), Matrix::Identity(2, 2));

  Superchannel sc;
  sc.d = 2;
  sc.a1 = 4;
  sc.a2 = 1;
  sc.pre = controlled * prep;  // |0> -> uniform index, then P_k on the system
  sc.post = controlled;        // P_k again, index leaves as environment
  return sc;
}

}  // namespace scf
