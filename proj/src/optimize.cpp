// Copyright 2026 The qflip Authors
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

#include "qflip/optimize.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "qflip/rng.hpp"
#include "qflip/strategy.hpp"

namespace qflip {
namespace {

constexpr double kPi = 3.14159265358979323846;

// One eigen-block of a slice Hamiltonian H = H0 + a C. The propagator is
// never formed densely; states are moved through Q phase Q* per block. With
// the spectral Frechet derivative D = Q (Phi .* (Q* C Q)) Q*, where
// Phi_pq = -i dt exp(-i dt (l_p + l_q) / 2) sinc(dt (l_p - l_q) / 2),
// the `mt` field caches Phi .* (Q* C Q) so that <w, D f> reduces to a
// quadratic form in the eigenbasis.
struct SliceBlock {
  std::vector<Eigen::Index> idx;  // global basis indices of this block
  Mat q;                          // block eigenvectors
  Eigen::VectorXcd phase;         // exp(-i dt lambda)
  Mat mt;                         // Phi .* (q* C q), only when deriv
};

struct Slice {
  std::vector<SliceBlock> blocks;
};

struct EvalContext {
  Eigen::MatrixXd h0;  // drift (real symmetric)
  Mat h0c;             // same, complex carrier
  Mat cy;              // sigma_y on spin 1
  Eigen::VectorXd cz_diag;  // diagonal of sigma_z on spin 1
  std::vector<std::vector<Eigen::Index>> sectors;  // magnetization blocks
  double dt = 0.0;
  Vec psi0;
  Eigen::Index half = 0;
};

EvalContext make_context(const OptimizationProblem& problem) {
  const ChainConfig& chain = problem.spec.chain;
  const Eigen::Index dim = chain.dim();
  EvalContext ctx;
  ctx.h0c = drift_hamiltonian(chain);
  ctx.h0 = ctx.h0c.real();
  ctx.cy = control_operator(chain, Axis::kY);
  ctx.cz_diag.resize(dim);
  ctx.sectors.assign(chain.n + 1, {});
  for (Eigen::Index s = 0; s < dim; ++s) {
    ctx.cz_diag[s] = s < dim / 2 ? 1.0 : -1.0;
    ctx.sectors[std::popcount(static_cast<std::uint64_t>(s))].push_back(s);
  }
  ctx.dt = chain.T / problem.pulses_per_move;
  ctx.psi0 = initial_state(dim);
  ctx.half = dim / 2;
  return ctx;
}

double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

// mt = Phi .* m for a block with eigenvalues `evals`.
void apply_phi(const Eigen::VectorXd& evals, double dt, Mat* m) {
  const Eigen::Index dim = evals.size();
  for (Eigen::Index p = 0; p < dim; ++p) {
    for (Eigen::Index q = 0; q < dim; ++q) {
      (*m)(p, q) *= -kI * dt * std::polar(1.0, -0.5 * dt * (evals[p] + evals[q])) *
                    sinc(0.5 * dt * (evals[p] - evals[q]));
    }
  }
}

// z-pulse slices block-diagonalize over total-magnetization sectors (both the
// drift and sigma_z on spin 1 preserve the number of up spins), and each
// block is real symmetric.
void make_z_slice(const EvalContext& ctx, double amplitude, bool deriv,
                  Slice* out) {
  out->blocks.clear();
  for (const auto& sector : ctx.sectors) {
    const Eigen::Index b = static_cast<Eigen::Index>(sector.size());
    Eigen::MatrixXd h(b, b);
    for (Eigen::Index i = 0; i < b; ++i) {
      for (Eigen::Index j = 0; j < b; ++j) {
        h(i, j) = ctx.h0(sector[i], sector[j]);
      }
      h(i, i) += amplitude * ctx.cz_diag[sector[i]];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    if (es.info() != Eigen::Success) {
      throw std::runtime_error("eigendecomposition failed");
    }
    SliceBlock blk;
    blk.idx = sector;
    blk.q = es.eigenvectors().cast<Complex>();
    blk.phase.resize(b);
    for (Eigen::Index p = 0; p < b; ++p) {
      blk.phase[p] = std::polar(1.0, -ctx.dt * es.eigenvalues()[p]);
    }
    if (deriv) {
      Eigen::VectorXd c(b);
      for (Eigen::Index i = 0; i < b; ++i) c[i] = ctx.cz_diag[sector[i]];
      blk.mt = (es.eigenvectors().transpose() * c.asDiagonal() *
                es.eigenvectors())
                   .cast<Complex>();
      apply_phi(es.eigenvalues(), ctx.dt, &blk.mt);
    }
    out->blocks.push_back(std::move(blk));
  }
}

// y-pulse slices have no conserved sector; one dense block. The only cubic
// cost besides the eigendecomposition is Q* (C Q), using that sigma_y on
// spin 1 just swaps the state halves (with +-i).
void make_y_slice(const EvalContext& ctx, double amplitude, bool deriv,
                  Slice* out) {
  const Eigen::Index dim = ctx.h0.rows();
  const Eigh e = eigh(ctx.h0c + amplitude * ctx.cy);
  out->blocks.resize(1);
  SliceBlock& blk = out->blocks.front();
  blk.idx.resize(dim);
  for (Eigen::Index s = 0; s < dim; ++s) blk.idx[s] = s;
  blk.q = e.evecs;
  blk.phase.resize(dim);
  for (Eigen::Index p = 0; p < dim; ++p) {
    blk.phase[p] = std::polar(1.0, -ctx.dt * e.evals[p]);
  }
  if (deriv) {
    Mat cq(dim, dim);
    cq.topRows(ctx.half) = -kI * e.evecs.bottomRows(ctx.half);
    cq.bottomRows(ctx.half) = kI * e.evecs.topRows(ctx.half);
    blk.mt = e.evecs.adjoint() * cq;
    apply_phi(e.evals, ctx.dt, &blk.mt);
  }
}

void build_slices(const EvalContext& ctx, const Eigen::VectorXd& amps,
                  int offset, int count, bool deriv, std::vector<Slice>* out) {
  out->resize(count);
  for (int k = 0; k < count; ++k) {
    if (k % 2 == 0) {
      make_z_slice(ctx, amps[offset + k], deriv, &(*out)[k]);
    } else {
      make_y_slice(ctx, amps[offset + k], deriv, &(*out)[k]);
    }
  }
}

// out = U v (or U* v): per block, rotate into the eigenbasis, phase, rotate
// back. Blocks partition the basis, so every entry is written exactly once.
void apply_u(const Slice& s, const Vec& v, bool dagger, Vec* out) {
  out->resize(v.size());
  Vec sub, tmp;
  for (const SliceBlock& blk : s.blocks) {
    const Eigen::Index b = static_cast<Eigen::Index>(blk.idx.size());
    sub.resize(b);
    for (Eigen::Index i = 0; i < b; ++i) sub[i] = v[blk.idx[i]];
    tmp.noalias() = blk.q.adjoint() * sub;
    for (Eigen::Index p = 0; p < b; ++p) {
      tmp[p] *= dagger ? std::conj(blk.phase[p]) : blk.phase[p];
    }
    sub.noalias() = blk.q * tmp;
    for (Eigen::Index i = 0; i < b; ++i) (*out)[blk.idx[i]] = sub[i];
  }
}

// <w, D f> with D the slice's amplitude derivative.
Complex deriv_pairing(const Slice& s, const Vec& w, const Vec& f) {
  Complex acc = 0.0;
  Vec sub_w, sub_f, uw, uf;
  for (const SliceBlock& blk : s.blocks) {
    const Eigen::Index b = static_cast<Eigen::Index>(blk.idx.size());
    sub_w.resize(b);
    sub_f.resize(b);
    for (Eigen::Index i = 0; i < b; ++i) {
      sub_w[i] = w[blk.idx[i]];
      sub_f[i] = f[blk.idx[i]];
    }
    uw.noalias() = blk.q.adjoint() * sub_w;
    uf.noalias() = blk.q.adjoint() * sub_f;
    acc += uw.dot(blk.mt * uf);
  }
  return acc;
}

void forward(const std::vector<Slice>& slices, const Vec& in,
             std::vector<Vec>* f) {
  const int n = static_cast<int>(slices.size());
  f->resize(n + 1);
  (*f)[0] = in;
  for (int k = 0; k < n; ++k) apply_u(slices[k], (*f)[k], false, &(*f)[k + 1]);
}

// Adjoint pass plus gradient accumulation: with costates B[k] satisfying
// B[N] = w, B[k] = U_k* B[k+1], each amplitude picks up
// 2 Re <B[k+1], D_k f[k]>. Returns B[0] for chaining into an earlier move.
Vec backward_accumulate(const std::vector<Slice>& slices,
                        const std::vector<Vec>& f, const Vec& w,
                        Eigen::VectorXd* grad, int offset) {
  const int n = static_cast<int>(slices.size());
  Vec b = w;
  Vec next;
  for (int k = n - 1; k >= 0; --k) {
    (*grad)[offset + k] += 2.0 * deriv_pairing(slices[k], b, f[k]).real();
    apply_u(slices[k], b, true, &next);
    b.swap(next);
  }
  return b;
}

double eval_alice(const OptimizationProblem& problem, const EvalContext& ctx,
                  const Eigen::VectorXd& x, Eigen::VectorXd* grad) {
  const int n = problem.pulses_per_move;
  const bool deriv = grad != nullptr;
  std::vector<Slice> s1;
  std::vector<Slice> s2;
  build_slices(ctx, x, 0, n, deriv, &s1);
  build_slices(ctx, x, n, n, deriv, &s2);
  if (deriv) grad->setZero(2 * n);

  std::vector<Vec> f1;
  forward(s1, ctx.psi0, &f1);
  double value = 0.0;
  std::vector<Vec> f2;
  for (const Mat& v : problem.opponent_moves) {
    forward(s2, v * f1[n], &f2);
    const Vec& psi = f2[n];
    value += psi.tail(ctx.half).squaredNorm();
    if (!deriv) continue;
    Vec w = Vec::Zero(psi.size());
    w.tail(ctx.half) = psi.tail(ctx.half);
    const Vec b0 = backward_accumulate(s2, f2, w, grad, n);
    backward_accumulate(s1, f1, v.adjoint() * b0, grad, 0);
  }
  const double denom = static_cast<double>(problem.opponent_moves.size());
  if (deriv) *grad /= denom;
  return value / denom;
}

double eval_bob(const OptimizationProblem& problem, const EvalContext& ctx,
                const Eigen::VectorXd& x, Eigen::VectorXd* grad) {
  const int n = problem.pulses_per_move;
  const bool deriv = grad != nullptr;
  const bool correlated = problem.averaging == Averaging::kCorrelated;
  std::vector<Slice> s;
  build_slices(ctx, x, 0, n, deriv, &s);
  if (deriv) grad->setZero(n);

  double value = 0.0;
  int games = 0;
  std::vector<Vec> f;
  const auto& moves = problem.opponent_moves;
  for (std::size_t i1 = 0; i1 < moves.size(); ++i1) {
    forward(s, moves[i1] * ctx.psi0, &f);
    const Vec& y = f[n];
    Vec mu = deriv ? Vec(Vec::Zero(y.size())) : Vec();
    for (std::size_t i2 = 0; i2 < moves.size(); ++i2) {
      if (correlated && i2 != i1) continue;
      const Vec z = moves[i2] * y;
      value += z.head(ctx.half).squaredNorm();  // Bob scores 1 - p_alice
      ++games;
      if (!deriv) continue;
      Vec pz = Vec::Zero(z.size());
      pz.head(ctx.half) = z.head(ctx.half);
      mu += moves[i2].adjoint() * pz;
    }
    if (deriv) backward_accumulate(s, f, mu, grad, 0);
  }
  if (deriv) *grad /= static_cast<double>(games);
  return value / static_cast<double>(games);
}

void validate_problem(const OptimizationProblem& problem) {
  problem.spec.chain.validate();
  if (problem.pulses_per_move < 1) {
    throw std::invalid_argument("pulses_per_move must be at least 1");
  }
  if (problem.opponent_moves.size() != 4) {
    throw std::invalid_argument("opponent mixture must hold 4 moves");
  }
  const Eigen::Index dim = problem.spec.chain.dim();
  for (const Mat& v : problem.opponent_moves) {
    if (v.rows() != dim || v.cols() != dim) {
      throw std::invalid_argument("opponent move dimension mismatch");
    }
  }
}

// ---- Polak-Ribiere(+) conjugate gradient with strong Wolfe line search ----

constexpr double kWolfeC1 = 1e-4;
constexpr double kWolfeC2 = 0.1;
constexpr int kMaxLineEvals = 60;

struct MinOracle {
  const OptimizationProblem* problem;
  // Minimization view: phi(x) = -payoff(x).
  double operator()(const Eigen::VectorXd& x, Eigen::VectorXd* g) const {
    const double v = objective_and_gradient(*problem, x, g);
    if (g) *g = -*g;
    return -v;
  }
};

struct LinePoint {
  double alpha = 0.0;
  double phi = 0.0;
  double dphi = 0.0;
};

struct LineResult {
  bool ok = false;
  Eigen::VectorXd x;
  Eigen::VectorXd g;
  double phi = 0.0;
  double alpha = 0.0;
};

// Nocedal-Wright strong Wolfe search (algorithms 3.5/3.6). The zoom stage
// uses safeguarded quadratic interpolation; every trial evaluates value and
// gradient together. alpha_init seeds the first trial (scaled from the
// previous accepted step by the caller).
LineResult wolfe_search(const MinOracle& oracle, const Eigen::VectorXd& x0,
                        const Eigen::VectorXd& dir, double phi0, double dphi0,
                        double alpha_init) {
  LineResult res;
  if (dphi0 >= 0.0) return res;
  Eigen::VectorXd xt(x0.size());
  Eigen::VectorXd gt(x0.size());
  int evals = 0;
  const auto probe = [&](double alpha) {
    xt = x0 + alpha * dir;
    const double phi = oracle(xt, &gt);
    ++evals;
    return LinePoint{alpha, phi, gt.dot(dir)};
  };
  const auto accept = [&](const LinePoint& p) {
    res.ok = true;
    res.x = xt;
    res.g = gt;
    res.phi = p.phi;
    res.alpha = p.alpha;
  };
  const auto armijo = [&](const LinePoint& p) {
    return p.phi <= phi0 + kWolfeC1 * p.alpha * dphi0;
  };

  const auto zoom = [&](LinePoint lo, LinePoint hi) {
    while (evals < kMaxLineEvals) {
      // Quadratic model through (lo.phi, lo.dphi, hi.phi), bisection when the
      // minimizer falls outside the safeguarded interior of the bracket.
      const double w = hi.alpha - lo.alpha;
      const double denom = hi.phi - lo.phi - lo.dphi * w;
      double alpha = lo.alpha + 0.5 * w;
      if (denom != 0.0) {
        const double cand = lo.alpha - 0.5 * lo.dphi * w * w / denom;
        const double a = std::min(lo.alpha, hi.alpha);
        const double b = std::max(lo.alpha, hi.alpha);
        const double margin = 0.1 * (b - a);
        if (cand >= a + margin && cand <= b - margin) alpha = cand;
      }
      LinePoint p = probe(alpha);
      if (!armijo(p) || p.phi >= lo.phi) {
        hi = p;
      } else {
        if (std::abs(p.dphi) <= -kWolfeC2 * dphi0) {
          accept(p);
          return;
        }
        if (p.dphi * (hi.alpha - lo.alpha) >= 0.0) hi = lo;
        lo = p;
      }
      if (std::abs(hi.alpha - lo.alpha) <
          1e-14 * std::max(1.0, std::abs(lo.alpha))) {
        break;
      }
    }
    // Fall back to the best sufficient-decrease point seen.
    if (armijo(lo) && lo.alpha > 0.0) {
      LinePoint p = probe(lo.alpha);
      accept(p);
    }
  };

  LinePoint prev{0.0, phi0, dphi0};
  double alpha = alpha_init;
  constexpr double kAlphaMax = 1e6;
  while (evals < kMaxLineEvals) {
    LinePoint p = probe(alpha);
    if (!armijo(p) || (prev.alpha > 0.0 && p.phi >= prev.phi)) {
      zoom(prev, p);
      return res;
    }
    if (std::abs(p.dphi) <= -kWolfeC2 * dphi0) {
      accept(p);
      return res;
    }
    if (p.dphi >= 0.0) {
      zoom(p, prev);
      return res;
    }
    prev = p;
    if (alpha >= kAlphaMax) break;
    alpha = std::min(2.0 * alpha, kAlphaMax);
  }
  if (prev.alpha > 0.0) {
    LinePoint p = probe(prev.alpha);
    if (armijo(p)) accept(p);
  }
  return res;
}

struct RestartOutcome {
  Eigen::VectorXd x;
  double payoff = 0.0;
  int iterations = 0;
  double gradient_norm = 0.0;
};

RestartOutcome run_restart(const OptimizationProblem& problem,
                           const OptimizeOptions& options,
                           std::uint64_t sub_seed) {
  const MinOracle oracle{&problem};
  const int nv = variable_count(problem);
  const double limit =
      kPi * problem.pulses_per_move / problem.spec.chain.T;
  Rng rng(sub_seed);
  Eigen::VectorXd x(nv);
  for (int i = 0; i < nv; ++i) x[i] = rng.uniform(-limit, limit);

  Eigen::VectorXd g(nv);
  double phi = oracle(x, &g);
  Eigen::VectorXd dir = -g;
  double prev_alpha = 0.0;
  double prev_dphi0 = 0.0;
  int it = 0;
  for (; it < options.max_iterations; ++it) {
    if (g.lpNorm<Eigen::Infinity>() < options.gradient_tol) break;
    double dphi0 = g.dot(dir);
    bool steepest = false;
    if (dphi0 >= 0.0) {  // restart on a non-descent direction
      dir = -g;
      dphi0 = g.dot(dir);
      steepest = true;
      if (dphi0 >= 0.0) break;
    }
    // Seed the trial step so it matches the previous step's first-order
    // decrease (Nocedal-Wright eq. 3.60); full step on the first iteration.
    double alpha_init = 1.0;
    if (prev_alpha > 0.0 && dphi0 != 0.0) {
      alpha_init = std::clamp(prev_alpha * prev_dphi0 / dphi0, 1e-10, 1e4);
    }
    LineResult line = wolfe_search(oracle, x, dir, phi, dphi0, alpha_init);
    if (!line.ok && !steepest) {
      dir = -g;
      dphi0 = g.dot(dir);
      line = wolfe_search(oracle, x, dir, phi, dphi0, 1.0);
    }
    if (!line.ok) break;
    const double beta =
        std::max(0.0, line.g.dot(line.g - g) / g.squaredNorm());
    dir = -line.g + beta * dir;
    x = line.x;
    g = line.g;
    phi = line.phi;
    prev_alpha = line.alpha;
    prev_dphi0 = dphi0;
  }
  RestartOutcome out;
  out.x = x;
  out.payoff = -phi;
  out.iterations = it;
  out.gradient_norm = g.lpNorm<Eigen::Infinity>();
  return out;
}

}  // namespace

OptimizationProblem make_problem(Player player, const ChainConfig& chain,
                                 int pulses_per_move) {
  OptimizationProblem problem;
  problem.spec.chain = chain;
  problem.player = player;
  problem.pulses_per_move = pulses_per_move;
  problem.opponent_moves = calibration_move_unitaries(chain);
  return problem;
}

int variable_count(const OptimizationProblem& problem) {
  return problem.player == Player::kAlice ? 2 * problem.pulses_per_move
                                          : problem.pulses_per_move;
}

double objective(const OptimizationProblem& problem,
                 const Eigen::VectorXd& amplitudes) {
  return objective_and_gradient(problem, amplitudes, nullptr);
}

Eigen::VectorXd gradient(const OptimizationProblem& problem,
                         const Eigen::VectorXd& amplitudes) {
  Eigen::VectorXd g;
  objective_and_gradient(problem, amplitudes, &g);
  return g;
}

#ifdef QFLIP_COUNT_EVALS
std::atomic<long> g_eval_count{0};
#endif

double objective_and_gradient(const OptimizationProblem& problem,
                              const Eigen::VectorXd& amplitudes,
                              Eigen::VectorXd* grad) {
#ifdef QFLIP_COUNT_EVALS
  g_eval_count.fetch_add(1);
#endif
  validate_problem(problem);
  if (amplitudes.size() != variable_count(problem)) {
    throw std::invalid_argument("amplitude vector has the wrong length");
  }
  const EvalContext ctx = make_context(problem);
  return problem.player == Player::kAlice
             ? eval_alice(problem, ctx, amplitudes, grad)
             : eval_bob(problem, ctx, amplitudes, grad);
}

double sequence_payoff(const OptimizationProblem& problem,
                       const std::vector<ControlSequence>& moves) {
  validate_problem(problem);
  const ChainConfig& chain = problem.spec.chain;
  const Vec psi0 = initial_state(chain.dim());
  const Eigen::Index half = chain.dim() / 2;
  const auto& opp = problem.opponent_moves;
  if (problem.player == Player::kAlice) {
    if (moves.size() != 2) {
      throw std::invalid_argument("Alice plays two moves");
    }
    const Mat u1 = evolve_move(chain, moves[0]);
    const Mat u2 = evolve_move(chain, moves[1]);
    double value = 0.0;
    for (const Mat& v : opp) {
      value += (u2 * (v * (u1 * psi0))).tail(half).squaredNorm();
    }
    return value / static_cast<double>(opp.size());
  }
  if (moves.size() != 1) {
    throw std::invalid_argument("Bob plays one move");
  }
  const Mat ub = evolve_move(chain, moves[0]);
  const bool correlated = problem.averaging == Averaging::kCorrelated;
  double value = 0.0;
  int games = 0;
  for (std::size_t i1 = 0; i1 < opp.size(); ++i1) {
    const Vec mid = ub * (opp[i1] * psi0);
    for (std::size_t i2 = 0; i2 < opp.size(); ++i2) {
      if (correlated && i2 != i1) continue;
      value += (opp[i2] * mid).head(half).squaredNorm();
      ++games;
    }
  }
  return value / static_cast<double>(games);
}

OptimizationResult optimize(const OptimizationProblem& problem, int restarts,
                            std::uint64_t seed,
                            const OptimizeOptions& options) {
  validate_problem(problem);
  if (restarts < 1) throw std::invalid_argument("restarts must be positive");

  std::vector<RestartOutcome> outcomes(restarts);
  unsigned threads = options.threads > 0
                         ? static_cast<unsigned>(options.threads)
                         : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(restarts));
  if (threads <= 1) {
    for (int r = 0; r < restarts; ++r) {
      outcomes[r] = run_restart(problem, options, seed + r);
    }
  } else {
    std::atomic<int> next{0};
    const auto worker = [&] {
      for (int r = next.fetch_add(1); r < restarts; r = next.fetch_add(1)) {
        outcomes[r] = run_restart(problem, options, seed + r);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  int best = 0;
  for (int r = 1; r < restarts; ++r) {
    if (outcomes[r].payoff > outcomes[best].payoff) best = r;
  }
  OptimizationResult result;
  result.best_amplitudes = outcomes[best].x;
  result.best_payoff = outcomes[best].payoff;
  result.restarts_run = restarts;
  result.iterations = outcomes[best].iterations;
  result.gradient_norm = outcomes[best].gradient_norm;
  result.seed = seed;
  return result;
}

std::vector<SweepEntry> chain_sweep(const std::vector<int>& lengths,
                                    int pulses_per_move, int restarts,
                                    std::uint64_t seed, double J, double T,
                                    const OptimizeOptions& options) {
  std::vector<SweepEntry> entries;
  entries.reserve(lengths.size());
  for (int n : lengths) {
    ChainConfig chain;
    chain.n = n;
    chain.J = J;
    chain.T = T;
    chain.validate();
    const OptimizationProblem problem =
        make_problem(Player::kBob, chain, pulses_per_move);
    const OptimizationResult r = optimize(problem, restarts, seed, options);
    entries.push_back({n, r.best_payoff});
  }
  return entries;
}

}  // namespace qflip
