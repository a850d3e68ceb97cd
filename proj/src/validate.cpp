// Copyright 2026 The depolsim authors
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

#include "depolsim/validate.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "depolsim/channels.hpp"
#include "depolsim/montecarlo.hpp"
#include "depolsim/optics.hpp"
#include "depolsim/qstate.hpp"
#include "depolsim/random_states.hpp"
#include "depolsim/tomography.hpp"

namespace depolsim {

namespace {

constexpr std::uint64_t kSuiteSeed = 0x5eedu;

class SuiteBuilder {
 public:
  void check(const std::string& name, double residual, double tolerance,
             const std::string& detail) {
    checks_.push_back(
        {name, residual <= tolerance, residual, tolerance, detail});
  }

  std::vector<InvariantCheck> take() { return std::move(checks_); }

 private:
  std::vector<InvariantCheck> checks_;
};

double max_abs(const Mat2& m) { return m.cwiseAbs().maxCoeff(); }

DensityMatrix closed_form_depolarize(const DensityMatrix& rho, double p) {
  return DensityMatrix(p * 0.5 * Mat2::Identity() +
                       (1.0 - p) * rho.matrix());
}

void qstate_checks(SuiteBuilder& suite) {
  Rng rng(substream_seed(kSuiteSeed, 1));

  double round_trip = 0.0;
  double purity_identity = 0.0;
  double fidelity_sym = 0.0;
  double fidelity_bounds = 0.0;
  double self_fidelity = 0.0;
  for (int i = 0; i < 200; ++i) {
    const DensityMatrix rho = random_density_matrix(rng);
    const BlochVector r = bloch_from_density(rho);
    round_trip = std::max(
        round_trip, max_abs(density_from_bloch(r).matrix() - rho.matrix()));
    const double nr = r.norm();
    purity_identity = std::max(
        purity_identity, std::abs(purity(rho) - 0.5 * (1.0 + nr * nr)));
    const DensityMatrix sigma = random_density_matrix(rng);
    const double fab = state_fidelity(rho, sigma);
    const double fba = state_fidelity(sigma, rho);
    fidelity_sym = std::max(fidelity_sym, std::abs(fab - fba));
    fidelity_bounds =
        std::max(fidelity_bounds, std::max(-fab, fab - 1.0));
    self_fidelity =
        std::max(self_fidelity, std::abs(state_fidelity(rho, rho) - 1.0));
  }
  suite.check("qstate.bloch_round_trip", round_trip, 1e-12,
              "density_from_bloch(bloch_from_density(rho)) == rho");
  suite.check("qstate.purity_matches_bloch_norm", purity_identity, 1e-12,
              "Tr[rho^2] == (1 + |r|^2)/2");
  suite.check("qstate.fidelity_symmetric_bounded",
              std::max({fidelity_sym, fidelity_bounds, self_fidelity}), 1e-9,
              "F symmetric, in [0,1], F(rho,rho) == 1");

  // |<a|b>|^2 is 0.5 across bases, 0 or 1 within a basis.
  double mub = 0.0;
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      const Vec2 va = pure_from_label(kCanonicalLabels[a]).vec();
      const Vec2 vb = pure_from_label(kCanonicalLabels[b]).vec();
      const double overlap = std::norm(va.dot(vb));
      const bool same_basis = a / 2 == b / 2;
      const double expected = same_basis ? (a == b ? 1.0 : 0.0) : 0.5;
      mub = std::max(mub, std::abs(overlap - expected));
    }
  }
  suite.check("qstate.canonical_states_mutually_unbiased", mub, 1e-12,
              "three mutually unbiased bases");
}

void optics_checks(SuiteBuilder& suite,
                   const std::function<Mat2(double)>& hwp_fn) {
  Rng rng(substream_seed(kSuiteSeed, 2));

  double unitarity = 0.0;
  double involution = 0.0;
  double qwp_square = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double theta = rng.uniform() * std::numbers::pi;
    const Mat2 h = hwp_fn(theta);
    const Mat2 q = qwp(theta);
    unitarity = std::max(
        unitarity, max_abs(h.adjoint() * h - Mat2::Identity()));
    unitarity = std::max(
        unitarity, max_abs(q.adjoint() * q - Mat2::Identity()));
    involution = std::max(involution, max_abs(h * h - Mat2::Identity()));
    qwp_square = std::max(qwp_square, max_abs(q * q - h));
  }
  suite.check("optics.waveplates_unitary", unitarity, 1e-12,
              "hwp and qwp are unitary");
  suite.check("optics.hwp_involutory", involution, 1e-12, "hwp^2 == I");
  suite.check("optics.qwp_squared_equals_hwp", qwp_square, 1e-12,
              "qwp(theta)^2 == hwp(theta)");

  const Vec2 d = pure_from_label(StateLabel::D).vec();
  suite.check("optics.hwp_rotates_h_to_d",
              (hwp_fn(std::numbers::pi / 8) *
                   pure_from_label(StateLabel::H).vec() -
               d)
                  .cwiseAbs()
                  .maxCoeff(),
              1e-12, "hwp(22.5 deg)|H> == |D>");

  double identity_action = 0.0;
  double weight_law = 0.0;
  double weight_spread = 0.0;
  double lift_agreement = 0.0;
  for (int t = 0; t <= 18; ++t) {
    const double theta = t * 2.5 * std::numbers::pi / 180.0;
    const double p = splitting_parameter(theta);
    double min_w = 1.0;
    double max_w = 0.0;
    for (const StateLabel label : kCanonicalLabels) {
      const JonesVector psi = pure_from_label(label);
      const DensityMatrix rho = density_from_pure(psi);
      const SplitOutput split = sagnac_split(rho, SagnacConfig{theta, {}});
      identity_action = std::max(
          identity_action, std::abs(1.0 - state_fidelity(rho, split.state_a)));
      identity_action = std::max(
          identity_action, std::abs(1.0 - state_fidelity(rho, split.state_b)));
      weight_law = std::max(weight_law,
                            std::abs(split.weight_a - (1.0 - p)));
      weight_law = std::max(weight_law, std::abs(split.weight_b - p));
      min_w = std::min(min_w, split.weight_a);
      max_w = std::max(max_w, split.weight_a);

      const JonesSplitOutput jones = sagnac_split_jones(psi, {theta, {}});
      const Vec2 va = jones.a.state.vec();
      const Vec2 vb = jones.b.state.vec();
      const Mat2 lifted = jones.a.weight * (va * va.adjoint()) +
                          jones.b.weight * (vb * vb.adjoint());
      const Mat2 direct = split.weight_a * split.state_a.matrix() +
                          split.weight_b * split.state_b.matrix();
      lift_agreement = std::max(lift_agreement, max_abs(lifted - direct));
    }
    weight_spread = std::max(weight_spread, max_w - min_w);
  }
  suite.check("optics.sagnac_identity_action", identity_action, 1e-12,
              "both arm states equal the input");
  suite.check("optics.sagnac_weights_match_splitting_law", weight_law, 1e-12,
              "weights are (1-sin^2 2t, sin^2 2t)");
  suite.check("optics.sagnac_weight_input_independent", weight_spread, 1e-12,
              "arm-A weight identical across the six canonical inputs");
  suite.check("optics.sagnac_density_matches_jones", lift_agreement, 1e-12,
              "density-matrix split equals the lifted amplitude split");

  double closed_form = 0.0;
  double physicality = 0.0;
  for (int i = 0; i < 100; ++i) {
    const DensityMatrix rho = random_density_matrix(rng);
    const double theta = rng.uniform() * std::numbers::pi / 4;
    const double p = splitting_parameter(theta);
    const DensityMatrix out = full_apparatus(rho, theta);
    closed_form = std::max(
        closed_form,
        max_abs(out.matrix() - closed_form_depolarize(rho, p).matrix()));

    const DensityMatrix fibered = fiber_depolarize(rho, {rng.uniform()});
    const DensityMatrix combined =
        incoherent_combine(rho, 0.25, fibered, 0.75);
    for (const Mat2& m : {fibered.matrix(), combined.matrix()}) {
      physicality = std::max(physicality, hermiticity_residual(m));
      physicality = std::max(
          physicality, std::abs(m.trace().real() - 1.0));
      Eigen::SelfAdjointEigenSolver<Mat2> es(m);
      physicality =
          std::max(physicality, std::max(0.0, -es.eigenvalues().minCoeff()));
    }
  }
  suite.check("optics.full_apparatus_equals_closed_form", closed_form, 1e-12,
              "apparatus output == p I/2 + (1-p) rho");
  suite.check("optics.stage_maps_preserve_physicality", physicality, 1e-12,
              "fiber and combiner keep states Hermitian, unit-trace, PSD");
}

void channel_checks(SuiteBuilder& suite) {
  Rng rng(substream_seed(kSuiteSeed, 3));

  double kraus_vs_closed = 0.0;
  double contraction = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const DensityMatrix rho = random_density_matrix(rng);
    const double p = rng.uniform();
    const DensityMatrix via_kraus =
        apply_channel(depolarizing_channel({p}), rho);
    kraus_vs_closed =
        std::max(kraus_vs_closed, max_abs(via_kraus.matrix() -
                                          closed_form_depolarize(rho, p)
                                              .matrix()));
    const BlochVector rin = bloch_from_density(rho);
    const BlochVector rout = bloch_from_density(via_kraus);
    contraction = std::max(
        contraction,
        std::max({std::abs(rout.rx - (1.0 - p) * rin.rx),
                  std::abs(rout.ry - (1.0 - p) * rin.ry),
                  std::abs(rout.rz - (1.0 - p) * rin.rz)}));
  }
  suite.check("channels.kraus_matches_closed_form", kraus_vs_closed, 1e-12,
              "Kraus action == p I/2 + (1-p) rho over 1000 draws");
  suite.check("channels.bloch_contraction_isotropic", contraction, 1e-12,
              "output Bloch vector == (1-p) input, componentwise");

  double purity_spread = 0.0;
  for (const double p : {0.1, 0.3, 0.5, 0.9}) {
    double lo = 1.0;
    double hi = 0.0;
    for (const StateLabel label : kCanonicalLabels) {
      const double pur = purity(apply_channel(
          depolarizing_channel({p}),
          density_from_pure(pure_from_label(label))));
      lo = std::min(lo, pur);
      hi = std::max(hi, pur);
    }
    purity_spread = std::max(purity_spread, hi - lo);
  }
  suite.check("channels.purity_input_independent", purity_spread, 1e-12,
              "purity after the channel identical for all six inputs");

  double chi_structure = 0.0;
  double round_trip_action = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double p = rng.uniform();
    const QuantumChannel channel = depolarizing_channel({p});
    const ChiMatrix chi = chi_from_kraus(channel);
    chi_structure = std::max(
        chi_structure,
        (chi.matrix() - ideal_depolarizing_chi(p).matrix()).cwiseAbs()
            .maxCoeff());

    const QuantumChannel rebuilt = kraus_from_chi(chi);
    for (const StateLabel label : kCanonicalLabels) {
      const DensityMatrix rho = density_from_pure(pure_from_label(label));
      round_trip_action = std::max(
          round_trip_action, max_abs(apply_channel(rebuilt, rho).matrix() -
                                     apply_channel(channel, rho).matrix()));
    }
    for (int k = 0; k < 2; ++k) {
      const DensityMatrix rho = random_density_matrix(rng);
      round_trip_action = std::max(
          round_trip_action, max_abs(apply_channel(rebuilt, rho).matrix() -
                                     apply_channel(channel, rho).matrix()));
    }
  }
  suite.check("channels.chi_diagonal_for_depolarizing", chi_structure, 1e-12,
              "chi == diag(1-3p/4, p/4, p/4, p/4)");
  suite.check("channels.chi_kraus_round_trip_action", round_trip_action,
              1e-10, "kraus_from_chi(chi_from_kraus(E)) acts like E");
}

void tomography_checks(SuiteBuilder& suite) {
  Rng rng(substream_seed(kSuiteSeed, 4));

  double qst_round_trip = 0.0;
  double projection_noop = 0.0;
  for (int i = 0; i < 100; ++i) {
    const DensityMatrix rho = random_density_matrix(rng);
    std::array<FrequencyRecord, 3> records;
    for (std::size_t b = 0; b < 3; ++b) {
      records[b] = exact_record(rho, kAllBases[b]);
    }
    const StateTomographyResult result =
        qst_linear(std::span<const FrequencyRecord>(records));
    qst_round_trip = std::max(
        qst_round_trip, max_abs(result.estimate.matrix() - rho.matrix()));
    projection_noop = std::max(
        projection_noop,
        max_abs(psd_project(rho.matrix()).matrix() - rho.matrix()));
    projection_noop = std::max(
        projection_noop,
        max_abs(psd_project(psd_project(rho.matrix()).matrix()).matrix() -
                psd_project(rho.matrix()).matrix()));
  }
  suite.check("tomography.qst_noiseless_round_trip", qst_round_trip, 1e-10,
              "linear inversion of exact probabilities recovers rho");
  suite.check("tomography.psd_project_idempotent", projection_noop, 1e-12,
              "projection is a no-op on physical states, idempotent");

  double qpt_round_trip = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double p = rng.uniform();
    const QuantumChannel channel = depolarizing_channel({p});
    std::vector<DensityMatrix> outputs;
    for (const StateLabel label : kDefaultProbeSet) {
      outputs.push_back(
          apply_channel(channel, density_from_pure(pure_from_label(label))));
    }
    const ProcessTomographyResult result = qpt(kDefaultProbeSet, outputs);
    qpt_round_trip = std::max(
        qpt_round_trip,
        (result.estimate.matrix() - ideal_depolarizing_chi(p).matrix())
            .cwiseAbs()
            .maxCoeff());
  }
  suite.check("tomography.qpt_noiseless_round_trip", qpt_round_trip, 1e-10,
              "QPT of exact outputs recovers the depolarizing chi");
}

}  // namespace

std::vector<InvariantCheck> run_invariant_suite(
    const InvariantSuiteOptions& options) {
  SuiteBuilder suite;

  std::function<Mat2(double)> hwp_fn = [](double theta) { return hwp(theta); };
  if (options.inject_hwp_sign_error) {
    hwp_fn = [](double theta) {
      Mat2 broken = hwp(theta);
      broken(0, 1) = -broken(0, 1);
      broken(1, 0) = -broken(1, 0);
      return broken;
    };
  }

  qstate_checks(suite);
  optics_checks(suite, hwp_fn);
  channel_checks(suite);
  tomography_checks(suite);
  return suite.take();
}

bool all_passed(const std::vector<InvariantCheck>& checks) {
  for (const InvariantCheck& check : checks) {
    if (!check.passed) {
      return false;
    }
  }
  return true;
}

}  // namespace depolsim
