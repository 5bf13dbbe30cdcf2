// Copyright 2026 The qchan Authors
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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 when any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "qchan/bounds.hpp"
#include "qchan/commands.hpp"
#include "qchan/entropy.hpp"
#include "qchan/errors.hpp"
#include "qchan/rng.hpp"
#include "qchan/separability.hpp"
#include "qchan/zoo.hpp"

using namespace qchan;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

struct Worst {
  double value = std::numeric_limits<double>::infinity();
  void add(double v) { value = std::min(value, v); }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const std::vector<RenyiOrder>& tradeoff_orders() {
  static const std::vector<RenyiOrder> qs = {1.0, 1.5, 2.0, 3.0, RenyiOrder::infinity()};
  return qs;
}

// Shared ensemble: 10^4 random CP-TP qubit channels alternating environment
// dimension 2 and 4, then 10^4 random qubit bistochastic channels.
struct Ensemble {
  std::vector<Channel> cptp;
  std::vector<Channel> bistochastic;

  std::vector<const Channel*> all() const {
    std::vector<const Channel*> out;
    for (const auto& c : cptp) out.push_back(&c);
    for (const auto& c : bistochastic) out.push_back(&c);
    return out;
  }
};

Ensemble build_ensemble() {
  Ensemble e;
  RngStream rng(20260001);
  for (int i = 0; i < 10000; ++i) e.cptp.push_back(random_cptp(2, i % 2 ? 4 : 2, rng));
  for (int i = 0; i < 10000; ++i) e.bistochastic.push_back(random_bistochastic(2, 4, rng));
  return e;
}

ComplexMatrix ginibre(Eigen::Index r, Eigen::Index c, RngStream& rng) {
  ComplexMatrix g(r, c);
  for (Eigen::Index i = 0; i < g.size(); ++i) g.data()[i] = rng.complex_normal();
  return g;
}

Outcome criterion_1() {
  Outcome o;
  double worst = 0.0;
  for (std::size_t n : {2u, 3u, 4u}) {
    const double two_ln_n = 2 * std::log(static_cast<double>(n));
    const Channel id = identity_channel(n), star = completely_depolarizing(n);
    const double errs[] = {std::abs(map_entropy(id, 1.0)), std::abs(receiver_entropy(id, 1.0) - two_ln_n),
                           std::abs(map_entropy(star, 1.0) - two_ln_n), std::abs(receiver_entropy(star, 1.0))};
    for (double e : errs) {
      worst = std::max(worst, e);
      o.require(e <= 1e-10, "N=" + std::to_string(n));
    }
  }
  o.detail << "max deviation " << worst;
  return o;
}

Outcome criterion_2(const Ensemble& e, double build_seconds) {
  Outcome o;
  const auto t0 = Clock::now();
  Worst interp, bist;
  for (const auto& ch : e.cptp)
    for (RenyiOrder q : tradeoff_orders()) interp.add(tradeoff_lower(ch, q).slack);
  for (const auto& ch : e.bistochastic)
    for (RenyiOrder q : tradeoff_orders()) {
      interp.add(tradeoff_lower(ch, q).slack);
      bist.add(tradeoff_bistochastic(ch, q).slack);
    }
  const double elapsed = seconds_since(t0) + build_seconds;
  o.require(interp.value >= -1e-8, "interpolated bound");
  o.require(bist.value >= -1e-8, "bistochastic bound");
  o.require(elapsed <= 30.0, "runtime");
  o.detail << "20000 channels x 5 orders, worst slack " << interp.value << ", bistochastic worst slack "
           << bist.value << ", " << elapsed << " s";
  return o;
}

Outcome criterion_3() {
  Outcome o;
  double worst = 0.0;
  for (const Channel& ch :
       {coarse_graining(2), identity_channel(2), completely_depolarizing(2), spontaneous_emission()}) {
    const double s = std::abs(tradeoff_lower(ch, 1.0).slack);
    worst = std::max(worst, s);
    o.require(s <= 1e-9, ch.label());
  }
  const BoundRecord third = sum_upper_q2(depolarizing(2, 1.0 / 3.0));
  const double dev = std::abs(third.lhs - 2 * std::log(3.0));
  o.require(dev <= 1e-9, "depolarizing 1/3 sum");
  o.require(std::abs(third.slack) <= 1e-9, "depolarizing 1/3 saturation");
  o.detail << "max |slack| at q=1 " << worst << ", order-2 sum deviation from 2 ln 3 " << dev;
  return o;
}

Outcome criterion_4(const Ensemble& e) {
  Outcome o;
  Worst output;
  double bist_dev = 0.0;
  for (const Channel* ch : e.all()) output.add(sigma1_output_bound(*ch).slack);
  for (const auto& ch : e.bistochastic) bist_dev = std::max(bist_dev, std::abs(sigma1(ch) - 1.0));
  const double se_dev = std::abs(sigma1(spontaneous_emission()) - std::sqrt(2.0));
  o.require(output.value >= -1e-8, "sigma1 output bound");
  o.require(bist_dev <= 1e-9, "bistochastic sigma1");
  o.require(se_dev <= 1e-10, "decay sigma1");

  const int oracle_channels = 200;
  int close = 0;
  double worst_excess = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < oracle_channels; ++i) {
    const Channel& ch = e.cptp[static_cast<std::size_t>(i)];
    const double s = sigma1(ch);
    const double est = sigma1_oracle(ch, 2000, derive_seed(404, static_cast<std::uint64_t>(i)));
    worst_excess = std::max(worst_excess, est - s);
    o.require(est <= s + 1e-9, "oracle above sigma1");
    if (est >= s - 5e-2) ++close;
  }
  const double frac = static_cast<double>(close) / oracle_channels;
  o.require(frac >= 0.95, "oracle coverage");
  o.detail << "worst output slack " << output.value << ", bistochastic |sigma1-1| " << bist_dev << ", decay dev "
           << se_dev << ", oracle within 5e-2 on " << frac * 100 << "% of " << oracle_channels
           << ", max oracle excess " << worst_excess;
  return o;
}

Outcome criterion_5(const Ensemble& e) {
  Outcome o;
  double worst = 0.0;
  for (const Channel* ch : e.all()) worst = std::max(worst, std::abs(s2_identity(*ch).slack));
  o.require(worst <= 1e-10, "order-2 identity");
  o.detail << "max deviation " << worst;
  return o;
}

Outcome criterion_6(const Ensemble& e) {
  Outcome o;
  Worst w;
  for (const Channel* ch : e.all())
    for (double q : {1.0, 2.0, 3.0}) w.add(receiver_upper(*ch, q).slack);
  const double id_slack = receiver_upper(identity_channel(2), 1.0).slack;
  o.require(w.value >= -1e-8, "receiver upper bound");
  o.require(std::abs(id_slack) <= 1e-9, "identity attains");
  o.detail << "worst slack " << w.value << ", identity slack " << id_slack;
  return o;
}

Outcome criterion_7() {
  Outcome o;
  RngStream rng(20260007);
  Worst above, major;
  double canonical_dev = 0.0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 2);
    const Channel ch = random_cptp(n, 1 + rng.index(n * n), rng);
    const KrausSet canonical = choi_to_kraus(ch);
    for (double q : {1.0, 2.0})
      canonical_dev = std::max(canonical_dev, std::abs(povm_entropy(canonical, q) - map_entropy(ch, q)));
    const auto& lambda = ch.choi_eigenvalues().values;
    const std::size_t r = canonical.operators.size();
    for (int m = 0; m < 5; ++m) {
      const std::size_t k = r + rng.index(3);
      const KrausSet mixed = remix_kraus(canonical, haar_isometry(k, r, rng));
      for (double q : {1.0, 2.0}) above.add(povm_entropy(mixed, q) - map_entropy(ch, q));
      std::vector<double> kappa = kraus_weights(mixed);
      std::sort(kappa.rbegin(), kappa.rend());
      double sk = 0.0, sl = 0.0;
      for (std::size_t j = 0; j < kappa.size(); ++j) {
        sk += kappa[j];
        sl += j < lambda.size() ? lambda[j] : 0.0;
        major.add(sl - sk);
      }
    }
  }
  o.require(above.value >= -1e-9, "remixed entropy below map entropy");
  o.require(canonical_dev <= 1e-9, "canonical equality");
  o.require(major.value >= -1e-10, "majorization");
  o.detail << "worst remix excess " << above.value << ", canonical dev " << canonical_dev
           << ", worst partial-sum slack " << major.value;
  return o;
}

Outcome criterion_8() {
  Outcome o;
  RngStream rng(20260008);
  Worst w;
  double hs_dev = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto s = static_cast<Eigen::Index>(4 + rng.index(6));
    const ComplexMatrix x = ginibre(s, s, rng);
    std::vector<std::size_t> map(static_cast<std::size_t>(s * s));
    std::iota(map.begin(), map.end(), std::size_t{0});
    std::shuffle(map.begin(), map.end(), rng.engine());
    const PermutationMap perm(std::move(map));
    hs_dev = std::max(hs_dev, std::abs(hs_norm(reorder(x, perm)) - hs_norm(x)));
    const std::vector<double> sv = singular_values(x).values;
    for (double q : {1.5, 2.0, 4.0}) {
      for (const auto& r : check_spectral_envelope(x, q)) w.add(r.slack);
      for (const auto& r : check_reordering_envelope(x, perm, q)) w.add(r.slack);
      w.add(check_norm_interpolation(sv, q).slack);
    }
  }
  o.require(w.value >= -1e-10, "matrix inequalities");
  o.require(hs_dev <= 1e-12, "norm invariance");
  o.detail << "1000 matrices x 3 orders, worst slack " << w.value << ", max norm change " << hs_dev;
  return o;
}

Outcome criterion_9() {
  Outcome o;
  RngStream rng(20260009);
  Worst w;
  for (int i = 0; i < 100; ++i)
    for (const auto& r : interval_check(random_interval_channel(rng))) w.add(r.slack);
  o.require(w.value >= -1e-9, "interval inequalities");
  o.detail << "worst slack " << w.value;
  return o;
}

Outcome criterion_10() {
  Outcome o;
  RngStream rng(20260010);
  int ppt = 0, counterexamples = 0;
  for (int i = 0; i < 10000; ++i) {
    const Channel ch = random_cptp(2, 1 + rng.index(4), rng);
    if (!ppt_test(ch).ppt) continue;
    ++ppt;
    for (double q : {1.5, 2.0})
      for (const auto& r : separable_criteria(ch, q))
        if (!r.satisfied) ++counterexamples;
  }
  o.require(counterexamples == 0, "PPT channel violates a criterion");
  double slack = 0.0;
  for (const auto& r : separable_criteria(identity_channel(2), 2.0))
    if (r.id == "separable.receiver_cap") slack = r.slack;
  const double dev = std::abs(slack + std::log(4.0 / 3.0));
  o.require(dev <= 1e-9, "identity violation size");
  o.detail << ppt << " PPT channels of 10000, " << counterexamples << " counterexamples, identity violation "
           << -slack << " (ln 4/3 dev " << dev << ")";
  return o;
}

Outcome criterion_11() {
  Outcome o;
  RngStream rng(20260011);
  int accepted = 0, rejected = 0;
  double d_dev = 0.0, s_dev = 0.0;
  while (accepted < 100) {
    try {
      const Channel ch = random_reshuffle_invariant(rng);
      ++accepted;
      d_dev = std::max(d_dev, (ch.choi() - ch.superoperator()).norm());
      s_dev = std::max(s_dev, std::abs(map_entropy(ch, 2.0) - receiver_entropy(ch, 2.0)));
    } catch (const ValidationError&) {
      ++rejected;
    }
  }
  double conj_dev = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Eigen::Index n = 2 + i % 2;
    const auto un = static_cast<std::size_t>(n);
    const ComplexMatrix x1 = ginibre(n, n, rng), x2 = ginibre(n, n, rng);
    const ComplexMatrix x3 = ginibre(n, n, rng), x4 = ginibre(n, n, rng);
    const ComplexMatrix y = ginibre(n * n, n * n, rng);
    const ComplexMatrix lhs = reshuffle(kron(x1, x2) * y * kron(x3, x4), un);
    const ComplexMatrix rhs = kron(x1, x3.transpose()) * reshuffle(y, un) * kron(x2.transpose(), x4);
    conj_dev = std::max(conj_dev, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  o.require(d_dev <= 1e-10, "dynamical matrix equals superoperator");
  o.require(s_dev <= 1e-10, "order-2 entropies equal");
  o.require(conj_dev <= 1e-12, "conjugation identity");
  o.detail << "100 valid draws (" << rejected << " rejected by CP validation), max |D-Phi| " << d_dev
           << ", max |S2 diff| " << s_dev << ", conjugation identity max dev " << conj_dev;
  return o;
}

Outcome criterion_12(const Ensemble& e) {
  Outcome o;
  Worst w;
  for (const Channel* ch : e.all())
    for (double q : {1.0, 2.0})
      for (const auto& r : output_entropy_sandwich(*ch, q)) w.add(r.slack);
  RngStream rng(20260012);
  double sat_dev = 0.0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 3);
    const Channel ch = complete_contraction(random_pure_state(n, rng));
    sat_dev = std::max(sat_dev, std::abs(map_entropy(ch, 1.0) - std::log(static_cast<double>(n))));
    for (const auto& r : output_entropy_sandwich(ch, 1.0))
      if (r.id == "output_sandwich.upper") sat_dev = std::max(sat_dev, std::abs(r.slack));
  }
  o.require(w.value >= -1e-8, "sandwich");
  o.require(sat_dev <= 1e-9, "pure contraction saturation");
  o.detail << "worst slack " << w.value << ", pure contraction max dev " << sat_dev;
  return o;
}

Outcome criterion_13() {
  Outcome o;
  double map_dev = 0.0, rec_dev = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double a = i / 100.0;
    const CurvePoint p = curve_ab_point(a);
    const Channel ch = depolarizing(2, a);
    map_dev = std::max(map_dev, std::abs(p.s_map - map_entropy(ch, 1.0)));
    rec_dev = std::max(rec_dev, std::abs(p.s_rec - receiver_entropy(ch, 1.0)));
  }
  o.require(map_dev <= 1e-10, "map entropy");
  o.require(rec_dev <= 1e-10, "receiver entropy");
  // Unnormalized variant -(3/4)(1-a) ln((1-a)/4) - (1+3a) ln(1+3a), logged only.
  auto variant = [](double a) {
    return -0.75 * (1 - a) * std::log((1 - a) / 4) - (1 + 3 * a) * std::log(1 + 3 * a);
  };
  o.detail << "101 points, max map dev " << map_dev << ", max receiver dev " << rec_dev
           << "; unnormalized map-entropy variant differs: at a=0 gives " << variant(0.0) << " vs "
           << curve_ab_point(0.0).s_map << ", at a=0.5 gives " << variant(0.5) << " vs "
           << curve_ab_point(0.5).s_map << " (not used)";
  return o;
}

Outcome criterion_14() {
  Outcome o;
  ScanConfig cfg;
  cfg.n_samples = 500;
  cfg.seed = 20260014;
  cfg.threads = 1;
  const std::string a = run_scan(cfg);
  const std::string b = run_scan(cfg);
  cfg.threads = 8;
  const std::string c = run_scan(cfg);
  const std::string d = run_scan(cfg);
  o.require(a == b, "repeat at 1 thread");
  o.require(c == d, "repeat at 8 threads");
  o.require(a == c, "1 vs 8 threads");
  o.detail << "500-row CSV, " << a.size() << " bytes, identical across 4 runs";
  return o;
}

}  // namespace

int main() {
  const auto t_start = Clock::now();
  const auto t_build = Clock::now();
  const Ensemble ensemble = build_ensemble();
  const double build_seconds = seconds_since(t_build);

  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, [] { return criterion_1(); }},
      {2, [&] { return criterion_2(ensemble, build_seconds); }},
      {3, [] { return criterion_3(); }},
      {4, [&] { return criterion_4(ensemble); }},
      {5, [&] { return criterion_5(ensemble); }},
      {6, [&] { return criterion_6(ensemble); }},
      {7, [] { return criterion_7(); }},
      {8, [] { return criterion_8(); }},
      {9, [] { return criterion_9(); }},
      {10, [] { return criterion_10(); }},
      {11, [] { return criterion_11(); }},
      {12, [&] { return criterion_12(ensemble); }},
      {13, [] { return criterion_13(); }},
      {14, [] { return criterion_14(); }},
  };

  int failed = 0;
  for (const auto& [id, run] : criteria) {
    Outcome out;
    try {
      out = run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail << "exception: " << e.what();
    }
    if (!out.pass) ++failed;
    std::printf("criterion %d: %s %s\n", id, out.pass ? "PASS" : "FAIL", out.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("acceptance: %d/%zu criteria passed in %.1f s\n", static_cast<int>(criteria.size()) - failed,
              criteria.size(), seconds_since(t_start));
  return failed == 0 ? 0 : 1;
}
