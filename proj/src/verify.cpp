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

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "parallel.hpp"
#include "qchan/bounds.hpp"
#include "qchan/commands.hpp"
#include "qchan/entropy.hpp"
#include "qchan/errors.hpp"
#include "qchan/report_io.hpp"
#include "qchan/rng.hpp"
#include "qchan/separability.hpp"
#include "qchan/tolerances.hpp"
#include "qchan/zoo.hpp"

namespace qchan {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Observation {
  std::string name;
  double slack = 0.0;
  bool ok = true;
  std::string detail;
};

using Observations = std::vector<Observation>;

struct Tally {
  std::size_t pass = 0;
  std::size_t total = 0;
  double worst = std::numeric_limits<double>::infinity();
  std::string first_failure;
};

/// Records a quantity that must not exceed `limit`: slack = limit - deviation.
void expect_small(Observations& obs, std::string name, double deviation, double limit, std::string detail = {}) {
  const double slack = limit - deviation;
  obs.push_back({std::move(name), slack, slack >= 0.0, std::move(detail)});
}

void add_records(Observations& obs, const std::string& prefix, const std::vector<BoundRecord>& recs,
                 const std::string& detail) {
  for (const auto& r : recs) {
    std::string d = detail + " lhs=" + format_number(r.lhs) + " rhs=" + format_number(r.rhs);
    if (!r.error.empty()) d += " error=" + r.error;
    obs.push_back({prefix + r.id, r.slack, r.satisfied, std::move(d)});
  }
}

/// Runs `body`; any library error becomes a failed observation.
template <typename F>
void guarded(Observations& obs, const std::string& name, const std::string& detail, F body) {
  try {
    body();
  } catch (const Error& e) {
    obs.push_back({name, kNaN, false, detail + " error=" + e.what()});
  }
}

std::string q_text(RenyiOrder q) { return q.is_infinite() ? "inf" : format_number(q.value()); }

const std::vector<RenyiOrder>& bound_orders() {
  static const std::vector<RenyiOrder> qs = {1.0, 1.5, 2.0, 3.0, RenyiOrder::infinity()};
  return qs;
}

Channel bounds_sample(std::size_t index, RngStream& rng) {
  switch (index % 4) {
    case 0:
      return random_cptp(2, 1 + rng.index(4), rng);
    case 1:
      return random_cptp(3, 1 + rng.index(9), rng);
    case 2:
      return random_bistochastic(2, 1 + rng.index(4), rng);
    default:
      return random_bistochastic(3, 1 + rng.index(4), rng);
  }
}

Observations bounds_suite(std::size_t index, RngStream rng) {
  Observations obs;
  const std::string where = "index=" + std::to_string(index);
  guarded(obs, "bounds/sample", where, [&] {
    const Channel ch = bounds_sample(index, rng);
    const std::string base = where + " channel=" + ch.label();
    for (const RenyiOrder q : bound_orders()) {
      add_records(obs, "bounds/", evaluate_all(ch, q).records, base + " q=" + q_text(q));
    }
    const double s1 = sigma1(ch);
    if (ch.flags().unital) expect_small(obs, "bounds/unital_sigma1_is_one", std::abs(s1 - 1.0), 1e-9, base);
    if (index % 8 == 0) {
      const double oracle = sigma1_oracle(ch, 200, rng.engine()());
      expect_small(obs, "bounds/sigma1_oracle_below", oracle - s1, 1e-9, base);
    }
    const KrausSet canonical = choi_to_kraus(ch);
    const std::size_t r = canonical.operators.size();
    const ComplexMatrix v = haar_isometry(r + rng.index(3), r, rng);
    const KrausSet remixed = remix_kraus(canonical, v);
    for (const RenyiOrder q : {RenyiOrder(1.0), RenyiOrder(2.0)}) {
      const double s_map = map_entropy(ch, q);
      obs.push_back({"bounds/povm_above_map", povm_entropy(remixed, q) - s_map + 1e-9,
                     povm_entropy(remixed, q) >= s_map - 1e-9, base + " q=" + q_text(q)});
      expect_small(obs, "bounds/povm_canonical_equals_map", std::abs(povm_entropy(canonical, q) - s_map), 1e-9,
                   base + " q=" + q_text(q));
    }
  });
  return obs;
}

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, RngStream& rng) {
  ComplexMatrix g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 0; i < g.size(); ++i) g.data()[i] = rng.complex_normal();
  return g;
}

Observations lemmas_suite(std::size_t index, RngStream rng) {
  Observations obs;
  const std::size_t s = 4 + index % 6;
  const std::string where = "index=" + std::to_string(index) + " size=" + std::to_string(s);
  guarded(obs, "lemmas/sample", where, [&] {
    const ComplexMatrix x = ginibre(s, s, rng);
    std::vector<std::size_t> mapping(s * s);
    std::iota(mapping.begin(), mapping.end(), std::size_t{0});
    std::shuffle(mapping.begin(), mapping.end(), rng.engine());
    const PermutationMap perm(std::move(mapping));
    const Spectrum sv = singular_values(x);
    for (const RenyiOrder q : {RenyiOrder(1.5), RenyiOrder(2.0), RenyiOrder(4.0)}) {
      const std::string d = where + " q=" + q_text(q);
      add_records(obs, "lemmas/", {check_norm_interpolation(sv.values, q)}, d);
      add_records(obs, "lemmas/", check_spectral_envelope(x, q), d);
      add_records(obs, "lemmas/", check_reordering_envelope(x, perm, q), d);
    }
    const double hs = hs_norm(x);
    expect_small(obs, "lemmas/reorder_preserves_hs_norm", std::abs(hs_norm(reorder(x, perm)) - hs), 1e-12 * hs,
                 where);
  });
  return obs;
}

Observations separability_suite(std::size_t index, RngStream rng) {
  Observations obs;
  const std::string where = "index=" + std::to_string(index);
  guarded(obs, "separability/sample", where, [&] {
    const Channel ch = index % 2 == 0 ? random_cptp(2, 1 + rng.index(4), rng) : depolarizing(2, rng.uniform());
    const std::string base = where + " channel=" + ch.label();
    for (const RenyiOrder q : {RenyiOrder(1.5), RenyiOrder(2.0)}) {
      const SeparabilityVerdict v = classify_region(ch, q);
      const std::string d = base + " q=" + q_text(q);
      if (v.ppt_pass) {
        double worst = std::numeric_limits<double>::infinity();
        bool ok = true;
        for (const auto& c : v.criteria) {
          worst = std::min(worst, c.slack);
          ok = ok && c.satisfied;
        }
        obs.push_back({"separability/ppt_implies_criteria", worst, ok, d});
        expect_small(obs, "separability/ppt_implies_realignment", v.realignment_value, 1.0 + 1e-9, d);
      }
      const SeparabilityVerdict again = classify_region(ch, q);
      obs.push_back({"separability/deterministic", 0.0, again.region == v.region, d});
    }
  });
  return obs;
}

Observations zoo_suite(std::size_t index, std::size_t n, RngStream rng) {
  Observations obs;
  const std::string where = "index=" + std::to_string(index);
  guarded(obs, "zoo/sample", where, [&] {
    const Channel rinv = random_reshuffle_invariant(rng);
    expect_small(obs, "zoo/reshuffle_invariant_choi_equals_superop",
                 (rinv.choi() - rinv.superoperator()).norm(), 1e-10, where + " channel=" + rinv.label());
    expect_small(obs, "zoo/reshuffle_invariant_s2_equal",
                 std::abs(map_entropy(rinv, 2.0) - receiver_entropy(rinv, 2.0)), 1e-10, where);

    const Channel pauli = random_pauli_channel(rng);
    obs.push_back({"zoo/pauli_unital", 0.0, pauli.flags().unital, where + " channel=" + pauli.label()});

    const Channel interval = random_interval_channel(rng);
    add_records(obs, "zoo/", interval_check(interval), where + " channel=" + interval.label());

    const std::size_t dim = 2 + index % 3;
    const Channel bist = random_bistochastic(dim, 1 + rng.index(4), rng);
    const ComplexMatrix mm = ComplexMatrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim)) /
                             static_cast<double>(dim);
    expect_small(obs, "zoo/bistochastic_unital", (bist.output_of_maximally_mixed() - mm).norm(), tol::unital,
                 where);

    const ComplexMatrix u = haar_unitary(dim, rng);
    expect_small(obs, "zoo/haar_unitary",
                 (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).norm(), 1e-12, where);

    const ComplexMatrix rho = random_density(dim, rng);
    expect_small(obs, "zoo/random_density_trace", std::abs(rho.trace() - Complex(1.0, 0.0)), 1e-12, where);
    expect_small(obs, "zoo/random_density_psd", -hermitian_eigenvalues(rho).smallest(), 1e-12, where);

    const double alpha = n > 1 ? static_cast<double>(index) / static_cast<double>(n - 1) : 0.5;
    const CurvePoint p = curve_ab_point(alpha);
    const Channel dep = depolarizing(2, alpha);
    const std::string d = where + " alpha=" + format_number(alpha);
    expect_small(obs, "zoo/curve_ab_receiver", std::abs(p.s_rec - receiver_entropy(dep, 1.0)), 1e-10, d);
    expect_small(obs, "zoo/curve_ab_map", std::abs(p.s_map - map_entropy(dep, 1.0)), 1e-10, d);

    const std::size_t k = 2 + index % 2;
    std::array<ComplexMatrix, 4> xs;
    for (auto& xi : xs) xi = ginibre(k, k, rng);
    const ComplexMatrix y = ginibre(k * k, k * k, rng);
    const ComplexMatrix lhs = reshuffle(kron(xs[0], xs[1]) * y * kron(xs[2], xs[3]), k);
    const ComplexMatrix rhs =
        kron(xs[0], xs[2].transpose()) * reshuffle(y, k) * kron(xs[1].transpose(), xs[3]);
    expect_small(obs, "zoo/reshuffle_conjugation_identity", (lhs - rhs).norm(),
                 1e-12 * std::max(1.0, lhs.norm()), where);
  });
  return obs;
}

Observations injected_suite(const Channel& ch) {
  Observations obs;
  for (const RenyiOrder q : {RenyiOrder(1.0), RenyiOrder(2.0)}) {
    add_records(obs, "injected/", evaluate_all(ch, q).records, "channel=" + ch.label() + " q=" + q_text(q));
  }
  return obs;
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = {"all", "bounds", "lemmas", "separability", "zoo"};
  return names;
}

VerifyOutcome run_verify(const VerifyConfig& cfg) {
  const auto& names = verify_suites();
  if (std::find(names.begin(), names.end(), cfg.suite) == names.end()) {
    throw DomainError("unknown verify suite '" + cfg.suite + "' (all, bounds, lemmas, separability, zoo)");
  }
  if (cfg.n < 1) throw DomainError("verify needs n >= 1");
  const std::size_t threads = detail::resolve_threads(cfg.threads);

  std::map<std::string, Tally> tallies;
  auto absorb = [&](const std::string& suite, const std::vector<Observations>& per_index) {
    for (const auto& list : per_index) {
      for (const auto& o : list) {
        Tally& t = tallies[o.name];
        ++t.total;
        if (o.ok) ++t.pass;
        if (!std::isnan(o.slack)) t.worst = std::min(t.worst, o.slack);
        if (!o.ok && t.first_failure.empty()) {
          t.first_failure = "suite=" + suite + " seed=" + std::to_string(cfg.seed) + " " + o.detail;
        }
      }
    }
  };

  struct Suite {
    const char* name;
    std::uint64_t salt;
  };
  const Suite suites[] = {{"bounds", 1}, {"lemmas", 2}, {"separability", 3}, {"zoo", 4}};
  for (const Suite& s : suites) {
    if (cfg.suite != "all" && cfg.suite != s.name) continue;
    const std::uint64_t suite_seed = derive_seed(cfg.seed, s.salt);
    const std::string name = s.name;
    auto results = detail::parallel_map<Observations>(cfg.n, threads, [&](std::size_t i) {
      RngStream rng(derive_seed(suite_seed, i));
      if (name == "bounds") return bounds_suite(i, rng);
      if (name == "lemmas") return lemmas_suite(i, rng);
      if (name == "separability") return separability_suite(i, rng);
      return zoo_suite(i, cfg.n, rng);
    });
    absorb(name, results);
  }
  if (cfg.injected) absorb("injected", {injected_suite(*cfg.injected)});

  std::ostringstream os;
  os << "verify suite=" << cfg.suite << " n=" << cfg.n << " seed=" << cfg.seed << '\n';
  std::size_t failed = 0;
  std::size_t checks = 0;
  for (const auto& [name, t] : tallies) {
    checks += t.total;
    os << name << " pass=" << t.pass << '/' << t.total << " worst_slack=" << format_number(t.worst) << '\n';
  }
  for (const auto& [name, t] : tallies) {
    if (t.pass == t.total) continue;
    ++failed;
    os << "FAIL " << name << " reproducer: " << t.first_failure << '\n';
  }
  os << "result: " << (failed == 0 ? "PASS" : "FAIL") << " invariants=" << tallies.size() << " checks=" << checks
     << " failed_invariants=" << failed << '\n';
  return {os.str(), failed == 0};
}

}  // namespace qchan
