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

#include "qchan/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <utility>

#include "qchan/entropy.hpp"
#include "qchan/errors.hpp"
#include "qchan/rng.hpp"
#include "qchan/tolerances.hpp"
#include "qchan/zoo.hpp"

namespace qchan {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_shannon(RenyiOrder q) {
  return !q.is_infinite() && std::abs(q.value() - 1.0) < tol::shannon_window;
}

void require_at_least_one(RenyiOrder q, const char* what) {
  if (!q.is_infinite() && !(q.value() >= 1.0 - tol::shannon_window)) {
    throw DomainError(std::string(what) + " requires q >= 1, got " + q.to_string());
  }
}

/// q/(q-1); infinite at q = 1, one at q = inf.
double q_ratio(RenyiOrder q) {
  if (q.is_infinite()) return 1.0;
  if (is_shannon(q)) return kInf;
  return q.value() / (q.value() - 1.0);
}

double log_dim(const Channel& ch) { return std::log(static_cast<double>(ch.dim())); }

}  // namespace

const char* relation_symbol(Relation r) {
  switch (r) {
    case Relation::le:
      return "<=";
    case Relation::ge:
      return ">=";
    case Relation::eq:
      return "==";
  }
  return "?";
}

BoundRecord make_record(std::string id, double lhs, Relation relation, double rhs,
                        std::string citation) {
  BoundRecord r;
  r.id = std::move(id);
  r.lhs = lhs;
  r.rhs = rhs;
  r.relation = relation;
  switch (relation) {
    case Relation::le:
      r.slack = rhs - lhs;
      break;
    case Relation::ge:
      r.slack = lhs - rhs;
      break;
    case Relation::eq:
      r.slack = -std::abs(lhs - rhs);
      break;
  }
  r.satisfied = r.slack >= -tol::check;
  r.citation = std::move(citation);
  return r;
}

double f_min(RenyiOrder q) {
  if (q.is_infinite()) return 1.0;
  if (is_shannon(q)) return 2.0;
  return std::min(q.value() / (q.value() - 1.0), 2.0);
}

double f_max(RenyiOrder q) {
  if (q.is_infinite()) return 2.0;
  if (is_shannon(q)) return kInf;
  return std::max(q.value() / (q.value() - 1.0), 2.0);
}

double g_min(RenyiOrder q) {
  if (q.is_infinite()) return 0.5;
  if (is_shannon(q)) return 0.0;
  const double v = q.value();
  return std::min(v / (2.0 * (v - 1.0)), 2.0 * (v - 1.0) / v);
}

bool BoundReport::all_satisfied() const {
  return std::all_of(records.begin(), records.end(),
                     [](const BoundRecord& r) { return r.satisfied; });
}

const BoundRecord* BoundReport::find(const std::string& id) const {
  for (const auto& r : records)
    if (r.id == id) return &r;
  return nullptr;
}

double sigma1(const Channel& ch) { return ch.superoperator_singular_values().largest(); }

double sigma1_oracle(const Channel& ch, std::size_t budget, std::uint64_t seed) {
  if (budget < 1) throw DomainError("sigma1_oracle: budget must be at least 1");
  const std::size_t n = ch.dim();
  const ComplexMatrix& superop = ch.superoperator();
  auto ratio = [&](const ComplexMatrix& rho) {
    const ComplexVector out = superop * vec_rows(rho);
    return std::sqrt(out.squaredNorm() / rho.squaredNorm());
  };
  RngStream rng(seed);
  ComplexMatrix best = random_density(n, rng);
  double best_value = ratio(best);
  for (std::size_t i = 1; i < budget; ++i) {
    ComplexMatrix rho = random_density(n, rng);
    const double v = ratio(rho);
    if (v > best_value) {
      best_value = v;
      best = std::move(rho);
    }
  }
  constexpr int kRefinementSteps = 200;
  for (int s = 0; s < kRefinementSteps; ++s) {
    const double step = 0.5 * std::pow(0.98, s);
    const ComplexMatrix perturbation = (s % 2 == 0) ? random_density(n, rng) : random_pure_state(n, rng);
    const ComplexMatrix candidate = (1.0 - step) * best + step * perturbation;
    const double v = ratio(candidate);
    if (v > best_value) {
      best_value = v;
      best = candidate;
    }
  }
  return best_value;
}

BoundRecord check_norm_interpolation(std::span<const double> x, RenyiOrder q) {
  require_at_least_one(q, "norm interpolation");
  const double lhs = vector_q_norm(x, q);
  const double l1 = vector_q_norm(x, RenyiOrder(1.0));
  const double linf = vector_q_norm(x, RenyiOrder::infinity());
  double rhs = linf;
  if (!q.is_infinite()) rhs = std::pow(l1, 1.0 / q.value()) * std::pow(linf, (q.value() - 1.0) / q.value());
  return make_record("norm_interpolation", lhs, Relation::le, rhs,
                     "||x||_q <= ||x||_1^(1/q) ||x||_inf^((q-1)/q)");
}

std::vector<BoundRecord> check_spectral_envelope(const ComplexMatrix& x, RenyiOrder q) {
  require_at_least_one(q, "spectral envelope");
  const Spectrum sv = singular_values(x);
  const double lambda = sv.total;
  const double x1 = sv.largest();
  if (!(x1 > 0.0)) throw DomainError("spectral envelope: matrix is zero");
  const double s = renyi(ProbabilityVector::from_spectrum(sv.values), q);
  const double base = std::log(lambda / x1);
  std::vector<BoundRecord> out;
  out.push_back(make_record("envelope.lower", base, Relation::le, s, "ln(Lambda_x/x1) <= S_q(X)"));
  if (!is_shannon(q)) {
    out.push_back(make_record("envelope.upper", s, Relation::le, q_ratio(q) * base,
                              "S_q(X) <= q/(q-1) ln(Lambda_x/x1)"));
  }
  return out;
}

std::vector<BoundRecord> check_reordering_envelope(const ComplexMatrix& x, const PermutationMap& perm,
                                                   RenyiOrder q) {
  require_at_least_one(q, "reordering envelope");
  const ComplexMatrix y = reorder(x, perm);
  const Spectrum sx = singular_values(x);
  const Spectrum sy = singular_values(y);
  if (!(sx.largest() > 0.0)) throw DomainError("reordering envelope: matrix is zero");
  const double s = renyi(ProbabilityVector::from_spectrum(sy.values), q);
  std::vector<BoundRecord> out;
  out.push_back(make_record("reordering.lower",
                            f_min(q) * std::log(sy.total / std::sqrt(sx.largest() * sx.total)),
                            Relation::le, s, "F_min ln(Lambda_y/sqrt(x1 Lambda_x)) <= S_q(Y)"));
  if (!is_shannon(q)) {
    out.push_back(make_record("reordering.upper", s, Relation::le,
                              f_max(q) * std::log(sy.total / sx.largest()),
                              "S_q(Y) <= F_max ln(Lambda_y/x1)"));
  }
  return out;
}

std::vector<BoundRecord> individual_bounds(const Channel& ch, RenyiOrder q) {
  require_at_least_one(q, "individual bounds");
  const double n = static_cast<double>(ch.dim());
  const double s1 = sigma1(ch);
  const double lambda = ch.superoperator_singular_values().total;
  const double d1 = ch.choi_eigenvalues().largest();
  const double s_rec = receiver_entropy(ch, q);
  const double s_map = map_entropy(ch, q);
  const double fmin = f_min(q);
  const bool with_upper = !is_shannon(q);
  const double ratio = q_ratio(q);

  std::vector<BoundRecord> out;
  out.push_back(make_record("rec_sigma.lower", std::log(lambda / s1), Relation::le, s_rec,
                            "ln(Lambda/sigma1) <= S_q^rec"));
  if (with_upper) {
    out.push_back(make_record("rec_sigma.upper", s_rec, Relation::le, ratio * std::log(lambda / s1),
                              "S_q^rec <= q/(q-1) ln(Lambda/sigma1)"));
  }
  out.push_back(make_record("map_d1.lower", std::log(n / d1), Relation::le, s_map,
                            "ln(N/d1) <= S_q^map"));
  if (with_upper) {
    out.push_back(make_record("map_d1.upper", s_map, Relation::le, ratio * std::log(n / d1),
                              "S_q^map <= q/(q-1) ln(N/d1)"));
  }
  out.push_back(make_record("rec_reshuffle.lower", fmin * std::log(lambda / std::sqrt(n * d1)),
                            Relation::le, s_rec, "F_min ln(Lambda/sqrt(N d1)) <= S_q^rec"));
  if (with_upper) {
    out.push_back(make_record("rec_reshuffle.upper", s_rec, Relation::le,
                              f_max(q) * std::log(lambda / d1), "S_q^rec <= F_max ln(Lambda/d1)"));
  }
  out.push_back(make_record("map_reshuffle.lower", fmin * std::log(n / std::sqrt(s1 * lambda)),
                            Relation::le, s_map, "F_min ln(N/sqrt(sigma1 Lambda)) <= S_q^map"));
  if (with_upper) {
    out.push_back(make_record("map_reshuffle.upper", s_map, Relation::le,
                              f_max(q) * std::log(n / s1), "S_q^map <= F_max ln(N/sigma1)"));
  }
  return out;
}

BoundRecord sigma1_output_bound(const Channel& ch) {
  const double tau1 = output_of_maximally_mixed(ch).tau1;
  return make_record("sigma1_output", sigma1(ch), Relation::le,
                     std::sqrt(static_cast<double>(ch.dim()) * tau1), "sigma1 <= sqrt(N tau1)");
}

BoundRecord tradeoff_lower(const Channel& ch, RenyiOrder q) {
  require_at_least_one(q, "trade-off bound");
  const double tau1 = output_of_maximally_mixed(ch).tau1;
  const double sum = map_entropy(ch, q) + receiver_entropy(ch, q);
  return make_record("tradeoff.interpolated", sum, Relation::ge,
                     0.5 * f_min(q) * std::log(static_cast<double>(ch.dim()) / tau1),
                     "S_q^map + S_q^rec >= (F_min/2) ln(N/tau1)");
}

BoundRecord tradeoff_general(const Channel& ch, RenyiOrder q) {
  require_at_least_one(q, "trade-off bound");
  const double sum = map_entropy(ch, q) + receiver_entropy(ch, q);
  return make_record("tradeoff.general", sum, Relation::ge, 0.5 * f_min(q) * log_dim(ch),
                     "S_q^map + S_q^rec >= (F_min/2) ln N");
}

BoundRecord tradeoff_bistochastic(const Channel& ch, RenyiOrder q) {
  require_at_least_one(q, "trade-off bound");
  const double sum = map_entropy(ch, q) + receiver_entropy(ch, q);
  return make_record("tradeoff.bistochastic", sum, Relation::ge, f_min(q) * log_dim(ch),
                     "S_q^map + S_q^rec >= F_min ln N (unital)");
}

double receiver_upper_value(double lambda, std::size_t n, RenyiOrder q) {
  if (!q.is_infinite() && !(q.value() >= 0.0)) {
    throw DomainError("receiver upper bound requires q >= 0, got " + q.to_string());
  }
  if (lambda < 1.0 - 1e-9) {
    std::ostringstream os;
    os << "receiver upper bound: trace norm " << lambda << " < 1 contradicts sigma1 >= 1";
    throw NumericalError(os.str());
  }
  lambda = std::max(lambda, 1.0);
  const double rest = static_cast<double>(n * n) - 1.0;
  const double excess = lambda - 1.0;
  if (rest <= 0.0) return 0.0;
  if (q.is_infinite()) {
    return std::log(lambda) - std::log(std::max(1.0, excess / rest));
  }
  if (is_shannon(q)) {
    if (excess <= 0.0) return std::log(lambda);
    return excess / lambda * std::log(rest / excess) + std::log(lambda);
  }
  const double order = q.value();
  double inner = std::pow(lambda, -order);
  if (excess > 0.0) {
    inner += std::pow(excess, order) / (std::pow(lambda, order) * std::pow(rest, order - 1.0));
  }
  return std::log(inner) / (1.0 - order);
}

BoundRecord receiver_upper(const Channel& ch, RenyiOrder q) {
  const double lambda = ch.superoperator_singular_values().total;
  return make_record("receiver_upper", receiver_entropy(ch, q), Relation::le,
                     receiver_upper_value(lambda, ch.dim(), q),
                     "S_q^rec <= S_q((1, (Lambda-1)/(N^2-1) x (N^2-1)) / Lambda)");
}

BoundRecord s2_identity(const Channel& ch) {
  const RenyiOrder two(2.0);
  const double lambda = ch.superoperator_singular_values().total;
  return make_record("s2_identity", map_entropy(ch, two), Relation::eq,
                     receiver_entropy(ch, two) + 2.0 * log_dim(ch) - 2.0 * std::log(lambda),
                     "S_2^map == S_2^rec + 2 ln N - 2 ln Lambda");
}

BoundRecord sum_upper_q2(const Channel& ch) {
  const RenyiOrder two(2.0);
  const double n = static_cast<double>(ch.dim());
  return make_record("sum_upper_q2", map_entropy(ch, two) + receiver_entropy(ch, two),
                     Relation::le, 2.0 * std::log(n * (n + 1.0) / 2.0),
                     "S_2^map + S_2^rec <= 2 ln(N(N+1)/2)");
}

BoundRecord map_lower_from_rec(const Channel& ch, RenyiOrder q) {
  require_at_least_one(q, "map lower bound");
  const double lambda = ch.superoperator_singular_values().total;
  const double n = static_cast<double>(ch.dim());
  const double rhs = f_min(q) * std::log(n / lambda) + g_min(q) * receiver_entropy(ch, q);
  return make_record("map_lower_from_rec", map_entropy(ch, q), Relation::ge, rhs,
                     "S_q^map >= F_min ln(N/Lambda) + G_min S_q^rec");
}

std::vector<BoundRecord> interval_check(const Channel& ch) {
  const RenyiOrder one(1.0);
  const double ln_n = log_dim(ch);
  return {make_record("interval.receiver", receiver_entropy(ch, one), Relation::le, ln_n,
                      "S^rec <= ln N"),
          make_record("interval.map", ln_n, Relation::le, map_entropy(ch, one), "ln N <= S^map")};
}

std::vector<BoundRecord> output_entropy_sandwich(const Channel& ch, RenyiOrder q) {
  const ComplexMatrix& out_state = ch.output_of_maximally_mixed();
  const double ln_n = log_dim(ch);
  const double s_map = map_entropy(ch, q);
  const double s_out = state_entropy(out_state, q);
  const Spectrum ev = hermitian_eigenvalues(out_state);
  const std::size_t rank = count_above(ev, tol::psd * out_state.norm());

  std::vector<BoundRecord> records;
  if (is_shannon(q)) {
    records.push_back(make_record("output_sandwich.lower", ln_n - s_out, Relation::le, s_map,
                                  "ln N - S(Phi(1/N)) <= S^map"));
  }
  records.push_back(make_record("output_sandwich.upper", s_map, Relation::le, ln_n + s_out,
                                "S_q^map <= ln N + S_q(Phi(1/N))"));
  records.push_back(make_record("output_rank.lower",
                                ln_n - std::log(static_cast<double>(std::max<std::size_t>(rank, 1))),
                                Relation::le, s_map, "ln N - ln rank Phi(1/N) <= S_q^map"));
  return records;
}

BoundReport evaluate_all(const Channel& ch, RenyiOrder q) {
  BoundReport report;
  report.channel_label = ch.label();
  report.q = q;

  using Check = std::function<std::vector<BoundRecord>()>;
  std::vector<std::pair<std::string, Check>> checks;
  const bool q_at_least_one = q.is_infinite() || q.value() >= 1.0 - tol::shannon_window;
  auto single = [](auto fn) { return [fn]() { return std::vector<BoundRecord>{fn()}; }; };

  if (q_at_least_one) {
    checks.emplace_back("individual", [&] { return individual_bounds(ch, q); });
    checks.emplace_back("tradeoff.interpolated", single([&] { return tradeoff_lower(ch, q); }));
    checks.emplace_back("tradeoff.general", single([&] { return tradeoff_general(ch, q); }));
    if (ch.flags().unital) {
      checks.emplace_back("tradeoff.bistochastic", single([&] { return tradeoff_bistochastic(ch, q); }));
    }
    checks.emplace_back("map_lower_from_rec", single([&] { return map_lower_from_rec(ch, q); }));
  }
  checks.emplace_back("sigma1_output", single([&] { return sigma1_output_bound(ch); }));
  checks.emplace_back("receiver_upper", single([&] { return receiver_upper(ch, q); }));
  checks.emplace_back("s2_identity", single([&] { return s2_identity(ch); }));
  checks.emplace_back("sum_upper_q2", single([&] { return sum_upper_q2(ch); }));
  checks.emplace_back("output_sandwich", [&] { return output_entropy_sandwich(ch, q); });
  if (ch.family() == "interval") {
    checks.emplace_back("interval", [&] { return interval_check(ch); });
  }

  for (auto& [id, check] : checks) {
    try {
      auto records = check();
      report.records.insert(report.records.end(), records.begin(), records.end());
    } catch (const std::exception& e) {
      BoundRecord failed;
      failed.id = id;
      failed.lhs = std::numeric_limits<double>::quiet_NaN();
      failed.rhs = failed.lhs;
      failed.slack = failed.lhs;
      failed.satisfied = false;
      failed.error = e.what();
      report.records.push_back(std::move(failed));
    }
  }
  std::sort(report.records.begin(), report.records.end(),
            [](const BoundRecord& a, const BoundRecord& b) { return a.id < b.id; });

  auto& agg = report.aggregates;
  agg.sigma1 = sigma1(ch);
  agg.lambda_phi = ch.superoperator_singular_values().total;
  agg.d1 = ch.choi_eigenvalues().largest();
  try {
    agg.tau1 = output_of_maximally_mixed(ch).tau1;
  } catch (const Error&) {
    agg.tau1 = std::numeric_limits<double>::quiet_NaN();
  }
  agg.f_min = f_min(q);
  agg.f_max = f_max(q);
  agg.g_min = g_min(q);
  return report;
}

}  // namespace qchan
