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

#include "qchan/qchan.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "qchan/bounds.hpp"
#include "qchan/channel_spec.hpp"
#include "qchan/commands.hpp"
#include "qchan/entropy.hpp"
#include "qchan/errors.hpp"
#include "qchan/report_io.hpp"
#include "qchan/separability.hpp"

struct qchan_channel {
  qchan::Channel channel;
};

namespace {

thread_local std::string g_last_error;

qchan_status fail(qchan_status status, const char* message) {
  g_last_error = message;
  return status;
}

class InvalidArgument : public std::exception {
 public:
  explicit InvalidArgument(std::string m) : message_(std::move(m)) {}
  const char* what() const noexcept override { return message_.c_str(); }

 private:
  std::string message_;
};

template <typename F>
qchan_status guard(F&& body) {
  try {
    body();
    g_last_error.clear();
    return QCHAN_OK;
  } catch (const InvalidArgument& e) {
    return fail(QCHAN_ERR_INVALID_ARGUMENT, e.what());
  } catch (const qchan::DimensionError& e) {
    return fail(QCHAN_ERR_DIMENSION, e.what());
  } catch (const qchan::ValidationError& e) {
    return fail(QCHAN_ERR_VALIDATION, e.what());
  } catch (const qchan::DomainError& e) {
    return fail(QCHAN_ERR_DOMAIN, e.what());
  } catch (const qchan::NumericalError& e) {
    return fail(QCHAN_ERR_NUMERICAL, e.what());
  } catch (const qchan::ParseError& e) {
    return fail(QCHAN_ERR_PARSE, e.what());
  } catch (const qchan::IoError& e) {
    return fail(QCHAN_ERR_IO, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(QCHAN_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(QCHAN_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(QCHAN_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(QCHAN_ERR_INTERNAL, "unknown error");
  }
}

void require(bool cond, const char* message) {
  if (!cond) throw InvalidArgument(message);
}

qchan::RenyiOrder order(double q) {
  if (std::isnan(q) || q < 0.0) throw qchan::DomainError("Renyi order must be a non-negative number");
  return qchan::RenyiOrder(q);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

qchan::ComplexMatrix read_matrix(const double* data, std::size_t rows, std::size_t cols) {
  qchan::ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const double* e = data + 2 * (r * cols + c);
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = {e[0], e[1]};
    }
  return m;
}

void write_matrix(const qchan::ComplexMatrix& m, double* out, std::size_t capacity) {
  const auto need = static_cast<std::size_t>(2 * m.size());
  require(out != nullptr, "output buffer is null");
  if (capacity < need) {
    throw InvalidArgument("output buffer holds " + std::to_string(capacity) + " doubles, need " +
                          std::to_string(need));
  }
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      double* e = out + 2 * (r * m.cols() + c);
      e[0] = m(r, c).real();
      e[1] = m(r, c).imag();
    }
}

qchan_status make_channel(qchan_channel** out, qchan::Channel ch) {
  *out = new qchan_channel{std::move(ch)};
  return QCHAN_OK;
}

qchan::ScanConfig to_config(const qchan_scan_config* c) {
  require(c != nullptr, "scan config is null");
  require(c->ensemble != nullptr, "scan ensemble is null");
  qchan::ScanConfig cfg;
  cfg.mode = c->mode == QCHAN_SCAN_OUTPUT_PLANE ? qchan::ScanMode::appendix_c_plane : qchan::ScanMode::entropy_plane;
  cfg.ensemble = c->ensemble;
  cfg.n_samples = c->n_samples;
  cfg.dim = c->dim;
  cfg.q = order(c->q);
  cfg.seed = c->seed;
  cfg.format = c->format == QCHAN_FORMAT_JSON ? qchan::OutputFormat::json : qchan::OutputFormat::csv;
  cfg.threads = c->threads;
  cfg.env_dim = c->env_dim;
  cfg.mixture_size = c->mixture_size;
  return cfg;
}

}  // namespace

extern "C" {

const char* qchan_version(void) { return "1.0.0"; }

const char* qchan_last_error(void) { return g_last_error.c_str(); }

const char* qchan_status_name(qchan_status status) {
  switch (status) {
    case QCHAN_OK:
      return "ok";
    case QCHAN_ERR_DIMENSION:
      return "dimension error";
    case QCHAN_ERR_VALIDATION:
      return "validation error";
    case QCHAN_ERR_DOMAIN:
      return "domain error";
    case QCHAN_ERR_NUMERICAL:
      return "numerical error";
    case QCHAN_ERR_PARSE:
      return "parse error";
    case QCHAN_ERR_IO:
      return "i/o error";
    case QCHAN_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case QCHAN_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void qchan_string_free(char* text) { std::free(text); }

qchan_status qchan_channel_from_spec_json(const char* json, qchan_channel** out) {
  return guard([&] {
    require(json != nullptr && out != nullptr, "null argument");
    make_channel(out, qchan::parse_channel_spec(json));
  });
}

qchan_status qchan_channel_from_spec_file(const char* path, qchan_channel** out) {
  return guard([&] {
    require(path != nullptr && out != nullptr, "null argument");
    make_channel(out, qchan::load_channel_spec(path));
  });
}

qchan_status qchan_channel_from_superoperator(size_t n, const double* superop, int permissive,
                                              qchan_channel** out) {
  return guard([&] {
    require(superop != nullptr && out != nullptr, "null argument");
    require(n >= 1, "dimension must be positive");
    const qchan::ComplexMatrix m = read_matrix(superop, n * n, n * n);
    make_channel(out, qchan::from_superoperator(
                          m, n, permissive ? qchan::Validation::permissive : qchan::Validation::strict));
  });
}

qchan_status qchan_channel_from_kraus(size_t n, size_t count, const double* ops, qchan_channel** out) {
  return guard([&] {
    require(ops != nullptr && out != nullptr, "null argument");
    require(n >= 1 && count >= 1, "dimension and operator count must be positive");
    qchan::KrausSet k;
    k.dim = n;
    for (std::size_t i = 0; i < count; ++i) k.operators.push_back(read_matrix(ops + 2 * n * n * i, n, n));
    make_channel(out, qchan::from_kraus(k));
  });
}

void qchan_channel_free(qchan_channel* ch) { delete ch; }

size_t qchan_channel_dim(const qchan_channel* ch) { return ch ? ch->channel.dim() : 0; }

qchan_status qchan_channel_label(const qchan_channel* ch, char** out) {
  return guard([&] {
    require(ch != nullptr && out != nullptr, "null argument");
    *out = copy_string(ch->channel.label());
  });
}

qchan_status qchan_channel_superoperator(const qchan_channel* ch, double* out, size_t capacity) {
  return guard([&] {
    require(ch != nullptr, "channel is null");
    write_matrix(ch->channel.superoperator(), out, capacity);
  });
}

qchan_status qchan_channel_choi(const qchan_channel* ch, double* out, size_t capacity) {
  return guard([&] {
    require(ch != nullptr, "channel is null");
    write_matrix(ch->channel.choi(), out, capacity);
  });
}

qchan_status qchan_map_entropy(const qchan_channel* ch, double q, double* out) {
  return guard([&] {
    require(ch != nullptr && out != nullptr, "null argument");
    *out = qchan::map_entropy(ch->channel, order(q));
  });
}

qchan_status qchan_receiver_entropy(const qchan_channel* ch, double q, double* out) {
  return guard([&] {
    require(ch != nullptr && out != nullptr, "null argument");
    *out = qchan::receiver_entropy(ch->channel, order(q));
  });
}

qchan_status qchan_output_entropy(const qchan_channel* ch, double q, double* out) {
  return guard([&] {
    require(ch != nullptr && out != nullptr, "null argument");
    *out = qchan::output_entropy(ch->channel, order(q));
  });
}

qchan_status qchan_channel_quantities(const qchan_channel* ch, qchan_quantities* out) {
  return guard([&] {
    require(ch != nullptr && out != nullptr, "null argument");
    const auto& sv = ch->channel.superoperator_singular_values();
    out->sigma1 = sv.largest();
    out->lambda_phi = sv.total;
    out->d1 = ch->channel.choi_eigenvalues().largest();
    out->tau1 = qchan::output_of_maximally_mixed(ch->channel).tau1;
  });
}

qchan_status qchan_bound_report_json(const qchan_channel* ch, double q, char** out) {
  return guard([&] {
    require(ch != nullptr && out != nullptr, "null argument");
    *out = copy_string(qchan::to_json(qchan::evaluate_all(ch->channel, order(q))).dump(2));
  });
}

qchan_status qchan_separability_json(const qchan_channel* ch, double q, char** out) {
  return guard([&] {
    require(ch != nullptr && out != nullptr, "null argument");
    *out = copy_string(qchan::to_json(qchan::classify_region(ch->channel, order(q))).dump(2));
  });
}

qchan_status qchan_analyze(const qchan_channel* ch, const double* qs, size_t nq, int bits, char** out,
                           int* all_satisfied) {
  return guard([&] {
    require(ch != nullptr && out != nullptr && (qs != nullptr || nq == 0), "null argument");
    std::vector<qchan::RenyiOrder> orders;
    for (std::size_t i = 0; i < nq; ++i) orders.push_back(order(qs[i]));
    const nlohmann::json doc = qchan::analyze_channel(ch->channel, orders, bits != 0);
    if (all_satisfied) *all_satisfied = doc["all_bounds_satisfied"].get<bool>() ? 1 : 0;
    *out = copy_string(doc.dump(2) + "\n");
  });
}

void qchan_scan_config_init(qchan_scan_config* cfg) {
  if (!cfg) return;
  cfg->mode = QCHAN_SCAN_ENTROPY_PLANE;
  cfg->ensemble = "random_cptp";
  cfg->n_samples = 1000;
  cfg->dim = 2;
  cfg->q = 1.0;
  cfg->seed = 0;
  cfg->format = QCHAN_FORMAT_CSV;
  cfg->threads = 0;
  cfg->env_dim = 0;
  cfg->mixture_size = 0;
}

qchan_status qchan_scan(const qchan_scan_config* cfg, char** out) {
  return guard([&] {
    require(out != nullptr, "null argument");
    *out = copy_string(qchan::run_scan(to_config(cfg)));
  });
}

qchan_status qchan_scan_gnuplot(const qchan_scan_config* cfg, const char* data_path, char** out) {
  return guard([&] {
    require(out != nullptr && data_path != nullptr, "null argument");
    const qchan::ScanConfig c = to_config(cfg);
    qchan::validate_scan_config(c);
    *out = copy_string(qchan::scan_gnuplot_script(c, data_path));
  });
}

qchan_status qchan_curve(const char* name, size_t grid, double q, char** out) {
  return guard([&] {
    require(name != nullptr && out != nullptr, "null argument");
    *out = copy_string(qchan::run_curve(name, grid, order(q)));
  });
}

qchan_status qchan_verify(const char* suite, size_t n, uint64_t seed, size_t threads, const qchan_channel* injected,
                          char** summary, int* passed) {
  return guard([&] {
    require(suite != nullptr && summary != nullptr, "null argument");
    qchan::VerifyConfig cfg;
    cfg.suite = suite;
    cfg.n = n;
    cfg.seed = seed;
    cfg.threads = threads;
    if (injected) cfg.injected = injected->channel;
    const qchan::VerifyOutcome res = qchan::run_verify(cfg);
    if (passed) *passed = res.passed ? 1 : 0;
    *summary = copy_string(res.summary);
  });
}

}  // extern "C"
