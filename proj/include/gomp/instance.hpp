#ifndef GOMP_INSTANCE_HPP
#define GOMP_INSTANCE_HPP

// Experiment instances y = A x + v with A = D U: D diagonal with squared
// entries in [1 - c, 1 + c], c = 0.99 / sqrt(K/N + 1), U the orthogonal QR
// factor of a standard Gaussian matrix, and n = m = NK + 1. Every such A has
// delta_{NK+1} <= c < 1/sqrt(K/N + 1).

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gomp/error.hpp"
#include "gomp/linops.hpp"
#include "gomp/metrics.hpp"
#include "gomp/rip.hpp"
#include "gomp/rng.hpp"
#include "gomp/types.hpp"

namespace gomp {

// sqrt(SNR) is set this far above snr_threshold for noisy instances.
inline constexpr double kSnrMargin = 0.01;
// Fraction of the RIC threshold the diagonal spread is allowed to reach.
inline constexpr double kDeltaFraction = 0.99;
// Noise-free runs stop at this fraction of ||y||_2.
inline constexpr double kNoiseFreeEpsilon = 1e-10;

struct Instance {
  SensingMatrix A;
  Vector d;  // diagonal of D
  SparseSignal x;
  Vector v;
  Vector y;
  Index K = 1;
  Index N = 1;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  bool noisy = false;
  RicEstimate claimed_delta;

  Index n() const { return A.cols(); }
  Index m() const { return A.rows(); }
};

struct GenOptions {
  bool noisy = false;
  bool flat_signal = false;  // +-1 nonzeros (MAR = 1) instead of Gaussian
};

// Interval for the diagonal entries of D.
inline std::pair<double, double> diagonal_range(Index K, Index N) {
  const double c =
      kDeltaFraction / std::sqrt(static_cast<double>(K) / static_cast<double>(N) + 1.0);
  return {std::sqrt(1.0 - c), std::sqrt(1.0 + c)};
}

// Draw order from Rng(seed): G (n x n, row-major), d (n), support (K, partial
// Fisher-Yates), nonzero values in draw order of the support, then the noise
// direction (n) when noisy.
inline Instance gen_instance(Index K, Index N, std::uint64_t seed, const GenOptions &opts = {}) {
  if (K < 1 || N < 1) throw Error(Errc::InvalidParams, "K and N must be >= 1");
  const Index n = N * K + 1;
  Rng rng(seed);

  const Matrix G = rng.normal_matrix(n, n);
  const auto [lo, hi] = diagonal_range(K, N);
  Vector d(n);
  for (Index i = 0; i < n; ++i) d[i] = rng.uniform(lo, hi);

  Instance inst;
  inst.K = K;
  inst.N = N;
  inst.seed = seed;
  inst.noisy = opts.noisy;
  inst.d = d;
  inst.A = SensingMatrix(d.asDiagonal() * orthogonal_factor(G));
  inst.claimed_delta = du_ric_bound(d);

  const IndexSet support = rng.sample_without_replacement(n, K);
  Vector values = Vector::Zero(n);
  for (Index i : support) {
    double value = 0.0;
    if (opts.flat_signal) {
      value = rng.uniform() < 0.5 ? -1.0 : 1.0;
    } else {
      while (value == 0.0) value = rng.normal();
    }
    values[i] = value;
  }
  inst.x = SparseSignal(values, support);

  const Vector clean = inst.A * values;
  if (opts.noisy) {
    const double root_snr =
        kSnrMargin + snr_threshold(K, N, inst.claimed_delta.value, mar(inst.x, K));
    const Vector direction = rng.normal_vector(n);
    inst.v = (clean.norm() / root_snr) * direction / direction.norm();
    inst.y = clean + inst.v;
    inst.epsilon = inst.v.norm();
  } else {
    inst.v = Vector::Zero(n);
    inst.y = clean;
    inst.epsilon = kNoiseFreeEpsilon * inst.y.norm();
  }
  return inst;
}

namespace detail {

inline std::string format_double(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

inline void append_vector(std::string &out, const Vector &v) {
  out += '[';
  for (Index i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_double(v[i], 17);
  }
  out += ']';
}

inline Vector read_vector(const nlohmann::json &j) {
  Vector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Index>(i)] = j[i].get<double>();
  return v;
}

}  // namespace detail

// Row-major matrix as nested JSON arrays, 17 significant digits.
inline Matrix read_matrix_json(const nlohmann::json &j) {
  const nlohmann::json &rows = j.is_object() ? j.at("A") : j;
  if (!rows.is_array() || rows.empty() || !rows[0].is_array())
    throw Error(Errc::ParseError, "matrix must be a nonempty array of rows");
  const auto m = static_cast<Index>(rows.size());
  const auto n = static_cast<Index>(rows[0].size());
  Matrix A(m, n);
  for (Index i = 0; i < m; ++i) {
    const auto &row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n)
      throw Error(Errc::ParseError, "ragged matrix rows");
    for (Index j2 = 0; j2 < n; ++j2) A(i, j2) = row[static_cast<std::size_t>(j2)].get<double>();
  }
  return A;
}

inline std::string instance_to_json(const Instance &inst) {
  using detail::append_vector;
  using detail::format_double;
  std::string out = "{\n";
  out += "  \"format\": \"gomp-instance\",\n  \"version\": 1,\n";
  out += "  \"K\": " + std::to_string(inst.K) + ",\n";
  out += "  \"N\": " + std::to_string(inst.N) + ",\n";
  out += "  \"m\": " + std::to_string(inst.m()) + ",\n";
  out += "  \"n\": " + std::to_string(inst.n()) + ",\n";
  out += "  \"seed\": " + std::to_string(inst.seed) + ",\n";
  out += std::string("  \"noisy\": ") + (inst.noisy ? "true" : "false") + ",\n";
  out += "  \"epsilon\": " + format_double(inst.epsilon, 17) + ",\n";
  out += "  \"claimed_delta\": {\"order\": " + std::to_string(inst.claimed_delta.order) +
         ", \"value\": " + format_double(inst.claimed_delta.value, 17) + ", \"kind\": \"" +
         std::string(to_string(inst.claimed_delta.kind)) + "\"},\n";
  out += "  \"d\": ";
  append_vector(out, inst.d);
  out += ",\n  \"A\": [\n";
  for (Index i = 0; i < inst.m(); ++i) {
    out += "    ";
    append_vector(out, inst.A.matrix().row(i).transpose());
    out += i + 1 < inst.m() ? ",\n" : "\n";
  }
  out += "  ],\n  \"support\": [";
  const auto support = to_one_based(inst.x.support());
  for (std::size_t i = 0; i < support.size(); ++i)
    out += (i ? ", " : "") + std::to_string(support[i]);
  out += "],\n  \"x\": ";
  append_vector(out, inst.x.values());
  out += ",\n  \"v\": ";
  append_vector(out, inst.v);
  out += ",\n  \"y\": ";
  append_vector(out, inst.y);
  out += "\n}\n";
  return out;
}

inline RicKind parse_ric_kind(const std::string &s) {
  for (RicKind k : {RicKind::ExactEnumeration, RicKind::AnalyticDU, RicKind::UpperBoundSpectral})
    if (s == to_string(k)) return k;
  throw Error(Errc::ParseError, "unknown RIC kind '" + s + "'");
}

inline Instance instance_from_json(const std::string &text) {
  try {
    const auto j = nlohmann::json::parse(text);
    Instance inst;
    inst.K = j.at("K").get<Index>();
    inst.N = j.at("N").get<Index>();
    inst.seed = j.at("seed").get<std::uint64_t>();
    inst.noisy = j.at("noisy").get<bool>();
    inst.epsilon = j.at("epsilon").get<double>();
    const auto &cd = j.at("claimed_delta");
    inst.claimed_delta = {cd.at("order").get<Index>(), cd.at("value").get<double>(),
                          parse_ric_kind(cd.at("kind").get<std::string>())};
    inst.d = detail::read_vector(j.at("d"));
    inst.A = SensingMatrix(read_matrix_json(j.at("A")));
    const Index n = inst.A.cols();
    inst.x = SparseSignal(detail::read_vector(j.at("x")),
                          from_one_based(j.at("support").get<std::vector<long long>>(), n));
    inst.v = detail::read_vector(j.at("v"));
    inst.y = detail::read_vector(j.at("y"));
    if (inst.x.size() != n || inst.v.size() != inst.A.rows() || inst.y.size() != inst.A.rows())
      throw Error(Errc::ParseError, "vector lengths disagree with the matrix shape");
    return inst;
  } catch (const nlohmann::json::exception &e) {
    throw Error(Errc::ParseError, e.what());
  }
}

inline std::string read_text_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace gomp

#endif  // GOMP_INSTANCE_HPP
