// Copyright 2026 The HUNCC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Rate and security-level calculators, the per-c trade-off sweep and the
// worked bit-count examples.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "huncc/cryptosys.hpp"
#include "huncc/iscode.hpp"
#include "huncc/rng.hpp"

namespace huncc::analysis {

// ---------------------------------------------------------------------------
// Rate

struct PathRate {
  std::size_t path = 0;
  bool encrypted = false;
  std::uint64_t message_bits = 0;       // per block batch
  std::uint64_t transmitted_bits = 0;   // per block batch
  double rate() const { return static_cast<double>(message_bits) / static_cast<double>(transmitted_bits); }
};

struct RateReport {
  std::size_t l = 0, c = 0;
  std::uint64_t k_b = 0, n_b = 0;
  double formula_rate = 0.0;  // mean of the per-path rates
  double exact_rate = 0.0;    // message bits over transmitted bits
  std::vector<PathRate> paths;
};

/// Paths 0..c-1 carry the encrypted rows.
inline RateReport rate(std::size_t l, std::size_t c, std::uint64_t k_b, std::uint64_t n_b) {
  if (l < 1) throw InvalidArgument("l must be at least 1");
  if (c > l) throw InvalidArgument("c must not exceed l");
  if (k_b < 1 || k_b > n_b) throw InvalidArgument("need 1 <= k_b <= n_b");
  RateReport r{l, c, k_b, n_b, 0.0, 0.0, {}};
  const double lc = static_cast<double>(l - c);
  r.formula_rate = (static_cast<double>(c) * static_cast<double>(k_b) / static_cast<double>(n_b) + lc) / static_cast<double>(l);
  const double sent = static_cast<double>(c) * static_cast<double>(n_b) + lc * static_cast<double>(k_b);
  r.exact_rate = static_cast<double>(l) * static_cast<double>(k_b) / sent;
  for (std::size_t p = 0; p < l; ++p) r.paths.push_back({p, p < c, k_b, p < c ? n_b : k_b});
  return r;
}

// ---------------------------------------------------------------------------
// Security level

/// Operation count of the l x l reconstruction an attacker runs after
/// breaking one encrypted path: one known message symbol plus the l - 1
/// plaintext coded symbols. Averaged over `samples` random columns.
inline double measured_delta(std::size_t l, std::uint64_t seed = 0, std::size_t samples = 8) {
  if (l < 1) throw InvalidArgument("l must be at least 1");
  unsigned m = 8;
  while ((std::uint64_t{1} << m) < 2 * std::uint64_t{l}) ++m;
  const auto f = gf::Field::make(2, m);
  const auto code = is::IsCode::build(f, l, l - 1, seed);
  Rng rng = Rng(seed).derive("analysis.delta");
  std::vector<std::size_t> msg_pos{0}, enc_pos(l - 1);
  std::iota(enc_pos.begin(), enc_pos.end(), std::size_t{1});
  std::uint64_t total = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<gf::Value> col(l);
    for (auto& v : col) v = static_cast<gf::Value>(rng.uniform(f->order()));
    const auto x = code.encode_column(col);
    std::vector<gf::Value> known{col[0]}, seen(x.begin() + 1, x.end());
    total += is::reconstruct_encoded(code, msg_pos, known, enc_pos, seen).ops;
  }
  return static_cast<double>(total) / static_cast<double>(samples);
}

inline constexpr std::size_t kDeltaCalibrationLength = 8;

/// K in delta = K l^3, measured from the reconstruction at l = 8.
inline double delta_constant() {
  static const double k = measured_delta(kDeltaCalibrationLength) / std::pow(double(kDeltaCalibrationLength), 3);
  return k;
}

enum class DeltaMode { kFormula, kMeasured, kGiven };

inline const char* delta_mode_name(DeltaMode m) {
  return m == DeltaMode::kFormula ? "formula" : m == DeltaMode::kMeasured ? "measured" : "given";
}

enum class LevelStatus { kOk, kVacuous };

inline constexpr unsigned kMaxSecurityBits = 256;

struct SecurityReport {
  unsigned b = 0;
  std::size_t l = 0, w = 0, c = 0;
  DeltaMode mode = DeltaMode::kGiven;
  double delta = 0.0;
  LevelStatus status = LevelStatus::kOk;
  double approx_deficit = 0.0;  // delta / 2^b
  double exact_deficit = 0.0;   // b - log2(2^b - delta)
  double f_is = 0.0;
  double f_crypto = 0.0;

  double approx_level() const { return status == LevelStatus::kOk ? b - approx_deficit : NAN; }
  double exact_level() const { return status == LevelStatus::kOk ? b - exact_deficit : NAN; }
  bool vacuous() const { return status == LevelStatus::kVacuous; }
};

/// Deficits are kept separately from b because b - delta/2^b rounds to b in
/// double precision for any realistic delta.
inline SecurityReport security_level(unsigned b, std::size_t l, double delta, std::size_t w, std::size_t c = 1,
                                     DeltaMode mode = DeltaMode::kGiven) {
  if (b < 1) throw InvalidArgument("b must be at least 1");
  if (l < 1) throw InvalidArgument("l must be at least 1");
  if (w >= l && l > 1) throw InvalidArgument("w must be below l");
  if (c > l) throw InvalidArgument("c must not exceed l");
  if (!(delta >= 0.0)) throw InvalidArgument("delta must be nonnegative");
  SecurityReport r;
  r.b = b;
  r.l = l;
  r.w = w;
  r.c = c;
  r.mode = mode;
  r.delta = delta;
  const double ratio = std::ldexp(delta, -static_cast<int>(b));
  if (ratio >= 1.0) {
    r.status = LevelStatus::kVacuous;
  } else {
    r.approx_deficit = ratio;
    r.exact_deficit = -std::log1p(-ratio) / std::log(2.0);
  }
  r.f_is = static_cast<double>(l - w) / static_cast<double>(l);
  r.f_crypto = (c >= 1 ? 1.0 : 0.0) * static_cast<double>(std::min(b, kMaxSecurityBits)) / kMaxSecurityBits;
  return r;
}

inline SecurityReport security_level(unsigned b, std::size_t l, DeltaMode mode, std::size_t w, std::size_t c = 1) {
  double delta = 0.0;
  switch (mode) {
    case DeltaMode::kFormula: delta = delta_constant() * std::pow(static_cast<double>(l), 3); break;
    case DeltaMode::kMeasured: delta = measured_delta(l); break;
    case DeltaMode::kGiven: throw InvalidArgument("given mode needs an explicit delta");
  }
  return security_level(b, l, delta, w, c, mode);
}

/// Number of links at which the level drops by one bit, under delta = K l^3
/// and under delta = l. Returned as log2(l).
struct OneBitLossReport {
  double log2_l_cubic = 0.0;
  double log2_l_linear = 0.0;
};

inline OneBitLossReport links_to_lose_one_bit(unsigned b) {
  // exact level b - 1  <=>  delta = 2^(b-1)
  const double lg = static_cast<double>(b) - 1.0;
  return {(lg - std::log2(delta_constant())) / 3.0, lg};
}

// ---------------------------------------------------------------------------
// Sweep

struct SweepRow {
  std::size_t c = 0;
  double rate_formula = 0.0;
  double rate_exact = 0.0;
  double f_crypto = 0.0;
  double f_is = 0.0;
  std::uint64_t pubkey_bits = 0;
  bool operator==(const SweepRow&) const = default;
};

struct SweepTable {
  std::string preset;
  std::size_t l = 0;
  std::size_t w = 0;
  std::vector<SweepRow> rows;
};

/// One row per c in 0..l. f_IS uses the given w (default l - 1). The key
/// column is the k x n public matrix size, 0 when nothing is encrypted.
inline SweepTable sweep(const crypto::McElieceParams& p, std::size_t l, std::optional<std::size_t> w = {}) {
  if (l < 1) throw InvalidArgument("l must be at least 1");
  SweepTable t{p.name, l, w.value_or(l - 1), {}};
  if (t.w >= l && l > 1) throw InvalidArgument("w must be below l");
  for (std::size_t c = 0; c <= l; ++c) {
    const auto r = rate(l, c, p.k, p.n);
    SweepRow row;
    row.c = c;
    row.rate_formula = r.formula_rate;
    row.rate_exact = r.exact_rate;
    row.f_crypto = c >= 1 ? static_cast<double>(std::min(p.b, kMaxSecurityBits)) / kMaxSecurityBits : 0.0;
    row.f_is = static_cast<double>(l - t.w) / static_cast<double>(l);
    row.pubkey_bits = c >= 1 ? std::uint64_t{p.k} * p.n : 0;
    t.rows.push_back(row);
  }
  return t;
}

inline SweepTable sweep(const std::string& preset, std::size_t l, std::optional<std::size_t> w = {}) {
  return sweep(crypto::preset(preset), l, w);
}

inline constexpr const char* kSweepCsvHeader = "c,rate_formula,rate_exact,f_crypto,f_IS,pubkey_bits";

inline std::string format_g6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

inline std::string sweep_csv(const SweepTable& t) {
  std::string out = std::string(kSweepCsvHeader) + "\n";
  for (const auto& r : t.rows)
    out += std::to_string(r.c) + "," + format_g6(r.rate_formula) + "," + format_g6(r.rate_exact) + "," +
           format_g6(r.f_crypto) + "," + format_g6(r.f_is) + "," + std::to_string(r.pubkey_bits) + "\n";
  return out;
}

inline std::vector<SweepRow> parse_sweep_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kSweepCsvHeader) throw FormatError("sweep CSV header mismatch");
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != 6) throw FormatError("sweep CSV row needs 6 fields: " + line);
    try {
      std::size_t used = 0;
      auto num = [&](const std::string& s) {
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
      };
      SweepRow r;
      r.c = std::stoul(f[0], &used);
      if (used != f[0].size()) throw std::invalid_argument(f[0]);
      r.rate_formula = num(f[1]);
      r.rate_exact = num(f[2]);
      r.f_crypto = num(f[3]);
      r.f_is = num(f[4]);
      r.pubkey_bits = std::stoull(f[5], &used);
      if (used != f[5].size()) throw std::invalid_argument(f[5]);
      rows.push_back(r);
    } catch (const std::logic_error&) {
      throw FormatError("bad number in sweep CSV row: " + line);
    }
  }
  return rows;
}

/// Rows with every real column rounded to the six significant digits the
/// CSV carries; parse_sweep_csv(sweep_csv(t)) == rounded(t).
inline std::vector<SweepRow> rounded(const SweepTable& t) {
  std::vector<SweepRow> out;
  for (auto r : t.rows) {
    for (double* v : {&r.rate_formula, &r.rate_exact, &r.f_crypto, &r.f_is}) *v = std::stod(format_g6(*v));
    out.push_back(r);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Worked bit counts for the two-path example (k_b = 2288, n_b = 2960)

struct BitcountReport {
  double log2_field = 0.0;          // 1443 log2 3
  double continuous_total = 0.0;    // 2960 + 1443 log2 3
  std::uint64_t mceliece_total = 0; // 2960 + 2288
  double mceliece_rate = 0.0;       // 4576 / 5248
  std::uint64_t rsa_total = 0;      // 3072 + 2288
  double rsa_rate = 0.0;            // 4576 / 5360
  std::uint64_t systematic_key_bits = 0;  // k (n - k) for pq2960
};

inline BitcountReport bitcount_example_check() {
  constexpr std::uint64_t k = 2288, n = 2960, rsa = 3072;
  BitcountReport r;
  r.log2_field = 1443.0 * std::log2(3.0);
  r.continuous_total = static_cast<double>(n) + r.log2_field;
  r.mceliece_total = n + k;
  r.mceliece_rate = static_cast<double>(2 * k) / static_cast<double>(r.mceliece_total);
  r.rsa_total = rsa + k;
  r.rsa_rate = static_cast<double>(2 * k) / static_cast<double>(r.rsa_total);
  r.systematic_key_bits = k * (n - k);
  return r;
}

}  // namespace huncc::analysis
