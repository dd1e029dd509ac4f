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

// Multipath network simulator: l synchronous noiseless links, an optional
// eavesdropper (weak: a strict subset of links, strong: all links, myopic:
// observes a subset and flips bits on it), and the secrecy/decoding
// experiments built on top.

#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "huncc/cryptosys.hpp"
#include "huncc/huncc.hpp"
#include "huncc/iscode.hpp"
#include "huncc/kv.hpp"
#include "huncc/rng.hpp"

namespace huncc::netsim {

using gf::Value;
using pipeline::HunccConfig;
using pipeline::PathPayload;
using pipeline::Transmission;

enum class EveKind { kNone, kWeak, kStrong, kMyopic };

inline const char* eve_name(EveKind k) {
  switch (k) {
    case EveKind::kNone: return "none";
    case EveKind::kWeak: return "weak";
    case EveKind::kStrong: return "strong";
    case EveKind::kMyopic: return "myopic";
  }
  return "?";
}

inline EveKind parse_eve_kind(const std::string& s) {
  if (s == "none") return EveKind::kNone;
  if (s == "weak") return EveKind::kWeak;
  if (s == "strong") return EveKind::kStrong;
  if (s == "myopic") return EveKind::kMyopic;
  throw InvalidArgument("unknown eavesdropper kind '" + s + "' (none|weak|strong|myopic)");
}

struct Eavesdropper {
  EveKind kind = EveKind::kNone;
  std::vector<std::size_t> links;  // 0-based, sorted
  std::size_t flips = 0;           // bits flipped per trial (myopic only)
};

struct NetworkConfig {
  std::size_t l = 0;
  Eavesdropper eve;

  void validate() const {
    if (l < 1) throw InvalidArgument("network needs at least one link");
    std::vector<bool> seen(l, false);
    for (auto p : eve.links) {
      if (p >= l || seen[p]) throw InvalidArgument("eavesdropper links must be distinct link indices");
      seen[p] = true;
    }
    switch (eve.kind) {
      case EveKind::kNone:
        if (!eve.links.empty()) throw InvalidArgument("no eavesdropper but links given");
        break;
      case EveKind::kWeak:
        if (eve.links.empty() || eve.links.size() >= l) throw InvalidArgument("weak eavesdropper observes 1..l-1 links");
        break;
      case EveKind::kStrong:
        if (eve.links.size() != l) throw InvalidArgument("strong eavesdropper observes all links");
        break;
      case EveKind::kMyopic:
        if (eve.links.empty()) throw InvalidArgument("myopic eavesdropper needs at least one observed link");
        break;
    }
    if (eve.kind != EveKind::kMyopic && eve.flips != 0) throw InvalidArgument("only a myopic eavesdropper flips bits");
  }

  static NetworkConfig make(std::size_t l, EveKind kind, std::vector<std::size_t> links = {}, std::size_t flips = 0) {
    NetworkConfig n;
    n.l = l;
    n.eve.kind = kind;
    if (kind == EveKind::kStrong && links.empty()) {
      links.resize(l);
      std::iota(links.begin(), links.end(), std::size_t{0});
    }
    std::ranges::sort(links);
    n.eve.links = std::move(links);
    n.eve.flips = flips;
    n.validate();
    return n;
  }
};

struct Injection {
  std::size_t link = 0;
  std::size_t bit = 0;
  bool operator==(const Injection&) const = default;
};

struct Observation {
  EveKind kind = EveKind::kNone;
  std::map<std::size_t, Bytes> captured;  // link -> payload bytes
  std::uint64_t sequence = 0;
};

struct DeliveryReport {
  std::vector<PathPayload> delivered;
  std::vector<Injection> injected;
};

/// Delivers every payload bit-exactly, except that a myopic eavesdropper's
/// injections flip the listed bits. Eve captures what was sent on her links.
inline std::pair<DeliveryReport, Observation> transmit(const NetworkConfig& net, const Transmission& t,
                                                       std::span<const Injection> injections = {},
                                                       std::uint64_t sequence = 0) {
  net.validate();
  if (t.payloads.size() != net.l)
    throw InvalidArgument("transmission has " + std::to_string(t.payloads.size()) + " payloads for " +
                          std::to_string(net.l) + " links");
  if (!injections.empty() && net.eve.kind != EveKind::kMyopic)
    throw InvalidArgument("only a myopic eavesdropper can inject errors");
  DeliveryReport rep;
  Observation obs;
  obs.kind = net.eve.kind;
  obs.sequence = sequence;
  std::vector<const PathPayload*> by_link(net.l, nullptr);
  for (const auto& p : t.payloads) {
    if (p.path >= net.l || by_link[p.path]) throw InvalidArgument("payload path indices must cover each link once");
    by_link[p.path] = &p;
  }
  for (std::size_t link = 0; link < net.l; ++link) rep.delivered.push_back(*by_link[link]);
  for (auto link : net.eve.links) obs.captured[link] = by_link[link]->bytes;
  for (const auto& inj : injections) {
    if (!std::ranges::binary_search(net.eve.links, inj.link))
      throw InvalidArgument("injection on a link the eavesdropper does not observe");
    auto& p = rep.delivered[inj.link];
    if (inj.bit >= p.bit_length) throw InvalidArgument("injection position beyond the payload");
    p.bytes[inj.bit / 8] ^= static_cast<std::uint8_t>(1u << (inj.bit % 8));
    rep.injected.push_back(inj);
  }
  return {std::move(rep), std::move(obs)};
}

/// Stateful wrapper that numbers observations.
class Network {
 public:
  explicit Network(NetworkConfig cfg) : cfg_(std::move(cfg)) { cfg_.validate(); }
  const NetworkConfig& config() const { return cfg_; }
  std::pair<DeliveryReport, Observation> send(const Transmission& t, std::span<const Injection> inj = {}) {
    return transmit(cfg_, t, inj, seq_++);
  }

 private:
  NetworkConfig cfg_;
  std::uint64_t seq_ = 0;
};

// ---------------------------------------------------------------------------
// Secrecy experiment

enum class SecrecyMode { kAuto, kExact, kSampled };

inline const char* secrecy_mode_name(SecrecyMode m) {
  return m == SecrecyMode::kExact ? "exact" : m == SecrecyMode::kSampled ? "sampled" : "auto";
}

struct SecrecyExperimentReport {
  SecrecyMode mode = SecrecyMode::kExact;  // mode actually used
  std::vector<std::size_t> visible_rows;   // coded rows Eve sees in the clear
  std::vector<double> tv;                  // per message index j
  double max_tv = 0.0;
  double threshold = 0.0;                  // sampled mode decision threshold
  std::uint64_t samples = 0;               // messages enumerated or drawn
  bool secure = true;

  const char* verdict() const { return secure ? "SECURE" : "INSECURE"; }
};

inline constexpr std::size_t kSampledVisibleCap = 10;

/// Leakage of each M_j through the coded rows in `visible`. Exact mode
/// enumerates every message column; sampled mode draws `trials` columns and
/// compares the empirical law of the low bits of M_j given the low bits of
/// the visible symbols against its marginal (weighted TV), flagging leakage
/// above 3 sqrt(cells / trials).
inline SecrecyExperimentReport measure_leakage(const gf::Matrix& g, std::vector<std::size_t> visible, SecrecyMode mode,
                                               std::uint64_t trials, const Seed& seed) {
  const std::size_t l = g.rows();
  std::ranges::sort(visible);
  SecrecyExperimentReport rep;
  rep.visible_rows = visible;
  rep.tv.assign(l, 0.0);
  const std::uint64_t total = is::detail::checked_pow(g.field()->order(), l, is::kBruteForceLimit);
  const bool exact_ok = total <= is::kBruteForceLimit;
  if (mode == SecrecyMode::kExact && !exact_ok)
    throw InvalidArgument("configuration too large for exact mode (q^l > 2^24); use sampled mode");
  if (mode == SecrecyMode::kAuto) mode = exact_ok ? SecrecyMode::kExact : SecrecyMode::kSampled;
  rep.mode = mode;

  if (mode == SecrecyMode::kExact) {
    rep.samples = total;
    const auto fl = is::subset_flatness(g, visible);
    for (std::size_t j = 0; j < l; ++j) {
      rep.tv[j] = fl.max_tv[j];
      rep.secure = rep.secure && fl.flat[j];
    }
    rep.max_tv = *std::ranges::max_element(rep.tv);
    return rep;
  }

  if (trials == 0) throw InvalidArgument("sampled mode needs at least one trial");
  const gf::Field& f = *g.field();
  const std::size_t nvis = std::min(visible.size(), kSampledVisibleCap);
  const unsigned mbits = std::min(2u, f.symbol_bits());
  const std::uint64_t nkeys = std::uint64_t{1} << nvis, mvals = std::uint64_t{1} << mbits;
  std::vector<std::vector<std::uint64_t>> counts(l, std::vector<std::uint64_t>(nkeys * mvals, 0));
  Rng rng = Rng(seed).derive("netsim.secrecy");
  std::vector<Value> m(l);
  for (std::uint64_t t = 0; t < trials; ++t) {
    for (auto& v : m) v = static_cast<Value>(rng.uniform(f.order()));
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < nvis; ++i) {
      Value x = 0;
      for (std::size_t r = 0; r < l; ++r) x = f.add(x, f.mul(m[r], g(r, visible[i])));
      key |= std::uint64_t{x & 1u} << i;
    }
    for (std::size_t j = 0; j < l; ++j) ++counts[j][key * mvals + (m[j] & (mvals - 1))];
  }
  rep.samples = trials;
  rep.threshold = 3.0 * std::sqrt(static_cast<double>(nkeys * mvals) / static_cast<double>(trials));
  for (std::size_t j = 0; j < l; ++j) {
    std::vector<double> marg(mvals, 0.0);
    for (std::uint64_t k = 0; k < nkeys; ++k)
      for (std::uint64_t v = 0; v < mvals; ++v) marg[v] += static_cast<double>(counts[j][k * mvals + v]);
    for (auto& x : marg) x /= static_cast<double>(trials);
    double tv = 0.0;
    for (std::uint64_t k = 0; k < nkeys; ++k) {
      double n = 0.0;
      for (std::uint64_t v = 0; v < mvals; ++v) n += static_cast<double>(counts[j][k * mvals + v]);
      if (n == 0.0) continue;
      double d = 0.0;
      for (std::uint64_t v = 0; v < mvals; ++v) d += std::abs(static_cast<double>(counts[j][k * mvals + v]) / n - marg[v]);
      tv += n / static_cast<double>(trials) * d / 2;
    }
    rep.tv[j] = tv;
  }
  rep.max_tv = *std::ranges::max_element(rep.tv);
  rep.secure = rep.max_tv <= rep.threshold;
  return rep;
}

/// Coded rows an eavesdropper reads in the clear: rows on observed plaintext
/// paths, plus rows on observed encrypted paths when the cipher is the
/// identity test cipher.
inline std::vector<std::size_t> visible_rows(const NetworkConfig& net, const HunccConfig& cfg) {
  if (net.l != cfg.l()) throw InvalidArgument("network and pipeline disagree on the path count");
  std::vector<std::size_t> rows;
  for (auto p : net.eve.links)
    if (!cfg.path_encrypted(p) || cfg.cipher().scheme == crypto::Scheme::kIdentity) rows.push_back(cfg.row_of_path(p));
  return rows;
}

inline SecrecyExperimentReport run_secrecy_experiment(const NetworkConfig& net, const HunccConfig& cfg,
                                                      std::uint64_t trials, const Seed& seed,
                                                      SecrecyMode mode = SecrecyMode::kAuto) {
  net.validate();
  return measure_leakage(cfg.code().generator(), visible_rows(net, cfg), mode, trials, seed);
}

// ---------------------------------------------------------------------------
// Decode experiment

struct DecodeExperimentReport {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t detected = 0;  // decoder raised an error
  std::uint64_t silent = 0;    // decoder returned wrong bytes without error
  std::uint64_t injected_bits = 0;

  double success_rate() const { return trials ? static_cast<double>(successes) / static_cast<double>(trials) : 0.0; }
  bool operator==(const DecodeExperimentReport&) const = default;
};

/// Picks `flips` distinct positions inside one cipher-block window of the
/// first observed link (n_b bits if that path is encrypted, k_b otherwise).
inline std::vector<Injection> plan_injections(const NetworkConfig& net, const HunccConfig& cfg, const Transmission& t,
                                              Rng& rng) {
  if (net.eve.kind != EveKind::kMyopic || net.eve.flips == 0) return {};
  const std::size_t link = net.eve.links.front();
  const auto it = std::ranges::find(t.payloads, link, &PathPayload::path);
  if (it == t.payloads.end()) throw InvalidArgument("observed link carries no payload");
  const PathPayload& p = *it;
  const std::size_t window = p.encrypted ? cfg.cipher().n_bits : cfg.cipher().k_bits;
  if (net.eve.flips > window) throw InvalidArgument("more flips than bits in one cipher block");
  const std::size_t block = rng.uniform(p.bit_length / window);
  std::vector<std::size_t> pos(window);
  std::iota(pos.begin(), pos.end(), std::size_t{0});
  std::vector<Injection> out;
  for (std::size_t i = 0; i < net.eve.flips; ++i) {
    std::swap(pos[i], pos[i + rng.uniform(window - i)]);
    out.push_back({link, block * window + pos[i]});
  }
  return out;
}

inline DecodeExperimentReport run_decode_experiment(const NetworkConfig& net, const HunccConfig& cfg,
                                                    std::span<const crypto::Encryptor* const> enc,
                                                    std::span<const crypto::Decryptor* const> dec,
                                                    std::uint64_t trials, const Seed& seed,
                                                    std::size_t message_bytes = 32) {
  net.validate();
  if (net.l != cfg.l()) throw InvalidArgument("network and pipeline disagree on the path count");
  DecodeExperimentReport rep;
  Network network(net);
  for (std::uint64_t i = 0; i < trials; ++i) {
    Rng rng = Rng(seed).derive("netsim.trial", i);
    Bytes msg(message_bytes);
    rng.fill(msg);
    Seed enc_seed;
    rng.fill(enc_seed.bytes);
    const Transmission t = pipeline::encode(cfg, msg, enc, enc_seed);
    const auto inj = plan_injections(net, cfg, t, rng);
    auto [delivery, obs] = network.send(t, inj);
    rep.injected_bits += delivery.injected.size();
    Transmission got = t;
    got.payloads = std::move(delivery.delivered);
    ++rep.trials;
    try {
      if (pipeline::decode(cfg, got, dec) == msg) ++rep.successes;
      else ++rep.silent;
    } catch (const DecodingFailure&) {
      ++rep.detected;
    } catch (const FormatError&) {
      ++rep.detected;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Scenarios

struct Scenario {
  std::size_t l = 2;
  std::size_t c = 1;
  unsigned u = 0;  // 0 means u = l
  std::string preset = "toy16";
  EveKind eve = EveKind::kWeak;
  std::vector<std::size_t> eve_links;  // 0-based
  std::size_t flips = 0;
  std::uint64_t trials = 100;
  Seed seed{};
  std::size_t message_bytes = 32;
  std::uint64_t code_seed = 0;
  SecrecyMode secrecy = SecrecyMode::kAuto;
};

inline std::vector<std::size_t> parse_link_list(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto a = item.find_first_not_of(" \t"), b = item.find_last_not_of(" \t");
    if (a == std::string::npos) continue;
    item = item.substr(a, b - a + 1);
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || p != item.data() + item.size() || v == 0)
      throw FormatError("link list entries are 1-based integers: '" + item + "'");
    out.push_back(v - 1);
  }
  return out;
}

/// Keys: l, c, u, preset, eve.kind, eve.links (1-based, comma separated),
/// eve.flips, trials, seed (hex), message_bytes, code_seed, secrecy
/// (auto|exact|sampled).
inline Scenario parse_scenario(const KeyValues& kv) {
  static const std::vector<std::string> known = {"l",     "c",      "u",    "preset",        "eve.kind",  "eve.links",
                                                 "eve.flips", "trials", "seed", "message_bytes", "code_seed", "secrecy"};
  for (const auto& [k, v] : kv.entries())
    if (std::ranges::find(known, k) == known.end()) throw FormatError("unknown scenario key '" + k + "'");
  Scenario s;
  s.l = kv.u64("l");
  s.c = kv.u64("c");
  s.u = static_cast<unsigned>(kv.u64("u", 0));
  s.preset = kv.str("preset", s.preset);
  s.eve = parse_eve_kind(kv.str("eve.kind", "weak"));
  if (kv.has("eve.links")) s.eve_links = parse_link_list(kv.str("eve.links"));
  s.flips = kv.u64("eve.flips", 0);
  s.trials = kv.u64("trials", s.trials);
  if (kv.has("seed")) s.seed = Seed::from_hex(kv.str("seed"));
  s.message_bytes = kv.u64("message_bytes", s.message_bytes);
  s.code_seed = kv.u64("code_seed", 0);
  const auto mode = kv.str("secrecy", "auto");
  if (mode == "auto") s.secrecy = SecrecyMode::kAuto;
  else if (mode == "exact") s.secrecy = SecrecyMode::kExact;
  else if (mode == "sampled") s.secrecy = SecrecyMode::kSampled;
  else throw FormatError("secrecy must be auto, exact or sampled");
  if (s.eve == EveKind::kWeak && s.eve_links.empty())
    for (std::size_t p = s.c; p < s.l; ++p) s.eve_links.push_back(p);  // default: the plaintext paths
  if (s.eve == EveKind::kStrong && s.eve_links.empty())
    for (std::size_t p = 0; p < s.l; ++p) s.eve_links.push_back(p);
  return s;
}

/// Minimum message count for the secrecy half of a scenario in sampled mode.
inline constexpr std::uint64_t kScenarioSecrecySamples = 200000;

struct ScenarioReport {
  Scenario scenario;
  unsigned u = 0;
  DecodeExperimentReport decode;
  SecrecyExperimentReport secrecy;
};

inline ScenarioReport run_scenario(const Scenario& s) {
  ScenarioReport rep;
  rep.scenario = s;
  rep.u = s.u ? s.u : static_cast<unsigned>(s.l);
  const auto params = crypto::preset(s.preset);
  auto net = NetworkConfig::make(s.l, s.eve, s.eve_links, s.flips);
  auto cfg = HunccConfig::standard(s.l, s.c, rep.u, params.spec(), s.code_seed);
  Seed key_seed;
  key_seed.bytes = sha256(Rng(s.seed).derive("netsim.keygen").seed().bytes);
  const auto kp = crypto::mceliece_keygen(params, key_seed);
  const crypto::Encryptor* enc[] = {&kp.pub};
  const crypto::Decryptor* dec[] = {&kp.priv};
  rep.decode = run_decode_experiment(net, cfg, enc, dec, s.trials, s.seed, s.message_bytes);
  rep.secrecy = run_secrecy_experiment(net, cfg, std::max(s.trials, kScenarioSecrecySamples), s.seed, s.secrecy);
  return rep;
}

inline constexpr const char* kScenarioCsvHeader =
    "l,c,u,preset,eve_kind,eve_links,eve_flips,trials,successes,detected,silent,success_rate,secrecy_mode,max_tv,verdict";

inline std::string scenario_csv_row(const ScenarioReport& r) {
  std::ostringstream os;
  const auto& s = r.scenario;
  os << s.l << ',' << s.c << ',' << r.u << ',' << s.preset << ',' << eve_name(s.eve) << ',';
  for (std::size_t i = 0; i < s.eve_links.size(); ++i) os << (i ? ";" : "") << s.eve_links[i] + 1;
  char rate[32], tv[32];
  std::snprintf(rate, sizeof rate, "%.6g", r.decode.success_rate());
  std::snprintf(tv, sizeof tv, "%.6g", r.secrecy.max_tv);
  os << ',' << s.flips << ',' << r.decode.trials << ',' << r.decode.successes << ',' << r.decode.detected << ','
     << r.decode.silent << ',' << rate << ',' << secrecy_mode_name(r.secrecy.mode) << ',' << tv << ','
     << r.secrecy.verdict();
  return os.str();
}

}  // namespace huncc::netsim
