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


// huncc: key generation, multipath encode/decode, simulation, secrecy checks
// and rate/security tables.
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "huncc/analysis.hpp"
#include "huncc/cryptosys.hpp"
#include "huncc/huncc.hpp"
#include "huncc/iscode.hpp"
#include "huncc/kv.hpp"
#include "huncc/netsim.hpp"

namespace fs = std::filesystem;
using namespace huncc;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

Seed parse_seed(const std::string& s) {
  try {
    return Seed::from_hex(s);
  } catch (const InvalidArgument& e) {
    throw UsageError(std::string("--seed: ") + e.what());
  }
}

/// "7", "16", "2^4" -> field.
gf::FieldPtr parse_field(const std::string& s) {
  std::uint64_t p = 0, m = 1;
  const auto caret = s.find('^');
  try {
    if (caret != std::string::npos) {
      p = std::stoull(s.substr(0, caret));
      m = std::stoull(s.substr(caret + 1));
    } else {
      const std::uint64_t q = std::stoull(s);
      for (std::uint64_t d = 2; d * d <= q && !p; ++d)
        if (q % d == 0) p = d;
      if (!p) p = q;
      std::uint64_t r = q;
      m = 0;
      while (r % p == 0) r /= p, ++m;
      if (r != 1) throw UsageError("--field " + s + " is not a prime power");
    }
  } catch (const std::logic_error&) {
    throw UsageError("--field expects q, or p^m");
  }
  if (p < 2 || !gf::is_prime(p) || m < 1) throw UsageError("--field " + s + " is not a prime power");
  return gf::Field::make(static_cast<unsigned>(p), static_cast<unsigned>(m));
}

/// "1,1;2,1" -> square matrix over f.
gf::Matrix parse_matrix(const gf::FieldPtr& f, const std::string& s) {
  std::vector<std::vector<std::uint64_t>> rows;
  std::stringstream rs(s);
  std::string row;
  while (std::getline(rs, row, ';')) {
    rows.emplace_back();
    std::stringstream cs(row);
    std::string cell;
    while (std::getline(cs, cell, ',')) {
      try {
        rows.back().push_back(std::stoull(cell));
      } catch (const std::logic_error&) {
        throw UsageError("--matrix entries must be integers");
      }
    }
  }
  const std::size_t l = rows.size();
  gf::Matrix g(f, l, l);
  for (std::size_t i = 0; i < l; ++i) {
    if (rows[i].size() != l) throw UsageError("--matrix must be square (rows separated by ';')");
    for (std::size_t j = 0; j < l; ++j) {
      if (rows[i][j] >= f->order()) throw UsageError("--matrix entry out of range for " + f->name());
      g(i, j) = static_cast<gf::Value>(rows[i][j]);
    }
  }
  return g;
}

void check_encrypted(std::size_t c) {
  if (c == 0)
    throw UsageError("--encrypted 0: at least one path must be encrypted (c >= 1); without an encrypted path "
                     "an observer of all links learns everything");
}

std::string path_file(const fs::path& dir, std::size_t p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "path_%02zu.hnct", p + 1);
  return (dir / buf).string();
}

constexpr const char* kSinglePathFile = "single_path.hncv";

// ---------------------------------------------------------------------------

struct KeygenOpts {
  std::string preset, seed, out;
};

int run_keygen(const KeygenOpts& o) {
  const auto params = crypto::preset(o.preset);
  const auto kp = crypto::mceliece_keygen(params, parse_seed(o.seed));
  crypto::write_file(o.out + ".pub", crypto::serialize(kp.pub));
  crypto::write_file(o.out + ".key", crypto::serialize(kp.priv));
  std::cout << "preset=" << params.name << " k_b=" << params.k << " n_b=" << params.n << " t=" << params.t
            << " b=" << params.b << "\n"
            << "public matrix " << params.k << "x" << params.n << " -> " << o.out << ".pub\n"
            << "private key -> " << o.out << ".key\n";
  return 0;
}

struct PipelineOpts {
  std::string in, out, keyfile, seed;
  std::size_t paths = 0, encrypted = 0;
  unsigned u = 0;
  std::uint64_t code_seed = 0;
  bool single = false;
};

pipeline::HunccConfig make_config(const PipelineOpts& o, const crypto::CryptosystemSpec& spec) {
  check_encrypted(o.encrypted);
  if (o.encrypted > o.paths) throw UsageError("--encrypted must not exceed --paths");
  return pipeline::HunccConfig::standard(o.paths, o.encrypted, o.u ? o.u : static_cast<unsigned>(o.paths), spec,
                                         o.code_seed);
}

int run_encode(const PipelineOpts& o) {
  check_encrypted(o.encrypted);
  const Seed seed = parse_seed(o.seed);
  const auto pub = crypto::parse_public_key(crypto::read_file(o.keyfile));
  const auto cfg = make_config(o, pub.spec());
  const Bytes msg = crypto::read_file(o.in);
  if (msg.empty()) throw InvalidArgument("input file " + o.in + " is empty");
  const crypto::Encryptor* enc[] = {&pub};
  const auto t = pipeline::encode(cfg, msg, enc, seed);
  fs::create_directories(o.out);
  if (o.single) {
    crypto::write_file((fs::path(o.out) / kSinglePathFile).string(), pipeline::frame_single_path(t));
  } else {
    for (const auto& p : t.payloads) {
      pipeline::Transmission one = t;
      one.payloads = {p};
      crypto::write_file(path_file(o.out, p.path), pipeline::serialize(one));
    }
  }
  const auto& spec = cfg.cipher();
  const std::size_t batches = t.block_count * cfg.symbol_bits() / spec.k_bits;
  std::cout << "message " << msg.size() << " bytes, " << t.block_count << " symbol columns, " << batches
            << " cipher blocks per path\n";
  for (const auto& p : t.payloads)
    std::cout << "path " << p.path + 1 << ": " << (p.encrypted ? "encrypted" : "plain    ") << " " << p.bit_length
              << " bits\n";
  std::cout << "per block batch: " << cfg.c() << "*" << spec.n_bits << " + " << cfg.l() - cfg.c() << "*"
            << spec.k_bits << " = " << cfg.c() * spec.n_bits + (cfg.l() - cfg.c()) * spec.k_bits << " bits\n"
            << "total " << t.payload_bits() << " bits -> " << o.out << "\n";
  return 0;
}

pipeline::Transmission load_paths(const pipeline::HunccConfig& cfg, const fs::path& dir) {
  pipeline::Transmission t;
  for (std::size_t p = 0; p < cfg.l(); ++p) {
    const auto file = path_file(dir, p);
    pipeline::Transmission one;
    try {
      one = pipeline::parse_transmission(crypto::read_file(file));
    } catch (const Error& e) {
      throw FormatError("path " + std::to_string(p + 1) + ": " + e.what());
    }
    if (one.payloads.size() != 1 || one.payloads[0].path != p)
      throw FormatError("path " + std::to_string(p + 1) + ": file does not hold that path's payload");
    if (p == 0) {
      t = one;
      t.payloads.clear();
    } else if (one.config_digest != t.config_digest || one.message_bytes != t.message_bytes ||
               one.block_count != t.block_count) {
      throw FormatError("path " + std::to_string(p + 1) + ": header disagrees with path 1");
    }
    t.payloads.push_back(std::move(one.payloads[0]));
  }
  pipeline::set_exact_bit_lengths(cfg, t);
  return t;
}

int run_decode(const PipelineOpts& o) {
  check_encrypted(o.encrypted);
  const auto priv = crypto::parse_private_key(crypto::read_file(o.keyfile));
  const auto cfg = make_config(o, priv.spec());
  const auto t = o.single ? pipeline::split_single_path(cfg, crypto::read_file((fs::path(o.in) / kSinglePathFile).string()))
                          : load_paths(cfg, o.in);
  const crypto::Decryptor* dec[] = {&priv};
  const Bytes msg = pipeline::decode(cfg, t, dec);
  crypto::write_file(o.out, msg);
  std::cout << "decoded " << msg.size() << " bytes -> " << o.out << "\n";
  return 0;
}

struct SimulateOpts {
  std::string scenario;
  bool csv = false;
};

int run_simulate(const SimulateOpts& o) {
  const auto s = netsim::parse_scenario(KeyValues::load(o.scenario));
  const auto r = netsim::run_scenario(s);
  if (o.csv) {
    std::cout << netsim::kScenarioCsvHeader << "\n" << netsim::scenario_csv_row(r) << "\n";
    return 0;
  }
  std::cout << "paths l=" << s.l << " encrypted c=" << s.c << " u=" << r.u << " preset=" << s.preset << "\n"
            << "eavesdropper " << netsim::eve_name(s.eve) << " links={";
  for (std::size_t i = 0; i < s.eve_links.size(); ++i) std::cout << (i ? "," : "") << s.eve_links[i] + 1;
  std::cout << "} flips=" << s.flips << "\n"
            << "decode: " << r.decode.successes << "/" << r.decode.trials << " ok, " << r.decode.detected
            << " detected failures, " << r.decode.silent << " silent corruptions\n"
            << "secrecy (" << netsim::secrecy_mode_name(r.secrecy.mode) << ", " << r.secrecy.samples
            << " messages): max TV " << r.secrecy.max_tv << " -> " << r.secrecy.verdict() << "\n";
  return 0;
}

struct VerifyOpts {
  std::size_t l = 0, c = 1;
  unsigned u = 0;
  std::string field, matrix, sample_seed = "0";
  std::uint64_t code_seed = 0, trials = 100000;
  bool sampled = false;
};

int run_verify(const VerifyOpts& o) {
  gf::FieldPtr f;
  if (!o.field.empty()) f = parse_field(o.field);
  else if (o.u) f = gf::Field::binary(o.u);
  std::size_t l = o.l;
  std::optional<gf::Matrix> given;
  if (!o.matrix.empty()) {
    if (!f) throw UsageError("--matrix needs --field or --u");
    given = parse_matrix(f, o.matrix);
    if (l && l != given->rows()) throw UsageError("--l disagrees with --matrix");
    l = given->rows();
  } else {
    if (!l) throw UsageError("give --l (or --matrix)");
    if (!f) {
      unsigned m = 1;
      while ((1u << m) < 2 * l) ++m;
      f = gf::Field::binary(m);
    }
  }
  check_encrypted(o.c);
  if (o.c > l) throw UsageError("--c must not exceed the code length");
  const std::size_t w = l - o.c;
  const gf::Matrix g = given ? *given : is::IsCode::build(f, l, w, o.code_seed).generator();

  std::cout << f->name() << " l=" << l << " w=" << w << "\n";
  if (!o.sampled) {
    const auto rep = is::verify_individual_secrecy_bruteforce(g, w);
    if (rep.pass) {
      std::cout << "PASS (exhaustive, " << rep.messages << " messages)\n"
                << "subsets checked: " << rep.subsets << ", max TV " << rep.max_tv << "\n";
      return 0;
    }
    std::cout << "FAIL (exhaustive, " << rep.messages << " messages): witness " << rep.witness->to_string()
              << ", max TV " << rep.max_tv << "\n";
    return 1;
  }
  std::vector<std::size_t> rows;
  for (std::size_t r = o.c; r < l; ++r) rows.push_back(r);
  const auto rep = netsim::measure_leakage(g, rows, netsim::SecrecyMode::kSampled, o.trials, parse_seed(o.sample_seed));
  std::cout << (rep.secure ? "PASS" : "FAIL") << " (sampled, " << rep.samples << " messages, rows " << o.c + 1
            << ".." << l << "): max TV " << rep.max_tv << ", threshold " << rep.threshold << "\n";
  return rep.secure ? 0 : 1;
}

struct SweepOpts {
  std::string preset;
  std::size_t l = 0;
  std::optional<std::size_t> w;
  bool csv = false;
};

int run_sweep(const SweepOpts& o) {
  const auto t = analysis::sweep(o.preset, o.l, o.w);
  if (o.csv) {
    std::cout << analysis::sweep_csv(t);
    return 0;
  }
  std::printf("preset %s, l=%zu, w=%zu\n", t.preset.c_str(), t.l, t.w);
  std::printf("%4s %12s %12s %9s %7s %12s\n", "c", "rate_formula", "rate_exact", "f_crypto", "f_IS", "pubkey_bits");
  for (const auto& r : t.rows)
    std::printf("%4zu %12.6f %12.6f %9.6f %7.4f %12llu\n", r.c, r.rate_formula, r.rate_exact, r.f_crypto, r.f_is,
                static_cast<unsigned long long>(r.pubkey_bits));
  return 0;
}

struct RateOpts {
  std::size_t l = 0, c = 0;
  std::uint64_t kb = 0, nb = 0;
  bool csv = false;
};

int run_rate(const RateOpts& o) {
  const auto r = analysis::rate(o.l, o.c, o.kb, o.nb);
  if (o.csv) {
    std::cout << "l,c,k_b,n_b,rate_exact,rate_formula\n"
              << o.l << ',' << o.c << ',' << o.kb << ',' << o.nb << ',' << analysis::format_g6(r.exact_rate) << ','
              << analysis::format_g6(r.formula_rate) << "\n";
    return 0;
  }
  const std::uint64_t sent = o.c * o.nb + (o.l - o.c) * o.kb;
  std::cout << "l=" << o.l << " c=" << o.c << " k_b=" << o.kb << " n_b=" << o.nb << "\n"
            << "exact rate:   " << fixed(r.exact_rate, 4) << "  (" << o.l * o.kb << "/" << sent << " bits)\n"
            << "formula rate: " << fixed(r.formula_rate, 4) << "  (mean of per-path rates)\n";
  return 0;
}

struct InfoOpts {
  std::string key;
  bool bitcount = false;
  unsigned security_bits = 0;
  std::size_t l = 2;
  std::optional<double> delta;
  std::optional<std::size_t> w;
};

int run_info(const InfoOpts& o) {
  if (!o.key.empty()) {
    const Bytes data = crypto::read_file(o.key);
    try {
      const auto pub = crypto::parse_public_key(data);
      const auto& p = pub.params();
      std::cout << "public key, preset " << p.name << ": " << p.k << "x" << p.n << " matrix, t=" << p.t
                << " b=" << p.b << "\n";
    } catch (const FormatError&) {
      const auto priv = crypto::parse_private_key(data);
      const auto& p = priv.params();
      std::cout << "private key, preset " << p.name << ": GF(2^" << p.d << "), n=" << p.n << " k=" << p.k
                << " t=" << p.t << " b=" << p.b << "\n";
    }
    return 0;
  }
  if (o.bitcount) {
    const auto r = analysis::bitcount_example_check();
    std::cout << "1443*log2(3)           = " << fixed(r.log2_field, 2) << " bits\n"
              << "2960 + 1443*log2(3)    = " << fixed(r.continuous_total, 2) << " bits\n"
              << "McEliece 2-path total  = " << r.mceliece_total << " bits, rate " << fixed(r.mceliece_rate, 4) << "\n"
              << "RSA 2-path total       = " << r.rsa_total << " bits, rate " << fixed(r.rsa_rate, 4) << "\n"
              << "systematic key (k(n-k)) = " << r.systematic_key_bits << " bits\n";
    return 0;
  }
  if (o.security_bits) {
    const std::size_t w = o.w.value_or(o.l - 1);
    const auto r = o.delta ? analysis::security_level(o.security_bits, o.l, *o.delta, w)
                           : analysis::security_level(o.security_bits, o.l, analysis::DeltaMode::kFormula, w);
    std::cout << "b=" << r.b << " l=" << r.l << " delta=" << r.delta << " (" << analysis::delta_mode_name(r.mode)
              << ", K=" << analysis::delta_constant() << ")\n";
    if (r.vacuous()) {
      std::cout << "bound vacuous: delta >= 2^b\n";
      return 0;
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "approx level b - %.6g\nexact level  b - %.6g\n", r.approx_deficit, r.exact_deficit);
    std::cout << buf << "f_IS=" << r.f_is << " f_crypto=" << r.f_crypto << "\n";
    return 0;
  }
  std::printf("%-12s %3s %6s %6s %4s %4s\n", "preset", "d", "n", "k", "t", "b");
  for (const auto& p : crypto::all_presets())
    std::printf("%-12s %3u %6zu %6zu %4u %4u\n", p.name.c_str(), p.d, p.n, p.k, p.t, p.b);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hybrid network-coding cryptosystem tools"};
  app.require_subcommand(1);
  std::function<int()> action;

  KeygenOpts kg;
  auto* keygen = app.add_subcommand("keygen", "generate a McEliece key pair");
  keygen->add_option("--preset", kg.preset, "parameter preset")->required();
  keygen->add_option("--seed", kg.seed, "hex seed")->required();
  keygen->add_option("--out", kg.out, "output basename (.pub/.key)")->required();
  keygen->callback([&] { action = [&] { return run_keygen(kg); }; });

  PipelineOpts en, de;
  auto add_pipeline = [](CLI::App* sc, PipelineOpts& o) {
    sc->add_option("--paths", o.paths, "number of paths l")->required();
    sc->add_option("--encrypted", o.encrypted, "number of encrypted paths c")->required();
    sc->add_option("--u", o.u, "field degree (GF(2^u), u >= l; default l)");
    sc->add_option("--code-seed", o.code_seed, "IS code seed");
    sc->add_flag("--virtual-single-path", o.single, "one framed blob instead of l files");
  };
  auto* encode = app.add_subcommand("encode", "split and encrypt a file over l paths");
  add_pipeline(encode, en);
  encode->add_option("--in", en.in, "input file")->required();
  encode->add_option("--pub", en.keyfile, "public key file")->required();
  encode->add_option("--out", en.out, "output directory")->required();
  encode->add_option("--seed", en.seed, "hex seed for encryption randomness")->required();
  encode->callback([&] { action = [&] { return run_encode(en); }; });

  auto* decode = app.add_subcommand("decode", "reassemble a file from its path payloads");
  add_pipeline(decode, de);
  decode->add_option("--in", de.in, "directory written by encode")->required();
  decode->add_option("--key", de.keyfile, "private key file")->required();
  decode->add_option("--out", de.out, "output file")->required();
  decode->callback([&] { action = [&] { return run_decode(de); }; });

  SimulateOpts sim;
  auto* simulate = app.add_subcommand("simulate", "run a network scenario");
  simulate->add_option("--scenario", sim.scenario, "scenario key/value file")->required();
  simulate->add_flag("--csv", sim.csv);
  simulate->callback([&] { action = [&] { return run_simulate(sim); }; });

  VerifyOpts ver;
  auto* verify = app.add_subcommand("verify-secrecy", "check individual secrecy of a code");
  verify->add_option("--l", ver.l, "code length");
  verify->add_option("--c", ver.c, "encrypted rows; w = l - c");
  verify->add_option("--u", ver.u, "GF(2^u)");
  verify->add_option("--field", ver.field, "field order q or p^m");
  verify->add_option("--matrix", ver.matrix, "explicit generator, rows separated by ';'");
  verify->add_option("--code-seed", ver.code_seed, "seed for the built code");
  verify->add_flag("--sampled", ver.sampled, "Monte Carlo instead of enumeration");
  verify->add_option("--trials", ver.trials, "sampled messages");
  verify->add_option("--seed", ver.sample_seed, "hex seed for sampling");
  verify->callback([&] { action = [&] { return run_verify(ver); }; });

  SweepOpts sw;
  auto* sweep = app.add_subcommand("sweep", "rate/security table over c = 0..l");
  sweep->add_option("--preset", sw.preset)->required();
  sweep->add_option("--l", sw.l)->required();
  sweep->add_option("--w", sw.w, "secrecy parameter for f_IS (default l-1)");
  sweep->add_flag("--csv", sw.csv);
  sweep->callback([&] { action = [&] { return run_sweep(sw); }; });

  RateOpts rt;
  auto* ratec = app.add_subcommand("rate", "information rate");
  ratec->add_option("--l", rt.l)->required();
  ratec->add_option("--c", rt.c)->required();
  ratec->add_option("--kb", rt.kb)->required();
  ratec->add_option("--nb", rt.nb)->required();
  ratec->add_flag("--csv", rt.csv);
  ratec->callback([&] { action = [&] { return run_rate(rt); }; });

  InfoOpts inf;
  auto* info = app.add_subcommand("info", "presets, key files, worked examples, security level");
  info->add_option("--key", inf.key, "describe a key file");
  info->add_flag("--bitcount", inf.bitcount, "two-path bit-count example");
  info->add_option("--security-bits", inf.security_bits, "security level b of the cipher");
  info->add_option("--l", inf.l, "paths, for --security-bits");
  info->add_option("--delta", inf.delta, "explicit operation count");
  info->add_option("--w", inf.w, "secrecy parameter, for --security-bits");
  info->callback([&] { action = [&] { return run_info(inf); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
