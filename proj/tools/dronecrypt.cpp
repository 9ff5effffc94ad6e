/*
 * Copyright (C) 2026 The Dronecrypt Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// dronecrypt command-line front end.
//
// Exit codes: 0 success; 1 verification/MAC failure (the command prints
// INVALID); 2 usage or I/O errors. Secrets travel in files, never argv;
// the deterministic --seed flag exists only in builds configured with
// DRONECRYPT_ENABLE_SEED and is for reproducible tests, not production.

#include <cstdio>
#include <cstdlib>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dronecrypt/bench.hpp"
#include "dronecrypt/bpv.hpp"
#include "dronecrypt/ecies.hpp"
#include "dronecrypt/io.hpp"
#include "dronecrypt/kex.hpp"
#include "dronecrypt/keyfile.hpp"
#include "dronecrypt/rng.hpp"
#include "dronecrypt/sha256.hpp"
#include "dronecrypt/sigs.hpp"

namespace dc = dronecrypt;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

std::unique_ptr<dc::Rng> make_cli_rng(const std::string& seed) {
#if defined(DRONECRYPT_ENABLE_SEED)
  if (!seed.empty()) {
    return std::make_unique<dc::SeededRng>(dc::as_bytes(seed));
  }
#else
  (void)seed;
#endif
  return std::make_unique<dc::SystemRng>();
}

// --table beats the DRONECRYPT_TABLE environment default; empty means no
// table anywhere.
std::string resolve_table_path(const std::string& flag) {
  if (!flag.empty()) {
    return flag;
  }
  const char* env = std::getenv("DRONECRYPT_TABLE");
  return env != nullptr ? std::string(env) : std::string();
}

int invalid() {
  std::printf("INVALID\n");
  return kExitInvalid;
}

struct KeygenArgs {
  dc::CurveId curve = dc::CurveId::FastEdwards;
  std::string out;
  std::string pub;
  std::string seed;
  bool hex = false;
};

int cmd_keygen(const KeygenArgs& a) {
  auto rng = make_cli_rng(a.seed);
  dc::KeyPair kp = dc::ecdh_keygen(a.curve, *rng);
  dc::save_private_key(kp.y, a.out);
  dc::save_public_key(kp.Y, a.pub);
  std::printf("wrote %s (private) and %s (public) on %s\n", a.out.c_str(), a.pub.c_str(),
              dc::curve_name(a.curve));
  if (a.hex) {
    std::printf("pub %s\n", dc::to_hex(dc::point_serialize(kp.Y)).c_str());
  }
  return kExitOk;
}

struct TableGenArgs {
  dc::CurveId curve = dc::CurveId::FastEdwards;
  uint32_t k = 1024;
  uint16_t v = 16;
  std::string out;
  std::string seed;
};

int cmd_table_gen(const TableGenArgs& a) {
  auto rng = make_cli_rng(a.seed);
  dc::BpvTable table = dc::bpv_offline(dc::BpvParams{a.k, a.v, a.curve}, *rng);
  dc::table_save(table, a.out);
  std::printf("wrote %s: k=%u v=%u curve=%s\n", a.out.c_str(), a.k, unsigned{a.v},
              dc::curve_name(a.curve));
  return kExitOk;
}

int cmd_table_verify(const std::string& table_flag) {
  std::string path = resolve_table_path(table_flag);
  if (path.empty()) {
    std::fprintf(stderr, "error: no table path (give --table or set DRONECRYPT_TABLE)\n");
    return kExitUsage;
  }
  dc::Bytes data = dc::read_file(path);  // missing/unreadable file is an I/O error
  try {
    dc::BpvTable table = dc::table_parse(data);
    if (!dc::verify_table(table)) {
      return invalid();
    }
    std::printf("OK k=%u v=%u curve=%s\n", table.params.k, unsigned{table.params.v},
                dc::curve_name(table.params.curve));
    return kExitOk;
  } catch (const dc::Error&) {
    return invalid();
  }
}

struct SignArgs {
  std::string key;
  std::string msg;
  std::string out;
  std::string table;
  std::string alg = "schnorr";
  std::string seed;
  bool hex = false;
};

int cmd_sign(const SignArgs& a) {
  dc::KeyPair key = dc::keypair_from_private(dc::load_private_key(a.key));
  dc::Bytes msg = dc::read_file(a.msg);
  auto rng = make_cli_rng(a.seed);
  dc::Bytes sig;
  if (a.alg == "ecdsa") {
    if (!a.table.empty()) {
      std::fprintf(stderr, "error: --table applies to Schnorr signing only\n");
      return kExitUsage;
    }
    sig = dc::ecdsa_sig_serialize(dc::ecdsa_sign(msg, key, *rng));
  } else {
    std::string tp = resolve_table_path(a.table);
    std::optional<dc::BpvTable> table;
    if (!tp.empty()) {
      table = dc::table_load(tp);
    }
    sig = dc::schnorr_sig_serialize(
        dc::schnorr_sign(msg, key, *rng, table ? &*table : nullptr));
  }
  dc::write_file(a.out, sig);
  if (a.hex) {
    std::printf("%s\n", dc::to_hex(sig).c_str());
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string pub;
  std::string msg;
  std::string sig;
  std::string alg = "schnorr";
};

int cmd_verify(const VerifyArgs& a) {
  dc::GroupPoint Y = dc::load_public_key(a.pub);
  dc::Bytes msg = dc::read_file(a.msg);
  dc::Bytes sig = dc::read_file(a.sig);
  try {
    bool ok;
    if (a.alg == "ecdsa") {
      ok = dc::ecdsa_verify(msg, dc::ecdsa_sig_deserialize(sig), Y);
    } else {
      ok = dc::schnorr_verify(msg, dc::schnorr_sig_deserialize(sig, Y.curve), Y);
    }
    if (ok) {
      std::printf("OK\n");
      return kExitOk;
    }
  } catch (const dc::Error&) {
    // malformed signature bytes are a verification failure, not an I/O one
  }
  return invalid();
}

struct EncryptArgs {
  std::string pub;
  std::string msg;
  std::string out;
  std::string suite;  // empty = pick by curve
  std::string table;
  std::string seed;
  bool hex = false;
};

int cmd_encrypt(const EncryptArgs& a) {
  dc::GroupPoint Y = dc::load_public_key(a.pub);
  dc::Bytes msg = dc::read_file(a.msg);
  dc::SymSuite suite;
  if (a.suite.empty()) {
    // Default pairing: standard suite with the baseline curve, light
    // suite with the fast curve.
    suite = Y.curve == dc::CurveId::BaselineWeierstrass ? dc::SymSuite::Standard
                                                        : dc::SymSuite::Light;
  } else {
    suite = a.suite == "standard" ? dc::SymSuite::Standard : dc::SymSuite::Light;
  }
  std::string tp = resolve_table_path(a.table);
  std::optional<dc::BpvTable> table;
  if (!tp.empty()) {
    table = dc::table_load(tp);
  }
  auto rng = make_cli_rng(a.seed);
  dc::EciesCiphertext ct = dc::ecies_encrypt(msg, Y, *rng, suite, table ? &*table : nullptr);
  dc::Bytes wire = dc::ecies_serialize(ct);
  dc::write_file(a.out, wire);
  if (a.hex) {
    std::printf("%s\n", dc::to_hex(wire).c_str());
  }
  return kExitOk;
}

struct DecryptArgs {
  std::string key;
  std::string in;
  std::string out;
  bool hex = false;
};

int cmd_decrypt(const DecryptArgs& a) {
  dc::KeyPair key = dc::keypair_from_private(dc::load_private_key(a.key));
  dc::Bytes wire = dc::read_file(a.in);
  try {
    dc::EciesCiphertext ct = dc::ecies_parse(wire);
    std::optional<dc::Bytes> pt = dc::ecies_decrypt(key, ct);
    if (pt) {
      dc::write_file(a.out, *pt);
      if (a.hex) {
        std::printf("%s\n", dc::to_hex(*pt).c_str());
      }
      return kExitOk;
    }
  } catch (const dc::Error&) {
    // malformed ciphertext counts as INVALID, same as a failed MAC
  }
  return invalid();
}

struct KxDemoArgs {
  dc::CurveId curve = dc::CurveId::FastEdwards;
  std::string mode_a = "standard";
  std::string mode_b = "standard";
  std::string table;
  std::string seed;
};

int cmd_kx_demo(const KxDemoArgs& a) {
  bool need_table = a.mode_a == "bpv" || a.mode_b == "bpv";
  std::optional<dc::BpvTable> table;
  if (need_table) {
    std::string tp = resolve_table_path(a.table);
    if (tp.empty()) {
      std::fprintf(stderr, "error: bpv mode needs --table or DRONECRYPT_TABLE\n");
      return kExitUsage;
    }
    table = dc::table_load(tp);
    if (table->params.curve != a.curve) {
      std::fprintf(stderr, "error: table curve %s does not match --curve %s\n",
                   dc::curve_name(table->params.curve), dc::curve_name(a.curve));
      return kExitUsage;
    }
  }
  auto rng = make_cli_rng(a.seed);
  dc::KeyPair alice = dc::ecdh_keygen(a.curve, *rng, a.mode_a == "bpv" ? &*table : nullptr);
  dc::KeyPair bob = dc::ecdh_keygen(a.curve, *rng, a.mode_b == "bpv" ? &*table : nullptr);
  dc::SharedSecret sa = dc::ecdh_derive(alice.y, bob.Y);
  dc::SharedSecret sb = dc::ecdh_derive(bob.y, alice.Y);
  std::printf("A (%s): %s\n", a.mode_a.c_str(), dc::to_hex(sa).c_str());
  std::printf("B (%s): %s\n", a.mode_b.c_str(), dc::to_hex(sb).c_str());
  if (sa == sb) {
    std::printf("OK shared secrets match\n");
    return kExitOk;
  }
  return invalid();
}

struct BenchArgs {
  std::string suite = "all";
  dc::CurveId curve = dc::CurveId::FastEdwards;
  std::string table;
  uint64_t iters = 1000;
  double volts = 3.3;
  double amps = 0.040;
  std::string format = "csv";
  uint64_t msg_size = 32;
  std::string seed;
};

const dc::BenchRecord* find_record(const std::vector<dc::BenchRecord>& recs, const char* name) {
  for (const dc::BenchRecord& r : recs) {
    if (r.name == name) {
      return &r;
    }
  }
  return nullptr;
}

std::string ratio_line(const char* label, const dc::BenchRecord* num, const dc::BenchRecord* den) {
  char buf[160];
  if (num == nullptr || den == nullptr || den->median_time <= 0) {
    return std::string();
  }
  std::snprintf(buf, sizeof(buf), "%s: %.2fx\n", label, num->median_time / den->median_time);
  return std::string(buf);
}

int cmd_bench(const BenchArgs& a) {
  dc::BenchOptions opt;
  opt.fast_curve = a.curve;
  opt.iters = a.iters;
  opt.model.volts = a.volts;
  opt.model.amps = a.amps;
  opt.msg_size = static_cast<size_t>(a.msg_size);
  if (!a.seed.empty()) {
    dc::Bytes h = dc::sha256(dc::as_bytes(a.seed));
    uint64_t s = 0;
    for (int i = 7; i >= 0; --i) {
      s = (s << 8) | h[static_cast<size_t>(i)];
    }
    opt.seed = s;
  }

  bool want_pk = a.suite != "sym";
  bool want_sym = a.suite != "pk";
  std::optional<dc::BpvTable> table;
  if (want_pk) {
    std::string tp = resolve_table_path(a.table);
    if (!tp.empty()) {
      table = dc::table_load(tp);
      if (table->params.curve != opt.fast_curve) {
        std::fprintf(stderr, "error: table curve %s does not match --curve %s\n",
                     dc::curve_name(table->params.curve), dc::curve_name(opt.fast_curve));
        return kExitUsage;
      }
    } else {
      std::fprintf(stderr, "note: no table given; generating an ephemeral one (k=1024, v=16)\n");
      auto rng = make_cli_rng(a.seed);
      table = dc::bpv_offline(dc::BpvParams{1024, 16, opt.fast_curve}, *rng);
    }
    opt.table = &*table;
  }

  std::vector<dc::BenchRecord> pk, detail, sym;
  if (want_pk) {
    pk = dc::run_pk_suite(opt);
    detail = dc::run_pk_detail(opt);
  }
  if (want_sym) {
    sym = dc::run_sym_suite(opt);
  }

  std::string ratios;
  if (want_pk) {
    ratios += ratio_line("speedup sign, same curve (Schnorr-Sign / BPV-Schnorr-Sign)",
                         find_record(detail, "Schnorr-Sign"), find_record(pk, "BPV-Schnorr-Sign"));
    ratios += ratio_line("speedup sign, combined (baseline ECDSA-Sign / BPV-Schnorr-Sign)",
                         find_record(pk, "ECDSA-Sign"), find_record(pk, "BPV-Schnorr-Sign"));
    ratios += ratio_line("speedup key exchange (ECDH / BPV-ECDH)", find_record(pk, "ECDH"),
                         find_record(pk, "BPV-ECDH"));
    ratios += ratio_line("speedup keygen (ECDH-Keygen / BPV-ECDH-Keygen)",
                         find_record(detail, "ECDH-Keygen"), find_record(detail, "BPV-ECDH-Keygen"));
  }
  if (want_sym) {
    ratios += ratio_line("ratio AES / CHACHA20", find_record(sym, "AES"),
                         find_record(sym, "CHACHA20"));
    ratios += ratio_line("ratio AES-GCM / CHACHA-POLY", find_record(sym, "AES-GCM"),
                         find_record(sym, "CHACHA-POLY"));
    ratios += ratio_line("ratio HMAC / POLY1305", find_record(sym, "HMAC"),
                         find_record(sym, "POLY1305"));
  }

  std::string out;
  if (a.format == "csv") {
    std::vector<dc::BenchRecord> all = pk;
    all.insert(all.end(), detail.begin(), detail.end());
    all.insert(all.end(), sym.begin(), sym.end());
    out = dc::emit_csv(all);
    // Trailing comments survive parse_csv; measured ratios are reported,
    // never asserted.
    size_t start = 0;
    while (start < ratios.size()) {
      size_t end = ratios.find('\n', start);
      if (end == std::string::npos) {
        end = ratios.size();
      }
      out += "# " + ratios.substr(start, end - start) + "\n";
      start = end + 1;
    }
  } else {
    if (want_pk) {
      out += "Public-key suite (10 rows; ECDH rows time keygen + derive):\n\n";
      out += dc::emit_markdown(pk);
      out += "\nSupplementary (ECDH split; standard-nonce Schnorr on the optimized curve):\n\n";
      out += dc::emit_markdown(detail);
      out += "\n";
    }
    if (want_sym) {
      char label[96];
      std::snprintf(label, sizeof(label), "Symmetric suite (%llu-byte messages):\n\n",
                    static_cast<unsigned long long>(a.msg_size));
      out += label;
      out += dc::emit_markdown(sym);
      out += "\n";
    }
    out += ratios;
  }
  std::fputs(out.c_str(), stdout);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dronecrypt: BPV-accelerated elliptic-curve crypto toolkit"};
  app.require_subcommand(1);

  const std::map<std::string, dc::CurveId> curve_names{
      {"baseline", dc::CurveId::BaselineWeierstrass}, {"fast", dc::CurveId::FastEdwards}};
  auto curve_check = CLI::CheckedTransformer(curve_names, CLI::ignore_case);

  KeygenArgs keygen;
  CLI::App* sc_keygen = app.add_subcommand("keygen", "Generate a keypair");
  sc_keygen->add_option("--curve", keygen.curve, "baseline or fast")->transform(curve_check);
  sc_keygen->add_option("-o,--out", keygen.out, "Private key file")->required();
  sc_keygen->add_option("--pub", keygen.pub, "Public key file")->required();
  sc_keygen->add_flag("--hex", keygen.hex, "Print the public key as hex");

  TableGenArgs table_gen;
  CLI::App* sc_table_gen = app.add_subcommand("table-gen", "Generate a BPV table");
  sc_table_gen->add_option("--curve", table_gen.curve, "baseline or fast")->transform(curve_check);
  sc_table_gen->add_option("--k", table_gen.k, "Table size (pairs)");
  sc_table_gen->add_option("--v", table_gen.v, "Subset size per nonce");
  sc_table_gen->add_option("-o,--out", table_gen.out, "Table file")->required();

  std::string table_verify_path;
  CLI::App* sc_table_verify = app.add_subcommand("table-verify", "Check a BPV table");
  sc_table_verify->add_option("-t,--table", table_verify_path,
                              "Table file (default: DRONECRYPT_TABLE)");

  SignArgs sign;
  CLI::App* sc_sign = app.add_subcommand("sign", "Sign a message file");
  sc_sign->add_option("--key", sign.key, "Private key file")->required();
  sc_sign->add_option("-m,--msg", sign.msg, "Message file")->required();
  sc_sign->add_option("-o,--out", sign.out, "Signature file")->required();
  sc_sign->add_option("-t,--table", sign.table,
                      "BPV table for Schnorr nonces (default: DRONECRYPT_TABLE)");
  sc_sign->add_option("--alg", sign.alg, "schnorr or ecdsa")
      ->check(CLI::IsMember({"schnorr", "ecdsa"}));
  sc_sign->add_flag("--hex", sign.hex, "Print the signature as hex");

  VerifyArgs verify;
  CLI::App* sc_verify = app.add_subcommand("verify", "Verify a signature");
  sc_verify->add_option("--pub", verify.pub, "Public key file")->required();
  sc_verify->add_option("-m,--msg", verify.msg, "Message file")->required();
  sc_verify->add_option("-s,--sig", verify.sig, "Signature file")->required();
  sc_verify->add_option("--alg", verify.alg, "schnorr or ecdsa")
      ->check(CLI::IsMember({"schnorr", "ecdsa"}));

  EncryptArgs encrypt;
  CLI::App* sc_encrypt = app.add_subcommand("encrypt", "Encrypt to a public key");
  sc_encrypt->add_option("--pub", encrypt.pub, "Recipient public key file")->required();
  sc_encrypt->add_option("-m,--msg", encrypt.msg, "Plaintext file")->required();
  sc_encrypt->add_option("-o,--out", encrypt.out, "Ciphertext file")->required();
  sc_encrypt->add_option("--suite", encrypt.suite, "standard or light (default: by curve)")
      ->check(CLI::IsMember({"standard", "light"}));
  sc_encrypt->add_option("-t,--table", encrypt.table,
                         "BPV table for the ephemeral point (default: DRONECRYPT_TABLE)");
  sc_encrypt->add_flag("--hex", encrypt.hex, "Print the ciphertext as hex");

  DecryptArgs decrypt;
  CLI::App* sc_decrypt = app.add_subcommand("decrypt", "Decrypt a ciphertext file");
  sc_decrypt->add_option("--key", decrypt.key, "Private key file")->required();
  sc_decrypt->add_option("-i,--in", decrypt.in, "Ciphertext file")->required();
  sc_decrypt->add_option("-o,--out", decrypt.out, "Plaintext file")->required();
  sc_decrypt->add_flag("--hex", decrypt.hex, "Print the plaintext as hex");

  KxDemoArgs kx;
  CLI::App* sc_kx = app.add_subcommand("kx-demo", "Run a two-party key exchange in-process");
  sc_kx->add_option("--curve", kx.curve, "baseline or fast")->transform(curve_check);
  sc_kx->add_option("--mode-a", kx.mode_a, "standard or bpv")
      ->check(CLI::IsMember({"standard", "bpv"}));
  sc_kx->add_option("--mode-b", kx.mode_b, "standard or bpv")
      ->check(CLI::IsMember({"standard", "bpv"}));
  sc_kx->add_option("-t,--table", kx.table, "BPV table (default: DRONECRYPT_TABLE)");

  BenchArgs bench;
  CLI::App* sc_bench = app.add_subcommand("bench", "Run the benchmark suites");
  sc_bench->add_option("--suite", bench.suite, "pk, sym, or all")
      ->check(CLI::IsMember({"pk", "sym", "all"}));
  sc_bench->add_option("--curve", bench.curve, "Backend for the optimized rows")
      ->transform(curve_check);
  sc_bench->add_option("-t,--table", bench.table, "BPV table (default: DRONECRYPT_TABLE)");
  sc_bench->add_option("--iters", bench.iters, "Timed samples per record");
  sc_bench->add_option("--volts", bench.volts, "Supply voltage for the energy model");
  sc_bench->add_option("--amps", bench.amps, "Supply current for the energy model");
  sc_bench->add_option("--format", bench.format, "csv or md")
      ->check(CLI::IsMember({"csv", "md"}));
  sc_bench->add_option("--msg-size", bench.msg_size, "Symmetric message size in bytes");

#if defined(DRONECRYPT_ENABLE_SEED)
  for (CLI::App* sc : {sc_keygen, sc_table_gen, sc_sign, sc_encrypt, sc_kx, sc_bench}) {
    std::string* target = nullptr;
    if (sc == sc_keygen) target = &keygen.seed;
    if (sc == sc_table_gen) target = &table_gen.seed;
    if (sc == sc_sign) target = &sign.seed;
    if (sc == sc_encrypt) target = &encrypt.seed;
    if (sc == sc_kx) target = &kx.seed;
    if (sc == sc_bench) target = &bench.seed;
    sc->add_option("--seed", *target, "Deterministic RNG seed (reproducible test runs only)");
  }
#endif

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(sc_keygen)) return cmd_keygen(keygen);
    if (app.got_subcommand(sc_table_gen)) return cmd_table_gen(table_gen);
    if (app.got_subcommand(sc_table_verify)) return cmd_table_verify(table_verify_path);
    if (app.got_subcommand(sc_sign)) return cmd_sign(sign);
    if (app.got_subcommand(sc_verify)) return cmd_verify(verify);
    if (app.got_subcommand(sc_encrypt)) return cmd_encrypt(encrypt);
    if (app.got_subcommand(sc_decrypt)) return cmd_decrypt(decrypt);
    if (app.got_subcommand(sc_kx)) return cmd_kx_demo(kx);
    if (app.got_subcommand(sc_bench)) return cmd_bench(bench);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
