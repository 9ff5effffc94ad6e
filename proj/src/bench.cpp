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

#include "dronecrypt/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "dronecrypt/aes.hpp"
#include "dronecrypt/aes_gcm.hpp"
#include "dronecrypt/chacha20.hpp"
#include "dronecrypt/chachapoly.hpp"
#include "dronecrypt/ecies.hpp"
#include "dronecrypt/hmac_sha256.hpp"
#include "dronecrypt/kex.hpp"
#include "dronecrypt/poly1305.hpp"
#include "dronecrypt/rng.hpp"
#include "dronecrypt/sigs.hpp"

#if defined(__linux__)
#include <sched.h>
#endif

namespace dronecrypt {

double estimate_energy(const EnergyModel& model, double seconds) {
  if (!(model.volts > 0.0) || !(model.amps > 0.0)) {
    throw Error("energy model needs positive volts and amps");
  }
  if (seconds < 0.0) {
    throw Error("cannot estimate energy for a negative duration");
  }
  return model.volts * model.amps * seconds;
}

void pin_to_one_cpu() {
#if defined(__linux__)
  cpu_set_t set;
  CPU_ZERO(&set);
  CPU_SET(0, &set);
  // Best effort: a denied affinity call just leaves scheduling to the OS.
  (void)sched_setaffinity(0, sizeof(set), &set);
#endif
}

namespace {

// Keeps the optimizer from deleting measured work.
volatile uint8_t g_sink = 0;

// Median of per-operation wall times. Sub-20us operations run in timed
// batches so a single sample stays well above clock granularity; the
// batch size is fixed after warmup so every sample measures the same
// loop.
template <typename F>
double measure_median(F&& fn, uint64_t iters) {
  if (iters == 0) {
    throw Error("bench needs a positive iteration count");
  }
  for (int i = 0; i < 100; ++i) {
    g_sink = g_sink ^ fn();
  }
  auto probe_start = std::chrono::steady_clock::now();
  g_sink = g_sink ^ fn();
  auto probe_stop = std::chrono::steady_clock::now();
  double probe = std::chrono::duration<double>(probe_stop - probe_start).count();
  constexpr double kMinSampleSeconds = 20e-6;
  uint64_t batch = 1;
  if (probe < kMinSampleSeconds) {
    double est = probe < 1e-9 ? 1e-9 : probe;
    batch = std::min<uint64_t>(10000, static_cast<uint64_t>(kMinSampleSeconds / est) + 1);
  }
  std::vector<double> samples(static_cast<size_t>(iters));
  for (auto& sample : samples) {
    auto start = std::chrono::steady_clock::now();
    for (uint64_t b = 0; b < batch; ++b) {
      g_sink = g_sink ^ fn();
    }
    auto stop = std::chrono::steady_clock::now();
    sample = std::chrono::duration<double>(stop - start).count() / static_cast<double>(batch);
  }
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

// One record: ops counted over a single untimed run (the counts are
// input-independent), then the timed median.
template <typename F>
BenchRecord bench_op(const char* name, const char* bandwidth, const BenchOptions& opt, F&& fn) {
  BenchRecord rec;
  rec.name = name;
  rec.bandwidth = bandwidth;
  rec.iterations = opt.iters;
  op_counts_reset();
  g_sink = g_sink ^ fn();
  OpCounts counts = op_counts_snapshot();
  rec.scalar_muls = counts.scalar_muls;
  rec.point_adds = counts.point_adds;
  rec.median_time = measure_median(fn, opt.iters);
  rec.energy = estimate_energy(opt.model, rec.median_time);
  return rec;
}

// Independent deterministic stream per record so reordering records
// never changes any record's inputs.
SeededRng record_rng(uint64_t seed, uint8_t tag) {
  uint8_t buf[9];
  store_le64(buf, seed);
  buf[8] = tag;
  return SeededRng(BytesView(buf, sizeof(buf)));
}

uint8_t digest_byte(BytesView b) { return b.empty() ? 0 : b[0]; }

struct PkFixture {
  CurveId base = CurveId::BaselineWeierstrass;
  CurveId fast;
  KeyPair alice_base;
  KeyPair bob_base;
  KeyPair alice_fast;
  KeyPair bob_fast;
  Bytes msg;
  EcdsaSignature ecdsa_sig;
  SchnorrSignature bpv_sig;
  SchnorrSignature std_sig;
  EciesCiphertext ct_base;
  EciesCiphertext ct_fast;
};

void require_table(const BenchOptions& opt) {
  if (opt.table == nullptr) {
    throw Error("BPV rows need a precomputed table");
  }
  if (opt.table->params.curve != opt.fast_curve) {
    throw Error("BPV table curve does not match the selected fast curve");
  }
}

PkFixture make_pk_fixture(const BenchOptions& opt) {
  PkFixture fix;
  fix.fast = opt.fast_curve;
  SeededRng rng = record_rng(opt.seed, 0);
  fix.alice_base = ecdh_keygen(fix.base, rng);
  fix.bob_base = ecdh_keygen(fix.base, rng);
  fix.alice_fast = ecdh_keygen(fix.fast, rng);
  fix.bob_fast = ecdh_keygen(fix.fast, rng);
  fix.msg = rng.bytes(opt.msg_size);
  fix.ecdsa_sig = ecdsa_sign(fix.msg, fix.alice_base, rng);
  fix.bpv_sig = schnorr_sign(fix.msg, fix.alice_fast, rng, opt.table);
  fix.std_sig = schnorr_sign(fix.msg, fix.alice_fast, rng);
  fix.ct_base = ecies_encrypt(fix.msg, fix.bob_base.Y, rng, SymSuite::Standard);
  fix.ct_fast = ecies_encrypt(fix.msg, fix.bob_fast.Y, rng, SymSuite::Light, opt.table);
  return fix;
}

constexpr const char* kBwPoint = "32";
constexpr const char* kBwSig = "64";
constexpr const char* kBwEcies = "32+|c|+|MAC|";
constexpr const char* kBwNone = "-";

}  // namespace

std::vector<BenchRecord> run_pk_suite(const BenchOptions& opt) {
  require_table(opt);
  pin_to_one_cpu();
  PkFixture fix = make_pk_fixture(opt);
  std::vector<BenchRecord> recs;

  // Standard framework rows, baseline curve. ECDH rows time keygen +
  // derive together; run_pk_detail reports the split.
  recs.push_back(bench_op("ECDH", kBwPoint, opt, [&fix, rng = record_rng(opt.seed, 1)]() mutable {
    KeyPair eph = ecdh_keygen(fix.base, rng);
    return digest_byte(ecdh_derive(eph.y, fix.bob_base.Y));
  }));
  recs.push_back(bench_op("ECDSA-Sign", kBwSig, opt, [&fix, rng = record_rng(opt.seed, 2)]() mutable {
    EcdsaSignature sig = ecdsa_sign(fix.msg, fix.alice_base, rng);
    return static_cast<uint8_t>(sig.s.v.w[0]);
  }));
  recs.push_back(bench_op("ECDSA-Verify", kBwSig, opt, [&fix]() {
    return static_cast<uint8_t>(ecdsa_verify(fix.msg, fix.ecdsa_sig, fix.alice_base.Y));
  }));
  recs.push_back(
      bench_op("ECIES-Encrypt", kBwEcies, opt, [&fix, rng = record_rng(opt.seed, 3)]() mutable {
        EciesCiphertext ct = ecies_encrypt(fix.msg, fix.bob_base.Y, rng, SymSuite::Standard);
        return digest_byte(ct.d);
      }));
  recs.push_back(bench_op("ECIES-Decrypt", kBwEcies, opt, [&fix]() {
    std::optional<Bytes> pt = ecies_decrypt(fix.bob_base, fix.ct_base);
    return pt ? static_cast<uint8_t>(1 ^ digest_byte(*pt)) : uint8_t{0};
  }));

  // Optimized framework rows, fast curve, BPV nonces.
  const BpvTable* table = opt.table;
  recs.push_back(
      bench_op("BPV-ECDH", kBwPoint, opt, [&fix, table, rng = record_rng(opt.seed, 4)]() mutable {
        KeyPair eph = ecdh_keygen(fix.fast, rng, table);
        return digest_byte(ecdh_derive(eph.y, fix.bob_fast.Y));
      }));
  recs.push_back(
      bench_op("BPV-Schnorr-Sign", kBwSig, opt, [&fix, table, rng = record_rng(opt.seed, 5)]() mutable {
        SchnorrSignature sig = schnorr_sign(fix.msg, fix.alice_fast, rng, table);
        return static_cast<uint8_t>(sig.s.v.w[0]);
      }));
  recs.push_back(bench_op("BPV-Schnorr-Verify", kBwSig, opt, [&fix]() {
    return static_cast<uint8_t>(schnorr_verify(fix.msg, fix.bpv_sig, fix.alice_fast.Y));
  }));
  recs.push_back(
      bench_op("BPV-ECIES-Encrypt", kBwEcies, opt, [&fix, table, rng = record_rng(opt.seed, 6)]() mutable {
        EciesCiphertext ct = ecies_encrypt(fix.msg, fix.bob_fast.Y, rng, SymSuite::Light, table);
        return digest_byte(ct.d);
      }));
  recs.push_back(bench_op("BPV-ECIES-Decrypt", kBwEcies, opt, [&fix]() {
    std::optional<Bytes> pt = ecies_decrypt(fix.bob_fast, fix.ct_fast);
    return pt ? static_cast<uint8_t>(1 ^ digest_byte(*pt)) : uint8_t{0};
  }));
  return recs;
}

std::vector<BenchRecord> run_pk_detail(const BenchOptions& opt) {
  require_table(opt);
  pin_to_one_cpu();
  PkFixture fix = make_pk_fixture(opt);
  const BpvTable* table = opt.table;
  std::vector<BenchRecord> recs;

  recs.push_back(bench_op("ECDH-Keygen", kBwPoint, opt, [&fix, rng = record_rng(opt.seed ^ 0x80, 1)]() mutable {
    return static_cast<uint8_t>(ecdh_keygen(fix.base, rng).y.v.w[0]);
  }));
  recs.push_back(bench_op("ECDH-Derive", kBwPoint, opt, [&fix]() {
    return digest_byte(ecdh_derive(fix.alice_base.y, fix.bob_base.Y));
  }));
  recs.push_back(
      bench_op("BPV-ECDH-Keygen", kBwPoint, opt, [&fix, table, rng = record_rng(opt.seed ^ 0x80, 2)]() mutable {
        return static_cast<uint8_t>(ecdh_keygen(fix.fast, rng, table).y.v.w[0]);
      }));
  recs.push_back(bench_op("BPV-ECDH-Derive", kBwPoint, opt, [&fix]() {
    return digest_byte(ecdh_derive(fix.alice_fast.y, fix.bob_fast.Y));
  }));

  // Standard Schnorr on the same fast curve: the baseline against which
  // the BPV signing speedup is measured.
  recs.push_back(
      bench_op("Schnorr-Sign", kBwSig, opt, [&fix, rng = record_rng(opt.seed ^ 0x80, 3)]() mutable {
        SchnorrSignature sig = schnorr_sign(fix.msg, fix.alice_fast, rng);
        return static_cast<uint8_t>(sig.s.v.w[0]);
      }));
  recs.push_back(bench_op("Schnorr-Verify", kBwSig, opt, [&fix]() {
    return static_cast<uint8_t>(schnorr_verify(fix.msg, fix.std_sig, fix.alice_fast.Y));
  }));
  return recs;
}

std::vector<BenchRecord> run_sym_suite(const BenchOptions& opt) {
  pin_to_one_cpu();
  SeededRng rng = record_rng(opt.seed, 16);
  Bytes key16 = rng.bytes(16);
  Bytes key32 = rng.bytes(32);
  Bytes iv16 = rng.bytes(16);
  Bytes nonce12 = rng.bytes(12);
  Bytes msg = rng.bytes(opt.msg_size);
  Bytes empty;
  std::vector<BenchRecord> recs;

  // "AES" is AES-128 in CTR mode, the cipher the standard ECIES profile
  // uses for bulk data.
  recs.push_back(bench_op("AES", kBwNone, opt, [&]() {
    return digest_byte(aes_ctr_xor(key16, iv16, msg));
  }));
  recs.push_back(bench_op("AES-GCM", kBwNone, opt, [&]() {
    return digest_byte(aes_gcm_seal(key16, nonce12, empty, msg).tag);
  }));
  recs.push_back(bench_op("HMAC", kBwNone, opt, [&]() {
    return digest_byte(hmac_sha256(key32, msg));
  }));
  recs.push_back(bench_op("CHACHA20", kBwNone, opt, [&]() {
    return digest_byte(chacha20_xor(key32, nonce12, 0, msg));
  }));
  recs.push_back(bench_op("CHACHA-POLY", kBwNone, opt, [&]() {
    return digest_byte(chachapoly_seal(key32, nonce12, empty, msg).tag);
  }));
  recs.push_back(bench_op("POLY1305", kBwNone, opt, [&]() {
    return digest_byte(poly1305_tag(key32, msg));
  }));
  return recs;
}

std::vector<BenchRecord> run_suite(BenchSuite suite, const BenchOptions& opt) {
  switch (suite) {
    case BenchSuite::Pk:
      return run_pk_suite(opt);
    case BenchSuite::Sym:
      return run_sym_suite(opt);
    case BenchSuite::All: {
      std::vector<BenchRecord> recs = run_pk_suite(opt);
      std::vector<BenchRecord> sym = run_sym_suite(opt);
      recs.insert(recs.end(), sym.begin(), sym.end());
      return recs;
    }
  }
  throw Error("unknown bench suite");
}

namespace {

const char kCsvHeader[] = "name,time_ms,energy_mj,bandwidth_bytes,scalar_muls,point_adds,iterations";

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

double parse_double(const std::string& s) {
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') {
    throw Error("malformed number in bench CSV: " + s);
  }
  return v;
}

uint64_t parse_u64(const std::string& s) {
  char* end = nullptr;
  unsigned long long v = std::strtoull(s.c_str(), &end, 10);
  if (end == s.c_str() || *end != '\0') {
    throw Error("malformed count in bench CSV: " + s);
  }
  return v;
}

}  // namespace

std::string emit_csv(const std::vector<BenchRecord>& records) {
  std::string out = kCsvHeader;
  out += '\n';
  char buf[256];
  for (const BenchRecord& r : records) {
    // %.17g so parse_csv(emit_csv(x)) reproduces the doubles exactly.
    std::snprintf(buf, sizeof(buf), "%s,%.17g,%.17g,%s,%" PRIu64 ",%" PRIu64 ",%" PRIu64 "\n",
                  r.name.c_str(), r.median_time * 1e3, r.energy * 1e3, r.bandwidth.c_str(),
                  r.scalar_muls, r.point_adds, r.iterations);
    out += buf;
  }
  return out;
}

std::vector<BenchRecord> parse_csv(const std::string& text) {
  std::vector<std::string> lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) {
    lines.pop_back();
  }
  if (lines.empty() || lines[0] != kCsvHeader) {
    throw Error("bench CSV header mismatch");
  }
  std::vector<BenchRecord> out;
  for (size_t i = 1; i < lines.size(); ++i) {
    if (!lines[i].empty() && lines[i][0] == '#') {
      continue;  // comment rows carry context, not data
    }
    std::vector<std::string> f = split(lines[i], ',');
    if (f.size() != 7) {
      throw Error("bench CSV row needs 7 fields");
    }
    BenchRecord r;
    r.name = f[0];
    r.median_time = parse_double(f[1]) / 1e3;
    r.energy = parse_double(f[2]) / 1e3;
    r.bandwidth = f[3];
    r.scalar_muls = parse_u64(f[4]);
    r.point_adds = parse_u64(f[5]);
    r.iterations = parse_u64(f[6]);
    out.push_back(std::move(r));
  }
  return out;
}

std::string emit_markdown(const std::vector<BenchRecord>& records) {
  std::string out =
      "| Algorithm | Time (ms) | Energy (mJ) | Bandwidth (bytes) | Scalar mults | Point adds | "
      "Iterations |\n"
      "|---|---:|---:|---|---:|---:|---:|\n";
  char buf[256];
  for (const BenchRecord& r : records) {
    std::string bw;
    for (char c : r.bandwidth) {  // escape pipes so table cells survive
      if (c == '|') {
        bw += '\\';
      }
      bw += c;
    }
    std::snprintf(buf, sizeof(buf), "| %s | %.4f | %.4f | %s | %" PRIu64 " | %" PRIu64 " | %" PRIu64
                  " |\n",
                  r.name.c_str(), r.median_time * 1e3, r.energy * 1e3, bw.c_str(), r.scalar_muls,
                  r.point_adds, r.iterations);
    out += buf;
  }
  return out;
}

}  // namespace dronecrypt
