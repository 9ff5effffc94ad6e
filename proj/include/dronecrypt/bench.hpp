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

#pragma once

#include <string>
#include <vector>

#include "dronecrypt/bpv.hpp"
#include "dronecrypt/group.hpp"

namespace dronecrypt {

struct EnergyModel {
  double volts = 3.3;
  double amps = 0.040;
};

// E = V * I * t. Throws Error on negative time or non-positive model.
double estimate_energy(const EnergyModel& model, double seconds);

struct BenchRecord {
  std::string name;
  double median_time = 0;  // seconds
  uint64_t iterations = 0;
  double energy = 0;  // joules, always volts * amps * median_time
  std::string bandwidth = "-";  // static per scheme: 32, 64, 32+|c|+|MAC|, -
  uint64_t scalar_muls = 0;  // per single operation
  uint64_t point_adds = 0;
};

struct BenchOptions {
  CurveId fast_curve = CurveId::FastEdwards;  // optimized/BPV rows; standard rows
                                              // stay on the baseline curve
  uint64_t iters = 1000;                      // measured samples per record
  EnergyModel model;
  size_t msg_size = 32;
  const BpvTable* table = nullptr;  // needed for BPV rows; run_* throws without it
  uint64_t seed = 1;                // deterministic inputs for the measured ops
};

enum class BenchSuite { Pk, Sym, All };

// The ten headline rows: ECDH, ECDSA-Sign/Verify, ECIES-Encrypt/
// Decrypt (standard, baseline curve) and BPV-ECDH, BPV-Schnorr-Sign/
// Verify, BPV-ECIES-Encrypt/Decrypt (optimized curve). ECDH rows time
// keygen + derive combined.
std::vector<BenchRecord> run_pk_suite(const BenchOptions& opt);

// Supplementary labeled rows: the ECDH split (keygen and derive timed
// separately, both frameworks) plus standard Schnorr on the optimized
// curve, the baseline for the BPV signing speedup ratio.
std::vector<BenchRecord> run_pk_detail(const BenchOptions& opt);

// The six symmetric rows on msg_size-byte messages: AES (CTR mode),
// AES-GCM, HMAC vs CHACHA20, CHACHA-POLY, POLY1305.
std::vector<BenchRecord> run_sym_suite(const BenchOptions& opt);

std::vector<BenchRecord> run_suite(BenchSuite suite, const BenchOptions& opt);

// Columns: name, time_ms, energy_mj, bandwidth_bytes, scalar_muls,
// point_adds, iterations.
std::string emit_csv(const std::vector<BenchRecord>& records);
std::string emit_markdown(const std::vector<BenchRecord>& records);
std::vector<BenchRecord> parse_csv(const std::string& text);  // throws on malformed

// Best-effort: pin the calling thread to one logical CPU; no-op where
// unsupported.
void pin_to_one_cpu();

}  // namespace dronecrypt
