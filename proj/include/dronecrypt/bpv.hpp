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
#include <utility>
#include <vector>

#include "dronecrypt/group.hpp"

namespace dronecrypt {

struct BpvParams {
  uint32_t k = 1024;
  uint16_t v = 16;
  CurveId curve = CurveId::FastEdwards;
};

struct BpvEntry {
  Scalar r;      // r'_i, uniform in [1, n-1]
  GroupPoint R;  // r'_i * G, kept in affine form (z = 1)
};

// Precomputation table: k pairs generated offline. The scalars are the
// sensitive half; the file format stores them in cleartext, so at-rest
// protection of the table file is a deployment responsibility.
struct BpvTable {
  BpvParams params;
  std::vector<BpvEntry> entries;
};

// Offline phase: k fresh pairs. Requires 2 < v < k.
BpvTable bpv_offline(const BpvParams& params, Rng& rng);

// Online phase: pick a uniform v-subset S of distinct indices and fold it,
//   r = sum r'_i mod n,  R = sum R'_i  (v-1 point additions, no scalar
// multiplication). Resamples the whole subset in the r = 0 case.
std::pair<Scalar, GroupPoint> bpv_online(const BpvTable& table, Rng& rng);

// True iff params hold and every entry satisfies R'_i = r'_i * G.
bool verify_table(const BpvTable& table);

// File format, bit-exact:
//   "BPVT" | version u8 = 1 | curve_id u8 | k u32 LE | v u16 LE |
//   reserved 4 zero bytes | k * (scalar 32 LE | point 33 compressed).
// No trailing bytes. table_load re-validates with verify_table.
Bytes table_serialize(const BpvTable& table);
BpvTable table_parse(BytesView data);  // structural checks only
void table_save(const BpvTable& table, const std::string& path);
BpvTable table_load(const std::string& path);

}  // namespace dronecrypt
