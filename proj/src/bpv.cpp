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

#include "dronecrypt/bpv.hpp"

#include <numeric>

#include "dronecrypt/io.hpp"

namespace dronecrypt {

static void check_params(const BpvParams& p) {
  if (!(2 < p.v && p.v < p.k)) throw Error("BPV params require 2 < v < k");
}

BpvTable bpv_offline(const BpvParams& params, Rng& rng) {
  check_params(params);
  BpvTable t;
  t.params = params;
  t.entries.reserve(params.k);
  GroupPoint g = generator(params.curve);
  for (uint32_t i = 0; i < params.k; ++i) {
    Scalar r = random_scalar(params.curve, rng);
    t.entries.push_back(BpvEntry{r, point_normalize(scalar_mul(r, g))});
  }
  return t;
}

// Uniform integer in [0, bound) by rejection.
static uint32_t uniform_u32(Rng& rng, uint32_t bound) {
  uint32_t limit = uint32_t(-bound) % bound;  // 2^32 mod bound
  for (;;) {
    uint8_t b[4];
    rng.fill(b, 4);
    uint32_t u = load_le32(b);
    if (u >= limit) return u % bound;
  }
}

// Distinct indices via partial Fisher-Yates over [0, k-1].
static std::vector<uint32_t> sample_subset(uint32_t k, uint16_t v, Rng& rng) {
  std::vector<uint32_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0u);
  for (uint32_t i = 0; i < v; ++i) {
    uint32_t j = i + uniform_u32(rng, k - i);
    std::swap(idx[i], idx[j]);
  }
  idx.resize(v);
  return idx;
}

std::pair<Scalar, GroupPoint> bpv_online(const BpvTable& table, Rng& rng) {
  check_params(table.params);
  if (table.entries.size() != table.params.k) throw Error("BPV table entry count mismatch");
  for (;;) {
    std::vector<uint32_t> subset = sample_subset(table.params.k, table.params.v, rng);
    const BpvEntry& first = table.entries[subset[0]];
    Scalar r = first.r;
    GroupPoint R = first.R;
    for (size_t i = 1; i < subset.size(); ++i) {
      const BpvEntry& e = table.entries[subset[i]];
      r = scalar_add(r, e.r);
      R = point_add(R, e.R);
    }
    if (!scalar_is_zero(r)) return {r, R};
    // r = 0 would be a degenerate nonce; draw a fresh subset.
  }
}

bool verify_table(const BpvTable& t) {
  if (!(2 < t.params.v && t.params.v < t.params.k)) return false;
  if (t.entries.size() != t.params.k) return false;
  GroupPoint g = generator(t.params.curve);
  for (const BpvEntry& e : t.entries) {
    if (e.r.curve != t.params.curve || e.R.curve != t.params.curve) return false;
    if (scalar_is_zero(e.r)) return false;
    if (!point_equal(scalar_mul(e.r, g), e.R)) return false;
  }
  return true;
}

static const uint8_t kVersion = 1;

Bytes table_serialize(const BpvTable& t) {
  check_params(t.params);
  Bytes out;
  out.reserve(16 + t.entries.size() * 65);
  const char magic[4] = {'B', 'P', 'V', 'T'};
  append(out, BytesView(reinterpret_cast<const uint8_t*>(magic), 4));
  out.push_back(kVersion);
  out.push_back(uint8_t(t.params.curve));
  uint8_t num[4];
  store_le32(num, t.params.k);
  append(out, BytesView(num, 4));
  store_le32(num, t.params.v);  // low two bytes used
  append(out, BytesView(num, 2));
  out.insert(out.end(), 4, 0);  // reserved
  for (const BpvEntry& e : t.entries) {
    append(out, scalar_serialize(e.r));
    append(out, point_serialize(e.R));
  }
  return out;
}

BpvTable table_parse(BytesView data) {
  if (data.size() < 16) throw Error("BPV table too short");
  if (data[0] != 'B' || data[1] != 'P' || data[2] != 'V' || data[3] != 'T')
    throw Error("bad BPV table magic");
  if (data[4] != kVersion) throw Error("unsupported BPV table version");
  BpvTable t;
  t.params.curve = curve_from_byte(data[5]);
  t.params.k = load_le32(&data[6]);
  t.params.v = uint16_t(data[10] | data[11] << 8);
  check_params(t.params);
  size_t expect = 16 + size_t(t.params.k) * 65;
  if (data.size() != expect) throw Error("BPV table length mismatch");
  t.entries.reserve(t.params.k);
  for (uint32_t i = 0; i < t.params.k; ++i) {
    size_t off = 16 + size_t(i) * 65;
    Scalar r = scalar_deserialize(data.subspan(off, 32), t.params.curve);
    GroupPoint R = point_deserialize(data.subspan(off + 32, 33), t.params.curve);
    t.entries.push_back(BpvEntry{r, R});
  }
  return t;
}

void table_save(const BpvTable& t, const std::string& path) {
  write_file(path, table_serialize(t), /*private_mode=*/true);
}

BpvTable table_load(const std::string& path) {
  BpvTable t = table_parse(read_file(path));
  if (!verify_table(t)) throw Error("BPV table failed verification");
  return t;
}

}  // namespace dronecrypt
