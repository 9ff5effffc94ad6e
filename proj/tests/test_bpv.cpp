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

// BPV precomputation: offline table generation, the online subset-sum
// draw (checked exhaustively against all C(8,3) subset outcomes), the
// operation-count contract, and the table wire format.

#include "dronecrypt/bpv.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "dronecrypt/bytes.hpp"
#include "dronecrypt/io.hpp"
#include "dronecrypt/rng.hpp"

#ifndef _WIN32
#include <sys/stat.h>
#endif

using namespace dronecrypt;

namespace {

const CurveId kCurves[] = {CurveId::BaselineWeierstrass, CurveId::FastEdwards};

SeededRng seeded(const std::string& s) { return SeededRng(as_bytes(s)); }

// Table whose k entries all hold the same known scalar, so every subset
// sum is known in closed form.
BpvTable constant_table(CurveId curve, uint32_t k, uint16_t v, uint64_t value) {
  BpvTable t;
  t.params = BpvParams{k, v, curve};
  Scalar r = scalar_from_u64(curve, value);
  GroupPoint R = point_normalize(scalar_mul(r, generator(curve)));
  t.entries.assign(k, BpvEntry{r, R});
  return t;
}

}  // namespace

TEST_CASE("bpv_offline builds a verifiable table") {
  for (CurveId curve : kCurves) {
    CAPTURE(curve_name(curve));
    SeededRng rng = seeded("offline");
    BpvTable t = bpv_offline(BpvParams{8, 3, curve}, rng);
    CHECK(t.params.k == 8);
    CHECK(t.params.v == 3);
    CHECK(t.entries.size() == 8);
    CHECK(verify_table(t));
    for (const BpvEntry& e : t.entries) {
      CHECK_FALSE(scalar_is_zero(e.r));
      CHECK(e.R.curve == curve);
    }
    // distinct scalars (collision probability is negligible)
    std::set<std::string> seen;
    for (const BpvEntry& e : t.entries) seen.insert(to_hex(scalar_serialize(e.r)));
    CHECK(seen.size() == 8);
  }
}

TEST_CASE("bpv parameter bounds") {
  SeededRng rng = seeded("bounds");
  CHECK_THROWS_AS(bpv_offline(BpvParams{8, 0, CurveId::FastEdwards}, rng), Error);
  CHECK_THROWS_AS(bpv_offline(BpvParams{8, 1, CurveId::FastEdwards}, rng), Error);
  CHECK_THROWS_AS(bpv_offline(BpvParams{8, 2, CurveId::FastEdwards}, rng), Error);  // needs v > 2
  CHECK_THROWS_AS(bpv_offline(BpvParams{8, 8, CurveId::FastEdwards}, rng), Error);  // needs v < k
  CHECK_THROWS_AS(bpv_offline(BpvParams{8, 9, CurveId::FastEdwards}, rng), Error);
  BpvTable ok = bpv_offline(BpvParams{4, 3, CurveId::FastEdwards}, rng);
  CHECK(ok.entries.size() == 4);
}

TEST_CASE("bpv_online draws lie in the exhaustive subset-sum set") {
  for (CurveId curve : kCurves) {
    CAPTURE(curve_name(curve));
    SeededRng rng = seeded("exhaustive");
    BpvTable t = bpv_offline(BpvParams{8, 3, curve}, rng);

    // all C(8,3) = 56 subset sums, folded independently of bpv_online
    std::map<std::string, GroupPoint> expected;
    for (int i = 0; i < 8; ++i) {
      for (int j = i + 1; j < 8; ++j) {
        for (int l = j + 1; l < 8; ++l) {
          Scalar r = scalar_add(scalar_add(t.entries[i].r, t.entries[j].r), t.entries[l].r);
          GroupPoint R = point_add(point_add(t.entries[i].R, t.entries[j].R), t.entries[l].R);
          expected.emplace(to_hex(scalar_serialize(r)), R);
        }
      }
    }
    REQUIRE(expected.size() == 56);

    std::map<std::string, int> hits;
    for (int draw = 0; draw < 600; ++draw) {
      auto [r, R] = bpv_online(t, rng);
      // the pair is a subset sum AND internally consistent: R = r*G
      auto it = expected.find(to_hex(scalar_serialize(r)));
      REQUIRE(it != expected.end());
      CHECK(point_equal(R, it->second));
      CHECK(point_equal(R, scalar_mul(r, generator(curve))));
      ++hits[it->first];
    }
    // uniform subset choice: 600 seeded draws cover all 56 subsets and
    // no subset dominates (expected count 10.7)
    CHECK(hits.size() == 56);
    int max_hits = 0;
    for (const auto& [key, count] : hits) max_hits = std::max(max_hits, count);
    CHECK(max_hits < 40);
  }
}

TEST_CASE("bpv_online on the constant table gives the closed-form sum") {
  // all entries 7: any 3-subset sums to 21, any 16-subset to 112
  for (CurveId curve : kCurves) {
    CAPTURE(curve_name(curve));
    const char* kat21 = curve == CurveId::BaselineWeierstrass
                            ? "02352bbf4a4cdd12564f93fa332ce333301d9ad40271f8107181340aef25be59d5"
                            : "049e286d335160c6ff6ea5d8c7c5d506ae35ccf8f4dde523f3e55a97b716d12866";
    const char* kat112 = curve == CurveId::BaselineWeierstrass
                             ? "02bc82dd73e5161dba0884a36f2080d682ffc274bf62fca8f9eb0aadf82a8d733c"
                             : "04e5a6c0deb624317041080af39f9cbabecaaabcb8b1166aa434d75293d7511312";
    SeededRng rng = seeded("constant");
    BpvTable t3 = constant_table(curve, 8, 3, 7);
    auto [r3, R3] = bpv_online(t3, rng);
    CHECK(scalar_equal(r3, scalar_from_u64(curve, 21)));
    CHECK(to_hex(point_serialize(R3)) == kat21);

    BpvTable t16 = constant_table(curve, 64, 16, 7);
    auto [r16, R16] = bpv_online(t16, rng);
    CHECK(scalar_equal(r16, scalar_from_u64(curve, 112)));
    CHECK(to_hex(point_serialize(R16)) == kat112);
  }
}

TEST_CASE("bpv_online spends exactly v-1 point adds and no scalar muls") {
  for (CurveId curve : kCurves) {
    CAPTURE(curve_name(curve));
    SeededRng rng = seeded("counters");
    BpvTable t = bpv_offline(BpvParams{64, 16, curve}, rng);
    for (int i = 0; i < 10; ++i) {
      op_counts_reset();
      (void)bpv_online(t, rng);
      OpCounts c = op_counts_snapshot();
      CHECK(c.scalar_muls == 0);
      CHECK(c.point_adds == 15);
    }
    op_counts_reset();
  }
}

TEST_CASE("bpv_online rejects unusable tables") {
  SeededRng rng = seeded("unusable");
  BpvTable t = bpv_offline(BpvParams{8, 3, CurveId::FastEdwards}, rng);
  BpvTable short_t = t;
  short_t.entries.resize(4);  // fewer entries than params.k claims
  CHECK_THROWS_AS(bpv_online(short_t, rng), Error);
  BpvTable bad_v = t;
  bad_v.params.v = 2;
  CHECK_THROWS_AS(bpv_online(bad_v, rng), Error);
}

TEST_CASE("verify_table catches corruption") {
  SeededRng rng = seeded("verify");
  BpvTable t = bpv_offline(BpvParams{8, 3, CurveId::FastEdwards}, rng);
  CHECK(verify_table(t));

  BpvTable wrong_mult = t;
  wrong_mult.entries[3].r = scalar_add(wrong_mult.entries[3].r, scalar_from_u64(t.params.curve, 1));
  CHECK_FALSE(verify_table(wrong_mult));

  BpvTable zero_scalar = t;
  zero_scalar.entries[0].r = scalar_zero(t.params.curve);
  zero_scalar.entries[0].R = group_identity(t.params.curve);
  CHECK_FALSE(verify_table(zero_scalar));

  BpvTable truncated = t;
  truncated.entries.pop_back();
  CHECK_FALSE(verify_table(truncated));

  BpvTable mixed = t;
  mixed.entries[1].r = scalar_from_u64(CurveId::BaselineWeierstrass, 5);
  CHECK_FALSE(verify_table(mixed));
}

TEST_CASE("table wire format is exact") {
  SeededRng rng = seeded("format");
  BpvTable t = bpv_offline(BpvParams{8, 3, CurveId::FastEdwards}, rng);
  Bytes wire = table_serialize(t);
  REQUIRE(wire.size() == 16 + 8 * 65);
  CHECK(wire[0] == 'B');
  CHECK(wire[1] == 'P');
  CHECK(wire[2] == 'V');
  CHECK(wire[3] == 'T');
  CHECK(wire[4] == 1);  // version
  CHECK(wire[5] == 2);  // curve id
  CHECK(load_le32(wire.data() + 6) == 8);
  CHECK(wire[10] == 3);
  CHECK(wire[11] == 0);
  for (int i = 12; i < 16; ++i) CHECK(wire[i] == 0);
  // first entry: 32-byte scalar then 33-byte point
  CHECK(Bytes(wire.begin() + 16, wire.begin() + 48) == scalar_serialize(t.entries[0].r));
  CHECK(Bytes(wire.begin() + 48, wire.begin() + 81) == point_serialize(t.entries[0].R));

  BpvTable back = table_parse(wire);
  CHECK(back.params.k == t.params.k);
  CHECK(back.params.v == t.params.v);
  CHECK(back.params.curve == t.params.curve);
  CHECK(table_serialize(back) == wire);

  // default-parameter table has the documented size
  BpvTable big;
  big.params = BpvParams{};
  Scalar r = scalar_from_u64(CurveId::FastEdwards, 9);
  GroupPoint R = point_normalize(scalar_mul(r, generator(CurveId::FastEdwards)));
  big.entries.assign(1024, BpvEntry{r, R});
  CHECK(table_serialize(big).size() == 66576);
}

TEST_CASE("table parsing is strict") {
  SeededRng rng = seeded("strict");
  BpvTable t = bpv_offline(BpvParams{4, 3, CurveId::FastEdwards}, rng);
  Bytes wire = table_serialize(t);

  Bytes bad = wire;
  bad[0] = 'X';
  CHECK_THROWS_AS(table_parse(bad), Error);  // magic
  bad = wire;
  bad[4] = 2;
  CHECK_THROWS_AS(table_parse(bad), Error);  // version
  bad = wire;
  bad[5] = 0;
  CHECK_THROWS_AS(table_parse(bad), Error);  // curve id
  bad = wire;
  bad[10] = 0;
  CHECK_THROWS_AS(table_parse(bad), Error);  // v out of range
  bad = wire;
  bad.push_back(0);
  CHECK_THROWS_AS(table_parse(bad), Error);  // trailing byte
  bad = wire;
  bad.pop_back();
  CHECK_THROWS_AS(table_parse(bad), Error);  // truncated
  CHECK_THROWS_AS(table_parse(BytesView(wire.data(), 10)), Error);  // no header
  // non-canonical scalar in entry 0
  bad = wire;
  std::fill(bad.begin() + 16, bad.begin() + 48, uint8_t(0xff));
  CHECK_THROWS_AS(table_parse(bad), Error);
  // corrupt point encoding in entry 0
  bad = wire;
  bad[48] = 0x00;  // header byte of the first point
  CHECK_THROWS_AS(table_parse(bad), Error);
}

TEST_CASE("table files roundtrip with private permissions") {
  SeededRng rng = seeded("files");
  BpvTable t = bpv_offline(BpvParams{8, 3, CurveId::FastEdwards}, rng);
  const std::string path = "bpv_test_table.tmp";
  table_save(t, path);
  BpvTable back = table_load(path);
  CHECK(table_serialize(back) == table_serialize(t));
#ifndef _WIN32
  struct stat st{};
  REQUIRE(stat(path.c_str(), &st) == 0);
  CHECK((st.st_mode & 0777) == 0600);
#endif
  // single corrupted bit in an entry makes the load fail closed
  Bytes wire = table_serialize(t);
  wire[20] ^= 1;
  write_file(path, wire);
  CHECK_THROWS_AS(table_load(path), Error);
  std::remove(path.c_str());
  CHECK_THROWS_AS(table_load(path), Error);  // missing file
}
