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

// Release acceptance gate. Runs seven independent checks and prints one
// PASS/FAIL line for each; the exit code is the number of failures.
//
//   1  energy model reproduces the reference hardware profile
//   2  BPV online draws are correct and uniform over subsets
//   3  signing and encryption survive heavy use; tampering never passes
//   4  key exchange agrees across every keygen mode pairing
//   5  every published symmetric test vector is byte-exact
//   6  BPV signing beats the standard path by the required margin
//   7  wire formats are stable against the golden fixtures
//
// `acceptance --write-fixtures <dir>` regenerates the golden files after
// an intentional format change; the checked-in copies live next to the
// tests and must only change together with a version bump.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dronecrypt/aes.hpp"
#include "dronecrypt/aes_gcm.hpp"
#include "dronecrypt/bench.hpp"
#include "dronecrypt/bpv.hpp"
#include "dronecrypt/bytes.hpp"
#include "dronecrypt/chacha20.hpp"
#include "dronecrypt/chachapoly.hpp"
#include "dronecrypt/ecies.hpp"
#include "dronecrypt/hmac_sha256.hpp"
#include "dronecrypt/io.hpp"
#include "dronecrypt/kex.hpp"
#include "dronecrypt/keyfile.hpp"
#include "dronecrypt/poly1305.hpp"
#include "dronecrypt/rng.hpp"
#include "dronecrypt/sha256.hpp"
#include "dronecrypt/sigs.hpp"

#ifndef DRONECRYPT_FIXTURE_DIR
#define DRONECRYPT_FIXTURE_DIR "tests/fixtures"
#endif

using namespace dronecrypt;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

SeededRng seeded(const std::string& s) { return SeededRng(as_bytes(s)); }

Bytes S(const std::string& s) { return Bytes(s.begin(), s.end()); }

const CurveId kCurves[] = {CurveId::BaselineWeierstrass, CurveId::FastEdwards};

// ---------------------------------------------------------------------------
// 1: the energy model against the reference hardware profile.

struct ReferenceRow {
  const char* name;
  double time_ms;
  double energy_mj;
};

// Timings and energies measured on the 3.3 V / 40 mA reference platform;
// the model must reproduce every energy figure from its timing.
const ReferenceRow kReferenceRows[] = {
    {"ECDH", 104.83, 13.84},
    {"ECDSA-Sign", 56.02, 7.40},
    {"ECDSA-Verify", 48.62, 6.42},
    {"ECIES-Encrypt", 104.91, 13.85},
    {"ECIES-Decrypt", 52.49, 6.93},
    {"BPV-ECDH", 3.79, 0.50},
    {"BPV-Schnorr-Sign", 1.57, 0.21},
    {"BPV-Schnorr-Verify", 4.07, 0.54},
    {"BPV-ECIES-Encrypt", 3.80, 0.50},
    {"BPV-ECIES-Decrypt", 3.06, 0.40},
};

bool criterion_energy_model(std::string& note) {
  const EnergyModel model{3.3, 0.040};
  double worst = 0.0;
  const char* worst_name = "";
  for (const ReferenceRow& row : kReferenceRows) {
    double mj = estimate_energy(model, row.time_ms / 1e3) * 1e3;
    double dev = std::fabs(mj - row.energy_mj);
    if (dev > worst) {
      worst = dev;
      worst_name = row.name;
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf), "10 rows, worst deviation %.4f mJ (%s), tolerance 0.01",
                worst, worst_name);
  note = buf;
  return worst <= 0.01;
}

// ---------------------------------------------------------------------------
// 2: BPV online correctness, per draw and against the exhaustive oracle.

bool criterion_bpv_correctness(std::string& note) {
  Clock::time_point start = Clock::now();
  uint64_t bad_pairs = 0;

  for (CurveId curve : kCurves) {
    SeededRng rng = seeded(std::string("accept-bpv-") + curve_name(curve));
    BpvTable table = bpv_offline(BpvParams{1024, 16, curve}, rng);
    for (int i = 0; i < 10000; ++i) {
      auto [r, R] = bpv_online(table, rng);
      if (!point_equal(R, scalar_mul(r, generator(curve)))) {
        ++bad_pairs;
      }
    }
  }

  // small-table oracle: every draw must be one of the C(8,3) = 56
  // possible subset sums, and seeded sampling must reach all of them
  uint64_t oracle_misses = 0;
  bool full_coverage = true;
  for (CurveId curve : kCurves) {
    SeededRng rng = seeded(std::string("accept-oracle-") + curve_name(curve));
    BpvTable table = bpv_offline(BpvParams{8, 3, curve}, rng);
    std::map<std::string, GroupPoint> expected;
    for (int i = 0; i < 8; ++i) {
      for (int j = i + 1; j < 8; ++j) {
        for (int l = j + 1; l < 8; ++l) {
          Scalar r = scalar_add(scalar_add(table.entries[i].r, table.entries[j].r),
                                table.entries[l].r);
          GroupPoint R =
              point_add(point_add(table.entries[i].R, table.entries[j].R), table.entries[l].R);
          expected.emplace(to_hex(scalar_serialize(r)), R);
        }
      }
    }
    if (expected.size() != 56) {
      ++oracle_misses;
    }
    std::set<std::string> hit;
    for (int i = 0; i < 1000; ++i) {
      auto [r, R] = bpv_online(table, rng);
      auto it = expected.find(to_hex(scalar_serialize(r)));
      if (it == expected.end() || !point_equal(R, it->second)) {
        ++oracle_misses;
      } else {
        hit.insert(it->first);
      }
    }
    if (hit.size() != 56) {
      full_coverage = false;
    }
  }

  double elapsed = seconds_since(start);
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "20000 draws, %llu bad pairs; oracle misses %llu, coverage %s; %.1fs (limit 60)",
                static_cast<unsigned long long>(bad_pairs),
                static_cast<unsigned long long>(oracle_misses), full_coverage ? "56/56" : "partial",
                elapsed);
  note = buf;
  return bad_pairs == 0 && oracle_misses == 0 && full_coverage && elapsed < 60.0;
}

// ---------------------------------------------------------------------------
// 3: verification and decryption at volume, honest and tamper-proof.

bool criterion_volume_robustness(std::string& note) {
  Clock::time_point start = Clock::now();
  const CurveId curve = CurveId::FastEdwards;
  SeededRng rng = seeded("accept-volume");
  BpvTable table = bpv_offline(BpvParams{256, 16, curve}, rng);
  KeyPair key = keypair_from_private(random_scalar(curve, rng));

  uint64_t verify_failures = 0, decrypt_failures = 0, tamper_accepts = 0;

  for (int i = 0; i < 1000; ++i) {
    std::string msg = "frame " + std::to_string(i);
    SchnorrSignature sig = schnorr_sign(as_bytes(msg), key, rng, &table);
    if (!schnorr_verify(as_bytes(msg), sig, key.Y)) {
      ++verify_failures;
    }
    // flip one uniformly chosen bit of the serialized signature
    Bytes wire = schnorr_sig_serialize(sig);
    uint32_t bit = uint32_t(load_le32(rng.bytes(4).data()) % (wire.size() * 8));
    wire[bit / 8] ^= uint8_t(1u << (bit % 8));
    try {
      SchnorrSignature bad = schnorr_sig_deserialize(wire, curve);
      if (schnorr_verify(as_bytes(msg), bad, key.Y)) {
        ++tamper_accepts;
      }
    } catch (const Error&) {
      // a rejected encoding is a correct rejection
    }
  }

  for (int i = 0; i < 1000; ++i) {
    std::string msg = "payload " + std::to_string(i) + " with some body";
    SymSuite suite = (i % 2 == 0) ? SymSuite::Light : SymSuite::Standard;
    EciesCiphertext ct = ecies_encrypt(as_bytes(msg), key.Y, rng, suite, &table);
    auto pt = ecies_decrypt(key, ct);
    if (!pt.has_value() || *pt != S(msg)) {
      ++decrypt_failures;
    }
    Bytes wire = ecies_serialize(ct);
    uint32_t bit = uint32_t(load_le32(rng.bytes(4).data()) % (wire.size() * 8));
    wire[bit / 8] ^= uint8_t(1u << (bit % 8));
    try {
      EciesCiphertext bad = ecies_parse(wire);
      auto opened = ecies_decrypt(key, bad);
      // flipping any single bit must never open to the original message,
      // and for an authenticated envelope must never open at all
      if (opened.has_value()) {
        ++tamper_accepts;
      }
    } catch (const Error&) {
    }
  }

  double elapsed = seconds_since(start);
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "1000+1000 honest ok (%llu/%llu fail); 2000 bit flips, %llu accepted; %.1fs "
                "(limit 120)",
                static_cast<unsigned long long>(verify_failures),
                static_cast<unsigned long long>(decrypt_failures),
                static_cast<unsigned long long>(tamper_accepts), elapsed);
  note = buf;
  return verify_failures == 0 && decrypt_failures == 0 && tamper_accepts == 0 && elapsed < 120.0;
}

// ---------------------------------------------------------------------------
// 4: key exchange agreement across keygen modes.

bool criterion_kex_agreement(std::string& note) {
  const CurveId curve = CurveId::FastEdwards;
  SeededRng rng = seeded("accept-kex");
  BpvTable table = bpv_offline(BpvParams{128, 16, curve}, rng);
  const BpvTable* modes[] = {nullptr, &table};
  uint64_t exchanges = 0, mismatches = 0;
  for (const BpvTable* mode_a : modes) {
    for (const BpvTable* mode_b : modes) {
      for (int i = 0; i < 125; ++i) {
        KeyPair a = ecdh_keygen(curve, rng, mode_a);
        KeyPair b = ecdh_keygen(curve, rng, mode_b);
        ++exchanges;
        if (ecdh_derive(a.y, b.Y) != ecdh_derive(b.y, a.Y)) {
          ++mismatches;
        }
      }
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%llu exchanges over 4 mode pairings, %llu mismatches",
                static_cast<unsigned long long>(exchanges),
                static_cast<unsigned long long>(mismatches));
  note = buf;
  return exchanges == 500 && mismatches == 0;
}

// ---------------------------------------------------------------------------
// 5: published symmetric vectors, re-stated here in full so this gate
// does not depend on the unit suite.

bool criterion_symmetric_vectors(std::string& note) {
  uint64_t checked = 0, failed = 0;
  auto expect = [&](bool ok) {
    ++checked;
    if (!ok) {
      ++failed;
    }
  };
  auto H = [](const char* hex) { return from_hex(hex); };

  // SHA-256
  expect(to_hex(sha256(S("abc"))) ==
         "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  expect(to_hex(sha256(Bytes{})) ==
         "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  expect(to_hex(sha256(S("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq"))) ==
         "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
  expect(to_hex(sha256(Bytes(1000000, uint8_t('a')))) ==
         "cdc76e5c9914fb9281a1c7e284d73e67f1809a48a497200e046d39ccc7112cd0");

  // HMAC-SHA256
  expect(to_hex(hmac_sha256(Bytes(20, 0x0b), S("Hi There"))) ==
         "b0344c61d8db38535ca8afceaf0bf12b881dc200c9833da726e9376c2e32cff7");
  expect(to_hex(hmac_sha256(S("Jefe"), S("what do ya want for nothing?"))) ==
         "5bdcc146bf60754e6a042426089575c75a003f089d2739839dec58b964ec3843");
  expect(to_hex(hmac_sha256(Bytes(20, 0xaa), Bytes(50, 0xdd))) ==
         "773ea91e36800e46854db8ebd09181a72959098b3ef8c122d9635514ced565fe");
  expect(to_hex(hmac_sha256(Bytes(131, 0xaa),
                            S("Test Using Larger Than Block-Size Key - Hash Key First"))) ==
         "60e431591ee0b67f0d8a26aacbf5b77f8e0bc6213728c5140546040f0ee37f54");

  // ChaCha20 block function
  {
    uint8_t zkey[32] = {0}, znonce[12] = {0}, out[64];
    chacha20_block(zkey, znonce, 0, out);
    expect(to_hex(BytesView(out, 64)) ==
           "76b8e0ada0f13d90405d6ae55386bd28bdd219b8a08ded1aa836efcc8b770dc7"
           "da41597c5157488d7724e03fb8d84a376a43b8f41518a11cc387b669b2ee6586");
    Bytes key = H("000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f");
    Bytes nonce = H("000000090000004a00000000");
    uint8_t k[32], n[12];
    std::memcpy(k, key.data(), 32);
    std::memcpy(n, nonce.data(), 12);
    chacha20_block(k, n, 1, out);
    expect(to_hex(BytesView(out, 64)) ==
           "10f1e7e4d13b5915500fdd1fa32071c4c7d1f4c733c068030422aa9ac3d46c4e"
           "d2826446079faa0914c2d705d98b02a2b5129cd1de164eb9cbd083e8a2503c4e");
  }

  const std::string sunscreen =
      "Ladies and Gentlemen of the class of '99: If I could offer you "
      "only one tip for the future, sunscreen would be it.";

  // ChaCha20 cipher
  {
    Bytes key = H("000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f");
    Bytes nonce = H("000000000000004a00000000");
    Bytes ct = chacha20_xor(key, nonce, 1, S(sunscreen));
    expect(to_hex(ct) ==
           "6e2e359a2568f98041ba0728dd0d6981e97e7aec1d4360c20a27afccfd9fae0b"
           "f91b65c5524733ab8f593dabcd62b3571639d624e65152ab8f530c359f0861d8"
           "07ca0dbf500d6a6156a38e088a22b65e52bc514d16ccf806818ce91ab7793736"
           "5af90bbf74a35be6b40b8eedf2785e42874d");
    expect(chacha20_xor(key, nonce, 1, ct) == S(sunscreen));
  }

  // Poly1305
  {
    Bytes key = H("85d6be7857556d337f4452fe42d506a80103808afb0db2fd4abff6af4149f51b");
    expect(to_hex(poly1305_tag(key, S("Cryptographic Forum Research Group"))) ==
           "a8061dc1305136c6c22b8baf0c0127a9");
    expect(to_hex(poly1305_tag(key, Bytes{})) == "0103808afb0db2fd4abff6af4149f51b");
    Bytes edge = H("0200000000000000000000000000000000000000000000000000000000000000");
    expect(to_hex(poly1305_tag(edge, Bytes(16, 0xff))) == "03000000000000000000000000000000");
  }

  // ChaCha20-Poly1305
  {
    Bytes key = H("808182838485868788898a8b8c8d8e8f909192939495969798999a9b9c9d9e9f");
    Bytes nonce = H("070000004041424344454647");
    Bytes aad = H("50515253c0c1c2c3c4c5c6c7");
    AeadOutput out = chachapoly_seal(key, nonce, aad, S(sunscreen));
    expect(to_hex(out.ciphertext) ==
           "d31a8d34648e60db7b86afbc53ef7ec2a4aded51296e08fea9e2b5a736ee62d6"
           "3dbea45e8ca9671282fafb69da92728b1a71de0a9e060b2905d6a5b67ecd3b36"
           "92ddbd7f2d778b8c9803aee328091b58fab324e4fad675945585808b4831d7bc"
           "3ff4def08e4b7a9de576d26586cec64b6116");
    expect(to_hex(out.tag) == "1ae10b594f09e26a7e902ecbd0600691");
    auto back = chachapoly_open(key, nonce, aad, out.ciphertext, out.tag);
    expect(back.has_value() && *back == S(sunscreen));
  }

  // AES-128 block
  expect(to_hex(aes128_block(H("000102030405060708090a0b0c0d0e0f"),
                             H("00112233445566778899aabbccddeeff"))) ==
         "69c4e0d86a7b0430d8cdb78070b4c55a");
  expect(to_hex(aes128_block(H("2b7e151628aed2a6abf7158809cf4f3c"),
                             H("3243f6a8885a308d313198a2e0370734"))) ==
         "3925841d02dc09fbdc118597196a0b32");

  // AES-128-CTR
  {
    Bytes key = H("2b7e151628aed2a6abf7158809cf4f3c");
    Bytes iv = H("f0f1f2f3f4f5f6f7f8f9fafbfcfdfeff");
    Bytes pt = H(
        "6bc1bee22e409f96e93d7e117393172a"
        "ae2d8a571e03ac9c9eb76fac45af8e51"
        "30c81c46a35ce411e5fbc1191a0a52ef"
        "f69f2445df4f9b17ad2b417be66c3710");
    Bytes ct = aes_ctr_xor(key, iv, pt);
    expect(to_hex(ct) ==
           "874d6191b620e3261bef6864990db6ce"
           "9806f66b7970fdff8617187bb9fffdff"
           "5ae4df3edbd5d35e5b4f09020db03eab"
           "1e031dda2fbe03d1792170a0f3009cee");
    expect(aes_ctr_xor(key, iv, ct) == pt);
  }

  // AES-128-GCM
  {
    Bytes zkey(16, 0), ziv(12, 0), empty;
    AeadOutput c1 = aes_gcm_seal(zkey, ziv, empty, empty);
    expect(c1.ciphertext.empty() && to_hex(c1.tag) == "58e2fccefa7e3061367f1d57a4e7455a");
    AeadOutput c2 = aes_gcm_seal(zkey, ziv, empty, Bytes(16, 0));
    expect(to_hex(c2.ciphertext) == "0388dace60b6a392f328c2b971b2fe78" &&
           to_hex(c2.tag) == "ab6e47d42cec13bdf53a67b21257bddf");
    Bytes key = H("feffe9928665731c6d6a8f9467308308");
    Bytes iv = H("cafebabefacedbaddecaf888");
    Bytes pt = H(
        "d9313225f88406e5a55909c5aff5269a"
        "86a7a9531534f7da2e4c303d8a318a72"
        "1c3c0c95956809532fcf0e2449a6b525"
        "b16aedf5aa0de657ba637b391aafd255");
    AeadOutput c3 = aes_gcm_seal(key, iv, empty, pt);
    expect(to_hex(c3.ciphertext) ==
               "42831ec2217774244b7221b784d0d49c"
               "e3aa212f2c02a4e035c17e2329aca12e"
               "21d514b25466931c7d8f6a5aac84aa05"
               "1ba30b396a0aac973d58e091473f5985" &&
           to_hex(c3.tag) == "4d5c2af327cd64a62cf35abd2ba6fab4");
    Bytes pt4(pt.begin(), pt.end() - 4);
    Bytes aad = H("feedfacedeadbeeffeedfacedeadbeefabaddad2");
    AeadOutput c4 = aes_gcm_seal(key, iv, aad, pt4);
    expect(to_hex(c4.ciphertext) ==
               "42831ec2217774244b7221b784d0d49c"
               "e3aa212f2c02a4e035c17e2329aca12e"
               "21d514b25466931c7d8f6a5aac84aa05"
               "1ba30b396a0aac973d58e091" &&
           to_hex(c4.tag) == "5bc94fbc3221a5db94fae95ae7121a47");
    auto back = aes_gcm_open(key, iv, aad, c4.ciphertext, c4.tag);
    expect(back.has_value() && *back == pt4);
  }

  char buf[96];
  std::snprintf(buf, sizeof(buf), "%llu vectors checked, %llu mismatches",
                static_cast<unsigned long long>(checked), static_cast<unsigned long long>(failed));
  note = buf;
  return failed == 0;
}

// ---------------------------------------------------------------------------
// 6: the BPV speed margin on the optimized backend.

bool criterion_bpv_speedup(std::string& note) {
  SeededRng rng = seeded("accept-speed");
  BpvTable table = bpv_offline(BpvParams{1024, 16, CurveId::FastEdwards}, rng);
  BenchOptions opt;
  opt.iters = 1000;
  opt.table = &table;
  opt.seed = 603;

  std::vector<BenchRecord> pk = run_pk_suite(opt);
  std::vector<BenchRecord> detail = run_pk_detail(opt);
  auto find = [](const std::vector<BenchRecord>& recs, const char* name) -> const BenchRecord* {
    for (const BenchRecord& r : recs) {
      if (r.name == name) {
        return &r;
      }
    }
    return nullptr;
  };
  const BenchRecord* std_sign = find(detail, "Schnorr-Sign");
  const BenchRecord* bpv_sign = find(pk, "BPV-Schnorr-Sign");
  const BenchRecord* ecdsa_sign = find(pk, "ECDSA-Sign");
  if (std_sign == nullptr || bpv_sign == nullptr || ecdsa_sign == nullptr) {
    note = "expected rows missing from the suites";
    return false;
  }
  double same_curve = std_sign->median_time / bpv_sign->median_time;
  // reported for context, deliberately not asserted: it mixes a curve
  // change with the nonce strategy change
  double combined = ecdsa_sign->median_time / bpv_sign->median_time;
  bool counters_ok = bpv_sign->scalar_muls == 0 && bpv_sign->point_adds == 15;

  char buf[192];
  std::snprintf(buf, sizeof(buf),
                "same-curve sign speedup %.2fx (needs >= 5); combined vs baseline ECDSA %.2fx "
                "(measured, informational); nonce cost %llu mul / %llu add",
                same_curve, combined, static_cast<unsigned long long>(bpv_sign->scalar_muls),
                static_cast<unsigned long long>(bpv_sign->point_adds));
  note = buf;
  return same_curve >= 5.0 && counters_ok;
}

// ---------------------------------------------------------------------------
// 7: wire-format stability against golden fixtures.

const char kFixtureMsg[] = "dronecrypt golden fixture message v1\n";

std::vector<std::pair<std::string, Bytes>> build_fixtures() {
  SeededRng fast_rng = seeded("fixture-key-fast");
  Scalar y_fast = random_scalar(CurveId::FastEdwards, fast_rng);
  KeyPair fast = keypair_from_private(y_fast);

  SeededRng base_rng = seeded("fixture-key-base");
  Scalar y_base = random_scalar(CurveId::BaselineWeierstrass, base_rng);
  KeyPair base = keypair_from_private(y_base);

  SeededRng table_rng = seeded("fixture-table");
  BpvTable table = bpv_offline(BpvParams{16, 4, CurveId::FastEdwards}, table_rng);

  Bytes msg = S(kFixtureMsg);

  SeededRng sig_rng = seeded("fixture-sig");
  SchnorrSignature sig = schnorr_sign(msg, fast, sig_rng, &table);

  SeededRng ecdsa_rng = seeded("fixture-ecdsa");
  EcdsaSignature esig = ecdsa_sign(msg, base, ecdsa_rng);

  SeededRng enc_rng = seeded("fixture-enc");
  EciesCiphertext ct = ecies_encrypt(msg, fast.Y, enc_rng, SymSuite::Light, &table);

  return {
      {"fx_fast.priv", private_key_serialize(y_fast)},
      {"fx_fast.pub", public_key_serialize(fast.Y)},
      {"fx_base.priv", private_key_serialize(y_base)},
      {"fx_base.pub", public_key_serialize(base.Y)},
      {"fx_table.bin", table_serialize(table)},
      {"fx_msg.bin", msg},
      {"fx_schnorr.sig", schnorr_sig_serialize(sig)},
      {"fx_ecdsa.sig", ecdsa_sig_serialize(esig)},
      {"fx_ecies.ct", ecies_serialize(ct)},
  };
}

bool criterion_format_stability(std::string& note) {
  const std::string dir = DRONECRYPT_FIXTURE_DIR;
  std::vector<std::pair<std::string, Bytes>> built = build_fixtures();

  // seeded regeneration is bit-identical run to run
  std::vector<std::pair<std::string, Bytes>> again = build_fixtures();
  if (built != again) {
    note = "seeded regeneration is not deterministic";
    return false;
  }

  uint64_t mismatched = 0;
  std::string first_bad;
  for (const auto& [name, bytes] : built) {
    Bytes on_disk;
    try {
      on_disk = read_file(dir + "/" + name);
    } catch (const Error&) {
      ++mismatched;
      if (first_bad.empty()) {
        first_bad = name + " (missing)";
      }
      continue;
    }
    if (on_disk != bytes) {
      ++mismatched;
      if (first_bad.empty()) {
        first_bad = name;
      }
    }
  }

  // the checked-in bytes decode and interoperate
  bool decodes = true;
  try {
    Scalar y_fast = load_private_key(dir + "/fx_fast.priv");
    GroupPoint Y_fast = load_public_key(dir + "/fx_fast.pub");
    Scalar y_base = load_private_key(dir + "/fx_base.priv");
    GroupPoint Y_base = load_public_key(dir + "/fx_base.pub");
    decodes = decodes && point_equal(Y_fast, scalar_mul(y_fast, generator(y_fast.curve)));
    decodes = decodes && point_equal(Y_base, scalar_mul(y_base, generator(y_base.curve)));

    BpvTable table = table_load(dir + "/fx_table.bin");
    decodes = decodes && table.params.k == 16 && table.params.v == 4;

    Bytes msg = read_file(dir + "/fx_msg.bin");
    SchnorrSignature sig =
        schnorr_sig_deserialize(read_file(dir + "/fx_schnorr.sig"), CurveId::FastEdwards);
    decodes = decodes && schnorr_verify(msg, sig, Y_fast);
    EcdsaSignature esig = ecdsa_sig_deserialize(read_file(dir + "/fx_ecdsa.sig"));
    decodes = decodes && ecdsa_verify(msg, esig, Y_base);

    EciesCiphertext ct = ecies_parse(read_file(dir + "/fx_ecies.ct"));
    KeyPair fast_kp = keypair_from_private(y_fast);
    auto pt = ecies_decrypt(fast_kp, ct);
    decodes = decodes && pt.has_value() && *pt == msg;
  } catch (const Error& e) {
    decodes = false;
    if (first_bad.empty()) {
      first_bad = std::string("decode: ") + e.what();
    }
  }

  char buf[192];
  std::snprintf(buf, sizeof(buf), "9 fixtures, %llu stale%s%s; decode %s",
                static_cast<unsigned long long>(mismatched), first_bad.empty() ? "" : ", first: ",
                first_bad.c_str(), decodes ? "ok" : "FAILED");
  note = buf;
  return mismatched == 0 && decodes;
}

int write_fixtures(const std::string& dir) {
  for (const auto& [name, bytes] : build_fixtures()) {
    write_file(dir + "/" + name, bytes);
    std::printf("wrote %s/%s (%zu bytes)\n", dir.c_str(), name.c_str(), bytes.size());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc == 3 && std::strcmp(argv[1], "--write-fixtures") == 0) {
    return write_fixtures(argv[2]);
  }
  if (argc != 1) {
    std::fprintf(stderr, "usage: %s [--write-fixtures <dir>]\n", argv[0]);
    return 64;
  }

  pin_to_one_cpu();

  struct Criterion {
    const char* label;
    bool (*fn)(std::string&);
  };
  const Criterion criteria[] = {
      {"energy model reproduces the reference profile", criterion_energy_model},
      {"BPV online draws are correct subset sums", criterion_bpv_correctness},
      {"high-volume verify/decrypt with zero tamper acceptance", criterion_volume_robustness},
      {"key exchange agrees across keygen modes", criterion_kex_agreement},
      {"published symmetric vectors byte-exact", criterion_symmetric_vectors},
      {"BPV signing speed margin and operation counts", criterion_bpv_speedup},
      {"wire formats stable against golden fixtures", criterion_format_stability},
  };

  int failures = 0;
  for (size_t i = 0; i < sizeof(criteria) / sizeof(criteria[0]); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) {
      ++failures;
    }
    std::printf("criterion %zu: %s  %s  [%s]\n", i + 1, ok ? "PASS" : "FAIL", criteria[i].label,
                detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%s: %d/7 criteria passed\n", failures == 0 ? "ACCEPTED" : "REJECTED", 7 - failures);
  return failures;
}
