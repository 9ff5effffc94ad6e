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

#include "dronecrypt/modarith.hpp"

#include <stdexcept>

namespace dronecrypt {

ModCtx ModCtx::make(const U256& m) {
  if (!m.is_odd() || u256_cmp(m, U256::one()) <= 0)
    throw std::invalid_argument("ModCtx: modulus must be odd and > 1");

  ModCtx ctx;
  ctx.m_ = m;

  // n0 = -m^-1 mod 2^64 by Newton iteration; doubles correct bits each step.
  uint64_t inv = 1;
  for (int i = 0; i < 6; ++i) inv *= 2 - m.w[0] * inv;
  ctx.n0_ = ~inv + 1;

  // R mod m and R^2 mod m by 512 modular doublings of 1.
  U256 x = U256::one();
  for (int i = 0; i < 512; ++i) {
    uint64_t carry = u256_add(x, x, x);
    if (carry || u256_cmp(x, m) >= 0) u256_sub(x, x, m);
    if (i == 255) ctx.r1_ = x;
  }
  ctx.r2_ = x;
  ctx.r3_ = ctx.mont_mul(ctx.r2_, ctx.r2_);
  return ctx;
}

U256 ModCtx::mont_mul(const U256& a, const U256& b) const {
  uint64_t t[6] = {0, 0, 0, 0, 0, 0};
  for (int i = 0; i < 4; ++i) {
    uint128_t c = 0;
    for (int j = 0; j < 4; ++j) {
      uint128_t s = uint128_t(t[j]) + uint128_t(a.w[j]) * b.w[i] + c;
      t[j] = uint64_t(s);
      c = s >> 64;
    }
    uint128_t s = uint128_t(t[4]) + c;
    t[4] = uint64_t(s);
    t[5] = uint64_t(s >> 64);

    uint64_t mf = t[0] * n0_;
    c = (uint128_t(t[0]) + uint128_t(mf) * m_.w[0]) >> 64;
    for (int j = 1; j < 4; ++j) {
      uint128_t s2 = uint128_t(t[j]) + uint128_t(mf) * m_.w[j] + c;
      t[j - 1] = uint64_t(s2);
      c = s2 >> 64;
    }
    uint128_t s3 = uint128_t(t[4]) + c;
    t[3] = uint64_t(s3);
    t[4] = t[5] + uint64_t(s3 >> 64);
  }

  U256 r{{t[0], t[1], t[2], t[3]}};
  if (t[4] || u256_cmp(r, m_) >= 0) u256_sub(r, r, m_);
  return r;
}

U256 ModCtx::add(const U256& a, const U256& b) const {
  U256 r;
  uint64_t carry = u256_add(r, a, b);
  if (carry || u256_cmp(r, m_) >= 0) u256_sub(r, r, m_);
  return r;
}

U256 ModCtx::sub(const U256& a, const U256& b) const {
  U256 r;
  if (u256_sub(r, a, b)) u256_add(r, r, m_);
  return r;
}

U256 ModCtx::neg(const U256& a) const {
  if (a.is_zero()) return a;
  U256 r;
  u256_sub(r, m_, a);
  return r;
}

U256 ModCtx::mul_plain(const U256& a, const U256& b) const {
  return mont_mul(mont_mul(a, r2_), b);
}

U256 ModCtx::reduce(const U256& a) const {
  return mont_mul(mont_mul(a, r2_), U256::one());
}

U256 ModCtx::inv_plain(const U256& a) const {
  if (a.is_zero()) throw std::invalid_argument("ModCtx: inverse of zero");
  // Binary extended gcd for odd modulus. Invariants:
  //   x1 * a == u (mod m),  x2 * a == v (mod m)
  U256 u = a, v = m_;
  U256 x1 = U256::one(), x2 = U256::zero();
  while (!(u == U256::one()) && !(v == U256::one())) {
    while (!u.is_odd()) {
      u256_shr1(u);
      uint64_t hi = 0;
      if (x1.is_odd()) hi = u256_add(x1, x1, m_);
      u256_shr1(x1, hi);
    }
    while (!v.is_odd()) {
      u256_shr1(v);
      uint64_t hi = 0;
      if (x2.is_odd()) hi = u256_add(x2, x2, m_);
      u256_shr1(x2, hi);
    }
    if (u256_cmp(u, v) >= 0) {
      u256_sub(u, u, v);
      x1 = sub(x1, x2);
    } else {
      u256_sub(v, v, u);
      x2 = sub(x2, x1);
    }
  }
  return u == U256::one() ? x1 : x2;
}

U256 ModCtx::inv_mont(const U256& a) const {
  // a = x*R; binary inverse gives x^-1 * R^-1; two extra R factors restore form.
  return mont_mul(inv_plain(a), r3_);
}

U256 ModCtx::pow_mont(const U256& a, const U256& e) const {
  U256 r = r1_;
  bool seen = false;
  for (int i = 255; i >= 0; --i) {
    if (seen) r = mont_sqr(r);
    if (e.bit(unsigned(i))) {
      r = seen ? mont_mul(r, a) : a;
      seen = true;
    }
  }
  return r;
}

}  // namespace dronecrypt
