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

#include "curves_internal.hpp"

// edwards25519: -x^2 + y^2 = 1 + d x^2 y^2 over F_p, p = 2^255 - 19.
// Extended coordinates (X, Y, Z, T) with x = X/Z, y = Y/Z, T = XY/Z.
// a = -1 is a square mod p and d is not, so the unified addition below is
// complete: no case split, which is what makes each addition cheap.
// Cofactor 8; the prime-order subgroup has order ell, enforced at
// deserialization by an order check.

namespace dronecrypt::internal {

static const char* kP = "7fffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffed";
static const char* kL = "1000000000000000000000000000000014def9dea2f79cd65812631a5cf5d3ed";
static const char* kD = "52036cee2b6ffe738cc740797779e89800700a4d4141d8ab75eb4dca135978a3";
static const char* kSqrtM1 = "2b8324804fc1df0b2b4d00993dfbd7a72f431806ad2fe478c4ee1b274a0ea0b0";
static const char* kGx = "216936d3cd6e53fec0a4e231fdd6dc5c692cc7609525a7b2c9562d608f25d51a";
static const char* kGy = "6666666666666666666666666666666666666666666666666666666666666658";

void e_init(CurveCtx& c) {
  c.fp = ModCtx::make(u256_from_hex(kP));
  c.fn = ModCtx::make(u256_from_hex(kL));
  c.e_d = c.fp.to_mont(u256_from_hex(kD));
  c.e_d2 = c.fp.add(c.e_d, c.e_d);
  c.e_sqrtm1 = c.fp.to_mont(u256_from_hex(kSqrtM1));

  c.ident = GroupPoint{c.id, U256::zero(), c.fp.r1(), c.fp.r1(), U256::zero()};
  U256 gx = c.fp.to_mont(u256_from_hex(kGx));
  U256 gy = c.fp.to_mont(u256_from_hex(kGy));
  c.gen = GroupPoint{c.id, gx, gy, c.fp.r1(), c.fp.mont_mul(gx, gy)};
}

// add-2008-hwcd-3 (unified, a = -1), 2d folded into one multiplication.
GroupPoint e_add(const CurveCtx& c, const GroupPoint& p, const GroupPoint& q) {
  const ModCtx& f = c.fp;
  U256 a = f.mont_mul(f.sub(p.y, p.x), f.sub(q.y, q.x));
  U256 b = f.mont_mul(f.add(p.y, p.x), f.add(q.y, q.x));
  U256 cc = f.mont_mul(f.mont_mul(p.t, c.e_d2), q.t);
  U256 zz = f.mont_mul(p.z, q.z);
  U256 d = f.add(zz, zz);
  U256 e = f.sub(b, a);
  U256 ff = f.sub(d, cc);
  U256 g = f.add(d, cc);
  U256 h = f.add(b, a);
  return GroupPoint{c.id, f.mont_mul(e, ff), f.mont_mul(g, h), f.mont_mul(ff, g),
                    f.mont_mul(e, h)};
}

// dbl-2008-hwcd with a = -1.
GroupPoint e_dbl(const CurveCtx& c, const GroupPoint& p) {
  const ModCtx& f = c.fp;
  U256 a = f.mont_sqr(p.x);
  U256 b = f.mont_sqr(p.y);
  U256 zz = f.mont_sqr(p.z);
  U256 cc = f.add(zz, zz);
  U256 d = f.neg(a);
  U256 e = f.sub(f.sub(f.mont_sqr(f.add(p.x, p.y)), a), b);
  U256 g = f.add(d, b);
  U256 ff = f.sub(g, cc);
  U256 h = f.sub(d, b);
  return GroupPoint{c.id, f.mont_mul(e, ff), f.mont_mul(g, h), f.mont_mul(ff, g),
                    f.mont_mul(e, h)};
}

GroupPoint e_negate(const CurveCtx& c, const GroupPoint& p) {
  const ModCtx& f = c.fp;
  return GroupPoint{c.id, f.neg(p.x), p.y, p.z, f.neg(p.t)};
}

bool e_equal(const CurveCtx& c, const GroupPoint& a, const GroupPoint& b) {
  const ModCtx& f = c.fp;
  return f.mont_mul(a.x, b.z) == f.mont_mul(b.x, a.z) &&
         f.mont_mul(a.y, b.z) == f.mont_mul(b.y, a.z);
}

Bytes e_serialize(const CurveCtx& c, const GroupPoint& p) {
  const ModCtx& f = c.fp;
  U256 zi = f.inv_mont(p.z);
  U256 x = f.from_mont(f.mont_mul(p.x, zi));
  U256 y = f.from_mont(f.mont_mul(p.y, zi));
  Bytes out(33);
  out[0] = uint8_t(0x04 | (x.is_odd() ? 1 : 0));
  u256_to_le_bytes(y, &out[1]);
  return out;
}

GroupPoint e_deserialize(const CurveCtx& c, BytesView enc) {
  if (enc.size() != 33) throw Error("point encoding must be 33 bytes");
  if (enc[0] != 0x04 && enc[0] != 0x05) throw Error("bad point header byte");
  bool x_sign = enc[0] & 1;
  const ModCtx& f = c.fp;
  U256 y = u256_from_le_bytes(&enc[1]);
  if (u256_cmp(y, f.modulus()) >= 0) throw Error("y coordinate out of range");

  // x^2 = (y^2 - 1) / (d y^2 + 1); p = 5 mod 8, so the candidate root is
  // u^((p+3)/8), possibly times sqrt(-1).
  U256 ym = f.to_mont(y);
  U256 y2 = f.mont_sqr(ym);
  U256 u = f.sub(y2, f.r1());
  U256 v = f.add(f.mont_mul(c.e_d, y2), f.r1());
  U256 x2 = f.mont_mul(u, f.inv_mont(v));

  U256 e = f.modulus();
  U256 three = U256::from_u64(3);
  u256_add(e, e, three);  // p + 3 < 2^256, no carry
  u256_shr1(e);
  u256_shr1(e);
  u256_shr1(e);
  U256 xm = f.pow_mont(x2, e);
  if (!(f.mont_sqr(xm) == x2)) {
    xm = f.mont_mul(xm, c.e_sqrtm1);
    if (!(f.mont_sqr(xm) == x2)) throw Error("point not on curve");
  }

  U256 x = f.from_mont(xm);
  if (x.is_zero() && x_sign) throw Error("invalid sign for zero x");
  if (x.is_odd() != x_sign) {
    xm = f.neg(xm);
  }
  GroupPoint p{c.id, xm, ym, f.r1(), f.mont_mul(xm, ym)};

  // Cofactor 8: reject the small-torsion and mixed-order points.
  if (!e_equal(c, backend_mul(c, c.fn.modulus(), p), c.ident))
    throw Error("point not in prime-order subgroup");
  return p;
}

}  // namespace dronecrypt::internal
