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

#include "dronecrypt/u256.hpp"

namespace dronecrypt {

// Montgomery arithmetic context for one odd modulus m < 2^256.
// All derived constants (n0, R^2, R^3) are computed in make(); nothing
// here is specific to a particular curve.
//
// Values in Montgomery form are plain U256 holding a*R mod m, R = 2^256.
class ModCtx {
 public:
  // m must be odd and > 1.
  static ModCtx make(const U256& m);

  const U256& modulus() const { return m_; }
  const U256& r1() const { return r1_; }  // R mod m, the Montgomery one
  const U256& r2() const { return r2_; }  // R^2 mod m

  // Montgomery product: a*b*R^-1 mod m (CIOS).
  U256 mont_mul(const U256& a, const U256& b) const;
  U256 mont_sqr(const U256& a) const { return mont_mul(a, a); }

  U256 to_mont(const U256& a) const { return mont_mul(a, r2_); }
  U256 from_mont(const U256& a) const { return mont_mul(a, U256::one()); }

  // Plain modular ops on canonical representatives (inputs < m).
  U256 add(const U256& a, const U256& b) const;
  U256 sub(const U256& a, const U256& b) const;
  U256 neg(const U256& a) const;

  // a*b mod m for canonical a, b; one round trip through Montgomery form.
  U256 mul_plain(const U256& a, const U256& b) const;

  // Reduces an arbitrary 256-bit value (not necessarily < m).
  U256 reduce(const U256& a) const;

  // Binary extended gcd; a must be nonzero and coprime to m.
  U256 inv_plain(const U256& a) const;
  // Inverse staying in Montgomery form: uses inv_plain plus R^3.
  U256 inv_mont(const U256& a) const;

  // Exponentiation of a Montgomery-form base, square-and-multiply.
  U256 pow_mont(const U256& a, const U256& e) const;

 private:
  U256 m_;
  U256 r1_, r2_, r3_;
  uint64_t n0_ = 0;  // -m^-1 mod 2^64
};

}  // namespace dronecrypt
