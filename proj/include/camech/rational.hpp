// Copyright 2026 The camech authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <string>

namespace camech {

/// Exact rational number. All money and probability values in the engine
/// are kept exact; doubles appear only at the presentation layer.
using Rat = mpq_class;

/// Parses "p/q", "p", or a plain decimal string like "0.35" / "-1.25".
/// Throws ParseError on malformed input or zero denominator.
Rat rat_parse(const std::string& text);

/// Canonical text form: "p/q", or just "p" when the denominator is 1.
std::string rat_str(const Rat& value);

/// Fixed-point rendering with the given number of fractional digits,
/// rounding half away from zero.
std::string rat_decimal(const Rat& value, int digits);

/// 2^exponent as an exact rational; exponent may be negative.
Rat rat_pow2(long exponent);

inline Rat rat(long num, long den = 1)
{
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace camech
