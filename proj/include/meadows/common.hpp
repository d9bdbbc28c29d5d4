/*
   Copyright 2026 The meadows authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MEADOWS_COMMON_HPP
#define MEADOWS_COMMON_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace meadows {

/// Carrier index of a ring element (0..order-1).
using Index = std::uint32_t;

/// Dense vertex id in a lattice.
using Vertex = std::uint32_t;

/// Base class for domain errors a caller can act on (bad spec, size cap,
/// incoherent input). Precondition misuse throws std::invalid_argument.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Construction refused because a carrier would exceed the size cap.
class CapError : public Error {
 public:
  using Error::Error;
};

/// Transition maps of a directed lattice compose differently along
/// different paths between the same endpoints.
class CoherenceError : public Error {
 public:
  using Error::Error;
};

/// Ring-spec DSL or custom-lattice JSON could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Inverse requested on a meadow that failed the greatest-element criterion.
class NotCommonError : public Error {
 public:
  using Error::Error;
};

/// Default maximum carrier size of a single ring.
inline constexpr std::size_t kDefaultRingCap = 4096;

/// Full axiom sweeps switch to seeded sampling above this carrier size.
inline constexpr std::size_t kExhaustiveCap = 512;

/// Tuples drawn per axiom in sampling mode.
inline constexpr std::size_t kDefaultSamples = 100000;

/// Seed used by sampling mode unless overridden.
inline constexpr std::uint64_t kDefaultSeed = 0x6d656164u;  // "mead"

}  // namespace meadows

#endif
