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

#ifndef MEADOWS_RING_SPEC_HPP
#define MEADOWS_RING_SPEC_HPP

#include <string>

#include "meadows/finite_ring.hpp"

namespace meadows {

/**
  Parses the ring-spec DSL:

    zn:<n>                              Z_n
    poly:p=<prime>,mod=[c0,c1,...,cd]   F_p[x]/(modulus), little-endian, monic
    prod:(<spec>,<spec>,...)            direct product
    ga:base=<spec>,group=[n1,n2,...]    group algebra over a product of cyclics
    quot:<spec>/gens=[e1,...]           quotient by the ideal generated by
                                        the listed carrier indices

  Raises ParseError with the offending position on malformed input and
  CapError when a carrier would exceed the cap.
*/
RingPtr parse_ring_spec(const std::string& spec, std::size_t cap = kDefaultRingCap);

}  // namespace meadows

#endif
