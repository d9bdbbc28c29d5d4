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

#ifndef MEADOWS_JSON_IO_HPP
#define MEADOWS_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "meadows/construct.hpp"
#include "meadows/meadow.hpp"

namespace meadows {

// All emitted objects carry "schema": 1 and use canonical orderings, so a
// fixed invocation is byte-deterministic.

nlohmann::json ideal_to_json(const Ideal& i);
nlohmann::json ideals_to_json(const RingPtr& r, const std::vector<Ideal>& ideals);
nlohmann::json meadow_to_json(const Meadow& m);
nlohmann::json axiom_report_to_json(const AxiomReport& r);
nlohmann::json decomposition_to_json(const Decomposition& d);

/**
  Reads a custom directed lattice:

    {
      "schema": 1,
      "vertices": [ { "ring": "<ring-spec>" }, ... ],
      "edges":    [ { "lower": i, "upper": j, "map": [ ... ] }, ... ]
    }

  Edges must be exactly the covering relation of the order they generate;
  maps send upper-ring indices to lower-ring indices and may be omitted on
  edges into the zero ring. The order must form a bounded lattice.
*/
DirectedLattice directed_lattice_from_json(const nlohmann::json& doc,
                                           std::size_t cap = kDefaultRingCap);

DirectedLattice load_directed_lattice(const std::string& path,
                                      std::size_t cap = kDefaultRingCap);

}  // namespace meadows

#endif
