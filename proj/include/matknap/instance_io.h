// Copyright 2026 The Authors.
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

// JSON instance files.
//
//   {
//     "n": 3,
//     "costs": [2, 2, 1],
//     "budget": 3,
//     "matroids": [
//       {"type": "uniform", "rank": 2},
//       {"type": "partition", "block_of": [0, 1, 0], "capacity": [1, 1]},
//       {"type": "graphic", "vertex_count": 3, "edges": [[0, 1], [1, 2], [0, 2]]},
//       {"type": "explicit", "independent_sets": [[], [0], [1]]}
//     ],
//     "oracle": {"type": "coverage", "universe_size": 4,
//                "sets": [[0, 1], [1, 2], [3]], "weights": [1, 1, 1, 1]}
//   }
//
// Other oracle forms: {"type": "modular", "profits": [...]} and
// {"type": "facility_location", "affinity": [[...], ...]}. "weights" is
// optional for coverage. Unknown keys are rejected.

#ifndef MATKNAP_INSTANCE_IO_H_
#define MATKNAP_INSTANCE_IO_H_

#include <string>
#include <string_view>

#include "matknap/instance.h"

namespace matknap {

// Throws ParseError (with byte offset) on malformed JSON and ValidationError
// naming the field on schema or invariant violations.
Instance ParseInstance(std::string_view document);

// Reads and parses a file; unreadable files raise ParseError.
Instance LoadInstance(const std::string& path);

// Canonical form: sorted keys, two-space indentation, shortest round-trip
// number formatting. ParseInstance(SerializeInstance(x)) reproduces x.
std::string SerializeInstance(const Instance& instance);

}  // namespace matknap

#endif  // MATKNAP_INSTANCE_IO_H_
