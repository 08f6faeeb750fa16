// Copyright 2026 The qcomb Authors
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

#include <span>
#include <string_view>

namespace qcomb::detail {

struct EmbeddedTopology {
  std::string_view name;
  std::string_view json;
};

/// Topology data files compiled into the library, in name order.
std::span<const EmbeddedTopology> embedded_topologies();

}  // namespace qcomb::detail
