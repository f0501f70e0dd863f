// Copyright 2026 The hcpd Authors
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

#include <cstddef>
#include <functional>

namespace hcpd {

/// Run body(i) for i in [0, count) on a small thread pool. Work is indexed,
/// so results must be written to per-index slots; outputs are then
/// independent of scheduling. The first exception thrown by any body is
/// rethrown on the calling thread. HCPD_THREADS caps the pool.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace hcpd
