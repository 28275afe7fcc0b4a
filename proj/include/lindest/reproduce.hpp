// Copyright 2026 The lindest Authors
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

#ifndef LINDEST_REPRODUCE_HPP
#define LINDEST_REPRODUCE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace lindest {

/// Writes the figure's CSV panel(s) plus a .schema.json sidecar describing
/// the columns. Known ids: fig2, fig3a, fig3b, fig3c, fig4, fig5.
std::vector<std::string> reproduce_figure(const std::string& figure_id,
                                          const std::string& out_dir, std::uint64_t seed,
                                          int threads = 1);

}  // namespace lindest

#endif  // LINDEST_REPRODUCE_HPP
