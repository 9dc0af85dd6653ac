// Copyright 2026 The qid authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "qid/capacity.hpp"
#include "qid/channel.hpp"
#include "qid/classical_id.hpp"
#include "qid/common.hpp"
#include "qid/fingerprint.hpp"
#include "qid/haar.hpp"
#include "qid/linalg.hpp"
#include "qid/matrix.hpp"
#include "qid/net.hpp"
#include "qid/quantum_id.hpp"
#include "qid/report.hpp"
#include "qid/states.hpp"

namespace qid {
inline constexpr const char *kVersion = "0.1.0";
} // namespace qid
