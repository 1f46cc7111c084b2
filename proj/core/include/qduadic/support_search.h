// Copyright 2026 The qduadic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef QDUADIC_SUPPORT_SEARCH_H
#define QDUADIC_SUPPORT_SEARCH_H

#include <cstdint>
#include <optional>
#include <vector>

#include "qduadic/galois.h"
#include "qduadic/linalg.h"

namespace qduadic {

/// Low-weight codeword search from the check side.
///
/// For w = 1, 2, ... every support of size w is combined with every scalar
/// pattern whose first entry is 1 and tested against the check matrix: a
/// candidate c is a hit when check * c = 0 and (if tag is given) tag * c != 0.
/// A weight is only started when all of its C(n, w) (q-1)^(w-1) candidates fit
/// in the remaining budget, so an exhausted weight is a certificate that no
/// accepted codeword of that weight exists.
struct SupportSearchOutcome {
    std::uint32_t exhausted_through = 0;  // every weight <= this was searched without a hit
    std::optional<std::uint32_t> hit_weight;
    std::vector<Elem> witness;
    std::uint64_t candidates = 0;
    bool budget_exhausted = false;
};

/// Number of candidates at weight w, saturating at UINT64_MAX.
std::uint64_t support_candidates(std::uint32_t n, std::uint64_t q, std::uint32_t w);

SupportSearchOutcome support_search(const Matrix& check, const Matrix* tag, std::uint64_t budget,
                                    std::uint32_t max_weight);

}  // namespace qduadic

#endif  // QDUADIC_SUPPORT_SEARCH_H
